#include "hda/simplicial_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hda/errors.hpp"

namespace hda {

Monotone identity_map(int n) {
  Monotone m(n + 1);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

Monotone coface_map(int m, int i) {
  Monotone f(m);
  for (int k = 0; k < m; ++k) f[k] = k + (k >= i ? 1 : 0);
  return f;
}

Monotone codegeneracy_map(int m, int j) {
  Monotone f(m + 2);
  for (int k = 0; k < m + 2; ++k) f[k] = k - (k > j ? 1 : 0);
  return f;
}

std::vector<Monotone> surjections(int m, int n) {
  std::vector<Monotone> out;
  if (n < 0 || m < n) return out;
  int r = m - n;
  // repeat sets of size r inside {0..m-1}, lexicographic
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Monotone f(m + 1);
    f[0] = 0;
    std::size_t p = 0;
    for (int k = 1; k <= m; ++k) {
      bool rep = p < pick.size() && pick[p] == k - 1;
      if (rep) ++p;
      f[k] = f[k - 1] + (rep ? 0 : 1);
    }
    out.push_back(std::move(f));
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

std::vector<int> repeat_positions(const Monotone& f) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    if (f[k] == f[k + 1]) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> degeneracy_word(const Monotone& surj) {
  auto r = repeat_positions(surj);
  std::reverse(r.begin(), r.end());
  return r;
}

Monotone surjection_from_word(int dim, std::span<const int> word) {
  std::set<int> reps;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= dim)
      throw InvalidInput("degeneracy index " + std::to_string(word[i]) + " out of range");
    if (i > 0 && word[i] >= word[i - 1])
      throw InvalidInput("degeneracy word must be strictly decreasing");
    reps.insert(word[i]);
  }
  Monotone f(dim + 1);
  f[0] = 0;
  for (int k = 1; k <= dim; ++k) f[k] = f[k - 1] + (reps.count(k - 1) ? 0 : 1);
  return f;
}

Simplex cell_simplex(int dim, int index) { return Simplex{dim, index, identity_map(dim)}; }

// ---------------------------------------------------------------------------

void FiniteSimplicialSet::check_simplex(const Simplex& x) const {
  if (x.base_dim < 0 || x.base_dim >= static_cast<int>(names_.size()) ||
      x.base < 0 || x.base >= count(x.base_dim))
    throw InvalidInput("simplex refers to a missing cell");
  if (x.surj.empty() || x.surj.front() != 0 || x.surj.back() != x.base_dim)
    throw InvalidInput("simplex degeneracy is not a surjection");
  for (std::size_t k = 0; k + 1 < x.surj.size(); ++k) {
    int d = x.surj[k + 1] - x.surj[k];
    if (d != 0 && d != 1) throw InvalidInput("simplex degeneracy is not a surjection");
  }
}

int FiniteSimplicialSet::add_cell(int dim, std::string name, std::vector<Simplex> faces) {
  if (dim < 0) throw InvalidInput("negative cell dimension");
  if (index_.count(name)) throw InvalidInput("duplicate cell name '" + name + "'");
  if (dim == 0 && !faces.empty()) throw InvalidInput("vertex '" + name + "' cannot have faces");
  if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
    throw InvalidInput("cell '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  for (const auto& f : faces) {
    if (f.dim() != dim - 1) throw InvalidInput("face of '" + name + "' has the wrong dimension");
    check_simplex(f);
  }
  if (static_cast<int>(names_.size()) <= dim) {
    names_.resize(dim + 1);
    faces_.resize(dim + 1);
  }
  int idx = static_cast<int>(names_[dim].size());
  index_.emplace(name, std::make_pair(dim, idx));
  names_[dim].push_back(std::move(name));
  faces_[dim].push_back(std::move(faces));
  return idx;
}

int FiniteSimplicialSet::max_dim() const {
  for (int d = static_cast<int>(names_.size()) - 1; d >= 0; --d)
    if (!names_[d].empty()) return d;
  return -1;
}

int FiniteSimplicialSet::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(names_.size())) return 0;
  return static_cast<int>(names_[dim].size());
}

int FiniteSimplicialSet::total_cells() const {
  int t = 0;
  for (const auto& v : names_) t += static_cast<int>(v.size());
  return t;
}

std::vector<int> FiniteSimplicialSet::counts() const {
  std::vector<int> c;
  for (int d = 0; d <= max_dim(); ++d) c.push_back(count(d));
  return c;
}

const std::string& FiniteSimplicialSet::name(int dim, int index) const {
  return names_.at(dim).at(index);
}

const std::vector<Simplex>& FiniteSimplicialSet::faces(int dim, int index) const {
  return faces_.at(dim).at(index);
}

std::optional<Simplex> FiniteSimplicialSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return cell_simplex(it->second.first, it->second.second);
}

Simplex FiniteSimplicialSet::act(const Simplex& x, const Monotone& theta) const {
  Monotone rho(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) rho[k] = x.surj.at(theta[k]);
  Simplex cur{x.base_dim, x.base, {}};
  while (true) {
    std::vector<char> hit(cur.base_dim + 1, 0);
    for (int v : rho) hit[v] = 1;
    int missing = -1;
    for (int v = cur.base_dim; v >= 0; --v)
      if (!hit[v]) { missing = v; break; }
    if (missing < 0) {
      cur.surj = std::move(rho);
      return cur;
    }
    for (int& v : rho)
      if (v > missing) --v;
    const Simplex& f = faces_[cur.base_dim][cur.base][missing];
    for (int& v : rho) v = f.surj[v];
    cur = Simplex{f.base_dim, f.base, {}};
  }
}

Simplex FiniteSimplicialSet::face(const Simplex& x, int i) const {
  return act(x, coface_map(x.dim(), i));
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& x, int j) const {
  return act(x, codegeneracy_map(x.dim(), j));
}

std::vector<Simplex> FiniteSimplicialSet::simplices(int m) const {
  std::vector<Simplex> out;
  if (m < 0) return out;
  for (int k = 0; k <= std::min(m, max_dim()); ++k) {
    auto surjs = surjections(m, k);
    for (int c = 0; c < count(k); ++c)
      for (const auto& s : surjs) out.push_back(Simplex{k, c, s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteSimplicialSet::vertices(const Simplex& x) const {
  std::vector<int> out;
  for (int k = 0; k <= x.dim(); ++k) out.push_back(act(x, Monotone{k}).base);
  return out;
}

std::string FiniteSimplicialSet::simplex_name(const Simplex& x) const {
  const std::string& n = name(x.base_dim, x.base);
  if (!x.degenerate()) return n;
  std::string s;
  for (int j : degeneracy_word(x.surj)) s += "s" + std::to_string(j);
  return s + "(" + n + ")";
}

std::vector<std::string> FiniteSimplicialSet::check_identities() const {
  std::vector<std::string> bad;
  for (int n = 2; n <= max_dim(); ++n)
    for (int c = 0; c < count(n); ++c) {
      Simplex x = cell_simplex(n, c);
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          Simplex a = face(face(x, j), i);
          Simplex b = face(face(x, i), j - 1);
          if (a != b) {
            std::ostringstream os;
            os << "d" << i << " d" << j << " != d" << j - 1 << " d" << i << " on '" << name(n, c)
               << "': " << simplex_name(a) << " vs " << simplex_name(b);
            bad.push_back(os.str());
          }
        }
    }
  return bad;
}

// ---------------------------------------------------------------------------

Simplex SimplicialMap::apply(const FiniteSimplicialSet& target, const Simplex& x) const {
  return target.act(image.at(x.base_dim).at(x.base), x.surj);
}

std::vector<std::string> check_simplicial_map(const FiniteSimplicialSet& source,
                                              const FiniteSimplicialSet& target,
                                              const SimplicialMap& f) {
  std::vector<std::string> bad;
  for (int n = 0; n <= source.max_dim(); ++n) {
    if (n >= static_cast<int>(f.image.size()) ||
        static_cast<int>(f.image[n].size()) != source.count(n)) {
      bad.push_back("map has no image for some " + std::to_string(n) + "-cells");
      return bad;
    }
    for (int c = 0; c < source.count(n); ++c) {
      const Simplex& y = f.image[n][c];
      if (y.dim() != n || y.base_dim > target.max_dim() || y.base < 0 ||
          y.base >= target.count(y.base_dim)) {
        bad.push_back("image of '" + source.name(n, c) + "' is not an " + std::to_string(n) +
                      "-simplex of the target");
        continue;
      }
    }
  }
  if (!bad.empty()) return bad;
  for (int n = 1; n <= source.max_dim(); ++n)
    for (int c = 0; c < source.count(n); ++c)
      for (int i = 0; i <= n; ++i) {
        Simplex lhs = target.face(f.image[n][c], i);
        Simplex rhs = f.apply(target, source.faces(n, c)[i]);
        if (lhs != rhs)
          bad.push_back("face " + std::to_string(i) + " of '" + source.name(n, c) +
                        "' is not preserved");
      }
  return bad;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f,
                      const FiniteSimplicialSet& target) {
  SimplicialMap out;
  out.image.resize(f.image.size());
  for (std::size_t n = 0; n < f.image.size(); ++n)
    for (const auto& y : f.image[n]) out.image[n].push_back(g.apply(target, y));
  return out;
}

SimplicialMap identity_map(const FiniteSimplicialSet& a) {
  SimplicialMap out;
  out.image.resize(std::max(a.max_dim() + 1, 0));
  for (int n = 0; n <= a.max_dim(); ++n)
    for (int c = 0; c < a.count(n); ++c) out.image[n].push_back(cell_simplex(n, c));
  return out;
}

bool is_injective(const FiniteSimplicialSet& source, const SimplicialMap& f) {
  for (int n = 0; n <= source.max_dim(); ++n) {
    std::set<int> seen;
    for (int c = 0; c < source.count(n); ++c) {
      const Simplex& y = f.image.at(n).at(c);
      if (y.degenerate() || !seen.insert(y.base).second) return false;
    }
  }
  return true;
}

bool is_isomorphism(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                    const SimplicialMap& f) {
  if (source.counts() != target.counts()) return false;
  return check_simplicial_map(source, target, f).empty() && is_injective(source, f);
}

namespace {

// Backtracking over the cells of `a` in dimension order. `candidates` supplies the
// admissible images; faces must agree with images already chosen.
struct MapSearch {
  MapSearch(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b, bool inj,
            std::function<bool(const SimplicialMap&)> emit, const CellConstraints* fixed = nullptr)
      : a(a), b(b), injective_nondegenerate(inj), emit(std::move(emit)), fixed(fixed) {}

  const FiniteSimplicialSet& a;
  const FiniteSimplicialSet& b;
  bool injective_nondegenerate;
  std::function<bool(const SimplicialMap&)> emit;
  const CellConstraints* fixed;
  std::vector<std::pair<int, int>> order;
  SimplicialMap cur;
  std::vector<std::vector<Simplex>> pools;
  std::vector<std::set<int>> used;

  bool run() {
    for (int n = 0; n <= a.max_dim(); ++n)
      for (int c = 0; c < a.count(n); ++c) order.emplace_back(n, c);
    cur.image.resize(std::max(a.max_dim() + 1, 0));
    for (int n = 0; n <= a.max_dim(); ++n) cur.image[n].resize(a.count(n));
    pools.resize(std::max(a.max_dim() + 1, 0));
    used.resize(pools.size());
    for (int n = 0; n <= a.max_dim(); ++n) {
      if (injective_nondegenerate) {
        for (int c = 0; c < b.count(n); ++c) pools[n].push_back(cell_simplex(n, c));
      } else {
        pools[n] = b.simplices(n);
      }
    }
    return step(0);
  }

  bool step(std::size_t k) {
    if (k == order.size()) return emit(cur);
    auto [n, c] = order[k];
    std::vector<Simplex> want;
    for (int i = 0; n > 0 && i <= n; ++i) want.push_back(cur.apply(b, a.faces(n, c)[i]));
    const std::optional<Simplex>* pin = nullptr;
    if (fixed && n < static_cast<int>(fixed->size()) && c < static_cast<int>((*fixed)[n].size()) &&
        (*fixed)[n][c])
      pin = &(*fixed)[n][c];
    std::vector<Simplex> single;
    if (pin) single.push_back(**pin);
    for (const auto& y : pin ? single : pools[n]) {
      if (y.dim() != n) continue;
      if (injective_nondegenerate && (y.degenerate() || used[n].count(y.base))) continue;
      bool ok = true;
      for (int i = 0; ok && n > 0 && i <= n; ++i) ok = b.face(y, i) == want[i];
      if (!ok) continue;
      cur.image[n][c] = y;
      if (injective_nondegenerate) used[n].insert(y.base);
      bool stop = step(k + 1);
      if (injective_nondegenerate) used[n].erase(y.base);
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<SimplicialMap> find_isomorphism(const FiniteSimplicialSet& a,
                                              const FiniteSimplicialSet& b) {
  if (a.counts() != b.counts()) return std::nullopt;
  std::optional<SimplicialMap> found;
  MapSearch s(a, b, true, [&](const SimplicialMap& m) {
    found = m;
    return true;
  });
  s.run();
  return found;
}

bool search_maps(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                 const CellConstraints* fixed,
                 const std::function<bool(const SimplicialMap&)>& emit) {
  MapSearch s(a, b, false, emit, fixed);
  return s.run();
}

std::vector<SimplicialMap> enumerate_maps(const FiniteSimplicialSet& a,
                                          const FiniteSimplicialSet& b, long long budget) {
  std::vector<SimplicialMap> out;
  Budget spent(budget, "simplicial map enumeration");
  MapSearch s(a, b, false, [&](const SimplicialMap& m) {
    spent.spend();
    out.push_back(m);
    return false;
  });
  s.run();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string subset_name(const std::vector<int>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

FiniteSimplicialSet simplex_skeleton(int n, int top) {
  FiniteSimplicialSet out;
  std::map<std::vector<int>, int> idx;
  for (int d = 0; d <= top; ++d) {
    // subsets of size d+1 in lexicographic order
    std::vector<int> s(d + 1);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
      std::vector<Simplex> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          auto t = s;
          t.erase(t.begin() + i);
          faces.push_back(cell_simplex(d - 1, idx.at(t)));
        }
      idx[s] = out.add_cell(d, subset_name(s), std::move(faces));
      int i = d;
      while (i >= 0 && s[i] == n - d + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int k = i + 1; k <= d; ++k) s[k] = s[k - 1] + 1;
    }
  }
  return out;
}

}  // namespace

FiniteSimplicialSet standard_simplex(int n) {
  if (n < 0) throw InvalidInput("negative simplex dimension");
  return simplex_skeleton(n, n);
}

FiniteSimplicialSet boundary_simplex(int n) {
  if (n < 0) throw InvalidInput("negative simplex dimension");
  return simplex_skeleton(n, n - 1);
}

FiniteSimplicialSet discrete_set(int n) {
  FiniteSimplicialSet out;
  for (int i = 0; i < n; ++i) out.add_cell(0, "p" + std::to_string(i));
  return out;
}

Simplex delta_simplex(const FiniteSimplicialSet& delta_n, std::span<const int> vertices) {
  if (vertices.empty()) throw InvalidInput("empty vertex sequence");
  std::vector<int> distinct;
  Monotone surj;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k > 0 && vertices[k] < vertices[k - 1]) throw InvalidInput("vertex sequence must be monotone");
    if (distinct.empty() || distinct.back() != vertices[k]) distinct.push_back(vertices[k]);
    surj.push_back(static_cast<int>(distinct.size()) - 1);
  }
  auto cell = delta_n.find(subset_name(distinct));
  if (!cell) throw InvalidInput("no simplex " + subset_name(distinct));
  return Simplex{cell->base_dim, cell->base, surj};
}

FiniteSimplicialSet disjoint_union(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                                   const std::string& prefix_a, const std::string& prefix_b) {
  FiniteSimplicialSet out;
  int top = std::max(a.max_dim(), b.max_dim());
  for (int d = 0; d <= top; ++d) {
    for (int c = 0; c < a.count(d); ++c) out.add_cell(d, prefix_a + a.name(d, c), a.faces(d, c));
    for (int c = 0; c < b.count(d); ++c) {
      auto faces = b.faces(d, c);
      for (auto& f : faces) f.base += a.count(f.base_dim);
      out.add_cell(d, prefix_b + b.name(d, c), std::move(faces));
    }
  }
  return out;
}

Cone cone(const FiniteSimplicialSet& a, const std::string& apex) {
  Cone out;
  auto& s = out.set;
  // cone cell of an (n-1)-cell c lives at index count_a(n) + c in dimension n
  auto cone_of = [&](const Simplex& x) {
    Monotone surj = x.surj;
    surj.push_back(x.base_dim + 1);
    return Simplex{x.base_dim + 1, a.count(x.base_dim + 1) + x.base, surj};
  };
  int top = a.max_dim() + 1;
  for (int d = 0; d <= top; ++d) {
    for (int c = 0; c < a.count(d); ++c) s.add_cell(d, a.name(d, c), a.faces(d, c));
    if (d == 0) {
      s.add_cell(0, apex);
      continue;
    }
    for (int c = 0; c < a.count(d - 1); ++c) {
      std::vector<Simplex> faces;
      if (d == 1) {
        faces = {Simplex{0, a.count(0), {0}}, cell_simplex(0, c)};
      } else {
        for (int i = 0; i < d; ++i) faces.push_back(cone_of(a.faces(d - 1, c)[i]));
        faces.push_back(cell_simplex(d - 1, c));
      }
      s.add_cell(d, "cone(" + a.name(d - 1, c) + ")", std::move(faces));
    }
  }
  out.base_inclusion = identity_map(a);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Odometer step over a cartesian product of pools; false once exhausted.
bool advance(std::vector<std::size_t>& pick, const std::vector<std::vector<Simplex>>& pools) {
  for (std::size_t k = pick.size(); k-- > 0;) {
    if (++pick[k] < pools[k].size()) return true;
    pick[k] = 0;
  }
  return false;
}

}  // namespace

ProductSet::ProductSet(std::vector<FiniteSimplicialSet> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidInput("product needs at least one factor");
  int top = 0;
  for (const auto& f : factors_) {
    if (f.empty()) return;
    top += f.max_dim();
  }
  components_.resize(top + 1);
  for (int m = 0; m <= top; ++m) {
    std::vector<std::vector<Simplex>> pools;
    for (const auto& f : factors_) pools.push_back(f.simplices(m));
    std::vector<std::size_t> pick(pools.size(), 0);
    while (true) {
      std::vector<Simplex> tuple;
      std::vector<int> common;
      for (std::size_t k = 0; k < pools.size(); ++k) {
        tuple.push_back(pools[k][pick[k]]);
        auto r = repeat_positions(tuple.back().surj);
        if (k == 0) {
          common = r;
        } else {
          std::vector<int> keep;
          std::set_intersection(common.begin(), common.end(), r.begin(), r.end(),
                                std::back_inserter(keep));
          common = keep;
        }
      }
      if (common.empty()) {
        std::vector<Simplex> faces;
        for (int i = 0; m > 0 && i <= m; ++i) {
          std::vector<Simplex> ft;
          for (std::size_t k = 0; k < tuple.size(); ++k) ft.push_back(factors_[k].face(tuple[k], i));
          faces.push_back(locate(ft));
        }
        std::string name = "(";
        for (std::size_t k = 0; k < tuple.size(); ++k)
          name += (k ? "," : "") + factors_[k].simplex_name(tuple[k]);
        name += ")";
        int idx = set_.add_cell(m, name, std::move(faces));
        lookup_.emplace(tuple, idx);
        components_[m].push_back(std::move(tuple));
      }
      if (!advance(pick, pools)) break;
    }
  }
}

const std::vector<Simplex>& ProductSet::components(int dim, int index) const {
  return components_.at(dim).at(index);
}

Simplex ProductSet::locate(std::span<const Simplex> comps) const {
  if (comps.size() != factors_.size()) throw InvalidInput("tuple arity does not match product");
  int m = comps[0].dim();
  std::vector<int> common = repeat_positions(comps[0].surj);
  for (std::size_t k = 1; k < comps.size(); ++k) {
    if (comps[k].dim() != m) throw InvalidInput("tuple components differ in dimension");
    auto r = repeat_positions(comps[k].surj);
    std::vector<int> keep;
    std::set_intersection(common.begin(), common.end(), r.begin(), r.end(),
                          std::back_inserter(keep));
    common = keep;
  }
  std::vector<char> drop(m + 1, 0);
  for (int j : common) drop[j + 1] = 1;
  std::vector<Simplex> stripped;
  for (const auto& c : comps) {
    Simplex s{c.base_dim, c.base, {}};
    for (int k = 0; k <= m; ++k)
      if (!drop[k]) s.surj.push_back(c.surj[k]);
    stripped.push_back(std::move(s));
  }
  auto it = lookup_.find(stripped);
  if (it == lookup_.end()) throw InvalidInput("tuple is not a simplex of the product");
  Monotone sigma(m + 1);
  int removed = 0;
  for (int k = 0; k <= m; ++k) {
    if (drop[k]) ++removed;
    sigma[k] = k - removed;
  }
  return Simplex{m - static_cast<int>(common.size()), it->second, sigma};
}

std::vector<Simplex> ProductSet::split(const Simplex& x) const {
  std::vector<Simplex> out;
  const auto& comps = components(x.base_dim, x.base);
  for (std::size_t k = 0; k < comps.size(); ++k) out.push_back(factors_[k].act(comps[k], x.surj));
  return out;
}

SimplicialMap ProductSet::projection(std::size_t k) const {
  SimplicialMap out;
  out.image.resize(components_.size());
  for (std::size_t m = 0; m < components_.size(); ++m)
    for (const auto& t : components_[m]) out.image[m].push_back(t[k]);
  return out;
}

ProductSet product(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  return ProductSet({a, b});
}

// ---------------------------------------------------------------------------

int QuotientBuilder::add(int degree, std::string name, int lower, int j) {
  int id = static_cast<int>(degree_.size());
  degree_.push_back(degree);
  name_.push_back(std::move(name));
  lower_.push_back(lower);
  witness_j_.push_back(j);
  faces_.emplace_back();
  degens_.emplace_back();
  parent_.push_back(id);
  return id;
}

void QuotientBuilder::set_faces(int e, std::vector<int> faces) { faces_.at(e) = std::move(faces); }

void QuotientBuilder::set_degeneracies(int e, std::vector<int> degens) {
  degens_.at(e) = std::move(degens);
}

int QuotientBuilder::find(int e) {
  while (parent_[e] != e) {
    parent_[e] = parent_[parent_[e]];
    e = parent_[e];
  }
  return e;
}

void QuotientBuilder::unite(int a, int b) {
  if (degree_.at(a) != degree_.at(b))
    throw InvalidInput("cannot identify '" + name_[a] + "' and '" + name_[b] +
                       "' of different dimensions");
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) parent_[b] = a;
  else parent_[a] = b;
}

QuotientBuilder::Result QuotientBuilder::build() {
  const int n = static_cast<int>(degree_.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < n; ++e) {
      int r = find(e);
      if (r == e) continue;
      auto link = [&](const std::vector<int>& x, const std::vector<int>& y) {
        for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
          if (x[i] < 0 || y[i] < 0) continue;
          if (find(x[i]) != find(y[i])) {
            unite(x[i], y[i]);
            changed = true;
          }
        }
      };
      link(faces_[e], faces_[r]);
      link(degens_[e], degens_[r]);
    }
  }

  Result out;
  out.normal_form.assign(n, Simplex{});
  int top = -1;
  for (int d : degree_) top = std::max(top, d);
  std::vector<std::vector<int>> by_degree(top + 1);
  for (int e = 0; e < n; ++e) by_degree[degree_[e]].push_back(e);
  std::vector<int> degenerate_member(n, -1);
  for (int e = 0; e < n; ++e)
    if (lower_[e] >= 0) {
      int r = find(e);
      if (degenerate_member[r] < 0 || e < degenerate_member[r]) degenerate_member[r] = e;
    }
  std::vector<char> done(n, 0);
  for (int d = 0; d <= top; ++d) {
    for (int e : by_degree[d]) {
      int r = find(e);
      if (r != e || degenerate_member[r] >= 0) continue;
      std::vector<Simplex> faces;
      for (int f : faces_[r]) faces.push_back(out.normal_form[find(f)]);
      int idx = out.set.add_cell(d, name_[r], std::move(faces));
      out.normal_form[r] = cell_simplex(d, idx);
      if (static_cast<int>(out.representative.size()) <= d) out.representative.resize(d + 1);
      out.representative[d].push_back(r);
      done[r] = 1;
    }
    for (int e : by_degree[d]) {
      int r = find(e);
      if (r != e || done[r]) continue;
      int w = degenerate_member[r];
      out.normal_form[r] = out.set.degeneracy(out.normal_form[find(lower_[w])], witness_j_[w]);
      done[r] = 1;
    }
    for (int e : by_degree[d]) out.normal_form[e] = out.normal_form[find(e)];
  }
  return out;
}

Quotient quotient(const FiniteSimplicialSet& a,
                  const std::vector<std::pair<Simplex, Simplex>>& pairs) {
  QuotientBuilder qb;
  int top = a.max_dim();
  std::vector<std::map<Simplex, int>> ids(std::max(top + 1, 0));
  std::vector<std::vector<Simplex>> all(ids.size());
  for (int d = 0; d <= top; ++d) {
    // nondegenerate cells first so that class representatives keep cell names
    for (int c = 0; c < a.count(d); ++c) all[d].push_back(cell_simplex(d, c));
    for (const auto& x : a.simplices(d))
      if (x.degenerate()) all[d].push_back(x);
    for (const auto& x : all[d]) {
      int lower = -1, j = -1;
      if (x.degenerate()) {
        j = repeat_positions(x.surj).back();
        lower = ids[d - 1].at(a.face(x, j + 1));
      }
      ids[d][x] = qb.add(d, a.simplex_name(x), lower, j);
    }
  }
  for (int d = 0; d <= top; ++d)
    for (const auto& x : all[d]) {
      int e = ids[d].at(x);
      std::vector<int> faces, degens;
      for (int i = 0; d > 0 && i <= d; ++i) faces.push_back(ids[d - 1].at(a.face(x, i)));
      for (int j = 0; d < top && j <= d; ++j) degens.push_back(ids[d + 1].at(a.degeneracy(x, j)));
      qb.set_faces(e, std::move(faces));
      qb.set_degeneracies(e, std::move(degens));
    }
  for (const auto& [x, y] : pairs) {
    if (x.dim() != y.dim())
      throw InvalidInput("quotient relation identifies simplices of different dimensions");
    qb.unite(ids.at(x.dim()).at(x), ids.at(y.dim()).at(y));
  }
  auto res = qb.build();
  Quotient out{std::move(res.set), {}};
  out.projection.image.resize(std::max(top + 1, 0));
  for (int d = 0; d <= top; ++d)
    for (int c = 0; c < a.count(d); ++c)
      out.projection.image[d].push_back(res.normal_form[ids[d].at(cell_simplex(d, c))]);
  return out;
}

Quotient quotient_by_name(const FiniteSimplicialSet& a,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<Simplex, Simplex>> sp;
  for (const auto& [x, y] : pairs) {
    auto sx = a.find(x), sy = a.find(y);
    if (!sx || !sy) throw InvalidInput("quotient names unknown cell '" + (sx ? y : x) + "'");
    sp.emplace_back(*sx, *sy);
  }
  return quotient(a, sp);
}

std::vector<std::vector<int>> connected_components(const FiniteSimplicialSet& a) {
  int n = a.count(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int c = 0; c < a.count(1); ++c) {
    int u = find(a.faces(1, c)[0].base), v = find(a.faces(1, c)[1].base);
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  return out;
}

FiniteSimplicialSet renamed(const FiniteSimplicialSet& a,
                            const std::function<std::string(const std::string&)>& rename) {
  FiniteSimplicialSet out;
  for (int d = 0; d <= a.max_dim(); ++d)
    for (int c = 0; c < a.count(d); ++c) out.add_cell(d, rename(a.name(d, c)), a.faces(d, c));
  return out;
}

}  // namespace hda
