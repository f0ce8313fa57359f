#include "hda/semicat.hpp"

#include <algorithm>
#include <set>

#include "hda/errors.hpp"
#include "repeats.hpp"

namespace hda {

std::optional<int> SemicategoryView::find_object(const std::string& name) const {
  for (int o = 0; o < object_count(); ++o)
    if (object_name(o) == name) return o;
  return std::nullopt;
}

using detail::collapse_map;
using detail::common_repeats;
using detail::strip;

std::vector<std::string> check_associativity(const SemicategoryView& k, int degenerate_up_to) {
  std::vector<std::string> bad;
  const int n = k.object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!k.less(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!k.less(b, c)) continue;
        for (int d = 0; d < n; ++d) {
          if (!k.less(c, d)) continue;
          const auto &hab = k.hom(a, b), &hbc = k.hom(b, c), &hcd = k.hom(c, d);
          int top = std::max({hab.max_dim(), hbc.max_dim(), hcd.max_dim()});
          for (int m = 0; m <= top; ++m) {
            std::vector<Simplex> xs, ys, zs;
            if (m <= degenerate_up_to) {
              xs = hab.simplices(m), ys = hbc.simplices(m), zs = hcd.simplices(m);
            } else {
              for (int i = 0; i < hab.count(m); ++i) xs.push_back(cell_simplex(m, i));
              for (int i = 0; i < hbc.count(m); ++i) ys.push_back(cell_simplex(m, i));
              for (int i = 0; i < hcd.count(m); ++i) zs.push_back(cell_simplex(m, i));
            }
            for (const auto& x : xs)
              for (const auto& y : ys) {
                Simplex xy = k.compose(a, b, c, x, y);
                for (const auto& z : zs) {
                  Simplex l = k.compose(a, c, d, xy, z);
                  Simplex r = k.compose(a, b, d, x, k.compose(b, c, d, y, z));
                  if (l != r)
                    bad.push_back("associativity fails on " + hab.simplex_name(x) + ", " +
                                  hbc.simplex_name(y) + ", " + hcd.simplex_name(z));
                }
              }
          }
        }
      }
    }
  return bad;
}

// ---------------------------------------------------------------------------

void Semicategory::invalidate() { cache_ = std::make_shared<Cache>(); }

int Semicategory::add_object(std::string name) {
  for (const auto& o : objects_)
    if (o == name) throw InvalidInput("duplicate object '" + name + "'");
  objects_.push_back(std::move(name));
  for (auto& row : less_) row.push_back(false);
  less_.emplace_back(objects_.size(), false);
  invalidate();
  return object_count() - 1;
}

void Semicategory::add_order(int a, int b) {
  if (a < 0 || b < 0 || a >= object_count() || b >= object_count())
    throw InvalidInput("order refers to an unknown object");
  if (a == b || less_[b][a])
    throw InvalidInput("order " + objects_[a] + " < " + objects_[b] + " creates a loop");
  if (less_[a][b]) return;
  const int n = object_count();
  for (int x = 0; x < n; ++x) {
    if (x != a && !less_[x][a]) continue;
    for (int y = 0; y < n; ++y)
      if (y == b || less_[b][y]) less_[x][y] = true;
  }
  invalidate();
}

int Semicategory::add_generator(std::string name, int source, int target, FiniteSimplicialSet cells) {
  if (find_generator(name)) throw InvalidInput("duplicate generator '" + name + "'");
  add_order(source, target);
  if (!cells.check_identities().empty())
    throw InvalidInput("cells of generator '" + name + "' violate the simplicial identities");
  generators_.push_back({std::move(name), source, target, std::move(cells)});
  invalidate();
  return static_cast<int>(generators_.size()) - 1;
}

std::optional<int> Semicategory::find_generator(const std::string& name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g].name == name) return static_cast<int>(g);
  return std::nullopt;
}

int Semicategory::chain_source(const ChainSimplex& c) const {
  if (c.gens.empty()) throw InvalidInput("empty chain");
  return generators_.at(c.gens.front()).source;
}

int Semicategory::chain_target(const ChainSimplex& c) const {
  if (c.gens.empty()) throw InvalidInput("empty chain");
  return generators_.at(c.gens.back()).target;
}

void Semicategory::add_relation(ChainSimplex lhs, ChainSimplex rhs) {
  auto check = [&](const ChainSimplex& c) {
    if (c.gens.empty() || c.gens.size() != c.comps.size()) throw InvalidInput("malformed relation chain");
    for (std::size_t i = 0; i < c.gens.size(); ++i) {
      if (c.gens[i] < 0 || c.gens[i] >= static_cast<int>(generators_.size()))
        throw InvalidInput("relation refers to an unknown generator");
      const auto& g = generators_[c.gens[i]];
      if (i > 0 && generators_[c.gens[i - 1]].target != g.source)
        throw InvalidInput("relation chain is not composable");
      const Simplex& x = c.comps[i];
      if (x.dim() != c.dim() || x.base_dim > g.cells.max_dim() || x.base < 0 ||
          x.base >= g.cells.count(x.base_dim) || x.surj.back() != x.base_dim)
        throw InvalidInput("relation component is not a simplex of '" + g.name + "'");
    }
  };
  check(lhs);
  check(rhs);
  if (lhs.dim() != rhs.dim()) throw InvalidInput("relation identifies simplices of different dimensions");
  if (chain_source(lhs) != chain_source(rhs) || chain_target(lhs) != chain_target(rhs))
    throw InvalidInput("relation chains have different endpoints");
  relations_.push_back({std::move(lhs), std::move(rhs)});
  invalidate();
}

std::vector<std::pair<int, int>> Semicategory::order_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < object_count(); ++a)
    for (int b = 0; b < object_count(); ++b)
      if (less_[a][b]) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<int>> Semicategory::generator_chains(int a, int b) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int o) -> void {
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const auto& gen = generators_[g];
      if (gen.source != o || gen.cells.empty()) continue;
      cur.push_back(static_cast<int>(g));
      if (gen.target == b) out.push_back(cur);
      else if (less_[gen.target][b]) self(self, gen.target);
      cur.pop_back();
    }
  };
  if (less_.at(a).at(b)) dfs(dfs, a);
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const DerivedHom> Semicategory::build_hom(int a, int b) const {
  auto h = std::make_shared<DerivedHom>();
  h->chains = generator_chains(a, b);
  if (h->chains.empty()) return h;
  int top = 0;
  for (std::size_t c = 0; c < h->chains.size(); ++c) {
    std::vector<FiniteSimplicialSet> factors;
    for (int g : h->chains[c]) factors.push_back(generators_[g].cells);
    h->products.emplace_back(std::move(factors));
    h->chain_index[h->chains[c]] = static_cast<int>(c);
    top = std::max(top, h->products.back().set().max_dim());
  }
  h->degree_bound = top;

  QuotientBuilder qb;
  std::vector<std::map<Simplex, int>> ids(h->chains.size());
  std::vector<std::vector<Simplex>> elems(h->chains.size());
  std::vector<std::pair<int, int>> cell_of;  // element -> (chain, product cell) for nondegenerate ones
  for (std::size_t c = 0; c < h->chains.size(); ++c) {
    const auto& ps = h->products[c];
    const auto& set = ps.set();
    for (int m = 0; m <= top; ++m) {
      for (int i = 0; i < set.count(m); ++i) elems[c].push_back(cell_simplex(m, i));
      for (const auto& x : set.simplices(m))
        if (x.degenerate()) elems[c].push_back(x);
    }
    for (const auto& x : elems[c]) {
      int lower = -1, j = -1;
      std::string name;
      if (x.degenerate()) {
        j = repeat_positions(x.surj).back();
        lower = ids[c].at(set.face(x, j + 1));
        name = set.simplex_name(x);
      } else {
        const auto& comps = ps.components(x.dim(), x.base);
        for (std::size_t k = 0; k < comps.size(); ++k) {
          const auto& gen = generators_[h->chains[c][k]];
          name += (k ? "*" : "") + gen.name + "[" + gen.cells.simplex_name(comps[k]) + "]";
        }
      }
      ids[c][x] = qb.add(x.dim(), name, lower, j);
      cell_of.emplace_back(static_cast<int>(c), x.degenerate() ? -1 : x.base);
    }
  }
  for (std::size_t c = 0; c < h->chains.size(); ++c) {
    const auto& set = h->products[c].set();
    for (const auto& x : elems[c]) {
      int d = x.dim();
      std::vector<int> faces, degens;
      for (int i = 0; d > 0 && i <= d; ++i) faces.push_back(ids[c].at(set.face(x, i)));
      for (int j = 0; d < top && j <= d; ++j) degens.push_back(ids[c].at(set.degeneracy(x, j)));
      int e = ids[c].at(x);
      qb.set_faces(e, std::move(faces));
      qb.set_degeneracies(e, std::move(degens));
    }
  }

  // relations in every context prefix * (relation) * suffix
  for (const auto& rel : relations_) {
    int alpha = chain_source(rel.lhs), beta = chain_target(rel.lhs);
    int d = rel.lhs.dim();
    std::vector<std::vector<int>> prefixes, suffixes;
    if (alpha == a) prefixes.push_back({});
    else if (less_[a][alpha]) prefixes = generator_chains(a, alpha);
    if (beta == b) suffixes.push_back({});
    else if (less_[beta][b]) suffixes = generator_chains(beta, b);
    if (prefixes.empty() || suffixes.empty()) continue;
    auto context_tuples = [&](const std::vector<int>& chain, int m) {
      std::vector<std::vector<Simplex>> out;
      if (chain.empty()) {
        out.push_back({});
        return out;
      }
      std::vector<FiniteSimplicialSet> factors;
      for (int g : chain) factors.push_back(generators_[g].cells);
      ProductSet ps(std::move(factors));
      for (const auto& x : ps.set().simplices(m)) out.push_back(ps.split(x));
      return out;
    };
    for (const auto& p : prefixes)
      for (const auto& s : suffixes) {
        auto join = [&](const std::vector<int>& mid) {
          std::vector<int> ch = p;
          ch.insert(ch.end(), mid.begin(), mid.end());
          ch.insert(ch.end(), s.begin(), s.end());
          return ch;
        };
        int lc = h->chain_index.at(join(rel.lhs.gens));
        int rc = h->chain_index.at(join(rel.rhs.gens));
        for (int m = d; m <= top; ++m) {
          auto pre = context_tuples(p, m), suf = context_tuples(s, m);
          for (const auto& sigma : surjections(m, d)) {
            std::vector<Simplex> lmid, rmid;
            for (std::size_t i = 0; i < rel.lhs.gens.size(); ++i)
              lmid.push_back(generators_[rel.lhs.gens[i]].cells.act(rel.lhs.comps[i], sigma));
            for (std::size_t i = 0; i < rel.rhs.gens.size(); ++i)
              rmid.push_back(generators_[rel.rhs.gens[i]].cells.act(rel.rhs.comps[i], sigma));
            for (const auto& x : pre)
              for (const auto& y : suf) {
                auto full = [&](const std::vector<Simplex>& mid) {
                  std::vector<Simplex> t = x;
                  t.insert(t.end(), mid.begin(), mid.end());
                  t.insert(t.end(), y.begin(), y.end());
                  return t;
                };
                auto lt = full(lmid), rt = full(rmid);
                Simplex ls = h->products[lc].locate(lt), rs = h->products[rc].locate(rt);
                Simplex lfull = h->products[lc].set().act(ls, identity_map(m));
                Simplex rfull = h->products[rc].set().act(rs, identity_map(m));
                qb.unite(ids[lc].at(lfull), ids[rc].at(rfull));
              }
          }
        }
      }
  }

  auto res = qb.build();
  h->set = std::move(res.set);
  h->cell_image.resize(h->chains.size());
  for (std::size_t c = 0; c < h->chains.size(); ++c) {
    const auto& set = h->products[c].set();
    h->cell_image[c].resize(std::max(set.max_dim() + 1, 0));
    for (int m = 0; m <= set.max_dim(); ++m)
      for (int i = 0; i < set.count(m); ++i)
        h->cell_image[c][m].push_back(res.normal_form[ids[c].at(cell_simplex(m, i))]);
  }
  h->representative.resize(res.representative.size());
  for (std::size_t m = 0; m < res.representative.size(); ++m)
    for (int e : res.representative[m]) h->representative[m].push_back(cell_of[e]);
  return h;
}

const DerivedHom& Semicategory::derived(int a, int b) const {
  auto cache = cache_;
  std::pair<int, int> key{a, b};
  {
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto it = cache->homs.find(key);
    if (it != cache->homs.end()) return *it->second;
  }
  auto built = build_hom(a, b);
  std::lock_guard<std::mutex> lock(cache->mutex);
  auto [it, inserted] = cache->homs.emplace(key, std::move(built));
  return *it->second;
}

const FiniteSimplicialSet& Semicategory::hom(int a, int b) const { return derived(a, b).set; }

Simplex Semicategory::evaluate(const ChainSimplex& chain) const {
  int a = chain_source(chain), b = chain_target(chain);
  const auto& h = derived(a, b);
  auto it = h.chain_index.find(chain.gens);
  if (it == h.chain_index.end()) throw InvalidInput("chain is not composable");
  int c = it->second;
  Simplex s = h.products[c].locate(chain.comps);
  return h.set.act(h.cell_image[c][s.base_dim][s.base], s.surj);
}

ChainSimplex Semicategory::representative(int a, int b, const Simplex& x) const {
  const auto& h = derived(a, b);
  auto [c, idx] = h.representative.at(x.base_dim).at(x.base);
  const auto& ps = h.products[c];
  Simplex s = ps.set().act(cell_simplex(x.base_dim, idx), x.surj);
  return ChainSimplex{h.chains[c], ps.split(s)};
}

Simplex Semicategory::compose(int a, int b, int c, const Simplex& x, const Simplex& y) const {
  if (x.dim() != y.dim()) throw InvalidInput("composing simplices of different dimensions");
  auto common = common_repeats(x.surj, y.surj);
  Simplex xs{x.base_dim, x.base, strip(x.surj, common)};
  Simplex ys{y.base_dim, y.base, strip(y.surj, common)};
  ChainSimplex rx = representative(a, b, xs), ry = representative(b, c, ys);
  rx.gens.insert(rx.gens.end(), ry.gens.begin(), ry.gens.end());
  rx.comps.insert(rx.comps.end(), ry.comps.begin(), ry.comps.end());
  Simplex z = evaluate(rx);
  if (common.empty()) return z;
  return hom(a, c).act(z, collapse_map(x.dim(), common));
}

std::vector<std::string> Semicategory::validate() const {
  std::vector<std::string> bad;
  for (int a = 0; a < object_count(); ++a)
    if (less_[a][a]) bad.push_back("object '" + objects_[a] + "' lies below itself");
  for (const auto& g : generators_) {
    if (!less_[g.source][g.target])
      bad.push_back("generator '" + g.name + "' does not run upward");
    for (const auto& v : g.cells.check_identities()) bad.push_back("generator '" + g.name + "': " + v);
  }
  for (const auto& v : check_associativity(*this)) bad.push_back(v);
  return bad;
}

// ---------------------------------------------------------------------------

ExplicitSemicategory::ExplicitSemicategory(std::vector<std::string> objects,
                                           std::vector<std::vector<bool>> less,
                                           std::map<std::pair<int, int>, FiniteSimplicialSet> homs,
                                           Composer compose)
    : objects_(std::move(objects)), less_(std::move(less)), homs_(std::move(homs)),
      compose_(std::move(compose)) {}

const FiniteSimplicialSet& ExplicitSemicategory::hom(int a, int b) const {
  auto it = homs_.find({a, b});
  return it == homs_.end() ? empty_ : it->second;
}

// ---------------------------------------------------------------------------

Simplex apply_chain(const Semicategory& source, const SemicategoryView& target,
                    const Semifunctor& f, const ChainSimplex& chain) {
  Simplex cur;
  int start = f.on_objects.at(source.generators().at(chain.gens.front()).source);
  int prev = start;
  for (std::size_t i = 0; i < chain.gens.size(); ++i) {
    const auto& gen = source.generators()[chain.gens[i]];
    int fs = f.on_objects.at(gen.source), ft = f.on_objects.at(gen.target);
    Simplex img = f.on_generators.at(chain.gens[i]).apply(target.hom(fs, ft), chain.comps[i]);
    cur = i == 0 ? img : target.compose(start, prev, ft, cur, img);
    prev = ft;
  }
  return cur;
}

Simplex apply_hom(const Semicategory& source, const SemicategoryView& target,
                  const Semifunctor& f, int a, int b, const Simplex& x) {
  return apply_chain(source, target, f, source.representative(a, b, x));
}

SimplicialMap hom_map(const Semicategory& source, const SemicategoryView& target,
                      const Semifunctor& f, int a, int b) {
  const auto& h = source.hom(a, b);
  SimplicialMap out;
  out.image.resize(std::max(h.max_dim() + 1, 0));
  for (int m = 0; m <= h.max_dim(); ++m)
    for (int i = 0; i < h.count(m); ++i)
      out.image[m].push_back(apply_hom(source, target, f, a, b, cell_simplex(m, i)));
  return out;
}

std::vector<std::string> validate_semifunctor(const Semicategory& source,
                                              const SemicategoryView& target,
                                              const Semifunctor& f) {
  std::vector<std::string> bad;
  if (static_cast<int>(f.on_objects.size()) != source.object_count() ||
      f.on_generators.size() != source.generators().size()) {
    bad.push_back("semifunctor data does not match the source presentation");
    return bad;
  }
  for (int o : f.on_objects)
    if (o < 0 || o >= target.object_count()) {
      bad.push_back("object image out of range");
      return bad;
    }
  for (std::size_t g = 0; g < source.generators().size(); ++g) {
    const auto& gen = source.generators()[g];
    if (gen.cells.empty()) continue;
    int fs = f.on_objects[gen.source], ft = f.on_objects[gen.target];
    if (!target.less(fs, ft)) {
      bad.push_back("generator '" + gen.name + "' lands in an empty hom");
      continue;
    }
    for (const auto& v : check_simplicial_map(gen.cells, target.hom(fs, ft), f.on_generators[g]))
      bad.push_back("generator '" + gen.name + "': " + v);
  }
  if (!bad.empty()) return bad;
  for (std::size_t r = 0; r < source.relations().size(); ++r) {
    const auto& rel = source.relations()[r];
    if (apply_chain(source, target, f, rel.lhs) != apply_chain(source, target, f, rel.rhs))
      bad.push_back("relation " + std::to_string(r) + " is not preserved");
  }
  return bad;
}

Semifunctor identity_semifunctor(const Semicategory& k) {
  Semifunctor f;
  for (int o = 0; o < k.object_count(); ++o) f.on_objects.push_back(o);
  for (std::size_t g = 0; g < k.generators().size(); ++g) {
    const auto& cells = k.generators()[g].cells;
    SimplicialMap m;
    m.image.resize(std::max(cells.max_dim() + 1, 0));
    for (int d = 0; d <= cells.max_dim(); ++d)
      for (int i = 0; i < cells.count(d); ++i)
        m.image[d].push_back(k.evaluate({{static_cast<int>(g)}, {cell_simplex(d, i)}}));
    f.on_generators.push_back(std::move(m));
  }
  return f;
}

Semifunctor compose(const Semifunctor& g, const Semifunctor& f, const Semicategory& middle,
                    const SemicategoryView& target, const Semicategory& source) {
  Semifunctor out;
  for (int o : f.on_objects) out.on_objects.push_back(g.on_objects.at(o));
  for (std::size_t k = 0; k < source.generators().size(); ++k) {
    const auto& gen = source.generators()[k];
    int fs = f.on_objects[gen.source], ft = f.on_objects[gen.target];
    SimplicialMap m;
    m.image.resize(f.on_generators[k].image.size());
    for (std::size_t d = 0; d < m.image.size(); ++d)
      for (const auto& y : f.on_generators[k].image[d])
        m.image[d].push_back(apply_hom(middle, target, g, fs, ft, y));
    out.on_generators.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------

void search_semifunctors(const Semicategory& source, const SemicategoryView& target,
                         long long budget, const SemifunctorConstraints* constraints,
                         const std::function<bool(const Semifunctor&)>& emit) {
  Budget spent(budget, "semifunctor enumeration");
  const auto& gens = source.generators();
  const auto& rels = source.relations();
  const int n = source.object_count(), ng = static_cast<int>(gens.size());

  // relations are checked once their last generator is assigned
  std::vector<std::vector<int>> check_at(ng);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    int last = 0;
    for (int g : rels[r].lhs.gens) last = std::max(last, g);
    for (int g : rels[r].rhs.gens) last = std::max(last, g);
    check_at[last].push_back(static_cast<int>(r));
  }

  Semifunctor cur;
  cur.on_objects.assign(n, -1);
  cur.on_generators.assign(ng, SimplicialMap{});

  auto gen_step = [&](auto&& self, int g) -> bool {
    if (g == ng) {
      spent.spend();
      return emit(cur);
    }
    const auto& gen = gens[g];
    int fs = cur.on_objects[gen.source], ft = cur.on_objects[gen.target];
    CellConstraints fixed(std::max(gen.cells.max_dim() + 1, 0));
    for (int d = 0; d <= gen.cells.max_dim(); ++d) fixed[d].resize(gen.cells.count(d));
    if (constraints && g < static_cast<int>(constraints->cells.size())) {
      const auto& c = constraints->cells[g];
      for (std::size_t d = 0; d < c.size() && d < fixed.size(); ++d)
        for (std::size_t i = 0; i < c[d].size() && i < fixed[d].size(); ++i)
          if (c[d][i]) fixed[d][i] = c[d][i];
    }
    // cells forced by relations against earlier generators
    for (const auto& rel : rels) {
      for (int side = 0; side < 2; ++side) {
        const auto& one = side ? rel.rhs : rel.lhs;
        const auto& other = side ? rel.lhs : rel.rhs;
        if (one.gens.size() != 1 || one.gens[0] != g || one.comps[0].degenerate()) continue;
        bool earlier = std::all_of(other.gens.begin(), other.gens.end(), [&](int h) { return h < g; });
        if (!earlier) continue;
        Simplex want = apply_chain(source, target, cur, other);
        auto& slot = fixed[one.comps[0].base_dim][one.comps[0].base];
        if (slot && *slot != want) return false;
        slot = want;
      }
    }
    const auto& h = target.hom(fs, ft);
    return search_maps(gen.cells, h, &fixed, [&](const SimplicialMap& m) {
      spent.spend();
      cur.on_generators[g] = m;
      for (int r : check_at[g])
        if (apply_chain(source, target, cur, rels[r].lhs) != apply_chain(source, target, cur, rels[r].rhs))
          return false;
      return self(self, g + 1);
    });
  };

  auto obj_step = [&](auto&& self, int o) -> bool {
    if (o == n) return gen_step(gen_step, 0);
    std::vector<int> pool;
    if (constraints && o < static_cast<int>(constraints->objects.size()) && !constraints->objects[o].empty())
      pool = constraints->objects[o];
    else
      for (int t = 0; t < target.object_count(); ++t) pool.push_back(t);
    for (int t : pool) {
      cur.on_objects[o] = t;
      bool ok = true;
      for (const auto& gen : gens) {
        if (gen.cells.empty()) continue;
        int s = cur.on_objects[gen.source], e = cur.on_objects[gen.target];
        if (s >= 0 && e >= 0 && (gen.source == o || gen.target == o) && !target.less(s, e)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, o + 1)) return true;
    }
    cur.on_objects[o] = -1;
    return false;
  };
  obj_step(obj_step, 0);
}

std::vector<Semifunctor> enumerate_semifunctors(const Semicategory& source,
                                                const SemicategoryView& target, long long budget,
                                                const SemifunctorConstraints* constraints) {
  std::vector<Semifunctor> out;
  search_semifunctors(source, target, budget, constraints, [&](const Semifunctor& f) {
    out.push_back(f);
    return false;
  });
  return out;
}

bool is_isomorphism(const Semicategory& source, const SemicategoryView& target, const Semifunctor& f) {
  if (source.object_count() != target.object_count()) return false;
  std::set<int> seen(f.on_objects.begin(), f.on_objects.end());
  if (static_cast<int>(seen.size()) != target.object_count()) return false;
  if (!validate_semifunctor(source, target, f).empty()) return false;
  for (int a = 0; a < source.object_count(); ++a)
    for (int b = 0; b < source.object_count(); ++b) {
      if (a == b) continue;
      int fa = f.on_objects[a], fb = f.on_objects[b];
      if (source.less(a, b) != target.less(fa, fb)) {
        if (!source.hom(a, b).empty() || !target.hom(fa, fb).empty()) return false;
        continue;
      }
      if (!source.less(a, b)) continue;
      if (!is_isomorphism(source.hom(a, b), target.hom(fa, fb), hom_map(source, target, f, a, b)))
        return false;
    }
  return true;
}

}  // namespace hda
