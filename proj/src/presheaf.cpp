#include "hda/presheaf.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hda/errors.hpp"

namespace hda {

Site::Site(const Site& other)
    : name_(other.name_), objects_(other.objects_), generators_(other.generators_), labeler_(other.labeler_) {}

int Site::add_object(std::string name, int degree, std::vector<std::vector<bool>> leq) {
  if (find_object(name)) throw InvalidInput("duplicate site object '" + name + "'");
  objects_.push_back({std::move(name), degree, std::move(leq)});
  return object_count() - 1;
}

int Site::add_generator(std::string name, int source, int target, std::vector<int> eval) {
  if (source < 0 || target < 0 || source >= object_count() || target >= object_count())
    throw InvalidInput("site generator '" + name + "' has an unknown endpoint");
  if (static_cast<int>(eval.size()) != objects_[source].points())
    throw InvalidInput("site generator '" + name + "' has the wrong evaluation size");
  for (int p : eval)
    if (p < 0 || p >= objects_[target].points())
      throw InvalidInput("site generator '" + name + "' evaluates out of range");
  if (objects_[source].degree > objects_[target].degree)
    throw InvalidInput("site generator '" + name + "' lowers the degree");
  generators_.push_back({std::move(name), source, target, std::move(eval)});
  std::lock_guard<std::mutex> lock(mutex_);
  into_.clear();
  return static_cast<int>(generators_.size()) - 1;
}

std::optional<int> Site::find_object(const std::string& name) const {
  for (int c = 0; c < object_count(); ++c)
    if (objects_[c].name == name) return c;
  return std::nullopt;
}

const Site::Into& Site::into(int c) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = into_.find(c);
    if (it != into_.end()) return *it->second;
  }
  auto built = std::make_shared<Into>();
  std::vector<int> id(objects_.at(c).points());
  for (int p = 0; p < static_cast<int>(id.size()); ++p) id[p] = p;
  built->list.push_back({c, c, id, {}});
  built->index[{c, id}] = 0;
  for (std::size_t k = 0; k < built->list.size(); ++k) {
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const auto& gen = generators_[g];
      const Morphism m = built->list[k];
      if (gen.target != m.source) continue;
      std::vector<int> eval(gen.eval.size());
      for (std::size_t p = 0; p < eval.size(); ++p) eval[p] = m.eval[gen.eval[p]];
      std::pair<int, std::vector<int>> key{gen.source, eval};
      if (built->index.count(key)) continue;
      std::vector<int> word{static_cast<int>(g)};
      word.insert(word.end(), m.word.begin(), m.word.end());
      built->index[key] = static_cast<int>(built->list.size());
      built->list.push_back({gen.source, c, std::move(eval), std::move(word)});
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = into_.emplace(c, std::move(built));
  return *it->second;
}

const std::vector<Site::Morphism>& Site::morphisms_into(int c) const { return into(c).list; }

int Site::find_morphism(int target, int source, const std::vector<int>& eval) const {
  const auto& in = into(target);
  auto it = in.index.find({source, eval});
  return it == in.index.end() ? -1 : it->second;
}

int Site::precompose(int target, int m, int g) const {
  const auto& mm = morphisms_into(target).at(m);
  const auto& gen = generators_.at(g);
  if (gen.target != mm.source) throw InvalidInput("precomposition is ill-typed");
  std::vector<int> eval(gen.eval.size());
  for (std::size_t p = 0; p < eval.size(); ++p) eval[p] = mm.eval[gen.eval[p]];
  return find_morphism(target, gen.source, eval);
}

int Site::postcompose(int g, int source_object, int m) const {
  const auto& gen = generators_.at(g);
  const auto& mm = morphisms_into(source_object).at(m);
  if (source_object != gen.source) throw InvalidInput("postcomposition is ill-typed");
  std::vector<int> eval(mm.eval.size());
  for (std::size_t p = 0; p < eval.size(); ++p) eval[p] = gen.eval[mm.eval[p]];
  return find_morphism(gen.target, mm.source, eval);
}

bool Site::has_automorphisms(int c) const {
  const auto& in = morphisms_into(c);
  for (std::size_t m = 1; m < in.size(); ++m)
    if (in[m].source == c) return true;
  return false;
}

std::string Site::label(const Morphism& m) const {
  if (labeler_) return labeler_(*this, m);
  if (m.word.empty()) return "id";
  std::string s;
  for (std::size_t k = 0; k < m.word.size(); ++k) s += (k ? "." : "") + generators_[m.word[k]].name;
  return s;
}

std::optional<int> Site::point_object() const {
  for (int c = 0; c < object_count(); ++c)
    if (objects_[c].degree == 0 && objects_[c].points() == 1) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FinitePresheaf::FinitePresheaf(SitePtr site)
    : site_(std::move(site)), names_(site_->object_count()), maps_(site_->generators().size()) {}

int FinitePresheaf::add_element(int c, std::string name) {
  if (find(c, name)) throw InvalidInput("duplicate element '" + name + "'");
  names_.at(c).push_back(std::move(name));
  for (std::size_t g = 0; g < maps_.size(); ++g)
    if (site_->generators()[g].target == c) maps_[g].push_back(-1);
  return count(c) - 1;
}

void FinitePresheaf::set_map(int g, int x, int image) {
  const auto& gen = site_->generators().at(g);
  if (image < 0 || image >= count(gen.source)) throw InvalidInput("structure map image out of range");
  maps_.at(g).at(x) = image;
}

int FinitePresheaf::total() const {
  int t = 0;
  for (const auto& v : names_) t += static_cast<int>(v.size());
  return t;
}

std::optional<int> FinitePresheaf::find(int c, const std::string& name) const {
  const auto& v = names_.at(c);
  for (std::size_t x = 0; x < v.size(); ++x)
    if (v[x] == name) return static_cast<int>(x);
  return std::nullopt;
}

int FinitePresheaf::act(int c, int m, int x) const {
  const auto& word = site_->morphisms_into(c).at(m).word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    x = maps_[*it].at(x);
    if (x < 0) throw InvalidInput("structure map is unset");
  }
  return x;
}

std::vector<std::string> FinitePresheaf::validate() const {
  std::vector<std::string> bad;
  const auto& gens = site_->generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int x = 0; x < count(gens[g].target); ++x)
      if (maps_[g][x] < 0)
        bad.push_back("map " + gens[g].name + " unset at " + names_[gens[g].target][x]);
  if (!bad.empty()) return bad;
  for (int c = 0; c < site_->object_count(); ++c) {
    if (count(c) == 0) continue;
    const auto& in = site_->morphisms_into(c);
    for (std::size_t m = 0; m < in.size(); ++m)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].target != in[m].source) continue;
        int j = site_->precompose(c, static_cast<int>(m), static_cast<int>(g));
        for (int x = 0; x < count(c); ++x)
          if (maps_[g][act(c, static_cast<int>(m), x)] != act(c, j, x))
            bad.push_back("relation fails at " + names_[c][x] + ": " + gens[g].name + " after " +
                          site_->label(in[m]));
      }
  }
  return bad;
}

std::vector<std::pair<int, int>> FinitePresheaf::ordered_elements() const {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < site_->object_count(); ++c)
    for (int x = 0; x < count(c); ++x) out.emplace_back(c, x);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int da = site_->object(a.first).degree, db = site_->object(b.first).degree;
    if (da != db) return da < db;
    if (a.first != b.first) return a.first < b.first;
    return names_[a.first][a.second] < names_[b.first][b.second];
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> check_presheaf_map(const FinitePresheaf& k, const FinitePresheaf& l,
                                            const PresheafMap& f) {
  std::vector<std::string> bad;
  const auto& site = k.site();
  if (static_cast<int>(f.at.size()) != site.object_count()) return {"presheaf map has the wrong shape"};
  for (int c = 0; c < site.object_count(); ++c) {
    if (static_cast<int>(f.at[c].size()) != k.count(c)) return {"presheaf map has the wrong shape"};
    for (int y : f.at[c])
      if (y < 0 || y >= l.count(c)) return {"presheaf map out of range"};
  }
  const auto& gens = site.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int x = 0; x < k.count(gens[g].target); ++x) {
      int lhs = f.at[gens[g].source][k.map(static_cast<int>(g), x)];
      int rhs = l.map(static_cast<int>(g), f.at[gens[g].target][x]);
      if (lhs != rhs) bad.push_back("naturality fails for " + gens[g].name + " at " + k.name(gens[g].target, x));
    }
  return bad;
}

std::vector<PresheafMap> enumerate_presheaf_maps(const FinitePresheaf& k, const FinitePresheaf& l,
                                                 long long budget) {
  Budget spent(budget, "presheaf map enumeration");
  const auto& site = k.site();
  const auto& gens = site.generators();
  auto order = k.ordered_elements();
  std::reverse(order.begin(), order.end());
  std::map<std::pair<int, int>, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  // constraints (g, x) with face K(g)x, checked once both ends are assigned
  struct Constraint {
    int g, x;
  };
  std::vector<std::vector<Constraint>> check(order.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int x = 0; x < k.count(gens[g].target); ++x) {
      int y = k.map(static_cast<int>(g), x);
      int i = std::max(pos.at({gens[g].target, x}), pos.at({gens[g].source, y}));
      check[i].push_back({static_cast<int>(g), x});
    }
  PresheafMap cur;
  cur.at.resize(site.object_count());
  for (int c = 0; c < site.object_count(); ++c) cur.at[c].assign(k.count(c), -1);
  std::vector<PresheafMap> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      spent.spend();
      out.push_back(cur);
      return;
    }
    auto [c, x] = order[i];
    for (int y = 0; y < l.count(c); ++y) {
      spent.spend();
      cur.at[c][x] = y;
      bool ok = true;
      for (const auto& con : check[i]) {
        const auto& gen = gens[con.g];
        if (cur.at[gen.source][k.map(con.g, con.x)] != l.map(con.g, cur.at[gen.target][con.x])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
    cur.at[c][x] = -1;
  };
  rec(rec, 0);
  return out;
}

bool is_levelwise_injective(const PresheafMap& f) {
  for (const auto& v : f.at) {
    std::set<int> seen(v.begin(), v.end());
    if (seen.size() != v.size()) return false;
  }
  return true;
}

PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
  PresheafMap out;
  out.at.resize(f.at.size());
  for (std::size_t c = 0; c < f.at.size(); ++c)
    for (int x : f.at[c]) out.at[c].push_back(g.at.at(c).at(x));
  return out;
}

std::vector<std::vector<int>> representable_index(const Site& site, int c) {
  std::vector<std::vector<int>> idx(site.object_count());
  const auto& in = site.morphisms_into(c);
  for (std::size_t m = 0; m < in.size(); ++m) idx[in[m].source].push_back(static_cast<int>(m));
  return idx;
}

namespace {

FinitePresheaf representable_impl(SitePtr site, int c, bool drop_top) {
  FinitePresheaf k(site);
  const auto& in = site->morphisms_into(c);
  auto idx = representable_index(*site, c);
  std::vector<int> element_of(in.size(), -1);
  for (int d = 0; d < site->object_count(); ++d) {
    if (drop_top && d == c) continue;
    for (int m : idx[d]) element_of[m] = k.add_element(d, site->label(in[m]));
  }
  const auto& gens = site->generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int d = gens[g].target;
    if (drop_top && d == c) continue;
    for (int m : idx[d]) {
      int j = site->precompose(c, m, static_cast<int>(g));
      k.set_map(static_cast<int>(g), element_of[m], element_of[j]);
    }
  }
  return k;
}

}  // namespace

FinitePresheaf representable(SitePtr site, int c) { return representable_impl(std::move(site), c, false); }

FinitePresheaf boundary(SitePtr site, int c) { return representable_impl(std::move(site), c, true); }

PresheafMap boundary_inclusion(const Site& site, int c) {
  auto idx = representable_index(site, c);
  PresheafMap f;
  f.at.resize(site.object_count());
  for (int d = 0; d < site.object_count(); ++d) {
    if (d == c) continue;
    for (std::size_t e = 0; e < idx[d].size(); ++e) f.at[d].push_back(static_cast<int>(e));
  }
  return f;
}

PresheafMap yoneda_map(const FinitePresheaf& k, int c, int x) {
  const auto& site = k.site();
  auto idx = representable_index(site, c);
  PresheafMap f;
  f.at.resize(site.object_count());
  for (int d = 0; d < site.object_count(); ++d)
    for (int m : idx[d]) f.at[d].push_back(k.act(c, m, x));
  return f;
}

FinitePresheaf coproduct(const FinitePresheaf& a, const FinitePresheaf& b) {
  FinitePresheaf k(a.site_ptr());
  const auto& site = a.site();
  for (int c = 0; c < site.object_count(); ++c) {
    for (int x = 0; x < a.count(c); ++x) k.add_element(c, "a." + a.name(c, x));
    for (int x = 0; x < b.count(c); ++x) k.add_element(c, "b." + b.name(c, x));
  }
  const auto& gens = site.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int gi = static_cast<int>(g);
    int shift = a.count(gens[g].source);
    for (int x = 0; x < a.count(gens[g].target); ++x) k.set_map(gi, x, a.map(gi, x));
    for (int x = 0; x < b.count(gens[g].target); ++x)
      k.set_map(gi, a.count(gens[g].target) + x, shift + b.map(gi, x));
  }
  return k;
}

FinitePresheaf skeleton(const FinitePresheaf& k, int n) {
  FinitePresheaf out(k.site_ptr());
  const auto& site = k.site();
  for (int c = 0; c < site.object_count(); ++c)
    if (site.object(c).degree <= n)
      for (int x = 0; x < k.count(c); ++x) out.add_element(c, k.name(c, x));
  const auto& gens = site.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (site.object(gens[g].target).degree <= n)
      for (int x = 0; x < k.count(gens[g].target); ++x) out.set_map(static_cast<int>(g), x, k.map(static_cast<int>(g), x));
  return out;
}

PresheafMap boundary_map(const FinitePresheaf& k, int c, int x) {
  auto f = yoneda_map(k, c, x);
  f.at[c].clear();
  return f;
}

FinitePresheaf attach_cells(const FinitePresheaf& k, int c, const std::vector<PresheafMap>& along,
                            const std::vector<std::string>& names) {
  const auto& site = k.site();
  if (site.has_automorphisms(c)) throw InvalidInput("cannot attach cells at an object with automorphisms");
  auto bd = boundary(k.site_ptr(), c);
  for (const auto& f : along) {
    auto bad = check_presheaf_map(bd, k, f);
    if (!bad.empty()) throw InvalidInput("attaching map is not a presheaf map: " + bad.front());
  }
  FinitePresheaf out = k;
  auto idx = representable_index(site, c);
  const auto& gens = site.generators();
  if (!names.empty() && names.size() != along.size()) throw InvalidInput("one name per attached cell expected");
  int made = 0;
  for (std::size_t a = 0; a < along.size(); ++a) {
    const auto& f = along[a];
    std::string name;
    if (!names.empty()) {
      name = names[a];
    } else {
      do {
        name = site.object(c).name + "#" + std::to_string(made++);
      } while (out.find(c, name));
    }
    int x = out.add_element(c, name);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].target != c) continue;
      int m = site.find_morphism(c, gens[g].source, gens[g].eval);
      int e = static_cast<int>(std::find(idx[gens[g].source].begin(), idx[gens[g].source].end(), m) -
                               idx[gens[g].source].begin());
      out.set_map(static_cast<int>(g), x, f.at[gens[g].source][e]);
    }
  }
  return out;
}

FiniteCategory category_of_elements(const FinitePresheaf& k) {
  FiniteCategory cat;
  const auto& site = k.site();
  std::map<std::pair<int, int>, int> obj;
  for (int c = 0; c < site.object_count(); ++c)
    for (int x = 0; x < k.count(c); ++x) obj[{c, x}] = cat.add_object(site.object(c).name + ":" + k.name(c, x));
  // arrow[(c, x)][m] for morphisms m into c
  std::map<std::pair<int, int>, std::vector<int>> arrow;
  for (int c = 0; c < site.object_count(); ++c) {
    const auto& in = site.morphisms_into(c);
    for (int x = 0; x < k.count(c); ++x) {
      auto& row = arrow[{c, x}];
      row.assign(in.size(), -1);
      row[0] = cat.identity(obj[{c, x}]);
      for (std::size_t m = 1; m < in.size(); ++m) {
        int y = k.act(c, static_cast<int>(m), x);
        row[m] = cat.add_morphism(site.label(in[m]) + ":" + k.name(c, x), obj[{in[m].source, y}], obj[{c, x}]);
      }
    }
  }
  for (int c = 0; c < site.object_count(); ++c) {
    const auto& in = site.morphisms_into(c);
    for (int x = 0; x < k.count(c); ++x)
      for (std::size_t m2 = 0; m2 < in.size(); ++m2) {
        int d = in[m2].source;
        int z = k.act(c, static_cast<int>(m2), x);
        const auto& in_d = site.morphisms_into(d);
        for (std::size_t m1 = 0; m1 < in_d.size(); ++m1) {
          std::vector<int> eval(in_d[m1].eval.size());
          for (std::size_t p = 0; p < eval.size(); ++p) eval[p] = in[m2].eval[in_d[m1].eval[p]];
          int comp = site.find_morphism(c, in_d[m1].source, eval);
          cat.set_composite(arrow[{d, z}][m1], arrow[{c, x}][m2], arrow[{c, x}][comp]);
        }
      }
  }
  return cat;
}

// ---------------------------------------------------------------------------

namespace {

class SemicategoryTarget : public CellularTarget {
 public:
  explicit SemicategoryTarget(Semicategory& k) : k_(k) {}
  int add_object(const std::string& name) override { return k_.add_object(fresh(name)); }
  int add_generator(const std::string& name, int source, int target, const FiniteSimplicialSet& cells) override {
    return k_.add_generator(fresh(name), source, target, cells);
  }
  void add_relation(const std::vector<std::pair<int, Simplex>>& lhs,
                    const std::vector<std::pair<int, Simplex>>& rhs) override {
    k_.add_relation(chain(lhs), chain(rhs));
  }

 private:
  static ChainSimplex chain(const std::vector<std::pair<int, Simplex>>& links) {
    ChainSimplex c;
    for (const auto& [g, s] : links) {
      c.gens.push_back(g);
      c.comps.push_back(s);
    }
    return c;
  }
  std::string fresh(std::string name) {
    while (!used_.insert(name).second) name += "'";
    return name;
  }
  Semicategory& k_;
  std::set<std::string> used_;
};

}  // namespace

RealizationIndex realize_into(const FinitePresheaf& k, const CellularCoObject& co, CellularTarget& target) {
  const auto& site = k.site();
  if (static_cast<int>(co.top.size()) != site.object_count())
    throw InvalidInput("co-object has the wrong number of objects");
  RealizationIndex index;
  for (auto [c, x] : k.ordered_elements()) {
    const auto& top = co.top[c];
    if (top.empty()) continue;
    if (site.has_automorphisms(c)) throw InvalidInput("co-object is not cellular at " + site.object(c).name);
    const auto& in = site.morphisms_into(c);
    auto resolve = [&](const CellRef& r, bool generator) {
      if (r.morphism < 0 || r.morphism >= static_cast<int>(in.size()))
        throw InvalidInput("cell reference out of range");
      int d = in[r.morphism].source;
      int y = k.act(c, r.morphism, x);
      const auto& ids = generator ? index.generators[{d, y}] : index.objects[{d, y}];
      if (r.top < 0 || r.top >= static_cast<int>(ids.size())) throw InvalidInput("cell reference out of range");
      return ids[r.top];
    };
    const std::string& base = k.name(c, x);
    auto& objs = index.objects[{c, x}];
    for (const auto& o : top.objects)
      objs.push_back(target.add_object(top.objects.size() == 1 ? base : base + "." + o));
    auto& gens = index.generators[{c, x}];
    for (const auto& g : top.generators)
      gens.push_back(target.add_generator(top.generators.size() == 1 ? base : base + "." + g.name,
                                          resolve(g.source, false), resolve(g.target, false), g.cells));
    for (const auto& rel : top.relations) {
      auto links = [&](const std::vector<TopLink>& side) {
        std::vector<std::pair<int, Simplex>> out;
        for (const auto& l : side) out.emplace_back(resolve(l.generator, true), l.simplex);
        return out;
      };
      target.add_relation(links(rel.lhs), links(rel.rhs));
    }
  }
  return index;
}

Realization realize(const FinitePresheaf& k, const CellularCoObject& co) {
  Realization r;
  SemicategoryTarget target(r.k);
  r.index = realize_into(k, co, target);
  return r;
}

Realization co_value(const CellularCoObject& co, int c) { return realize(representable(co.site, c), co); }

Semifunctor realize_map(const FinitePresheaf& k, const Realization& rk, const Realization& rl,
                        const PresheafMap& f) {
  Semifunctor out;
  out.on_objects.assign(rk.k.object_count(), -1);
  out.on_generators.resize(rk.k.generators().size());
  for (const auto& [el, ids] : rk.index.objects) {
    const auto& to = rl.index.objects.at({el.first, f.at.at(el.first).at(el.second)});
    for (std::size_t s = 0; s < ids.size(); ++s) out.on_objects[ids[s]] = to.at(s);
  }
  for (const auto& [el, ids] : rk.index.generators) {
    const auto& to = rl.index.generators.at({el.first, f.at.at(el.first).at(el.second)});
    for (std::size_t s = 0; s < ids.size(); ++s) {
      const auto& cells = rk.k.generators()[ids[s]].cells;
      SimplicialMap m;
      m.image.resize(cells.max_dim() + 1);
      for (int d = 0; d <= cells.max_dim(); ++d)
        for (int i = 0; i < cells.count(d); ++i)
          m.image[d].push_back(rl.k.evaluate({{to.at(s)}, {cell_simplex(d, i)}}));
      out.on_generators[ids[s]] = std::move(m);
    }
  }
  (void)k;
  return out;
}

NerveResult nerve_of(const Semicategory& x, const CellularCoObject& co, int max_degree, long long budget) {
  const auto& site = *co.site;
  NerveResult n{FinitePresheaf(co.site), {}, {}, max_degree};
  n.elements.resize(site.object_count());
  n.values.resize(site.object_count());
  std::vector<std::map<Semifunctor, int>> lookup(site.object_count());
  for (int c = 0; c < site.object_count(); ++c) {
    if (site.object(c).degree > max_degree) continue;
    n.values[c] = co_value(co, c);
    n.elements[c] = enumerate_semifunctors(n.values[c].k, x, budget);
    for (std::size_t i = 0; i < n.elements[c].size(); ++i) {
      n.presheaf.add_element(c, "f" + std::to_string(i));
      lookup[c][n.elements[c][i]] = static_cast<int>(i);
    }
  }
  const auto& gens = site.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int d = gens[g].source, c = gens[g].target;
    if (site.object(c).degree > max_degree) continue;
    auto rep_d = representable(co.site, d);
    auto idx_d = representable_index(site, d), idx_c = representable_index(site, c);
    PresheafMap along;
    along.at.resize(site.object_count());
    for (int e = 0; e < site.object_count(); ++e)
      for (int m : idx_d[e]) {
        int j = site.postcompose(static_cast<int>(g), d, m);
        along.at[e].push_back(static_cast<int>(std::find(idx_c[e].begin(), idx_c[e].end(), j) - idx_c[e].begin()));
      }
    auto xg = realize_map(rep_d, n.values[d], n.values[c], along);
    for (std::size_t i = 0; i < n.elements[c].size(); ++i) {
      auto restricted = compose(n.elements[c][i], xg, n.values[c].k, x, n.values[d].k);
      n.presheaf.set_map(static_cast<int>(g), static_cast<int>(i), lookup[d].at(restricted));
    }
  }
  return n;
}

Semifunctor glue(const FinitePresheaf& k, const Realization& rk, const NerveResult& n, const PresheafMap& alpha) {
  Semifunctor out;
  out.on_objects.assign(rk.k.object_count(), -1);
  out.on_generators.resize(rk.k.generators().size());
  for (const auto& [el, ids] : rk.index.objects) {
    const auto& f = n.elements.at(el.first).at(alpha.at.at(el.first).at(el.second));
    const auto& own = n.values[el.first].index.objects.at({el.first, 0});
    for (std::size_t s = 0; s < ids.size(); ++s) out.on_objects[ids[s]] = f.on_objects.at(own.at(s));
  }
  for (const auto& [el, ids] : rk.index.generators) {
    const auto& f = n.elements.at(el.first).at(alpha.at.at(el.first).at(el.second));
    const auto& own = n.values[el.first].index.generators.at({el.first, 0});
    for (std::size_t s = 0; s < ids.size(); ++s) out.on_generators[ids[s]] = f.on_generators.at(own.at(s));
  }
  (void)k;
  return out;
}

Semifunctor counit(const NerveResult& n, const Realization& realized_nerve) {
  PresheafMap id;
  id.at.resize(n.elements.size());
  for (std::size_t c = 0; c < n.elements.size(); ++c)
    for (int i = 0; i < n.presheaf.count(static_cast<int>(c)); ++i) id.at[c].push_back(i);
  return glue(n.presheaf, realized_nerve, n, id);
}

std::string AdjunctionReport::to_string() const {
  return "realization side " + std::to_string(realization_side) + ", nerve side " + std::to_string(nerve_side) +
         ", bijection " + (bijection ? "yes" : "no") + ", round trips " + (round_trips ? "yes" : "no") +
         ", naturality " + (naturality ? "yes" : "no") + " (" + std::to_string(naturality_checks) + " checks)";
}

namespace {

int max_element_degree(const FinitePresheaf& k) {
  int d = 0;
  for (int c = 0; c < k.site().object_count(); ++c)
    if (k.count(c) > 0) d = std::max(d, k.site().object(c).degree);
  return d;
}

// F -> (c, x) |-> F o realize(yoneda x)
PresheafMap restrict_to_elements(const FinitePresheaf& k, const Realization& rk, const Semicategory& x,
                                 const NerveResult& n, const Semifunctor& f,
                                 const std::vector<std::map<Semifunctor, int>>& lookup) {
  PresheafMap alpha;
  const auto& site = k.site();
  alpha.at.resize(site.object_count());
  for (int c = 0; c < site.object_count(); ++c)
    for (int e = 0; e < k.count(c); ++e) {
      auto chi = realize_map(representable(k.site_ptr(), c), n.values[c], rk, yoneda_map(k, c, e));
      auto it = lookup[c].find(compose(f, chi, rk.k, x, n.values[c].k));
      alpha.at[c].push_back(it == lookup[c].end() ? -1 : it->second);
    }
  return alpha;
}

}  // namespace

AdjunctionReport verify_adjunction(const FinitePresheaf& k, const Semicategory& x, const CellularCoObject& co,
                                   long long budget) {
  AdjunctionReport rep;
  auto n = nerve_of(x, co, max_element_degree(k), budget);
  std::vector<std::map<Semifunctor, int>> lookup(n.elements.size());
  for (std::size_t c = 0; c < n.elements.size(); ++c)
    for (std::size_t i = 0; i < n.elements[c].size(); ++i) lookup[c][n.elements[c][i]] = static_cast<int>(i);
  auto rk = realize(k, co);
  auto left = enumerate_semifunctors(rk.k, x, budget);
  auto right = enumerate_presheaf_maps(k, n.presheaf, budget);
  rep.realization_side = left.size();
  rep.nerve_side = right.size();

  std::set<Semifunctor> glued;
  bool valid = true;
  rep.round_trips = true;
  for (const auto& alpha : right) {
    auto f = glue(k, rk, n, alpha);
    if (!validate_semifunctor(rk.k, x, f).empty()) valid = false;
    glued.insert(f);
    if (valid && restrict_to_elements(k, rk, x, n, f, lookup) != alpha) rep.round_trips = false;
  }
  rep.bijection = valid && glued.size() == right.size() && left.size() == right.size() &&
                  glued == std::set<Semifunctor>(left.begin(), left.end());
  for (const auto& f : left) {
    auto alpha = restrict_to_elements(k, rk, x, n, f, lookup);
    if (!check_presheaf_map(k, n.presheaf, alpha).empty() || glue(k, rk, n, alpha) != f) rep.round_trips = false;
  }

  rep.naturality = true;
  // in X: post-composition with an endomorphism h
  auto ends = enumerate_semifunctors(x, x, budget);
  if (!ends.empty()) {
    const auto& h = ends.back();
    for (const auto& alpha : right) {
      PresheafMap moved = alpha;
      for (std::size_t c = 0; c < moved.at.size(); ++c)
        for (auto& i : moved.at[c]) i = lookup[c].at(compose(h, n.elements[c][i], x, x, n.values[c].k));
      ++rep.naturality_checks;
      if (glue(k, rk, n, moved) != compose(h, glue(k, rk, n, alpha), x, x, rk.k)) rep.naturality = false;
    }
  }
  // in K: pre-composition with the Yoneda map of the first element
  auto order = k.ordered_elements();
  if (!order.empty()) {
    auto [c, e] = order.front();
    auto rep_c = representable(k.site_ptr(), c);
    auto u = yoneda_map(k, c, e);
    auto r_rep = realize(rep_c, co);
    auto ru = realize_map(rep_c, r_rep, rk, u);
    for (const auto& alpha : right) {
      ++rep.naturality_checks;
      if (glue(rep_c, r_rep, n, compose(alpha, u)) != compose(glue(k, rk, n, alpha), ru, rk.k, x, r_rep.k))
        rep.naturality = false;
    }
  }
  return rep;
}

}  // namespace hda
