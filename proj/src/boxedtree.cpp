#include "hda/boxedtree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "hda/category.hpp"
#include "hda/errors.hpp"

namespace hda {

RootedTree::RootedTree(std::vector<std::string> nodes, std::vector<int> parent)
    : nodes_(std::move(nodes)), parent_(std::move(parent)) {
  int n = size();
  if (n == 0) throw InvalidInput("a tree needs at least one node");
  if (static_cast<int>(parent_.size()) != n) throw InvalidInput("one parent entry per node expected");
  if (std::set<std::string>(nodes_.begin(), nodes_.end()).size() != nodes_.size())
    throw InvalidInput("tree node names must be unique");
  for (int v = 0; v < n; ++v) {
    if (parent_[v] < -1 || parent_[v] >= n) throw InvalidInput("parent of '" + nodes_[v] + "' out of range");
    if (parent_[v] == -1) {
      if (root_ >= 0) throw InvalidInput("tree has more than one root");
      root_ = v;
    }
  }
  if (root_ < 0) throw InvalidInput("tree has no root");
  leq_.assign(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    int w = v;
    for (int steps = 0; w != -1; ++steps) {
      if (steps > n) throw InvalidInput("parent map has a cycle through '" + nodes_[v] + "'");
      leq_[v][w] = true;
      w = parent_[w];
    }
  }
}

RootedTree RootedTree::path(int n) {
  if (n < 1) throw InvalidInput("a path needs at least one node");
  std::vector<std::string> names;
  std::vector<int> parent;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    parent.push_back(i + 1 < n ? i + 1 : -1);
  }
  return RootedTree(names, parent);
}

std::optional<int> RootedTree::find(const std::string& name) const {
  for (int v = 0; v < size(); ++v)
    if (nodes_[v] == name) return v;
  return std::nullopt;
}

std::string RootedTree::canonical() const {
  std::vector<std::vector<int>> children(size());
  for (int v = 0; v < size(); ++v)
    if (parent_[v] >= 0) children[parent_[v]].push_back(v);
  auto enc = [&](auto&& self, int v) -> std::string {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(self(self, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return enc(enc, root_);
}

namespace {

// nodes in post-order of the sorted encoding, so paths come out as 0 < 1 < ...
RootedTree tree_from_canonical(const std::string& code) {
  std::vector<int> parent;
  std::size_t pos = 0;
  auto parse = [&](auto&& self) -> int {
    ++pos;  // '('
    std::vector<int> kids;
    while (code[pos] == '(') kids.push_back(self(self));
    ++pos;  // ')'
    int v = static_cast<int>(parent.size());
    parent.push_back(-1);
    for (int k : kids) parent[k] = v;
    return v;
  };
  parse(parse);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < parent.size(); ++v) names.push_back(std::to_string(v));
  return RootedTree(names, parent);
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int max_nodes) {
  std::vector<RootedTree> out;
  if (max_nodes < 1) return out;
  std::vector<std::string> level{"()"};
  for (int n = 1; n <= max_nodes; ++n) {
    std::sort(level.begin(), level.end());
    std::set<std::string> next;
    for (const auto& code : level) {
      auto t = tree_from_canonical(code);
      out.push_back(t);
      for (int v = 0; v < t.size(); ++v) {
        std::vector<std::string> names;
        std::vector<int> parent;
        for (int w = 0; w < t.size(); ++w) {
          names.push_back(t.node(w));
          parent.push_back(t.parent(w));
        }
        names.push_back("new");
        parent.push_back(v);
        next.insert(RootedTree(names, parent).canonical());
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<std::vector<int>> monotone_maps(const RootedTree& a, const RootedTree& b, bool injective_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == a.size()) {
      out.push_back(f);
      return;
    }
    for (int w = 0; w < b.size(); ++w) {
      if (injective_only && used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (a.leq(u, v) && !b.leq(f[u], w)) ok = false;
        if (a.leq(v, u) && !b.leq(w, f[u])) ok = false;
      }
      if (!ok) continue;
      f[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
    f[v] = -1;
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------

int BoxedObject::element_count() const {
  int n = 1;
  for (const auto& t : factors) n *= t.size();
  return n;
}

std::vector<int> BoxedObject::coordinates(int e) const {
  std::vector<int> c(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    c[i] = e % factors[i].size();
    e /= factors[i].size();
  }
  return c;
}

int BoxedObject::element(const std::vector<int>& coords) const {
  int e = 0;
  for (std::size_t i = factors.size(); i-- > 0;) e = e * factors[i].size() + coords.at(i);
  return e;
}

bool BoxedObject::leq(int e, int f) const {
  auto a = coordinates(e), b = coordinates(f);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].leq(a[i], b[i])) return false;
  return true;
}

std::string BoxedObject::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].canonical();
  return s + "]";
}

namespace {

std::string element_name(const BoxedObject& a, int e) {
  auto c = a.coordinates(e);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + a.factors[i].node(c[i]);
  return s + ")";
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

std::string BoxGenerator::to_string() const {
  switch (kind) {
    case Kind::tree_map: {
      std::string s = "f" + std::to_string(index) + "[";
      for (std::size_t v = 0; v < map.size(); ++v) s += (v ? "," : "") + std::to_string(map[v]);
      return s + "]";
    }
    case Kind::face:
      return "d" + std::to_string(index) + "^" + std::to_string(eps);
    case Kind::degeneracy:
      return "s" + std::to_string(index);
    case Kind::permutation: {
      std::string s = "p[";
      for (std::size_t v = 0; v < map.size(); ++v) s += (v ? "," : "") + std::to_string(map[v]);
      return s + "]";
    }
  }
  return "?";
}

BoxedMorphism BoxedMorphism::identity(const BoxedObject& a) {
  BoxedMorphism m;
  m.source_ = m.target_ = a;
  m.eval_.resize(a.element_count());
  std::iota(m.eval_.begin(), m.eval_.end(), 0);
  return m;
}

BoxedMorphism BoxedMorphism::generator(const BoxedObject& a, const BoxGenerator& g) {
  BoxedMorphism m;
  m.source_ = a;
  m.word_ = {g};
  const int n = static_cast<int>(a.factors.size());
  BoxedObject& t = m.target_;
  t = a;
  switch (g.kind) {
    case BoxGenerator::Kind::tree_map:
      if (g.index < 0 || g.index >= n) throw InvalidInput("tree map on a missing factor");
      if (static_cast<int>(g.map.size()) != a.factors[g.index].size())
        throw InvalidInput("tree map has the wrong number of node images");
      for (int w : g.map)
        if (w < 0 || w >= g.target.size()) throw InvalidInput("tree map image out of range");
      t.factors[g.index] = g.target;
      break;
    case BoxGenerator::Kind::face:
      if (g.index < 0 || g.index > n || g.eps < 0 || g.eps > 1) throw InvalidInput("face index out of range");
      t.factors.insert(t.factors.begin() + g.index, RootedTree::path(2));
      break;
    case BoxGenerator::Kind::degeneracy:
      if (g.index < 0 || g.index >= n) throw InvalidInput("degeneracy index out of range");
      t.factors.erase(t.factors.begin() + g.index);
      break;
    case BoxGenerator::Kind::permutation:
      if (static_cast<int>(g.map.size()) != n || !is_permutation(g.map))
        throw InvalidInput("permutation does not match the factors");
      for (int j = 0; j < n; ++j) t.factors[j] = a.factors[g.map[j]];
      break;
  }
  m.eval_.resize(a.element_count());
  for (int e = 0; e < a.element_count(); ++e) {
    auto c = a.coordinates(e);
    std::vector<int> d;
    switch (g.kind) {
      case BoxGenerator::Kind::tree_map:
        d = c;
        d[g.index] = g.map[c[g.index]];
        break;
      case BoxGenerator::Kind::face:
        d = c;
        d.insert(d.begin() + g.index, g.eps);
        break;
      case BoxGenerator::Kind::degeneracy:
        d = c;
        d.erase(d.begin() + g.index);
        break;
      case BoxGenerator::Kind::permutation:
        d.resize(n);
        for (int j = 0; j < n; ++j) d[j] = c[g.map[j]];
        break;
    }
    m.eval_[e] = t.element(d);
  }
  if (!m.monotone()) throw InvalidInput("generator " + g.to_string() + " is not monotone");
  return m;
}

bool BoxedMorphism::monotone() const {
  for (int e = 0; e < source_.element_count(); ++e)
    for (int f = 0; f < source_.element_count(); ++f)
      if (source_.leq(e, f) && !target_.leq(eval_[e], eval_[f])) return false;
  return true;
}

BoxedMorphism compose(const BoxedMorphism& g, const BoxedMorphism& f) {
  if (!(f.target_ == g.source_))
    throw InvalidInput("cannot compose: " + f.target_.to_string() + " vs " + g.source_.to_string());
  BoxedMorphism m;
  m.source_ = f.source_;
  m.target_ = g.target_;
  m.word_ = f.word_;
  m.word_.insert(m.word_.end(), g.word_.begin(), g.word_.end());
  m.eval_.resize(f.eval_.size());
  for (std::size_t e = 0; e < f.eval_.size(); ++e) m.eval_[e] = g.eval_[f.eval_[e]];
  return m;
}

Precylinder precylinder(const BoxedObject& a) {
  BoxGenerator d0{BoxGenerator::Kind::face, 0, 0, {}, {}};
  BoxGenerator d1{BoxGenerator::Kind::face, 0, 1, {}, {}};
  auto m0 = BoxedMorphism::generator(a, d0);
  auto m1 = BoxedMorphism::generator(a, d1);
  auto cyl = m0.target();
  auto sigma = BoxedMorphism::generator(cyl, {BoxGenerator::Kind::degeneracy, 0, 0, {}, {}});
  return {cyl, m0, m1, sigma};
}

BoxedMorphism cylinder_map(const BoxedMorphism& f) {
  auto m = BoxedMorphism::identity(precylinder(f.source()).cyl);
  for (auto g : f.word()) {
    if (g.kind == BoxGenerator::Kind::permutation) {
      std::vector<int> p{0};
      for (int v : g.map) p.push_back(v + 1);
      g.map = p;
    } else {
      g.index += 1;
    }
    m = compose(BoxedMorphism::generator(m.target(), g), m);
  }
  return m;
}

CheckResult augmentation_check(const Precylinder& p) {
  auto id = BoxedMorphism::identity(p.d0.source());
  if (!(compose(p.sigma, p.d0) == id)) return {false, "sigma d0 != id on " + id.source().to_string()};
  if (!(compose(p.sigma, p.d1) == id)) return {false, "sigma d1 != id on " + id.source().to_string()};
  return {};
}

CheckResult functoriality_check(const BoxedMorphism& f) {
  auto p = precylinder(f.source()), q = precylinder(f.target());
  auto i = cylinder_map(f);
  if (!(compose(i, p.d0) == compose(q.d0, f))) return {false, "I(f) d0 != d0 f for " + f.source().to_string()};
  if (!(compose(i, p.d1) == compose(q.d1, f))) return {false, "I(f) d1 != d1 f for " + f.source().to_string()};
  return {};
}

CheckResult is_sieve(const BoxedObject& a, const std::vector<bool>& subset) {
  for (int y = 0; y < a.element_count(); ++y) {
    if (!subset[y]) continue;
    for (int x = 0; x < a.element_count(); ++x)
      if (!subset[x] && a.leq(x, y))
        return {false, element_name(a, x) + " <= " + element_name(a, y) + " leaves the subset"};
  }
  return {};
}

CheckResult sieve_cosieve_check(const Precylinder& p) {
  const auto& c = p.cyl;
  int n = c.element_count();
  std::vector<bool> u(n, false), f(n, false);
  for (int v : p.d0.eval()) u[v] = true;
  for (int v : p.d1.eval()) f[v] = true;
  if (std::set<int>(p.d0.eval().begin(), p.d0.eval().end()).size() != p.d0.eval().size())
    return {false, "d0 is not injective"};
  auto sieve = is_sieve(c, u);
  if (!sieve.pass) return {false, "image of d0 is not a sieve: " + sieve.witness};
  for (int x = 0; x < n; ++x) {
    if (u[x] == f[x])
      return {false, element_name(c, x) + (u[x] ? " lies in both images" : " lies in neither image")};
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[x] && !f[y] && c.leq(x, y))
        return {false, "image of d1 is not a cosieve: " + element_name(c, x) + " <= " + element_name(c, y)};
  return {};
}

CheckResult cosieve_stability_check(const BoxedMorphism& f) {
  auto i = cylinder_map(f);
  const auto& a = i.source();
  for (int e = 0; e < a.element_count(); ++e) {
    if (a.coordinates(e)[0] != 1) continue;
    if (i.target().coordinates(i.eval()[e])[0] != 1)
      return {false, element_name(a, e) + " leaves the cosieve under " + i.word().back().to_string()};
  }
  return {};
}

std::optional<int> final_object(const BoxedObject& a) {
  for (int t = 0; t < a.element_count(); ++t) {
    bool top = true;
    for (int e = 0; e < a.element_count() && top; ++e) top = a.leq(e, t);
    if (top) return t;
  }
  return std::nullopt;
}

HomologyReport asphericity_evidence(const BoxedObject& a, int max_degree) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(a.element_count(), std::vector<bool>(a.element_count()));
  for (int e = 0; e < a.element_count(); ++e) {
    names.push_back(element_name(a, e));
    for (int f = 0; f < a.element_count(); ++f) leq[e][f] = a.leq(e, f);
  }
  auto n = nerve(poset_category(names, leq), max_degree + 1);
  return homology(n.set, max_degree);
}

std::vector<BoxedObject> enumerate_boxed_objects(int max_factors, int max_nodes) {
  auto trees = enumerate_trees(max_nodes);
  std::vector<BoxedObject> out{{}};
  std::vector<BoxedObject> level{{}};
  for (int k = 1; k <= max_factors; ++k) {
    std::vector<BoxedObject> next;
    for (const auto& a : level)
      for (const auto& t : trees) {
        auto b = a;
        b.factors.push_back(t);
        next.push_back(b);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<BoxedMorphism> enumerate_generators(const std::vector<BoxedObject>& objects, int max_factors,
                                                int max_nodes) {
  auto trees = enumerate_trees(max_nodes);
  std::vector<BoxedMorphism> out;
  using K = BoxGenerator::Kind;
  for (const auto& a : objects) {
    int n = static_cast<int>(a.factors.size());
    for (int i = 0; i < n; ++i)
      for (const auto& t : trees)
        for (const auto& f : monotone_maps(a.factors[i], t))
          out.push_back(BoxedMorphism::generator(a, {K::tree_map, i, 0, f, t}));
    if (n < max_factors)
      for (int i = 0; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) out.push_back(BoxedMorphism::generator(a, {K::face, i, e, {}, {}}));
    for (int i = 0; i < n; ++i) out.push_back(BoxedMorphism::generator(a, {K::degeneracy, i, 0, {}, {}}));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end()))
      out.push_back(BoxedMorphism::generator(a, {K::permutation, 0, 0, p, {}}));
  }
  return out;
}

bool LocalTestReport::pass() const {
  return augmentation_failures == 0 && functoriality_failures == 0 && sieve_failures == 0 &&
         stability_failures == 0 && final_failures == 0 && asphericity_failures == 0 &&
         corrupted_precylinder_detected && non_sieve_detected;
}

std::string LocalTestReport::to_string() const {
  auto line = [](const std::string& what, int failures, int of) {
    return what + ": " + (failures == 0 ? "pass" : "FAIL") + " (" + std::to_string(of - failures) + "/" +
           std::to_string(of) + ")\n";
  };
  std::string s = "sample: " + std::to_string(objects) + " boxed objects (<= " + std::to_string(max_factors) +
                  " factors, <= " + std::to_string(max_nodes) + " nodes), " + std::to_string(morphisms) +
                  " generators\n";
  s += line("augmentation", augmentation_failures, objects);
  s += line("sieve/cosieve", sieve_failures, objects);
  s += line("final object", final_failures, objects);
  s += line("asphericity up to degree " + std::to_string(max_degree), asphericity_failures, objects);
  s += line("precylinder functoriality", functoriality_failures, morphisms);
  s += line("cosieve stability", stability_failures, morphisms);
  s += std::string("negative control, corrupted precylinder: ") +
       (corrupted_precylinder_detected ? "detected" : "MISSED") + "\n";
  s += std::string("negative control, non-sieve subset: ") + (non_sieve_detected ? "detected" : "MISSED") + "\n";
  for (const auto& f : failures) s += "  " + f + "\n";
  s += pass() ? "all hypotheses verified on the sample\n" : "hypotheses violated on the sample\n";
  return s;
}

LocalTestReport local_test_report(int max_factors, int max_nodes, int max_degree) {
  LocalTestReport rep;
  rep.max_factors = max_factors;
  rep.max_nodes = max_nodes;
  rep.max_degree = max_degree;
  auto objects = enumerate_boxed_objects(max_factors, max_nodes);
  rep.objects = static_cast<int>(objects.size());
  auto note = [&](int& counter, const CheckResult& r) {
    if (r.pass) return;
    ++counter;
    rep.failures.push_back(r.witness);
  };
  for (const auto& a : objects) {
    auto p = precylinder(a);
    note(rep.augmentation_failures, augmentation_check(p));
    note(rep.sieve_failures, sieve_cosieve_check(p));
    auto top = final_object(a);
    if (!top) note(rep.final_failures, {false, "no final object in " + a.to_string()});
    auto h = asphericity_evidence(a, max_degree);
    if (!h.reduced_acyclic()) note(rep.asphericity_failures, {false, a.to_string() + ": " + h.to_string()});
  }
  auto gens = enumerate_generators(objects, max_factors, max_nodes);
  rep.morphisms = static_cast<int>(gens.size());
  for (const auto& f : gens) {
    note(rep.functoriality_failures, functoriality_check(f));
    note(rep.stability_failures, cosieve_stability_check(f));
  }
  // negative controls
  BoxedObject interval{{RootedTree::path(2)}};
  auto bad = precylinder(interval);
  bad.d0 = bad.d1;
  rep.corrupted_precylinder_detected = augmentation_check(bad).pass && !sieve_cosieve_check(bad).pass;
  auto cyl = precylinder(interval).cyl;
  std::vector<bool> upper(cyl.element_count());
  for (int e = 0; e < cyl.element_count(); ++e) upper[e] = cyl.coordinates(e)[0] == 1;
  rep.non_sieve_detected = !is_sieve(cyl, upper).pass;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string eval_string(const std::vector<int>& eval) {
  std::string s = "[";
  for (std::size_t i = 0; i < eval.size(); ++i) s += (i ? "," : "") + std::to_string(eval[i]);
  return s + "]";
}

std::shared_ptr<Site> build_tree_site(int max_nodes) {
  auto site = std::make_shared<Site>("tree");
  auto trees = enumerate_trees(max_nodes);
  for (const auto& t : trees) {
    std::vector<std::vector<bool>> leq(t.size(), std::vector<bool>(t.size()));
    for (int v = 0; v < t.size(); ++v)
      for (int w = 0; w < t.size(); ++w) leq[v][w] = t.leq(v, w);
    site->add_object(t.canonical(), t.size() - 1, std::move(leq));
  }
  for (std::size_t s = 0; s < trees.size(); ++s)
    for (std::size_t t = 0; t < trees.size(); ++t) {
      int grow = trees[t].size() - trees[s].size();
      if (grow != 0 && grow != 1) continue;
      for (const auto& f : monotone_maps(trees[s], trees[t], true)) {
        std::vector<int> id(f.size());
        std::iota(id.begin(), id.end(), 0);
        if (s == t && f == id) continue;
        site->add_generator(trees[s].canonical() + "->" + trees[t].canonical() + eval_string(f),
                            static_cast<int>(s), static_cast<int>(t), f);
      }
    }
  site->set_labeler([](const Site& site, const Site::Morphism& m) {
    return site.object(m.source).name + eval_string(m.eval);
  });
  return site;
}

}  // namespace

SitePtr tree_site(int max_nodes) {
  static std::mutex mutex;
  static std::map<int, SitePtr> sites;
  if (max_nodes < 1) throw InvalidInput("tree site needs at least one node");
  std::lock_guard<std::mutex> lock(mutex);
  auto& s = sites[max_nodes];
  if (!s) s = build_tree_site(max_nodes);
  return s;
}

int tree_object(const Site& site, const RootedTree& t) {
  auto c = site.find_object(t.canonical());
  if (!c) throw InvalidInput("tree " + t.canonical() + " is not an object of the site");
  return *c;
}

CellularCoObject tree_poset_coobject(SitePtr site) {
  CellularCoObject co{site, "poset", std::vector<TopCells>(site->object_count())};
  int p1 = tree_object(*site, RootedTree::path(1));
  co.top[p1].objects = {"o"};
  if (site->object_count() > 1) {
    int p2 = tree_object(*site, RootedTree::path(2));
    CellRef lo{site->find_morphism(p2, p1, {0}), 0}, hi{site->find_morphism(p2, p1, {1}), 0};
    co.top[p2].generators = {{"e", lo, hi, standard_simplex(0)}};
    if (auto p3 = site->find_object(RootedTree::path(3).canonical())) {
      auto edge = [&](int a, int b) { return CellRef{site->find_morphism(*p3, p2, {a, b}), 0}; };
      Simplex pt = cell_simplex(0, 0);
      co.top[*p3].relations = {{{{edge(0, 1), pt}, {edge(1, 2), pt}}, {{edge(0, 2), pt}}}};
    }
  }
  return co;
}

Realization tree_realize(const FinitePresheaf& k) { return realize(k, tree_poset_coobject(k.site_ptr())); }

NerveResult tree_nerve(const Semicategory& x, int max_nodes, long long budget) {
  auto site = tree_site(max_nodes);
  return nerve_of(x, tree_poset_coobject(site), max_nodes - 1, budget);
}

}  // namespace hda
