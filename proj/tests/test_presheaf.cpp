#include "doctest.h"

#include "hda/errors.hpp"
#include "hda/presheaf.hpp"

using namespace hda;

namespace {

// V (one point) and E (two points 0 < 1) with s, t : V -> E.
SitePtr graph_site() {
  auto site = std::make_shared<Site>("graph");
  site->add_object("V", 0, {{true}});
  site->add_object("E", 1, {{true, true}, {false, true}});
  site->add_generator("s", 0, 1, {0});
  site->add_generator("t", 0, 1, {1});
  return site;
}

CellularCoObject edge_coobject(const SitePtr& site) {
  CellularCoObject co{site, "edges", std::vector<TopCells>(2)};
  co.top[0].objects = {"o"};
  co.top[1].generators = {{"e", {1, 0}, {2, 0}, standard_simplex(0)}};
  return co;
}

struct Graph {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};

FinitePresheaf graph(const SitePtr& site, const Graph& g) {
  FinitePresheaf k(site);
  for (int v = 0; v < g.vertices; ++v) k.add_element(0, "v" + std::to_string(v));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int x = k.add_element(1, "e" + std::to_string(e));
    k.set_map(0, x, g.edges[e].first);
    k.set_map(1, x, g.edges[e].second);
  }
  return k;
}

// graph maps, counted over all vertex assignments
long long graph_maps(const Graph& a, const Graph& b) {
  long long total = 0;
  std::vector<int> f(a.vertices, 0);
  while (true) {
    long long ways = 1;
    for (auto [s, t] : a.edges) {
      long long n = 0;
      for (auto [u, v] : b.edges) n += (u == f[s] && v == f[t]);
      ways *= n;
    }
    total += ways;
    int i = 0;
    while (i < a.vertices && ++f[i] == b.vertices) f[i++] = 0;
    if (i == a.vertices) break;
  }
  return total;
}

// semifunctors from the free semicategory on a graph: objects go to objects, edges to hom vertices
long long free_maps(const Graph& a, const Semicategory& x) {
  long long total = 0;
  int n = x.object_count();
  std::vector<int> f(a.vertices, 0);
  while (true) {
    long long ways = 1;
    for (auto [s, t] : a.edges) ways *= x.less(f[s], f[t]) ? x.hom(f[s], f[t]).count(0) : 0;
    total += ways;
    int i = 0;
    while (i < a.vertices && ++f[i] == n) f[i++] = 0;
    if (i == a.vertices) break;
  }
  return total;
}

}  // namespace

TEST_CASE("site morphisms and representables") {
  auto site = graph_site();
  CHECK(site->morphisms_into(0).size() == 1);
  CHECK(site->morphisms_into(1).size() == 3);
  CHECK(site->find_morphism(1, 0, {1}) == 2);
  CHECK(site->precompose(1, 0, 0) == 1);
  CHECK(site->postcompose(1, 0, 0) == 2);
  CHECK_FALSE(site->has_automorphisms(1));
  CHECK(site->point_object() == 0);
  CHECK(site->label(site->morphisms_into(1)[1]) == "s");

  auto e = representable(site, 1);
  CHECK(e.count(0) == 2);
  CHECK(e.count(1) == 1);
  CHECK(e.validate().empty());
  auto b = boundary(site, 1);
  CHECK(b.count(0) == 2);
  CHECK(b.count(1) == 0);
  CHECK(check_presheaf_map(b, e, boundary_inclusion(*site, 1)).empty());

  auto cat = category_of_elements(e);
  CHECK(cat.object_count() == 3);
  CHECK(cat.validate().empty());
}

TEST_CASE("presheaf errors") {
  auto site = graph_site();
  FinitePresheaf k(site);
  k.add_element(0, "v");
  CHECK_THROWS_AS(k.add_element(0, "v"), InvalidInput);
  int x = k.add_element(1, "e");
  CHECK_THROWS_AS(k.set_map(0, x, 4), InvalidInput);
  CHECK(k.validate().size() == 2);
}

TEST_CASE("presheaf maps match graph maps") {
  auto site = graph_site();
  std::vector<Graph> graphs = {{1, {}}, {2, {{0, 1}}}, {2, {{0, 1}, {0, 1}}}, {3, {{0, 1}, {1, 2}}},
                               {2, {{0, 0}, {0, 1}, {1, 0}}}};
  for (const auto& a : graphs)
    for (const auto& b : graphs) {
      auto maps = enumerate_presheaf_maps(graph(site, a), graph(site, b), 100000);
      CHECK(static_cast<long long>(maps.size()) == graph_maps(a, b));
      for (const auto& f : maps) CHECK(check_presheaf_map(graph(site, a), graph(site, b), f).empty());
    }
  CHECK_THROWS_AS(enumerate_presheaf_maps(graph(site, graphs[4]), graph(site, graphs[4]), 5), BudgetExceeded);
}

TEST_CASE("coproducts, skeleta and attachments") {
  auto site = graph_site();
  auto a = graph(site, {2, {{0, 1}}});
  auto c = coproduct(a, a);
  CHECK(c.count(0) == 4);
  CHECK(c.validate().empty());
  CHECK(skeleton(c, 0).count(1) == 0);
  auto b = boundary(site, 1);
  auto into = enumerate_presheaf_maps(b, a, 1000);
  CHECK(into.size() == 4);
  auto glued = attach_cells(a, 1, into);
  CHECK(glued.count(1) == 5);
  CHECK(glued.validate().empty());
  PresheafMap bad{{{0}, {}}};
  CHECK_THROWS_AS(attach_cells(a, 1, {bad}), InvalidInput);
}

TEST_CASE("realization of graphs is free") {
  auto site = graph_site();
  auto co = edge_coobject(site);
  auto path = graph(site, {3, {{0, 1}, {1, 2}}});
  auto r = realize(path, co);
  CHECK(r.k.object_count() == 3);
  CHECK(r.k.hom(0, 2).count(0) == 1);
  CHECK(r.k.validate().empty());
  auto x = concat_globs({standard_simplex(1), standard_simplex(0)});
  std::vector<Graph> graphs = {{1, {}}, {2, {{0, 1}}}, {3, {{0, 1}, {1, 2}}}, {3, {{0, 2}, {1, 2}}}};
  for (const auto& g : graphs)
    CHECK(static_cast<long long>(enumerate_semifunctors(realize(graph(site, g), co).k, x, 100000).size()) ==
          free_maps(g, x));

  auto loop = graph(site, {1, {{0, 0}}});
  CHECK_THROWS_AS(realize(loop, co), InvalidInput);
}

TEST_CASE("nerve and adjunction on graphs") {
  auto site = graph_site();
  auto co = edge_coobject(site);
  auto x = concat_globs({standard_simplex(1), standard_simplex(0)});
  auto n = nerve_of(x, co, 1, 100000);
  CHECK(n.presheaf.count(0) == 3);
  // edges of the nerve are the vertices of the homs
  long long edges = 0;
  for (auto [a, b] : x.order_pairs()) edges += x.hom(a, b).count(0);
  CHECK(n.presheaf.count(1) == edges);
  CHECK(n.presheaf.validate().empty());

  auto realized = realize(n.presheaf, co);
  auto eps = counit(n, realized);
  CHECK(validate_semifunctor(realized.k, x, eps).empty());

  for (const auto& g : std::vector<Graph>{{2, {{0, 1}}}, {3, {{0, 1}, {1, 2}}}, {3, {{0, 1}, {0, 2}}}}) {
    auto report = verify_adjunction(graph(site, g), x, co, 100000);
    CHECK_MESSAGE(report.ok(), report.to_string());
    CHECK(report.realization_side == static_cast<std::size_t>(free_maps(g, x)));
  }
}
