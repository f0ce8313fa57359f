#include "doctest.h"

#include <algorithm>
#include <chrono>

#include "hda/errors.hpp"
#include "hda/realize.hpp"

using namespace hda;

namespace {

HomologyGroup z() { return {1, {}}; }

// homology of a sphere of dimension k, degrees 0..d
std::vector<HomologyGroup> sphere(int k, int d) {
  std::vector<HomologyGroup> out(d + 1);
  if (k == 0) {
    out[0] = {2, {}};
    return out;
  }
  out[0] = z();
  if (k <= d) out[k] = z();
  return out;
}

}  // namespace

TEST_CASE("globular cubes") {
  auto t0 = std::chrono::steady_clock::now();
  auto g1 = gl_cube(1);
  CHECK(g1.object_count() == 2);
  CHECK(g1.generators().size() == 1);
  CHECK(find_isomorphism(g1.hom(0, 1), standard_simplex(0)).has_value());

  auto b2 = cube_realize(boundary_cube(2));
  CHECK(b2.k.object_count() == 4);
  auto h = corner_hom(b2, 2);
  CHECK(h.counts() == std::vector<int>{2});
  CHECK(homology(h, 1).groups == sphere(0, 1));

  auto c2 = cube_realize(standard_cube(2));
  CHECK(find_isomorphism(corner_hom(c2, 2), standard_simplex(1)).has_value());

  auto b3 = cube_realize(boundary_cube(3));
  CHECK(homology(corner_hom(b3, 3), 2).groups == sphere(1, 2));
  auto b4 = cube_realize(boundary_cube(4));
  CHECK(homology(corner_hom(b4, 4), 3).groups == sphere(2, 3));
  for (int m = 1; m <= 4; ++m) {
    auto r = cube_realize(standard_cube(m));
    CHECK(homology(corner_hom(r, m), 2).reduced_acyclic());
    CHECK(r.k.validate().empty());
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("globular cubes built in " << secs << " s");
}

TEST_CASE("pushout squares") {
  for (int n = 1; n <= 4; ++n) {
    auto sq = gl_pushout_square(n);
    CHECK(sq.isomorphism);
  }
}

TEST_CASE("co-Yoneda and coproducts") {
  for (auto model : {CubeModel::poset, CubeModel::globular})
    for (int n = 0; n <= 2; ++n) {
      auto r = cube_realize(standard_cube(n), model);
      auto v = co_value(model == CubeModel::poset ? poset_coobject() : gl_coobject(), n);
      CHECK(r.k.object_count() == v.k.object_count());
      auto two = cube_realize(coproduct(standard_cube(n), standard_cube(n)), model);
      CHECK(two.k.object_count() == 2 * r.k.object_count());
      CHECK(two.k.generators().size() == 2 * r.k.generators().size());
    }
  auto pts = cube_realize(coproduct(standard_cube(0), standard_cube(0)));
  CHECK(pts.k.object_count() == 2);
  CHECK(pts.k.order_pairs().empty());
}

TEST_CASE("poset model") {
  auto r = cube_realize(standard_cube(3), CubeModel::poset);
  // thin: every strictly ordered pair of {0<1}^3 has a one-point hom
  int pairs = 0;
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) pairs += p != q && (p & ~q) == 0;
  CHECK(static_cast<int>(r.k.order_pairs().size()) == pairs);
  for (auto [a, b] : r.k.order_pairs()) CHECK(r.k.hom(a, b).counts() == std::vector<int>{1});
  // both models agree on objects and components for one-dimensional K
  for (const auto& kk : {boundary_cube(2), standard_cube(1), coproduct(standard_cube(1), standard_cube(0))}) {
    auto p = cube_realize(kk, CubeModel::poset), g = cube_realize(kk, CubeModel::globular);
    CHECK(p.k.object_count() == g.k.object_count());
    CHECK(p.k.order_pairs() == g.k.order_pairs());
    for (auto [a, b] : p.k.order_pairs())
      CHECK(connected_components(p.k.hom(a, b)).size() == connected_components(g.k.hom(a, b)).size());
  }
}

TEST_CASE("globular nerve and counit") {
  auto x = glob(boundary_simplex(3));
  auto n = gl_nerve(x, 3, 100000);
  CHECK(cube_counts(n.presheaf) == std::vector<int>{2, 4});
  CHECK(n.presheaf.count(2) == 0);
  CHECK(n.presheaf.count(3) == 0);
  CHECK(n.presheaf.validate().empty());

  auto c = cube_counit(x, 2, 100000);
  CHECK(validate_semifunctor(c.realized.k, x, c.counit).empty());
  auto hom = hom_map(c.realized.k, x, c.counit, 0, 1);
  CHECK(c.realized.k.hom(0, 1).counts() == std::vector<int>{4});
  CHECK(is_injective(c.realized.k.hom(0, 1), hom));

  auto one = discrete_semicategory(1);
  auto c1 = cube_counit(one, 2, 1000);
  CHECK(cube_counts(c1.nerve.presheaf) == std::vector<int>{1});
  CHECK(is_isomorphism(c1.realized.k, one, c1.counit));

  auto g1 = gl_cube(1);
  auto n1 = gl_nerve(g1, 1, 1000);
  CHECK(std::find(n1.elements[1].begin(), n1.elements[1].end(), identity_semifunctor(g1)) != n1.elements[1].end());
  CHECK_THROWS_AS(gl_nerve(x, kGlMaxDim + 1, 1000), InvalidInput);
  CHECK_THROWS_AS(gl_nerve(glob(standard_simplex(3)), 2, 3), BudgetExceeded);
}

TEST_CASE("counit probe") {
  auto sphere2 = probe_nonequivalence(boundary_simplex(3), 2, 100000);
  CHECK(sphere2.nerve_counts == std::vector<int>{2, 4, 0, 0});
  CHECK(sphere2.verdict.refuted);
  bool h2 = false;
  for (const auto& w : sphere2.verdict.witnesses)
    if (w.kind == "homology" && w.degree == 2 && w.lhs == "0" && w.rhs == "Z") h2 = true;
  CHECK(h2);
  for (int pts = 1; pts <= 2; ++pts) {
    auto d = probe_nonequivalence(discrete_set(pts), 2, 100000);
    CHECK_FALSE(d.verdict.refuted);
    CHECK(d.verdict.checked_up_to == 2);
  }
  CHECK_FALSE(probe_nonequivalence(standard_simplex(0), 2, 100000).verdict.refuted);
}

TEST_CASE("adjunction on cubes") {
  std::vector<PrecubicalSet> ks = {standard_cube(0), standard_cube(1), boundary_cube(2), empty_precubical()};
  std::vector<Semicategory> xs = {glob(standard_simplex(0)), glob(boundary_simplex(1))};
  for (const auto& k : ks)
    for (const auto& x : xs) {
      auto rep = verify_adjunction(k, x, gl_coobject(), 100000);
      CHECK_MESSAGE(rep.ok(), rep.to_string());
    }
  auto r = verify_adjunction(standard_cube(0), glob(standard_simplex(0)), gl_coobject(), 1000);
  CHECK(r.realization_side == 2);
  CHECK(verify_adjunction(empty_precubical(), glob(standard_simplex(0)), gl_coobject(), 1000).nerve_side == 1);
  // an edge can only go to a vertex of the hom
  auto e = verify_adjunction(standard_cube(1), glob(boundary_simplex(1)), gl_coobject(), 1000);
  CHECK(e.realization_side == 2);
}
