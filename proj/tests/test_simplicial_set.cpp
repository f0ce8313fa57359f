#include "doctest.h"

#include <set>

#include "hda/errors.hpp"
#include "hda/simplicial_set.hpp"

using namespace hda;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Nondegenerate m-simplices of Delta^p x Delta^q: strictly increasing lattice
// paths of length m+1, counted by brute force over pairs of monotone sequences.
long long product_cells(int p, int q, int m) {
  long long total = 0;
  std::vector<std::pair<int, int>> path;
  auto rec = [&](auto&& self, int a, int b, int left) -> void {
    if (left == 0) {
      ++total;
      return;
    }
    for (int x = a; x <= p; ++x)
      for (int y = b; y <= q; ++y)
        if ((x > a || y > b)) self(self, x, y, left - 1);
  };
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) rec(rec, a, b, m);
  return total;
}

}  // namespace

TEST_CASE("monotone helpers") {
  CHECK(coface_map(3, 1) == Monotone{0, 2, 3});
  CHECK(codegeneracy_map(2, 1) == Monotone{0, 1, 1, 2});
  CHECK(surjections(3, 1).size() == 3);
  CHECK(surjections(4, 2).size() == static_cast<std::size_t>(binom(4, 2)));
  Monotone s{0, 0, 1, 1, 2};
  CHECK(degeneracy_word(s) == std::vector<int>{2, 0});
  std::vector<int> w{2, 0};
  CHECK(surjection_from_word(4, w) == s);
  std::vector<int> bad{0, 2};
  CHECK_THROWS_AS(surjection_from_word(4, bad), InvalidInput);
}

TEST_CASE("standard and boundary simplices") {
  CHECK(standard_simplex(0).counts() == std::vector<int>{1});
  CHECK(boundary_simplex(0).empty());
  CHECK(boundary_simplex(1).counts() == std::vector<int>{2});
  for (int n = 0; n <= 5; ++n) {
    auto d = standard_simplex(n);
    for (int k = 0; k <= n; ++k) CHECK(d.count(k) == binom(n + 1, k + 1));
    CHECK(d.check_identities().empty());
    auto b = boundary_simplex(n);
    CHECK(b.count(n) == 0);
    CHECK(b.check_identities().empty());
  }
  auto b3 = boundary_simplex(3);
  CHECK(b3.counts() == std::vector<int>{4, 6, 4});
}

TEST_CASE("face and degeneracy actions satisfy the simplicial identities") {
  auto d = standard_simplex(3);
  auto simplices = d.simplices(3);
  for (const auto& x : simplices) {
    int n = x.dim();
    for (int j = 0; j <= n; ++j) {
      // d_j s_j = d_{j+1} s_j = id
      CHECK(d.face(d.degeneracy(x, j), j) == x);
      CHECK(d.face(d.degeneracy(x, j), j + 1) == x);
      for (int i = 0; i <= j; ++i)
        CHECK(d.degeneracy(d.degeneracy(x, j), i) == d.degeneracy(d.degeneracy(x, i), j + 1));
    }
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) CHECK(d.face(d.face(x, j), i) == d.face(d.face(x, i), j - 1));
  }
  std::vector<int> verts{0, 0, 2};
  auto s = delta_simplex(d, verts);
  CHECK(d.simplex_name(s) == "s0([0,2])");
  CHECK(d.vertices(s) == std::vector<int>{0, 0, 2});
}

TEST_CASE("products") {
  auto d0 = standard_simplex(0), d1 = standard_simplex(1), d2 = standard_simplex(2);
  auto p = product(d1, d1);
  CHECK(p.set().counts() == std::vector<int>{4, 5, 2});
  CHECK(p.set().check_identities().empty());
  CHECK(product(boundary_simplex(1), boundary_simplex(1)).set().counts() == std::vector<int>{4});
  auto unit = product(d0, d2);
  CHECK(find_isomorphism(unit.set(), d2).has_value());
  for (int p1 = 0; p1 <= 2; ++p1)
    for (int q1 = 0; q1 <= 2; ++q1) {
      auto pr = product(standard_simplex(p1), standard_simplex(q1));
      for (int m = 0; m <= p1 + q1; ++m) CHECK(pr.set().count(m) == product_cells(p1, q1, m));
      CHECK(pr.set().check_identities().empty());
    }
  // a degenerate tuple locates to the degeneracy of a nondegenerate one
  Simplex v0 = d1.degeneracy(cell_simplex(0, 0), 0);
  std::vector<Simplex> tup{v0, v0};
  auto x = p.locate(tup);
  CHECK(x.degenerate());
  CHECK(p.split(x) == tup);
  // projections are simplicial
  CHECK(check_simplicial_map(p.set(), d1, p.projection(0)).empty());
  auto tri = product(d1, d2);
  CHECK(check_simplicial_map(tri.set(), d2, tri.projection(1)).empty());
}

TEST_CASE("quotients") {
  auto d1 = standard_simplex(1);
  auto same = quotient(d1, {});
  CHECK(same.set.counts() == d1.counts());
  auto circle = quotient_by_name(d1, {{"[0]", "[1]"}});
  CHECK(circle.set.counts() == std::vector<int>{1, 1});
  CHECK(circle.set.check_identities().empty());
  auto pt = quotient_by_name(boundary_simplex(1), {{"[0]", "[1]"}});
  CHECK(pt.set.counts() == std::vector<int>{1});
  CHECK_THROWS_AS(quotient_by_name(d1, {{"[0]", "[0,1]"}}), InvalidInput);
  // gluing two vertices of a triangle keeps every edge
  auto d2 = standard_simplex(2);
  auto c = quotient_by_name(d2, {{"[0]", "[1]"}});
  CHECK(c.set.counts() == std::vector<int>{2, 3, 1});
  auto col = quotient(d2, {{*d2.find("[0,1]"), d2.degeneracy(*d2.find("[0]"), 0)}});
  CHECK(col.set.counts() == std::vector<int>{2, 2, 1});
  CHECK(col.set.check_identities().empty());
  CHECK(check_simplicial_map(d2, col.set, col.projection).empty());
}

TEST_CASE("maps, isomorphisms and enumeration") {
  auto d1 = standard_simplex(1);
  auto maps = enumerate_maps(d1, d1, 100);
  CHECK(maps.size() == 3);  // monotone self maps of [1]
  auto d2 = standard_simplex(2);
  CHECK(enumerate_maps(d1, d2, 100).size() == 6);
  CHECK_THROWS_AS(enumerate_maps(d2, d2, 3), BudgetExceeded);
  auto renamed_d2 = renamed(d2, [](const std::string& s) { return "x" + s; });
  auto iso = find_isomorphism(d2, renamed_d2);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(d2, renamed_d2, *iso));
  CHECK_FALSE(find_isomorphism(d2, boundary_simplex(2)).has_value());
}

TEST_CASE("cones, unions and components") {
  auto b1 = boundary_simplex(1);
  auto c = cone(b1);
  CHECK(c.set.counts() == std::vector<int>{3, 2});
  auto c2 = cone(boundary_simplex(2));
  CHECK(c2.set.counts() == std::vector<int>{4, 6, 3});
  CHECK(c2.set.check_identities().empty());
  auto cd = cone(standard_simplex(1)).set;
  CHECK(find_isomorphism(cd, standard_simplex(2)).has_value());
  CHECK(connected_components(b1).size() == 2);
  CHECK(connected_components(standard_simplex(3)).size() == 1);
  auto u = disjoint_union(standard_simplex(1), standard_simplex(0));
  CHECK(connected_components(u).size() == 2);
  CHECK(u.check_identities().empty());
}
