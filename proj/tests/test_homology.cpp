#include "doctest.h"

#include <cstdint>

#include "hda/category.hpp"
#include "hda/homology.hpp"

using namespace hda;

namespace {

// Rank over Z/p of a small integer matrix, by plain Gaussian elimination.
int rank_mod_p(IntMatrix m, std::int64_t p = 1000003) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (((m.at(i, c) % p) + p) % p != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    std::int64_t a = ((m.at(r, c) % p) + p) % p, inv = 1, e = p - 2, b = a;
    while (e) { if (e & 1) inv = inv * b % p; b = b * b % p; e >>= 1; }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      std::int64_t f = ((m.at(i, c) % p) + p) % p * inv % p;
      if (!f) continue;
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = ((m.at(i, j) - f * (m.at(r, j) % p)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Betti numbers over a large prime field; equal to rational ones for torsion-free inputs.
std::vector<std::int64_t> betti_mod_p(const FiniteSimplicialSet& a, int top) {
  std::vector<std::int64_t> b;
  for (int n = 0; n <= top; ++n)
    b.push_back(a.count(n) - rank_mod_p(boundary_matrix(a, n)) - rank_mod_p(boundary_matrix(a, n + 1)));
  return b;
}

std::vector<std::int64_t> ranks(const HomologyReport& r) {
  std::vector<std::int64_t> out;
  for (const auto& g : r.groups) out.push_back(g.rank);
  return out;
}

}  // namespace

TEST_CASE("smith normal form") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(1, 0) = 6; m.at(1, 1) = 8;
  CHECK(invariant_factors(m) == std::vector<std::int64_t>{2, 4});
  IntMatrix z(3, 3);
  CHECK(invariant_factors(z).empty());
  auto e = column_echelon(m);
  CHECK(e.rank == 2);
  CHECK(multiply(m, e.v) == e.reduced);
  CHECK(multiply(e.v, e.v_inverse) == IntMatrix::identity(2));
}

TEST_CASE("homology of standard examples") {
  auto d2 = homology(standard_simplex(2), 2);
  CHECK(d2.reduced_acyclic());
  auto s2 = homology(boundary_simplex(3), 2);
  CHECK(s2.groups[0] == HomologyGroup{1, {}});
  CHECK(s2.groups[1].zero());
  CHECK(s2.groups[2] == HomologyGroup{1, {}});
  auto empty = homology(FiniteSimplicialSet{}, 2);
  for (const auto& g : empty.groups) CHECK(g.zero());
  auto circle = quotient_by_name(standard_simplex(1), {{"[0]", "[1]"}}).set;
  CHECK(homology(circle, 1).groups[1] == HomologyGroup{1, {}});
}

TEST_CASE("torsion: a disk glued twice around a loop") {
  FiniteSimplicialSet rp;
  rp.add_cell(0, "v");
  Simplex v{0, 0, {0}};
  rp.add_cell(1, "c", {v, v});
  Simplex c{1, 0, {0, 1}};
  Simplex flat{0, 0, {0, 0}};
  rp.add_cell(2, "t", {c, flat, c});
  REQUIRE(rp.check_identities().empty());
  auto h = homology(rp, 2);
  CHECK(h.groups[0] == HomologyGroup{1, {}});
  CHECK(h.groups[1] == HomologyGroup{0, {2}});
  CHECK(h.groups[2].zero());
}

TEST_CASE("euler characteristic equals alternating sum of ranks") {
  std::vector<FiniteSimplicialSet> sets{standard_simplex(2), boundary_simplex(3), boundary_simplex(1),
                                        product(standard_simplex(1), standard_simplex(1)).set(),
                                        product(boundary_simplex(2), boundary_simplex(2)).set(),
                                        disjoint_union(standard_simplex(1), standard_simplex(0))};
  for (const auto& s : sets) {
    auto h = homology(s, std::max(s.max_dim(), 0));
    std::int64_t chi = 0;
    for (int k = 0; k <= h.computed_up_to; ++k) chi += (k % 2 ? -1 : 1) * h.groups[k].rank;
    CHECK(chi == euler_characteristic(s));
    CHECK(ranks(h) == betti_mod_p(s, h.computed_up_to));
  }
}

TEST_CASE("kunneth rank formula") {
  std::vector<FiniteSimplicialSet> fs{standard_simplex(1), boundary_simplex(1), boundary_simplex(2)};
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto p = product(a, b).set();
      int top = p.max_dim();
      auto ha = homology(a, top), hb = homology(b, top), hp = homology(p, top);
      for (int n = 0; n <= top; ++n) {
        std::int64_t expect = 0;
        for (int i = 0; i <= n; ++i) expect += ha.groups[i].rank * hb.groups[n - i].rank;
        CHECK(hp.groups[n].rank == expect);
      }
    }
}

TEST_CASE("homology is invariant under renaming") {
  auto q = quotient_by_name(standard_simplex(2), {{"[0]", "[2]"}}).set;
  auto r = renamed(q, [](const std::string& s) { return "renamed_" + s; });
  CHECK(homology(q, 2) == homology(r, 2));
}

TEST_CASE("induced maps on homology") {
  auto s2 = boundary_simplex(3);
  FiniteSimplicialSet pts = discrete_set(4);
  SimplicialMap inc;
  inc.image = {{cell_simplex(0, 0), cell_simplex(0, 1), cell_simplex(0, 2), cell_simplex(0, 3)}};
  CHECK_FALSE(induces_homology_iso(pts, s2, inc, 0));
  auto id = identity_map(s2);
  for (int n = 0; n <= 2; ++n) CHECK(induces_homology_iso(s2, s2, id, n));
  // double cover of the circle: iso on H0, not on H1
  FiniteSimplicialSet c2;
  c2.add_cell(0, "x"); c2.add_cell(0, "y");
  c2.add_cell(1, "e", {Simplex{0, 1, {0}}, Simplex{0, 0, {0}}});
  c2.add_cell(1, "f", {Simplex{0, 0, {0}}, Simplex{0, 1, {0}}});
  FiniteSimplicialSet c1;
  c1.add_cell(0, "p");
  c1.add_cell(1, "l", {Simplex{0, 0, {0}}, Simplex{0, 0, {0}}});
  SimplicialMap cover;
  cover.image = {{cell_simplex(0, 0), cell_simplex(0, 0)}, {cell_simplex(1, 0), cell_simplex(1, 0)}};
  REQUIRE(check_simplicial_map(c2, c1, cover).empty());
  CHECK(induces_homology_iso(c2, c1, cover, 0));
  CHECK_FALSE(induces_homology_iso(c2, c1, cover, 1));
}

TEST_CASE("nerves of finite categories") {
  FiniteCategory one;
  one.add_object("o");
  CHECK(nerve(one, 3).set.counts() == std::vector<int>{1});
  auto interval = poset_category({"0", "1"}, {{true, true}, {false, true}});
  CHECK(interval.validate().empty());
  CHECK(find_isomorphism(nerve(interval, 3).set, standard_simplex(1)).has_value());
  // [1] x [1]
  std::vector<std::string> names{"00", "01", "10", "11"};
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) leq[i][j] = (i & j) == i;
  auto sq = nerve(poset_category(names, leq), 3);
  CHECK(sq.truncated_at == 3);
  CHECK(sq.set.counts() == std::vector<int>{4, 5, 2});
  CHECK(sq.set.check_identities().empty());
  CHECK(homology(sq.set, 2).reduced_acyclic());
  // a category with a nontrivial idempotent-free endomorphism group Z/2
  FiniteCategory g;
  g.add_object("*");
  int t = g.add_morphism("t", 0, 0);
  g.set_composite(t, t, g.identity(0));
  CHECK(g.validate().empty());
  auto bz2 = nerve(g, 3);
  CHECK(bz2.set.counts() == std::vector<int>{1, 1, 1, 1});
  CHECK(bz2.set.check_identities().empty());
  auto h = homology(bz2.set, 2);
  CHECK(h.groups[1] == HomologyGroup{0, {2}});
}
