#include "doctest.h"

#include <map>
#include <random>

#include "hda/boxedtree.hpp"
#include "hda/errors.hpp"

using namespace hda;

namespace {

using K = BoxGenerator::Kind;

RootedTree vee() { return RootedTree({"a", "b", "r"}, {2, 2, -1}); }

// every function a -> b, filtered by a direct order check
long long brute_maps(const RootedTree& a, const RootedTree& b, bool injective) {
  long long n = 0;
  std::vector<int> f(a.size(), 0);
  while (true) {
    bool ok = true;
    for (int u = 0; u < a.size() && ok; ++u)
      for (int v = 0; v < a.size() && ok; ++v) {
        if (a.leq(u, v) && !b.leq(f[u], f[v])) ok = false;
        if (injective && u != v && f[u] == f[v]) ok = false;
      }
    n += ok;
    int i = 0;
    while (i < a.size() && ++f[i] == b.size()) f[i++] = 0;
    if (i == a.size()) break;
  }
  return n;
}

BoxedObject box(std::vector<RootedTree> t) { return BoxedObject{std::move(t)}; }

}  // namespace

TEST_CASE("rooted trees") {
  // rooted unlabelled trees with 1..5 nodes
  std::vector<int> expected{1, 1, 2, 4, 9};
  auto trees = enumerate_trees(5);
  for (int n = 1; n <= 5; ++n)
    CHECK(std::count_if(trees.begin(), trees.end(), [&](const RootedTree& t) { return t.size() == n; }) ==
          expected[n - 1]);
  auto y = vee();
  CHECK(y.root() == 2);
  CHECK(y.leq(0, 2));
  CHECK_FALSE(y.leq(0, 1));
  CHECK(y.canonical() == "(()())");
  CHECK(RootedTree::path(3).canonical() == "((()))");
  CHECK_THROWS_AS(RootedTree({"a", "b"}, {-1, -1}), InvalidInput);
  CHECK_THROWS_AS(RootedTree({"a", "b", "c"}, {1, 0, -1}), InvalidInput);
  CHECK_THROWS_AS(RootedTree({"a", "a"}, {1, -1}), InvalidInput);
  auto small = enumerate_trees(3);
  for (const auto& a : small)
    for (const auto& b : small) {
      CHECK(static_cast<long long>(monotone_maps(a, b).size()) == brute_maps(a, b, false));
      CHECK(static_cast<long long>(monotone_maps(a, b, true).size()) == brute_maps(a, b, true));
    }
}

TEST_CASE("boxed morphisms") {
  auto i1 = RootedTree::path(2);
  auto a = box({i1, vee()});
  for (int i = 0; i <= 2; ++i)
    for (int e = 0; e <= 1; ++e) {
      auto d = BoxedMorphism::generator(a, {K::face, i, e, {}, {}});
      auto s = BoxedMorphism::generator(d.target(), {K::degeneracy, i, 0, {}, {}});
      CHECK(compose(s, d) == BoxedMorphism::identity(a));
    }
  auto three = box({i1, vee(), RootedTree::path(3)});
  auto p = BoxedMorphism::generator(three, {K::permutation, 0, 0, {1, 2, 0}, {}});
  auto q = BoxedMorphism::generator(p.target(), {K::permutation, 0, 0, {2, 0, 1}, {}});
  CHECK(compose(q, p) == BoxedMorphism::identity(three));
  auto q2 = BoxedMorphism::generator(p.target(), {K::permutation, 0, 0, {1, 2, 0}, {}});
  auto pq = compose(q2, p);
  // composite permutation, computed on coordinates
  for (int e = 0; e < three.element_count(); ++e) {
    auto c = three.coordinates(e);
    auto d = pq.target().coordinates(pq.eval()[e]);
    CHECK(d == std::vector<int>{c[2], c[0], c[1]});
  }
  // a face commutes with a tree map on an untouched factor
  auto f = BoxGenerator{K::tree_map, 0, 0, {0, 2}, RootedTree::path(3)};
  auto x = box({i1});
  auto lhs = compose(BoxedMorphism::generator(BoxedMorphism::generator(x, f).target(), {K::face, 0, 0, {}, {}}),
                     BoxedMorphism::generator(x, f));
  auto d = BoxedMorphism::generator(x, {K::face, 0, 0, {}, {}});
  auto rhs = compose(BoxedMorphism::generator(d.target(), {K::tree_map, 1, 0, {0, 2}, RootedTree::path(3)}), d);
  CHECK(lhs == rhs);
  CHECK(lhs.word().size() == 2);

  CHECK_THROWS_AS(BoxedMorphism::generator(x, {K::tree_map, 0, 0, {1, 0}, i1}), InvalidInput);
  CHECK_THROWS_AS(BoxedMorphism::generator(x, {K::degeneracy, 3, 0, {}, {}}), InvalidInput);
  CHECK_THROWS_AS(BoxedMorphism::generator(a, {K::permutation, 0, 0, {0, 0}, {}}), InvalidInput);
  CHECK_THROWS_AS(compose(d, d), InvalidInput);
}

TEST_CASE("extensional equality is a congruence") {
  std::mt19937 rng(20261015);
  auto objects = enumerate_boxed_objects(2, 2);
  auto gens = enumerate_generators(objects, 2, 2);
  std::map<std::string, std::vector<BoxedMorphism>> out_of;
  for (const auto& g : gens) out_of[g.source().to_string()].push_back(g);
  int pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = objects[rng() % objects.size()];
    auto walk = [&](int len) {
      auto m = BoxedMorphism::identity(a);
      for (int s = 0; s < len; ++s) {
        const auto& next = out_of[m.target().to_string()];
        m = compose(next[rng() % next.size()], m);
      }
      return m;
    };
    auto u = walk(2), v = walk(2);
    if (!(u == v)) continue;
    ++pairs;
    const auto& next = out_of[u.target().to_string()];
    const auto& g = next[rng() % next.size()];
    CHECK(compose(g, u) == compose(g, v));
    CHECK(cylinder_map(u) == cylinder_map(v));
  }
  CHECK(pairs > 0);
}

TEST_CASE("precylinder") {
  auto p0 = precylinder(box({}));
  CHECK(p0.cyl == box({RootedTree::path(2)}));
  auto p1 = precylinder(box({RootedTree::path(2)}));
  CHECK(augmentation_check(p1).pass);
  auto f = BoxedMorphism::generator(box({RootedTree::path(2)}), {K::tree_map, 0, 0, {0, 2}, vee()});
  CHECK(functoriality_check(f).pass);
  CHECK(cylinder_map(f).source() == p1.cyl);
}

TEST_CASE("sieves and cosieves") {
  CHECK(sieve_cosieve_check(precylinder(box({RootedTree::path(2)}))).pass);
  CHECK(sieve_cosieve_check(precylinder(box({vee()}))).pass);
  auto cyl = precylinder(box({RootedTree::path(2)})).cyl;
  std::vector<bool> upper(cyl.element_count());
  for (int e = 0; e < cyl.element_count(); ++e) upper[e] = cyl.coordinates(e)[0] == 1;
  auto r = is_sieve(cyl, upper);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("<=") != std::string::npos);

  auto bad = precylinder(box({RootedTree::path(2)}));
  bad.d0 = bad.d1;
  CHECK(augmentation_check(bad).pass);
  CHECK_FALSE(sieve_cosieve_check(bad).pass);

  auto a = box({RootedTree::path(2), vee()});
  CHECK(cosieve_stability_check(BoxedMorphism::generator(a, {K::tree_map, 1, 0, {0, 0, 2}, vee()})).pass);
  CHECK(cosieve_stability_check(BoxedMorphism::generator(a, {K::permutation, 0, 0, {1, 0}, {}})).pass);
  CHECK(cosieve_stability_check(BoxedMorphism::generator(a, {K::degeneracy, 0, 0, {}, {}})).pass);
}

TEST_CASE("final objects and asphericity") {
  auto sq = box({RootedTree::path(2), RootedTree::path(2)});
  auto top = final_object(sq);
  REQUIRE(top.has_value());
  CHECK(sq.coordinates(*top) == std::vector<int>{1, 1});
  CHECK(final_object(box({})) == 0);
  auto h = asphericity_evidence(box({RootedTree::path(2)}), 2);
  CHECK(h.groups[0] == HomologyGroup{1, {}});
  CHECK(h.reduced_acyclic());
  CHECK(asphericity_evidence(sq, 2).reduced_acyclic());
  CHECK(asphericity_evidence(box({RootedTree::path(3)}), 2).reduced_acyclic());
}

TEST_CASE("local test report") {
  auto rep = local_test_report(2, 3, 2);
  CHECK(rep.objects == 1 + 4 + 16);
  CHECK(rep.pass());
  CHECK(rep.corrupted_precylinder_detected);
  CHECK(rep.non_sieve_detected);
  CHECK(rep.to_string().find("all hypotheses verified") != std::string::npos);
}

TEST_CASE("tree site and realization") {
  auto site = tree_site(4);
  CHECK(site->object_count() == 1 + 1 + 2 + 4);
  auto trees = enumerate_trees(4);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    long long total = 0;
    for (const auto& s : trees) total += brute_maps(s, trees[t], true);
    CHECK(static_cast<long long>(site->morphisms_into(static_cast<int>(t)).size()) == total);
  }
  auto edge = tree_realize(representable(site, tree_object(*site, RootedTree::path(2))));
  CHECK(edge.k.object_count() == 2);
  CHECK(edge.k.hom(0, 1).counts() == std::vector<int>{1});
  auto y = tree_realize(representable(site, tree_object(*site, vee())));
  CHECK(y.k.object_count() == 3);
  CHECK(y.k.generators().size() == 2);
  CHECK(y.k.order_pairs().size() == 2);
  auto p3 = tree_realize(representable(site, tree_object(*site, RootedTree::path(3))));
  CHECK(p3.k.order_pairs().size() == 3);
  for (auto [a, b] : p3.k.order_pairs()) CHECK(p3.k.hom(a, b).counts() == std::vector<int>{1});
}

TEST_CASE("tree nerve and adjunction") {
  auto site = tree_site(3);
  auto co = tree_poset_coobject(site);
  auto x = glob(boundary_simplex(1));
  auto n = tree_nerve(x, 3, 10000);
  CHECK(n.presheaf.count(tree_object(*site, RootedTree::path(1))) == 2);
  CHECK(n.presheaf.count(tree_object(*site, RootedTree::path(2))) == 2);
  CHECK(n.presheaf.validate().empty());
  for (const auto& t : enumerate_trees(3)) {
    auto k = representable(site, tree_object(*site, t));
    auto own = tree_realize(k);
    auto rep = verify_adjunction(k, own.k, co, 100000);
    CHECK_MESSAGE(rep.ok(), rep.to_string());
    for (const auto& xx : {glob(standard_simplex(0)), x, concat_globs({standard_simplex(0), standard_simplex(1)})}) {
      auto r = verify_adjunction(k, xx, co, 100000);
      CHECK_MESSAGE(r.ok(), r.to_string());
    }
  }
}
