#include "doctest.h"

#include "hda/errors.hpp"
#include "hda/io.hpp"
#include "hda/realize.hpp"

using namespace hda;

TEST_CASE("simplicial sets round trip") {
  for (const auto& s : {standard_simplex(2), boundary_simplex(3), cone(boundary_simplex(1)).set,
                        product(standard_simplex(1), standard_simplex(1)).set()}) {
    auto back = simplicial_set_from_json(to_json(s));
    CHECK(back.counts() == s.counts());
    CHECK(find_isomorphism(back, s).has_value());
    CHECK(to_json(back) == to_json(s));
  }
  // a degenerate face: the edge of a disk collapsed to a point
  auto j = parse_json(R"({"cells": [["v"], [], ["t"]], "faces": {"t": [["v", [0]], ["v", [0]], ["v", [0]]]}})");
  auto s = simplicial_set_from_json(j);
  CHECK(homology(s, 2).groups[2] == HomologyGroup{1, {}});
}

TEST_CASE("parse errors carry a position or path") {
  CHECK_THROWS_WITH_AS(parse_json("{\"cells\": ["), doctest::Contains("byte"), InvalidInput);
  CHECK_THROWS_WITH_AS(simplicial_set_from_json(parse_json(R"({"cells": [["v"], ["e"]], "faces": {"e": [["v", []]]}})")),
                       doctest::Contains("/faces/e"), InvalidInput);
  CHECK_THROWS_WITH_AS(simplicial_set_from_json(parse_json(R"({"cells": [["v"], ["e"]], "faces": {"e": [["v", [0]], ["v", []]]}})")),
                       doctest::Contains("/faces/e/0"), InvalidInput);
  CHECK_THROWS_WITH_AS(semicategory_from_json(parse_json(R"({"objects": ["a"], "generators": {"a->b": {"cells": [["p"]]}}})")),
                       doctest::Contains("/generators/a->b"), InvalidInput);
  CHECK_THROWS_AS(precubical_from_json(parse_json(R"({"cubes": [["a"], ["a"]]})")), InvalidInput);
  CHECK_THROWS_AS(presheaf_from_json(parse_json(R"({"site": "simplex", "elements": {}})")), InvalidInput);
}

TEST_CASE("semicategories and presheaves round trip") {
  auto sq = gl_pushout_square(3);
  for (const auto& k : {glob(boundary_simplex(1)), concat_globs({standard_simplex(1), standard_simplex(0)}),
                        sq.pushout}) {
    auto back = semicategory_from_json(to_json(k));
    CHECK(back.object_count() == k.object_count());
    CHECK(back.order_pairs() == k.order_pairs());
    for (auto [a, b] : k.order_pairs()) CHECK(back.hom(a, b).counts() == k.hom(a, b).counts());
    CHECK(is_isomorphism(back, k, identity_semifunctor(back)));
  }
  auto f = to_json(sq.comparison, sq.pushout, sq.cube);
  CHECK(f["on_objects"].size() == static_cast<std::size_t>(sq.pushout.object_count()));

  for (const auto& k : {standard_cube(2), boundary_cube(3)}) {
    auto a = precubical_from_json(precubical_to_json(k));
    CHECK(validate_precubical(a).empty());
    CHECK(cube_counts(a) == cube_counts(k));
    auto b = presheaf_from_json(to_json(k));
    CHECK(to_json(b) == to_json(k));
  }
  auto site = tree_site(3);
  auto t = representable(site, tree_object(*site, RootedTree::path(3)));
  auto back = presheaf_from_json(to_json(t));
  CHECK(back.validate().empty());
  CHECK(to_json(back) == to_json(t));
}

TEST_CASE("trees and boxed morphisms round trip") {
  RootedTree vee({"a", "b", "r"}, {2, 2, -1});
  CHECK(tree_from_json(to_json(vee)) == vee);
  BoxedObject a{{RootedTree::path(2), vee}};
  CHECK(boxed_object_from_json(to_json(a)) == a);
  auto d = BoxedMorphism::generator(a, {BoxGenerator::Kind::face, 1, 0, {}, {}});
  auto p = BoxedMorphism::generator(d.target(), {BoxGenerator::Kind::permutation, 0, 0, {2, 0, 1}, {}});
  auto m = compose(p, d);
  CHECK(boxed_morphism_from_json(a, to_json(m)) == m);
  CHECK_THROWS_AS(boxed_morphism_from_json(a, parse_json(R"([{"kind": "degeneracy", "index": 7}])")), InvalidInput);
}
