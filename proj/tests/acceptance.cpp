// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hda/boxedtree.hpp"
#include "hda/errors.hpp"
#include "hda/realize.hpp"

using namespace hda;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// reduced homology of a k-sphere in degrees 0..d, from the definition
std::vector<HomologyGroup> sphere_homology(int k, int d) {
  std::vector<HomologyGroup> out(d + 1);
  out[0] = {k == 0 ? 2 : 1, {}};
  if (k > 0 && k <= d) out[k] = {1, {}};
  return out;
}

Semifunctor object_map(std::vector<int> objs) {
  Semifunctor f;
  f.on_objects = std::move(objs);
  return f;
}

std::shared_ptr<const SemicategoryView> share(const Semicategory& k) { return std::make_shared<Semicategory>(k); }

// ---------------------------------------------------------------------------

void counterexample(Outcome& o) {
  auto t = Clock::now();
  auto r = probe_nonequivalence(boundary_simplex(3), 2, 100000);
  o.require(r.nerve_counts.size() >= 3 && r.nerve_counts[0] == 2 && r.nerve_counts[1] == 4 && r.nerve_counts[2] == 0,
            "nerve counts");
  o.require(r.verdict.refuted, "not refuted");
  bool h2 = false;
  for (const auto& w : r.verdict.witnesses) h2 |= w.kind == "homology" && w.degree == 2 && w.lhs == "0" && w.rhs == "Z";
  o.require(h2, "no H2 witness 0 vs Z");
  double s = seconds_since(t);
  o.require(s < 5.0, "took " + std::to_string(s) + " s");
  std::ostringstream c;
  for (auto n : r.nerve_counts) c << n << " ";
  o.note << (o.pass ? "" : " | ") << "counts " << c.str() << "witness H2 0 vs Z, " << s << " s";
}

void discrete_control(Outcome& o) {
  for (int pts = 1; pts <= 2; ++pts) {
    auto r = probe_nonequivalence(discrete_set(pts), 2, 100000);
    o.require(!r.verdict.refuted, std::to_string(pts) + " points refuted");
    o.require(r.verdict.checked_up_to == 2, "checked only up to " + std::to_string(r.verdict.checked_up_to));
    o.require(r.source_homology.size() == r.target_homology.size(), "pair lists differ");
    for (std::size_t i = 0; i < r.source_homology.size() && i < r.target_homology.size(); ++i)
      o.require(r.source_homology[i].second == r.target_homology[i].second, "homology differs");
  }
  if (o.pass) o.note << "1 and 2 points consistent up to degree 2";
}

void sphere_paths(Outcome& o) {
  auto t = Clock::now();
  for (int m = 2; m <= 3; ++m) {
    auto r = cube_realize(boundary_cube(m));
    o.require(homology(corner_hom(r, m), 2).groups == sphere_homology(m - 2, 2),
              "corner hom of boundary " + std::to_string(m));
  }
  for (int m = 0; m <= 3; ++m) {
    auto r = cube_realize(standard_cube(m));
    if (m == 0) {
      o.require(r.k.object_count() == 1, "point");
      continue;
    }
    o.require(homology(corner_hom(r, m), 2).reduced_acyclic(), "cube " + std::to_string(m) + " not acyclic");
  }
  double s = seconds_since(t);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "S0, S1 and acyclic cubes m <= 3, " << s << " s";
}

void pushouts(Outcome& o) {
  for (int n = 0; n <= 3; ++n) {
    auto sq = gl_pushout_square(n + 1);
    o.require(validate_semifunctor(sq.pushout, sq.cube, sq.comparison).empty(), "comparison invalid");
    o.require(sq.isomorphism && is_isomorphism(sq.pushout, sq.cube, sq.comparison),
              "no isomorphism for cube " + std::to_string(n + 1));
  }
  if (o.pass) o.note << "explicit isomorphisms for cubes 1..4";
}

void adjunctions(Outcome& o) {
  int pairs = 0;
  std::vector<PrecubicalSet> ks = {standard_cube(0), standard_cube(1), boundary_cube(2), standard_cube(2),
                                   empty_precubical()};
  std::vector<Semicategory> xs = {glob(standard_simplex(0)), glob(boundary_simplex(1)),
                                  concat_globs({standard_simplex(0), standard_simplex(0)})};
  for (const auto& k : ks)
    for (const auto& x : xs) {
      auto r = verify_adjunction(k, x, gl_coobject(), 100000);
      o.require(r.ok(), "cube pair: " + r.to_string());
      ++pairs;
    }
  int cube_pairs = pairs;
  auto site = tree_site(3);
  auto co = tree_poset_coobject(site);
  for (const auto& t : enumerate_trees(3)) {
    auto k = representable(site, tree_object(*site, t));
    for (const auto& x : {glob(standard_simplex(0)), glob(boundary_simplex(1)), tree_realize(k).k}) {
      auto r = verify_adjunction(k, x, co, 100000);
      o.require(r.ok(), "tree pair " + t.canonical() + ": " + r.to_string());
      ++pairs;
    }
  }
  o.require(cube_pairs >= 6 && pairs - cube_pairs >= 6, "too few pairs");
  if (o.pass) o.note << cube_pairs << " cube pairs, " << pairs - cube_pairs << " tree pairs";
}

// ---------------------------------------------------------------------------

Semicategory random_semicategory(std::mt19937& rng, int n) {
  Semicategory k = discrete_semicategory(n);
  std::vector<FiniteSimplicialSet> shapes{standard_simplex(0), standard_simplex(1), boundary_simplex(1)};
  int g = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 3 == 0) k.add_generator("g" + std::to_string(g++), a, b, shapes[rng() % shapes.size()]);
  return k;
}

bool lifts_against_both(const Semicategory& x, const Semicategory& y, const Semifunctor& p) {
  auto none = discrete_semicategory(0), one = discrete_semicategory(1), two = discrete_semicategory(2);
  for (int yo = 0; yo < y.object_count(); ++yo)
    if (!has_lift(none, one, x, y, object_map({}), p, object_map({}), object_map({yo}), 1000)) return false;
  auto fold = object_map({0, 0});
  for (int a = 0; a < x.object_count(); ++a)
    for (int b = 0; b < x.object_count(); ++b)
      if (p.on_objects[a] == p.on_objects[b] &&
          !has_lift(two, one, x, y, fold, p, object_map({a, b}), object_map({p.on_objects[a]}), 1000))
        return false;
  return true;
}

// bijective on objects, checked directly
bool object_bijective(const Semifunctor& p, int target_objects) {
  if (static_cast<int>(p.on_objects.size()) != target_objects) return false;
  std::set<int> seen(p.on_objects.begin(), p.on_objects.end());
  return static_cast<int>(seen.size()) == target_objects;
}

void synchronization(Outcome& o) {
  std::mt19937 rng(20261015);
  int samples = 0, agree = 0, sync = 0;
  while (samples < 100) {
    int ny = 1 + static_cast<int>(rng() % 5);
    auto y = random_semicategory(rng, ny);
    Semicategory x = rng() % 2 ? y : random_semicategory(rng, 1 + static_cast<int>(rng() % 5));
    auto fs = enumerate_semifunctors(x, y, 100000);
    if (fs.empty()) continue;
    const auto& p = fs[rng() % fs.size()];
    bool b = object_bijective(p, y.object_count());
    o.require(b == is_synchronized(p, y.object_count()), "is_synchronized disagrees with bijectivity");
    agree += b == lifts_against_both(x, y, p);
    sync += b;
    ++samples;
  }
  o.require(agree == samples, std::to_string(samples - agree) + " disagreements");
  o.require(sync > 0 && sync < samples, "sample is one-sided");
  o.note << (o.pass ? "" : " | ") << agree << "/" << samples << " agree (" << sync << " synchronized), seed 20261015";
}

void tensor_cotensor(Outcome& o) {
  auto d0 = standard_simplex(0), d1 = standard_simplex(1), b1 = boundary_simplex(1);
  // pairs whose semifunctors share one object map
  std::vector<std::pair<Semicategory, Semicategory>> pairs = {
      {glob(d0), glob(d1)},
      {glob(d1), glob(d1)},
      {glob(b1), glob(standard_simplex(2))},
      {concat_globs({d0, d0}), concat_globs({d1, d0})},
      {concat_globs({d0, d1}), concat_globs({d1, d1})},
  };
  for (const auto& [k, l] : pairs) {
    auto v0 = enriched_hom(k, share(l), 0, 100000);
    auto v1 = enriched_hom(k, share(l), 1, 100000);
    std::set<std::vector<int>> object_maps;
    for (const auto& f : v0) object_maps.insert(f.on_objects);
    o.require(!v0.empty(), "pair has no semifunctors");
    o.require(object_maps.size() <= 1, "pair has several object maps");
    for (const auto& s : {d0, d1, b1}) {
      // simplicial maps S -> Map(K, L): vertices, edges, vertex pairs
      std::size_t maps_into = s.count(1) == 1 ? v1.size() : s.count(0) == 2 ? v0.size() * v0.size() : v0.size();
      Cotensor cot(s, share(l), max_generator_dim(k), 100000);
      auto into_cot = enumerate_semifunctors(k, cot, 100000);
      auto tk = tensor(s, k);
      auto from_tensor = enumerate_semifunctors(tk.k, l, 100000);
      o.require(into_cot.size() == maps_into && from_tensor.size() == maps_into, "triple sizes differ");
      std::set<Semifunctor> images;
      for (const auto& h : from_tensor) images.insert(transpose(k, tk, l, cot, h));
      o.require(images == std::set<Semifunctor>(into_cot.begin(), into_cot.end()), "transpose is not a bijection");
    }
  }
  // unit and globe laws as explicit isomorphisms
  for (const auto& k : {glob(d1), concat_globs({d1, d0}), glob(b1)}) {
    auto t = tensor(d0, k);
    bool found = false;
    for (const auto& f : enumerate_semifunctors(k, t.k, 100000)) found |= is_isomorphism(k, t.k, f);
    o.require(found, "unit law");
  }
  for (const auto& s : {d1, b1})
    for (const auto& tt : {d0, d1, b1}) {
      auto g = glob(product(s, tt).set());
      auto st = tensor(s, glob(tt));
      bool found = false;
      for (const auto& f : enumerate_semifunctors(g, st.k, 100000)) found |= is_isomorphism(g, st.k, f);
      o.require(found, "globe law");
    }
  for (const auto& k : {glob(d1), concat_globs({d1, d0}), glob(b1), concat_globs({d0, d0, d0})}) {
    auto c = cylinder(k);
    auto id = identity_semifunctor(k);
    o.require(compose(c.p, c.e0, c.cyl.k, k, k) == id && compose(c.p, c.e1, c.cyl.k, k, k) == id, "cylinder");
  }
  if (o.pass) o.note << pairs.size() << " pairs x {D0, D1, dD1}; unit, globe and cylinder laws";
}

void test_category(Outcome& o) {
  auto t = Clock::now();
  auto r = local_test_report(2, 3, 2);
  double s = seconds_since(t);
  o.require(r.pass(), r.to_string());
  o.require(r.corrupted_precylinder_detected && r.non_sieve_detected, "negative controls");
  o.require(s < 60.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << r.objects << " objects, " << r.morphisms << " generators, controls detected, " << s << " s";
}

void structural(Outcome& o) {
  int ssets = 0, semicats = 0;
  for (int n = 0; n <= 4; ++n) {
    o.require(validate_precubical(standard_cube(n)).empty(), "cube " + std::to_string(n));
    if (n > 0) o.require(validate_precubical(boundary_cube(n)).empty(), "boundary cube " + std::to_string(n));
  }
  auto sset = [&](const FiniteSimplicialSet& s) {
    o.require(s.check_identities().empty(), "simplicial identities");
    ++ssets;
  };
  auto semi = [&](const SemicategoryView& k) {
    o.require(check_associativity(k).empty(), "associativity");
    for (int a = 0; a < k.object_count(); ++a)
      for (int b = 0; b < k.object_count(); ++b)
        if (k.less(a, b)) sset(k.hom(a, b));
    ++semicats;
  };
  for (int n = 0; n <= 3; ++n) {
    sset(standard_simplex(n));
    sset(boundary_simplex(n + 1));
    sset(cone(boundary_simplex(n + 1)).set);
    sset(product(standard_simplex(1), standard_simplex(n)).set());
  }
  for (int n = 0; n <= 4; ++n) {
    semi(gl_cube(n));
    if (n > 0) semi(gl_boundary(n));
    semi(cube_realize(standard_cube(n), CubeModel::poset).k);
  }
  for (int n = 1; n <= 4; ++n) semi(gl_pushout_square(n).pushout);
  for (const auto& k : {glob(standard_simplex(1)), concat_globs({standard_simplex(1), boundary_simplex(1)})}) {
    semi(tensor(standard_simplex(1), k).k);
    semi(cylinder(k).cyl.k);
  }
  semi(Cotensor(boundary_simplex(1), share(glob(standard_simplex(1))), 1, 100000));
  auto site = tree_site(3);
  for (const auto& t : enumerate_trees(3)) semi(tree_realize(representable(site, tree_object(*site, t))).k);
  semi(cube_counit(glob(boundary_simplex(3)), 2, 100000).realized.k);
  if (o.pass) o.note << "0 violations on " << ssets << " simplicial sets and " << semicats << " semicategories";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"counterexample reproduction", counterexample},
      {"discrete control", discrete_control},
      {"sphere path spaces", sphere_paths},
      {"pushout squares", pushouts},
      {"adjunction bijections", adjunctions},
      {"synchronization vs lifting", synchronization},
      {"tensor/cotensor laws", tensor_cotensor},
      {"test-category hypotheses", test_category},
      {"structural identities", structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.note.str()
              << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
