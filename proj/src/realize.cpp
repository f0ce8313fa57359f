#include "hda/realize.hpp"

#include <algorithm>

#include "hda/errors.hpp"

namespace hda {

std::string to_string(CubeModel m) { return m == CubeModel::poset ? "poset" : "globular"; }

namespace {

// position of the vertex p of cube(n) among the elements of representable(n) at [0]
int vertex_element(int n, int p) {
  const auto& site = *cube_site();
  int m = site.find_morphism(n, 0, {p});
  auto idx = representable_index(site, n);
  return static_cast<int>(std::find(idx[0].begin(), idx[0].end(), m) - idx[0].begin());
}

CellRef vertex_ref(int n, int p) { return {cube_site()->find_morphism(n, 0, {p}), 0}; }

CellularCoObject build_poset() {
  auto site = cube_site();
  CellularCoObject co{site, "poset", std::vector<TopCells>(site->object_count())};
  co.top[0].objects = {"o"};
  co.top[1].generators = {{"e", vertex_ref(1, 0), vertex_ref(1, 1), standard_simplex(0)}};
  auto edge = [&](int p, int q) { return CellRef{site->find_morphism(2, 1, {p, q}), 0}; };
  Simplex pt = cell_simplex(0, 0);
  co.top[2].relations = {{{{edge(0, 1), pt}, {edge(1, 3), pt}}, {{edge(0, 2), pt}, {edge(2, 3), pt}}}};
  return co;
}

struct Globular {
  CellularCoObject co;
  std::vector<GlCell> cells;  // index n
};

Globular build_globular() {
  auto site = cube_site();
  Globular g{{site, "globular", std::vector<TopCells>(site->object_count())}, std::vector<GlCell>(kGlMaxDim + 1)};
  g.co.top[0].objects = {"o"};
  for (int n = 1; n <= kGlMaxDim; ++n) {
    auto bd = realize(boundary(site, n), g.co);
    GlCell cell;
    cell.corner_source = bd.index.objects.at({0, vertex_element(n, 0)}).at(0);
    cell.corner_target = bd.index.objects.at({0, vertex_element(n, (1 << n) - 1)}).at(0);
    cell.sphere = bd.k.hom(cell.corner_source, cell.corner_target);
    if (n == 1) {
      cell.disk = standard_simplex(0);
      cell.inclusion.image = {};
    } else if (n == 2) {
      cell.disk = standard_simplex(1);
      cell.inclusion.image = {{cell_simplex(0, 0), cell_simplex(0, 1)}};
    } else {
      auto c = cone(cell.sphere);
      cell.disk = std::move(c.set);
      cell.inclusion = std::move(c.base_inclusion);
    }
    // generator id of bd -> reference into morphisms_into([n])
    auto idx = representable_index(*site, n);
    std::vector<CellRef> ref(bd.k.generators().size());
    for (const auto& [el, ids] : bd.index.generators)
      for (std::size_t s = 0; s < ids.size(); ++s) ref[ids[s]] = {idx[el.first][el.second], static_cast<int>(s)};
    TopCells& top = g.co.top[n];
    top.generators = {{"c", vertex_ref(n, 0), vertex_ref(n, (1 << n) - 1), cell.disk}};
    for (int d = 0; d <= cell.sphere.max_dim(); ++d)
      for (int i = 0; i < cell.sphere.count(d); ++i) {
        auto chain = bd.k.representative(cell.corner_source, cell.corner_target, cell_simplex(d, i));
        TopRelation rel;
        rel.lhs = {{{0, 0}, cell.inclusion.image[d][i]}};
        for (std::size_t l = 0; l < chain.gens.size(); ++l) rel.rhs.push_back({ref[chain.gens[l]], chain.comps[l]});
        top.relations.push_back(std::move(rel));
      }
    g.cells[n] = std::move(cell);
  }
  return g;
}

const Globular& globular() {
  static const Globular g = build_globular();
  return g;
}

const CellularCoObject& coobject(CubeModel model) {
  return model == CubeModel::poset ? poset_coobject() : gl_coobject();
}

void check_covered(const PrecubicalSet& k, CubeModel model) {
  if (model == CubeModel::globular && cube_dim(k) > kGlMaxDim)
    throw InvalidInput("globular model is built through dimension " + std::to_string(kGlMaxDim));
}

}  // namespace

const CellularCoObject& poset_coobject() {
  static const CellularCoObject co = build_poset();
  return co;
}

const CellularCoObject& gl_coobject() { return globular().co; }

const GlCell& gl_cell(int n) {
  if (n < 1 || n > kGlMaxDim) throw InvalidInput("no globular cell in dimension " + std::to_string(n));
  return globular().cells[n];
}

Realization cube_realize(const PrecubicalSet& k, CubeModel model) {
  check_covered(k, model);
  return realize(k, coobject(model));
}

Semicategory gl_cube(int n) { return cube_realize(standard_cube(n)).k; }

Semicategory gl_boundary(int n) { return cube_realize(boundary_cube(n)).k; }

FiniteSimplicialSet corner_hom(const Realization& r, int n) {
  int a = r.index.objects.at({0, vertex_element(n, 0)}).at(0);
  int b = r.index.objects.at({0, vertex_element(n, (1 << n) - 1)}).at(0);
  if (a == b) return {};
  return r.k.hom(a, b);
}

PushoutSquare gl_pushout_square(int n) {
  const auto& cell = gl_cell(n);
  auto host = gl_boundary(n);
  if (!host.less(cell.corner_source, cell.corner_target)) host.add_order(cell.corner_source, cell.corner_target);
  GlobeAttachment att{cell.corner_source, cell.corner_target, cell.sphere, cell.disk, cell.inclusion,
                      identity_map(cell.sphere), "c"};
  PushoutSquare sq{attach(host, att), gl_cube(n), {}, false};
  // both presentations list the boundary cells in the same order, the new cell last
  sq.comparison.on_objects.resize(sq.pushout.object_count());
  for (int o = 0; o < sq.pushout.object_count(); ++o) sq.comparison.on_objects[o] = o;
  for (const auto& gen : sq.pushout.generators()) sq.comparison.on_generators.push_back(identity_map(gen.cells));
  sq.isomorphism = sq.pushout.object_count() == sq.cube.object_count() &&
                   sq.pushout.generators().size() == sq.cube.generators().size() &&
                   validate_semifunctor(sq.pushout, sq.cube, sq.comparison).empty() &&
                   is_isomorphism(sq.pushout, sq.cube, sq.comparison);
  return sq;
}

NerveResult gl_nerve(const Semicategory& x, int dim_bound, long long budget, CubeModel model) {
  if (model == CubeModel::globular && dim_bound > kGlMaxDim)
    throw InvalidInput("globular model is built through dimension " + std::to_string(kGlMaxDim));
  if (dim_bound < 0 || dim_bound > kCubeMaxDim) throw InvalidInput("nerve dimension bound out of range");
  return nerve_of(x, coobject(model), dim_bound, budget);
}

CounitResult cube_counit(const Semicategory& x, int dim_bound, long long budget, CubeModel model) {
  auto n = gl_nerve(x, dim_bound, budget, model);
  auto r = realize(n.presheaf, coobject(model));
  auto eps = counit(n, r);
  return {std::move(n), std::move(r), std::move(eps)};
}

std::string ProbeReport::to_string() const {
  std::string s = "nerve counts (dimension <= " + std::to_string(dim_bound) + "):";
  for (int c : nerve_counts) s += " " + std::to_string(c);
  s += "\n";
  for (const auto& [pair, h] : source_homology) s += "realized nerve hom " + pair + ": " + h.to_string() + "\n";
  for (const auto& [pair, h] : target_homology) s += "target hom " + pair + ": " + h.to_string() + "\n";
  s += verdict.to_string() + "\n";
  return s;
}

ProbeReport probe_nonequivalence(const FiniteSimplicialSet& y, int max_degree, long long budget, int dim_bound) {
  auto x = glob(y);
  auto c = cube_counit(x, dim_bound, budget);
  ProbeReport rep;
  rep.dim_bound = dim_bound;
  rep.max_degree = max_degree;
  for (int n = 0; n <= dim_bound; ++n) rep.nerve_counts.push_back(c.nerve.presheaf.count(n));
  const auto& src = c.realized.k;
  for (auto [a, b] : src.order_pairs()) {
    std::string pair = "(" + src.object_name(a) + "," + src.object_name(b) + ")";
    rep.source_homology.emplace_back(pair, homology(src.hom(a, b), max_degree));
  }
  for (auto [a, b] : x.order_pairs()) {
    std::string pair = "(" + x.object_name(a) + "," + x.object_name(b) + ")";
    rep.target_homology.emplace_back(pair, homology(x.hom(a, b), max_degree));
  }
  rep.verdict = weak_equivalence_probe(src, x, c.counit, max_degree);
  return rep;
}

}  // namespace hda
