#include <algorithm>

#include "hda/errors.hpp"
#include "hda/semicat.hpp"
#include "repeats.hpp"

namespace hda {

SimplicialMap product_reindex(const ProductSet& from, const ProductSet& to, const Monotone& theta) {
  const auto& src = from.set();
  const auto& delta = to.factor(1);
  SimplicialMap out;
  out.image.resize(std::max(src.max_dim() + 1, 0));
  for (int d = 0; d <= src.max_dim(); ++d)
    for (int c = 0; c < src.count(d); ++c) {
      const auto& uv = from.components(d, c);
      std::vector<int> verts;
      for (int v : from.factor(1).vertices(uv[1])) verts.push_back(theta.at(v));
      std::vector<Simplex> t{uv[0], delta_simplex(delta, verts)};
      out.image[d].push_back(to.locate(t));
    }
  return out;
}

FunctionComplex function_complex(const FiniteSimplicialSet& s, const FiniteSimplicialSet& p,
                                 int degree_bound, long long budget) {
  Budget spent(budget, "function complex enumeration");
  FunctionComplex fc;
  fc.cell_maps.resize(degree_bound + 1);
  fc.lookup.resize(degree_bound + 1);
  for (int m = 0; m <= degree_bound; ++m) {
    fc.domains.emplace_back(std::vector<FiniteSimplicialSet>{s, standard_simplex(m)});
    const auto& dom = fc.domains[m];
    std::vector<SimplicialMap> faces_in, sections;
    for (int i = 0; m > 0 && i <= m; ++i)
      faces_in.push_back(product_reindex(fc.domains[m - 1], dom, coface_map(m, i)));
    for (int j = 0; j < m; ++j)
      sections.push_back(product_reindex(dom, fc.domains[m - 1], codegeneracy_map(m - 1, j)));
    int index = 0;
    search_maps(dom.set(), p, nullptr, [&](const SimplicialMap& f) {
      spent.spend();
      for (int j = 0; j < m; ++j) {
        SimplicialMap g = compose(f, faces_in[j], p);
        if (compose(g, sections[j], p) == f) {
          fc.lookup[m][f] = fc.set.degeneracy(fc.lookup[m - 1].at(g), j);
          return false;
        }
      }
      std::vector<Simplex> faces;
      for (int i = 0; m > 0 && i <= m; ++i) faces.push_back(fc.lookup[m - 1].at(compose(f, faces_in[i], p)));
      int c = fc.set.add_cell(m, "m" + std::to_string(m) + "_" + std::to_string(index++), std::move(faces));
      fc.lookup[m][f] = cell_simplex(m, c);
      fc.cell_maps[m].push_back(f);
      return false;
    });
  }
  return fc;
}

Cotensor::Cotensor(FiniteSimplicialSet s, std::shared_ptr<const SemicategoryView> k, int degree_bound,
                   long long budget)
    : s_(std::move(s)), k_(std::move(k)), bound_(degree_bound) {
  for (int a = 0; a < k_->object_count(); ++a)
    for (int b = 0; b < k_->object_count(); ++b)
      if (k_->less(a, b)) homs_.emplace(std::make_pair(a, b), function_complex(s_, k_->hom(a, b), bound_, budget));
}

const FiniteSimplicialSet& Cotensor::hom(int a, int b) const {
  auto it = homs_.find({a, b});
  return it == homs_.end() ? empty_ : it->second.set;
}

const FunctionComplex& Cotensor::complex(int a, int b) const {
  auto it = homs_.find({a, b});
  if (it == homs_.end()) throw InvalidInput("no hom between these objects");
  return it->second;
}

SimplicialMap Cotensor::as_map(int a, int b, const Simplex& x) const {
  const auto& fc = complex(a, b);
  if (x.dim() > bound_) throw InvalidInput("simplex lies above the cotensor degree bound");
  const SimplicialMap& f = fc.cell_maps.at(x.base_dim).at(x.base);
  if (!x.degenerate()) return f;
  auto reindex = product_reindex(fc.domains[x.dim()], fc.domains[x.base_dim], x.surj);
  return hda::compose(f, reindex, k_->hom(a, b));
}

Simplex Cotensor::from_map(int a, int b, int m, const SimplicialMap& f) const {
  const auto& fc = complex(a, b);
  if (m > bound_) throw InvalidInput("map lies above the cotensor degree bound");
  auto it = fc.lookup.at(m).find(f);
  if (it == fc.lookup[m].end()) throw InvalidInput("map is not simplicial into the hom");
  return it->second;
}

Simplex Cotensor::compose(int a, int b, int c, const Simplex& x, const Simplex& y) const {
  if (x.dim() != y.dim()) throw InvalidInput("composing simplices of different dimensions");
  auto common = detail::common_repeats(x.surj, y.surj);
  if (!common.empty()) {
    Simplex xs{x.base_dim, x.base, detail::strip(x.surj, common)};
    Simplex ys{y.base_dim, y.base, detail::strip(y.surj, common)};
    return hom(a, c).act(compose(a, b, c, xs, ys), detail::collapse_map(x.dim(), common));
  }
  const int m = x.dim();
  SimplicialMap fx = as_map(a, b, x), fy = as_map(b, c, y);
  const auto& dom = complex(a, c).domains.at(m).set();
  const auto &hab = k_->hom(a, b), &hbc = k_->hom(b, c);
  SimplicialMap out;
  out.image.resize(std::max(dom.max_dim() + 1, 0));
  for (int d = 0; d <= dom.max_dim(); ++d)
    for (int i = 0; i < dom.count(d); ++i) {
      Simplex z = cell_simplex(d, i);
      out.image[d].push_back(k_->compose(a, b, c, fx.apply(hab, z), fy.apply(hbc, z)));
    }
  return from_map(a, c, m, out);
}

int max_generator_dim(const Semicategory& k) {
  int d = 0;
  for (const auto& g : k.generators()) d = std::max(d, g.cells.max_dim());
  return d;
}

std::vector<Semifunctor> enriched_hom(const Semicategory& k, std::shared_ptr<const SemicategoryView> l,
                                      int n, long long budget) {
  Cotensor cot(standard_simplex(n), std::move(l), max_generator_dim(k), budget);
  return enumerate_semifunctors(k, cot, budget);
}

Semifunctor transpose(const Semicategory& k, const Tensored& tensored, const SemicategoryView& l,
                      const Cotensor& cot, const Semifunctor& h) {
  Semifunctor out;
  out.on_objects = h.on_objects;
  for (std::size_t g = 0; g < k.generators().size(); ++g) {
    const auto& gen = k.generators()[g];
    int fs = h.on_objects[gen.source], ft = h.on_objects[gen.target];
    SimplicialMap m;
    m.image.resize(std::max(gen.cells.max_dim() + 1, 0));
    for (int d = 0; d <= gen.cells.max_dim(); ++d)
      for (int i = 0; i < gen.cells.count(d); ++i) {
        Simplex x = cell_simplex(d, i);
        const auto& dom = cot.complex(fs, ft).domains.at(d);
        SimplicialMap f;
        f.image.resize(std::max(dom.set().max_dim() + 1, 0));
        for (int r = 0; r <= dom.set().max_dim(); ++r)
          for (int c = 0; c < dom.set().count(r); ++c) {
            const auto& uv = dom.components(r, c);
            Simplex xr = gen.cells.act(x, dom.factor(1).vertices(uv[1]));
            f.image[r].push_back(
                apply_chain(tensored.k, l, h, tensored.chain(static_cast<int>(g), uv[0], xr)));
          }
        m.image[d].push_back(cot.from_map(fs, ft, d, f));
      }
    out.on_generators.push_back(std::move(m));
  }
  return out;
}

}  // namespace hda
