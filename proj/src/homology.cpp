#include "hda/homology.hpp"

#include <sstream>

namespace hda {

std::string HomologyGroup::to_string() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (auto t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

bool HomologyReport::reduced_acyclic() const {
  for (int k = 0; k <= computed_up_to; ++k) {
    const auto& g = groups[k];
    if (k == 0 ? !(g.rank == 1 && g.torsion.empty()) : !g.zero()) return false;
  }
  return true;
}

std::string HomologyReport::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= computed_up_to; ++k) os << (k ? ", " : "") << "H" << k << "=" << groups[k].to_string();
  return os.str();
}

IntMatrix boundary_matrix(const FiniteSimplicialSet& a, int n) {
  IntMatrix m(n > 0 ? a.count(n - 1) : 0, a.count(n));
  if (n <= 0) return m;
  for (int c = 0; c < a.count(n); ++c)
    for (int i = 0; i <= n; ++i) {
      const Simplex& f = a.faces(n, c)[i];
      if (f.degenerate()) continue;
      m.at(f.base, c) += (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

HomologyReport homology(const FiniteSimplicialSet& a, int max_degree) {
  HomologyReport rep;
  rep.computed_up_to = max_degree;
  std::vector<int> ranks(max_degree + 3, 0);
  std::vector<std::vector<std::int64_t>> factors(max_degree + 3);
  for (int n = 1; n <= max_degree + 1; ++n) {
    factors[n] = invariant_factors(boundary_matrix(a, n));
    ranks[n] = static_cast<int>(factors[n].size());
  }
  for (int n = 0; n <= max_degree; ++n) {
    HomologyGroup g;
    g.rank = a.count(n) - ranks[n] - ranks[n + 1];
    for (auto t : factors[n + 1])
      if (t > 1) g.torsion.push_back(t);
    rep.groups.push_back(std::move(g));
  }
  return rep;
}

std::int64_t euler_characteristic(const FiniteSimplicialSet& a) {
  std::int64_t chi = 0;
  for (int n = 0; n <= a.max_dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * a.count(n);
  return chi;
}

IntMatrix chain_map_matrix(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                           const SimplicialMap& f, int n) {
  IntMatrix m(b.count(n), a.count(n));
  for (int c = 0; c < a.count(n); ++c) {
    const Simplex& y = f.image.at(n).at(c);
    if (!y.degenerate()) m.at(y.base, c) += 1;
  }
  return m;
}

bool induces_homology_iso(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                          const SimplicialMap& f, int n) {
  auto ha = homology(a, n), hb = homology(b, n);
  if (!(ha.groups[n] == hb.groups[n])) return false;
  // surjectivity: boundaries of b plus images of cycles of a span the cycles of b
  auto za = column_echelon(boundary_matrix(a, n));
  auto zb = column_echelon(boundary_matrix(b, n));
  const int kb = b.count(n) - zb.rank;
  if (kb == 0) return true;
  IntMatrix fm = chain_map_matrix(a, b, f, n);
  std::vector<std::vector<std::int64_t>> gens;
  IntMatrix bd = boundary_matrix(b, n + 1);
  for (int c = 0; c < bd.cols(); ++c) gens.push_back(bd.column(c));
  for (int c = za.rank; c < a.count(n); ++c) gens.push_back(multiply(fm, za.v.column(c)));
  IntMatrix coords(kb, static_cast<int>(gens.size()));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto w = multiply(zb.v_inverse, gens[g]);
    for (int k = 0; k < kb; ++k) coords.at(k, static_cast<int>(g)) = w[zb.rank + k];
  }
  auto inv = invariant_factors(coords);
  if (static_cast<int>(inv.size()) != kb) return false;
  for (auto t : inv)
    if (t != 1) return false;
  return true;
}

}  // namespace hda
