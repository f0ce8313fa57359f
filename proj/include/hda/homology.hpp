#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hda/intlinalg.hpp"
#include "hda/simplicial_set.hpp"

namespace hda {

/// A finitely generated abelian group Z^rank + sum Z/t.
struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;

  bool zero() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyReport {
  std::vector<HomologyGroup> groups;  // degrees 0..computed_up_to
  int computed_up_to = -1;

  /// Reduced homology vanishes in every computed degree.
  bool reduced_acyclic() const;
  std::string to_string() const;
  bool operator==(const HomologyReport&) const = default;
};

/// Normalized boundary d_n : C_n -> C_{n-1} on nondegenerate cells.
IntMatrix boundary_matrix(const FiniteSimplicialSet& a, int n);
HomologyReport homology(const FiniteSimplicialSet& a, int max_degree);
std::int64_t euler_characteristic(const FiniteSimplicialSet& a);

/// Matrix of the normalized chain map f_n : C_n(a) -> C_n(b).
IntMatrix chain_map_matrix(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                           const SimplicialMap& f, int n);
/// Whether f induces an isomorphism H_n(a) -> H_n(b).
bool induces_homology_iso(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                          const SimplicialMap& f, int n);

}  // namespace hda
