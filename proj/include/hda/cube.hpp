#pragma once

#include <string>
#include <vector>

#include "hda/presheaf.hpp"

namespace hda {

/// Largest cube dimension of the built-in cube site.
constexpr int kCubeMaxDim = 6;

/// Objects [0..kCubeMaxDim] (site object n is [n]); points of [n] are bit masks
/// of {0<1}^n; generators d(i,eps) : [n-1] -> [n] insert eps at coordinate i.
/// Morphisms are labelled by words in {0,1,*}.
SitePtr cube_site();
/// Index of d(i,eps) : [n-1] -> [n], 1 <= i <= n.
int face_generator(int n, int i, int eps);

using PrecubicalSet = FinitePresheaf;

PrecubicalSet empty_precubical();
PrecubicalSet standard_cube(int n);
/// standard_cube(n) without its top cell; empty for n = 0.
PrecubicalSet boundary_cube(int n);

/// Largest dimension holding a cube; -1 when empty.
int cube_dim(const PrecubicalSet& k);
std::vector<int> cube_counts(const PrecubicalSet& k);
int face(const PrecubicalSet& k, int n, int i, int eps, int x);
void set_face(PrecubicalSet& k, int n, int i, int eps, int x, int y);

/// Every failed instance of d(i,a) d(j,b) = d(j,b) d(i+1,a) (j <= i) and every unset face.
std::vector<std::string> validate_precubical(const PrecubicalSet& k);

/// Pushout of K <- (coproduct of boundaries) -> (coproduct of n-cubes).
PrecubicalSet attach_cubes(const PrecubicalSet& k, int n, const std::vector<PresheafMap>& along,
                           const std::vector<std::string>& names = {});
/// K rebuilt from the empty set by attaching its cells dimension by dimension.
PrecubicalSet reconstruct(const PrecubicalSet& k);

struct GeneratingCofibration {
  std::string name;
  PrecubicalSet source;
  PrecubicalSet target;
  PresheafMap map;
  bool fold = false;
};
/// boundary(n) -> cube(n) for n <= max_n, then the fold of two points.
std::vector<GeneratingCofibration> generating_cofibrations(int max_n);

}  // namespace hda
