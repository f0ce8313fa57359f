#pragma once

#include <string>
#include <vector>

#include "hda/cube.hpp"
#include "hda/homology.hpp"

namespace hda {

/// Largest cube dimension for which the globular co-object is built.
constexpr int kGlMaxDim = 4;

enum class CubeModel { poset, globular };
std::string to_string(CubeModel m);

/// The sphere and disk attached at the corners of gl(cube(n)).
struct GlCell {
  int corner_source = 0;  // object of gl(boundary(n)) at 0...0
  int corner_target = 0;  // object at 1...1
  FiniteSimplicialSet sphere;  // the corner hom of gl(boundary(n))
  FiniteSimplicialSet disk;
  SimplicialMap inclusion;  // sphere -> disk
};

/// Cocubical semicategory of thin posets {0<1}^n (strict order).
const CellularCoObject& poset_coobject();
/// Globular co-object, complete through cube dimension kGlMaxDim.
const CellularCoObject& gl_coobject();
/// The cell data used at cube dimension n (1 <= n <= kGlMaxDim).
const GlCell& gl_cell(int n);

/// Throws InvalidInput when K has cubes the model does not cover.
Realization cube_realize(const PrecubicalSet& k, CubeModel model = CubeModel::globular);
Semicategory gl_cube(int n);
Semicategory gl_boundary(int n);
/// The hom between the corners 0...0 and 1...1.
FiniteSimplicialSet corner_hom(const Realization& r, int n);

struct PushoutSquare {
  Semicategory pushout;     // gl(boundary(n)) with Glob(disk) attached along Glob(sphere)
  Semicategory cube;        // gl(cube(n))
  Semifunctor comparison;   // pushout -> cube
  bool isomorphism = false;
};
PushoutSquare gl_pushout_square(int n);

NerveResult gl_nerve(const Semicategory& x, int dim_bound, long long budget,
                     CubeModel model = CubeModel::globular);

struct CounitResult {
  NerveResult nerve;
  Realization realized;
  Semifunctor counit;
};
CounitResult cube_counit(const Semicategory& x, int dim_bound, long long budget,
                         CubeModel model = CubeModel::globular);

struct ProbeReport {
  std::vector<int> nerve_counts;  // per cube dimension up to the bound
  int dim_bound = 0;
  int max_degree = 0;
  /// homology of hom(a, b) of the realized nerve and of X, per object pair of the nerve
  std::vector<std::pair<std::string, HomologyReport>> source_homology, target_homology;
  ProbeVerdict verdict;
  std::string to_string() const;
};
/// Counit of glob(y) under the globular model, probed up to max_degree.
ProbeReport probe_nonequivalence(const FiniteSimplicialSet& y, int max_degree, long long budget, int dim_bound = 3);

}  // namespace hda
