#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hda {

/// A monotone map [m] -> [n], stored as the list of its m+1 values.
using Monotone = std::vector<int>;

Monotone identity_map(int n);
/// delta_i : [m-1] -> [m], skipping i.
Monotone coface_map(int m, int i);
/// sigma_j : [m+1] -> [m], hitting j twice.
Monotone codegeneracy_map(int m, int j);
/// All monotone surjections [m] -> [n], ordered by their repeat sets.
std::vector<Monotone> surjections(int m, int n);
/// Positions k with f(k) == f(k+1), ascending.
std::vector<int> repeat_positions(const Monotone& f);
/// The normal-form degeneracy word s_{j1}...s_{jk} (j1 > ... > jk) of a surjection.
std::vector<int> degeneracy_word(const Monotone& surj);
/// Inverse of degeneracy_word for a simplex of dimension `dim`.
Monotone surjection_from_word(int dim, std::span<const int> word);

/// A simplex in Eilenberg-Zilber normal form: a nondegenerate base cell together
/// with the surjection [dim] ->> [base_dim] that degenerates it.
struct Simplex {
  int base_dim = 0;
  int base = 0;
  Monotone surj{0};

  int dim() const { return static_cast<int>(surj.size()) - 1; }
  bool degenerate() const { return dim() != base_dim; }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;
};

/// The nondegenerate simplex given by a stored cell.
Simplex cell_simplex(int dim, int index);

/// Graded finite set of nondegenerate simplices with face maps; degenerate
/// simplices are represented implicitly through Simplex normal forms.
class FiniteSimplicialSet {
 public:
  /// Adds a nondegenerate cell. `faces` must hold dim+1 simplices of dimension
  /// dim-1 (empty for vertices). Names are unique across all dimensions.
  int add_cell(int dim, std::string name, std::vector<Simplex> faces = {});

  /// Largest dimension holding a cell; -1 when empty.
  int max_dim() const;
  int count(int dim) const;
  int total_cells() const;
  bool empty() const { return max_dim() < 0; }
  std::vector<int> counts() const;

  const std::string& name(int dim, int index) const;
  const std::vector<Simplex>& faces(int dim, int index) const;
  std::optional<Simplex> find(const std::string& name) const;

  /// x composed with theta : [m] -> [x.dim()], reduced to normal form.
  Simplex act(const Simplex& x, const Monotone& theta) const;
  Simplex face(const Simplex& x, int i) const;
  Simplex degeneracy(const Simplex& x, int j) const;
  /// Every m-simplex, degenerate ones included.
  std::vector<Simplex> simplices(int m) const;
  /// Vertices of a simplex in order (images of 0..dim).
  std::vector<int> vertices(const Simplex& x) const;

  std::string simplex_name(const Simplex& x) const;

  /// Violations of d_i d_j = d_{j-1} d_i (i < j), one line each.
  std::vector<std::string> check_identities() const;

  bool operator==(const FiniteSimplicialSet&) const = default;

 private:
  void check_simplex(const Simplex& x) const;

  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
  std::unordered_map<std::string, std::pair<int, int>> index_;
};

/// Images of the nondegenerate cells; extended to all simplices by normal forms.
struct SimplicialMap {
  std::vector<std::vector<Simplex>> image;

  Simplex apply(const FiniteSimplicialSet& target, const Simplex& x) const;
  bool operator==(const SimplicialMap&) const = default;
  auto operator<=>(const SimplicialMap&) const = default;
};

std::vector<std::string> check_simplicial_map(const FiniteSimplicialSet& source,
                                              const FiniteSimplicialSet& target,
                                              const SimplicialMap& f);
/// g after f; `target` is the codomain of g.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f,
                      const FiniteSimplicialSet& target);
SimplicialMap identity_map(const FiniteSimplicialSet& a);
/// Bijective on nondegenerate cells and never collapses one.
bool is_isomorphism(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                    const SimplicialMap& f);
bool is_injective(const FiniteSimplicialSet& source, const SimplicialMap& f);
std::optional<SimplicialMap> find_isomorphism(const FiniteSimplicialSet& a,
                                              const FiniteSimplicialSet& b);

/// Optional fixed images per nondegenerate cell of the source.
using CellConstraints = std::vector<std::vector<std::optional<Simplex>>>;

/// Backtracking over simplicial maps a -> b in lexicographic order; `emit`
/// returns true to stop the search. Returns whether it was stopped.
bool search_maps(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                 const CellConstraints* fixed,
                 const std::function<bool(const SimplicialMap&)>& emit);

/// Every simplicial map a -> b, enumerated by backtracking (lexicographic order).
std::vector<SimplicialMap> enumerate_maps(const FiniteSimplicialSet& a,
                                          const FiniteSimplicialSet& b, long long budget);

/// Delta^n: cells are the nonempty subsets of {0..n}, named like "[0,2]".
FiniteSimplicialSet standard_simplex(int n);
/// The boundary of Delta^n; empty for n = 0.
FiniteSimplicialSet boundary_simplex(int n);
/// n discrete points named "p0", "p1", ...
FiniteSimplicialSet discrete_set(int n);
/// The simplex of Delta^n with the given (weakly increasing) vertex sequence.
Simplex delta_simplex(const FiniteSimplicialSet& delta_n, std::span<const int> vertices);

/// Disjoint union; cell names are prefixed to stay unique.
FiniteSimplicialSet disjoint_union(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                                   const std::string& prefix_a = "a.",
                                   const std::string& prefix_b = "b.");

/// The cone a * {apex}: apex is the last vertex of every cone cell.
struct Cone {
  FiniteSimplicialSet set;
  SimplicialMap base_inclusion;
};
Cone cone(const FiniteSimplicialSet& a, const std::string& apex = "apex");

/// Finite product of simplicial sets. Nondegenerate m-cells are tuples of
/// m-simplices with no common repeat position.
class ProductSet {
 public:
  explicit ProductSet(std::vector<FiniteSimplicialSet> factors);

  const FiniteSimplicialSet& set() const { return set_; }
  std::size_t arity() const { return factors_.size(); }
  const FiniteSimplicialSet& factor(std::size_t k) const { return factors_[k]; }
  const std::vector<Simplex>& components(int dim, int index) const;
  /// Normal form of the tuple (components all of one dimension).
  Simplex locate(std::span<const Simplex> components) const;
  /// Components of an arbitrary simplex of the product.
  std::vector<Simplex> split(const Simplex& x) const;
  SimplicialMap projection(std::size_t k) const;

 private:
  std::vector<FiniteSimplicialSet> factors_;
  FiniteSimplicialSet set_;
  std::vector<std::vector<std::vector<Simplex>>> components_;
  std::map<std::vector<Simplex>, int> lookup_;
};

/// Binary product convenience.
ProductSet product(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

/// Union-find quotient of a graded family of simplices, closed under faces and
/// degeneracies. Used by `quotient` and by derived hom computations.
class QuotientBuilder {
 public:
  /// Adds an element; degenerate elements carry a witness x = s_j(lower).
  int add(int degree, std::string name, int lower = -1, int j = -1);
  void set_faces(int e, std::vector<int> faces);
  /// Degeneracies s_0..s_degree; -1 entries are allowed above the top degree.
  void set_degeneracies(int e, std::vector<int> degens);
  void unite(int a, int b);
  std::size_t size() const { return degree_.size(); }

  struct Result {
    FiniteSimplicialSet set;
    std::vector<Simplex> normal_form;         // per element
    std::vector<std::vector<int>> representative;  // per cell: an element of its class
  };
  Result build();

 private:
  int find(int e);
  std::vector<int> degree_;
  std::vector<std::string> name_;
  std::vector<int> lower_;
  std::vector<int> witness_j_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> degens_;
  std::vector<int> parent_;
};

struct Quotient {
  FiniteSimplicialSet set;
  SimplicialMap projection;
};
/// Coequalizer identifying the given pairs of nondegenerate cells.
/// Throws InvalidInput when a pair has mismatched dimensions.
Quotient quotient(const FiniteSimplicialSet& a,
                  const std::vector<std::pair<Simplex, Simplex>>& pairs);
Quotient quotient_by_name(const FiniteSimplicialSet& a,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

/// Vertex partition by edges; components sorted by smallest vertex.
std::vector<std::vector<int>> connected_components(const FiniteSimplicialSet& a);

/// Renames every cell through `rename` (must stay injective).
FiniteSimplicialSet renamed(const FiniteSimplicialSet& a,
                            const std::function<std::string(const std::string&)>& rename);

}  // namespace hda
