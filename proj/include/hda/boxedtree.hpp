#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hda/homology.hpp"
#include "hda/presheaf.hpp"

namespace hda {

/// A finite rooted tree read as a poset directed towards the root.
class RootedTree {
 public:
  RootedTree() = default;
  /// parent[v] = -1 for the root.
  RootedTree(std::vector<std::string> nodes, std::vector<int> parent);
  /// Path 0 < 1 < ... < n-1 with names "0".."n-1".
  static RootedTree path(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::string& node(int v) const { return nodes_.at(v); }
  int parent(int v) const { return parent_.at(v); }
  int root() const { return root_; }
  /// v <= w iff w lies on the path from v to the root.
  bool leq(int v, int w) const { return leq_.at(v).at(w); }
  std::optional<int> find(const std::string& name) const;
  /// Isomorphism-invariant encoding, "()" for a point.
  std::string canonical() const;
  bool operator==(const RootedTree& o) const { return nodes_ == o.nodes_ && parent_ == o.parent_; }

 private:
  std::vector<std::string> nodes_;
  std::vector<int> parent_;
  std::vector<std::vector<bool>> leq_;
  int root_ = -1;
};

/// One tree per isomorphism class with 1..max_nodes nodes, smallest first.
std::vector<RootedTree> enumerate_trees(int max_nodes);
/// All monotone maps a -> b (node images).
std::vector<std::vector<int>> monotone_maps(const RootedTree& a, const RootedTree& b, bool injective_only = false);

/// A tuple of trees; the empty tuple is the terminal object.
struct BoxedObject {
  std::vector<RootedTree> factors;

  int element_count() const;
  /// Mixed-radix coordinates of an element of the product poset.
  std::vector<int> coordinates(int e) const;
  int element(const std::vector<int>& coords) const;
  bool leq(int e, int f) const;
  std::string to_string() const;
  bool operator==(const BoxedObject&) const = default;
};

struct BoxGenerator {
  enum class Kind { tree_map, face, degeneracy, permutation };
  Kind kind = Kind::tree_map;
  int index = 0;              // factor (tree map, degeneracy) or insertion position (face)
  int eps = 0;                // face value
  std::vector<int> map;       // tree map node images or permutation
  RootedTree target;          // tree map codomain
  std::string to_string() const;
};

/// A generator word with its evaluation on product posets; equality is extensional.
class BoxedMorphism {
 public:
  static BoxedMorphism identity(const BoxedObject& a);
  /// A single generator out of a; throws InvalidInput when ill-typed or not monotone.
  static BoxedMorphism generator(const BoxedObject& a, const BoxGenerator& g);

  const BoxedObject& source() const { return source_; }
  const BoxedObject& target() const { return target_; }
  const std::vector<BoxGenerator>& word() const { return word_; }
  const std::vector<int>& eval() const { return eval_; }
  /// Whether the evaluation preserves the order.
  bool monotone() const;

  bool operator==(const BoxedMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && eval_ == o.eval_;
  }

  friend BoxedMorphism compose(const BoxedMorphism& g, const BoxedMorphism& f);

 private:
  BoxedObject source_, target_;
  std::vector<BoxGenerator> word_;
  std::vector<int> eval_;
};

/// g after f; throws InvalidInput on a type mismatch.
BoxedMorphism compose(const BoxedMorphism& g, const BoxedMorphism& f);

struct Precylinder {
  BoxedObject cyl;
  BoxedMorphism d0, d1, sigma;
};
/// I(a) = [1] x a with endpoint inclusions and the projection.
Precylinder precylinder(const BoxedObject& a);
/// [1] x f : I(a) -> I(a').
BoxedMorphism cylinder_map(const BoxedMorphism& f);

struct CheckResult {
  bool pass = true;
  std::string witness;  // empty on pass
};
/// sigma d0 = id and sigma d1 = id.
CheckResult augmentation_check(const Precylinder& p);
/// ([1] x f) d1 = d1' f and the same for d0.
CheckResult functoriality_check(const BoxedMorphism& f);
/// image(d0) is a sieve, image(d1) its complementary cosieve, d1 lands in it.
CheckResult sieve_cosieve_check(const Precylinder& p);
/// Whether a subset of elements is downward closed; the witness names a violating pair.
CheckResult is_sieve(const BoxedObject& a, const std::vector<bool>& subset);
/// ([1] x f)({1} x a) lies in {1} x a'.
CheckResult cosieve_stability_check(const BoxedMorphism& f);
/// The greatest element, if any.
std::optional<int> final_object(const BoxedObject& a);
/// Homology of the nerve of the product poset.
HomologyReport asphericity_evidence(const BoxedObject& a, int max_degree);

/// Boxed objects with at most max_factors factors of at most max_nodes nodes.
std::vector<BoxedObject> enumerate_boxed_objects(int max_factors, int max_nodes);
/// Every generator between enumerated objects (targets also within the bounds).
std::vector<BoxedMorphism> enumerate_generators(const std::vector<BoxedObject>& objects, int max_factors,
                                                int max_nodes);

struct LocalTestReport {
  int max_factors = 0, max_nodes = 0, max_degree = 0;
  int objects = 0, morphisms = 0;
  int augmentation_failures = 0, functoriality_failures = 0, sieve_failures = 0, stability_failures = 0,
      final_failures = 0, asphericity_failures = 0;
  bool corrupted_precylinder_detected = false;
  bool non_sieve_detected = false;
  std::vector<std::string> failures;
  bool pass() const;
  std::string to_string() const;
};
LocalTestReport local_test_report(int max_factors, int max_nodes, int max_degree);

// ---------------------------------------------------------------------------
// Presheaves on trees with injective maps.

/// Objects: one tree per class with <= max_nodes nodes (degree = nodes - 1);
/// generators: injective monotone maps that add at most one node.
SitePtr tree_site(int max_nodes);
/// The site object of a tree (up to isomorphism).
int tree_object(const Site& site, const RootedTree& t);
/// Each tree goes to its thin semicategory under the strict order.
CellularCoObject tree_poset_coobject(SitePtr site);
Realization tree_realize(const FinitePresheaf& k);
NerveResult tree_nerve(const Semicategory& x, int max_nodes, long long budget);

}  // namespace hda
