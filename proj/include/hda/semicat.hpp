#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hda/homology.hpp"
#include "hda/simplicial_set.hpp"

namespace hda {

/// A composable chain of generators with one simplex per generator, all of the
/// same dimension: the formal composite comps[0] * comps[1] * ...
struct ChainSimplex {
  std::vector<int> gens;
  std::vector<Simplex> comps;

  int dim() const { return comps.empty() ? -1 : comps.front().dim(); }
  bool operator==(const ChainSimplex&) const = default;
  auto operator<=>(const ChainSimplex&) const = default;
};

/// Read access shared by presented and explicitly tabulated semicategories.
class SemicategoryView {
 public:
  virtual ~SemicategoryView() = default;
  virtual int object_count() const = 0;
  virtual const std::string& object_name(int o) const = 0;
  /// Strict order on objects; homs are empty unless less(a, b).
  virtual bool less(int a, int b) const = 0;
  virtual const FiniteSimplicialSet& hom(int a, int b) const = 0;
  /// x in hom(a,b), y in hom(b,c) of equal dimension; returns x * y in hom(a,c).
  virtual Simplex compose(int a, int b, int c, const Simplex& x, const Simplex& y) const = 0;

  std::optional<int> find_object(const std::string& name) const;
};

/// Associativity failures over all composable triples of nondegenerate cells
/// of equal dimension, plus all triples in dimensions <= `degenerate_up_to`.
std::vector<std::string> check_associativity(const SemicategoryView& k, int degenerate_up_to = 1);

/// Derived hom of a presented semicategory together with the bookkeeping
/// needed to compose.
struct DerivedHom {
  FiniteSimplicialSet set;
  std::vector<std::vector<int>> chains;
  std::map<std::vector<int>, int> chain_index;
  std::vector<ProductSet> products;
  /// normal form in `set` of each nondegenerate product cell, per chain
  std::vector<std::vector<std::vector<Simplex>>> cell_image;
  /// per hom cell: (chain, product cell index) of a representative
  std::vector<std::vector<std::pair<int, int>>> representative;
  int degree_bound = -1;
};

/// Finite loop-free simplicial semicategory given by generators and relations.
class Semicategory : public SemicategoryView {
 public:
  struct Generator {
    std::string name;
    int source = 0;
    int target = 0;
    FiniteSimplicialSet cells;
  };
  struct Relation {
    ChainSimplex lhs;
    ChainSimplex rhs;
  };

  int add_object(std::string name);
  /// Declares a < b; the order is closed transitively. Throws on cycles.
  void add_order(int a, int b);
  /// Generators need source < target (the pair is added to the order).
  int add_generator(std::string name, int source, int target, FiniteSimplicialSet cells);
  void add_relation(ChainSimplex lhs, ChainSimplex rhs);

  int object_count() const override { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int o) const override { return objects_.at(o); }
  bool less(int a, int b) const override { return less_.at(a).at(b); }
  const FiniteSimplicialSet& hom(int a, int b) const override;
  Simplex compose(int a, int b, int c, const Simplex& x, const Simplex& y) const override;

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::optional<int> find_generator(const std::string& name) const;
  /// All pairs (a, b) with a < b, in lexicographic order.
  std::vector<std::pair<int, int>> order_pairs() const;

  const DerivedHom& derived(int a, int b) const;
  /// The composite named by a chain, as a simplex of the derived hom.
  Simplex evaluate(const ChainSimplex& chain) const;
  /// A chain representing x in hom(a,b).
  ChainSimplex representative(int a, int b, const Simplex& x) const;
  int chain_source(const ChainSimplex& c) const;
  int chain_target(const ChainSimplex& c) const;

  /// Typing and loop-freeness violations plus associativity failures.
  std::vector<std::string> validate() const;

 private:
  void invalidate();
  std::shared_ptr<const DerivedHom> build_hom(int a, int b) const;
  std::vector<std::vector<int>> generator_chains(int a, int b) const;

  std::vector<std::string> objects_;
  std::vector<std::vector<bool>> less_;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::shared_ptr<const DerivedHom>> homs;
  };
  mutable std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Semicategory with tabulated homs and a composition callback.
class ExplicitSemicategory : public SemicategoryView {
 public:
  using Composer = std::function<Simplex(int, int, int, const Simplex&, const Simplex&)>;

  ExplicitSemicategory(std::vector<std::string> objects, std::vector<std::vector<bool>> less,
                       std::map<std::pair<int, int>, FiniteSimplicialSet> homs, Composer compose);

  int object_count() const override { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int o) const override { return objects_.at(o); }
  bool less(int a, int b) const override { return less_.at(a).at(b); }
  const FiniteSimplicialSet& hom(int a, int b) const override;
  Simplex compose(int a, int b, int c, const Simplex& x, const Simplex& y) const override {
    return compose_(a, b, c, x, y);
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::vector<bool>> less_;
  std::map<std::pair<int, int>, FiniteSimplicialSet> homs_;
  FiniteSimplicialSet empty_;
  Composer compose_;
};

// ---------------------------------------------------------------------------
// Semifunctors out of presented semicategories.

struct Semifunctor {
  std::vector<int> on_objects;
  /// per generator: map from its cells into the target hom between the images
  std::vector<SimplicialMap> on_generators;

  bool operator==(const Semifunctor&) const = default;
  auto operator<=>(const Semifunctor&) const = default;
};

Simplex apply_chain(const Semicategory& source, const SemicategoryView& target,
                    const Semifunctor& f, const ChainSimplex& chain);
Simplex apply_hom(const Semicategory& source, const SemicategoryView& target,
                  const Semifunctor& f, int a, int b, const Simplex& x);
/// The simplicial map hom(a,b) -> hom(f a, f b).
SimplicialMap hom_map(const Semicategory& source, const SemicategoryView& target,
                      const Semifunctor& f, int a, int b);
std::vector<std::string> validate_semifunctor(const Semicategory& source,
                                              const SemicategoryView& target,
                                              const Semifunctor& f);
Semifunctor identity_semifunctor(const Semicategory& k);
/// g after f.
Semifunctor compose(const Semifunctor& g, const Semifunctor& f, const Semicategory& middle,
                    const SemicategoryView& target, const Semicategory& source);

struct SemifunctorConstraints {
  /// allowed images per source object; empty vector means unrestricted
  std::vector<std::vector<int>> objects;
  /// fixed images per generator and nondegenerate cell
  std::vector<CellConstraints> cells;
};

/// Backtracking search in a fixed lexicographic order; `emit` returns true to
/// stop. Every candidate generator image counts against the budget.
void search_semifunctors(const Semicategory& source, const SemicategoryView& target,
                         long long budget, const SemifunctorConstraints* constraints,
                         const std::function<bool(const Semifunctor&)>& emit);
std::vector<Semifunctor> enumerate_semifunctors(const Semicategory& source,
                                                const SemicategoryView& target, long long budget,
                                                const SemifunctorConstraints* constraints = nullptr);

// ---------------------------------------------------------------------------
// Constructions.

/// Objects {0, 1}; the hom from 0 to 1 is s.
Semicategory glob(const FiniteSimplicialSet& s, const std::string& generator = "g");
/// Objects {0..n}; globe i runs from i-1 to i.
Semicategory concat_globs(const std::vector<FiniteSimplicialSet>& globes);
/// n objects, no generators.
Semicategory discrete_semicategory(int n);
Semicategory coproduct(const Semicategory& a, const Semicategory& b);

/// Attaching data for the pushout K + Glob(B) along Glob(A).
struct GlobeAttachment {
  int source = 0;
  int target = 0;
  FiniteSimplicialSet a;
  FiniteSimplicialSet b;
  SimplicialMap inclusion;  // a -> b, injective
  SimplicialMap attaching;  // a -> hom(source, target) of the host
  std::string name = "cell";
};
Semicategory attach(const Semicategory& host, const GlobeAttachment& att);

/// S (x) K: generators S x G, relations tensored with S.
struct Tensored {
  Semicategory k;
  std::vector<ProductSet> products;  // S x G per generator G
  /// The single-generator chain (u, x) in S x G; u and x of equal dimension.
  ChainSimplex chain(int generator, const Simplex& u, const Simplex& x) const;
};
Tensored tensor(const FiniteSimplicialSet& s, const Semicategory& k);

struct Cylinder {
  Tensored cyl;
  Semifunctor e0, e1, p;
};
Cylinder cylinder(const Semicategory& k);

/// Homotopy H : cylinder(K) -> L with H e0 = f and H e1 = g, if one exists.
std::optional<Semifunctor> s_homotopic(const Semicategory& k, const SemicategoryView& l,
                                       const Semifunctor& f, const Semifunctor& g,
                                       long long budget);

/// Lifting problem: i : A -> B, p : X -> Y, top : A -> X, bottom : B -> Y.
/// Throws InvalidInput when the square does not commute.
std::optional<Semifunctor> has_lift(const Semicategory& a, const Semicategory& b,
                                    const Semicategory& x, const Semicategory& y,
                                    const Semifunctor& i, const Semifunctor& p,
                                    const Semifunctor& top, const Semifunctor& bottom,
                                    long long budget);

bool is_synchronized(const Semifunctor& f, int target_objects);

struct ProbeWitness {
  std::string kind;  // "objects", "components" or "homology"
  int source = -1, target = -1, degree = -1;
  std::string lhs, rhs;
  std::string to_string() const;
};
struct ProbeVerdict {
  bool refuted = false;
  int checked_up_to = 0;
  std::vector<ProbeWitness> witnesses;
  std::string to_string() const;
};
ProbeVerdict weak_equivalence_probe(const Semicategory& source, const SemicategoryView& target,
                                    const Semifunctor& f, int max_degree);

// ---------------------------------------------------------------------------
// Cotensor and enriched homs.

/// Function complex Map(S, P) truncated at `degree_bound`: m-simplices are the
/// simplicial maps S x Delta^m -> P.
struct FunctionComplex {
  FiniteSimplicialSet set;
  std::vector<ProductSet> domains;  // S x Delta^m
  /// maps of each nondegenerate cell, per degree
  std::vector<std::vector<SimplicialMap>> cell_maps;
  /// every map S x Delta^m -> P, keyed by its images on nondegenerate cells
  std::vector<std::map<SimplicialMap, Simplex>> lookup;
};
FunctionComplex function_complex(const FiniteSimplicialSet& s, const FiniteSimplicialSet& p,
                                 int degree_bound, long long budget);

class Cotensor : public SemicategoryView {
 public:
  Cotensor(FiniteSimplicialSet s, std::shared_ptr<const SemicategoryView> k, int degree_bound,
           long long budget);

  int object_count() const override { return k_->object_count(); }
  const std::string& object_name(int o) const override { return k_->object_name(o); }
  bool less(int a, int b) const override { return k_->less(a, b); }
  const FiniteSimplicialSet& hom(int a, int b) const override;
  Simplex compose(int a, int b, int c, const Simplex& x, const Simplex& y) const override;

  const FunctionComplex& complex(int a, int b) const;
  int degree_bound() const { return bound_; }
  const FiniteSimplicialSet& exponent() const { return s_; }
  /// The map S x Delta^m -> hom_K(a,b) represented by x.
  SimplicialMap as_map(int a, int b, const Simplex& x) const;
  /// The simplex for a map S x Delta^m -> hom_K(a,b) given on nondegenerate cells.
  Simplex from_map(int a, int b, int m, const SimplicialMap& f) const;

 private:
  FiniteSimplicialSet s_;
  std::shared_ptr<const SemicategoryView> k_;
  int bound_;
  std::map<std::pair<int, int>, FunctionComplex> homs_;
  FiniteSimplicialSet empty_;
};

/// The n-simplices of the enriched hom: semifunctors K -> {Delta^n, L}.
std::vector<Semifunctor> enriched_hom(const Semicategory& k,
                                      std::shared_ptr<const SemicategoryView> l, int n,
                                      long long budget);
int max_generator_dim(const Semicategory& k);

/// Transpose H : S (x) K -> L into K -> {S, L}.
Semifunctor transpose(const Semicategory& k, const Tensored& tensored, const SemicategoryView& l,
                      const Cotensor& cot, const Semifunctor& h);

/// The map S x Delta^m -> S x Delta^k given by id x theta, theta : [m] -> [k].
SimplicialMap product_reindex(const ProductSet& from, const ProductSet& to, const Monotone& theta);

/// Explicit isomorphism check: bijective on objects, isomorphism on every hom.
bool is_isomorphism(const Semicategory& source, const SemicategoryView& target,
                    const Semifunctor& f);

}  // namespace hda
