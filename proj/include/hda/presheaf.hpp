#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hda/category.hpp"
#include "hda/semicat.hpp"

namespace hda {

/// A finitely presented site whose morphisms are determined by their action
/// on the points of each object (a faithful evaluation into finite posets).
class Site {
 public:
  struct Object {
    std::string name;
    int degree = 0;
    /// order on points: leq[p][q] says p <= q
    std::vector<std::vector<bool>> leq;
    int points() const { return static_cast<int>(leq.size()); }
  };
  struct Generator {
    std::string name;
    int source = 0;
    int target = 0;
    std::vector<int> eval;  // point of source -> point of target
  };
  /// A morphism into some object, as a generator word applied left to right.
  struct Morphism {
    int source = 0;
    int target = 0;
    std::vector<int> eval;
    std::vector<int> word;
  };
  using Labeler = std::function<std::string(const Site&, const Morphism&)>;

  explicit Site(std::string name) : name_(std::move(name)) {}
  Site(const Site& other);
  Site& operator=(const Site&) = delete;

  int add_object(std::string name, int degree, std::vector<std::vector<bool>> leq);
  int add_generator(std::string name, int source, int target, std::vector<int> eval);
  void set_labeler(Labeler labeler) { labeler_ = std::move(labeler); }

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const Object& object(int c) const { return objects_.at(c); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<int> find_object(const std::string& name) const;

  /// All morphisms into c, deduplicated by evaluation; index 0 is the identity.
  const std::vector<Morphism>& morphisms_into(int c) const;
  int find_morphism(int target, int source, const std::vector<int>& eval) const;
  /// m after g (g : d -> source(m)); index into morphisms_into(target(m)).
  int precompose(int target, int m, int g) const;
  /// g after m (m into source(g)); index into morphisms_into(target(g)).
  int postcompose(int g, int source_object, int m) const;
  /// Whether c has a non-identity endomorphism.
  bool has_automorphisms(int c) const;
  std::string label(const Morphism& m) const;
  /// The unique object with one point and degree 0, if any.
  std::optional<int> point_object() const;

 private:
  std::string name_;
  std::vector<Object> objects_;
  std::vector<Generator> generators_;
  Labeler labeler_;
  struct Into {
    std::vector<Morphism> list;
    std::map<std::pair<int, std::vector<int>>, int> index;
  };
  const Into& into(int c) const;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Into>> into_;
};

using SitePtr = std::shared_ptr<const Site>;

/// Contravariant set-valued functor on a site, given on generators.
class FinitePresheaf {
 public:
  explicit FinitePresheaf(SitePtr site);

  const Site& site() const { return *site_; }
  const SitePtr& site_ptr() const { return site_; }

  int add_element(int c, std::string name);
  /// K(g) : K(target g) -> K(source g) at one element.
  void set_map(int g, int x, int image);

  int count(int c) const { return static_cast<int>(names_.at(c).size()); }
  int total() const;
  const std::string& name(int c, int x) const { return names_.at(c).at(x); }
  std::optional<int> find(int c, const std::string& name) const;
  /// -1 while unset.
  int map(int g, int x) const { return maps_.at(g).at(x); }
  /// Action of a morphism into c (index into morphisms_into(c)).
  int act(int c, int m, int x) const;

  /// Unset maps and relation failures, one line each.
  std::vector<std::string> validate() const;
  /// Elements ordered by (degree, object, name).
  std::vector<std::pair<int, int>> ordered_elements() const;

  bool operator==(const FinitePresheaf& o) const { return names_ == o.names_ && maps_ == o.maps_; }

 private:
  SitePtr site_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> maps_;
};

/// Components per site object: element of source -> element of target.
struct PresheafMap {
  std::vector<std::vector<int>> at;
  bool operator==(const PresheafMap&) const = default;
  auto operator<=>(const PresheafMap&) const = default;
};

std::vector<std::string> check_presheaf_map(const FinitePresheaf& k, const FinitePresheaf& l,
                                            const PresheafMap& f);
std::vector<PresheafMap> enumerate_presheaf_maps(const FinitePresheaf& k, const FinitePresheaf& l,
                                                 long long budget);
bool is_levelwise_injective(const PresheafMap& f);
PresheafMap compose(const PresheafMap& g, const PresheafMap& f);

/// Elements at d are the morphisms d -> c, in the order of morphisms_into(c).
FinitePresheaf representable(SitePtr site, int c);
/// The morphism index of each element of representable(c), per object.
std::vector<std::vector<int>> representable_index(const Site& site, int c);
/// representable(c) without the morphisms whose source is c.
FinitePresheaf boundary(SitePtr site, int c);
/// boundary(c) -> representable(c).
PresheafMap boundary_inclusion(const Site& site, int c);
/// The map representable(c) -> K picking x in K(c).
PresheafMap yoneda_map(const FinitePresheaf& k, int c, int x);
FinitePresheaf coproduct(const FinitePresheaf& a, const FinitePresheaf& b);
/// Elements of degree above n dropped.
FinitePresheaf skeleton(const FinitePresheaf& k, int n);
/// Attaches one copy of c per map, glued along boundary(c) -> K. Names default to "<c>#<k>".
FinitePresheaf attach_cells(const FinitePresheaf& k, int c, const std::vector<PresheafMap>& along,
                            const std::vector<std::string>& names = {});
/// yoneda_map(k, c, x) restricted to boundary(c).
PresheafMap boundary_map(const FinitePresheaf& k, int c, int x);

/// Objects "c:x"; morphisms "w:x" for every non-identity morphism w of the site.
FiniteCategory category_of_elements(const FinitePresheaf& k);

// ---------------------------------------------------------------------------
// Cellular co-objects and realization.

/// A cell of the value at c transported along morphisms_into(c)[morphism].
struct CellRef {
  int morphism = 0;
  int top = 0;
  bool operator==(const CellRef&) const = default;
};
struct TopGenerator {
  std::string name;
  CellRef source, target;
  FiniteSimplicialSet cells;
};
struct TopLink {
  CellRef generator;
  Simplex simplex;
};
struct TopRelation {
  std::vector<TopLink> lhs, rhs;
};
/// The cells that are new at an object (not images of smaller objects).
struct TopCells {
  std::vector<std::string> objects;
  std::vector<TopGenerator> generators;
  std::vector<TopRelation> relations;
  bool empty() const { return objects.empty() && generators.empty() && relations.empty(); }
};

/// Co-object whose value at c is the colimit of its own and transported top cells.
struct CellularCoObject {
  SitePtr site;
  std::string name;
  std::vector<TopCells> top;  // per site object
};

/// Target category interface used by the realization engine.
class CellularTarget {
 public:
  virtual ~CellularTarget() = default;
  virtual int add_object(const std::string& name) = 0;
  virtual int add_generator(const std::string& name, int source, int target,
                            const FiniteSimplicialSet& cells) = 0;
  virtual void add_relation(const std::vector<std::pair<int, Simplex>>& lhs,
                            const std::vector<std::pair<int, Simplex>>& rhs) = 0;
};

/// Provenance of the cells of a realization.
struct RealizationIndex {
  /// (site object, element) -> ids per top object / top generator
  std::map<std::pair<int, int>, std::vector<int>> objects;
  std::map<std::pair<int, int>, std::vector<int>> generators;
};

/// Skeletal attachment of top cells, one batch per element in (degree, object, name) order.
RealizationIndex realize_into(const FinitePresheaf& k, const CellularCoObject& co, CellularTarget& target);

struct Realization {
  Semicategory k;
  RealizationIndex index;
};
Realization realize(const FinitePresheaf& k, const CellularCoObject& co);
/// The semifunctor realize(f) : realize(K) -> realize(L).
Semifunctor realize_map(const FinitePresheaf& k, const Realization& rk, const Realization& rl,
                        const PresheafMap& f);
/// The value X(c) = realize(representable(c)).
Realization co_value(const CellularCoObject& co, int c);

// ---------------------------------------------------------------------------
// Nerve and adjunction.

struct NerveResult {
  FinitePresheaf presheaf;
  std::vector<std::vector<Semifunctor>> elements;  // per site object
  std::vector<Realization> values;                 // co_value per site object
  int max_degree = 0;
};

/// c -> semifunctors X(c) -> X for site objects of degree <= max_degree.
NerveResult nerve_of(const Semicategory& x, const CellularCoObject& co, int max_degree, long long budget);

/// Glues elements of a nerve over a presheaf map K -> N(X) into realize(K) -> X.
Semifunctor glue(const FinitePresheaf& k, const Realization& rk, const NerveResult& n,
                 const PresheafMap& alpha);
/// The counit realize(N(X)) -> X.
Semifunctor counit(const NerveResult& n, const Realization& realized_nerve);

struct AdjunctionReport {
  std::size_t realization_side = 0;  // |Hom(realize K, X)|
  std::size_t nerve_side = 0;        // |Hom(K, N X)|
  bool bijection = false;
  bool round_trips = false;
  int naturality_checks = 0;
  bool naturality = false;
  bool ok() const { return bijection && round_trips && naturality; }
  std::string to_string() const;
};
AdjunctionReport verify_adjunction(const FinitePresheaf& k, const Semicategory& x,
                                   const CellularCoObject& co, long long budget);

}  // namespace hda
