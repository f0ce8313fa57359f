#pragma once

#include <string>
#include <vector>

#include "hda/simplicial_set.hpp"

namespace hda {

/// A finite category given by its full composition table.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    int source = 0;
    int target = 0;
  };

  /// Adds an object together with its identity morphism (named "id_<name>").
  int add_object(std::string name);
  int add_morphism(std::string name, int source, int target);
  /// The composite "f then g" (g after f).
  void set_composite(int f, int g, int gf);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int o) const { return objects_.at(o); }
  const Morphism& morphism(int f) const { return morphisms_.at(f); }
  int identity(int o) const { return identities_.at(o); }
  bool is_identity(int f) const;
  /// -1 when the composite is undefined or missing.
  int compose(int f, int g) const;

  /// Missing composites, unit failures and associativity failures, one line each.
  std::vector<std::string> validate() const;

 private:
  std::vector<std::string> objects_;
  std::vector<int> identities_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<int>> table_;
};

/// The category of a finite poset; leq[i][j] says i <= j.
FiniteCategory poset_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<bool>>& leq);

struct Nerve {
  FiniteSimplicialSet set;
  int truncated_at = 0;  // no cells above this degree were generated
};

/// Nerve truncated at `max_degree`; nondegenerate cells are chains without identities.
Nerve nerve(const FiniteCategory& c, int max_degree);

}  // namespace hda
