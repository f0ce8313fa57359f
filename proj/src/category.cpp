#include "hda/category.hpp"

#include <map>

#include "hda/errors.hpp"

namespace hda {

int FiniteCategory::add_object(std::string name) {
  int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  int id = add_morphism("id_" + name, o, o);
  identities_.push_back(id);
  return o;
}

int FiniteCategory::add_morphism(std::string name, int source, int target) {
  if (source < 0 || source >= object_count() || target < 0 || target >= object_count())
    throw InvalidInput("morphism '" + name + "' has an unknown endpoint");
  int f = static_cast<int>(morphisms_.size());
  morphisms_.push_back({std::move(name), source, target});
  for (auto& row : table_) row.push_back(-1);
  table_.emplace_back(morphisms_.size(), -1);
  return f;
}

void FiniteCategory::set_composite(int f, int g, int gf) {
  const auto &mf = morphism(f), &mg = morphism(g), &mgf = morphism(gf);
  if (mf.target != mg.source || mgf.source != mf.source || mgf.target != mg.target)
    throw InvalidInput("composite of '" + mf.name + "' and '" + mg.name + "' is ill-typed");
  table_[f][g] = gf;
}

bool FiniteCategory::is_identity(int f) const { return identities_.at(morphism(f).source) == f; }

int FiniteCategory::compose(int f, int g) const {
  if (morphism(f).target != morphism(g).source) return -1;
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  return table_[f][g];
}

std::vector<std::string> FiniteCategory::validate() const {
  std::vector<std::string> bad;
  const int m = morphism_count();
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      if (compose(f, g) < 0)
        bad.push_back("missing composite of '" + morphisms_[f].name + "' then '" + morphisms_[g].name + "'");
      if (table_[f][g] >= 0 && (is_identity(f) || is_identity(g)) && table_[f][g] != (is_identity(f) ? g : f))
        bad.push_back("unit law fails for '" + morphisms_[f].name + "' then '" + morphisms_[g].name + "'");
    }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int fg = compose(f, g);
      if (fg < 0) continue;
      for (int h = 0; h < m; ++h) {
        int gh = compose(g, h);
        if (gh < 0) continue;
        int a = compose(fg, h), b = compose(f, gh);
        if (a < 0 || b < 0) continue;
        if (a != b)
          bad.push_back("associativity fails on '" + morphisms_[f].name + "', '" + morphisms_[g].name +
                        "', '" + morphisms_[h].name + "'");
      }
    }
  return bad;
}

FiniteCategory poset_category(const std::vector<std::string>& names,
                              const std::vector<std::vector<bool>>& leq) {
  FiniteCategory c;
  const int n = static_cast<int>(names.size());
  for (const auto& s : names) c.add_object(s);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) arrow[i][i] = c.identity(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j]) arrow[i][j] = c.add_morphism(names[i] + "<" + names[j], i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (arrow[i][j] >= 0 && arrow[j][k] >= 0) {
          if (arrow[i][k] < 0) throw InvalidInput("order relation is not transitive");
          c.set_composite(arrow[i][j], arrow[j][k], arrow[i][k]);
        }
  return c;
}

Nerve nerve(const FiniteCategory& c, int max_degree) {
  Nerve out;
  out.truncated_at = max_degree;
  auto& s = out.set;
  std::vector<std::map<std::vector<int>, int>> index(max_degree + 1);
  for (int o = 0; o < c.object_count(); ++o) s.add_cell(0, c.object_name(o));
  // normal form of an arbitrary chain given by its source object and arrows
  auto normal = [&](int start, const std::vector<int>& chain) {
    std::vector<int> core;
    Monotone surj{0};
    for (int f : chain) {
      if (!c.is_identity(f)) core.push_back(f);
      surj.push_back(static_cast<int>(core.size()));
    }
    if (core.empty()) return Simplex{0, start, surj};
    return Simplex{static_cast<int>(core.size()), index[core.size()].at(core), surj};
  };
  std::vector<std::vector<int>> layer;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) layer.push_back({f});
  for (int n = 1; n <= max_degree && !layer.empty(); ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& chain : layer) {
      std::vector<Simplex> faces;
      int src = c.morphism(chain.front()).source;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> sub;
        int start = src;
        if (i == 0) {
          sub.assign(chain.begin() + 1, chain.end());
          start = c.morphism(chain.front()).target;
        } else if (i == n) {
          sub.assign(chain.begin(), chain.end() - 1);
        } else {
          sub.assign(chain.begin(), chain.begin() + i - 1);
          sub.push_back(c.compose(chain[i - 1], chain[i]));
          sub.insert(sub.end(), chain.begin() + i + 1, chain.end());
        }
        if (n == 1) {
          faces.push_back(Simplex{0, i == 0 ? c.morphism(chain[0]).target : src, {0}});
        } else {
          faces.push_back(normal(start, sub));
        }
      }
      std::string name;
      for (std::size_t k = 0; k < chain.size(); ++k) name += (k ? ";" : "") + c.morphism(chain[k]).name;
      index[n][chain] = s.add_cell(n, name, std::move(faces));
      for (int g = 0; g < c.morphism_count(); ++g)
        if (!c.is_identity(g) && c.morphism(g).source == c.morphism(chain.back()).target) {
          auto ext = chain;
          ext.push_back(g);
          next.push_back(std::move(ext));
        }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace hda
