#include <algorithm>
#include <set>

#include "hda/errors.hpp"
#include "hda/semicat.hpp"

namespace hda {

Semicategory glob(const FiniteSimplicialSet& s, const std::string& generator) {
  Semicategory k;
  k.add_object("0");
  k.add_object("1");
  k.add_generator(generator, 0, 1, s);
  return k;
}

Semicategory concat_globs(const std::vector<FiniteSimplicialSet>& globes) {
  Semicategory k;
  k.add_object("0");
  for (std::size_t i = 0; i < globes.size(); ++i) {
    int o = k.add_object(std::to_string(i + 1));
    k.add_generator("g" + std::to_string(i + 1), o - 1, o, globes[i]);
  }
  return k;
}

Semicategory discrete_semicategory(int n) {
  Semicategory k;
  for (int i = 0; i < n; ++i) k.add_object(std::to_string(i));
  return k;
}

Semicategory coproduct(const Semicategory& a, const Semicategory& b) {
  Semicategory k;
  for (int o = 0; o < a.object_count(); ++o) k.add_object("a." + a.object_name(o));
  for (int o = 0; o < b.object_count(); ++o) k.add_object("b." + b.object_name(o));
  const int shift = a.object_count();
  for (auto [x, y] : a.order_pairs()) k.add_order(x, y);
  for (auto [x, y] : b.order_pairs()) k.add_order(x + shift, y + shift);
  for (const auto& g : a.generators()) k.add_generator("a." + g.name, g.source, g.target, g.cells);
  for (const auto& g : b.generators())
    k.add_generator("b." + g.name, g.source + shift, g.target + shift, g.cells);
  for (const auto& r : a.relations()) k.add_relation(r.lhs, r.rhs);
  const int gshift = static_cast<int>(a.generators().size());
  for (const auto& r : b.relations()) {
    auto lhs = r.lhs, rhs = r.rhs;
    for (int& g : lhs.gens) g += gshift;
    for (int& g : rhs.gens) g += gshift;
    k.add_relation(std::move(lhs), std::move(rhs));
  }
  return k;
}

Semicategory attach(const Semicategory& host, const GlobeAttachment& att) {
  if (att.source < 0 || att.target < 0 || att.source >= host.object_count() ||
      att.target >= host.object_count())
    throw InvalidInput("attachment endpoints are not objects of the host");
  if (!host.less(att.source, att.target))
    throw InvalidInput("attachment endpoints must satisfy source < target");
  auto bad = check_simplicial_map(att.a, att.b, att.inclusion);
  if (!bad.empty()) throw InvalidInput("cell inclusion is not simplicial: " + bad.front());
  if (!is_injective(att.a, att.inclusion)) throw InvalidInput("cell inclusion is not injective");
  const auto& h = host.hom(att.source, att.target);
  bad = check_simplicial_map(att.a, h, att.attaching);
  if (!bad.empty()) throw InvalidInput("attaching map is not simplicial: " + bad.front());

  Semicategory k = host;
  int g = k.add_generator(att.name, att.source, att.target, att.b);
  for (int d = 0; d <= att.a.max_dim(); ++d)
    for (int i = 0; i < att.a.count(d); ++i) {
      ChainSimplex lhs{{g}, {att.inclusion.image[d][i]}};
      k.add_relation(std::move(lhs), host.representative(att.source, att.target, att.attaching.image[d][i]));
    }
  return k;
}

ChainSimplex Tensored::chain(int generator, const Simplex& u, const Simplex& x) const {
  std::vector<Simplex> t{u, x};
  return ChainSimplex{{generator}, {products.at(generator).locate(t)}};
}

Tensored tensor(const FiniteSimplicialSet& s, const Semicategory& k) {
  Tensored out;
  for (int o = 0; o < k.object_count(); ++o) out.k.add_object(k.object_name(o));
  for (auto [x, y] : k.order_pairs()) out.k.add_order(x, y);
  for (const auto& g : k.generators()) {
    out.products.emplace_back(std::vector<FiniteSimplicialSet>{s, g.cells});
    out.k.add_generator(g.name, g.source, g.target, out.products.back().set());
  }
  for (const auto& rel : k.relations()) {
    const int d = rel.lhs.dim();
    ProductSet grid(std::vector<FiniteSimplicialSet>{s, standard_simplex(d)});
    const auto& gs = grid.set();
    for (int m = 0; m <= gs.max_dim(); ++m)
      for (int c = 0; c < gs.count(m); ++c) {
        const auto& uv = grid.components(m, c);
        Monotone theta = grid.factor(1).vertices(uv[1]);
        auto lift = [&](const ChainSimplex& ch) {
          ChainSimplex t{ch.gens, {}};
          for (std::size_t i = 0; i < ch.gens.size(); ++i) {
            const auto& cells = k.generators()[ch.gens[i]].cells;
            std::vector<Simplex> pair{uv[0], cells.act(ch.comps[i], theta)};
            t.comps.push_back(out.products[ch.gens[i]].locate(pair));
          }
          return t;
        };
        out.k.add_relation(lift(rel.lhs), lift(rel.rhs));
      }
  }
  return out;
}

namespace {

Simplex constant(int m, int vertex) { return Simplex{0, vertex, Monotone(m + 1, 0)}; }

SimplicialMap map_cells(const FiniteSimplicialSet& cells, const std::function<Simplex(const Simplex&)>& fn) {
  SimplicialMap out;
  out.image.resize(std::max(cells.max_dim() + 1, 0));
  for (int d = 0; d <= cells.max_dim(); ++d)
    for (int i = 0; i < cells.count(d); ++i) out.image[d].push_back(fn(cell_simplex(d, i)));
  return out;
}

}  // namespace

Cylinder cylinder(const Semicategory& k) {
  Cylinder c{tensor(standard_simplex(1), k), {}, {}, {}};
  for (int o = 0; o < k.object_count(); ++o) {
    c.e0.on_objects.push_back(o);
    c.e1.on_objects.push_back(o);
    c.p.on_objects.push_back(o);
  }
  for (std::size_t g = 0; g < k.generators().size(); ++g) {
    const int gi = static_cast<int>(g);
    const auto& cells = k.generators()[g].cells;
    c.e0.on_generators.push_back(map_cells(cells, [&](const Simplex& x) {
      return c.cyl.k.evaluate(c.cyl.chain(gi, constant(x.dim(), 0), x));
    }));
    c.e1.on_generators.push_back(map_cells(cells, [&](const Simplex& x) {
      return c.cyl.k.evaluate(c.cyl.chain(gi, constant(x.dim(), 1), x));
    }));
    const auto& prod = c.cyl.products[g];
    c.p.on_generators.push_back(map_cells(prod.set(), [&](const Simplex& x) {
      return k.evaluate({{gi}, {prod.components(x.base_dim, x.base)[1]}});
    }));
  }
  return c;
}

std::optional<Semifunctor> s_homotopic(const Semicategory& k, const SemicategoryView& l,
                                       const Semifunctor& f, const Semifunctor& g,
                                       long long budget) {
  if (f.on_objects != g.on_objects) return std::nullopt;
  Cylinder cyl = cylinder(k);
  SemifunctorConstraints cons;
  for (int o : f.on_objects) cons.objects.push_back({o});
  for (std::size_t gi = 0; gi < k.generators().size(); ++gi) {
    const auto& gen = k.generators()[gi];
    const auto& prod = cyl.cyl.products[gi];
    int fs = f.on_objects[gen.source], ft = f.on_objects[gen.target];
    if (!gen.cells.empty() && !l.less(fs, ft)) return std::nullopt;
    const auto& hom = l.hom(fs, ft);
    CellConstraints fixed(std::max(prod.set().max_dim() + 1, 0));
    for (int m = 0; m <= prod.set().max_dim(); ++m)
      for (int c = 0; c < prod.set().count(m); ++c) {
        const auto& uv = prod.components(m, c);
        std::optional<Simplex> want;
        if (uv[0] == constant(m, 0)) want = f.on_generators[gi].apply(hom, uv[1]);
        else if (uv[0] == constant(m, 1)) want = g.on_generators[gi].apply(hom, uv[1]);
        fixed[m].push_back(want);
      }
    cons.cells.push_back(std::move(fixed));
  }
  std::optional<Semifunctor> found;
  search_semifunctors(cyl.cyl.k, l, budget, &cons, [&](const Semifunctor& h) {
    if (compose(h, cyl.e0, cyl.cyl.k, l, k) != f || compose(h, cyl.e1, cyl.cyl.k, l, k) != g) return false;
    found = h;
    return true;
  });
  return found;
}

std::optional<Semifunctor> has_lift(const Semicategory& a, const Semicategory& b,
                                    const Semicategory& x, const Semicategory& y,
                                    const Semifunctor& i, const Semifunctor& p,
                                    const Semifunctor& top, const Semifunctor& bottom,
                                    long long budget) {
  if (!validate_semifunctor(a, b, i).empty() || !validate_semifunctor(x, y, p).empty() ||
      !validate_semifunctor(a, x, top).empty() || !validate_semifunctor(b, y, bottom).empty())
    throw InvalidInput("lifting square has an invalid side");
  if (compose(p, top, x, y, a) != compose(bottom, i, b, y, a))
    throw InvalidInput("lifting square does not commute");

  SemifunctorConstraints cons;
  for (int o = 0; o < b.object_count(); ++o) {
    std::vector<int> allowed;
    for (int xi = 0; xi < x.object_count(); ++xi) {
      if (p.on_objects[xi] != bottom.on_objects[o]) continue;
      bool ok = true;
      for (int ai = 0; ai < a.object_count(); ++ai)
        if (i.on_objects[ai] == o && top.on_objects[ai] != xi) ok = false;
      if (ok) allowed.push_back(xi);
    }
    if (allowed.empty()) return std::nullopt;
    cons.objects.push_back(std::move(allowed));
  }
  std::optional<Semifunctor> found;
  search_semifunctors(b, x, budget, &cons, [&](const Semifunctor& l) {
    if (compose(l, i, b, x, a) != top || compose(p, l, x, y, b) != bottom) return false;
    found = l;
    return true;
  });
  return found;
}

bool is_synchronized(const Semifunctor& f, int target_objects) {
  if (static_cast<int>(f.on_objects.size()) != target_objects) return false;
  std::set<int> seen(f.on_objects.begin(), f.on_objects.end());
  if (!seen.empty() && (*seen.begin() < 0 || *seen.rbegin() >= target_objects)) return false;
  return static_cast<int>(seen.size()) == target_objects;
}

std::string ProbeWitness::to_string() const {
  if (kind == "objects") return "objects: " + lhs + " vs " + rhs;
  std::string at = "(" + std::to_string(source) + "," + std::to_string(target) + ")";
  if (kind == "components") return "components on " + at + ": " + lhs + " vs " + rhs;
  return "H" + std::to_string(degree) + " on " + at + ": " + lhs + " vs " + rhs;
}

std::string ProbeVerdict::to_string() const {
  if (!refuted) return "consistent_up_to(" + std::to_string(checked_up_to) + ")";
  std::string s = "refuted";
  for (std::size_t k = 0; k < witnesses.size(); ++k) s += (k ? "; " : ": ") + witnesses[k].to_string();
  return s;
}

ProbeVerdict weak_equivalence_probe(const Semicategory& source, const SemicategoryView& target,
                                    const Semifunctor& f, int max_degree) {
  ProbeVerdict v;
  v.checked_up_to = max_degree;
  {
    std::set<int> seen(f.on_objects.begin(), f.on_objects.end());
    if (source.object_count() != target.object_count() ||
        static_cast<int>(seen.size()) != target.object_count())
      v.witnesses.push_back({"objects", -1, -1, -1, std::to_string(source.object_count()),
                             std::to_string(target.object_count())});
  }
  for (int a = 0; a < source.object_count(); ++a)
    for (int b = 0; b < source.object_count(); ++b) {
      if (a == b) continue;
      int fa = f.on_objects[a], fb = f.on_objects[b];
      if (fa == fb) continue;
      const auto& hs = source.hom(a, b);
      const auto& ht = target.hom(fa, fb);
      if (hs.empty() && ht.empty()) continue;
      SimplicialMap m = hom_map(source, target, f, a, b);
      auto cs = connected_components(hs), ct = connected_components(ht);
      std::vector<int> comp_of(ht.count(0), -1);
      for (std::size_t c = 0; c < ct.size(); ++c)
        for (int vtx : ct[c]) comp_of[vtx] = static_cast<int>(c);
      std::set<int> hit;
      bool injective = true;
      for (const auto& comp : cs) {
        int c = comp_of[m.image[0][comp.front()].base];
        injective = injective && !hit.count(c);
        hit.insert(c);
      }
      if (!injective || hit.size() != ct.size())
        v.witnesses.push_back({"components", a, b, -1, std::to_string(cs.size()), std::to_string(ct.size())});
      auto hsrc = homology(hs, max_degree), htgt = homology(ht, max_degree);
      for (int n = 0; n <= max_degree; ++n)
        if (!induces_homology_iso(hs, ht, m, n))
          v.witnesses.push_back({"homology", a, b, n, hsrc.groups[n].to_string(), htgt.groups[n].to_string()});
    }
  v.refuted = !v.witnesses.empty();
  return v;
}

}  // namespace hda
