#include "hda/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hda/errors.hpp"

namespace hda {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Json simplex_json(const FiniteSimplicialSet& s, const Simplex& x) {
  return Json::array({s.name(x.base_dim, x.base), degeneracy_word(x.surj)});
}

Simplex simplex_from(const FiniteSimplicialSet& s, const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [cell, [degeneracy indices]]");
  auto name = str(j[0], where + "/0");
  auto base = s.find(name);
  if (!base) fail(where, "unknown cell '" + name + "'");
  if (!j[1].is_array()) fail(where + "/1", "expected an array");
  std::vector<int> word;
  for (std::size_t i = 0; i < j[1].size(); ++i) word.push_back(integer(j[1][i], where + "/1/" + std::to_string(i)));
  if (dim < 0) dim = base->base_dim + static_cast<int>(word.size());
  if (base->base_dim + static_cast<int>(word.size()) != dim) fail(where, "simplex has the wrong dimension");
  try {
    return Simplex{base->base_dim, base->base, surjection_from_word(dim, word)};
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

Json to_json(const FiniteSimplicialSet& s) {
  Json cells = Json::array(), faces = Json::object();
  for (int d = 0; d <= s.max_dim(); ++d) {
    Json names = Json::array();
    for (int i = 0; i < s.count(d); ++i) {
      names.push_back(s.name(d, i));
      if (d == 0) continue;
      Json fs = Json::array();
      for (const auto& f : s.faces(d, i)) fs.push_back(simplex_json(s, f));
      faces[s.name(d, i)] = fs;
    }
    cells.push_back(names);
  }
  return {{"cells", cells}, {"faces", faces}};
}

FiniteSimplicialSet simplicial_set_from_json(const Json& j) {
  FiniteSimplicialSet s;
  const auto& cells = field(j, "cells", "");
  if (!cells.is_array()) fail("/cells", "expected an array");
  Json faces = j.contains("faces") ? j["faces"] : Json::object();
  if (!faces.is_object()) fail("/faces", "expected an object");
  for (std::size_t d = 0; d < cells.size(); ++d) {
    std::string where = "/cells/" + std::to_string(d);
    if (!cells[d].is_array()) fail(where, "expected an array");
    for (std::size_t i = 0; i < cells[d].size(); ++i) {
      auto name = str(cells[d][i], where + "/" + std::to_string(i));
      std::vector<Simplex> fs;
      if (d > 0) {
        std::string fw = "/faces/" + name;
        if (!faces.contains(name)) fail(fw, "missing faces");
        const auto& arr = faces[name];
        if (!arr.is_array() || arr.size() != d + 1) fail(fw, "expected " + std::to_string(d + 1) + " faces");
        for (std::size_t k = 0; k < arr.size(); ++k)
          fs.push_back(simplex_from(s, arr[k], static_cast<int>(d) - 1, fw + "/" + std::to_string(k)));
      }
      try {
        s.add_cell(static_cast<int>(d), name, fs);
      } catch (const InvalidInput& e) {
        fail(where + "/" + std::to_string(i), e.what());
      }
    }
  }
  auto bad = s.check_identities();
  if (!bad.empty()) fail("/faces", "simplicial identities fail: " + bad.front());
  return s;
}

// ---------------------------------------------------------------------------

Json to_json(const FinitePresheaf& k) {
  const auto& site = k.site();
  Json elements = Json::object(), maps = Json::object();
  int max_nodes = 0;
  for (int c = 0; c < site.object_count(); ++c) {
    if (k.count(c) == 0) continue;
    max_nodes = std::max(max_nodes, site.object(c).points());
    Json names = Json::array();
    for (int x = 0; x < k.count(c); ++x) names.push_back(k.name(c, x));
    elements[site.object(c).name] = names;
  }
  const auto& gens = site.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int c = gens[g].target, d = gens[g].source;
    if (k.count(c) == 0) continue;
    Json m = Json::object();
    for (int x = 0; x < k.count(c); ++x) m[k.name(c, x)] = k.name(d, k.map(static_cast<int>(g), x));
    maps[gens[g].name] = m;
  }
  Json out = {{"site", site.name()}, {"elements", elements}, {"maps", maps}};
  if (site.name() == "tree") out["max_nodes"] = std::max(max_nodes, 1);
  return out;
}

FinitePresheaf presheaf_from_json(const Json& j) {
  auto name = str(field(j, "site", ""), "/site");
  const auto& elements = field(j, "elements", "");
  if (!elements.is_object()) fail("/elements", "expected an object");
  SitePtr site;
  if (name == "cube") {
    site = cube_site();
  } else if (name == "tree") {
    int max_nodes = 1;
    if (j.contains("max_nodes")) {
      max_nodes = integer(j["max_nodes"], "/max_nodes");
    } else {
      for (auto it = elements.begin(); it != elements.end(); ++it)
        max_nodes = std::max(max_nodes, static_cast<int>(it.key().size() / 2));
    }
    if (max_nodes < 1 || max_nodes > 6) fail("/max_nodes", "expected 1..6");
    site = tree_site(max_nodes);
  } else {
    fail("/site", "unknown site '" + name + "'");
  }
  FinitePresheaf k(site);
  for (auto it = elements.begin(); it != elements.end(); ++it) {
    std::string where = "/elements/" + it.key();
    auto c = site->find_object(it.key());
    if (!c) fail(where, "unknown site object");
    if (!it.value().is_array()) fail(where, "expected an array");
    for (std::size_t x = 0; x < it.value().size(); ++x) {
      try {
        k.add_element(*c, str(it.value()[x], where + "/" + std::to_string(x)));
      } catch (const InvalidInput& e) {
        fail(where + "/" + std::to_string(x), e.what());
      }
    }
  }
  Json maps = j.contains("maps") ? j["maps"] : Json::object();
  if (!maps.is_object()) fail("/maps", "expected an object");
  std::map<std::string, int> gen_index;
  for (std::size_t g = 0; g < site->generators().size(); ++g) gen_index[site->generators()[g].name] = static_cast<int>(g);
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    std::string where = "/maps/" + it.key();
    auto g = gen_index.find(it.key());
    if (g == gen_index.end()) fail(where, "unknown generator");
    const auto& gen = site->generators()[g->second];
    if (!it.value().is_object()) fail(where, "expected an object");
    for (auto e = it.value().begin(); e != it.value().end(); ++e) {
      auto x = k.find(gen.target, e.key());
      if (!x) fail(where + "/" + e.key(), "unknown element");
      auto y = k.find(gen.source, str(e.value(), where + "/" + e.key()));
      if (!y) fail(where + "/" + e.key(), "unknown image");
      k.set_map(g->second, *x, *y);
    }
  }
  return k;
}

Json precubical_to_json(const PrecubicalSet& k) {
  Json cubes = Json::array(), d = Json::object();
  for (int n = 0; n <= cube_dim(k); ++n) {
    Json names = Json::array();
    for (int x = 0; x < k.count(n); ++x) {
      names.push_back(k.name(n, x));
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          std::string key = "(" + std::to_string(i) + "," + std::to_string(e) + ")";
          d[key][k.name(n, x)] = k.name(n - 1, face(k, n, i, e, x));
        }
    }
    cubes.push_back(names);
  }
  return {{"cubes", cubes}, {"d", d}};
}

PrecubicalSet precubical_from_json(const Json& j) {
  PrecubicalSet k = empty_precubical();
  const auto& cubes = field(j, "cubes", "");
  if (!cubes.is_array()) fail("/cubes", "expected an array");
  if (static_cast<int>(cubes.size()) > kCubeMaxDim + 1) fail("/cubes", "dimension above " + std::to_string(kCubeMaxDim));
  std::map<std::string, std::pair<int, int>> where_is;
  for (std::size_t n = 0; n < cubes.size(); ++n) {
    std::string w = "/cubes/" + std::to_string(n);
    if (!cubes[n].is_array()) fail(w, "expected an array");
    for (std::size_t x = 0; x < cubes[n].size(); ++x) {
      auto name = str(cubes[n][x], w + "/" + std::to_string(x));
      if (where_is.count(name)) fail(w + "/" + std::to_string(x), "duplicate cube name '" + name + "'");
      where_is[name] = {static_cast<int>(n), k.add_element(static_cast<int>(n), name)};
    }
  }
  Json d = j.contains("d") ? j["d"] : Json::object();
  if (!d.is_object()) fail("/d", "expected an object");
  for (auto it = d.begin(); it != d.end(); ++it) {
    std::string w = "/d/" + it.key();
    int i = 0, e = 0;
    char close = 0;
    std::istringstream ks(it.key());
    char open = 0, comma = 0;
    if (!(ks >> open >> i >> comma >> e >> close) || open != '(' || comma != ',' || close != ')' || e < 0 || e > 1 ||
        i < 1)
      fail(w, "expected a key \"(i,eps)\"");
    if (!it.value().is_object()) fail(w, "expected an object");
    for (auto c = it.value().begin(); c != it.value().end(); ++c) {
      auto src = where_is.find(c.key());
      if (src == where_is.end()) fail(w + "/" + c.key(), "unknown cube");
      auto [n, x] = src->second;
      if (i > n) fail(w + "/" + c.key(), "face index above the cube dimension");
      auto img = where_is.find(str(c.value(), w + "/" + c.key()));
      if (img == where_is.end() || img->second.first != n - 1) fail(w + "/" + c.key(), "image is not an (n-1)-cube");
      set_face(k, n, i, e, x, img->second.second);
    }
  }
  return k;
}

// ---------------------------------------------------------------------------

Json to_json(const Semicategory& k) {
  Json objects = Json::array(), order = Json::array(), gens = Json::object(), rels = Json::array();
  for (int o = 0; o < k.object_count(); ++o) objects.push_back(k.object_name(o));
  for (auto [a, b] : k.order_pairs()) order.push_back({k.object_name(a), k.object_name(b)});
  for (const auto& g : k.generators())
    gens[g.name + ":" + k.object_name(g.source) + "->" + k.object_name(g.target)] = to_json(g.cells);
  auto chain = [&](const ChainSimplex& c) {
    Json arr = Json::array();
    for (std::size_t l = 0; l < c.gens.size(); ++l) {
      const auto& g = k.generators()[c.gens[l]];
      arr.push_back({g.name, simplex_json(g.cells, c.comps[l])});
    }
    return arr;
  };
  for (const auto& r : k.relations()) rels.push_back({{"lhs", chain(r.lhs)}, {"rhs", chain(r.rhs)}});
  return {{"objects", objects}, {"order", order}, {"generators", gens}, {"relations", rels}};
}

Semicategory semicategory_from_json(const Json& j) {
  Semicategory k;
  const auto& objects = field(j, "objects", "");
  if (!objects.is_array()) fail("/objects", "expected an array");
  std::map<std::string, int> obj;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    auto name = str(objects[o], "/objects/" + std::to_string(o));
    if (obj.count(name)) fail("/objects/" + std::to_string(o), "duplicate object");
    obj[name] = k.add_object(name);
  }
  auto object = [&](const Json& v, const std::string& w) {
    auto it = obj.find(str(v, w));
    if (it == obj.end()) fail(w, "unknown object");
    return it->second;
  };
  if (j.contains("order")) {
    const auto& order = j["order"];
    if (!order.is_array()) fail("/order", "expected an array");
    for (std::size_t p = 0; p < order.size(); ++p) {
      std::string w = "/order/" + std::to_string(p);
      if (!order[p].is_array() || order[p].size() != 2) fail(w, "expected [a, b]");
      try {
        k.add_order(object(order[p][0], w + "/0"), object(order[p][1], w + "/1"));
      } catch (const InvalidInput& e) {
        fail(w, e.what());
      }
    }
  }
  Json gens = j.contains("generators") ? j["generators"] : Json::object();
  if (!gens.is_object()) fail("/generators", "expected an object");
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    std::string w = "/generators/" + it.key();
    std::string key = it.key(), name = key, ends = key;
    auto colon = key.find(':');
    if (colon != std::string::npos) {
      name = key.substr(0, colon);
      ends = key.substr(colon + 1);
    }
    auto arrow = ends.find("->");
    if (arrow == std::string::npos) fail(w, "expected a key \"a->b\" or \"name:a->b\"");
    int a = object(Json(ends.substr(0, arrow)), w);
    int b = object(Json(ends.substr(arrow + 2)), w);
    FiniteSimplicialSet cells;
    try {
      cells = simplicial_set_from_json(it.value());
      k.add_generator(name, a, b, cells);
    } catch (const InvalidInput& e) {
      fail(w, e.what());
    }
  }
  if (j.contains("relations")) {
    const auto& rels = j["relations"];
    if (!rels.is_array()) fail("/relations", "expected an array");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      std::string w = "/relations/" + std::to_string(r);
      auto side = [&](const std::string& s) {
        const auto& arr = field(rels[r], s, w);
        if (!arr.is_array() || arr.empty()) fail(w + "/" + s, "expected a nonempty array");
        ChainSimplex c;
        for (std::size_t l = 0; l < arr.size(); ++l) {
          std::string lw = w + "/" + s + "/" + std::to_string(l);
          if (!arr[l].is_array() || arr[l].size() != 2) fail(lw, "expected [generator, simplex]");
          auto g = k.find_generator(str(arr[l][0], lw + "/0"));
          if (!g) fail(lw, "unknown generator");
          c.gens.push_back(*g);
          c.comps.push_back(simplex_from(k.generators()[*g].cells, arr[l][1], -1, lw + "/1"));
        }
        return c;
      };
      try {
        k.add_relation(side("lhs"), side("rhs"));
      } catch (const InvalidInput& e) {
        std::string msg = e.what();
        if (msg.rfind("/relations", 0) == 0) throw;
        fail(w, msg);
      }
    }
  }
  return k;
}

Json to_json(const Semifunctor& f, const Semicategory& source, const SemicategoryView& target) {
  Json objects = Json::object(), cells = Json::object();
  for (int o = 0; o < source.object_count(); ++o)
    objects[source.object_name(o)] = target.object_name(f.on_objects.at(o));
  for (std::size_t g = 0; g < source.generators().size(); ++g) {
    const auto& gen = source.generators()[g];
    const auto& hom = target.hom(f.on_objects[gen.source], f.on_objects[gen.target]);
    Json m = Json::object();
    for (int d = 0; d <= gen.cells.max_dim(); ++d)
      for (int i = 0; i < gen.cells.count(d); ++i) m[gen.cells.name(d, i)] = simplex_json(hom, f.on_generators[g].image[d][i]);
    cells[gen.name] = m;
  }
  return {{"on_objects", objects}, {"on_cells", cells}};
}

// ---------------------------------------------------------------------------

Json to_json(const RootedTree& t) {
  Json nodes = Json::array(), parent = Json::object();
  for (int v = 0; v < t.size(); ++v) {
    nodes.push_back(t.node(v));
    if (t.parent(v) >= 0) parent[t.node(v)] = t.node(t.parent(v));
  }
  return {{"nodes", nodes}, {"parent", parent}};
}

RootedTree tree_from_json(const Json& j) {
  const auto& nodes = field(j, "nodes", "");
  if (!nodes.is_array()) fail("/nodes", "expected an array");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    names.push_back(str(nodes[v], "/nodes/" + std::to_string(v)));
    index[names.back()] = static_cast<int>(v);
  }
  std::vector<int> parent(names.size(), -1);
  Json par = j.contains("parent") ? j["parent"] : Json::object();
  if (!par.is_object()) fail("/parent", "expected an object");
  for (auto it = par.begin(); it != par.end(); ++it) {
    auto c = index.find(it.key());
    auto p = index.find(str(it.value(), "/parent/" + it.key()));
    if (c == index.end() || p == index.end()) fail("/parent/" + it.key(), "unknown node");
    parent[c->second] = p->second;
  }
  return RootedTree(names, parent);
}

Json to_json(const BoxedObject& a) {
  Json arr = Json::array();
  for (const auto& t : a.factors) arr.push_back(to_json(t));
  return arr;
}

BoxedObject boxed_object_from_json(const Json& j) {
  if (!j.is_array()) fail("", "a boxed object is an array of trees");
  BoxedObject a;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      a.factors.push_back(tree_from_json(j[i]));
    } catch (const InvalidInput& e) {
      fail("/" + std::to_string(i), e.what());
    }
  }
  return a;
}

Json to_json(const BoxedMorphism& f) {
  Json arr = Json::array();
  for (const auto& g : f.word()) {
    switch (g.kind) {
      case BoxGenerator::Kind::tree_map:
        arr.push_back({{"kind", "tree_map"}, {"factor", g.index}, {"map", g.map}, {"target", to_json(g.target)}});
        break;
      case BoxGenerator::Kind::face:
        arr.push_back({{"kind", "face"}, {"index", g.index}, {"eps", g.eps}});
        break;
      case BoxGenerator::Kind::degeneracy:
        arr.push_back({{"kind", "degeneracy"}, {"index", g.index}});
        break;
      case BoxGenerator::Kind::permutation:
        arr.push_back({{"kind", "permutation"}, {"perm", g.map}});
        break;
    }
  }
  return arr;
}

BoxedMorphism boxed_morphism_from_json(const BoxedObject& source, const Json& word) {
  if (!word.is_array()) fail("", "a morphism is an array of generator records");
  auto m = BoxedMorphism::identity(source);
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::string w = "/" + std::to_string(i);
    const auto& r = word[i];
    auto kind = str(field(r, "kind", w), w + "/kind");
    BoxGenerator g;
    auto ints = [&](const std::string& key) {
      const auto& arr = field(r, key, w);
      if (!arr.is_array()) fail(w + "/" + key, "expected an array");
      std::vector<int> out;
      for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(integer(arr[k], w + "/" + key + "/" + std::to_string(k)));
      return out;
    };
    if (kind == "tree_map") {
      g.kind = BoxGenerator::Kind::tree_map;
      g.index = integer(field(r, "factor", w), w + "/factor");
      g.map = ints("map");
      g.target = tree_from_json(field(r, "target", w));
    } else if (kind == "face") {
      g.kind = BoxGenerator::Kind::face;
      g.index = integer(field(r, "index", w), w + "/index");
      g.eps = integer(field(r, "eps", w), w + "/eps");
    } else if (kind == "degeneracy") {
      g.kind = BoxGenerator::Kind::degeneracy;
      g.index = integer(field(r, "index", w), w + "/index");
    } else if (kind == "permutation") {
      g.kind = BoxGenerator::Kind::permutation;
      g.map = ints("perm");
    } else {
      fail(w + "/kind", "unknown generator kind '" + kind + "'");
    }
    try {
      m = compose(BoxedMorphism::generator(m.target(), g), m);
    } catch (const InvalidInput& e) {
      fail(w, e.what());
    }
  }
  return m;
}

Json to_json(const HomologyReport& h) {
  Json groups = Json::array();
  for (const auto& g : h.groups) groups.push_back({{"rank", g.rank}, {"torsion", g.torsion}, {"group", g.to_string()}});
  return {{"computed_up_to", h.computed_up_to}, {"groups", groups}};
}

}  // namespace hda
