#pragma once

#include <string>

#include "json.hpp"

#include "hda/boxedtree.hpp"
#include "hda/cube.hpp"
#include "hda/homology.hpp"
#include "hda/semicat.hpp"

namespace hda {

using Json = nlohmann::ordered_json;

/// Reads a JSON document; syntax errors become InvalidInput with the byte position.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// {"cells": [[names per dim]], "faces": {cell: [[target, [degeneracy indices]], ...]}}
Json to_json(const FiniteSimplicialSet& s);
FiniteSimplicialSet simplicial_set_from_json(const Json& j);

/// {"site": name, "elements": {object: [names]}, "maps": {generator: {element: image}}}
Json to_json(const FinitePresheaf& k);
/// Sites "cube" and "tree" (optional "max_nodes").
FinitePresheaf presheaf_from_json(const Json& j);

/// {"cubes": [[names per dim]], "d": {"(i,eps)": {cell: image}}}; names unique across dimensions.
Json precubical_to_json(const PrecubicalSet& k);
PrecubicalSet precubical_from_json(const Json& j);

/// {"objects": [...], "order": [[a, b], ...], "generators": {"name:a->b": simplicial set},
///  "relations": [{"lhs": [[generator, simplex], ...], "rhs": [...]}]}
/// with simplices written [cell, [degeneracy indices]]. A key "a->b" names the generator "a->b".
Json to_json(const Semicategory& k);
Semicategory semicategory_from_json(const Json& j);

/// {"on_objects": {object: object}, "on_cells": {generator: {cell: simplex}}}
Json to_json(const Semifunctor& f, const Semicategory& source, const SemicategoryView& target);

/// {"nodes": [...], "parent": {child: parent}}
Json to_json(const RootedTree& t);
RootedTree tree_from_json(const Json& j);
/// An array of trees.
Json to_json(const BoxedObject& a);
BoxedObject boxed_object_from_json(const Json& j);
/// An array of {"kind": "tree_map"|"face"|"degeneracy"|"permutation", ...} records.
Json to_json(const BoxedMorphism& f);
BoxedMorphism boxed_morphism_from_json(const BoxedObject& source, const Json& word);

Json to_json(const HomologyReport& h);

}  // namespace hda
