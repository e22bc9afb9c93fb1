#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "wellpath/matchings.hpp"
#include "wellpath/paths.hpp"
#include "wellpath/trees.hpp"

namespace wellpath {

// JSON-lines wire formats. Key order is fixed and output carries no
// whitespace, so serialize(parse(s)) is byte-stable.
//
//   path:        {"steps":[-1,0,1,...],"labels":[...]}
//   tree:        a leaf is an integer; an internal node is a two-element
//                array in canonical order
//   marked tree: {"tree":...,"mark":[0,1,...]}
//   matching:    {"pairs":[[1,3],[2,4]]}

using Json = nlohmann::ordered_json;

Json path_to_json(const WellLabelledPath& path);
WellLabelledPath path_from_json(const Json& j);

Json tree_to_json(const LabelledBinaryTree& tree);
LabelledBinaryTree tree_from_json(const Json& j);

Json marked_tree_to_json(const MarkedLabelledBinaryTree& mtree);
MarkedLabelledBinaryTree marked_tree_from_json(const Json& j);

Json matching_to_json(const Matching& matching);
Matching matching_from_json(const Json& j);

}  // namespace wellpath
