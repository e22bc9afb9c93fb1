#include "wellpath/json_io.hpp"

namespace wellpath {

Json path_to_json(const WellLabelledPath& path) {
    Json j;
    j["steps"] = Json::array();
    for (Step s : path.steps) j["steps"].push_back(static_cast<int>(s));
    j["labels"] = path.labels;
    return j;
}

WellLabelledPath path_from_json(const Json& j) {
    std::vector<Step> steps;
    for (const auto& v : j.at("steps")) steps.push_back(static_cast<Step>(v.get<int>()));
    return validate_path(std::move(steps), j.at("labels").get<std::vector<int>>());
}

Json tree_to_json(const LabelledBinaryTree& tree) {
    if (tree.is_leaf()) return Json(tree.leaf_label());
    return Json::array({tree_to_json(tree.child(0)), tree_to_json(tree.child(1))});
}

LabelledBinaryTree tree_from_json(const Json& j) {
    if (j.is_number_integer()) return LabelledBinaryTree::leaf(j.get<int>());
    if (!j.is_array() || j.size() != 2)
        throw TreeError(TreeError::Code::BadLabels,
                        "tree node must be an integer or a two-element array");
    return LabelledBinaryTree::internal(tree_from_json(j[0]), tree_from_json(j[1]));
}

Json marked_tree_to_json(const MarkedLabelledBinaryTree& mtree) {
    Json j;
    j["tree"] = tree_to_json(mtree.tree);
    j["mark"] = mtree.mark;
    return j;
}

MarkedLabelledBinaryTree marked_tree_from_json(const Json& j) {
    MarkedLabelledBinaryTree mt{tree_from_json(j.at("tree")),
                                j.at("mark").get<std::vector<int>>()};
    resolve(mt.tree, mt.mark);  // reject dangling marks
    return mt;
}

Json matching_to_json(const Matching& matching) {
    Json j;
    auto arr = Json::array();
    for (auto [a, b] : matching.pairs()) arr.push_back(Json::array({a, b}));
    j["pairs"] = std::move(arr);
    return j;
}

Matching matching_from_json(const Json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs"))
        pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return Matching::from_pairs(pairs);
}

}  // namespace wellpath
