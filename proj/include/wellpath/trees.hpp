#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wellpath {

struct TreeError : std::runtime_error {
    enum class Code { SizeMismatch, BadAddress, BadLabels };
    Code code;

    TreeError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Root-to-vertex path in canonical child order; empty = root.
using VertexAddress = std::vector<int>;

// Full binary tree with distinct positive leaf labels and unordered
// children. Construction canonicalizes: at every internal vertex the
// child with the smaller minimum leaf label comes first, so structural
// equality coincides with unordered-tree equality. Nodes are shared and
// immutable.
class LabelledBinaryTree {
public:
    static LabelledBinaryTree leaf(int label);
    static LabelledBinaryTree internal(LabelledBinaryTree a, LabelledBinaryTree b);

    bool is_leaf() const;
    int leaf_label() const;                        // leaves only
    LabelledBinaryTree child(int i) const;  // i in {0,1}, canonical order

    int size() const;       // number of leaves
    int min_label() const;  // minimum leaf label

    std::vector<int> leaf_labels_sorted() const;

    bool operator==(const LabelledBinaryTree& other) const;
    bool operator!=(const LabelledBinaryTree& other) const { return !(*this == other); }

    // Compact canonical encoding, usable as a map/set key.
    std::string encode() const;

private:
    struct Node;
    explicit LabelledBinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct MarkedLabelledBinaryTree {
    LabelledBinaryTree tree;
    VertexAddress mark;

    bool operator==(const MarkedLabelledBinaryTree&) const = default;
    std::string encode() const;
};

// Rebuilds the tree in canonical child order (identity on trees built
// through the constructors; kept as the explicit normal-form operation).
LabelledBinaryTree canonicalize(const LabelledBinaryTree& tree);

// Order-preserving relabelling: leaf i is replaced by the i-th smallest
// element of target_label_set. Requires leaf labels {1..n} and
// |target_label_set| = n.
LabelledBinaryTree relabel(const LabelledBinaryTree& tree,
                           const std::vector<int>& target_label_set);

// Leaves whose sibling is an internal vertex.
int single_leaf_count(const LabelledBinaryTree& tree);

// Unmarked leaves whose sibling is marked or internal.
int quasi_single_leaf_count(const MarkedLabelledBinaryTree& mtree);

struct VertexInfo {
    bool is_leaf;
    int leaf_label;  // 0 for internal vertices
    std::optional<VertexAddress> sibling;  // absent at the root
};

VertexInfo resolve(const LabelledBinaryTree& tree, const VertexAddress& address);

// All vertex addresses (2n-1 of them), root first, depth-first.
std::vector<VertexAddress> all_addresses(const LabelledBinaryTree& tree);

// All canonical labelled binary trees with leaf labels {1..n}; (2n-3)!!
// of them for n >= 2. Independent of the path bijections.
std::vector<LabelledBinaryTree> enumerate_trees(int n);
std::vector<MarkedLabelledBinaryTree> enumerate_marked_trees(int n);

}  // namespace wellpath
