#include "wellpath/trees.hpp"

#include <algorithm>
#include <utility>

namespace wellpath {

struct LabelledBinaryTree::Node {
    int label;  // > 0 for leaves, 0 for internal vertices
    std::shared_ptr<const Node> first, second;
    int size;
    int min_label;
};

LabelledBinaryTree LabelledBinaryTree::leaf(int label) {
    if (label <= 0) throw TreeError(TreeError::Code::BadLabels, "leaf label must be positive");
    auto n = std::make_shared<Node>(Node{label, nullptr, nullptr, 1, label});
    return LabelledBinaryTree(std::move(n));
}

LabelledBinaryTree LabelledBinaryTree::internal(LabelledBinaryTree a, LabelledBinaryTree b) {
    if (b.min_label() < a.min_label()) std::swap(a, b);
    auto n = std::make_shared<Node>(Node{0, a.node_, b.node_, a.size() + b.size(),
                                         a.min_label()});
    return LabelledBinaryTree(std::move(n));
}

bool LabelledBinaryTree::is_leaf() const { return node_->label > 0; }

int LabelledBinaryTree::leaf_label() const {
    if (!is_leaf()) throw TreeError(TreeError::Code::BadAddress, "not a leaf");
    return node_->label;
}

LabelledBinaryTree LabelledBinaryTree::child(int i) const {
    if (is_leaf() || (i != 0 && i != 1))
        throw TreeError(TreeError::Code::BadAddress, "bad child index");
    return LabelledBinaryTree(i == 0 ? node_->first : node_->second);
}

int LabelledBinaryTree::size() const { return node_->size; }
int LabelledBinaryTree::min_label() const { return node_->min_label; }

namespace {

void collect_labels(const LabelledBinaryTree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.leaf_label());
    } else {
        collect_labels(t.child(0), out);
        collect_labels(t.child(1), out);
    }
}

}  // namespace

std::vector<int> LabelledBinaryTree::leaf_labels_sorted() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    collect_labels(*this, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool LabelledBinaryTree::operator==(const LabelledBinaryTree& other) const {
    if (node_ == other.node_) return true;
    if (is_leaf() != other.is_leaf()) return false;
    if (is_leaf()) return leaf_label() == other.leaf_label();
    return child(0) == other.child(0) && child(1) == other.child(1);
}

std::string LabelledBinaryTree::encode() const {
    if (is_leaf()) return std::to_string(leaf_label());
    return "(" + child(0).encode() + "," + child(1).encode() + ")";
}

std::string MarkedLabelledBinaryTree::encode() const {
    std::string s = tree.encode() + "@";
    for (int d : mark) s += static_cast<char>('0' + d);
    return s;
}

LabelledBinaryTree canonicalize(const LabelledBinaryTree& tree) {
    if (tree.is_leaf()) return tree;
    return LabelledBinaryTree::internal(canonicalize(tree.child(0)),
                                        canonicalize(tree.child(1)));
}

namespace {

LabelledBinaryTree relabel_rec(const LabelledBinaryTree& t, const std::vector<int>& target) {
    if (t.is_leaf()) {
        const int i = t.leaf_label();
        if (i < 1 || i > static_cast<int>(target.size()))
            throw TreeError(TreeError::Code::SizeMismatch, "leaf label outside {1..n}");
        return LabelledBinaryTree::leaf(target[static_cast<size_t>(i) - 1]);
    }
    return LabelledBinaryTree::internal(relabel_rec(t.child(0), target),
                                        relabel_rec(t.child(1), target));
}

}  // namespace

LabelledBinaryTree relabel(const LabelledBinaryTree& tree,
                           const std::vector<int>& target_label_set) {
    std::vector<int> target = target_label_set;
    std::sort(target.begin(), target.end());
    if (static_cast<int>(target.size()) != tree.size())
        throw TreeError(TreeError::Code::SizeMismatch,
                        "target label set size differs from tree size");
    return relabel_rec(tree, target);
}

namespace {

int single_leaves(const LabelledBinaryTree& t) {
    if (t.is_leaf()) return 0;
    int count = single_leaves(t.child(0)) + single_leaves(t.child(1));
    const bool l0 = t.child(0).is_leaf(), l1 = t.child(1).is_leaf();
    if (l0 != l1) ++count;  // exactly one leaf child, and it is single
    return count;
}

int quasi_single_leaves(const LabelledBinaryTree& t, const VertexAddress& mark,
                        VertexAddress& here) {
    if (t.is_leaf()) return 0;
    int count = 0;
    for (int i = 0; i < 2; ++i) {
        const LabelledBinaryTree& c = t.child(i);
        if (c.is_leaf()) {
            here.push_back(i);
            const bool leaf_marked = here == mark;
            here.back() = 1 - i;
            const bool sibling_marked = here == mark;
            here.pop_back();
            const bool sibling_internal = !t.child(1 - i).is_leaf();
            if (!leaf_marked && (sibling_marked || sibling_internal)) ++count;
        } else {
            here.push_back(i);
            count += quasi_single_leaves(c, mark, here);
            here.pop_back();
        }
    }
    return count;
}

}  // namespace

int single_leaf_count(const LabelledBinaryTree& tree) { return single_leaves(tree); }

int quasi_single_leaf_count(const MarkedLabelledBinaryTree& mtree) {
    resolve(mtree.tree, mtree.mark);  // rejects dangling marks
    VertexAddress here;
    return quasi_single_leaves(mtree.tree, mtree.mark, here);
}

VertexInfo resolve(const LabelledBinaryTree& tree, const VertexAddress& address) {
    LabelledBinaryTree cur = tree;
    for (int i : address) {
        if (cur.is_leaf() || (i != 0 && i != 1))
            throw TreeError(TreeError::Code::BadAddress, "address does not resolve");
        cur = cur.child(i);
    }
    VertexInfo info;
    info.is_leaf = cur.is_leaf();
    info.leaf_label = info.is_leaf ? cur.leaf_label() : 0;
    if (!address.empty()) {
        VertexAddress sib = address;
        sib.back() = 1 - sib.back();
        info.sibling = sib;
    }
    return info;
}

namespace {

void addresses_rec(const LabelledBinaryTree& t, VertexAddress& here,
                   std::vector<VertexAddress>& out) {
    out.push_back(here);
    if (t.is_leaf()) return;
    for (int i = 0; i < 2; ++i) {
        LabelledBinaryTree c = t.child(i);
        here.push_back(i);
        addresses_rec(c, here, out);
        here.pop_back();
    }
}

// Trees over an arbitrary label set; unordered pairs are generated once
// by forcing the minimum label into the first part.
std::vector<LabelledBinaryTree> trees_over(const std::vector<int>& labels) {
    if (labels.size() == 1) return {LabelledBinaryTree::leaf(labels[0])};
    std::vector<LabelledBinaryTree> out;
    const size_t k = labels.size();
    // iterate over subsets of labels[1..] joined with labels[0]
    const size_t rest = k - 1;
    for (size_t mask = 0; mask + 1 < (size_t{1} << rest); ++mask) {
        std::vector<int> part1{labels[0]}, part2;
        for (size_t i = 0; i < rest; ++i)
            (mask >> i & 1 ? part1 : part2).push_back(labels[i + 1]);
        for (const auto& t1 : trees_over(part1))
            for (const auto& t2 : trees_over(part2))
                out.push_back(LabelledBinaryTree::internal(t1, t2));
    }
    return out;
}

}  // namespace

std::vector<VertexAddress> all_addresses(const LabelledBinaryTree& tree) {
    std::vector<VertexAddress> out;
    VertexAddress here;
    addresses_rec(tree, here, out);
    return out;
}

std::vector<LabelledBinaryTree> enumerate_trees(int n) {
    if (n < 1) throw TreeError(TreeError::Code::SizeMismatch, "n must be >= 1");
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = i + 1;
    return trees_over(labels);
}

std::vector<MarkedLabelledBinaryTree> enumerate_marked_trees(int n) {
    std::vector<MarkedLabelledBinaryTree> out;
    for (const auto& t : enumerate_trees(n))
        for (const auto& addr : all_addresses(t))
            out.push_back(MarkedLabelledBinaryTree{t, addr});
    return out;
}

}  // namespace wellpath
