#include "wellpath/bijections.hpp"

#include <algorithm>
#include <set>

namespace wellpath {

namespace {

using Err = BijectionError::Code;

// lambda_I: i -> i-th smallest element of I (1-based).
int lambda(const std::vector<int>& sorted_set, int i) {
    return sorted_set[static_cast<size_t>(i) - 1];
}

// rank of v within a sorted set (lambda_I^{-1}).
int lambda_inv(const std::vector<int>& sorted_set, int v) {
    auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), v);
    return static_cast<int>(it - sorted_set.begin()) + 1;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Replace each leaf label by its rank within the tree's label set.
LabelledBinaryTree normalize_rec(const LabelledBinaryTree& t, const std::vector<int>& set) {
    if (t.is_leaf())
        return LabelledBinaryTree::leaf(lambda_inv(set, t.leaf_label()));
    return LabelledBinaryTree::internal(normalize_rec(t.child(0), set),
                                        normalize_rec(t.child(1), set));
}

LabelledBinaryTree normalize_tree(const LabelledBinaryTree& t) {
    return normalize_rec(t, t.leaf_labels_sorted());
}

// First-block extraction shared by the p_1 = +1 cases of phi and phi':
// the block p_1..p_{k-1} reversed and negated, labels reversed and
// normalized within I' = {sigma_1..sigma_k}.
WellLabelledPath reversed_prefix(const WellLabelledPath& p, int k,
                                 const std::vector<int>& i_prime) {
    WellLabelledPath out;
    out.steps.reserve(static_cast<size_t>(k) - 1);
    for (int i = 1; i <= k - 1; ++i)
        out.steps.push_back(static_cast<Step>(-p.steps[static_cast<size_t>(k - i) - 1]));
    out.labels.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        out.labels.push_back(lambda_inv(i_prime, p.labels[static_cast<size_t>(k - i)]));
    return out;
}

WellLabelledPath suffix_path(const WellLabelledPath& p, int k,
                             const std::vector<int>& i_second) {
    const int n = p.size();
    WellLabelledPath out;
    for (int i = k; i < n - 1; ++i) out.steps.push_back(p.steps[static_cast<size_t>(i)]);
    for (int i = k; i < n; ++i)
        out.labels.push_back(lambda_inv(i_second, p.labels[static_cast<size_t>(i)]));
    return out;
}

// Least k with p_1 + ... + p_k = 0 (phi case iii; exists, p_k = -1).
int least_zero_prefix(const WellLabelledPath& p) {
    int sum = 0;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        sum += p.steps[i];
        if (sum == 0) return static_cast<int>(i) + 1;
    }
    throw BijectionError(Err::NotMotzkin, "no prefix sums to zero");
}

// Greatest k <= n with partial sums s_1..s_{k-2} >= 1 and s_{k-1} = 1
// (phi' case iii; s_1 = p_1 = 1 so k >= 2).
int greatest_unit_prefix(const WellLabelledPath& p) {
    const int n = p.size();
    int sum = 0, best = -1;
    for (int t = 1; t <= n - 1; ++t) {
        sum += p.steps[static_cast<size_t>(t) - 1];
        if (sum < 1) break;
        if (sum == 1) best = t + 1;
    }
    if (best < 0) throw BijectionError(Err::NotPositive, "no unit prefix");
    return best;
}

LabelledBinaryTree phi_impl(const WellLabelledPath& p) {
    const int n = p.size();
    if (n == 2)  // alpha_2
        return LabelledBinaryTree::internal(LabelledBinaryTree::leaf(1),
                                            LabelledBinaryTree::leaf(2));
    if (p.steps[0] == 0) {
        const int s1 = p.labels[0];
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != s1) rest.push_back(v);
        WellLabelledPath sub;
        sub.steps.assign(p.steps.begin() + 1, p.steps.end());
        for (size_t i = 1; i < p.labels.size(); ++i)
            sub.labels.push_back(lambda_inv(rest, p.labels[i]));
        return LabelledBinaryTree::internal(LabelledBinaryTree::leaf(s1),
                                            relabel(phi_impl(sub), rest));
    }
    // p_1 = +1: split at the least k with zero prefix sum
    const int k = least_zero_prefix(p);
    const std::vector<int> i_prime =
        sorted({p.labels.begin(), p.labels.begin() + k});
    const std::vector<int> i_second =
        sorted({p.labels.begin() + k, p.labels.end()});
    const auto left = phi_impl(reversed_prefix(p, k, i_prime));
    const auto right = phi_impl(suffix_path(p, k, i_second));
    return LabelledBinaryTree::internal(relabel(left, i_prime),
                                        relabel(right, i_second));
}

WellLabelledPath phi_inv_impl(const LabelledBinaryTree& t) {
    const int n = t.size();
    if (n < 2) throw BijectionError(Err::SizeTooSmall, "tree must have >= 2 leaves");
    if (n == 2) return WellLabelledPath{{Step{-1}}, {1, 2}};
    const auto c0 = t.child(0), c1 = t.child(1);
    if (c0.is_leaf() || c1.is_leaf()) {
        // case (ii): the leaf child is sigma_1, prepend a horizontal step
        const auto& leafc = c0.is_leaf() ? c0 : c1;
        const auto& other = c0.is_leaf() ? c1 : c0;
        const int s1 = leafc.leaf_label();
        const std::vector<int> rest = other.leaf_labels_sorted();
        const WellLabelledPath sub = phi_inv_impl(normalize_tree(other));
        WellLabelledPath out;
        out.steps.push_back(Step{0});
        out.steps.insert(out.steps.end(), sub.steps.begin(), sub.steps.end());
        out.labels.push_back(s1);
        for (int v : sub.labels) out.labels.push_back(lambda(rest, v));
        return out;
    }
    // case (iii): both children internal; the first block is the child
    // whose path starts with the smaller original label (p_k = -1 forces
    // sigma_k < sigma_{k+1})
    const std::vector<int> set0 = c0.leaf_labels_sorted();
    const std::vector<int> set1 = c1.leaf_labels_sorted();
    WellLabelledPath p0 = phi_inv_impl(normalize_tree(c0));
    WellLabelledPath p1 = phi_inv_impl(normalize_tree(c1));
    const int head0 = lambda(set0, p0.labels[0]);
    const int head1 = lambda(set1, p1.labels[0]);
    const auto& i_prime = head0 < head1 ? set0 : set1;
    const auto& i_second = head0 < head1 ? set1 : set0;
    const auto& pp = head0 < head1 ? p0 : p1;   // reversed first block
    const auto& ps = head0 < head1 ? p1 : p0;   // suffix
    const int k = static_cast<int>(i_prime.size());
    WellLabelledPath out;
    out.labels.resize(static_cast<size_t>(n));
    for (int i = 1; i <= k; ++i)
        out.labels[static_cast<size_t>(k - i)] = lambda(i_prime, pp.labels[static_cast<size_t>(i) - 1]);
    for (int i = 1; i <= n - k; ++i)
        out.labels[static_cast<size_t>(k + i) - 1] = lambda(i_second, ps.labels[static_cast<size_t>(i) - 1]);
    out.steps.resize(static_cast<size_t>(n) - 1);
    for (int j = 1; j <= k - 1; ++j)
        out.steps[static_cast<size_t>(j) - 1] = static_cast<Step>(-pp.steps[static_cast<size_t>(k - j) - 1]);
    out.steps[static_cast<size_t>(k) - 1] = Step{-1};
    for (int i = 1; i <= n - k - 1; ++i)
        out.steps[static_cast<size_t>(k + i) - 1] = ps.steps[static_cast<size_t>(i) - 1];
    return out;
}

// Index of `sub` among the canonical children of internal(other, sub):
// label sets are disjoint, so min-label comparison decides.
int child_position(const LabelledBinaryTree& sub, const LabelledBinaryTree& other) {
    return sub.min_label() < other.min_label() ? 0 : 1;
}

MarkedLabelledBinaryTree phi_prime_impl(const WellLabelledPath& p) {
    const int n = p.size();
    if (n == 1) return MarkedLabelledBinaryTree{LabelledBinaryTree::leaf(1), {}};  // rho_1
    if (p.steps[0] == 0) {
        const int s1 = p.labels[0];
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != s1) rest.push_back(v);
        WellLabelledPath subpath;
        subpath.steps.assign(p.steps.begin() + 1, p.steps.end());
        for (size_t i = 1; i < p.labels.size(); ++i)
            subpath.labels.push_back(lambda_inv(rest, p.labels[i]));
        const MarkedLabelledBinaryTree sub = phi_prime_impl(subpath);
        const LabelledBinaryTree marked = relabel(sub.tree, rest);
        const LabelledBinaryTree leafc = LabelledBinaryTree::leaf(s1);
        VertexAddress mark{child_position(marked, leafc)};
        mark.insert(mark.end(), sub.mark.begin(), sub.mark.end());
        return MarkedLabelledBinaryTree{LabelledBinaryTree::internal(leafc, marked),
                                        std::move(mark)};
    }
    const int k = greatest_unit_prefix(p);
    if (k == n) {
        // class B': the whole reversed path is Motzkin; mark the root
        return MarkedLabelledBinaryTree{phi_impl(reverse_path(p)), {}};
    }
    const std::vector<int> i_prime = sorted({p.labels.begin(), p.labels.begin() + k});
    const std::vector<int> i_second = sorted({p.labels.begin() + k, p.labels.end()});
    const LabelledBinaryTree unmarked =
        relabel(phi_impl(reversed_prefix(p, k, i_prime)), i_prime);
    const MarkedLabelledBinaryTree sub = phi_prime_impl(suffix_path(p, k, i_second));
    const LabelledBinaryTree marked = relabel(sub.tree, i_second);
    VertexAddress mark{child_position(marked, unmarked)};
    mark.insert(mark.end(), sub.mark.begin(), sub.mark.end());
    return MarkedLabelledBinaryTree{LabelledBinaryTree::internal(unmarked, marked),
                                    std::move(mark)};
}

WellLabelledPath phi_prime_inv_impl(const MarkedLabelledBinaryTree& mt) {
    const int n = mt.tree.size();
    if (n == 1) {
        if (!mt.mark.empty())
            throw BijectionError(Err::BadInput, "bad mark on single-leaf tree");
        return WellLabelledPath{{}, {1}};  // beta_1
    }
    if (mt.mark.empty())  // class B': reverse of phi^{-1}
        return reverse_path(phi_inv_impl(mt.tree));
    const int mc = mt.mark[0];
    if (mc != 0 && mc != 1)
        throw BijectionError(Err::BadInput, "bad mark address");
    const LabelledBinaryTree marked = mt.tree.child(mc);
    const LabelledBinaryTree other = mt.tree.child(1 - mc);
    const VertexAddress tail(mt.mark.begin() + 1, mt.mark.end());
    if (other.is_leaf()) {
        // case (ii): unmarked leaf child is sigma_1
        const int s1 = other.leaf_label();
        const std::vector<int> rest = marked.leaf_labels_sorted();
        const WellLabelledPath sub =
            phi_prime_inv_impl(MarkedLabelledBinaryTree{normalize_tree(marked), tail});
        WellLabelledPath out;
        out.steps.push_back(Step{0});
        out.steps.insert(out.steps.end(), sub.steps.begin(), sub.steps.end());
        out.labels.push_back(s1);
        for (int v : sub.labels) out.labels.push_back(lambda(rest, v));
        return out;
    }
    // case (iii), k < n: the unmarked internal child is the reversed
    // Motzkin block, the marked child is the positive suffix
    const std::vector<int> i_prime = other.leaf_labels_sorted();
    const std::vector<int> i_second = marked.leaf_labels_sorted();
    const int k = static_cast<int>(i_prime.size());
    const WellLabelledPath pp = phi_inv_impl(normalize_tree(other));
    const WellLabelledPath ps =
        phi_prime_inv_impl(MarkedLabelledBinaryTree{normalize_tree(marked), tail});
    WellLabelledPath out;
    out.labels.resize(static_cast<size_t>(n));
    for (int i = 1; i <= k; ++i)
        out.labels[static_cast<size_t>(k - i)] = lambda(i_prime, pp.labels[static_cast<size_t>(i) - 1]);
    for (int i = 1; i <= n - k; ++i)
        out.labels[static_cast<size_t>(k + i) - 1] = lambda(i_second, ps.labels[static_cast<size_t>(i) - 1]);
    out.steps.resize(static_cast<size_t>(n) - 1);
    for (int j = 1; j <= k - 1; ++j)
        out.steps[static_cast<size_t>(j) - 1] = static_cast<Step>(-pp.steps[static_cast<size_t>(k - j) - 1]);
    // p_k is forced by well-labelledness: +1 on a descent, -1 on an ascent
    out.steps[static_cast<size_t>(k) - 1] =
        out.labels[static_cast<size_t>(k) - 1] > out.labels[static_cast<size_t>(k)] ? Step{+1}
                                                                                    : Step{-1};
    for (int i = 1; i <= n - k - 1; ++i)
        out.steps[static_cast<size_t>(k + i) - 1] = ps.steps[static_cast<size_t>(i) - 1];
    return out;
}

// Flat vertex table used by the Chen labelling and the sibling pairing.
struct VertexTable {
    struct Rec {
        VertexAddress addr;
        int child0 = -1, child1 = -1;  // indices into the table
        int label = 0;                 // leaf label, or induced label once assigned
        bool is_leaf = false;
    };
    std::vector<Rec> recs;
    int root = 0;

    int build(const LabelledBinaryTree& t, VertexAddress& here) {
        const int id = static_cast<int>(recs.size());
        recs.push_back(Rec{here, -1, -1, t.is_leaf() ? t.leaf_label() : 0, t.is_leaf()});
        if (!t.is_leaf()) {
            for (int i = 0; i < 2; ++i) {
                here.push_back(i);
                const int c = build(t.child(i), here);
                here.pop_back();
                (i == 0 ? recs[static_cast<size_t>(id)].child0
                        : recs[static_cast<size_t>(id)].child1) = c;
            }
        }
        return id;
    }
};

void assign_chen_labels(VertexTable& vt, int n) {
    int next = n + 1;
    while (true) {
        int best = -1, best_min = 0;
        for (int id = 0; id < static_cast<int>(vt.recs.size()); ++id) {
            auto& r = vt.recs[static_cast<size_t>(id)];
            if (r.is_leaf || r.label != 0 || id == vt.root) continue;
            const auto& a = vt.recs[static_cast<size_t>(r.child0)];
            const auto& b = vt.recs[static_cast<size_t>(r.child1)];
            if (a.label == 0 || b.label == 0) continue;
            const int mn = std::min(a.label, b.label);
            if (best < 0 || mn < best_min) {
                best = id;
                best_min = mn;
            }
        }
        if (best < 0) break;
        vt.recs[static_cast<size_t>(best)].label = next++;
    }
}

}  // namespace

LabelledBinaryTree phi(const WellLabelledPath& path) {
    if (classify(path) != PathClass::Motzkin)
        throw BijectionError(Err::NotMotzkin, "phi requires a Motzkin path");
    return phi_impl(path);
}

WellLabelledPath phi_inv(const LabelledBinaryTree& tree) {
    return phi_inv_impl(tree);
}

MarkedLabelledBinaryTree phi_prime(const WellLabelledPath& path) {
    if (classify(path) != PathClass::Positive)
        throw BijectionError(Err::NotPositive, "phi' requires a positive path");
    return phi_prime_impl(path);
}

WellLabelledPath phi_prime_inv(const MarkedLabelledBinaryTree& mtree) {
    resolve(mtree.tree, mtree.mark);  // validates the mark
    return phi_prime_inv_impl(mtree);
}

FullLabelling chen_labelling(const LabelledBinaryTree& tree) {
    const int n = tree.size();
    if (n < 2) throw BijectionError(Err::SizeTooSmall, "tree must have >= 2 leaves");
    VertexTable vt;
    VertexAddress here;
    vt.root = vt.build(tree, here);
    assign_chen_labels(vt, n);
    FullLabelling out;
    for (int id = 0; id < static_cast<int>(vt.recs.size()); ++id) {
        if (id == vt.root && !vt.recs[static_cast<size_t>(id)].is_leaf) continue;
        out[vt.recs[static_cast<size_t>(id)].addr] = vt.recs[static_cast<size_t>(id)].label;
    }
    return out;
}

Matching psi(const LabelledBinaryTree& tree) {
    const int n = tree.size();
    if (n == 1) return Matching{};
    VertexTable vt;
    VertexAddress here;
    vt.root = vt.build(tree, here);
    assign_chen_labels(vt, n);
    std::vector<int> partner(static_cast<size_t>(2 * n - 2), 0);
    for (const auto& r : vt.recs) {
        if (r.is_leaf) continue;
        const int l0 = vt.recs[static_cast<size_t>(r.child0)].label;
        const int l1 = vt.recs[static_cast<size_t>(r.child1)].label;
        partner[static_cast<size_t>(l0) - 1] = l1;
        partner[static_cast<size_t>(l1) - 1] = l0;
    }
    return Matching::from_partner(std::move(partner));
}

LabelledBinaryTree psi_inv(const Matching& matching) {
    const int n2 = matching.ground_size();
    const int n = n2 / 2 + 1;
    if (n2 == 0) return LabelledBinaryTree::leaf(1);
    std::map<int, LabelledBinaryTree> comp;
    std::set<int> roots;
    for (int i = 1; i <= n; ++i) {
        comp.emplace(i, LabelledBinaryTree::leaf(i));
        roots.insert(i);
    }
    for (int next = n + 1; next <= 2 * n - 2; ++next) {
        int a = 0;
        for (int x : roots)
            if (roots.count(matching.partner(x))) { a = x; break; }
        if (a == 0)
            throw BijectionError(Err::InconsistentMatching,
                                 "no joinable pair among component roots");
        const int b = matching.partner(a);
        comp.emplace(next, LabelledBinaryTree::internal(comp.at(a), comp.at(b)));
        roots.erase(a);
        roots.erase(b);
        comp.erase(a);
        comp.erase(b);
        roots.insert(next);
    }
    const int x = *roots.begin(), y = *roots.rbegin();
    if (matching.partner(x) != y)
        throw BijectionError(Err::InconsistentMatching, "surviving roots are not partners");
    return LabelledBinaryTree::internal(comp.at(x), comp.at(y));
}

Matching psi_prime(const MarkedLabelledBinaryTree& mtree) {
    const int n = mtree.tree.size();
    resolve(mtree.tree, mtree.mark);
    std::vector<int> partner(static_cast<size_t>(2 * n), 0);
    if (n > 1) {
        const Matching base = psi(mtree.tree);
        for (int i = 1; i <= 2 * n - 2; ++i)
            partner[static_cast<size_t>(i) - 1] = base.partner(i);
    }
    if (mtree.mark.empty()) {
        partner[static_cast<size_t>(2 * n) - 2] = 2 * n;
        partner[static_cast<size_t>(2 * n) - 1] = 2 * n - 1;
    } else {
        const FullLabelling labels = chen_labelling(mtree.tree);
        const int k = labels.at(mtree.mark);
        VertexAddress sib = mtree.mark;
        sib.back() = 1 - sib.back();
        const int l = labels.at(sib);
        partner[static_cast<size_t>(k) - 1] = 2 * n;
        partner[static_cast<size_t>(2 * n) - 1] = k;
        partner[static_cast<size_t>(l) - 1] = 2 * n - 1;
        partner[static_cast<size_t>(2 * n) - 2] = l;
    }
    return Matching::from_partner(std::move(partner));
}

MarkedLabelledBinaryTree psi_prime_inv(const Matching& matching) {
    const int n2 = matching.ground_size();
    if (n2 < 2)
        throw BijectionError(Err::InconsistentMatching, "matching on [2n] with n >= 1 required");
    const int n = n2 / 2;
    std::vector<int> base(static_cast<size_t>(2 * n - 2));
    for (int i = 1; i <= 2 * n - 2; ++i) base[static_cast<size_t>(i) - 1] = matching.partner(i);
    if (matching.partner(2 * n) == 2 * n - 1)
        return MarkedLabelledBinaryTree{psi_inv(Matching::from_partner(std::move(base))), {}};
    const int k = matching.partner(2 * n);
    const int l = matching.partner(2 * n - 1);
    base[static_cast<size_t>(k) - 1] = l;
    base[static_cast<size_t>(l) - 1] = k;
    const LabelledBinaryTree tree = psi_inv(Matching::from_partner(std::move(base)));
    for (const auto& [addr, label] : chen_labelling(tree))
        if (label == k) return MarkedLabelledBinaryTree{tree, addr};
    throw BijectionError(Err::InconsistentMatching, "marked label not found in rebuilt tree");
}

WellLabelledPath add_step(const StepAddInput& input) {
    const int n = input.path.size();
    if (input.k < 1 || input.k > n + 1 || (input.b != 0 && input.b != 1))
        throw BijectionError(Err::BadInput, "k must be in [n+1] and b in {0,1}");
    if (classify(input.path) != PathClass::Positive)
        throw BijectionError(Err::NotPositive, "add_step requires a positive path");
    std::vector<int> target;  // [n+1] \ {k}
    for (int v = 1; v <= n + 1; ++v)
        if (v != input.k) target.push_back(v);
    WellLabelledPath out;
    for (int v : input.path.labels) out.labels.push_back(lambda(target, v));
    out.labels.push_back(input.k);
    out.steps = input.path.steps;
    const bool ascent = out.labels[static_cast<size_t>(n)] > out.labels[static_cast<size_t>(n) - 1];
    out.steps.push_back(static_cast<Step>(ascent ? input.b - 1 : input.b));
    return out;
}

StepAddInput add_step_inv(const WellLabelledPath& path) {
    const int np1 = path.size();
    if (np1 < 2 || classify(path) == PathClass::Neither)
        throw BijectionError(Err::NotInImageClass,
                            "path must be positive or Motzkin of size >= 2");
    const int k = path.labels.back();
    StepAddInput out;
    out.k = k;
    for (int i = 0; i + 1 < np1; ++i) {
        const int v = path.labels[static_cast<size_t>(i)];
        out.path.labels.push_back(v > k ? v - 1 : v);
    }
    out.path.steps.assign(path.steps.begin(), path.steps.end() - 1);
    const Step last = path.steps.back();
    const bool ascent = path.labels[static_cast<size_t>(np1) - 1] > path.labels[static_cast<size_t>(np1) - 2];
    out.b = ascent ? last + 1 : last;
    return out;
}

}  // namespace wellpath
