#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "wellpath/matchings.hpp"
#include "wellpath/paths.hpp"
#include "wellpath/trees.hpp"

namespace wellpath {

struct BijectionError : std::runtime_error {
    enum class Code {
        NotMotzkin,
        NotPositive,
        SizeTooSmall,
        InconsistentMatching,
        NotInImageClass,
        BadInput,
    };
    Code code;

    BijectionError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Input of the step-adding map: a positive path of size n, an integer
// k in [n+1] and a bit b.
struct StepAddInput {
    WellLabelledPath path;
    int k;
    int b;

    bool operator==(const StepAddInput&) const = default;
};

// Labels of leaves (their own labels) and of internal non-root vertices
// (induced labels n+1..2n-2); the root carries no label.
using FullLabelling = std::map<VertexAddress, int>;

// Motzkin paths of size n >= 2  <->  labelled binary trees with n leaves.
LabelledBinaryTree phi(const WellLabelledPath& path);
WellLabelledPath phi_inv(const LabelledBinaryTree& tree);

// Positive paths of size n  <->  marked labelled binary trees with n leaves.
MarkedLabelledBinaryTree phi_prime(const WellLabelledPath& path);
WellLabelledPath phi_prime_inv(const MarkedLabelledBinaryTree& mtree);

// Induced labelling of internal non-root vertices: repeatedly take the
// unlabelled non-root vertex with both children labelled whose smaller
// child label is least, and give it the next label from n+1 upward.
FullLabelling chen_labelling(const LabelledBinaryTree& tree);

// Trees with n leaves <-> matchings on [2n-2], pairing sibling labels.
// Extended to n = 1 (single leaf <-> empty matching).
Matching psi(const LabelledBinaryTree& tree);
LabelledBinaryTree psi_inv(const Matching& matching);

// Marked trees with n leaves <-> matchings on [2n].
Matching psi_prime(const MarkedLabelledBinaryTree& mtree);
MarkedLabelledBinaryTree psi_prime_inv(const Matching& matching);

// Adds one step to a positive path of size n; the result is positive or
// Motzkin of size n+1. Bijection B_n x [n+1] x {0,1} -> B_{n+1} + A_{n+1}.
WellLabelledPath add_step(const StepAddInput& input);
StepAddInput add_step_inv(const WellLabelledPath& path);

}  // namespace wellpath
