#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wellpath {

// A step of a labelled lattice path: -1 (down), 0 (horizontal), +1 (up).
using Step = std::int8_t;

struct PathError : std::runtime_error {
    enum class Code { LengthMismatch, NotAPermutation, StepLabelConflict };
    Code code;
    int index;  // 1-based step index for StepLabelConflict, -1 otherwise

    PathError(Code c, const std::string& msg, int idx = -1)
        : std::runtime_error(msg), code(c), index(idx) {}
};

// A pair (p, sigma): a step word of length n-1 over {-1,0,+1} and a
// permutation of {1,...,n} such that step -1 forces an ascent of the
// labels and step +1 forces a descent. Immutable after validation.
struct WellLabelledPath {
    std::vector<Step> steps;
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }
    bool operator==(const WellLabelledPath&) const = default;
};

enum class PathClass { Positive, Motzkin, Neither };

// Strict validation; never repairs input.
WellLabelledPath validate_path(std::vector<Step> steps, std::vector<int> labels);

// Motzkin: prefix sums >= 0 for j = 1..n-2 and total sum -1.
// Positive: all prefix sums >= 0. Size-1 path is Positive.
PathClass classify(const WellLabelledPath& path);

int horizontal_step_count(const WellLabelledPath& path);
int final_height(const WellLabelledPath& path);

// Labels reversed, steps reversed and negated. Involution.
WellLabelledPath reverse_path(const WellLabelledPath& path);

// The unique well-labelled path with no horizontal steps whose label
// sequence is the given permutation.
WellLabelledPath path_from_permutation(std::span<const int> perm);

const char* to_string(PathClass c);

}  // namespace wellpath
