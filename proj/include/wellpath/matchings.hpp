#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wellpath {

struct MatchingError : std::runtime_error {
    enum class Code { NotAnInvolution, FixedPoint, CoverageGap, BadRange };
    Code code;

    MatchingError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Fixed-point-free involution on {1,...,2m}, stored as a full partner
// array for O(1) lookup. 1-based throughout.
class Matching {
public:
    Matching() = default;  // empty matching (m = 0)

    static Matching from_pairs(const std::vector<std::pair<int, int>>& pairs);
    static Matching from_partner(std::vector<int> partner);  // partner[i-1] = partner of i

    int ground_size() const { return static_cast<int>(partner_.size()); }  // 2m
    int partner(int i) const { return partner_[i - 1]; }

    // Sorted pair list, i < j within each pair, sorted by first element.
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<int> partner_;
};

inline Matching validate_matching(const std::vector<std::pair<int, int>>& pairs) {
    return Matching::from_pairs(pairs);
}

// All (2m-1)!! matchings on [2m]: the smallest free element is paired
// with each larger free element in increasing order, recursively.
std::vector<Matching> enumerate_matchings(int m);

// Uniform over all (2m-1)!! matchings: repeatedly pair the smallest
// unmatched element with a uniformly chosen other unmatched element.
Matching random_matching(int m, std::mt19937_64& rng);
Matching random_matching(int m, std::uint64_t seed);

// Number of pairs (i,j) with i <= low_max and high_min <= j <= high_max.
// An empty high range (high_min = high_max + 1) yields 0.
int block_pair_count(const Matching& matching, int low_max, int high_min, int high_max);

}  // namespace wellpath
