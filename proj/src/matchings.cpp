#include "wellpath/matchings.hpp"

#include <algorithm>

namespace wellpath {

Matching Matching::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int n2 = static_cast<int>(pairs.size()) * 2;
    std::vector<int> partner(static_cast<size_t>(n2), 0);
    for (auto [a, b] : pairs) {
        if (a == b) throw MatchingError(MatchingError::Code::FixedPoint,
                                        "pair (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") is a fixed point");
        if (a < 1 || b < 1 || a > n2 || b > n2)
            throw MatchingError(MatchingError::Code::CoverageGap,
                                "pair element outside {1..2m}");
        if (partner[a - 1] != 0 || partner[b - 1] != 0)
            throw MatchingError(MatchingError::Code::NotAnInvolution,
                                "element matched twice");
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    for (int i = 0; i < n2; ++i)
        if (partner[i] == 0)
            throw MatchingError(MatchingError::Code::CoverageGap,
                                "element " + std::to_string(i + 1) + " unmatched");
    Matching m;
    m.partner_ = std::move(partner);
    return m;
}

Matching Matching::from_partner(std::vector<int> partner) {
    const int n2 = static_cast<int>(partner.size());
    if (n2 % 2 != 0)
        throw MatchingError(MatchingError::Code::CoverageGap, "odd ground set");
    for (int i = 1; i <= n2; ++i) {
        const int j = partner[i - 1];
        if (j == i) throw MatchingError(MatchingError::Code::FixedPoint, "fixed point");
        if (j < 1 || j > n2 || partner[j - 1] != i)
            throw MatchingError(MatchingError::Code::NotAnInvolution, "not an involution");
    }
    Matching m;
    m.partner_ = std::move(partner);
    return m;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int i = 1; i <= ground_size(); ++i)
        if (partner(i) > i) out.emplace_back(i, partner(i));
    return out;
}

namespace {

void enumerate_rec(std::vector<int>& partner, std::vector<Matching>& out) {
    const int n2 = static_cast<int>(partner.size());
    int a = 0;
    for (int i = 1; i <= n2; ++i)
        if (partner[i - 1] == 0) { a = i; break; }
    if (a == 0) {
        out.push_back(Matching::from_partner(partner));
        return;
    }
    for (int b = a + 1; b <= n2; ++b) {
        if (partner[b - 1] != 0) continue;
        partner[a - 1] = b;
        partner[b - 1] = a;
        enumerate_rec(partner, out);
        partner[a - 1] = 0;
        partner[b - 1] = 0;
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int m) {
    if (m < 0) throw MatchingError(MatchingError::Code::BadRange, "m must be >= 0");
    std::vector<int> partner(static_cast<size_t>(2 * m), 0);
    std::vector<Matching> out;
    enumerate_rec(partner, out);
    return out;
}

Matching random_matching(int m, std::mt19937_64& rng) {
    std::vector<int> free_elems(static_cast<size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) free_elems[static_cast<size_t>(i)] = i + 1;
    std::vector<int> partner(static_cast<size_t>(2 * m), 0);
    while (!free_elems.empty()) {
        const int a = free_elems.front();
        free_elems.erase(free_elems.begin());
        std::uniform_int_distribution<size_t> pick(0, free_elems.size() - 1);
        const size_t j = pick(rng);
        const int b = free_elems[j];
        free_elems.erase(free_elems.begin() + static_cast<std::ptrdiff_t>(j));
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    return Matching::from_partner(std::move(partner));
}

Matching random_matching(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_matching(m, rng);
}

int block_pair_count(const Matching& matching, int low_max, int high_min, int high_max) {
    const int n2 = matching.ground_size();
    if (low_max < 1 || low_max >= high_min || high_max > n2 || high_min > high_max + 1)
        throw MatchingError(MatchingError::Code::BadRange, "bad block ranges");
    int count = 0;
    for (int i = 1; i <= low_max; ++i) {
        const int j = matching.partner(i);
        if (j >= high_min && j <= high_max) ++count;
    }
    return count;
}

}  // namespace wellpath
