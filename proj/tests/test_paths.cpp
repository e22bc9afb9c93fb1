#include <doctest.h>

#include <random>

#include "wellpath/counting.hpp"
#include "wellpath/paths.hpp"

using namespace wellpath;

namespace {

WellLabelledPath make(std::vector<Step> steps, std::vector<int> labels) {
    return validate_path(std::move(steps), std::move(labels));
}

const WellLabelledPath alpha2 = make({-1}, {1, 2});
const WellLabelledPath beta1 = make({}, {1});

// direct checker, independent of validate_path's internals
bool compatible_direct(const std::vector<Step>& steps, const std::vector<int>& labels) {
    if (labels.size() != steps.size() + 1) return false;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == -1 && labels[i] >= labels[i + 1]) return false;
        if (steps[i] == +1 && labels[i] <= labels[i + 1]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validate_path accepts alpha2 and beta1") {
    CHECK(alpha2.size() == 2);
    CHECK(beta1.size() == 1);
}

TEST_CASE("validate_path rejects bad input") {
    CHECK_THROWS_AS(validate_path({+1}, {1, 2}), PathError);  // +1 needs a descent
    CHECK_THROWS_AS(validate_path({0}, {1}), PathError);      // length mismatch
    CHECK_THROWS_AS(validate_path({0}, {1, 3}), PathError);   // not a permutation
    try {
        validate_path({+1}, {1, 2});
        FAIL("expected StepLabelConflict");
    } catch (const PathError& e) {
        CHECK(e.code == PathError::Code::StepLabelConflict);
        CHECK(e.index == 1);
    }
}

TEST_CASE("validate_path matches direct checker on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Step> steps(static_cast<size_t>(n) - 1);
        for (auto& s : steps) s = static_cast<Step>(static_cast<int>(rng() % 3) - 1);
        bool accepted = true;
        try {
            validate_path(steps, perm);
        } catch (const PathError&) {
            accepted = false;
        }
        CHECK(accepted == compatible_direct(steps, perm));
    }
}

TEST_CASE("classify") {
    CHECK(classify(alpha2) == PathClass::Motzkin);
    CHECK(classify(beta1) == PathClass::Positive);
    CHECK(classify(make({0}, {2, 1})) == PathClass::Positive);
    CHECK(classify(make({-1, 0}, {1, 2, 3})) == PathClass::Neither);
    // last inner prefix may not dip below zero for Motzkin
    CHECK(classify(make({-1, -1}, {1, 2, 3})) == PathClass::Neither);
    CHECK(classify(make({0, -1}, {2, 1, 3})) == PathClass::Motzkin);
}

TEST_CASE("classification invariants over all small paths") {
    for (int n = 1; n <= 6; ++n) {
        for_each_motzkin(n, [&](const WellLabelledPath& p) {
            CHECK(classify(p) == PathClass::Motzkin);
            CHECK(final_height(p) == -1);
        });
        for_each_positive(n, [&](const WellLabelledPath& p) {
            CHECK(classify(p) == PathClass::Positive);
            int sum = 0;
            for (Step s : p.steps) {
                sum += s;
                CHECK(sum >= 0);
            }
        });
    }
}

TEST_CASE("horizontal_step_count") {
    CHECK(horizontal_step_count(make({0, -1}, {2, 1, 3})) == 1);
    CHECK(horizontal_step_count(alpha2) == 0);
    CHECK(horizontal_step_count(make({0, 0}, {3, 1, 2})) == 2);
}

TEST_CASE("final_height") {
    CHECK(final_height(beta1) == 0);
    CHECK(final_height(make({+1}, {2, 1})) == 1);
    CHECK(final_height(make({+1, -1, 0}, {3, 1, 2, 4})) == 0);
}

TEST_CASE("reverse_path") {
    CHECK(reverse_path(make({+1}, {2, 1})) == alpha2);
    CHECK(reverse_path(alpha2) == make({+1}, {2, 1}));
    for (int n = 1; n <= 5; ++n)
        for_each_positive(n, [&](const WellLabelledPath& p) {
            CHECK(reverse_path(reverse_path(p)) == p);
        });
}

TEST_CASE("reverse maps the k=n positive class onto Motzkin paths") {
    // B'_n: positive, first step +1, greatest unit-prefix k equals n
    for (int n = 2; n <= 6; ++n) {
        long motzkin_count = 0;
        for_each_motzkin(n, [&](const WellLabelledPath&) { ++motzkin_count; });
        long bprime = 0;
        for_each_positive(n, [&](const WellLabelledPath& p) {
            if (p.steps[0] != +1) return;
            int sum = 0, best = -1;
            for (int t = 1; t <= n - 1; ++t) {
                sum += p.steps[static_cast<size_t>(t) - 1];
                if (sum < 1) break;
                if (sum == 1) best = t + 1;
            }
            if (best != n) return;
            ++bprime;
            CHECK(classify(reverse_path(p)) == PathClass::Motzkin);
        });
        CHECK(bprime == motzkin_count);
    }
}

TEST_CASE("path_from_permutation") {
    CHECK(path_from_permutation(std::vector<int>{2, 1, 3}).steps ==
          std::vector<Step>{+1, -1});
    CHECK(path_from_permutation(std::vector<int>{1, 2}).steps == std::vector<Step>{-1});
    CHECK(path_from_permutation(std::vector<int>{3, 2, 1}).steps ==
          std::vector<Step>{+1, +1});
    CHECK_THROWS_AS(path_from_permutation(std::vector<int>{1, 3}), PathError);
}

TEST_CASE("zero-horizontal paths are determined by their permutation") {
    for (int n = 1; n <= 5; ++n)
        for_each_positive(n, [&](const WellLabelledPath& p) {
            if (horizontal_step_count(p) != 0) return;
            CHECK(path_from_permutation(p.labels) == p);
        });
}
