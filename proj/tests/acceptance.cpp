// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wellpath/bijections.hpp"
#include "wellpath/counting.hpp"
#include "wellpath/json_io.hpp"
#include "wellpath/polytope.hpp"

using namespace wellpath;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name
              << "\n";
    if (!ok) ++failures;
}

// 1. |A_n| = (2n-3)!! for n = 2..7 and |B_n| = (2n-1)!! for n = 1..7.
void criterion1() {
    bool ok = true;
    for (int n = 2; n <= 7; ++n) {
        long long c = 0;
        for_each_motzkin(n, [&](const WellLabelledPath&) { ++c; });
        ok &= BigCount(c) == double_factorial(2 * n - 3);
    }
    for (int n = 1; n <= 7; ++n) {
        long long c = 0;
        for_each_positive(n, [&](const WellLabelledPath&) { ++c; });
        ok &= BigCount(c) == double_factorial(2 * n - 1);
    }
    report(1, "exhaustive cardinalities equal double factorials", ok);
}

// 2. Round trips and exact codomain coverage for phi, phi', psi, psi'
//    on every object of size <= 6.
void criterion2() {
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        std::set<std::string> tree_images;
        std::set<std::vector<std::pair<int, int>>> matching_images;
        long total = 0;
        for_each_motzkin(n, [&](const WellLabelledPath& p) {
            const auto t = phi(p);
            ok &= phi_inv(t) == p;
            tree_images.insert(t.encode());
            ++total;
        });
        ok &= static_cast<long>(tree_images.size()) == total;
        const auto trees = enumerate_trees(n);
        ok &= tree_images.size() == trees.size();
        for (const auto& t : trees) {
            const auto m = psi(t);
            ok &= psi_inv(m) == t;
            matching_images.insert(m.pairs());
        }
        ok &= matching_images.size() == trees.size();
        ok &= matching_images.size() == enumerate_matchings(n - 1).size();
    }
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> mtree_images;
        std::set<std::vector<std::pair<int, int>>> matching_images;
        long total = 0;
        for_each_positive(n, [&](const WellLabelledPath& p) {
            const auto mt = phi_prime(p);
            ok &= phi_prime_inv(mt) == p;
            mtree_images.insert(mt.encode());
            ++total;
        });
        ok &= static_cast<long>(mtree_images.size()) == total;
        const auto mtrees = enumerate_marked_trees(n);
        ok &= mtree_images.size() == mtrees.size();
        for (const auto& mt : mtrees) {
            const auto m = psi_prime(mt);
            ok &= psi_prime_inv(m) == mt;
            matching_images.insert(m.pairs());
        }
        ok &= matching_images.size() == mtrees.size();
        ok &= matching_images.size() == enumerate_matchings(n).size();
    }
    report(2, "bijection round trips and codomain coverage, sizes <= 6", ok);
}

// 3. Refined count formulas equal exhaustive horizontal-step histograms.
void criterion3() {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        std::map<int, long long> mh, ph;
        for_each_motzkin(n, [&](const WellLabelledPath& p) { ++mh[horizontal_step_count(p)]; });
        for_each_positive(n, [&](const WellLabelledPath& p) { ++ph[horizontal_step_count(p)]; });
        for (int k = 0; k <= n; ++k) {
            ok &= count_motzkin_refined(n, k) == BigCount(mh[k]);
            ok &= count_positive_refined(n, k) == BigCount(ph[k]);
        }
    }
    report(3, "refined counts match exhaustive histograms, n <= 7", ok);
}

// 4. Horizontal steps = single/quasi-single leaves = block pair counts.
void criterion4() {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for_each_motzkin(n, [&](const WellLabelledPath& p) {
            const int h = horizontal_step_count(p);
            const auto t = phi(p);
            ok &= single_leaf_count(t) == h;
            ok &= block_pair_count(psi(t), n, n + 1, 2 * n - 2) == h;
        });
    for (int n = 1; n <= 6; ++n)
        for_each_positive(n, [&](const WellLabelledPath& p) {
            const int h = horizontal_step_count(p);
            const auto mt = phi_prime(p);
            ok &= quasi_single_leaf_count(mt) == h;
            ok &= block_pair_count(psi_prime(mt), n, n + 1, 2 * n - 1) == h;
        });
    report(4, "statistic transport through phi/psi and phi'/psi'", ok);
}

// 5. Up-down permutation counts vs brute force over S_n, n <= 8.
void criterion5() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        long long pos = 0, dyck = 0;
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        do {
            if (is_positive_updown(perm)) ++pos;
            if (is_dyck_updown(perm)) ++dyck;
        } while (std::next_permutation(perm.begin(), perm.end()));
        ok &= BigCount(pos) == count_positive_updown(n);
        if (n >= 2) ok &= BigCount(dyck) == count_dyck_updown(n);
    }
    report(5, "up-down permutation counts vs brute force, n <= 8", ok);
}

// 6. add_step is a multiset bijection B_n x [n+1] x {0,1} -> B_{n+1} + A_{n+1}.
void criterion6() {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        std::map<std::string, int> image, target;
        for_each_positive(n, [&](const WellLabelledPath& p) {
            for (int k = 1; k <= n + 1; ++k)
                for (int b = 0; b <= 1; ++b)
                    ++image[path_to_json(add_step(StepAddInput{p, k, b})).dump()];
        });
        auto record = [&](const WellLabelledPath& p) { ++target[path_to_json(p).dump()]; };
        for_each_positive(n + 1, record);
        for_each_motzkin(n + 1, record);
        ok &= image == target;
    }
    report(6, "step-adding map is a bijection onto B_{n+1} + A_{n+1}, n <= 5", ok);
}

// 7. Series recurrences reproduce the closed-form counts to order 20.
void criterion7() {
    bool ok = true;
    const auto sc = series_coefficients(20);
    for (int n = 0; n <= 20; ++n) {
        ok &= sc.a[static_cast<size_t>(n)] * factorial(n) == Rational(count_motzkin(n));
        ok &= sc.b[static_cast<size_t>(n)] * factorial(n) == Rational(count_positive(n));
        if (n <= 19)
            ok &= sc.b[static_cast<size_t>(n)] * factorial(n) ==
                  Rational(count_motzkin(n + 1));  // b_n = a_{n+1}
    }
    report(7, "series coefficients match closed forms to order 20", ok);
}

// 8. Even final height iff the mark of phi'(P) lies on a leaf.
void criterion8() {
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        for_each_positive(n, [&](const WellLabelledPath& p) {
            const auto mt = phi_prime(p);
            ok &= (final_height(p) % 2 == 0) == resolve(mt.tree, mt.mark).is_leaf;
        });
    report(8, "final-height parity matches leaf/internal mark, sizes <= 6", ok);
}

// 9. Monte Carlo volume within 3 standard errors for n = 1..6; one
//    seeded retry permitted.
void criterion9() {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        bool hit = false;
        for (std::uint64_t seed : {20240901ULL, 20240902ULL}) {
            const auto est = mc_estimate(n, 1000000, seed);
            if (std::abs(est.estimate - static_cast<double>(est.exact)) <=
                3.0 * est.std_error) {
                hit = true;
                break;
            }
        }
        ok &= hit;
    }
    report(9, "Monte Carlo volume within 3 sigma of (2n-1)!!/n!, n = 1..6", ok);
}

// 10. Sampler uniformity for n = 3: 150000 samples, each of the 15 paths
//     within +-15% of 1/15 and chi-square below the p = 0.001 threshold.
void criterion10() {
    std::map<std::string, long> freq;
    for (const auto& p : enumerate_positive(3)) freq[path_to_json(p).dump()] = 0;
    const long samples = 150000;
    std::mt19937_64 rng(31337);
    bool ok = true;
    for (long s = 0; s < samples; ++s) {
        const Matching m = random_matching(3, rng);
        const auto key = path_to_json(phi_prime_inv(psi_prime_inv(m))).dump();
        auto it = freq.find(key);
        if (it == freq.end()) {
            ok = false;
            break;
        }
        ++it->second;
    }
    if (ok) {
        const double expected = static_cast<double>(samples) / 15.0;
        double chi2 = 0;
        for (const auto& [_, c] : freq) {
            ok &= std::abs(static_cast<double>(c) - expected) <= 0.15 * expected;
            const double d = static_cast<double>(c) - expected;
            chi2 += d * d / expected;
        }
        ok &= chi2 < 36.1233;  // chi2 p=0.001 critical value, df = 14
    }
    report(10, "uniform sampling of positive paths of size 3", ok);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << dt.count() << " ms)\n";
    return failures == 0 ? 0 : 1;
}
