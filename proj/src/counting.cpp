#include "wellpath/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace wellpath {

BigCount double_factorial(long m) {
    if (m <= -2) throw std::domain_error("double factorial undefined for m <= -2");
    BigCount out = 1;
    for (long v = m; v >= 2; v -= 2) out *= v;
    return out;
}

BigCount factorial(long n) {
    if (n < 0) throw std::domain_error("factorial undefined for n < 0");
    BigCount out = 1;
    for (long v = 2; v <= n; ++v) out *= v;
    return out;
}

BigCount binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigCount count_motzkin(long n) {
    if (n < 0) throw std::domain_error("n must be >= 0");
    if (n < 2) return 0;
    return double_factorial(2 * n - 3);
}

BigCount count_positive(long n) {
    if (n < 0) throw std::domain_error("n must be >= 0");
    if (n == 0) return 0;
    return double_factorial(2 * n - 1);
}

BigCount count_motzkin_refined(long n, long k) {
    if (n < 2 || k < 0 || k > n) return 0;
    if ((n - k) % 2 != 0) return 0;
    const BigCount choose = binomial(n, k) * binomial(n - 2, k);
    if (choose == 0) return 0;  // keeps the double factorials in domain
    return choose * factorial(k) * double_factorial(n - k - 1) * double_factorial(n - k - 3);
}

BigCount count_positive_refined(long n, long k) {
    if (n < 1 || k < 0 || k > n) return 0;
    const BigCount choose = binomial(n, k) * binomial(n - 1, k);
    if (choose == 0) return 0;
    if ((n - k) % 2 == 0) {
        const BigCount df = double_factorial(n - k - 1);
        return choose * factorial(k) * df * df;
    }
    return choose * factorial(k) * double_factorial(n - k) * double_factorial(n - k - 2);
}

BigCount count_positive_updown(long n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (n % 2 == 0) {
        const BigCount df = double_factorial(n - 1);
        return df * df;
    }
    return double_factorial(n) * double_factorial(n - 2);
}

BigCount count_dyck_updown(long n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    if (n % 2 != 0) return 0;
    return double_factorial(n - 1) * double_factorial(n - 3);
}

bool is_positive_updown(std::span<const int> perm) {
    return classify(path_from_permutation(perm)) == PathClass::Positive;
}

bool is_dyck_updown(std::span<const int> perm) {
    return classify(path_from_permutation(perm)) == PathClass::Motzkin;
}

namespace {

// Enumerate step words by DFS under the prefix condition, then all
// compatible permutations per word. Independent of the bijections.
void words_rec(int n, bool motzkin, std::vector<Step>& word, int sum,
               const std::function<void(const std::vector<Step>&)>& emit) {
    const int len = n - 1;
    const int pos = static_cast<int>(word.size());
    if (pos == len) {
        if (!motzkin || sum == -1) emit(word);
        return;
    }
    for (Step s : {Step{-1}, Step{0}, Step{+1}}) {
        const int next = sum + s;
        // inner prefix sums must stay >= 0; the final step of a Motzkin
        // word may drop to -1
        if (next < 0 && !(motzkin && pos == len - 1 && next == -1)) continue;
        word.push_back(s);
        words_rec(n, motzkin, word, next, emit);
        word.pop_back();
    }
}

bool compatible(const std::vector<Step>& word, const std::vector<int>& perm) {
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] == -1 && !(perm[i] < perm[i + 1])) return false;
        if (word[i] == +1 && !(perm[i] > perm[i + 1])) return false;
    }
    return true;
}

void for_each_path(int n, bool motzkin,
                   const std::function<void(const WellLabelledPath&)>& fn) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    std::vector<Step> word;
    words_rec(n, motzkin, word, 0, [&](const std::vector<Step>& w) {
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        do {
            if (compatible(w, perm)) fn(WellLabelledPath{w, perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
}

}  // namespace

void for_each_motzkin(int n, const std::function<void(const WellLabelledPath&)>& fn) {
    for_each_path(n, true, fn);
}

void for_each_positive(int n, const std::function<void(const WellLabelledPath&)>& fn) {
    for_each_path(n, false, fn);
}

std::vector<WellLabelledPath> enumerate_motzkin(int n) {
    std::vector<WellLabelledPath> out;
    for_each_motzkin(n, [&](const WellLabelledPath& p) { out.push_back(p); });
    return out;
}

std::vector<WellLabelledPath> enumerate_positive(int n) {
    std::vector<WellLabelledPath> out;
    for_each_positive(n, [&](const WellLabelledPath& p) { out.push_back(p); });
    return out;
}

SeriesCoefficients series_coefficients(int N) {
    if (N < 0) throw std::domain_error("N must be >= 0");
    SeriesCoefficients sc;
    sc.order = N;
    sc.a.assign(static_cast<size_t>(N) + 1, Rational(0));
    sc.b.assign(static_cast<size_t>(N) + 1, Rational(0));
    // a_n = [n=2]/2 + a_{n-1} + (1/2) sum_k a_k a_{n-k}; the quadratic
    // term only involves orders 2..n-2 because a_0 = a_1 = 0, so each
    // coefficient is determined by the lower ones.
    for (int n = 0; n <= N; ++n) {
        Rational v(0);
        if (n == 2) v += Rational(1, 2);
        if (n >= 1) v += sc.a[static_cast<size_t>(n) - 1];
        Rational conv(0);
        for (int k = 0; k <= n; ++k)
            conv += sc.a[static_cast<size_t>(k)] * sc.a[static_cast<size_t>(n - k)];
        sc.a[static_cast<size_t>(n)] = v + conv / 2;
    }
    // b_n = [n=1] + b_{n-1} + a_n + sum_k a_k b_{n-k}
    for (int n = 0; n <= N; ++n) {
        Rational v(0);
        if (n == 1) v += 1;
        if (n >= 1) v += sc.b[static_cast<size_t>(n) - 1];
        v += sc.a[static_cast<size_t>(n)];
        for (int k = 0; k <= n; ++k)
            v += sc.a[static_cast<size_t>(k)] * sc.b[static_cast<size_t>(n - k)];
        sc.b[static_cast<size_t>(n)] = v;
    }
    return sc;
}

}  // namespace wellpath
