#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <span>
#include <vector>

#include "wellpath/paths.hpp"

namespace wellpath {

// Exact unbounded arithmetic for all counting results.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// m!! = m(m-2)(m-4)... ending at 1 or 2, with 0!! = (-1)!! = 1.
// Throws std::domain_error for m <= -2.
BigCount double_factorial(long m);
BigCount factorial(long n);
BigCount binomial(long n, long k);

// a_n: 0 for n < 2, (2n-3)!! for n >= 2.
BigCount count_motzkin(long n);
// b_n: 0 for n = 0, (2n-1)!! for n >= 1.
BigCount count_positive(long n);

// a_{n,k}: Motzkin paths of size n with k horizontal steps.
BigCount count_motzkin_refined(long n, long k);
// b_{n,k}: positive paths of size n with k horizontal steps.
BigCount count_positive_refined(long n, long k);

// Permutations of size n whose up-down sequence is positive / Dyck.
BigCount count_positive_updown(long n);
BigCount count_dyck_updown(long n);

bool is_positive_updown(std::span<const int> perm);
bool is_dyck_updown(std::span<const int> perm);

// Exhaustive generators, independent of the bijections: step words
// satisfying the prefix conditions, then compatible permutations.
std::vector<WellLabelledPath> enumerate_motzkin(int n);
std::vector<WellLabelledPath> enumerate_positive(int n);
void for_each_motzkin(int n, const std::function<void(const WellLabelledPath&)>& fn);
void for_each_positive(int n, const std::function<void(const WellLabelledPath&)>& fn);

// EGF coefficients of A(z) and B(z) to order N, computed by iterating
// the functional equations A = z^2/2 + zA + A^2/2 and
// B = z + zB + A + AB in exact rational arithmetic.
struct SeriesCoefficients {
    std::vector<Rational> a;  // a[n] = a_n / n!
    std::vector<Rational> b;  // b[n] = b_n / n!
    int order;
};

SeriesCoefficients series_coefficients(int N);

}  // namespace wellpath
