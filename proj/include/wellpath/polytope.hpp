#pragma once

#include <cstdint>
#include <span>

#include "wellpath/counting.hpp"

namespace wellpath {

// Monte Carlo verification of vol(Pi_n) = (2n-1)!!/n!, where Pi_n is the
// set of points in [-1,1]^n with all prefix sums nonnegative.

struct VolumeEstimate {
    int n;
    long long samples;
    double estimate;   // 2^n * hit fraction
    double std_error;  // 2^n * sqrt(p(1-p)/samples)
    Rational exact;    // (2n-1)!!/n!
};

bool polytope_contains(std::span<const double> point, int n);

Rational exact_volume(long n);

// Samples are split into fixed-size shards, each with a sub-seed derived
// from (seed, shard index), so the result is identical for any worker
// count. The parallel kernel shards across OpenMP threads; the serial
// kernel is the reference implementation.
VolumeEstimate mc_estimate(int n, long long samples, std::uint64_t seed);
VolumeEstimate mc_estimate_serial(int n, long long samples, std::uint64_t seed);

}  // namespace wellpath
