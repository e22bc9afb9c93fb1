#include "wellpath/polytope.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wellpath {

namespace {

constexpr long long kShardSize = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4ecb9f1bd3bf3ULL;
    return x ^ (x >> 31);
}

// Hits within one shard; sub-seed derived from (seed, shard), so the
// total is independent of how shards are distributed over workers.
long long shard_hits(int n, std::uint64_t seed, long long shard, long long count) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(shard + 1))));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    long long hits = 0;
    for (long long s = 0; s < count; ++s) {
        double sum = 0.0;
        bool inside = true;
        for (int i = 0; i < n; ++i) {
            sum += unit(rng);
            if (sum < 0.0) {
                inside = false;
                break;
            }
        }
        if (inside) ++hits;
    }
    return hits;
}

VolumeEstimate finish(int n, long long samples, long long hits) {
    const double scale = std::pow(2.0, n);
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    VolumeEstimate est;
    est.n = n;
    est.samples = samples;
    est.estimate = scale * p;
    est.std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.exact = exact_volume(n);
    return est;
}

}  // namespace

bool polytope_contains(std::span<const double> point, int n) {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("point dimension mismatch");
    double sum = 0.0;
    for (double x : point) {
        if (x < -1.0 || x > 1.0) return false;
        sum += x;
        if (sum < 0.0) return false;
    }
    return true;
}

Rational exact_volume(long n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    return Rational(double_factorial(2 * n - 1), factorial(n));
}

VolumeEstimate mc_estimate(int n, long long samples, std::uint64_t seed) {
    if (n < 1 || samples < 1) throw std::invalid_argument("n and samples must be >= 1");
    const long long shards = (samples + kShardSize - 1) / kShardSize;
    long long hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(dynamic)
    for (long long s = 0; s < shards; ++s) {
        const long long count = std::min(kShardSize, samples - s * kShardSize);
        hits += shard_hits(n, seed, s, count);
    }
    return finish(n, samples, hits);
}

VolumeEstimate mc_estimate_serial(int n, long long samples, std::uint64_t seed) {
    if (n < 1 || samples < 1) throw std::invalid_argument("n and samples must be >= 1");
    const long long shards = (samples + kShardSize - 1) / kShardSize;
    long long hits = 0;
    for (long long s = 0; s < shards; ++s) {
        const long long count = std::min(kShardSize, samples - s * kShardSize);
        hits += shard_hits(n, seed, s, count);
    }
    return finish(n, samples, hits);
}

}  // namespace wellpath
