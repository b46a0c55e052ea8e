#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

// Deterministic randomness utilities. All experiment randomness flows from a
// single 64-bit seed through the stable derivations below, so results are
// bit-reproducible across runs of the same binary. Distribution sampling is
// hand-rolled because the std::<random> distributions are not guaranteed to
// produce identical streams across standard library implementations.

namespace firma {

// SplitMix64 finalizer; good avalanche, used to mix seed material.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over a string, folded through splitmix. Stable across platforms.
inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h);
}

// Derive a child seed from a parent seed and a sequence of mix-in values.
// derive(seed, hash_str(method), hash_str(scenario)) gives the per-run seed;
// adding a new method or scenario never perturbs existing derivations.
inline std::uint64_t derive_seed(std::uint64_t base) { return splitmix64(base); }

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t next, Rest... rest) {
    return derive_seed(splitmix64(base ^ splitmix64(next ^ 0x632be59bd9b4e019ULL)), rest...);
}

// mt19937_64 engine (sequence fixed by the standard) plus deterministic
// sampling helpers.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (no cached spare; keeps state minimal).
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Gamma(shape, 1) via Marsaglia-Tsang, with the standard boost for shape < 1.
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Dirichlet(alpha * 1_n) draw on the n-simplex.
    std::vector<double> dirichlet(double alpha, std::size_t n) {
        std::vector<double> p(n);
        double sum = 0.0;
        for (auto& v : p) {
            v = gamma(alpha);
            sum += v;
        }
        if (sum <= 0.0) {  // pathological underflow at tiny alpha: fall back to one-hot
            p.assign(n, 0.0);
            p[below(n)] = 1.0;
            return p;
        }
        for (auto& v : p) v /= sum;
        return p;
    }

    // Fisher-Yates; deterministic given the engine state.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace firma
