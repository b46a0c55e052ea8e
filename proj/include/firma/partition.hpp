#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "firma/dataset.hpp"
#include "firma/errors.hpp"
#include "firma/rng.hpp"

namespace firma {

enum class PartitionScheme { IID, Dirichlet, LabelSkew };

// How a dataset is split across clients. LabelSkew gives each client a quota
// of floor(n/N) samples composed of primary_frac from k_primary rotating
// primary classes, secondary_frac from the next k_primary+1 classes, and the
// remainder spread over all other classes.
struct PartitionSpec {
    PartitionScheme scheme = PartitionScheme::IID;
    int n_clients = 2;
    std::uint64_t seed = 0;
    double alpha = 0.5;        // Dirichlet concentration
    int k_primary = 1;         // LabelSkew primary class count
    double primary_frac = 0.70;
    double secondary_frac = 0.27;

    void validate(int n_classes) const {
        if (n_clients < 2) throw ConfigError("partition: need at least 2 clients");
        if (scheme == PartitionScheme::Dirichlet && alpha <= 0.0)
            throw ConfigError("partition: Dirichlet alpha must be positive");
        if (scheme == PartitionScheme::LabelSkew) {
            if (k_primary < 1 || k_primary > n_classes - 1)
                throw ConfigError("partition: k_primary out of range");
            if (primary_frac < 0 || secondary_frac < 0 || primary_frac + secondary_frac > 1.0)
                throw ConfigError("partition: label-skew fractions out of range");
        }
    }
};

// One client's slice of the dataset: sorted sample indices plus the class
// proportion vector q_i over those samples (zero vector when empty).
struct Shard {
    int client_id = 0;
    std::vector<int> indices;
    std::vector<double> class_histogram;

    bool empty() const { return indices.empty(); }
};

struct ClassHistogram {
    std::vector<double> p;
    bool empty = false;
};

// q_{i,c} = |{y in shard : y = c}| / |shard|; zero vector flagged empty for
// an empty shard.
inline ClassHistogram class_histogram(const Shard& shard, const LabeledDataset& ds) {
    ClassHistogram h;
    h.p.assign(ds.n_classes, 0.0);
    if (shard.indices.empty()) {
        h.empty = true;
        return h;
    }
    for (int idx : shard.indices) h.p[ds.labels[idx]] += 1.0;
    const double n = static_cast<double>(shard.indices.size());
    for (auto& v : h.p) v /= n;
    return h;
}

namespace detail {

inline std::vector<Shard> finalize_shards(std::vector<std::vector<int>>&& assigned,
                                          const LabeledDataset& ds) {
    std::vector<Shard> shards(assigned.size());
    for (std::size_t i = 0; i < assigned.size(); ++i) {
        shards[i].client_id = static_cast<int>(i);
        shards[i].indices = std::move(assigned[i]);
        std::sort(shards[i].indices.begin(), shards[i].indices.end());
        shards[i].class_histogram = class_histogram(shards[i], ds).p;
    }
    return shards;
}

}  // namespace detail

// Split a dataset across spec.n_clients clients. Deterministic in
// (dataset, spec). Dirichlet may produce empty shards at tiny alpha; those
// clients still participate in the protocols with their initial parameters.
inline std::vector<Shard> partition(const LabeledDataset& ds, const PartitionSpec& spec) {
    if (ds.size() == 0) throw ConfigError("partition: dataset is empty");
    spec.validate(ds.n_classes);
    const int n = ds.size();
    const int N = spec.n_clients;
    const int C = ds.n_classes;
    Rng rng(derive_seed(spec.seed, hash_str("partition")));
    std::vector<std::vector<int>> assigned(N);

    switch (spec.scheme) {
        case PartitionScheme::IID: {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            // contiguous near-equal chunks; first (n % N) clients get one extra
            const int base = n / N;
            const int extra = n % N;
            int pos = 0;
            for (int i = 0; i < N; ++i) {
                const int take = base + (i < extra ? 1 : 0);
                assigned[i].assign(order.begin() + pos, order.begin() + pos + take);
                pos += take;
            }
            break;
        }
        case PartitionScheme::Dirichlet: {
            // per class: draw p ~ Dir(alpha * 1_N), then assign each of the
            // class's samples to a client drawn from p
            for (int c = 0; c < C; ++c) {
                std::vector<int> pool;
                for (int i = 0; i < n; ++i)
                    if (ds.labels[i] == c) pool.push_back(i);
                if (pool.empty()) continue;
                const std::vector<double> p = rng.dirichlet(spec.alpha, N);
                std::vector<double> cdf(N);
                std::partial_sum(p.begin(), p.end(), cdf.begin());
                for (int idx : pool) {
                    const double u = rng.uniform();
                    const int client = static_cast<int>(
                        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
                    assigned[std::min(client, N - 1)].push_back(idx);
                }
            }
            break;
        }
        case PartitionScheme::LabelSkew: {
            const int K = spec.k_primary;
            const double quota = static_cast<double>(n / N);
            // desired per-(client, class) sample counts under the
            // primary/secondary/minority split
            std::vector<std::vector<double>> want(N, std::vector<double>(C, 0.0));
            const double minority_frac = 1.0 - spec.primary_frac - spec.secondary_frac;
            for (int i = 0; i < N; ++i) {
                std::vector<bool> used(C, false);
                for (int j = 0; j < K; ++j) {
                    const int c = (i * K + j) % C;
                    want[i][c] += spec.primary_frac * quota / K;
                    used[c] = true;
                }
                int placed = 0;
                for (int step = 0; placed < K + 1 && step < C; ++step) {
                    const int c = (i * K + K + step) % C;
                    if (used[c]) continue;
                    want[i][c] += spec.secondary_frac * quota / (K + 1);
                    used[c] = true;
                    ++placed;
                }
                std::vector<int> rest;
                for (int c = 0; c < C; ++c)
                    if (!used[c]) rest.push_back(c);
                if (rest.empty()) {
                    // no minority classes left; fold the share into primaries
                    for (int j = 0; j < K; ++j)
                        want[i][(i * K + j) % C] += minority_frac * quota / K;
                } else {
                    for (int c : rest) want[i][c] += minority_frac * quota / rest.size();
                }
            }
            // per class, shrink every client's request by the same factor when
            // demand exceeds the class pool, then hand out shuffled slices
            for (int c = 0; c < C; ++c) {
                std::vector<int> pool;
                for (int i = 0; i < n; ++i)
                    if (ds.labels[i] == c) pool.push_back(i);
                rng.shuffle(pool);
                double demand = 0.0;
                for (int i = 0; i < N; ++i) demand += want[i][c];
                const double scale =
                    (demand > static_cast<double>(pool.size()) && demand > 0.0)
                        ? static_cast<double>(pool.size()) / demand
                        : 1.0;
                std::size_t pos = 0;
                for (int i = 0; i < N; ++i) {
                    const auto take = static_cast<std::size_t>(std::floor(want[i][c] * scale));
                    const std::size_t end = std::min(pos + take, pool.size());
                    for (; pos < end; ++pos) assigned[i].push_back(pool[pos]);
                }
            }
            break;
        }
    }
    return detail::finalize_shards(std::move(assigned), ds);
}

// Per-client train/test split: seeded shuffle of the shard, last 20% held out
// as the client's local test set.
struct TrainTestSplit {
    std::vector<int> train;
    std::vector<int> test;
};

inline TrainTestSplit split_shard(const Shard& shard, std::uint64_t seed) {
    TrainTestSplit out;
    if (shard.indices.empty()) return out;
    std::vector<int> order = shard.indices;
    Rng rng(derive_seed(seed, hash_str("train-test"), static_cast<std::uint64_t>(shard.client_id)));
    rng.shuffle(order);
    const auto n_test = static_cast<std::size_t>(order.size() / 5);
    out.train.assign(order.begin(), order.end() - n_test);
    out.test.assign(order.end() - n_test, order.end());
    return out;
}

}  // namespace firma
