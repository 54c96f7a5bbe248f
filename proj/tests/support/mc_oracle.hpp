#pragma once

// Test-only Monte-Carlo oracle for absorbing-chain probabilities. Walks the
// chain state by state using its own categorical sampler; shares no code
// with the linear-algebra path it checks.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "modecluster/parallel.hpp"

namespace mctest {

// Walker's alias method for O(1) categorical draws.
class AliasTable {
public:
    explicit AliasTable(const Eigen::VectorXd& weights) {
        const int n = static_cast<int>(weights.size());
        prob_.resize(n);
        alias_.assign(n, 0);
        const double total = weights.sum();
        std::vector<double> scaled(n);
        std::vector<int> small, large;
        for (int i = 0; i < n; ++i) {
            scaled[i] = weights[i] * n / total;
            (scaled[i] < 1.0 ? small : large).push_back(i);
        }
        while (!small.empty() && !large.empty()) {
            const int s = small.back();
            const int l = large.back();
            small.pop_back();
            large.pop_back();
            prob_[s] = scaled[s];
            alias_[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            (scaled[l] < 1.0 ? small : large).push_back(l);
        }
        for (int i : small) prob_[i] = 1.0;
        for (int i : large) prob_[i] = 1.0;
    }

    template <typename Rng>
    int draw(Rng& rng) const {
        const int n = static_cast<int>(prob_.size());
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const double scaled = u * n;
        int i = static_cast<int>(scaled);
        if (i >= n) i = n - 1;
        return (scaled - i) < prob_[i] ? i : alias_[i];
    }

private:
    std::vector<double> prob_;
    std::vector<int> alias_;
};

// Simulates `walks` chains from every start state. States 0..k-1 of each
// row's distribution are the absorbing modes, states k..k+n-1 the points.
// Returns the n x k matrix of absorption frequencies.
inline Eigen::MatrixXd simulate_absorption(const Eigen::MatrixXd& S, const Eigen::MatrixXd& T,
                                           long walks, std::uint64_t seed) {
    const int n = static_cast<int>(T.rows());
    const int k = static_cast<int>(S.cols());
    std::vector<AliasTable> tables;
    tables.reserve(n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd row(k + n);
        row.head(k) = S.row(i);
        row.tail(n) = T.row(i);
        tables.emplace_back(row);
    }

    Eigen::MatrixXd freq = Eigen::MatrixXd::Zero(n, k);
    modecluster::parallel_for(static_cast<std::size_t>(n), [&](std::size_t start) {
        std::mt19937_64 rng(seed + 1000003ULL * start);
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
        for (long w = 0; w < walks; ++w) {
            int state = static_cast<int>(start);
            for (;;) {
                const int next = tables[state].draw(rng);
                if (next < k) {
                    counts[next] += 1.0;
                    break;
                }
                state = next - k;
            }
        }
        freq.row(static_cast<Eigen::Index>(start)) = counts / static_cast<double>(walks);
    });
    return freq;
}

}  // namespace mctest
