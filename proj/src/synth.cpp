#include "modecluster/synth.hpp"

#include <cmath>

namespace modecluster {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double SynthRng::uniform() {
    // 53-bit mantissa, mapped to (0, 1] so log() stays finite.
    return (static_cast<double>(rng_() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
}

double SynthRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = kTwoPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

DataMatrix gen_five_cluster(std::uint64_t seed) {
    constexpr int d = 10;
    constexpr int per_cluster = 200;
    constexpr int per_edge = 100;
    constexpr double sigma1 = 0.01;
    constexpr double sigma2 = 0.005;

    // Structure lives in the first three coordinates; the published
    // component list places the fourth center on the third axis.
    Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(5, d);
    centers(1, 0) = 0.1;
    centers(2, 1) = 0.1;
    centers(3, 2) = 0.1;
    centers(4, 1) = 0.1;
    centers(4, 2) = 0.1;
    const int edge_pairs[4][2] = {{0, 1}, {0, 2}, {0, 3}, {3, 4}};
    const char* edge_names[4] = {"E12", "E13", "E14", "E45"};

    SynthRng rng(seed);
    Eigen::MatrixXd x(5 * per_cluster + 4 * per_edge, d);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(x.rows()));

    Eigen::Index row = 0;
    for (int c = 0; c < 5; ++c) {
        for (int p = 0; p < per_cluster; ++p, ++row) {
            for (int j = 0; j < d; ++j) x(row, j) = centers(c, j) + sigma1 * rng.normal();
            labels.push_back("C" + std::to_string(c + 1));
        }
    }
    for (int e = 0; e < 4; ++e) {
        const auto& pair = edge_pairs[e];
        for (int p = 0; p < per_edge; ++p, ++row) {
            const double t = rng.uniform();
            for (int j = 0; j < d; ++j) {
                const double base = centers(pair[0], j) + t * (centers(pair[1], j) - centers(pair[0], j));
                x(row, j) = base + sigma2 * rng.normal();
            }
            labels.push_back(edge_names[e]);
        }
    }
    return make_data_matrix(std::move(x), std::move(labels));
}

DataMatrix gen_four_gaussian_8d(std::uint64_t seed) {
    constexpr int d = 8;
    constexpr int per_cluster = 200;
    constexpr double sigma1 = 0.1;  // centers sit 10 sigma apart
    const double centers[4][2] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};

    SynthRng rng(seed);
    Eigen::MatrixXd x(4 * per_cluster, d);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(x.rows()));

    Eigen::Index row = 0;
    for (int c = 0; c < 4; ++c) {
        for (int p = 0; p < per_cluster; ++p, ++row) {
            x(row, 0) = centers[c][0] + sigma1 * rng.normal();
            x(row, 1) = centers[c][1] + sigma1 * rng.normal();
            for (int j = 2; j < d; ++j) x(row, j) = kFourGaussianNoiseSd * rng.normal();
            labels.push_back("C" + std::to_string(c + 1));
        }
    }
    return make_data_matrix(std::move(x), std::move(labels));
}

DataMatrix gen_two_gaussian_1d(std::uint64_t seed, int n) {
    if (n < 2) throw InvalidInput("gen_two_gaussian_1d: n must be at least 2");
    SynthRng rng(seed);
    Eigen::MatrixXd x(n, 1);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const bool neg = rng.uniform() <= 0.5;
        x(i, 0) = (neg ? -3.0 : 3.0) + rng.normal();
        labels.push_back(neg ? "neg" : "pos");
    }
    return make_data_matrix(std::move(x), std::move(labels));
}

}  // namespace modecluster
