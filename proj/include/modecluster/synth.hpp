#pragma once

#include <cstdint>
#include <random>

#include "modecluster/dataset.hpp"

namespace modecluster {

// Seeded source of uniforms and normals with a fixed algorithm
// (mt19937_64 plus Box-Muller), so generated datasets are byte-identical
// across platforms and runs.
class SynthRng {
public:
    explicit SynthRng(std::uint64_t seed) : rng_(seed) {}

    double uniform();  // (0, 1]
    double normal();   // standard normal

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Five isotropic Gaussians (sigma 0.01, 200 points each) in d=10 at
//   C1 = 0, C2 = 0.1 e1, C3 = 0.1 e2, C4 = 0.1 e3, C5 = 0.1 (e2 + e3),
// connected by four uniform edges E12, E13, E14, E45 (100 points each,
// isotropic Gaussian jitter sigma 0.005). n = 1400; labels record the
// component of origin (C1..C5, E12, E13, E14, E45).
DataMatrix gen_five_cluster(std::uint64_t seed);

// Four Gaussians (200 points each) in d=8: centers on the unit square in
// the first two coordinates (sigma 0.1 per coordinate, so centers are at
// least 10 sigma apart), pure Gaussian noise in the remaining six
// coordinates. Labels C1..C4.
DataMatrix gen_four_gaussian_8d(std::uint64_t seed);

// Equal-weight mixture of N(-3, 1) and N(+3, 1) in d=1. Labels record the
// mixture component (neg/pos).
DataMatrix gen_two_gaussian_1d(std::uint64_t seed, int n);

// Standard deviation of the noise coordinates 3..8 in gen_four_gaussian_8d.
inline constexpr double kFourGaussianNoiseSd = 0.2;

}  // namespace modecluster
