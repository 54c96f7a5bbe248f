#pragma once

#include "modecluster/errors.hpp"

namespace modecluster {

// Effective tuning parameters of a pipeline run.
struct PipelineParams {
    double h = 0.0;
    double n0 = 1.0;
    double rho0 = 5.0;
    double omega0 = 0.125;

    void validate() const;
};

// Normal reference bandwidth:
//   h = mean_sd * (4/(d+4))^(1/(d+6)) * n^(-1/(d+6))
// where mean_sd is the average of the per-coordinate sample standard
// deviations.
double normal_reference_h(long n, int d, double mean_sd);

// Minimum significant cluster size:
//   n0 = (n * ln(n) / 20)^(d/(d+6))
double denoise_threshold(long n, int d);

// Connectivity edge threshold: 1 / (2k).
double default_omega0(int k);

}  // namespace modecluster
