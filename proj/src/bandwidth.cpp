#include "modecluster/bandwidth.hpp"

#include <cmath>

namespace modecluster {

void PipelineParams::validate() const {
    if (!(h > 0.0)) throw InvalidInput("h must be positive");
    if (!(n0 >= 1.0)) throw InvalidInput("n0 must be at least 1");
    if (!(rho0 >= 1.0)) throw InvalidInput("rho0 must be at least 1");
    if (!(omega0 > 0.0 && omega0 < 1.0)) throw InvalidInput("omega0 must lie in (0, 1)");
}

double normal_reference_h(long n, int d, double mean_sd) {
    if (n < 2) throw InvalidInput("normal_reference_h: n must be at least 2");
    if (d < 1) throw InvalidInput("normal_reference_h: d must be at least 1");
    if (!(mean_sd > 0.0)) throw InvalidInput("normal_reference_h: mean_sd must be positive");
    const double e = 1.0 / (d + 6.0);
    return mean_sd * std::pow(4.0 / (d + 4.0), e) * std::pow(static_cast<double>(n), -e);
}

double denoise_threshold(long n, int d) {
    if (n < 2) throw InvalidInput("denoise_threshold: n must be at least 2");
    if (d < 1) throw InvalidInput("denoise_threshold: d must be at least 1");
    const double nn = static_cast<double>(n);
    return std::pow(nn * std::log(nn) / 20.0, d / (d + 6.0));
}

double default_omega0(int k) {
    if (k < 1) throw InvalidInput("default_omega0: k must be at least 1");
    return 1.0 / (2.0 * k);
}

}  // namespace modecluster
