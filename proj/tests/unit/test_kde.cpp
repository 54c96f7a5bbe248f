#include <cmath>
#include <random>

#include <doctest.h>

#include "modecluster/kde.hpp"

using namespace modecluster;

namespace {

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v << x;
    return v;
}

// Central finite difference of the density, step 1e-5.
Eigen::VectorXd fd_gradient(const DensityModel& model, const Eigen::VectorXd& x) {
    const double eps = 1e-5;
    Eigen::VectorXd g(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        Eigen::VectorXd hi = x, lo = x;
        hi[j] += eps;
        lo[j] -= eps;
        g[j] = (model.density(hi) - model.density(lo)) / (2.0 * eps);
    }
    return g;
}

}  // namespace

TEST_SUITE("kde") {

TEST_CASE("single point analytic value") {
    const DensityModel model(Eigen::MatrixXd::Zero(1, 1), 1.0);
    CHECK(model.density(vec1(0.0)) == doctest::Approx(0.3989422804).epsilon(1e-9));
}

TEST_CASE("two symmetric points analytic value") {
    Eigen::MatrixXd data(2, 1);
    data << -1.0, 1.0;
    const DensityModel model(data, 1.0);
    CHECK(model.density(vec1(0.0))
          == doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * M_PI)).epsilon(1e-9));
}

TEST_CASE("2-d density integrates to one by quadrature") {
    std::mt19937 rng(21);
    std::normal_distribution<double> g;
    Eigen::MatrixXd data(50, 2);
    for (int i = 0; i < 50; ++i) {
        data(i, 0) = g(rng);
        data(i, 1) = g(rng);
    }
    const double h = 0.5;
    const DensityModel model(data, h);

    const double lo0 = data.col(0).minCoeff() - 5 * h, hi0 = data.col(0).maxCoeff() + 5 * h;
    const double lo1 = data.col(1).minCoeff() - 5 * h, hi1 = data.col(1).maxCoeff() + 5 * h;
    const int steps = 160;
    const double dx = (hi0 - lo0) / steps, dy = (hi1 - lo1) / steps;
    double integral = 0.0;
    Eigen::VectorXd x(2);
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            x << lo0 + (i + 0.5) * dx, lo1 + (j + 0.5) * dy;
            integral += model.density(x) * dx * dy;
        }
    }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("1-d density integrates to one") {
    std::mt19937 rng(4);
    std::normal_distribution<double> g(0.0, 2.0);
    Eigen::MatrixXd data(40, 1);
    for (int i = 0; i < 40; ++i) data(i, 0) = g(rng);
    const double h = 0.4;
    const DensityModel model(data, h);

    const double lo = data.minCoeff() - 5 * h, hi = data.maxCoeff() + 5 * h;
    const int steps = 4000;
    const double dx = (hi - lo) / steps;
    double integral = 0.0;
    for (int i = 0; i < steps; ++i) integral += model.density(vec1(lo + (i + 0.5) * dx)) * dx;
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("gradient vanishes at a symmetric center") {
    const DensityModel model(Eigen::MatrixXd::Zero(1, 1), 1.0);
    CHECK(model.gradient(vec1(0.0)).norm() == 0.0);

    Eigen::MatrixXd data(2, 1);
    data << -1.0, 1.0;
    const DensityModel two(data, 1.0);
    CHECK(std::abs(two.gradient(vec1(0.0))[0]) < 1e-16);
}

TEST_CASE("gradient matches central finite differences") {
    Eigen::MatrixXd data(2, 1);
    data << -1.0, 1.0;
    const DensityModel model(data, 1.0);
    const Eigen::VectorXd x = vec1(0.5);
    CHECK(std::abs(model.gradient(x)[0] - fd_gradient(model, x)[0]) < 1e-6);
}

TEST_CASE("gradient matches finite differences at 100 random points") {
    std::mt19937 rng(33);
    std::normal_distribution<double> g;
    for (int d : {1, 2, 8}) {
        Eigen::MatrixXd data(30, d);
        for (int i = 0; i < 30; ++i)
            for (int j = 0; j < d; ++j) data(i, j) = g(rng);
        const DensityModel model(data, 0.8);
        for (int t = 0; t < 100; ++t) {
            Eigen::VectorXd x(d);
            for (int j = 0; j < d; ++j) x[j] = 2.0 * g(rng);
            const Eigen::VectorXd diff = model.gradient(x) - fd_gradient(model, x);
            CHECK(diff.cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("far outside the hull the gradient points back toward the data") {
    std::mt19937 rng(8);
    std::normal_distribution<double> g;
    Eigen::MatrixXd data(25, 2);
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 2; ++j) data(i, j) = g(rng);
    const DensityModel model(data, 0.5);
    const Eigen::VectorXd centroid = data.colwise().mean();
    for (int t = 0; t < 10; ++t) {
        Eigen::VectorXd dir(2);
        dir << std::cos(0.63 * t), std::sin(0.63 * t);
        const Eigen::VectorXd x = centroid + 8.0 * dir;  // ~16 h beyond the data
        const Eigen::VectorXd grad = model.gradient(x);
        CHECK(grad.dot(centroid - x) > 0.0);
        const Eigen::VectorXd fd = fd_gradient(model, x);
        CHECK(fd.dot(centroid - x) > 0.0);
    }
}

TEST_CASE("density is invariant under permutation of data rows") {
    std::mt19937 rng(12);
    std::normal_distribution<double> g;
    Eigen::MatrixXd data(20, 3);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 3; ++j) data(i, j) = g(rng);
    Eigen::MatrixXd shuffled = data.colwise().reverse();
    const DensityModel a(data, 0.7);
    const DensityModel b(shuffled, 0.7);
    Eigen::VectorXd x(3);
    x << 0.1, -0.2, 0.3;
    CHECK(a.density(x) == doctest::Approx(b.density(x)).epsilon(1e-12));
}

TEST_CASE("kernel_weight: zero distance, unit distance, symmetry") {
    Eigen::MatrixXd data(2, 1);
    data << -1.0, 1.0;
    const DensityModel model(data, 2.0);
    CHECK(model.kernel_weight(vec1(0.3), vec1(0.3))
          == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
    CHECK(model.kernel_weight(vec1(0.0), vec1(2.0))
          == doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * M_PI)).epsilon(1e-12));

    std::mt19937 rng(2);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
        const Eigen::VectorXd a = vec1(g(rng)), b = vec1(g(rng));
        CHECK(model.kernel_weight(a, b) == model.kernel_weight(b, a));
    }
}

TEST_CASE("invalid evaluation points are rejected") {
    const DensityModel model(Eigen::MatrixXd::Zero(1, 1), 1.0);
    CHECK_THROWS_AS(model.density(vec1(std::nan(""))), InvalidInput);
    CHECK_THROWS_AS(model.gradient(vec1(std::numeric_limits<double>::infinity())),
                    InvalidInput);
    Eigen::VectorXd wrong(2);
    wrong << 0.0, 0.0;
    CHECK_THROWS_AS(model.density(wrong), InvalidInput);
    CHECK_THROWS_AS(DensityModel(Eigen::MatrixXd::Zero(1, 1), 0.0), InvalidInput);
}

}  // TEST_SUITE
