#include <doctest.h>

#include "modecluster/connectivity.hpp"

using namespace modecluster;

namespace {

ClusterAssignment labels_of(std::vector<int> labels, int k) {
    ClusterAssignment assign;
    assign.labels = std::move(labels);
    assign.sizes.assign(static_cast<std::size_t>(k), 0);
    for (int l : assign.labels) ++assign.sizes[static_cast<std::size_t>(l)];
    return assign;
}

}  // namespace

TEST_SUITE("connectivity") {

TEST_CASE("hand-evaluated two-cluster example") {
    SoftAssignment a;
    a.a.resize(4, 2);
    a.a << 0.9, 0.1, 0.8, 0.2, 0.3, 0.7, 0.1, 0.9;
    const ClusterAssignment assign = labels_of({0, 0, 1, 1}, 2);
    const ConnectivityMatrix cm = connectivity_matrix(a, assign);
    CHECK(cm.omega(0, 1) == doctest::Approx(0.175).epsilon(1e-12));
    CHECK(cm.omega(0, 0) == 0.0);
    CHECK(cm.omega(1, 1) == 0.0);
}

TEST_CASE("one-hot assignments give zero connectivity") {
    SoftAssignment a;
    a.a.resize(4, 2);
    a.a << 1, 0, 1, 0, 0, 1, 0, 1;
    const ConnectivityMatrix cm = connectivity_matrix(a, labels_of({0, 0, 1, 1}, 2));
    CHECK(cm.omega(0, 1) == 0.0);
}

TEST_CASE("uniform half-half assignments give connectivity one half") {
    SoftAssignment a;
    a.a = Eigen::MatrixXd::Constant(6, 2, 0.5);
    const ConnectivityMatrix cm = connectivity_matrix(a, labels_of({0, 0, 0, 1, 1, 1}, 2));
    CHECK(cm.omega(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("omega is exactly symmetric and bounded") {
    SoftAssignment a;
    a.a.resize(5, 3);
    a.a << 0.7, 0.2, 0.1,
           0.5, 0.3, 0.2,
           0.1, 0.8, 0.1,
           0.2, 0.2, 0.6,
           0.1, 0.3, 0.6;
    const ConnectivityMatrix cm = connectivity_matrix(a, labels_of({0, 0, 1, 2, 2}, 3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(cm.omega(i, j) == cm.omega(j, i));  // exactly, not within tolerance
            CHECK(cm.omega(i, j) >= 0.0);
            CHECK(cm.omega(i, j) <= 1.0);
        }
    }
}

TEST_CASE("permuting cluster indices conjugates omega") {
    SoftAssignment a;
    a.a.resize(5, 3);
    a.a << 0.7, 0.2, 0.1,
           0.5, 0.3, 0.2,
           0.1, 0.8, 0.1,
           0.2, 0.2, 0.6,
           0.1, 0.3, 0.6;
    const ConnectivityMatrix cm = connectivity_matrix(a, labels_of({0, 0, 1, 2, 2}, 3));

    // swap clusters 0 and 2 everywhere
    SoftAssignment ap;
    ap.a = a.a;
    ap.a.col(0).swap(ap.a.col(2));
    const ConnectivityMatrix cmp = connectivity_matrix(ap, labels_of({2, 2, 1, 0, 0}, 3));
    const int perm[3] = {2, 1, 0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(cmp.omega(perm[i], perm[j]) == doctest::Approx(cm.omega(i, j)).epsilon(1e-14));
        }
    }
}

TEST_CASE("edge_set keeps strictly greater pairs only") {
    ConnectivityMatrix cm;
    cm.omega.resize(3, 3);
    cm.omega << 0.0, 0.30, 0.10,
                0.30, 0.0, 0.05,
                0.10, 0.05, 0.0;
    const auto edges = edge_set(cm, 0.10);
    REQUIRE(edges.size() == 1);  // (0,2) is exactly 0.10, not strictly greater
    CHECK(edges[0].i == 0);
    CHECK(edges[0].j == 1);
    CHECK(edges[0].weight == doctest::Approx(0.30));

    CHECK(edge_set(cm, 0.99).empty());
    CHECK_THROWS_AS(edge_set(cm, 0.0), InvalidInput);
    CHECK_THROWS_AS(edge_set(cm, 1.0), InvalidInput);
}

TEST_CASE("empty clusters are rejected") {
    SoftAssignment a;
    a.a = Eigen::MatrixXd::Constant(3, 2, 0.5);
    ClusterAssignment assign = labels_of({0, 0, 0}, 2);  // cluster 1 empty
    CHECK_THROWS_AS(connectivity_matrix(a, assign), EmptyCluster);
}

}  // TEST_SUITE
