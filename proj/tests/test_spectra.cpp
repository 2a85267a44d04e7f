#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qx/families.hpp"
#include "qx/spectra.hpp"
#include "support/oracles.hpp"

using namespace qx;

namespace {

constexpr double kSqrt17 = 4.123105625617661;
constexpr double kSqrt33 = 5.744562646538029;

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g = add_edge(g, i, (i + 1) % 5);
        g = add_edge(g, 5 + i, 5 + (i + 2) % 5);
        g = add_edge(g, i, 5 + i);
    }
    return g;
}

}  // namespace

TEST_CASE("q_index on closed-form graphs") {
    CHECK(q_index(Graph(2, {{0, 1}})).value == doctest::Approx(2.0).epsilon(1e-12));

    for (int n = 3; n <= 8; ++n) {
        Graph kn = build({FamilyKind::CompleteKn, n});
        CHECK(std::abs(q_index(kn).value - (2.0 * n - 2.0)) < 1e-9);
    }

    Graph f5 = build({FamilyKind::Friendship, 5});
    CHECK(std::abs(q_index(f5).value - (7.0 + kSqrt17) / 2.0) < 1e-9);

    Graph s62 = build({FamilyKind::SplitSnk, 6, 2});
    CHECK(std::abs(q_index(s62).value - (4.0 + 2.0 * std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("mu_index on closed-form graphs") {
    for (int n = 2; n <= 8; ++n) {
        Graph kn = build({FamilyKind::CompleteKn, n});
        CHECK(std::abs(mu_index(kn).value - (n - 1.0)) < 1e-9);
    }
    for (int n = 3; n <= 9; ++n) {
        Graph cn = build({FamilyKind::CycleCn, n});
        CHECK(std::abs(mu_index(cn).value - 2.0) < 1e-9);
    }
    Graph k23 = build({FamilyKind::Turan2, 5});
    CHECK(std::abs(mu_index(k23).value - std::sqrt(6.0)) < 1e-9);
}

TEST_CASE("spectral result metadata") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 16;
        Graph g = qx::test::random_graph(rng, n, 0.4);
        auto q = q_index(g);
        CHECK(q.residual <= 1e-10);
        CHECK(q.value >= -1e-12);
        CHECK(q.value <= 2.0 * (n - 1) + 1e-9);
        auto mu = mu_index(g);
        CHECK(mu.residual <= 1e-10);
        CHECK(mu.value <= n - 1 + 1e-9);
    }
    CHECK(q_index(Graph(1)).value == 0.0);
    CHECK(mu_index(Graph(1)).value == 0.0);
}

TEST_CASE("eigensolver error path on absurd caps") {
    SpectralOptions opts;
    opts.max_power_iterations = 1;
    opts.max_jacobi_sweeps = 0;
    Graph p3 = build({FamilyKind::PathPn, 3});
    CHECK_THROWS_AS(q_index(p3, opts), std::runtime_error);
}

TEST_CASE("Jacobi fallback agrees with the closed forms") {
    SpectralOptions opts;
    opts.max_power_iterations = 0;  // straight to Jacobi
    for (int n : {5, 6, 7, 12}) {
        Graph fn = build({FamilyKind::Friendship, n});
        auto r = q_index(fn, opts);
        CHECK(std::abs(r.value - q_friendship_closed(n)) < 1e-9);
        CHECK(r.residual <= 1e-10);
    }
    Graph k23 = build({FamilyKind::Turan2, 5});
    CHECK(std::abs(mu_index(k23, opts).value - std::sqrt(6.0)) < 1e-9);
}

TEST_CASE("largest_real_root on the displayed equations") {
    // x^2 - (n+2)x + 2(n-1), n = 5
    Polynomial odd5({8.0, -7.0, 1.0});
    CHECK(std::abs(largest_real_root(odd5, 5.0, 6.0) - (7.0 + kSqrt17) / 2.0) < 1e-11);

    // x^2 - (n+2)x + 4, n = 6
    Polynomial snk6({4.0, -8.0, 1.0});
    CHECK(std::abs(largest_real_root(snk6, 7.0, 8.0) - (4.0 + 2.0 * std::sqrt(3.0))) <
          1e-11);

    // x^3 - (n+3)x^2 + 3nx - 2n + 4, n = 4; the largest root is
    // (5 + sqrt(17))/2 since the cubic factors as (x-2)(x^2-5x+2)
    Polynomial cubic4({-4.0, 12.0, -7.0, 1.0});
    double root = largest_real_root(cubic4, 4.5, 4.0 + 2.0 / 3.0);
    CHECK(std::abs(root - (5.0 + kSqrt17) / 2.0) < 1e-11);
    CHECK(std::abs(root - 4.561552812808830) < 1e-9);

    CHECK_THROWS_AS(largest_real_root(odd5, 8.0, 9.0), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial({1.0, 2.0, 3.0, 4.0, 5.0}), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("closed-form roots satisfy their polynomials") {
    for (int n = 4; n <= 50; ++n) {
        double q = q_friendship_closed(n);
        if (n % 2 == 1) {
            Polynomial p({2.0 * (n - 1.0), -(n + 2.0), 1.0});
            CHECK(std::abs(p(q)) <= 1e-9);
        } else {
            Polynomial p({4.0 - 2.0 * n, 3.0 * n, -(n + 3.0), 1.0});
            CHECK(std::abs(p(q)) <= 1e-9);
        }
        Polynomial snk({4.0, -(n + 2.0), 1.0});
        CHECK(std::abs(snk(q_snk2_closed(n))) <= 1e-9);
    }
}

TEST_CASE("characteristic-polynomial oracle on pinned spectra") {
    auto spec = characteristic_q_eigenvalues_bruteforce(Graph(2, {{0, 1}}));
    REQUIRE(spec.size() == 2);
    CHECK(spec[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(spec[1] == doctest::Approx(2.0).epsilon(1e-10));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto star_spec = characteristic_q_eigenvalues_bruteforce(star);
    REQUIRE(star_spec.size() == 4);
    CHECK(std::abs(star_spec[0] - 0.0) < 1e-9);
    CHECK(std::abs(star_spec[1] - 1.0) < 1e-9);
    CHECK(std::abs(star_spec[2] - 1.0) < 1e-9);
    CHECK(std::abs(star_spec[3] - 4.0) < 1e-9);

    auto c4_spec = characteristic_q_eigenvalues_bruteforce(build({FamilyKind::CycleCn, 4}));
    REQUIRE(c4_spec.size() == 4);
    CHECK(std::abs(c4_spec[0] - 0.0) < 1e-9);
    CHECK(std::abs(c4_spec[1] - 2.0) < 1e-9);
    CHECK(std::abs(c4_spec[2] - 2.0) < 1e-9);
    CHECK(std::abs(c4_spec[3] - 4.0) < 1e-9);

    auto k4_spec = characteristic_q_eigenvalues_bruteforce(build({FamilyKind::CompleteKn, 4}));
    REQUIRE(k4_spec.size() == 4);
    CHECK(std::abs(k4_spec[0] - 2.0) < 1e-9);
    CHECK(std::abs(k4_spec[3] - 6.0) < 1e-9);

    CHECK_THROWS_AS(characteristic_q_eigenvalues_bruteforce(Graph(7)),
                    std::invalid_argument);
}

TEST_CASE("q_index agrees with the oracle on every graph up to order 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : qx::test::all_graphs_up_to_iso(n)) {
            auto spec = characteristic_q_eigenvalues_bruteforce(g);
            REQUIRE(spec.size() == static_cast<std::size_t>(n));
            CHECK(std::abs(q_index(g).value - spec.back()) <= 1e-8);
        }
    }
}

TEST_CASE("relabeling invariance") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = qx::test::random_graph(rng, 2 + trial % 12, 0.4);
        auto perm = qx::test::random_permutation(rng, g.order());
        Graph h = apply_permutation(g, perm);
        CHECK(std::abs(q_index(g).value - q_index(h).value) <= 1e-10);
        CHECK(std::abs(mu_index(g).value - mu_index(h).value) <= 1e-10);
    }
}

TEST_CASE("adding an edge never lowers the Q-index") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = qx::test::random_graph(rng, 3 + trial % 10, 0.3);
        int u = static_cast<int>(rng() % g.order());
        int v = static_cast<int>(rng() % g.order());
        if (u == v) continue;
        CHECK(q_index(add_edge(g, u, v)).value >= q_index(g).value - 1e-10);
    }
}

TEST_CASE("disjoint union takes the max") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        Graph a = qx::test::random_graph(rng, 2 + trial % 8, 0.4);
        Graph b = qx::test::random_graph(rng, 2 + (trial * 7) % 8, 0.5);
        double expect = std::max(q_index(a).value, q_index(b).value);
        CHECK(std::abs(q_index(disjoint_union(a, b)).value - expect) <= 1e-10);
    }
}

TEST_CASE("regular graphs pin both eigenvalues") {
    auto check_regular = [](const Graph& g, int d) {
        CHECK(std::abs(q_index(g).value - 2.0 * d) <= 1e-10);
        CHECK(std::abs(mu_index(g).value - d) <= 1e-10);
    };
    check_regular(build({FamilyKind::CycleCn, 8}), 2);
    check_regular(build({FamilyKind::CompleteKn, 7}), 6);
    check_regular(build({FamilyKind::Turan2, 8}), 4);
    check_regular(petersen(), 3);
}
