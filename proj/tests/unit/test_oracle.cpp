#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qmcut/oracle.hpp"
#include "qmcut/partition.hpp"

using namespace qmcut;

namespace {

double dot(const StateVector& a, const StateVector& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        s += a.amplitudes[i] * b.amplitudes[i];
    return s;
}

double norm(const StateVector& a) { return std::sqrt(dot(a, a)); }

} // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("state_dimension and basis states") {
    CHECK(state_dimension(2, 10) == 1024);
    CHECK(state_dimension(3, 0) == 1);
    CHECK(state_dimension(1, 5) == 1);
    CHECK_THROWS_AS(state_dimension(0, 1), std::domain_error);
    CHECK_THROWS_AS(basis_state(2, 2, 4), std::domain_error);
}

TEST_CASE("apply_swap exchanges digits, site 0 most significant") {
    // |0 1> at d=2, n=2 sits at index 1; swapping the sites gives |1 0> = index 2
    StateVector v = basis_state(2, 2, 1);
    StateVector w = apply_swap(v, 0, 1);
    CHECK(w.amplitudes[2] == 1.0);
    CHECK(w.amplitudes[1] == 0.0);

    StateVector fixed = basis_state(3, 2, 4); // |1 1>
    CHECK(apply_swap(fixed, 0, 1).amplitudes == fixed.amplitudes);

    CHECK_THROWS_AS(apply_swap(v, 0, 2), std::domain_error);
    CHECK_THROWS_AS(apply_swap(v, 1, 1), std::domain_error);
}

TEST_CASE("apply_swap is an involution and an isometry") {
    for (int d : {2, 3})
        for (int n : {2, 4, 5}) {
            StateVector v = random_state(d, n, 123);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    StateVector once = apply_swap(v, i, j);
                    CHECK(std::abs(norm(once) - norm(v)) < 1e-12);
                    StateVector twice = apply_swap(once, i, j);
                    for (std::size_t b = 0; b < v.amplitudes.size(); ++b)
                        CHECK(twice.amplitudes[b] == v.amplitudes[b]);
                }
        }
}

TEST_CASE("apply_hamiltonian basics") {
    HamiltonianOperator edge(Graph(2, {{0, 1}}), 2);

    StateVector symmetric{2, 2, {0.5, 0.5, 0.5, 0.5}};
    for (double a : apply_hamiltonian(edge, symmetric).amplitudes)
        CHECK(a == 0.0);

    double s = 1.0 / std::sqrt(2.0);
    StateVector singlet{2, 2, {0.0, s, -s, 0.0}};
    StateVector hs = apply_hamiltonian(edge, singlet);
    for (std::size_t b = 0; b < hs.amplitudes.size(); ++b)
        CHECK(hs.amplitudes[b] == doctest::Approx(4 * singlet.amplitudes[b]).epsilon(1e-12));

    HamiltonianOperator none(Graph(3, {}), 2);
    for (double a : apply_hamiltonian(none, random_state(2, 3, 1)).amplitudes)
        CHECK(a == 0.0);

    StateVector wrong = random_state(2, 3, 1);
    CHECK_THROWS_AS(apply_hamiltonian(edge, wrong), std::domain_error);
}

TEST_CASE("hamiltonian is symmetric and positive semidefinite") {
    for (int d : {2, 3}) {
        HamiltonianOperator h(complete_multipartite({2, 2, 1}), d);
        for (std::uint64_t s = 0; s < 5; ++s) {
            StateVector u = random_state(d, 5, 100 + s);
            StateVector v = random_state(d, 5, 200 + s);
            StateVector hu = apply_hamiltonian(h, u);
            StateVector hv = apply_hamiltonian(h, v);
            double uhv = dot(u, hv), huv = dot(hu, v);
            CHECK(std::abs(uhv - huv) <= 1e-10 * std::max(1.0, std::abs(uhv)));
            CHECK(dot(v, hv) / dot(v, v) >= -1e-10);
        }
    }
}

TEST_CASE("max_eigenvalue anchors") {
    CHECK(max_eigenvalue(HamiltonianOperator(Graph(2, {{0, 1}}), 2)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(max_eigenvalue(HamiltonianOperator(complete_graph(3), 2)) == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(max_eigenvalue(HamiltonianOperator(complete_graph(3), 3)) == doctest::Approx(12.0).epsilon(1e-6));
    CHECK(max_eigenvalue(HamiltonianOperator(Graph(3, {}), 2)) == 0.0);
}

TEST_CASE("max_eigenvalue error paths") {
    CHECK_THROWS_AS(max_eigenvalue(HamiltonianOperator(complete_graph(23), 2)), std::domain_error);
    try {
        max_eigenvalue(HamiltonianOperator(complete_graph(4), 2), 1e-15, 2, 42);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations == 2);
        CHECK(e.last_rayleigh > 0);
        CHECK(e.residual >= 0);
    }
}

TEST_CASE("max_eigenvalue is deterministic for a fixed seed") {
    HamiltonianOperator h(complete_multipartite({2, 1, 1}), 2);
    auto a = max_eigenvalue_detailed(h, 1e-9, 200000, 7);
    auto b = max_eigenvalue_detailed(h, 1e-9, 200000, 7);
    CHECK(a.value == b.value);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("full_spectrum anchors") {
    auto edge = full_spectrum(HamiltonianOperator(Graph(2, {{0, 1}}), 2));
    REQUIRE(edge.size() == 4);
    std::vector<double> want{0, 0, 0, 4};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(edge[i] == doctest::Approx(want[i]).epsilon(1e-9));

    auto tri = full_spectrum(HamiltonianOperator(complete_graph(3), 2));
    REQUIRE(tri.size() == 8);
    for (int i = 0; i < 4; ++i)
        CHECK(tri[i] == doctest::Approx(0.0).scale(1).epsilon(1e-9));
    for (int i = 4; i < 8; ++i)
        CHECK(tri[i] == doctest::Approx(6.0).epsilon(1e-9));

    for (double x : full_spectrum(HamiltonianOperator(Graph(2, {}), 3)))
        CHECK(x == 0.0);

    CHECK_THROWS_AS(full_spectrum(HamiltonianOperator(complete_graph(13), 2)), std::domain_error);
}

TEST_CASE("spectrum sum equals the analytic trace") {
    // trace H = 2|E| d^{n-1} (d - 1)
    for (int d : {2, 3})
        for (const auto& parts : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {1, 1, 1}, {3, 2}}) {
            HamiltonianOperator h(complete_multipartite(parts), d);
            double sum = 0;
            for (double x : full_spectrum(h))
                sum += x;
            double dim = static_cast<double>(h.dimension());
            double trace = 2.0 * h.graph().edge_count() * dim * (1.0 - 1.0 / d);
            CHECK(sum == doctest::Approx(trace).epsilon(1e-6));
        }
}

TEST_CASE("power iteration agrees with the dense solver") {
    for (int d : {2, 3})
        for (const auto& parts : std::vector<std::vector<int>>{{2, 1}, {2, 2, 1}, {3, 1}}) {
            HamiltonianOperator h(complete_multipartite(parts), d);
            auto spec = full_spectrum(h);
            CHECK(max_eigenvalue(h) == doctest::Approx(spec.back()).epsilon(1e-7));
        }
}

TEST_CASE("symmetric_eigenvalues on a known matrix") {
    auto eig = symmetric_eigenvalues({2, 1, 1, 2}, 2);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(symmetric_eigenvalues({1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("verify_clique_spectrum spot checks") {
    CHECK(verify_clique_spectrum(3, 2));
    CHECK(verify_clique_spectrum(3, 3));
    CHECK(verify_clique_spectrum(2, 2));
    CHECK(verify_clique_spectrum(4, 3));
}

TEST_CASE("verify_complement_identity spot checks") {
    CHECK(verify_complement_identity({2, 2, 1}, 2, 5, 42));
    CHECK(verify_complement_identity({3, 3, 2}, 2, 3, 42));
    CHECK(verify_complement_identity({1, 1}, 3, 3, 42));
}

TEST_CASE("worker partitioning does not change the result") {
    // dimension 2^16 crosses the threading threshold
    HamiltonianOperator h(complete_multipartite({8, 8}), 2);
    StateVector v = random_state(2, 16, 9);
    setenv("QMC_THREADS", "2", 1);
    StateVector a = apply_hamiltonian(h, v);
    setenv("QMC_THREADS", "1", 1);
    StateVector b = apply_hamiltonian(h, v);
    unsetenv("QMC_THREADS");
    CHECK(a.amplitudes == b.amplitudes);
}

TEST_SUITE_END();
