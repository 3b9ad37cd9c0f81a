#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qmcut/graph.hpp"

namespace qmcut {

/// Dense real vector in (R^d)^{⊗n}; the index is read as a base-d string
/// with site 0 the most significant digit. Real arithmetic suffices: every
/// operator built here is a real symmetric combination of permutations.
struct StateVector {
    int d = 2;
    int n = 0;
    std::vector<double> amplitudes;
};

/// d^n, guarded against overflow of size_t.
std::size_t state_dimension(int d, int n);

StateVector zero_state(int d, int n);
StateVector basis_state(int d, int n, std::size_t index);
/// Deterministic pseudo-random state, entries in [-1, 1).
StateVector random_state(int d, int n, std::uint64_t seed);

/// Matrix-free H_G = sum_{(i,j) in E} 2(I - Swap_ij) on (R^d)^{⊗n}.
class HamiltonianOperator {
public:
    HamiltonianOperator(Graph graph, int d);

    const Graph& graph() const { return graph_; }
    int local_dim() const { return d_; }
    int sites() const { return graph_.vertex_count(); }
    std::size_t dimension() const { return dim_; }

private:
    Graph graph_;
    int d_;
    std::size_t dim_;
};

/// Exchange the base-d digits at sites i and j of every index.
StateVector apply_swap(const StateVector& v, int i, int j);

/// H v without materializing the d^n x d^n matrix.
StateVector apply_hamiltonian(const HamiltonianOperator& h, const StateVector& v);

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what_, double rayleigh_, double residual_, long iterations_)
        : std::runtime_error(what_), last_rayleigh(rayleigh_), residual(residual_), iterations(iterations_) {}
    double last_rayleigh;
    double residual;
    long iterations;
};

struct MaxEigenvalueResult {
    double value = 0.0;
    long iterations = 0;
    double residual = 0.0;
    std::uint64_t seed = 0;
};

/// Largest eigenvalue of the PSD operator by seeded power iteration;
/// converged when successive Rayleigh quotients differ by less than tol.
/// Throws ConvergenceError when max_iters is exhausted and std::domain_error
/// when d^n exceeds the iterative-size guard (2^22).
MaxEigenvalueResult max_eigenvalue_detailed(const HamiltonianOperator& h, double tol = 1e-9,
                                            long max_iters = 200000, std::uint64_t seed = 42);
double max_eigenvalue(const HamiltonianOperator& h, double tol = 1e-9, long max_iters = 200000,
                      std::uint64_t seed = 42);

/// All d^n eigenvalues with multiplicity, ascending. Dense cyclic-Jacobi
/// eigensolve; guarded to d^n ≤ 4096.
std::vector<double> full_spectrum(const HamiltonianOperator& h);

/// Eigenvalues of a dense symmetric matrix (row-major, dim x dim), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t dim);

/// Checks that the K_n spectrum at local dimension d is exactly the multiset
/// { eta_lambda with multiplicity f^lambda * weyl_dim(lambda, d) } over
/// partitions of n with height ≤ d, snapping eigenvalues to integers at 1e-8.
bool verify_clique_spectrum(int n, int d);

/// Checks H_multipartite + sum_blocks H_clique == H_{K_n} on `trials` seeded
/// random vectors, componentwise within 1e-10 relative.
bool verify_complement_identity(const std::vector<int>& parts, int d, int trials,
                                std::uint64_t seed);

} // namespace qmcut
