#pragma once

#include <string>
#include <vector>

#include "qmcut/lr.hpp"
#include "qmcut/partition.hpp"

namespace qmcut {

/// One problem instance: local dimension d plus part sizes sorted p ≥ q ≥ r ≥ …
struct QmcInstance {
    int d = 2;
    std::vector<int> parts;
};

enum class SolveMethod { search, closed_form, oracle };

std::string to_string(SolveMethod m);

/// A maximizing tuple for the general k-part search: lambda plus one factor
/// partition per part. For tripartite instances the factors are (mu, nu, zeta).
struct ScoredTuple {
    Partition lambda;
    std::vector<Partition> factors;
    long long coefficient = 0;

    bool operator==(const ScoredTuple&) const = default;
};

struct QmcSolution {
    int d = 0;
    std::vector<int> parts;
    SolveMethod method = SolveMethod::search;
    long long value = 0;
    std::vector<ScoredTuple> argmax; // every tuple attaining the maximum, sorted
};

/// Xi(lambda, mu, nu, zeta) = eta_lambda - eta_mu - eta_nu - eta_zeta.
/// Throws std::domain_error unless |lambda| = |mu| + |nu| + |zeta|.
long long xi(const Partition& lambda, const Partition& mu, const Partition& nu,
             const Partition& zeta);

/// Maximize Xi over valid tuples with het(lambda) ≤ d for a tripartite
/// instance (exactly three parts, p ≥ q ≥ r ≥ 1).
QmcSolution solve_search(const QmcInstance& inst);

/// k-part generalization: maximize eta_lambda - sum_i eta_{mu_i} over tuples
/// with nonzero k-factor iterated LR coefficient. Parts must be sorted
/// nonincreasing with k ≥ 2; zero parts contribute empty factor partitions.
QmcSolution solve_multipartite(const std::vector<int>& parts, int d);

long long closed_form_d1(int p, int q, int r);
long long closed_form_d2(int p, int q, int r);
long long closed_form_d3(int p, int q, int r);

/// Scalar eta_lambda by which H_{K_n} acts on the irrep block lambda.
/// Throws std::domain_error when het(lambda) > d.
long long clique_block_eigenvalue(const Partition& lambda, int d);

/// The constants sometimes quoted for the d=2 balanced regime (p < q+r),
/// 4k^2 - 1 for n = 2k and 4k(k+1) - 3 for n = 2k+1. Both are odd, while Xi
/// is always even; `verify` reports them next to the computed values so the
/// discrepancy stays visible.
long long printed_balanced_d2_value(int n);

} // namespace qmcut
