#include "qmcut/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmcut {

std::string to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::search:
        return "search";
    case SolveMethod::closed_form:
        return "closed_form";
    case SolveMethod::oracle:
        return "oracle";
    }
    return "?";
}

long long xi(const Partition& lambda, const Partition& mu, const Partition& nu,
             const Partition& zeta) {
    if (lambda.size() != mu.size() + nu.size() + zeta.size())
        throw std::domain_error("xi requires |lambda| = |mu| + |nu| + |zeta|");
    return eta_contents(lambda) - eta_contents(mu) - eta_contents(nu) - eta_contents(zeta);
}

namespace {

void require_sorted_positive(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::domain_error("part sizes must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::domain_error("part sizes must be sorted nonincreasing");
    }
}

bool tuple_less(const ScoredTuple& a, const ScoredTuple& b) {
    if (a.lambda != b.lambda)
        return a.lambda < b.lambda;
    return a.factors < b.factors;
}

QmcSolution search_over_tuples(const std::vector<int>& parts, int d) {
    int n = 0;
    for (int p : parts)
        n += p;
    QmcSolution sol{d, parts, SolveMethod::search, 0, {}};

    bool have = false;
    for (const auto& lambda : enumerate_partitions(n, d)) {
        long long eta_l = eta_contents(lambda);
        std::vector<std::vector<Partition>> choices;
        for (int p : parts)
            choices.push_back(enumerate_subpartitions(lambda, p));

        std::vector<Partition> factors(parts.size());
        auto walk = [&](auto&& self, std::size_t i) -> void {
            if (i == parts.size()) {
                long long c = iterated_lr(lambda, factors);
                if (c <= 0)
                    return;
                long long value = eta_l;
                for (const auto& f : factors)
                    value -= eta_contents(f);
                if (!have || value > sol.value) {
                    have = true;
                    sol.value = value;
                    sol.argmax.clear();
                }
                if (value == sol.value)
                    sol.argmax.push_back({lambda, factors, c});
                return;
            }
            for (const auto& f : choices[i]) {
                factors[i] = f;
                self(self, i + 1);
            }
        };
        walk(walk, 0);
    }
    if (!have)
        throw std::domain_error("no valid tuple exists for the given parts and d");
    std::sort(sol.argmax.begin(), sol.argmax.end(), tuple_less);
    return sol;
}

} // namespace

QmcSolution solve_search(const QmcInstance& inst) {
    if (inst.parts.size() != 3)
        throw std::domain_error("solve_search expects a tripartite instance");
    require_sorted_positive(inst.parts);
    if (inst.d < 1)
        throw std::domain_error("d must be positive");
    return search_over_tuples(inst.parts, inst.d);
}

QmcSolution solve_multipartite(const std::vector<int>& parts, int d) {
    if (parts.size() < 2)
        throw std::domain_error("solve_multipartite expects at least two parts");
    if (d < 1)
        throw std::domain_error("d must be positive");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::domain_error("part sizes must be nonnegative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::domain_error("part sizes must be sorted nonincreasing");
    }
    int n = 0;
    for (int p : parts)
        n += p;
    if (n < 1)
        throw std::domain_error("at least one part must be nonzero");
    return search_over_tuples(parts, d);
}

long long closed_form_d1(int p, int q, int r) {
    require_sorted_positive({p, q, r});
    return 0;
}

long long closed_form_d2(int p, int q, int r) {
    require_sorted_positive({p, q, r});
    long long n = p + q + r;
    if (p >= q + r)
        return 2 * (n - p) * (p + 1);
    return eta_contents(balanced_partition(static_cast<int>(n), 2));
}

long long closed_form_d3(int p, int q, int r) {
    require_sorted_positive({p, q, r});
    long long n = p + q + r;
    long long pp = p, qq = q;
    return 2 * n * (2 + pp + qq) - 2 * (pp * pp + qq + qq * qq + pp * (2 + qq));
}

long long clique_block_eigenvalue(const Partition& lambda, int d) {
    return eta_rows(lambda, d);
}

long long printed_balanced_d2_value(int n) {
    long long k = n / 2;
    return n % 2 == 0 ? 4 * k * k - 1 : 4 * k * (k + 1) - 3;
}

} // namespace qmcut
