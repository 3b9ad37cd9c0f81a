#include "qmcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "qmcut/partition.hpp"

namespace qmcut {

namespace {

constexpr std::size_t kMaxIterativeDim = std::size_t{1} << 22;
constexpr std::size_t kMaxDenseDim = 4096;

int worker_count(std::size_t dim) {
    if (dim < (std::size_t{1} << 15))
        return 1;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QMC_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return static_cast<int>(hw);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

} // namespace

std::size_t state_dimension(int d, int n) {
    if (d < 1 || n < 0)
        throw std::domain_error("need d ≥ 1 and n ≥ 0");
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) {
        if (dim > (std::size_t{1} << 62) / static_cast<std::size_t>(d))
            throw std::domain_error("d^n overflows");
        dim *= static_cast<std::size_t>(d);
    }
    return dim;
}

StateVector zero_state(int d, int n) { return {d, n, std::vector<double>(state_dimension(d, n), 0.0)}; }

StateVector basis_state(int d, int n, std::size_t index) {
    StateVector v = zero_state(d, n);
    if (index >= v.amplitudes.size())
        throw std::domain_error("basis index out of range");
    v.amplitudes[index] = 1.0;
    return v;
}

StateVector random_state(int d, int n, std::uint64_t seed) {
    StateVector v = zero_state(d, n);
    std::mt19937_64 rng(seed);
    for (double& a : v.amplitudes)
        a = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    return v;
}

HamiltonianOperator::HamiltonianOperator(Graph graph, int d)
    : graph_(std::move(graph)), d_(d), dim_(state_dimension(d, graph_.vertex_count())) {}

namespace {

// Digit place values: site 0 is the most significant base-d digit.
std::vector<std::size_t> place_values(int d, int n) {
    std::vector<std::size_t> pow(n, 1);
    for (int k = n - 2; k >= 0; --k)
        pow[k] = pow[k + 1] * static_cast<std::size_t>(d);
    return pow;
}

void check_state(const StateVector& v) {
    if (v.amplitudes.size() != state_dimension(v.d, v.n))
        throw std::domain_error("amplitude length is not d^n");
}

} // namespace

StateVector apply_swap(const StateVector& v, int i, int j) {
    check_state(v);
    if (i == j || i < 0 || j < 0 || i >= v.n || j >= v.n)
        throw std::domain_error("swap sites must be distinct and < n");
    auto pow = place_values(v.d, v.n);
    const std::size_t pi = pow[i], pj = pow[j];
    const std::size_t d = static_cast<std::size_t>(v.d);
    StateVector out = v;
    for (std::size_t b = 0; b < v.amplitudes.size(); ++b) {
        std::size_t di = (b / pi) % d;
        std::size_t dj = (b / pj) % d;
        if (di != dj) {
            std::size_t src = b + (dj - di) * pi + (di - dj) * pj;
            out.amplitudes[b] = v.amplitudes[src];
        }
    }
    return out;
}

StateVector apply_hamiltonian(const HamiltonianOperator& h, const StateVector& v) {
    check_state(v);
    if (v.d != h.local_dim() || v.n != h.sites())
        throw std::domain_error("state does not match operator dimensions");
    auto pow = place_values(v.d, v.n);
    const std::size_t d = static_cast<std::size_t>(v.d);
    struct EdgePows {
        std::size_t pi, pj;
    };
    std::vector<EdgePows> eps;
    eps.reserve(h.graph().edges().size());
    for (const auto& [i, j] : h.graph().edges())
        eps.push_back({pow[i], pow[j]});

    StateVector out = zero_state(v.d, v.n);
    auto fill_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t b = lo; b < hi; ++b) {
            double acc = 0;
            for (const auto& [pi, pj] : eps) {
                std::size_t di = (b / pi) % d;
                std::size_t dj = (b / pj) % d;
                if (di != dj) {
                    std::size_t src = b + (dj - di) * pi + (di - dj) * pj;
                    acc += v.amplitudes[b] - v.amplitudes[src];
                }
            }
            out.amplitudes[b] = 2 * acc;
        }
    };

    const std::size_t dim = v.amplitudes.size();
    int workers = worker_count(dim);
    if (workers <= 1) {
        fill_range(0, dim);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (dim + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(dim, static_cast<std::size_t>(w) * chunk);
            std::size_t hi = std::min(dim, lo + chunk);
            if (lo < hi)
                pool.emplace_back(fill_range, lo, hi);
        }
        for (auto& t : pool)
            t.join();
    }
    return out;
}

MaxEigenvalueResult max_eigenvalue_detailed(const HamiltonianOperator& h, double tol,
                                            long max_iters, std::uint64_t seed) {
    if (!(tol > 0))
        throw std::domain_error("tol must be positive");
    if (max_iters < 1)
        throw std::domain_error("max_iters must be positive");
    if (h.dimension() > kMaxIterativeDim)
        throw std::domain_error("state dimension d^n exceeds the iterative guard 2^22");

    StateVector v = random_state(h.local_dim(), h.sites(), seed);
    double nv = norm(v.amplitudes);
    for (double& a : v.amplitudes)
        a /= nv;

    double prev = 0.0;
    for (long iter = 1; iter <= max_iters; ++iter) {
        StateVector w = apply_hamiltonian(h, v);
        double lambda = dot(v.amplitudes, w.amplitudes);
        double nw = norm(w.amplitudes);
        if (nw == 0.0)
            return {0.0, iter, 0.0, seed}; // v is annihilated: exact kernel vector
        if (iter > 1 && std::abs(lambda - prev) < tol) {
            double residual = 0;
            for (std::size_t b = 0; b < w.amplitudes.size(); ++b) {
                double r = w.amplitudes[b] - lambda * v.amplitudes[b];
                residual += r * r;
            }
            return {lambda, iter, std::sqrt(residual), seed};
        }
        prev = lambda;
        for (std::size_t b = 0; b < w.amplitudes.size(); ++b)
            v.amplitudes[b] = w.amplitudes[b] / nw;
    }
    StateVector w = apply_hamiltonian(h, v);
    double lambda = dot(v.amplitudes, w.amplitudes);
    double residual = 0;
    for (std::size_t b = 0; b < w.amplitudes.size(); ++b) {
        double r = w.amplitudes[b] - lambda * v.amplitudes[b];
        residual += r * r;
    }
    residual = std::sqrt(residual);
    throw ConvergenceError("power iteration did not converge after " + std::to_string(max_iters) +
                               " iterations: last Rayleigh quotient " + std::to_string(lambda) +
                               ", residual " + std::to_string(residual),
                           lambda, residual, max_iters);
}

double max_eigenvalue(const HamiltonianOperator& h, double tol, long max_iters,
                      std::uint64_t seed) {
    return max_eigenvalue_detailed(h, tol, max_iters, seed).value;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n)
        throw std::invalid_argument("matrix storage must be dim x dim");
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

    double scale = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale += at(i, j) * at(i, j);
    scale = std::sqrt(scale);
    const double stop = std::max(1e-300, 1e-13 * std::max(1.0, scale));

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += at(p, q) * at(p, q);
        if (std::sqrt(2 * off) <= stop)
            break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= stop / (2.0 * n))
                    continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> full_spectrum(const HamiltonianOperator& h) {
    const std::size_t dim = h.dimension();
    if (dim > kMaxDenseDim)
        throw std::domain_error("state dimension d^n exceeds the dense guard 4096");
    auto pow = place_values(h.local_dim(), h.sites());
    const std::size_t d = static_cast<std::size_t>(h.local_dim());
    std::vector<double> m(dim * dim, 0.0);
    for (const auto& [i, j] : h.graph().edges()) {
        const std::size_t pi = pow[i], pj = pow[j];
        for (std::size_t b = 0; b < dim; ++b) {
            std::size_t di = (b / pi) % d;
            std::size_t dj = (b / pj) % d;
            if (di == dj)
                continue;
            std::size_t b2 = b + (dj - di) * pi + (di - dj) * pj;
            m[b * dim + b] += 2;
            m[b2 * dim + b] -= 2;
        }
    }
    return symmetric_eigenvalues(std::move(m), dim);
}

bool verify_clique_spectrum(int n, int d) {
    HamiltonianOperator h(complete_graph(n), d);
    std::vector<double> spectrum = full_spectrum(h);

    std::map<long long, long long> expected;
    for (const auto& lam : enumerate_partitions(n, d))
        expected[eta_contents(lam)] += dim_irrep(lam) * weyl_dim(lam, d);

    std::map<long long, long long> observed;
    for (double x : spectrum) {
        double r = std::round(x);
        if (std::abs(x - r) > 1e-8)
            return false;
        ++observed[static_cast<long long>(r)];
    }
    return observed == expected;
}

bool verify_complement_identity(const std::vector<int>& parts, int d, int trials,
                                std::uint64_t seed) {
    auto [kn, cliques] = complement_decomposition(parts);
    HamiltonianOperator whole(kn, d);
    HamiltonianOperator multi(complete_multipartite(parts), d);
    std::vector<HamiltonianOperator> blocks;
    blocks.reserve(cliques.size());
    for (auto& c : cliques)
        blocks.emplace_back(std::move(c), d);

    for (int t = 0; t < trials; ++t) {
        StateVector v = random_state(d, kn.vertex_count(), seed + static_cast<std::uint64_t>(t));
        StateVector lhs = apply_hamiltonian(multi, v);
        for (const auto& blk : blocks) {
            StateVector add = apply_hamiltonian(blk, v);
            for (std::size_t b = 0; b < lhs.amplitudes.size(); ++b)
                lhs.amplitudes[b] += add.amplitudes[b];
        }
        StateVector rhs = apply_hamiltonian(whole, v);
        for (std::size_t b = 0; b < lhs.amplitudes.size(); ++b) {
            double a = lhs.amplitudes[b], r = rhs.amplitudes[b];
            if (std::abs(a - r) > 1e-10 * std::max({1.0, std::abs(a), std::abs(r)}))
                return false;
        }
    }
    return true;
}

} // namespace qmcut
