#include "qmcut/partition.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qmcut {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int k) const {
    if (k < 1)
        throw std::out_of_range("part index is 1-based");
    return k <= height() ? parts_[k - 1] : 0;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (int i = 0; i < p.height(); ++i) {
        if (i)
            os << ',';
        os << p.parts()[i];
    }
    return os << ')';
}

namespace {

void emit_partitions(int remaining, int max_part, int rows_left, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0)
        return;
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        acc.push_back(first);
        emit_partitions(remaining - first, first, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int max_height) {
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    if (max_height < 1)
        throw std::invalid_argument("max_height must be positive");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, max_height, acc, out);
    return out;
}

namespace {

void emit_subpartitions(const Partition& bound, int remaining, int row, int prev, std::vector<int>& acc,
                        std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (row > bound.height())
        return;
    int hi = std::min({remaining, prev, bound.part(row)});
    for (int v = hi; v >= 1; --v) {
        acc.push_back(v);
        emit_subpartitions(bound, remaining - v, row + 1, v, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_subpartitions(const Partition& bound, int m) {
    std::vector<Partition> out;
    if (m < 0 || m > bound.size())
        return out;
    std::vector<int> acc;
    emit_subpartitions(bound, m, 1, m, acc, out);
    return out;
}

long long content_sum(const Partition& sigma) {
    long long total = 0;
    for (int r = 1; r <= sigma.height(); ++r) {
        long long len = sigma.part(r);
        // columns 1..len in row r contribute (c - r) each
        total += len * (len + 1) / 2 - len * r;
    }
    return total;
}

long long eta_contents(const Partition& sigma) {
    long long m = sigma.size();
    return m * m - m - 2 * content_sum(sigma);
}

long long eta_rows(const Partition& sigma, int d) {
    if (d < 1)
        throw std::domain_error("d must be positive");
    if (sigma.height() > d)
        throw std::domain_error("partition height exceeds d");
    long long n = sigma.size();
    long long dd = d;
    long long total = n * n + dd * (dd - 1) * (2 * dd - 1) / 6;
    for (int k = 1; k <= d; ++k) {
        long long t = sigma.part(k) - (k - 1);
        total -= t * t;
    }
    return total;
}

namespace {

// Hook length of box (r, c), 1-indexed: arm + leg + 1.
int hook_length(const Partition& sigma, int r, int c) {
    int arm = sigma.part(r) - c;
    int leg = 0;
    for (int rr = r + 1; rr <= sigma.height() && sigma.part(rr) >= c; ++rr)
        ++leg;
    return arm + leg + 1;
}

} // namespace

long long dim_irrep(const Partition& sigma) {
    int n = sigma.size();
    if (n > 30)
        throw std::domain_error("dim_irrep: partition size exceeds exact-arithmetic bound");
    if (n == 0)
        return 1;
    unsigned __int128 num = 1;
    for (int k = 2; k <= n; ++k)
        num *= static_cast<unsigned>(k);
    unsigned __int128 den = 1;
    for (int r = 1; r <= sigma.height(); ++r)
        for (int c = 1; c <= sigma.part(r); ++c)
            den *= static_cast<unsigned>(hook_length(sigma, r, c));
    return static_cast<long long>(num / den);
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

long long weyl_dim(const Partition& sigma, int d) {
    if (d < 1)
        throw std::invalid_argument("d must be positive");
    if (sigma.height() > d)
        return 0;
    // Weyl dimension formula for GL_d: prod_{i<j} (s_i - s_j + j - i) / (j - i),
    // reduced after every step so intermediates stay near the final value.
    unsigned __int128 num = 1, den = 1;
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            num *= static_cast<unsigned>(sigma.part(i) - sigma.part(j) + j - i);
            den *= static_cast<unsigned>(j - i);
            auto g = gcd128(num, den);
            num /= g;
            den /= g;
        }
    }
    unsigned __int128 dim = num / den;
    if (dim > static_cast<unsigned __int128>(__LONG_LONG_MAX__))
        throw std::domain_error("weyl_dim: result exceeds 64-bit range");
    return static_cast<long long>(dim);
}

bool is_subpartition(const Partition& mu, const Partition& lambda) {
    if (mu.height() > lambda.height())
        return false;
    for (int k = 1; k <= mu.height(); ++k)
        if (mu.part(k) > lambda.part(k))
            return false;
    return true;
}

Partition balanced_partition(int n, int h) {
    if (h < 1)
        throw std::domain_error("height must be positive");
    if (n < h)
        throw std::domain_error("cannot split n into more positive parts than n");
    std::vector<int> parts(h, n / h);
    for (int i = 0; i < n % h; ++i)
        ++parts[i];
    return Partition(std::move(parts));
}

} // namespace qmcut
