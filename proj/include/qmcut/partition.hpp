#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmcut {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (size 0, height 0) is a first-class value.
/// Trailing zeros are never stored; part(k) reads as 0 beyond the height.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sum of parts (the n in "partition of n").
    int size() const { return size_; }
    /// Number of parts (rows of the Young diagram).
    int height() const { return static_cast<int>(parts_.size()); }
    /// k-th part, 1-indexed; 0 for k > height.
    int part(int k) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Lexicographic order on the part sequences.
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Partition& other) const = default;

    /// "(3,2)" or "()" for the empty partition.
    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n with at most max_height parts, in lexicographically
/// decreasing order. For n = 0 the list holds just the empty partition.
std::vector<Partition> enumerate_partitions(int n, int max_height);

/// All partitions of m contained in bound (part-wise), lexicographically
/// decreasing. Used by the LR machinery to restrict searches early.
std::vector<Partition> enumerate_subpartitions(const Partition& bound, int m);

/// Sum of box contents (column - row, 1-indexed) over the diagram.
long long content_sum(const Partition& sigma);

/// m^2 - m - 2 * content_sum(sigma) with m = |sigma|. Always even.
long long eta_contents(const Partition& sigma);

/// n^2 + d(d-1)(2d-1)/6 - sum_{k=1..d} (sigma_k - (k-1))^2, parts padded
/// with zeros past the height. Throws std::domain_error if height > d.
long long eta_rows(const Partition& sigma, int d);

/// Number of standard Young tableaux of shape sigma (hook length formula,
/// exact integer arithmetic). The empty partition gives 1.
long long dim_irrep(const Partition& sigma);

/// Number of semistandard Young tableaux of shape sigma with entries in
/// {1..d}; 0 when the height exceeds d.
long long weyl_dim(const Partition& sigma, int d);

/// True iff mu fits inside lambda part-wise (mu padded with zeros).
bool is_subpartition(const Partition& mu, const Partition& lambda);

/// The unique partition of n into h parts whose parts differ by at most 1.
/// Throws std::domain_error when n < h.
Partition balanced_partition(int n, int h);

} // namespace qmcut
