#pragma once

#include <optional>
#include <vector>

#include "qmcut/partition.hpp"

namespace qmcut {

/// Skew diagram outer/inner. The constructor enforces inner ⊆ outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_);

    int box_count() const { return outer.size() - inner.size(); }
    /// First column (1-indexed) holding a skew box in row r, i.e. inner_r + 1.
    int row_begin(int r) const { return inner.part(r) + 1; }
    /// Last column holding a skew box in row r, i.e. outer_r.
    int row_end(int r) const { return outer.part(r); }
    int height() const { return outer.height(); }
};

/// A skew diagram together with one positive integer label per skew box.
/// Row r of the filling lists the labels of columns row_begin(r)..row_end(r).
/// Construction checks only the row lengths; semistandardness and the
/// lattice-word condition are queried through is_lr_filling.
class LRTableau {
public:
    LRTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Label at box (r, c) in absolute 1-indexed coordinates.
    int label(int r, int c) const { return rows_[r - 1][c - shape_.row_begin(r)]; }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Littlewood-Richardson validity: rows weakly increase, columns strictly
/// increase across the skew diagram, and the concatenation of reversed rows
/// (top to bottom) is a lattice word.
bool is_lr_filling(const LRTableau& t);

/// Content partition of a filling: part i counts the label i occurrences.
/// Throws std::invalid_argument when the counts are not weakly decreasing
/// (cannot happen for a valid LR filling).
Partition enumeration_of(const LRTableau& t);

/// Number of LR fillings of lambda/mu with content nu. Zero when the sizes
/// do not add up or mu is not contained in lambda.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Iterated LR coefficient c^lambda_{f1 f2 ... fk}, folded left to right
/// through intermediate partitions: sum_kappa c^kappa_{f1 f2} c^lambda_{kappa f3 ...}.
long long iterated_lr(const Partition& lambda, const std::vector<Partition>& factors);

/// Independent three-factor count: enumerates intermediate shapes kappa with
/// mu ⊆ kappa ⊆ lambda directly and counts fillings of kappa/mu and
/// lambda/kappa by unpruned search validated through is_lr_filling.
/// Agrees with iterated_lr(lambda, {mu, nu, zeta}) on all inputs.
long long iterated_lr_direct(const Partition& lambda, const Partition& mu, const Partition& nu,
                             const Partition& zeta);

/// Greedy minimal filling: boxes in reading order (left to right, top to
/// bottom) take the smallest label that still extends to a valid LR filling.
/// Empty optional when the shape admits no LR filling.
std::optional<LRTableau> minimal_lr_filling(const SkewShape& shape);

/// A tuple (lambda, mu, nu, zeta) with nonzero iterated LR coefficient.
struct ValidTuple {
    Partition lambda;
    Partition mu;
    Partition nu;
    Partition zeta;
    long long coefficient = 0;

    bool operator==(const ValidTuple&) const = default;
};

/// Every tuple with lambda ⊢ p+q+r of height ≤ d, mu ⊢ p, nu ⊢ q, zeta ⊢ r
/// and c^lambda_{mu nu zeta} > 0, in lexicographically decreasing nested
/// enumeration order. Throws std::domain_error unless p ≥ q ≥ r ≥ 1.
std::vector<ValidTuple> valid_tuples(int p, int q, int r, int d);

} // namespace qmcut
