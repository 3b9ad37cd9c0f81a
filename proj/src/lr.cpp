#include "qmcut/lr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmcut {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!is_subpartition(inner, outer))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

LRTableau::LRTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.height())
        throw std::invalid_argument("filling must have one row per outer row");
    for (int r = 1; r <= shape_.height(); ++r) {
        int want = shape_.row_end(r) - shape_.row_begin(r) + 1;
        if (static_cast<int>(rows_[r - 1].size()) != std::max(want, 0))
            throw std::invalid_argument("filling row length does not match skew shape");
        for (int v : rows_[r - 1])
            if (v < 1)
                throw std::invalid_argument("labels must be positive");
    }
}

bool is_lr_filling(const LRTableau& t) {
    const SkewShape& s = t.shape();
    // rows weakly increase
    for (const auto& row : t.rows())
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] > row[i])
                return false;
    // columns strictly increase; within one skew shape the boxes of a column
    // occupy consecutive rows, so adjacent rows suffice
    for (int r = 2; r <= s.height(); ++r)
        for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
            if (c >= s.row_begin(r - 1) && c <= s.row_end(r - 1) && t.label(r - 1, c) >= t.label(r, c))
                return false;
    // reverse reading word is a lattice word
    std::vector<int> counts;
    for (int r = 1; r <= s.height(); ++r) {
        for (int c = s.row_end(r); c >= s.row_begin(r); --c) {
            int k = t.label(r, c);
            if (static_cast<int>(counts.size()) < k)
                counts.resize(k, 0);
            if (k >= 2 && counts[k - 1] + 1 > counts[k - 2])
                return false;
            ++counts[k - 1];
        }
    }
    return true;
}

Partition enumeration_of(const LRTableau& t) {
    std::vector<int> counts;
    for (const auto& row : t.rows())
        for (int k : row) {
            if (static_cast<int>(counts.size()) < k)
                counts.resize(k, 0);
            ++counts[k - 1];
        }
    return Partition(std::move(counts));
}

namespace {

struct Box {
    int row;
    int col;
};

// Boxes of the skew shape in reverse reading order: rows top to bottom,
// right to left within a row. This is exactly the lattice-word order, so the
// prefix condition can be enforced during the search.
std::vector<Box> word_order_boxes(const SkewShape& s) {
    std::vector<Box> boxes;
    for (int r = 1; r <= s.height(); ++r)
        for (int c = s.row_end(r); c >= s.row_begin(r); --c)
            boxes.push_back({r, c});
    return boxes;
}

// Backtracking counter for LR fillings of `s` with content `nu`, walking the
// boxes in lattice-word order with the prefix condition checked on the fly.
class LatticeCounter {
public:
    LatticeCounter(const SkewShape& s, const Partition& nu)
        : shape_(s), target_(nu), boxes_(word_order_boxes(s)), counts_(nu.height(), 0) {
        labels_.resize(s.height() + 1);
        for (int r = 1; r <= s.height(); ++r)
            labels_[r].assign(std::max(s.row_end(r) + 1, 1), 0);
    }

    long long count() {
        total_ = 0;
        descend(0);
        return total_;
    }

private:
    void descend(std::size_t idx) {
        if (idx == boxes_.size()) {
            ++total_;
            return;
        }
        auto [r, c] = boxes_[idx];
        for (int k = 1; k <= target_.height(); ++k) {
            if (counts_[k - 1] >= target_.part(k))
                continue;
            if (k >= 2 && counts_[k - 1] >= counts_[k - 2])
                continue; // would break the lattice prefix
            if (c < shape_.row_end(r) && k > labels_[r][c + 1])
                continue; // row must weakly increase
            if (r > 1 && c >= shape_.row_begin(r - 1) && c <= shape_.row_end(r - 1) &&
                k <= labels_[r - 1][c])
                continue; // column must strictly increase
            labels_[r][c] = k;
            ++counts_[k - 1];
            descend(idx + 1);
            --counts_[k - 1];
            labels_[r][c] = 0;
        }
    }

    const SkewShape& shape_;
    const Partition& target_;
    std::vector<Box> boxes_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> labels_;
    long long total_ = 0;
};

} // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size())
        return 0;
    if (!is_subpartition(mu, lambda))
        return 0;
    SkewShape shape(lambda, mu);
    if (shape.box_count() == 0)
        return nu.empty() ? 1 : 0;
    return LatticeCounter(shape, nu).count();
}

long long iterated_lr(const Partition& lambda, const std::vector<Partition>& factors) {
    int total = 0;
    for (const auto& f : factors)
        total += f.size();
    if (total != lambda.size())
        return 0;
    if (factors.empty())
        return lambda.empty() ? 1 : 0;
    if (!is_subpartition(factors[0], lambda))
        return 0;

    std::map<Partition, long long> dist;
    dist[factors[0]] = 1;
    int folded = factors[0].size();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const Partition& f = factors[i];
        folded += f.size();
        std::map<Partition, long long> next;
        bool last = i + 1 == factors.size();
        const auto candidates =
            last ? std::vector<Partition>{lambda} : enumerate_subpartitions(lambda, folded);
        for (const auto& [kappa, weight] : dist) {
            for (const auto& grown : candidates) {
                if (!is_subpartition(kappa, grown))
                    continue;
                long long c = lr_coefficient(grown, kappa, f);
                if (c)
                    next[grown] += weight * c;
            }
        }
        dist = std::move(next);
    }
    auto it = dist.find(lambda);
    return it == dist.end() ? 0 : it->second;
}

namespace {

// Unpruned filling counter used by the direct iterated rule: boxes in plain
// reading order, only the semistandard constraints applied during the walk,
// the lattice condition checked at the leaves through the public validator.
long long count_fillings_unpruned(const SkewShape& s, const Partition& content) {
    if (s.box_count() != content.size())
        return 0;
    if (s.box_count() == 0)
        return 1;
    std::vector<Box> boxes;
    for (int r = 1; r <= s.height(); ++r)
        for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
            boxes.push_back({r, c});
    std::vector<std::vector<int>> grid(s.height() + 1);
    for (int r = 1; r <= s.height(); ++r)
        grid[r].assign(std::max(s.row_end(r) + 1, 1), 0);
    std::vector<int> counts(content.height(), 0);
    long long total = 0;

    auto validate = [&]() {
        std::vector<std::vector<int>> rows(s.height());
        for (int r = 1; r <= s.height(); ++r)
            for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
                rows[r - 1].push_back(grid[r][c]);
        return is_lr_filling(LRTableau(s, std::move(rows)));
    };

    auto descend = [&](auto&& self, std::size_t idx) -> void {
        if (idx == boxes.size()) {
            if (validate())
                ++total;
            return;
        }
        auto [r, c] = boxes[idx];
        for (int k = 1; k <= content.height(); ++k) {
            if (counts[k - 1] >= content.part(k))
                continue;
            if (c > s.row_begin(r) && k < grid[r][c - 1])
                continue;
            if (r > 1 && c >= s.row_begin(r - 1) && c <= s.row_end(r - 1) && k <= grid[r - 1][c])
                continue;
            grid[r][c] = k;
            ++counts[k - 1];
            self(self, idx + 1);
            --counts[k - 1];
            grid[r][c] = 0;
        }
    };
    descend(descend, 0);
    return total;
}

} // namespace

long long iterated_lr_direct(const Partition& lambda, const Partition& mu, const Partition& nu,
                             const Partition& zeta) {
    if (lambda.size() != mu.size() + nu.size() + zeta.size())
        return 0;
    if (!is_subpartition(mu, lambda))
        return 0;
    long long total = 0;
    for (const auto& kappa : enumerate_subpartitions(lambda, mu.size() + nu.size())) {
        if (!is_subpartition(mu, kappa))
            continue;
        long long inner = count_fillings_unpruned(SkewShape(kappa, mu), nu);
        if (!inner)
            continue;
        total += inner * count_fillings_unpruned(SkewShape(lambda, kappa), zeta);
    }
    return total;
}

namespace {

// Lattice check over the word of the first `rows_done` rows.
bool lattice_prefix_ok(const SkewShape& s, const std::vector<std::vector<int>>& grid, int rows_done) {
    std::vector<int> counts;
    for (int r = 1; r <= rows_done; ++r)
        for (int c = s.row_end(r); c >= s.row_begin(r); --c) {
            int k = grid[r][c];
            if (static_cast<int>(counts.size()) < k)
                counts.resize(k, 0);
            if (k >= 2 && counts[k - 1] + 1 > counts[k - 2])
                return false;
            ++counts[k - 1];
        }
    return true;
}

} // namespace

std::optional<LRTableau> minimal_lr_filling(const SkewShape& shape) {
    std::vector<Box> boxes;
    for (int r = 1; r <= shape.height(); ++r)
        for (int c = shape.row_begin(r); c <= shape.row_end(r); ++c)
            boxes.push_back({r, c});

    std::vector<std::vector<int>> grid(shape.height() + 1);
    for (int r = 1; r <= shape.height(); ++r)
        grid[r].assign(std::max(shape.row_end(r) + 1, 1), 0);

    // Smallest-label-first search in reading order; the first complete filling
    // is the greedy minimal one. Entries of an LR filling in absolute row r
    // never exceed r, which bounds the branching.
    auto descend = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == boxes.size())
            return true;
        auto [r, c] = boxes[idx];
        bool row_ends = c == shape.row_end(r);
        for (int k = 1; k <= r; ++k) {
            if (c > shape.row_begin(r) && k < grid[r][c - 1])
                continue;
            if (r > 1 && c >= shape.row_begin(r - 1) && c <= shape.row_end(r - 1) &&
                k <= grid[r - 1][c])
                continue;
            grid[r][c] = k;
            if (!row_ends || lattice_prefix_ok(shape, grid, r)) {
                if (self(self, idx + 1))
                    return true;
            }
            grid[r][c] = 0;
        }
        return false;
    };

    if (!descend(descend, 0))
        return std::nullopt;
    std::vector<std::vector<int>> rows(shape.height());
    for (int r = 1; r <= shape.height(); ++r)
        for (int c = shape.row_begin(r); c <= shape.row_end(r); ++c)
            rows[r - 1].push_back(grid[r][c]);
    return LRTableau(shape, std::move(rows));
}

std::vector<ValidTuple> valid_tuples(int p, int q, int r, int d) {
    if (!(p >= q && q >= r && r >= 1))
        throw std::domain_error("part sizes must satisfy p ≥ q ≥ r ≥ 1");
    if (d < 1)
        throw std::domain_error("d must be positive");
    std::vector<ValidTuple> out;
    for (const auto& lambda : enumerate_partitions(p + q + r, d))
        for (const auto& mu : enumerate_subpartitions(lambda, p))
            for (const auto& nu : enumerate_subpartitions(lambda, q))
                for (const auto& zeta : enumerate_subpartitions(lambda, r)) {
                    long long c = iterated_lr(lambda, {mu, nu, zeta});
                    if (c > 0)
                        out.push_back({lambda, mu, nu, zeta, c});
                }
    return out;
}

} // namespace qmcut
