#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: straight enumeration, no formulas.

#include <vector>

#include "qmcut/lr.hpp"
#include "qmcut/partition.hpp"

namespace qmcut::testing {

// Standard Young tableaux counted by growing the filled row profile.
inline long long count_syt_brute(const Partition& shape) {
    std::vector<int> filled(shape.height(), 0);
    long long total = 0;
    auto grow = [&](auto&& self, int placed) -> void {
        if (placed == shape.size()) {
            ++total;
            return;
        }
        for (int r = 0; r < shape.height(); ++r) {
            if (filled[r] >= shape.parts()[r])
                continue;
            if (r > 0 && filled[r - 1] <= filled[r])
                continue;
            ++filled[r];
            self(self, placed + 1);
            --filled[r];
        }
    };
    grow(grow, 0);
    return total;
}

// Semistandard Young tableaux with entries in {1..d}, counted box by box.
inline long long count_ssyt_brute(const Partition& shape, int d) {
    int rows = shape.height();
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r)
        grid[r].assign(shape.parts()[r], 0);
    long long total = 0;
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++total;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.parts()[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c < shape.parts()[r - 1])
            lo = std::max(lo, grid[r - 1][c] + 1);
        for (int k = lo; k <= d; ++k) {
            grid[r][c] = k;
            self(self, nr, nc);
        }
        grid[r][c] = 0;
    };
    if (shape.empty())
        return 1;
    fill(fill, 0, 0);
    return total;
}

// Every LR filling of a skew shape, found by raw label search filtered
// through the public validator.
inline std::vector<LRTableau> all_lr_fillings_brute(const SkewShape& shape) {
    std::vector<std::vector<int>> rows(shape.height());
    std::vector<std::pair<int, int>> slots; // (row index, position in row)
    for (int r = 1; r <= shape.height(); ++r) {
        int len = std::max(shape.row_end(r) - shape.row_begin(r) + 1, 0);
        rows[r - 1].assign(len, 1);
        for (int i = 0; i < len; ++i)
            slots.emplace_back(r - 1, i);
    }
    std::vector<LRTableau> out;
    int max_label = shape.height();
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == slots.size()) {
            LRTableau t(shape, rows);
            if (is_lr_filling(t))
                out.push_back(t);
            return;
        }
        auto [r, i] = slots[idx];
        for (int k = 1; k <= max_label; ++k) {
            rows[r][i] = k;
            self(self, idx + 1);
        }
        rows[r][i] = 1;
    };
    walk(walk, 0);
    return out;
}

} // namespace qmcut::testing
