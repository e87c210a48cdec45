/*
 * Double coset data for S_psi \ G_{2n} / P_{r,2n-r}.
 *
 * Representatives are block permutation matrices w_{k,l}; the k-range and
 * the shapes of the unipotent groups the filtration factors twist by are
 * recorded here.  Permutations are exact (column -> row maps); the same
 * matrices reduce mod p for finite-field checks.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core_arith.hpp"

namespace shalika::doublecosets {

using core_arith::require;

// alpha = max(0, r-n), beta = floor(r/2), gamma = min(r, n).
// For 1 <= r < 2n these satisfy 0 <= alpha <= beta <= gamma.
struct KRange {
    std::int64_t alpha, beta, gamma;
};

inline KRange krange(std::int64_t n, std::int64_t r) {
    require(n >= 1 && 1 <= r && r < 2 * n, "krange needs 1 <= r < 2n");
    KRange kr{std::max<std::int64_t>(0, r - n), r / 2, std::min(r, n)};
    require(0 <= kr.alpha && kr.alpha <= kr.beta && kr.beta <= kr.gamma, "k-range order broken");
    return kr;
}

// Permutation matrix, stored as the row index of the 1 in each column.
class PermMatrix {
  public:
    explicit PermMatrix(std::size_t n) : row_of_col_(n, SIZE_MAX) {}

    std::size_t size() const { return row_of_col_.size(); }
    std::size_t row_of(std::size_t col) const { return row_of_col_[col]; }

    void place(std::size_t row, std::size_t col) {
        require(row_of_col_[col] == SIZE_MAX, "column already used");
        row_of_col_[col] = row;
    }
    bool complete() const {
        std::vector<bool> seen(size(), false);
        for (auto r : row_of_col_) {
            if (r == SIZE_MAX || r >= size() || seen[r]) return false;
            seen[r] = true;
        }
        return true;
    }

    // (a*b) e_j = a (b e_j).
    friend PermMatrix operator*(const PermMatrix& a, const PermMatrix& b) {
        require(a.size() == b.size(), "size mismatch");
        PermMatrix out(a.size());
        for (std::size_t j = 0; j < b.size(); ++j) out.row_of_col_[j] = a.row_of_col_[b.row_of_col_[j]];
        return out;
    }
    PermMatrix inverse() const {
        PermMatrix out(size());
        for (std::size_t j = 0; j < size(); ++j) out.row_of_col_[row_of_col_[j]] = j;
        return out;
    }

    friend bool operator==(const PermMatrix&, const PermMatrix&) = default;

    std::vector<std::vector<int>> dense() const {
        std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
        for (std::size_t j = 0; j < size(); ++j) m[row_of_col_[j]][j] = 1;
        return m;
    }

    std::string str() const {
        std::string out;
        auto m = dense();
        for (const auto& row : m) {
            for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
            out += "\n";
        }
        return out;
    }

  private:
    std::vector<std::size_t> row_of_col_;
};

// Builds a block permutation matrix from row/column block sizes and a list
// of (row block -> column block) identity placements.  Every block size
// must be >= 0 and the placements must tile the matrix.
inline PermMatrix block_perm(const std::vector<std::int64_t>& row_sizes,
                             const std::vector<std::int64_t>& col_sizes,
                             const std::vector<std::pair<int, int>>& identities) {
    std::int64_t n = 0;
    for (auto s : row_sizes) {
        require(s >= 0, "negative block size");
        n += s;
    }
    std::int64_t nc = 0;
    for (auto s : col_sizes) {
        require(s >= 0, "negative block size");
        nc += s;
    }
    require(n == nc, "row/column totals differ");

    auto offset = [](const std::vector<std::int64_t>& sizes, int block) {
        std::int64_t o = 0;
        for (int i = 0; i < block; ++i) o += sizes[i];
        return o;
    };
    PermMatrix w(static_cast<std::size_t>(n));
    for (auto [rb, cb] : identities) {
        require(row_sizes[rb] == col_sizes[cb], "identity block size mismatch");
        std::int64_t ro = offset(row_sizes, rb), co = offset(col_sizes, cb);
        for (std::int64_t t = 0; t < row_sizes[rb]; ++t)
            w.place(static_cast<std::size_t>(ro + t), static_cast<std::size_t>(co + t));
    }
    require(w.complete(), "placements do not tile a permutation");
    return w;
}

inline bool index_valid(std::int64_t n, std::int64_t r, std::int64_t k, std::int64_t l) {
    KRange kr = krange(n, r);
    return kr.alpha <= k && k <= kr.gamma && kr.alpha <= l && l <= std::min(k, r - k);
}

// Representative for the (k,l) double coset.
inline PermMatrix w_kl(std::int64_t n, std::int64_t r, std::int64_t k, std::int64_t l) {
    require(index_valid(n, r, k, l), "w_kl index out of range");
    return block_perm({k, n - k, l, k - l, r - k - l, n - r + l},
                      {k, l, r - k - l, n - k, k - l, n - r + l},
                      {{0, 0}, {1, 3}, {2, 1}, {3, 4}, {4, 2}, {5, 5}});
}

// sigma_{k,l} translates the P x P_{r,2n-r} coset of w_{k,alpha} into the
// S_psi x P_{r,2n-r} coset of w_{k,l}: sigma_{k,l} w_{k,alpha} = w_{k,l}.
inline PermMatrix sigma_kl(std::int64_t n, std::int64_t r, std::int64_t k, std::int64_t l) {
    require(index_valid(n, r, k, l), "sigma_kl index out of range");
    std::int64_t a = std::max<std::int64_t>(0, r - n);
    return block_perm({k, n - k, a, l - a, k - l, r - k - l, l - a, n - r + a},
                      {k, n - k, a, k - l, l - a, l - a, r - k - l, n - r + a},
                      {{0, 0}, {1, 1}, {2, 2}, {3, 5}, {4, 3}, {5, 6}, {6, 4}, {7, 7}});
}

// The diagonal-friendly form of w_k := w_{k,k}; built from a different
// block layout and checked equal to w_kl(n, r, k, k) in the tests.
inline PermMatrix w_k_alternate(std::int64_t n, std::int64_t r, std::int64_t k) {
    return block_perm({k, r - 2 * k, n - r + k, k, r - 2 * k, n - r + k},
                      {k, k, r - 2 * k, r - 2 * k, n - r + k, n - r + k},
                      {{0, 0}, {1, 3}, {2, 4}, {3, 1}, {4, 2}, {5, 5}});
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> index_set(std::int64_t n, std::int64_t r) {
    KRange kr = krange(n, r);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t k = kr.alpha; k <= kr.gamma; ++k)
        for (std::int64_t l = kr.alpha; l <= std::min(k, r - k); ++l) out.emplace_back(k, l);
    return out;
}

inline std::int64_t index_count_formula(std::int64_t n, std::int64_t r) {
    KRange kr = krange(n, r);
    std::int64_t total = 0;
    for (std::int64_t k = kr.alpha; k <= kr.gamma; ++k)
        total += std::max<std::int64_t>(0, std::min(k, r - k) - kr.alpha + 1);
    return total;
}

inline bool compose_check(std::int64_t n, std::int64_t r, std::int64_t k, std::int64_t l) {
    std::int64_t a = std::max<std::int64_t>(0, r - n);
    return sigma_kl(n, r, k, l) * w_kl(n, r, k, a) == w_kl(n, r, k, l);
}

// Shape of one of the two unipotent groups a filtration factor twists by:
// block sizes inside the ambient G_m, with the character block marked.
// Written as a two block group it is the unipotent radical of a maximal
// parabolic; psi is nontrivial exactly when the trace block is nonempty,
// which is also exactly when the group is nontrivial.
struct BlockShape {
    std::int64_t ambient;
    std::array<std::int64_t, 3> sizes;
    int psi_row, psi_col;  // trace character sits on this block pair

    std::pair<std::int64_t, std::int64_t> two_block_form() const {
        if (psi_row == 0 && psi_col == 1) return {sizes[0], sizes[1] + sizes[2]};
        return {sizes[0] + sizes[1], sizes[2]};
    }
    bool group_trivial() const {
        auto [rows, cols] = two_block_form();
        return rows == 0 || cols == 0;
    }
    bool psi_nontrivial() const { return std::min(sizes[psi_row], sizes[psi_col]) > 0; }

    std::string str() const {
        return "N(" + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
               std::to_string(sizes[2]) + ")<G_" + std::to_string(ambient) + " psi@(" +
               std::to_string(psi_row + 1) + "," + std::to_string(psi_col + 1) + ")";
    }
};

// Side 1: blocks (k, k, r-2k) of G_r, trace character on the (1,2) block;
// as a two block group this is N_{k,r-k}.
inline BlockShape side1_shape(std::int64_t n, std::int64_t r, std::int64_t k) {
    require(k >= 0 && r - 2 * k >= 0, "side1 shape out of range");
    (void)n;
    return {r, {k, k, r - 2 * k}, 0, 1};
}

// Side 2: blocks (r-2k, n-r+k, n-r+k) of G_{2n-r}, trace character on the
// (2,3) block; the (1,2) entry is zero, so this is N_{n-k,n-r+k}.
inline BlockShape side2_shape(std::int64_t n, std::int64_t r, std::int64_t k) {
    require(r - 2 * k >= 0 && n - r + k >= 0, "side2 shape out of range");
    return {2 * n - r, {r - 2 * k, n - r + k, n - r + k}, 1, 2};
}

// Dimensions of the three stabilizer-side blocks (a, b, c) = (k, r-2k, n-r+k).
inline std::array<std::int64_t, 3> levi_blocks(std::int64_t n, std::int64_t r, std::int64_t k) {
    return {k, r - 2 * k, n - r + k};
}

}  // namespace shalika::doublecosets
