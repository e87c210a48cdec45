/*
 * Finite-field brute-force oracle.
 *
 * Over F_p (p in {2, 3}) the twisted coinvariant dimension of an induced
 * representation is computed two independent ways:
 *
 *   brute:   dim pi_{N,psi} = (1/|N|) sum_{u in N} psi(u)^{-1} Theta_pi(u),
 *            with Theta evaluated exactly by counting stabilized flags;
 *   formula: sum_k [G_n : P_{k,r-2k,n-r+k}]_p * d_1(k) * d_2(k), the
 *            finite-field shadow of the filtration (no twists survive over
 *            a finite field).
 *
 * psi-values live in Z (p = 2) or Z[omega] (p = 3, omega^2 = -1 - omega);
 * averages must come out rational, integral and non-negative, and the code
 * hard-fails otherwise rather than rounding.  Steinberg factors enter
 * through Theta_{St_2} = Theta_{Ind_B 1} - Theta_{1}.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "doublecosets.hpp"

namespace shalika::ff_oracle {

using core_arith::require;

// ---------------------------------------------------------------------------
// Exact scalars: a + b*omega with omega a primitive cube root of unity.

struct CycInt {
    std::int64_t a = 0, b = 0;

    friend CycInt operator+(CycInt x, CycInt y) { return {x.a + y.a, x.b + y.b}; }
    friend CycInt operator*(CycInt x, std::int64_t k) { return {x.a * k, x.b * k}; }
    friend bool operator==(const CycInt&, const CycInt&) = default;
};

// psi_0(x) for x in F_p: (-1)^x (p = 2) or omega^x (p = 3).
inline CycInt psi0(int p, std::int64_t x) {
    x = ((x % p) + p) % p;
    if (p == 2) return {x == 0 ? 1 : -1, 0};
    require(p == 3, "psi0 needs p in {2, 3}");
    if (x == 0) return {1, 0};
    if (x == 1) return {0, 1};
    return {-1, -1};  // omega^2
}

// ---------------------------------------------------------------------------
// Small matrices over F_p.

inline constexpr int kMaxDim = 6;

struct Mat {
    int m = 0;
    int p = 2;
    std::array<std::uint8_t, kMaxDim * kMaxDim> v{};

    static Mat identity(int m, int p) {
        require(1 <= m && m <= kMaxDim, "matrix dimension out of range");
        Mat g;
        g.m = m;
        g.p = p;
        for (int i = 0; i < m; ++i) g.at(i, i) = 1;
        return g;
    }

    std::uint8_t& at(int i, int j) { return v[static_cast<std::size_t>(i * kMaxDim + j)]; }
    std::uint8_t at(int i, int j) const { return v[static_cast<std::size_t>(i * kMaxDim + j)]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat mul(const Mat& x, const Mat& y) {
    require(x.m == y.m && x.p == y.p, "matrix shape mismatch");
    Mat z;
    z.m = x.m;
    z.p = x.p;
    for (int i = 0; i < x.m; ++i)
        for (int j = 0; j < x.m; ++j) {
            int acc = 0;
            for (int t = 0; t < x.m; ++t) acc += x.at(i, t) * y.at(t, j);
            z.at(i, j) = static_cast<std::uint8_t>(acc % x.p);
        }
    return z;
}

inline int scalar_inv(int p, int x) {
    require(x % p != 0, "inverting zero");
    return (p == 2 || x % p == 1) ? 1 : 2;  // 2 * 2 = 4 = 1 mod 3
}

// Gauss-Jordan inverse; the input must be invertible.
inline Mat inverse(const Mat& g) {
    int m = g.m, p = g.p;
    Mat a = g, inv = Mat::identity(m, p);
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int i = col; i < m; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        require(piv >= 0, "matrix not invertible");
        for (int j = 0; j < m; ++j) {
            std::swap(a.v[static_cast<std::size_t>(piv * kMaxDim + j)], a.v[static_cast<std::size_t>(col * kMaxDim + j)]);
            std::swap(inv.v[static_cast<std::size_t>(piv * kMaxDim + j)], inv.v[static_cast<std::size_t>(col * kMaxDim + j)]);
        }
        int s = scalar_inv(p, a.at(col, col));
        for (int j = 0; j < m; ++j) {
            a.at(col, j) = static_cast<std::uint8_t>(a.at(col, j) * s % p);
            inv.at(col, j) = static_cast<std::uint8_t>(inv.at(col, j) * s % p);
        }
        for (int i = 0; i < m; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            int f = a.at(i, col);
            for (int j = 0; j < m; ++j) {
                a.at(i, j) = static_cast<std::uint8_t>((a.at(i, j) + (p - 1) * f * a.at(col, j)) % p);
                inv.at(i, j) = static_cast<std::uint8_t>((inv.at(i, j) + (p - 1) * f * inv.at(col, j)) % p);
            }
        }
    }
    return inv;
}

inline int det(const Mat& g) {
    int m = g.m, p = g.p;
    Mat a = g;
    int d = 1;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int i = col; i < m; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < m; ++j)
                std::swap(a.v[static_cast<std::size_t>(piv * kMaxDim + j)], a.v[static_cast<std::size_t>(col * kMaxDim + j)]);
            d = d * (p - 1) % p;  // row swap flips the sign
        }
        d = d * a.at(col, col) % p;
        int s = scalar_inv(p, a.at(col, col));
        for (int i = col + 1; i < m; ++i) {
            int f = a.at(i, col) * s % p;
            if (f == 0) continue;
            for (int j = col; j < m; ++j)
                a.at(i, j) = static_cast<std::uint8_t>((a.at(i, j) + (p - 1) * f * a.at(col, j)) % p);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Gaussian binomials: [m choose d]_p = [m-1 choose d-1]_p + p^d [m-1 choose d]_p.

inline std::int64_t gauss_binom(std::int64_t m, std::int64_t d, std::int64_t p) {
    require(m >= 0, "gauss_binom needs m >= 0");
    if (d < 0 || d > m) return 0;
    std::vector<std::int64_t> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        std::vector<std::int64_t> next(row.size(), 0);
        next[0] = 1;
        std::int64_t q = 1;
        for (std::int64_t j = 1; j <= i; ++j) {
            q *= p;  // p^j
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + q * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(d)];
}

// [m; parts]_p with m = sum(parts): product of binomials over partial sums.
inline std::int64_t gauss_multinomial(std::int64_t p, const std::vector<std::int64_t>& parts) {
    std::int64_t total = 0, out = 1;
    for (auto c : parts) {
        require(c >= 0, "negative part");
        total += c;
        out *= gauss_binom(total, c, p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flags.  A flag of type (c_1, ..., c_t) is a chain of subspaces with the
// given jumps; it is stored as an invertible matrix whose first c_1 + ... +
// c_i columns span the i-th member.  Enumeration is canonical (RREF bases
// stage by stage), so each flag appears exactly once.

namespace detail {

using Rows = std::vector<std::vector<std::uint8_t>>;  // vectors of length w

// All RREF matrices with d rows over F_p^w.
template <typename F>
void enumerate_rref(int w, int d, int p, F&& emit) {
    require(0 <= d && d <= w, "rref shape");
    std::vector<int> pivots;
    Rows rows(static_cast<std::size_t>(d), std::vector<std::uint8_t>(static_cast<std::size_t>(w), 0));

    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    auto fill_free = [&](auto&& self, std::size_t idx) -> void {
        if (idx == free_pos.size()) {
            emit(rows, pivots);
            return;
        }
        auto [i, j] = free_pos[idx];
        for (int x = 0; x < p; ++x) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(x);
            self(self, idx + 1);
        }
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };

    auto choose = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pivots.size()) == d) {
            for (auto& r : rows) std::fill(r.begin(), r.end(), 0);
            for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
            free_pos.clear();
            for (int i = 0; i < d; ++i)
                for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < w; ++j)
                    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                        free_pos.emplace_back(i, j);
            fill_free(fill_free, 0);
            return;
        }
        for (int j = from; j <= w - (d - static_cast<int>(pivots.size())); ++j) {
            pivots.push_back(j);
            self(self, j + 1);
            pivots.pop_back();
        }
    };
    choose(choose, 0);
}

// Reduced row echelon form of a set of independent vectors in F_p^m;
// returns the pivot columns.
inline std::vector<int> rref_in_place(Rows& rows, int p) {
    int m = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < m && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        int s = scalar_inv(p, rows[rank][static_cast<std::size_t>(col)]);
        for (auto& x : rows[rank]) x = static_cast<std::uint8_t>(x * s % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            int f = rows[i][static_cast<std::size_t>(col)];
            if (!f) continue;
            for (int j = 0; j < m; ++j)
                rows[i][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                    (rows[i][static_cast<std::size_t>(j)] + (p - 1) * f * rows[rank][static_cast<std::size_t>(j)]) % p);
        }
        pivots.push_back(col);
        ++rank;
    }
    require(rank == rows.size(), "vectors were dependent");
    return pivots;
}

}  // namespace detail

// Enumerate all flags of the given type in F_p^m; emit(basis) with basis
// columns grouped by stage.
template <typename F>
void enumerate_flags(int m, int p, const std::vector<std::int64_t>& comp, F&& emit) {
    std::int64_t total = 0;
    for (auto c : comp) {
        require(c >= 1, "flag type parts must be >= 1");
        total += c;
    }
    require(total == m, "flag type must sum to the dimension");

    detail::Rows basis;  // chosen basis vectors, in order
    auto stage = [&](auto&& self, std::size_t s) -> void {
        if (s == comp.size()) {
            Mat h;
            h.m = m;
            h.p = p;
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < m; ++i) h.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            emit(h);
            return;
        }
        detail::Rows span = basis;
        std::vector<int> pivots = detail::rref_in_place(span, p);
        std::vector<int> complement;
        for (int j = 0; j < m; ++j)
            if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) complement.push_back(j);

        int w = static_cast<int>(complement.size());
        detail::enumerate_rref(w, static_cast<int>(comp[s]), p, [&](const detail::Rows& rows, const std::vector<int>&) {
            std::size_t base = basis.size();
            for (const auto& row : rows) {
                std::vector<std::uint8_t> lift(static_cast<std::size_t>(m), 0);
                for (int j = 0; j < w; ++j) lift[static_cast<std::size_t>(complement[static_cast<std::size_t>(j)])] = row[static_cast<std::size_t>(j)];
                basis.push_back(std::move(lift));
            }
            self(self, s + 1);
            basis.resize(base);
        });
    };
    stage(stage, 0);
}

// ---------------------------------------------------------------------------
// Characters of induced representations.

enum class LeviTag { Trivial, Quadratic };

struct LeviChar {
    std::vector<std::int64_t> comp;
    std::vector<LeviTag> tags;
};

struct VirtualInduced {
    std::vector<std::pair<int, LeviChar>> terms;  // signed
};

// Block descriptions the oracle accepts: triv | st | quad per Levi block.
enum class BlockTag { Trivial, Steinberg, Quadratic };

struct RepSpec {
    std::vector<std::pair<std::int64_t, BlockTag>> blocks;  // (size, tag)

    std::int64_t rank() const {
        std::int64_t n = 0;
        for (const auto& [s, t] : blocks) n += s;
        return n;
    }
};

inline RepSpec concat(const RepSpec& x, const RepSpec& y) {
    RepSpec out = x;
    out.blocks.insert(out.blocks.end(), y.blocks.begin(), y.blocks.end());
    return out;
}

// Expand st blocks by Theta_{St_2} = Theta_{Ind_B 1} - Theta_{1}.
inline VirtualInduced expand(const RepSpec& spec, int p) {
    VirtualInduced out;
    out.terms.push_back({1, {}});
    for (const auto& [size, tag] : spec.blocks) {
        require(size >= 1, "block size must be >= 1");
        if (tag == BlockTag::Quadratic) require(p == 3, "quad tag needs p = 3");
        if (tag == BlockTag::Steinberg) {
            require(size == 2, "st tag is for size-2 blocks");
            std::vector<std::pair<int, LeviChar>> next;
            for (auto term : out.terms) {
                auto split = term;
                split.second.comp.insert(split.second.comp.end(), {1, 1});
                split.second.tags.insert(split.second.tags.end(), {LeviTag::Trivial, LeviTag::Trivial});
                next.push_back(std::move(split));
                term.first = -term.first;
                term.second.comp.push_back(2);
                term.second.tags.push_back(LeviTag::Trivial);
                next.push_back(std::move(term));
            }
            out.terms = std::move(next);
            continue;
        }
        LeviTag lt = tag == BlockTag::Quadratic ? LeviTag::Quadratic : LeviTag::Trivial;
        for (auto& term : out.terms) {
            term.second.comp.push_back(size);
            term.second.tags.push_back(lt);
        }
    }
    return out;
}

// Theta of a (virtual) induced representation, evaluated by flag counting.
// Flags for each distinct type are tabulated once.
class InducedCharacter {
  public:
    InducedCharacter(int m, int p, VirtualInduced vi) : m_(m), p_(p), vi_(std::move(vi)) {
        for (const auto& [sign, lc] : vi_.terms) {
            (void)sign;
            if (tables_.count(lc.comp)) continue;
            std::vector<Flag>& flags = tables_[lc.comp];
            enumerate_flags(m_, p_, lc.comp, [&](const Mat& h) { flags.push_back({h, inverse(h)}); });
            std::int64_t expect = gauss_multinomial(p_, lc.comp);
            require(static_cast<std::int64_t>(flags.size()) == expect, "flag count mismatch");
        }
    }

    std::int64_t value(const Mat& g) const {
        require(g.m == m_ && g.p == p_, "element shape mismatch");
        std::int64_t total = 0;
        for (const auto& [sign, lc] : vi_.terms) total += sign * term_value(g, lc);
        return total;
    }

    std::int64_t dim() const { return value(Mat::identity(m_, p_)); }

  private:
    struct Flag {
        Mat h, h_inv;
    };

    std::int64_t term_value(const Mat& g, const LeviChar& lc) const {
        const auto& flags = tables_.at(lc.comp);
        std::int64_t acc = 0;
        for (const auto& fl : flags) {
            Mat z = mul(fl.h_inv, mul(g, fl.h));
            int val = stabilized_value(z, lc);
            acc += val;
        }
        return acc;
    }

    // 0 if z does not stabilize the flag; otherwise the product of the
    // block characters at the graded determinants (+-1).
    int stabilized_value(const Mat& z, const LeviChar& lc) const {
        int off = 0, sign = 1;
        for (std::size_t s = 0; s < lc.comp.size(); ++s) {
            int c = static_cast<int>(lc.comp[s]);
            for (int j = off; j < off + c; ++j)
                for (int i = off + c; i < m_; ++i)
                    if (z.at(i, j) != 0) return 0;
            if (lc.tags[s] == LeviTag::Quadratic) {
                Mat blk;
                blk.m = c;
                blk.p = p_;
                for (int i = 0; i < c; ++i)
                    for (int j = 0; j < c; ++j) blk.at(i, j) = z.at(off + i, off + j);
                int d = det(blk);
                require(d != 0, "triangular block with zero determinant");
                if (d == 2) sign = -sign;  // the non-residue mod 3
            }
            off += c;
        }
        return sign;
    }

    int m_, p_;
    VirtualInduced vi_;
    std::map<std::vector<std::int64_t>, std::vector<Flag>> tables_;
};

// ---------------------------------------------------------------------------
// Twisted coinvariants against a top-right strip group.

struct StripPsi {
    int m;           // ambient G_m
    int rows, cols;  // N_{rows, cols}: the top-right rows x cols strip
    int tr_r0, tr_c0, tr_sz;  // psi = psi_0(trace of this square sub-block); sz 0 = trivial psi
};

inline StripPsi whole_strip(std::int64_t n) {
    return {static_cast<int>(2 * n), static_cast<int>(n), static_cast<int>(n), 0, 0, static_cast<int>(n)};
}
// Side 1 in G_r: N_{k,r-k}, psi on the first k columns of the strip.
inline StripPsi side1_strip(std::int64_t n, std::int64_t r, std::int64_t k) {
    (void)n;
    return {static_cast<int>(r), static_cast<int>(k), static_cast<int>(r - k), 0, 0, static_cast<int>(k)};
}
// Side 2 in G_{2n-r}: N_{n-k,n-r+k}, psi on the last n-r+k rows of the strip.
inline StripPsi side2_strip(std::int64_t n, std::int64_t r, std::int64_t k) {
    return {static_cast<int>(2 * n - r), static_cast<int>(n - k), static_cast<int>(n - r + k),
            static_cast<int>(r - 2 * k), 0, static_cast<int>(n - r + k)};
}

inline std::int64_t twisted_dim(const InducedCharacter& theta, const StripPsi& np, int p) {
    int cells = np.rows * np.cols;
    std::int64_t order = 1;
    for (int i = 0; i < cells; ++i) order *= p;

    std::vector<int> fill(static_cast<std::size_t>(cells), 0);
    CycInt acc;
    for (;;) {
        Mat u = Mat::identity(np.m, p);
        for (int i = 0; i < np.rows; ++i)
            for (int j = 0; j < np.cols; ++j)
                u.at(i, np.rows + j) = static_cast<std::uint8_t>(fill[static_cast<std::size_t>(i * np.cols + j)]);
        std::int64_t tr = 0;
        for (int t = 0; t < np.tr_sz; ++t) tr += fill[static_cast<std::size_t>((np.tr_r0 + t) * np.cols + (np.tr_c0 + t))];
        acc = acc + psi0(p, -tr) * theta.value(u);

        int i = 0;
        while (i < cells && fill[static_cast<std::size_t>(i)] == p - 1) fill[static_cast<std::size_t>(i++)] = 0;
        if (i == cells) break;
        ++fill[static_cast<std::size_t>(i)];
    }

    require(acc.b == 0, "coinvariant average not rational");
    require(acc.a % order == 0, "coinvariant average not integral");
    std::int64_t dim = acc.a / order;
    require(dim >= 0, "negative coinvariant dimension");
    return dim;
}

// ---------------------------------------------------------------------------
// The oracle: brute force against the closed formula.

struct OracleReport {
    std::int64_t n, r;
    int p;
    std::int64_t brute = 0, formula = 0;
    struct PerK {
        std::int64_t k, index, d1, d2;
    };
    std::vector<PerK> per_k;
    bool match = false;
};

inline OracleReport oracle(std::int64_t n, std::int64_t r, int p, const RepSpec& rho1, const RepSpec& rho2) {
    require(p == 2 || p == 3, "oracle needs p in {2, 3}");
    require(2 * n <= kMaxDim, "ambient group too large for the oracle");
    require(rho1.rank() == r, "rho_1 must live on G_r");
    require(rho2.rank() == 2 * n - r, "rho_2 must live on G_{2n-r}");
    auto kr = doublecosets::krange(n, r);

    OracleReport out;
    out.n = n;
    out.r = r;
    out.p = p;

    InducedCharacter big(static_cast<int>(2 * n), p, expand(concat(rho1, rho2), p));
    out.brute = twisted_dim(big, whole_strip(n), p);

    InducedCharacter t1(static_cast<int>(r), p, expand(rho1, p));
    InducedCharacter t2(static_cast<int>(2 * n - r), p, expand(rho2, p));
    for (std::int64_t k = kr.alpha; k <= kr.beta; ++k) {
        std::int64_t idx = gauss_multinomial(p, {k, r - 2 * k, n - r + k});
        std::int64_t d1 = twisted_dim(t1, side1_strip(n, r, k), p);
        std::int64_t d2 = twisted_dim(t2, side2_strip(n, r, k), p);
        out.per_k.push_back({k, idx, d1, d2});
        out.formula += idx * d1 * d2;
    }
    out.match = out.brute == out.formula;
    return out;
}

// ---------------------------------------------------------------------------
// Double cosets in GL_4(F_2), enumerated directly.  Elements are 16-bit
// masks, bit (4i + j) = entry (i, j).

namespace gl4 {

using Mask = std::uint16_t;

inline int row(Mask g, int i) { return (g >> (4 * i)) & 0xF; }

inline Mask from_rows(int r0, int r1, int r2, int r3) {
    return static_cast<Mask>(r0 | (r1 << 4) | (r2 << 8) | (r3 << 12));
}

inline Mask mul(Mask x, Mask y) {
    Mask out = 0;
    for (int i = 0; i < 4; ++i) {
        int acc = 0, xr = row(x, i);
        for (int j = 0; j < 4; ++j)
            if (xr & (1 << j)) acc ^= row(y, j);
        out |= static_cast<Mask>(acc << (4 * i));
    }
    return out;
}

inline bool invertible(Mask g) {
    int rows[4] = {row(g, 0), row(g, 1), row(g, 2), row(g, 3)};
    int rank = 0;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int i = rank; i < 4; ++i)
            if (rows[i] & (1 << col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < 4; ++i)
            if (i != rank && (rows[i] & (1 << col))) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank == 4;
}

inline Mask identity() { return from_rows(1, 2, 4, 8); }

inline Mask elementary(int i, int j) {
    Mask g = identity();
    g |= static_cast<Mask>(static_cast<Mask>(1 << j) << (4 * i));
    return g;
}

inline Mask from_perm(const doublecosets::PermMatrix& w) {
    require(w.size() == 4, "expected a 4 x 4 permutation");
    Mask g = 0;
    for (std::size_t j = 0; j < 4; ++j) g |= static_cast<Mask>(static_cast<Mask>(1 << j) << (4 * w.row_of(j)));
    return g;
}

inline const std::vector<Mask>& elements() {
    static const std::vector<Mask> els = [] {
        std::vector<Mask> out;
        for (std::uint32_t g = 0; g < (1u << 16); ++g)
            if (invertible(static_cast<Mask>(g))) out.push_back(static_cast<Mask>(g));
        return out;
    }();
    return els;
}

// Generators of S_psi = (diagonally embedded GL_2) . N_{2,2}.
inline std::vector<Mask> s_psi_generators() {
    Mask swap2 = from_rows(2, 1, 8, 4);        // [[0,1],[1,0]] duplicated
    Mask shear2 = from_rows(3, 2, 12, 8);      // [[1,1],[0,1]] duplicated
    return {swap2, shear2, elementary(0, 2), elementary(0, 3), elementary(1, 2), elementary(1, 3)};
}

// Generators of P_{r,4-r}: transvections inside each Levi block plus the
// radical entries.
inline std::vector<Mask> parabolic_generators(int r) {
    std::vector<Mask> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            bool same_block = (i < r && j < r) || (i >= r && j >= r);
            if (same_block || (i < r && j >= r)) out.push_back(elementary(i, j));
        }
    return out;
}

struct Partition {
    std::vector<std::vector<Mask>> cells;
    // cells[i] is sorted; every element of GL_4(F_2) lies in exactly one cell.
};

inline Partition double_coset_partition(int r) {
    const auto& els = elements();
    std::vector<int> cell_of(1u << 16, -1);
    auto left = s_psi_generators();
    auto right = parabolic_generators(r);

    Partition out;
    for (Mask seed : els) {
        if (cell_of[seed] != -1) continue;
        int id = static_cast<int>(out.cells.size());
        out.cells.emplace_back();
        std::vector<Mask> stack{seed};
        cell_of[seed] = id;
        while (!stack.empty()) {
            Mask g = stack.back();
            stack.pop_back();
            out.cells[static_cast<std::size_t>(id)].push_back(g);
            auto visit = [&](Mask h) {
                if (cell_of[h] == -1) {
                    cell_of[h] = id;
                    stack.push_back(h);
                }
            };
            for (Mask s : left) visit(mul(s, g));
            for (Mask q : right) visit(mul(g, q));
        }
        std::sort(out.cells.back().begin(), out.cells.back().end());
    }
    return out;
}

}  // namespace gl4

// Check that the block representatives hit each double coset exactly once.
struct PartitionCheck {
    std::int64_t r = 0;
    std::size_t cell_count = 0;
    std::int64_t element_total = 0;
    bool representatives_bijective = false;
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::size_t>> rep_cells;  // (k,l) -> cell size
};

inline PartitionCheck partition_check(std::int64_t r) {
    auto part = gl4::double_coset_partition(static_cast<int>(r));
    PartitionCheck out;
    out.r = r;
    out.cell_count = part.cells.size();
    for (const auto& c : part.cells) out.element_total += static_cast<std::int64_t>(c.size());

    std::vector<int> hit(part.cells.size(), 0);
    bool ok = static_cast<std::int64_t>(part.cells.size()) == doublecosets::index_count_formula(2, r);
    for (auto [k, l] : doublecosets::index_set(2, r)) {
        gl4::Mask w = gl4::from_perm(doublecosets::w_kl(2, r, k, l));
        int found = -1;
        for (std::size_t i = 0; i < part.cells.size(); ++i)
            if (std::binary_search(part.cells[i].begin(), part.cells[i].end(), w)) {
                found = static_cast<int>(i);
                break;
            }
        require(found >= 0, "representative missing from the partition");
        ++hit[static_cast<std::size_t>(found)];
        out.rep_cells.push_back({{k, l}, part.cells[static_cast<std::size_t>(found)].size()});
    }
    for (int h : hit) ok = ok && h == 1;
    out.representatives_bijective = ok && out.element_total == 20160;
    return out;
}

}  // namespace shalika::ff_oracle
