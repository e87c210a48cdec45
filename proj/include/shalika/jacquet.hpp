/*
 * The twisted Jacquet module engine.
 *
 * For pi = rho_1 x rho_2 induced from P_{r,2n-r}, the restriction of
 * pi_{N,psi} to the stabilizer carries a filtration with one factor per k
 * in [alpha, beta].  Factor k is induced from a product of two local
 * twisted Jacquet modules (side 1 from rho_1, side 2 from rho_2) together
 * with three nu-twists on the stabilizer Levi blocks (a, b, c) =
 * (k, r-2k, n-r+k):
 *
 *   - the normalizing twists of the two local functors,
 *   - delta_{P_{r,2n-r}}^{1/2} transported through w_k,
 *   - delta^{-3/2} of the stabilizer parabolic.
 *
 * Their sum telescopes to (a: (n+k-r)/2, b: 0, c: -k/2); in particular at
 * r = n, k = 0 every source vanishes separately.  Local factors are
 * decided by a small set of rules (trivial group, one-dimensional rep
 * against a nontrivial character, Whittaker line on G_2, genericity in the
 * mirabolic-type shapes); anything else stays Unknown rather than guessed.
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doublecosets.hpp"
#include "reps.hpp"
#include "zelevinsky.hpp"

namespace shalika::jacquet {

using core_arith::FormalCharacter;
using core_arith::HalfInt;
using core_arith::half;
using core_arith::require;
using doublecosets::BlockShape;
using reps::ReprExpr;
using segments::Multisegment;
using segments::Segment;

// ---------------------------------------------------------------------------
// Twists on the stabilizer blocks.

struct TwistTable {
    // nu-exponent per block 'a', 'b', 'c'; entries only for non-empty blocks.
    std::map<char, HalfInt> local_norm, conjugated_half_delta, stabilizer_delta, net;
};

inline TwistTable twist_table(std::int64_t n, std::int64_t r, std::int64_t k) {
    auto blocks = doublecosets::levi_blocks(n, r, k);
    TwistTable t;
    auto put = [&](std::map<char, HalfInt>& m, int i, HalfInt v) {
        if (blocks[static_cast<std::size_t>(i)] > 0) m[static_cast<char>('a' + i)] = v;
    };
    put(t.local_norm, 0, half(r - 2 * k));
    put(t.local_norm, 1, half(n - r));
    put(t.local_norm, 2, half(2 * k - r));

    put(t.conjugated_half_delta, 0, HalfInt::whole(2 * n - r));
    put(t.conjugated_half_delta, 1, HalfInt::whole(n - r));
    put(t.conjugated_half_delta, 2, HalfInt::whole(-r));

    put(t.stabilizer_delta, 0, half(-3 * (n - k)));
    put(t.stabilizer_delta, 1, half(-3 * (n - r)));
    put(t.stabilizer_delta, 2, half(3 * (r - k)));

    put(t.net, 0, half(n + k - r));
    put(t.net, 1, half(0));
    put(t.net, 2, half(-k));

    for (const auto& [b, v] : t.net) {
        HalfInt s = t.local_norm.at(b) + t.conjugated_half_delta.at(b) + t.stabilizer_delta.at(b);
        require(s == v, "twist sources do not telescope");
    }
    return t;
}

struct FactorDescriptor {
    std::int64_t n, r, k;
    std::array<std::int64_t, 3> blocks;  // stabilizer Levi (a, b, c)
    BlockShape side1, side2;
    TwistTable twists;
};

inline FactorDescriptor factor_descriptor(std::int64_t n, std::int64_t r, std::int64_t k) {
    return {n,
            r,
            k,
            doublecosets::levi_blocks(n, r, k),
            doublecosets::side1_shape(n, r, k),
            doublecosets::side2_shape(n, r, k),
            twist_table(n, r, k)};
}

// ---------------------------------------------------------------------------
// Local block verdicts.

enum class BlockStatus { TrivialGroup, Zero, WhittakerLine, SymbolicNonZero, Unknown };

struct BlockVerdict {
    BlockStatus status;
    std::optional<FormalCharacter> omega;  // WhittakerLine: the central character
    std::string rule;

    bool nonzero() const {
        return status == BlockStatus::TrivialGroup || status == BlockStatus::WhittakerLine ||
               status == BlockStatus::SymbolicNonZero;
    }
};

// The generic nonvanishing shape: character block of size 1 next to a size 1
// neighbour at the outer edge (blocks (1,1,m) on side 1, (m,1,1) on side 2).
inline bool mirabolic_shape(const BlockShape& s) {
    if (s.psi_row == 0) return s.sizes[0] == 1 && s.sizes[1] == 1;
    return s.sizes[1] == 1 && s.sizes[2] == 1;
}

inline BlockVerdict block_tjm(const ReprExpr& rho, const BlockShape& shape) {
    require(reps::rank(rho) == shape.ambient, "block rep rank does not match ambient group");
    if (shape.group_trivial()) return {BlockStatus::TrivialGroup, std::nullopt, "trivial-group"};
    // Nontrivial group forces nontrivial psi for these shapes.
    require(shape.psi_nontrivial(), "unexpected shape: nontrivial group, degenerate character");
    if (reps::is_character(rho)) return {BlockStatus::Zero, std::nullopt, "character-vs-nontrivial-psi"};
    if (shape.ambient == 2 && reps::gl2_class(rho)) {
        // Full unipotent of G_2 with nondegenerate character: one Whittaker
        // line; the torus stabilizer is central and acts by omega.
        return {BlockStatus::WhittakerLine, reps::central_character(rho), "whittaker-on-gl2"};
    }
    if (mirabolic_shape(shape) && reps::generic_class(rho))
        return {BlockStatus::SymbolicNonZero, std::nullopt, "generic-nonvanishing"};
    return {BlockStatus::Unknown, std::nullopt, "no-rule"};
}

// ---------------------------------------------------------------------------
// Twisting an expression by a character (the diagonal restriction of a
// character tensor factor).

inline ReprExpr twist(const ReprExpr& e, const FormalCharacter& chi) {
    auto twist_m = [&](const Multisegment& m) {
        std::vector<Segment> out;
        for (const auto& s : m.segments()) out.emplace_back(s.label * chi.label, s.b + chi.exp, s.e + chi.exp);
        return Multisegment(std::move(out));
    };
    return std::visit(
        [&](const auto& v) -> ReprExpr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, reps::ZRep>) return ReprExpr(reps::ZRep{twist_m(v.m)});
            else if constexpr (std::is_same_v<T, reps::LRep>) return ReprExpr(reps::LRep{twist_m(v.m)});
            else if constexpr (std::is_same_v<T, reps::CharRep>) return reps::character(v.rank, v.chi * chi);
            else if constexpr (std::is_same_v<T, reps::SteinbergRep>) return reps::steinberg(v.rank, v.chi * chi);
            else {
                std::vector<ReprExpr> fs;
                for (const auto& f : v.factors) fs.push_back(twist(f, chi));
                return reps::product(std::move(fs));
            }
        },
        e.node);
}

// rho_1 (x) rho_2 restricted to the diagonal copy: a character factor is
// absorbed as a twist of the other side.
inline std::optional<ReprExpr> diagonal_module(const ReprExpr& left, const ReprExpr& right) {
    if (auto c = reps::as_character(left)) return twist(right, *c);
    if (auto c = reps::as_character(right)) return twist(left, *c);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The filtration.

enum class FactorStatus { Zero, NonZero, Unknown };

inline std::string status_str(FactorStatus s) {
    switch (s) {
        case FactorStatus::Zero: return "zero";
        case FactorStatus::NonZero: return "non-zero";
        default: return "unknown";
    }
}

struct Factor {
    FactorDescriptor desc;
    BlockVerdict left, right;
    FactorStatus status;
    // Both groups trivial: the factor is rho_1 (x) rho_2 on the diagonal.
    std::optional<std::pair<ReprExpr, ReprExpr>> tensor;
    // Fully resolved diagonal module, when derivable.
    std::optional<ReprExpr> module;
};

struct TJMVerdict {
    std::int64_t n = 0, r = 0;
    FactorStatus status = FactorStatus::Unknown;
    std::vector<Factor> factors;
    std::optional<ReprExpr> module;  // when a single surviving factor resolves
    std::vector<std::string> notes;
};

inline TJMVerdict tjm_filtration(std::int64_t n, std::int64_t r, const ReprExpr& rho1,
                                 const ReprExpr& rho2) {
    require(reps::rank(rho1) == r, "rho_1 must live on G_r");
    require(reps::rank(rho2) == 2 * n - r, "rho_2 must live on G_{2n-r}");
    auto kr = doublecosets::krange(n, r);

    TJMVerdict out;
    out.n = n;
    out.r = r;
    for (std::int64_t k = kr.alpha; k <= kr.beta; ++k) {
        Factor f{factor_descriptor(n, r, k), {}, {}, FactorStatus::Unknown, std::nullopt, std::nullopt};
        f.left = block_tjm(rho1, f.desc.side1);
        f.right = block_tjm(rho2, f.desc.side2);
        if (f.left.status == BlockStatus::Zero || f.right.status == BlockStatus::Zero)
            f.status = FactorStatus::Zero;
        else if (f.left.nonzero() && f.right.nonzero())
            f.status = FactorStatus::NonZero;

        if (f.left.status == BlockStatus::TrivialGroup && f.right.status == BlockStatus::TrivialGroup) {
            // Only possible at r = n, k = 0, where every twist vanishes.
            f.tensor = {rho1, rho2};
            f.module = diagonal_module(rho1, rho2);
        } else if (f.left.status == BlockStatus::WhittakerLine &&
                   f.right.status == BlockStatus::WhittakerLine &&
                   f.desc.blocks == std::array<std::int64_t, 3>{1, 0, 1}) {
            // n = r = 2, k = 1: the factor is the principal series of Delta G_2
            // induced from omega_1 nu^{1/2} (x) omega_2 nu^{-1/2}.
            FormalCharacter c1 = f.left.omega->twist(f.desc.twists.net.at('a'));
            FormalCharacter c2 = f.right.omega->twist(f.desc.twists.net.at('c'));
            f.module = reps::product({reps::character(1, c1), reps::character(1, c2)});
        }
        out.factors.push_back(std::move(f));
    }

    bool all_zero = true, any_nonzero = false;
    for (const auto& f : out.factors) {
        all_zero = all_zero && f.status == FactorStatus::Zero;
        any_nonzero = any_nonzero || f.status == FactorStatus::NonZero;
    }
    out.status = all_zero ? FactorStatus::Zero
                          : (any_nonzero ? FactorStatus::NonZero : FactorStatus::Unknown);

    int nonzero_with_module = 0;
    const Factor* survivor = nullptr;
    bool rest_zero = true;
    for (const auto& f : out.factors) {
        if (f.status == FactorStatus::Zero) continue;
        if (f.status == FactorStatus::NonZero && f.module) {
            ++nonzero_with_module;
            survivor = &f;
        } else {
            rest_zero = false;
        }
    }
    if (nonzero_with_module == 1 && rest_zero) out.module = survivor->module;
    return out;
}

// One-dimensional representations of G_{2n} die against the nontrivial psi.
inline FactorStatus one_dimensional_verdict(const ReprExpr& pi) {
    require(reps::is_character(pi), "rule needs a one-dimensional representation");
    return FactorStatus::Zero;
}

// ---------------------------------------------------------------------------
// The one-parameter family L_{chi,alpha} = Z({Delta + alpha, Delta}).

struct LFamilyReport {
    std::int64_t n, alpha;
    FormalCharacter chi;
    Multisegment m;     // {Delta_alpha, Delta}
    Multisegment dual;  // its rewrite dual (three runs, n + alpha - 1 segments)
    ReprExpr l_expr;
    TJMVerdict sequence_total;                            // chi nu^alpha x chi
    FactorStatus quotient_verdict;                        // the cokernel of L -> xi
    std::pair<FormalCharacter, FormalCharacter> tjm_pair;  // (chi nu^alpha, chi)
    ReprExpr tjm_diag;                                     // diagonal restriction
    bool shalika;
    std::string note;
};

inline LFamilyReport analyze_L_family(std::int64_t n, std::int64_t alpha, const FormalCharacter& chi) {
    require(1 <= alpha && alpha <= n, "family needs 1 <= alpha <= n");
    HalfInt lo = chi.exp - half(n - 1), hi = chi.exp + half(n - 1);
    Segment delta(chi.label, lo, hi);
    Segment delta_alpha = delta.shifted(HalfInt::whole(alpha));
    Multisegment m({delta_alpha, delta});

    Multisegment dual = zelevinsky::dual_of_shifted_pair(n, alpha, chi);

    FormalCharacter chi_hi = chi.twist(HalfInt::whole(alpha));
    TJMVerdict total = tjm_filtration(n, n, reps::character(n, chi_hi), reps::character(n, chi));

    // Cokernel: Z(union) x Z(intersection); juxtaposed at alpha = n.
    FactorStatus coker;
    auto ui = segments::union_intersect(delta_alpha, delta);
    if (ui.inter) {
        ReprExpr zu = reps::character(ui.uni.length(), FormalCharacter{ui.uni.label, ui.uni.center()});
        ReprExpr zi = reps::character(ui.inter->length(),
                                      FormalCharacter{ui.inter->label, ui.inter->center()});
        coker = tjm_filtration(n, ui.uni.length(), zu, zi).status;
    } else {
        coker = one_dimensional_verdict(
            reps::character(ui.uni.length(), FormalCharacter{ui.uni.label, ui.uni.center()}));
    }
    require(coker == FactorStatus::Zero, "family cokernel unexpectedly non-vanishing");
    require(total.status == FactorStatus::NonZero && total.module, "family total did not resolve");

    FormalCharacter sq = chi * chi_hi;
    return {n,
            alpha,
            chi,
            m,
            dual,
            ReprExpr(reps::ZRep{m}),
            total,
            coker,
            {chi_hi, chi},
            *total.module,
            sq.is_trivial(),
            "L-family-sequence"};
}

// ---------------------------------------------------------------------------
// Subquotients of St_r chi x chi nu^{-n} (r <= n) and their contragredients.

struct SteinbergCharReport {
    std::int64_t n = 0, r = 0;
    FormalCharacter chi;
    bool reducible = false;
    std::optional<ReprExpr> z_expr, q_expr;  // Langlands data of sub and quotient
    TJMVerdict full;          // St_r chi x chi nu^{-n}
    TJMVerdict q_embedding;   // auxiliary product showing the quotient dies
    FactorStatus z_verdict, q_verdict;
    std::optional<std::pair<ReprExpr, ReprExpr>> z_tensor;
    TJMVerdict full_dual;  // chi^{-1} nu^n x St_r chi^{-1}
    TJMVerdict q_dual_embedding;
    FactorStatus z_dual_verdict, q_dual_verdict;
    std::optional<std::pair<ReprExpr, ReprExpr>> z_dual_tensor;
    std::string note;
};

inline ReprExpr char_of_segment(const Segment& s) {
    return reps::character(s.length(), FormalCharacter{s.label, s.center()});
}

inline SteinbergCharReport analyze_steinberg_char(std::int64_t n, std::int64_t r,
                                                  const FormalCharacter& chi) {
    require(1 <= r && r <= n,
            "subquotient analysis covers r <= n; for r > n both subquotients can survive");
    SteinbergCharReport rep;
    rep.n = n;
    rep.r = r;
    rep.chi = chi;
    rep.note = "steinberg-char-subquotients";

    FormalCharacter mu = chi.twist(HalfInt::whole(-n));
    Segment delta = reps::character_segment(r, chi);
    Segment delta_p = reps::character_segment(2 * n - r, mu);
    rep.reducible = segments::juxtaposed(delta, delta_p);
    require(rep.reducible, "St_r chi x chi nu^{-n} should be juxtaposed");

    // Langlands data: quotient splits the character segment into points.
    std::vector<Segment> mq{delta};
    for (HalfInt t = delta_p.e; t >= delta_p.b; t -= HalfInt::whole(1)) mq.emplace_back(delta_p.label, t, t);
    rep.q_expr = ReprExpr(reps::LRep{Multisegment(mq)});
    {
        std::vector<Segment> mz{Segment(delta.label, delta.b - HalfInt::whole(1), delta.e)};
        for (HalfInt t = delta_p.e - HalfInt::whole(1); t >= delta_p.b; t -= HalfInt::whole(1))
            mz.emplace_back(delta_p.label, t, t);
        rep.z_expr = ReprExpr(reps::LRep{Multisegment(mz)});
    }

    std::optional<ReprExpr> aux_points, aux_char;  // the quotient's ambient product
    rep.full = tjm_filtration(n, r, reps::steinberg(r, chi), reps::character(2 * n - r, mu));
    if (r < n) {
        rep.z_verdict = rep.q_verdict = FactorStatus::Zero;
        require(rep.full.status == FactorStatus::Zero, "full product should vanish for r < n");
        rep.q_embedding = rep.full;
    } else {
        require(rep.full.status == FactorStatus::NonZero, "full product should survive at r = n");
        rep.z_verdict = FactorStatus::NonZero;
        rep.z_tensor = {reps::steinberg(n, chi), reps::character(n, mu)};
        // Q = Z(m^t): the dual puts one long segment under n - 1 points, so
        // Q embeds into (points product) x (character of G_{n+1}).
        Multisegment mt = zelevinsky::mw_dual(Multisegment(mq));
        const Segment* long_seg = nullptr;
        std::vector<ReprExpr> points;
        for (const auto& s : mt.segments()) {
            if (s.length() == n + 1) {
                require(!long_seg, "dual should contain a single long segment");
                long_seg = &s;
            } else {
                require(s.length() == 1, "dual should be points plus one long segment");
                points.push_back(char_of_segment(s));
            }
        }
        require(long_seg && points.size() == static_cast<std::size_t>(n - 1), "unexpected dual shape");
        aux_points = reps::product(points);
        aux_char = char_of_segment(*long_seg);
        rep.q_embedding = tjm_filtration(n, n - 1, *aux_points, *aux_char);
        require(rep.q_embedding.status == FactorStatus::Zero, "quotient embedding should vanish");
        rep.q_verdict = FactorStatus::Zero;
    }

    // Contragredient family: 0 -> Z^vee -> chi^{-1} nu^n x St_r chi^{-1} -> Q^vee -> 0.
    FormalCharacter chi_inv = chi.inverse();
    FormalCharacter mu_inv = chi_inv.twist(HalfInt::whole(n));
    rep.full_dual =
        tjm_filtration(n, 2 * n - r, reps::character(2 * n - r, mu_inv), reps::steinberg(r, chi_inv));
    if (r < n) {
        rep.z_dual_verdict = rep.q_dual_verdict = FactorStatus::Zero;
        require(rep.full_dual.status == FactorStatus::Zero, "dual product should vanish for r < n");
        rep.q_dual_embedding = rep.full_dual;
    } else {
        require(rep.full_dual.status == FactorStatus::NonZero, "dual product should survive at r = n");
        rep.z_dual_verdict = FactorStatus::NonZero;
        rep.z_dual_tensor = {reps::character(n, mu_inv), reps::steinberg(n, chi_inv)};
        // Q^vee is a quotient of the contragredient of Q's ambient product.
        rep.q_dual_embedding = tjm_filtration(n, n - 1, reps::contragredient(*aux_points),
                                              reps::contragredient(*aux_char));
        require(rep.q_dual_embedding.status == FactorStatus::Zero, "dual quotient embedding should vanish");
        rep.q_dual_verdict = FactorStatus::Zero;
    }
    return rep;
}

}  // namespace shalika::jacquet
