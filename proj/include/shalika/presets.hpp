/*
 * The two worked principal-series decompositions shipped with the tool.
 *
 * Preset "xi": n = 2, xi = nu^{3/2} x nu^{1/2} x nu^{-1/2} x nu^{-3/2}
 * (eight subquotients).  Preset "sigma": n = 2, sigma = nu x 1 x 1 x
 * nu^{-1} (five rows; the full induced representation is reducible but the
 * rows listed are the natural intermediate inductions).  Every verdict is
 * recomputed from the filtration engine and the exact-sequence analyses;
 * nothing in this file is a stored answer except the row names and the
 * expected-verdict table the CLI checks itself against.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacquet.hpp"

namespace shalika::presets {

using core_arith::FormalCharacter;
using core_arith::HalfInt;
using core_arith::half;
using core_arith::require;
using jacquet::FactorStatus;
using reps::ReprExpr;
using segments::Multisegment;
using segments::Segment;

struct PresetRow {
    std::string name;
    ReprExpr expr;  // the subquotient, by its Zelevinsky or Langlands data
    FactorStatus verdict;
    std::string rule;
    std::optional<ReprExpr> module{};  // resolved diagonal module, when known
    std::optional<bool> shalika{};     // only meaningful for the L-family rows
    std::string note{};
};

struct PresetReport {
    std::string key;
    std::int64_t n;
    std::string ambient;
    std::vector<PresetRow> rows;
};

// nu^{t/2}; the argument is twice the exponent.
inline FormalCharacter nu_half(std::int64_t twice_exp) { return FormalCharacter::nu(half(twice_exp)); }

inline PresetReport preset_xi() {
    PresetReport out{"xi", 2, "nu^{3/2} x nu^{1/2} x nu^{-1/2} x nu^{-3/2}", {}};
    FormalCharacter triv = FormalCharacter::trivial();

    // 1_4: one-dimensional.
    out.rows.push_back({"1_4", reps::character(4, triv),
                        jacquet::one_dimensional_verdict(reps::character(4, triv)), "one-dimensional"});

    // L_{nu^{-1},2} = Z({[1/2..3/2],[-3/2..-1/2]}).
    auto lf = jacquet::analyze_L_family(2, 2, nu_half(-2));
    out.rows.push_back({"L_{nu^{-1},2}", lf.l_expr, FactorStatus::NonZero, lf.note, lf.tjm_diag,
                        lf.shalika,
                        "module " + lf.tjm_pair.first.str() + " (x) " + lf.tjm_pair.second.str()});

    // Subquotients of St_2 nu x nu^{-1} o det and the contragredient pair.
    auto sb = jacquet::analyze_steinberg_char(2, 2, nu_half(2));

    // tau = L({[1/2..3/2],[-3/2..-1/2]}): trade it against the other three
    // constituents of zeta = 1_2 x (nu^{3/2} x nu^{-3/2}), whose module the
    // engine resolves directly.
    ReprExpr tau(reps::LRep{Multisegment({Segment(half(1), half(3)), Segment(half(-3), half(-1))})});
    auto zeta = jacquet::tjm_filtration(
        2, 2, reps::character(2, triv),
        reps::product({reps::character(1, nu_half(3)), reps::character(1, nu_half(-3))}));
    require(zeta.status == FactorStatus::NonZero && zeta.module.has_value(),
            "zeta should resolve to its k = 0 module");
    require(sb.q_verdict == FactorStatus::Zero && sb.q_dual_verdict == FactorStatus::Zero,
            "exchange needs both Q rows to vanish");
    require(reps::irreducible_known(*zeta.module), "exchange needs an irreducible module");
    out.rows.push_back({"tau", tau, FactorStatus::NonZero, "constituent-exchange", zeta.module,
                        std::nullopt, "via 1_2 x (nu^{3/2} x nu^{-3/2})"});

    out.rows.push_back({"Q_{nu,2}", *sb.q_expr, sb.q_verdict, sb.note});
    out.rows.push_back(
        {"Q_{nu,2}^vee", reps::contragredient(*sb.q_expr), sb.q_dual_verdict, "dual-subquotients"});
    out.rows.push_back({"Z_{nu,2}", *sb.z_expr, sb.z_verdict, sb.note, sb.full.module, std::nullopt,
                        "module " + reps::str(sb.z_tensor->first) + " (x) " + reps::str(sb.z_tensor->second)});
    out.rows.push_back({"Z_{nu,2}^vee", reps::contragredient(*sb.z_expr), sb.z_dual_verdict,
                        "dual-subquotients", sb.full_dual.module, std::nullopt,
                        "module " + reps::str(sb.z_dual_tensor->first) + " (x) " +
                            reps::str(sb.z_dual_tensor->second)});

    // St_4: St_2 nu x St_2 nu^{-1} has composition series {St_4, tau}; its
    // filtration carries two non-vanishing factors while tau's module is
    // irreducible, so St_4 must contribute.
    auto sq = jacquet::tjm_filtration(2, 2, reps::steinberg(2, nu_half(2)), reps::steinberg(2, nu_half(-2)));
    require(sq.factors.size() == 2 && sq.factors[0].status == FactorStatus::NonZero &&
                sq.factors[1].status == FactorStatus::NonZero,
            "square product should have two surviving factors");
    out.rows.push_back({"St_4", reps::steinberg(4, triv), FactorStatus::NonZero, "square-gluing",
                        std::nullopt, std::nullopt, "via St(2,nu) x St(2,nu^{-1})"});
    return out;
}

inline PresetReport preset_sigma() {
    PresetReport out{"sigma", 2, "nu x 1 x 1 x nu^{-1}", {}};
    FormalCharacter triv = FormalCharacter::trivial();

    {
        auto run = jacquet::tjm_filtration(2, 3, reps::character(3, triv), reps::character(1, triv));
        out.rows.push_back({"1_3 x 1",
                            reps::product({reps::character(3, triv), reps::character(1, triv)}),
                            run.status, "two-character-vanishing"});
    }
    {
        auto run = jacquet::tjm_filtration(2, 2, reps::steinberg(2, nu_half(1)), reps::character(2, nu_half(-1)));
        ReprExpr e = reps::product({reps::steinberg(2, nu_half(1)), reps::character(2, nu_half(-1))});
        require(reps::irreducible_known(e), "mixed pair should be irreducible");
        out.rows.push_back({"St_2 nu^{1/2} x 1_2 nu^{-1/2}", e, run.status, "equal-case", run.module,
                            std::nullopt, "irreducible mixed pair"});
    }
    {
        auto run = jacquet::tjm_filtration(2, 2, reps::character(2, nu_half(1)), reps::steinberg(2, nu_half(-1)));
        ReprExpr e = reps::product({reps::character(2, nu_half(1)), reps::steinberg(2, nu_half(-1))});
        require(reps::irreducible_known(e), "mixed pair should be irreducible");
        out.rows.push_back({"1_2 nu^{1/2} x St_2 nu^{-1/2}", e, run.status, "equal-case", run.module,
                            std::nullopt, "irreducible mixed pair"});
    }
    {
        auto lf = jacquet::analyze_L_family(2, 1, nu_half(-1));
        out.rows.push_back({"L_{nu^{-1/2},1}", lf.l_expr, FactorStatus::NonZero, lf.note, lf.tjm_diag,
                            lf.shalika,
                            "module " + lf.tjm_pair.first.str() + " (x) " + lf.tjm_pair.second.str()});
    }
    {
        auto run = jacquet::tjm_filtration(2, 3, reps::steinberg(3, triv), reps::character(1, triv));
        out.rows.push_back({"St_3 x 1",
                            reps::product({reps::steinberg(3, triv), reps::character(1, triv)}),
                            run.status, "generic-n-plus-1"});
    }
    return out;
}

inline PresetReport analyze_preset(const std::string& key) {
    if (key == "xi") return preset_xi();
    if (key == "sigma") return preset_sigma();
    core_arith::fail("unknown preset (have: xi, sigma)");
}

// What the table must say; the CLI re-derives every row and then checks
// itself against this list.
inline std::vector<std::pair<std::string, FactorStatus>> expected_verdicts(const std::string& key) {
    using FS = FactorStatus;
    if (key == "xi")
        return {{"1_4", FS::Zero},          {"L_{nu^{-1},2}", FS::NonZero},
                {"tau", FS::NonZero},       {"Q_{nu,2}", FS::Zero},
                {"Q_{nu,2}^vee", FS::Zero}, {"Z_{nu,2}", FS::NonZero},
                {"Z_{nu,2}^vee", FS::NonZero}, {"St_4", FS::NonZero}};
    if (key == "sigma")
        return {{"1_3 x 1", FS::Zero},
                {"St_2 nu^{1/2} x 1_2 nu^{-1/2}", FS::NonZero},
                {"1_2 nu^{1/2} x St_2 nu^{-1/2}", FS::NonZero},
                {"L_{nu^{-1/2},1}", FS::NonZero},
                {"St_3 x 1", FS::NonZero}};
    core_arith::fail("unknown preset (have: xi, sigma)");
}

}  // namespace shalika::presets
