/*
 * Command line surface.
 *
 * Subcommands: dual, linked, product-irred, tjm, tjm-table, conjecture,
 * cosets, oracle.  Exit codes: 0 success, 1 a checked verdict failed
 * (tjm-table self-check, oracle mismatch, partition check), 2 usage or
 * parse errors.  A single positional "-" on dual, product-irred and
 * conjecture switches to line-batched stdin.  run() is stream-injected so
 * the whole surface is testable in-process.
 */

#pragma once

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ff_oracle.hpp"
#include "jacquet.hpp"
#include "lfun.hpp"
#include "parse.hpp"
#include "presets.hpp"

namespace shalika::cli {

using json = nlohmann::json;
using core_arith::HalfInt;
using jacquet::BlockStatus;
using jacquet::FactorStatus;

inline std::string block_status_str(BlockStatus s) {
    switch (s) {
        case BlockStatus::TrivialGroup: return "trivial-group";
        case BlockStatus::Zero: return "zero";
        case BlockStatus::WhittakerLine: return "whittaker-line";
        case BlockStatus::SymbolicNonZero: return "symbolic-nonzero";
        default: return "unknown";
    }
}

inline std::string twists_str(const std::map<char, HalfInt>& m) {
    if (m.empty()) return "(none)";
    std::string out;
    for (const auto& [b, v] : m) {
        if (!out.empty()) out += " ";
        out += std::string(1, b) + "=" + v.str();
    }
    return out;
}

inline json twists_json(const std::map<char, HalfInt>& m) {
    json j = json::object();
    for (const auto& [b, v] : m) j[std::string(1, b)] = v.str();
    return j;
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

template <typename F>
int for_each_input(const std::string& arg, std::istream& in, F&& f) {
    if (arg != "-") return f(arg);
    std::string line;
    int rc = 0;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        rc = std::max(rc, f(t));
    }
    return rc;
}

inline ff_oracle::RepSpec parse_levi(const std::string& s, std::int64_t rank) {
    auto tag_of = [&](const std::string& t) {
        if (t == "triv") return ff_oracle::BlockTag::Trivial;
        if (t == "st") return ff_oracle::BlockTag::Steinberg;
        if (t == "quad") return ff_oracle::BlockTag::Quadratic;
        core_arith::fail("unknown levi tag '" + t + "' (have: triv, st, quad)");
    };
    ff_oracle::RepSpec out;
    if (s.find(':') == std::string::npos) {
        out.blocks.push_back({rank, tag_of(trim(s))});
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            std::size_t colon = item.find(':');
            core_arith::require(colon != std::string::npos, "levi blocks look like size:tag");
            std::int64_t size = 0;
            try {
                size = std::stoll(item.substr(0, colon));
            } catch (const std::exception&) {
                core_arith::fail("bad levi block size in '" + item + "'");
            }
            out.blocks.push_back({size, tag_of(item.substr(colon + 1))});
        }
    }
    core_arith::require(out.rank() == rank,
                        "levi blocks must sum to " + std::to_string(rank));
    return out;
}

}  // namespace detail

// --- dual ------------------------------------------------------------------

inline int cmd_dual(const std::string& input, bool as_json, bool explain, std::istream& in,
                    std::ostream& out) {
    return detail::for_each_input(input, in, [&](const std::string& s) {
        segments::Multisegment m = parse::multisegment(s);
        zelevinsky::DualTrace trace;
        segments::Multisegment d = zelevinsky::mw_dual(m, &trace);
        core_arith::require(zelevinsky::mw_dual(d) == m, "rewrite dual failed to involute");
        if (as_json) {
            json j{{"input", m.str()}, {"dual", d.str()}};
            if (explain) {
                j["steps"] = json::array();
                for (const auto& st : trace.steps)
                    j["steps"].push_back({{"extracted", st.extracted.str()}, {"residual", st.residual.str()}});
            }
            out << j.dump(2) << "\n";
        } else {
            out << d.str() << "\n";
            if (explain)
                for (const auto& st : trace.steps)
                    out << "  extract " << st.extracted.str() << "  residual " << st.residual.str() << "\n";
        }
        return 0;
    });
}

// --- linked ----------------------------------------------------------------

inline int cmd_linked(const std::string& sa, const std::string& sb, bool as_json, std::ostream& out) {
    segments::Segment a = parse::segment(sa), b = parse::segment(sb);
    bool lk = segments::linked(a, b);
    json j{{"a", a.str()},
           {"b", b.str()},
           {"linked", lk},
           {"precedes_ab", segments::precedes(a, b)},
           {"precedes_ba", segments::precedes(b, a)},
           {"juxtaposed", segments::juxtaposed(a, b)}};
    if (lk) {
        auto ui = segments::union_intersect(a, b);
        j["union"] = ui.uni.str();
        if (ui.inter) j["intersection"] = ui.inter->str();
    }
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "linked:      " << (lk ? "yes" : "no") << "\n";
        out << "precedes:    a<b " << (j["precedes_ab"].get<bool>() ? "yes" : "no") << ", b<a "
            << (j["precedes_ba"].get<bool>() ? "yes" : "no") << "\n";
        out << "juxtaposed:  " << (j["juxtaposed"].get<bool>() ? "yes" : "no") << "\n";
        if (lk) {
            out << "union:       " << j["union"].get<std::string>() << "\n";
            if (j.count("intersection"))
                out << "intersection " << j["intersection"].get<std::string>() << "\n";
            else
                out << "intersection (empty)\n";
        }
    }
    return 0;
}

// --- product-irred ---------------------------------------------------------

inline int cmd_product_irred(const std::string& input, const std::string& kind, bool as_json,
                             std::istream& in, std::ostream& out) {
    reps::SegKind sk = kind == "l" ? reps::SegKind::L : reps::SegKind::Z;
    return detail::for_each_input(input, in, [&](const std::string& s) {
        segments::Multisegment m = parse::multisegment(s);
        auto res = reps::product_irreducible(m.segments(), sk);
        if (as_json) {
            json pairs = json::array();
            for (auto [i, j2] : res.linked_pairs) pairs.push_back({i, j2});
            out << json{{"multisegment", m.str()},
                        {"kind", kind},
                        {"irreducible", res.irreducible},
                        {"linked_pairs", pairs}}
                       .dump(2)
                << "\n";
        } else {
            out << (res.irreducible ? "irreducible" : "reducible") << "\n";
            for (auto [i, j2] : res.linked_pairs)
                out << "  linked: " << m[i].str() << " ~ " << m[j2].str() << "\n";
        }
        return 0;
    });
}

// --- tjm -------------------------------------------------------------------

inline json factor_json(const jacquet::Factor& f, bool explain) {
    json j{{"k", f.desc.k},
           {"side1",
            {{"shape", f.desc.side1.str()},
             {"status", block_status_str(f.left.status)},
             {"rule", f.left.rule}}},
           {"side2",
            {{"shape", f.desc.side2.str()},
             {"status", block_status_str(f.right.status)},
             {"rule", f.right.rule}}},
           {"status", jacquet::status_str(f.status)},
           {"net_twist", twists_json(f.desc.twists.net)}};
    if (explain) {
        j["twist_sources"] = {{"local_norm", twists_json(f.desc.twists.local_norm)},
                              {"conjugated_half_delta", twists_json(f.desc.twists.conjugated_half_delta)},
                              {"stabilizer_delta", twists_json(f.desc.twists.stabilizer_delta)}};
    }
    if (f.tensor) j["tensor"] = reps::str(f.tensor->first) + " (x) " + reps::str(f.tensor->second);
    if (f.module) j["module"] = reps::str(*f.module);
    return j;
}

inline int cmd_tjm(std::int64_t n, std::int64_t r, const std::string& s1, const std::string& s2,
                   bool as_json, bool explain, std::ostream& out) {
    reps::ReprExpr e1 = parse::expr(s1), e2 = parse::expr(s2);
    if (r < 0) r = reps::rank(e1);
    auto v = jacquet::tjm_filtration(n, r, e1, e2);
    if (as_json) {
        json j{{"n", n},
               {"r", r},
               {"rho1", reps::str(e1)},
               {"rho2", reps::str(e2)},
               {"status", jacquet::status_str(v.status)},
               {"factors", json::array()}};
        for (const auto& f : v.factors) j["factors"].push_back(factor_json(f, explain));
        if (v.module) j["module"] = reps::str(*v.module);
        out << j.dump(2) << "\n";
    } else {
        out << "pi = " << reps::str(e1) << " x " << reps::str(e2) << "  (G_" << 2 * n << ", r=" << r
            << ")\n";
        for (const auto& f : v.factors) {
            out << "k=" << f.desc.k << ":\n";
            out << "  side1 " << f.desc.side1.str() << ": " << block_status_str(f.left.status) << " ["
                << f.left.rule << "]\n";
            out << "  side2 " << f.desc.side2.str() << ": " << block_status_str(f.right.status) << " ["
                << f.right.rule << "]\n";
            out << "  net twist " << twists_str(f.desc.twists.net) << "\n";
            if (explain) {
                out << "    local norm      " << twists_str(f.desc.twists.local_norm) << "\n";
                out << "    conjugated d^$  " << twists_str(f.desc.twists.conjugated_half_delta) << "\n";
                out << "    stabilizer d    " << twists_str(f.desc.twists.stabilizer_delta) << "\n";
            }
            if (f.tensor)
                out << "  factor " << jacquet::status_str(f.status) << ", " << reps::str(f.tensor->first)
                    << " (x) " << reps::str(f.tensor->second) << "\n";
            else
                out << "  factor " << jacquet::status_str(f.status) << "\n";
            if (f.module) out << "  module " << reps::str(*f.module) << "\n";
        }
        out << "verdict: " << jacquet::status_str(v.status);
        if (v.module) out << ", module " << reps::str(*v.module);
        out << "\n";
    }
    return 0;
}

// --- tjm-table -------------------------------------------------------------

inline int cmd_tjm_table(const std::string& key, bool as_json, std::ostream& out, std::ostream& err) {
    auto rep = presets::analyze_preset(key);
    auto expected = presets::expected_verdicts(key);

    bool ok = rep.rows.size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i)
        ok = rep.rows[i].name == expected[i].first && rep.rows[i].verdict == expected[i].second;

    if (as_json) {
        json rows = json::array();
        for (const auto& row : rep.rows) {
            json j{{"name", row.name},
                   {"expr", reps::str(row.expr)},
                   {"verdict", jacquet::status_str(row.verdict)},
                   {"rule", row.rule}};
            if (row.module) j["module"] = reps::str(*row.module);
            if (row.shalika) j["shalika"] = *row.shalika;
            if (!row.note.empty()) j["note"] = row.note;
            rows.push_back(std::move(j));
        }
        out << json{{"preset", rep.key}, {"ambient", rep.ambient}, {"rows", rows}, {"consistent", ok}}.dump(2)
            << "\n";
    } else {
        out << "preset " << rep.key << ": " << rep.ambient << "\n";
        for (const auto& row : rep.rows) {
            out << "  " << row.name << ": " << jacquet::status_str(row.verdict) << " [" << row.rule << "]";
            if (row.module) out << " module " << reps::str(*row.module);
            if (row.shalika) out << (*row.shalika ? " (Shalika)" : "");
            out << "\n";
        }
    }
    if (!ok) {
        err << "tjm-table: computed verdicts disagree with the expected table\n";
        return 1;
    }
    return 0;
}

// --- conjecture ------------------------------------------------------------

inline int cmd_conjecture(std::int64_t n_opt, const std::string& input, bool as_json, std::istream& in,
                          std::ostream& out) {
    return detail::for_each_input(input, in, [&](const std::string& s) {
        reps::ReprExpr e = parse::expr(s);
        std::int64_t n = n_opt;
        if (n < 0) {
            std::int64_t rk = reps::rank(e);
            core_arith::require(rk % 2 == 0, "representation rank must be even");
            n = rk / 2;
        }
        auto rep = lfun::conjecture_check(n, e);
        if (as_json) {
            json orders = json::object();
            for (const auto& [sv, o] : rep.profile.orders) orders[std::to_string(sv)] = o;
            json off = json::array();
            for (const auto& x : rep.profile.off_lattice) off.push_back(x.str());
            out << json{{"n", n},
                        {"expr", reps::str(e)},
                        {"param", lfun::str(rep.param)},
                        {"orders", orders},
                        {"off_lattice", off},
                        {"ramified_blocks", rep.profile.ramified_blocks},
                        {"tempered", rep.tempered},
                        {"predicted_zero", rep.predicted_zero}}
                       .dump(2)
                << "\n";
        } else {
            out << reps::str(e) << "\n";
            out << "  parameter " << lfun::str(rep.param) << "\n";
            out << "  adjoint poles " << rep.profile.str() << "\n";
            out << "  predicted: " << (rep.predicted_zero ? "zero" : "non-zero") << "\n";
        }
        return 0;
    });
}

// --- cosets ----------------------------------------------------------------

inline int cmd_cosets(std::int64_t n, std::int64_t r, bool matrices, bool partition, bool as_json,
                      std::ostream& out, std::ostream& err) {
    auto kr = doublecosets::krange(n, r);
    auto idx = doublecosets::index_set(n, r);
    bool compose_ok = true;
    for (auto [k, l] : idx) compose_ok = compose_ok && doublecosets::compose_check(n, r, k, l);
    core_arith::require(static_cast<std::int64_t>(idx.size()) == doublecosets::index_count_formula(n, r),
                        "index count disagrees with the closed formula");

    json j{{"n", n},
           {"r", r},
           {"alpha", kr.alpha},
           {"beta", kr.beta},
           {"gamma", kr.gamma},
           {"count", idx.size()},
           {"count_formula", doublecosets::index_count_formula(n, r)},
           {"compose_ok", compose_ok}};
    j["indices"] = json::array();
    for (auto [k, l] : idx) j["indices"].push_back({k, l});

    if (matrices) {
        j["matrices"] = json::array();
        for (auto [k, l] : idx)
            j["matrices"].push_back({{"k", k},
                                     {"l", l},
                                     {"w", doublecosets::w_kl(n, r, k, l).str()},
                                     {"sigma", doublecosets::sigma_kl(n, r, k, l).str()}});
    }

    int rc = 0;
    if (partition) {
        core_arith::require(n == 2, "the brute-force partition is tabulated for n=2 only");
        auto pc = ff_oracle::partition_check(r);
        j["partition"] = {{"cells", pc.cell_count},
                          {"elements", pc.element_total},
                          {"representatives_bijective", pc.representatives_bijective}};
        if (!pc.representatives_bijective) rc = 1;
    }

    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "k range [" << kr.alpha << ", " << kr.beta << "], gamma " << kr.gamma << "\n";
        out << "indices (" << idx.size() << ", formula " << j["count_formula"].get<std::int64_t>()
            << "):";
        for (auto [k, l] : idx) out << " (" << k << "," << l << ")";
        out << "\n";
        out << "compose check: " << (compose_ok ? "ok" : "FAILED") << "\n";
        if (matrices)
            for (auto [k, l] : idx) {
                out << "w_{" << k << "," << l << "}:\n" << doublecosets::w_kl(n, r, k, l).str();
                out << "sigma_{" << k << "," << l << "}:\n" << doublecosets::sigma_kl(n, r, k, l).str();
            }
        if (partition) {
            const auto& p = j["partition"];
            out << "partition: " << p["cells"].get<std::int64_t>() << " cells, "
                << p["elements"].get<std::int64_t>() << " elements, representatives "
                << (p["representatives_bijective"].get<bool>() ? "bijective" : "NOT bijective") << "\n";
        }
    }
    if (!compose_ok) {
        err << "cosets: composition identity failed\n";
        return 1;
    }
    if (rc != 0) err << "cosets: partition representatives are not bijective\n";
    return rc;
}

// --- oracle ----------------------------------------------------------------

inline int cmd_oracle(std::int64_t n, std::int64_t r, std::int64_t p,
                      const std::vector<std::string>& levi, bool as_json, std::ostream& out,
                      std::ostream& err) {
    core_arith::require(levi.size() == 2, "oracle needs exactly two --levi specs");
    auto rho1 = detail::parse_levi(levi[0], r);
    auto rho2 = detail::parse_levi(levi[1], 2 * n - r);
    auto rep = ff_oracle::oracle(n, r, p, rho1, rho2);
    if (as_json) {
        json per_k = json::array();
        for (const auto& t : rep.per_k)
            per_k.push_back({{"k", t.k}, {"index", t.index}, {"d1", t.d1}, {"d2", t.d2}});
        out << json{{"n", rep.n},
                    {"r", rep.r},
                    {"p", rep.p},
                    {"brute", rep.brute},
                    {"formula", rep.formula},
                    {"per_k", per_k},
                    {"match", rep.match}}
                   .dump(2)
            << "\n";
    } else {
        out << "G_" << 2 * n << "(F_" << p << "), r=" << r << "\n";
        for (const auto& t : rep.per_k)
            out << "  k=" << t.k << ": index " << t.index << ", d1 " << t.d1 << ", d2 " << t.d2 << "\n";
        out << "formula " << rep.formula << ", brute " << rep.brute << ": "
            << (rep.match ? "match" : "MISMATCH") << "\n";
    }
    if (!rep.match) {
        err << "oracle: brute-force dimension disagrees with the filtration formula\n";
        return 1;
    }
    return 0;
}

// --- driver ----------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    CLI::App app{"exact twisted Jacquet module toolkit for principal series of GL(2n)"};
    app.require_subcommand(1);

    std::string dual_input, linked_a, linked_b, pi_input, pi_kind = "z";
    std::string tjm_rho1, tjm_rho2, table_key, conj_input;
    std::vector<std::string> levi;
    std::int64_t tjm_n = 0, tjm_r = -1, conj_n = -1, cos_n = 0, cos_r = 0;
    std::int64_t or_n = 0, or_r = 0, or_p = 2;
    bool j_dual = false, j_linked = false, j_pi = false, j_tjm = false, j_table = false;
    bool j_conj = false, j_cos = false, j_or = false;
    bool x_dual = false, x_tjm = false, cos_matrices = false, cos_partition = false;

    auto* dual = app.add_subcommand("dual", "rewrite dual of a multisegment");
    dual->add_option("multisegment", dual_input, "multisegment, or - for stdin lines")->required();
    dual->add_flag("--json", j_dual, "emit JSON");
    dual->add_flag("--explain", x_dual, "show extraction steps");

    auto* lnk = app.add_subcommand("linked", "compare two segments");
    lnk->add_option("a", linked_a, "first segment")->required();
    lnk->add_option("b", linked_b, "second segment")->required();
    lnk->add_flag("--json", j_linked, "emit JSON");

    auto* pi = app.add_subcommand("product-irred", "irreducibility of a segment product");
    pi->add_option("multisegment", pi_input, "multisegment, or - for stdin lines")->required();
    pi->add_option("--kind", pi_kind, "z or l constituents")->check(CLI::IsMember({"z", "l"}));
    pi->add_flag("--json", j_pi, "emit JSON");

    auto* tjm = app.add_subcommand("tjm", "twisted Jacquet module of rho1 x rho2");
    tjm->add_option("--n", tjm_n, "half the ambient rank")->required();
    tjm->add_option("--r", tjm_r, "rank of the first factor (default: rank of rho1)");
    tjm->add_option("rho1", tjm_rho1, "first inducing representation")->required();
    tjm->add_option("rho2", tjm_rho2, "second inducing representation")->required();
    tjm->add_flag("--json", j_tjm, "emit JSON");
    tjm->add_flag("--explain", x_tjm, "show twist sources per factor");

    auto* table = app.add_subcommand("tjm-table", "verdict table for a built-in worked example");
    table->add_option("preset", table_key, "xi or sigma")->required()->check(CLI::IsMember({"xi", "sigma"}));
    table->add_flag("--json", j_table, "emit JSON");

    auto* conj = app.add_subcommand("conjecture", "adjoint pole profile and predicted vanishing");
    conj->add_option("expr", conj_input, "representation expression, or - for stdin lines")->required();
    conj->add_option("--n", conj_n, "half the ambient rank (default: rank/2)");
    conj->add_flag("--json", j_conj, "emit JSON");

    auto* cos = app.add_subcommand("cosets", "double coset indices and representatives");
    cos->add_option("--n", cos_n, "half the ambient rank")->required();
    cos->add_option("--r", cos_r, "parabolic split")->required();
    cos->add_flag("--matrices", cos_matrices, "print representative matrices");
    cos->add_flag("--partition", cos_partition, "brute-force the partition over F_2 (n=2)");
    cos->add_flag("--json", j_cos, "emit JSON");

    auto* orc = app.add_subcommand("oracle", "finite field dimension check");
    orc->add_option("--n", or_n, "half the ambient rank")->required();
    orc->add_option("--r", or_r, "parabolic split")->required();
    orc->add_option("--p", or_p, "field size (2 or 3)");
    orc->add_option("--levi", levi, "levi character spec, twice (triv|st|quad or size:tag,...)");
    orc->add_flag("--json", j_or, "emit JSON");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(dual)) return cmd_dual(dual_input, j_dual, x_dual, in, out);
        if (app.got_subcommand(lnk)) return cmd_linked(linked_a, linked_b, j_linked, out);
        if (app.got_subcommand(pi)) return cmd_product_irred(pi_input, pi_kind, j_pi, in, out);
        if (app.got_subcommand(tjm)) return cmd_tjm(tjm_n, tjm_r, tjm_rho1, tjm_rho2, j_tjm, x_tjm, out);
        if (app.got_subcommand(table)) return cmd_tjm_table(table_key, j_table, out, err);
        if (app.got_subcommand(conj)) return cmd_conjecture(conj_n, conj_input, j_conj, in, out);
        if (app.got_subcommand(cos))
            return cmd_cosets(cos_n, cos_r, cos_matrices, cos_partition, j_cos, out, err);
        if (app.got_subcommand(orc)) return cmd_oracle(or_n, or_r, or_p, levi, j_or, out, err);
    } catch (const parse::ParseError& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace shalika::cli
