/*
 * Langlands parameters by Speh blocks, tensor/adjoint pole profiles, and
 * the non-vanishing predicate.
 *
 * A parameter is a multiset of blocks Sp(a) (x) chi nu^t.  The L-factor of
 * a block contributes one candidate pole on the unramified line, at
 * s_0 = -(t + (a-1)/2); ramified blocks (nontrivial label) contribute no
 * pole there and are only counted.  The adjoint profile of pi is the
 * profile of pi (x) pi^vee.  The predicate: the twisted Jacquet module of
 * the G_{2n} representation is predicted to vanish exactly when
 * ord_{s=s_0}(adjoint) >= n + 1 - s_0 for every integer s_0 in [1, n].
 */

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reps.hpp"

namespace shalika::lfun {

using core_arith::FormalCharacter;
using core_arith::HalfInt;
using core_arith::half;
using core_arith::require;
using reps::ReprExpr;
using segments::Multisegment;

struct SpehBlock {
    std::int64_t a;  // Sp(a)
    FormalCharacter c;

    friend bool operator==(const SpehBlock&, const SpehBlock&) = default;
};

using LanglandsParam = std::vector<SpehBlock>;

inline void canonicalize(LanglandsParam& p) {
    std::sort(p.begin(), p.end(), [](const SpehBlock& x, const SpehBlock& y) {
        if (x.a != y.a) return x.a > y.a;
        return x.c < y.c;
    });
}

inline std::int64_t param_rank(const LanglandsParam& p) {
    std::int64_t n = 0;
    for (const auto& b : p) n += b.a;
    return n;
}

inline std::string str(const LanglandsParam& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << " + ";
        os << "Sp(" << p[i].a << ")";
        if (!p[i].c.is_trivial()) os << "(x)" << p[i].c.str();
    }
    return os.str();
}

inline LanglandsParam langlands_param(const ReprExpr& e) {
    return std::visit(
        [&](const auto& v) -> LanglandsParam {
            using T = std::decay_t<decltype(v)>;
            LanglandsParam out;
            if constexpr (std::is_same_v<T, reps::LRep>) {
                for (const auto& s : v.m.segments()) out.push_back({s.length(), {s.label, s.center()}});
            } else if constexpr (std::is_same_v<T, reps::ZRep>) {
                for (const auto& s : zelevinsky::mw_dual(v.m).segments())
                    out.push_back({s.length(), {s.label, s.center()}});
            } else if constexpr (std::is_same_v<T, reps::CharRep>) {
                Multisegment m({reps::character_segment(v.rank, v.chi)});
                for (const auto& s : zelevinsky::mw_dual(m).segments())
                    out.push_back({s.length(), {s.label, s.center()}});
            } else if constexpr (std::is_same_v<T, reps::SteinbergRep>) {
                out.push_back({v.rank, v.chi});
            } else {
                require(reps::irreducible_known(ReprExpr(v)),
                        "Langlands parameter needs a certified-irreducible product");
                for (const auto& f : v.factors) {
                    LanglandsParam fp = langlands_param(f);
                    out.insert(out.end(), fp.begin(), fp.end());
                }
            }
            canonicalize(out);
            return out;
        },
        e.node);
}

inline LanglandsParam dual_param(LanglandsParam p) {
    for (auto& b : p) b.c = b.c.inverse();
    canonicalize(p);
    return p;
}

// Sp(a) (x) Sp(b) = sum_{i=0}^{min(a,b)-1} Sp(a+b-1-2i), labels multiplied.
inline LanglandsParam tensor_param(const LanglandsParam& p, const LanglandsParam& q) {
    LanglandsParam out;
    for (const auto& x : p)
        for (const auto& y : q)
            for (std::int64_t i = 0; i < std::min(x.a, y.a); ++i)
                out.push_back({x.a + y.a - 1 - 2 * i, x.c * y.c});
    canonicalize(out);
    return out;
}

inline bool is_tempered(const LanglandsParam& p) {
    for (const auto& b : p)
        if (!b.c.exp.is_zero()) return false;
    return true;
}

struct PoleProfile {
    std::int64_t s_max = 0;
    std::map<std::int64_t, std::int64_t> orders;  // s -> pole order, integer s in [1, s_max]
    std::vector<HalfInt> off_lattice;             // positive non-integer candidate poles
    std::int64_t ramified_blocks = 0;

    std::int64_t order_at(std::int64_t s) const {
        auto it = orders.find(s);
        return it == orders.end() ? 0 : it->second;
    }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [s, o] : orders) {
            if (!first) os << ", ";
            first = false;
            os << "s=" << s << ": " << o;
        }
        os << "}";
        if (!off_lattice.empty()) {
            os << " off-lattice:";
            for (const auto& s : off_lattice) os << " " << s.str();
        }
        return os.str();
    }
};

inline PoleProfile pole_profile(const LanglandsParam& p, std::int64_t s_max) {
    PoleProfile out;
    out.s_max = s_max;
    for (const auto& b : p) {
        if (!b.c.label.is_trivial()) {
            ++out.ramified_blocks;
            continue;
        }
        HalfInt s0 = -(b.c.exp + half(b.a - 1));
        if (s0 <= half(0)) continue;
        if (!s0.is_integer()) {
            out.off_lattice.push_back(s0);
            continue;
        }
        if (s0.as_integer() <= s_max) ++out.orders[s0.as_integer()];
    }
    return out;
}

inline PoleProfile adjoint_profile(const LanglandsParam& p, std::int64_t s_max) {
    return pole_profile(tensor_param(p, dual_param(p)), s_max);
}

// ord(s) >= n + 1 - s for every s in [1, n].
inline bool predicted_tjm_zero(const PoleProfile& profile, std::int64_t n) {
    require(profile.s_max >= n, "profile was cut off below s = n");
    for (std::int64_t s = 1; s <= n; ++s)
        if (profile.order_at(s) < n + 1 - s) return false;
    return true;
}

struct ConjectureReport {
    std::int64_t n;
    ReprExpr expr;
    LanglandsParam param;
    PoleProfile profile;
    bool tempered;
    bool predicted_zero;
};

inline ConjectureReport conjecture_check(std::int64_t n, const ReprExpr& e) {
    require(reps::rank(e) == 2 * n, "conjecture needs a representation of G_{2n}");
    LanglandsParam p = langlands_param(e);
    PoleProfile prof = adjoint_profile(p, n);
    return {n, e, p, prof, is_tempered(p), predicted_tjm_zero(prof, n)};
}

}  // namespace shalika::lfun
