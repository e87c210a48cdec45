/*
 * Expression trees for the representations the toolkit manipulates.
 *
 * Atoms: Z(m) (Zelevinsky form), L(m) (Langlands form), one-dimensional
 * characters chi o det of G_r, twisted Steinbergs St_r chi.  Products mean
 * normalized parabolic induction from the corresponding standard Levi.
 * Everything is symbolic; the only questions asked of an expression are
 * structural (rank, class membership, central character, known
 * irreducibility).
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "segments.hpp"
#include "zelevinsky.hpp"

namespace shalika::reps {

using core_arith::CharLabel;
using core_arith::FormalCharacter;
using core_arith::HalfInt;
using core_arith::require;
using segments::Multisegment;
using segments::Segment;

struct ReprExpr;

struct ZRep {
    Multisegment m;
};
struct LRep {
    Multisegment m;
};
struct CharRep {
    std::int64_t rank;
    FormalCharacter chi;
};
struct SteinbergRep {
    std::int64_t rank;
    FormalCharacter chi;
};
struct Product {
    std::vector<ReprExpr> factors;
};

struct ReprExpr {
    std::variant<ZRep, LRep, CharRep, SteinbergRep, Product> node;

    ReprExpr(ZRep v) : node(std::move(v)) {}
    ReprExpr(LRep v) : node(std::move(v)) {}
    ReprExpr(CharRep v) : node(std::move(v)) { require(v.rank >= 1, "character rank >= 1"); }
    ReprExpr(SteinbergRep v) : node(std::move(v)) { require(v.rank >= 1, "Steinberg rank >= 1"); }
    ReprExpr(Product v) : node(std::move(v)) { require(!std::get<Product>(node).factors.empty(), "empty product"); }
};

inline ReprExpr character(std::int64_t rank, FormalCharacter chi) { return ReprExpr(CharRep{rank, std::move(chi)}); }
inline ReprExpr steinberg(std::int64_t rank, FormalCharacter chi) { return ReprExpr(SteinbergRep{rank, std::move(chi)}); }
inline ReprExpr product(std::vector<ReprExpr> fs) { return ReprExpr(Product{std::move(fs)}); }

inline std::int64_t rank(const ReprExpr& e) {
    return std::visit(
        [](const auto& v) -> std::int64_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZRep> || std::is_same_v<T, LRep>) return v.m.rank();
            else if constexpr (std::is_same_v<T, Product>) {
                std::int64_t n = 0;
                for (const auto& f : v.factors) n += rank(f);
                return n;
            } else
                return v.rank;
        },
        e.node);
}

// Leaf factors of nested products, left to right.
inline void flatten_into(const ReprExpr& e, std::vector<ReprExpr>& out) {
    if (const auto* p = std::get_if<Product>(&e.node)) {
        for (const auto& f : p->factors) flatten_into(f, out);
    } else {
        out.push_back(e);
    }
}
inline std::vector<ReprExpr> flatten(const ReprExpr& e) {
    std::vector<ReprExpr> out;
    flatten_into(e, out);
    return out;
}

// The segment Delta with Z(Delta) = chi o det on G_r.
inline Segment character_segment(std::int64_t r, const FormalCharacter& chi) {
    return Segment(chi.label, chi.exp - core_arith::half(r - 1), chi.exp + core_arith::half(r - 1));
}

// Non-null iff the expression is one-dimensional; value is the character.
inline std::optional<FormalCharacter> as_character(const ReprExpr& e) {
    if (const auto* c = std::get_if<CharRep>(&e.node)) return c->chi;
    if (const auto* s = std::get_if<SteinbergRep>(&e.node)) {
        if (s->rank == 1) return s->chi;
        return std::nullopt;
    }
    if (const auto* z = std::get_if<ZRep>(&e.node)) {
        if (z->m.size() == 1) return FormalCharacter{z->m[0].label, z->m[0].center()};
        return std::nullopt;
    }
    if (const auto* l = std::get_if<LRep>(&e.node)) {
        if (l->m.size() == 1 && l->m[0].length() == 1) return l->m[0].first();
        return std::nullopt;
    }
    const auto& p = std::get<Product>(e.node);
    if (p.factors.size() == 1) return as_character(p.factors[0]);
    return std::nullopt;
}

// Z(Delta) form: a character of some G_r seen through its segment.
inline std::optional<Segment> as_z_segment(const ReprExpr& e) {
    if (const auto* c = std::get_if<CharRep>(&e.node)) return character_segment(c->rank, c->chi);
    if (const auto* s = std::get_if<SteinbergRep>(&e.node)) {
        if (s->rank == 1) return character_segment(1, s->chi);
        return std::nullopt;
    }
    if (const auto* z = std::get_if<ZRep>(&e.node)) {
        if (z->m.size() == 1) return z->m[0];
        return std::nullopt;
    }
    if (const auto* l = std::get_if<LRep>(&e.node)) {
        if (l->m.size() == 1 && l->m[0].length() == 1) return l->m[0];
        return std::nullopt;
    }
    const auto& p = std::get<Product>(e.node);
    if (p.factors.size() == 1) return as_z_segment(p.factors[0]);
    return std::nullopt;
}

// L(Delta) form: essentially square-integrable.
inline std::optional<Segment> as_l_segment(const ReprExpr& e) {
    if (const auto* s = std::get_if<SteinbergRep>(&e.node)) return character_segment(s->rank, s->chi);
    if (const auto* c = std::get_if<CharRep>(&e.node)) {
        if (c->rank == 1) return character_segment(1, c->chi);
        return std::nullopt;
    }
    if (const auto* l = std::get_if<LRep>(&e.node)) {
        if (l->m.size() == 1) return l->m[0];
        return std::nullopt;
    }
    if (const auto* z = std::get_if<ZRep>(&e.node)) {
        if (z->m.size() == 1 && z->m[0].length() == 1) return z->m[0];
        return std::nullopt;
    }
    const auto& p = std::get<Product>(e.node);
    if (p.factors.size() == 1) return as_l_segment(p.factors[0]);
    return std::nullopt;
}

inline bool is_character(const ReprExpr& e) { return as_character(e).has_value(); }

inline bool is_steinberg_twist(const ReprExpr& e) {
    auto d = as_l_segment(e);
    return d && d->length() >= 2;
}

// Central character: product over the full cuspidal content.
inline FormalCharacter central_character(const ReprExpr& e) {
    return std::visit(
        [](const auto& v) -> FormalCharacter {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZRep> || std::is_same_v<T, LRep>) {
                FormalCharacter out;
                for (const auto& s : v.m.segments()) {
                    // product of chi nu^b ... chi nu^e:
                    //   label^len, nu-exponent len * center.
                    out = out * FormalCharacter{s.label.pow(s.length()), s.length() * s.center()};
                }
                return out;
            } else if constexpr (std::is_same_v<T, Product>) {
                FormalCharacter out;
                for (const auto& f : v.factors) out = out * central_character(f);
                return out;
            } else {
                return v.chi.pow(v.rank);
            }
        },
        e.node);
}

// Generic class: a product of essentially square-integrable factors with
// pairwise unlinked segments (irreducible and generic).
inline bool generic_class(const ReprExpr& e) {
    auto fs = flatten(e);
    std::vector<Segment> deltas;
    for (const auto& f : fs) {
        auto d = as_l_segment(f);
        if (!d) return false;
        deltas.push_back(*d);
    }
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = i + 1; j < deltas.size(); ++j)
            if (segments::linked(deltas[i], deltas[j])) return false;
    return true;
}

// The rank-2 pool the one-variable filtration factors draw from: characters
// of G_2, twisted Steinbergs, and principal series of two rank-1 characters
// (reducible ones included).
inline bool gl2_class(const ReprExpr& e) {
    if (rank(e) != 2) return false;
    if (is_character(e) || is_steinberg_twist(e)) return true;
    auto fs = flatten(e);
    return fs.size() == 2 && rank(fs[0]) == 1 && rank(fs[1]) == 1;
}

enum class SegKind { Z, L };

struct IrredResult {
    bool irreducible;
    std::vector<std::pair<std::size_t, std::size_t>> linked_pairs;
};

// A product of segment representations of one kind is irreducible exactly
// when no two segments are linked; the criterion does not depend on the
// kind, and reordering factors permutes nothing but the pair indices.
inline IrredResult product_irreducible(const std::vector<Segment>& deltas, SegKind) {
    IrredResult out{true, {}};
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = i + 1; j < deltas.size(); ++j)
            if (segments::linked(deltas[i], deltas[j])) {
                out.irreducible = false;
                out.linked_pairs.emplace_back(i, j);
            }
    return out;
}

// True only when irreducibility is certain:
//  - atoms (and one-dimensionals) always;
//  - products that are all Z-kind or all L-kind with pairwise unlinked
//    segments;
//  - a two-factor product of a Z-kind and an L-kind segment rep whose
//    segments are not juxtaposed.
inline bool irreducible_known(const ReprExpr& e) {
    if (!std::holds_alternative<Product>(e.node)) return true;
    auto fs = flatten(e);
    if (fs.size() == 1) return irreducible_known(fs[0]);

    std::vector<std::optional<Segment>> zs, ls;
    for (const auto& f : fs) {
        zs.push_back(as_z_segment(f));
        ls.push_back(as_l_segment(f));
    }
    auto all_unlinked = [&](const std::vector<std::optional<Segment>>& v) {
        std::vector<Segment> deltas;
        for (const auto& d : v) {
            if (!d) return false;
            deltas.push_back(*d);
        }
        return product_irreducible(deltas, SegKind::Z).irreducible;
    };
    if (all_unlinked(zs) || all_unlinked(ls)) return true;
    if (fs.size() == 2) {
        auto mixed = [&](std::size_t i, std::size_t j) {
            return zs[i] && ls[j] && !segments::juxtaposed(*zs[i], *ls[j]);
        };
        if (mixed(0, 1) || mixed(1, 0)) return true;
    }
    return false;
}

// Smooth dual, factor order reversed.
inline ReprExpr contragredient(const ReprExpr& e) {
    auto dual_m = [](const Multisegment& m) {
        std::vector<Segment> out;
        for (const auto& s : m.segments()) out.emplace_back(s.label.inverse(), -s.e, -s.b);
        return Multisegment(std::move(out));
    };
    return std::visit(
        [&](const auto& v) -> ReprExpr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZRep>) return ReprExpr(ZRep{dual_m(v.m)});
            else if constexpr (std::is_same_v<T, LRep>) return ReprExpr(LRep{dual_m(v.m)});
            else if constexpr (std::is_same_v<T, CharRep>) return character(v.rank, v.chi.inverse());
            else if constexpr (std::is_same_v<T, SteinbergRep>) return steinberg(v.rank, v.chi.inverse());
            else {
                std::vector<ReprExpr> fs;
                for (auto it = v.factors.rbegin(); it != v.factors.rend(); ++it)
                    fs.push_back(contragredient(*it));
                return product(std::move(fs));
            }
        },
        e.node);
}

inline std::string str(const ReprExpr& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZRep>) return "Z" + v.m.str();
            else if constexpr (std::is_same_v<T, LRep>) return "L" + v.m.str();
            else if constexpr (std::is_same_v<T, CharRep>) {
                if (v.rank == 1) return v.chi.str();
                return "char(" + std::to_string(v.rank) + "," + v.chi.str() + ")";
            } else if constexpr (std::is_same_v<T, SteinbergRep>) {
                return "St(" + std::to_string(v.rank) + "," + v.chi.str() + ")";
            } else {
                std::string out;
                for (std::size_t i = 0; i < v.factors.size(); ++i) {
                    if (i) out += " x ";
                    bool paren = std::holds_alternative<Product>(v.factors[i].node);
                    out += paren ? "(" + str(v.factors[i]) + ")" : str(v.factors[i]);
                }
                return out;
            }
        },
        e.node);
}

struct ReprClass {
    bool character = false;
    bool steinberg_twist = false;
    bool generic = false;
    bool gl2 = false;
    bool irreducible_certain = false;
};

inline ReprClass classify(const ReprExpr& e) {
    return {is_character(e), is_steinberg_twist(e), generic_class(e), gl2_class(e), irreducible_known(e)};
}

}  // namespace shalika::reps
