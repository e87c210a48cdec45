/*
 * Text grammar for the CLI and the batch modes.
 *
 *   halfint   := INT | INT "/2"
 *   char      := factor ("*" factor)*
 *   factor    := "1" | "nu" ["^" exp] | IDENT ["^" exp-int]
 *   exp       := halfint | "{" halfint "}"
 *   segment   := [char] "[" halfint [".." halfint] "]"
 *   multiseg  := "{" [segment ("," segment)*] "}"
 *   expr      := atom (" x " atom)*
 *   atom      := "(" expr ")" | "Z" multiseg | "L" multiseg
 *              | "char(" INT "," char ")" | "St(" INT "," char ")" | char
 *
 * A character prefix on a segment shifts both offsets by its nu-exponent;
 * "1[..]" and "[..]" both denote the trivial line.  "x" is reserved as the
 * product separator.  Errors carry the byte offset of the failure.
 */

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reps.hpp"

namespace shalika::parse {

using core_arith::CharLabel;
using core_arith::FormalCharacter;
using core_arith::HalfInt;
using reps::ReprExpr;
using segments::Multisegment;
using segments::Segment;

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

class Cursor {
  public:
    explicit Cursor(std::string_view s) : s_(s) {}

    std::size_t pos() const { return pos_; }
    void rewind(std::size_t p) { pos_ = p; }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) error(std::string("expected '") + c + "' in " + what);
    }
    [[noreturn]] void error(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_ident() const {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string read_ident() {
        if (!at_ident()) error("expected identifier");
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    std::int64_t read_int() {
        std::size_t start = pos_;
        bool neg = consume('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            rewind(start);
            error("expected integer");
        }
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline HalfInt read_halfint(Cursor& c) {
    c.skip_ws();
    std::int64_t v = c.read_int();
    if (c.peek() == '/' ) {
        c.consume('/');
        if (!c.consume('2')) c.error("only halves are supported: expected '/2'");
        return core_arith::half(v);
    }
    return HalfInt::whole(v);
}

// Exponent after '^': halfint with optional braces.
inline HalfInt read_exponent(Cursor& c) {
    if (c.consume('{')) {
        HalfInt e = read_halfint(c);
        c.skip_ws();
        c.expect('}', "exponent");
        return e;
    }
    return read_halfint(c);
}

inline FormalCharacter read_character(Cursor& c) {
    FormalCharacter out;
    for (;;) {
        c.skip_ws();
        if (c.peek() == '1' && !std::isdigit(static_cast<unsigned char>(c.peek2()))) {
            c.consume('1');
        } else if (c.at_ident()) {
            std::size_t at = c.pos();
            std::string name = c.read_ident();
            if (name == "x") {
                c.rewind(at);
                c.error("'x' is reserved for products");
            }
            if (name == "nu") {
                HalfInt e = HalfInt::whole(1);
                if (c.consume('^')) e = read_exponent(c);
                out = out * FormalCharacter::nu(e);
            } else {
                std::int64_t k = 1;
                if (c.consume('^')) {
                    HalfInt e = read_exponent(c);
                    if (!e.is_integer()) c.error("label exponents must be integers");
                    k = e.as_integer();
                }
                out = out * FormalCharacter{CharLabel::symbol(name, static_cast<int>(k)), HalfInt{}};
            }
        } else {
            c.error("expected character");
        }
        c.skip_ws();
        if (!c.consume('*')) break;
    }
    return out;
}

inline Segment read_segment(Cursor& c) {
    c.skip_ws();
    FormalCharacter prefix;
    if (c.peek() != '[') prefix = read_character(c);
    c.skip_ws();
    c.expect('[', "segment");
    HalfInt b = read_halfint(c);
    HalfInt e = b;
    c.skip_ws();
    if (!c.consume(']')) {
        c.expect('.', "segment range");
        c.expect('.', "segment range");
        e = read_halfint(c);
        c.skip_ws();
        c.expect(']', "segment");
    }
    b += prefix.exp;
    e += prefix.exp;
    if (!(e - b).is_integer() || b > e) c.error("segment needs e - b a non-negative integer");
    return Segment(prefix.label, b, e);
}

inline Multisegment read_multisegment(Cursor& c) {
    c.skip_ws();
    c.expect('{', "multisegment");
    std::vector<Segment> segs;
    c.skip_ws();
    if (c.consume('}')) return Multisegment(std::move(segs));
    for (;;) {
        segs.push_back(read_segment(c));
        c.skip_ws();
        if (c.consume(',')) continue;
        c.expect('}', "multisegment");
        break;
    }
    return Multisegment(std::move(segs));
}

ReprExpr read_expr(Cursor& c);

inline ReprExpr read_atom(Cursor& c) {
    c.skip_ws();
    if (c.consume('(')) {
        ReprExpr e = read_expr(c);
        c.skip_ws();
        c.expect(')', "parenthesized expression");
        return e;
    }
    if (c.at_ident()) {
        std::size_t at = c.pos();
        std::string head = c.read_ident();
        if (head == "Z" && c.peek() == '{') return ReprExpr(reps::ZRep{read_multisegment(c)});
        if (head == "L" && c.peek() == '{') return ReprExpr(reps::LRep{read_multisegment(c)});
        if ((head == "char" || head == "St") && c.peek() == '(') {
            c.consume('(');
            c.skip_ws();
            std::int64_t r = c.read_int();
            if (r < 1) c.error("rank must be >= 1");
            c.skip_ws();
            c.expect(',', head == "char" ? "char(r,chi)" : "St(r,chi)");
            FormalCharacter chi = read_character(c);
            c.skip_ws();
            c.expect(')', head == "char" ? "char(r,chi)" : "St(r,chi)");
            return head == "char" ? reps::character(r, chi) : reps::steinberg(r, chi);
        }
        c.rewind(at);
    }
    return reps::character(1, read_character(c));
}

inline ReprExpr read_expr(Cursor& c) {
    std::vector<ReprExpr> fs{read_atom(c)};
    for (;;) {
        std::size_t at = c.pos();
        c.skip_ws();
        if (!c.at_ident()) {
            c.rewind(at);
            break;
        }
        if (c.read_ident() != "x") {
            c.rewind(at);
            break;
        }
        fs.push_back(read_atom(c));
    }
    if (fs.size() == 1) return fs[0];
    return reps::product(std::move(fs));
}

template <typename T, typename F>
T parse_all(std::string_view s, F&& f) {
    Cursor c(s);
    T v = f(c);
    c.skip_ws();
    if (!c.eof()) c.error("trailing input");
    return v;
}

inline HalfInt halfint(std::string_view s) {
    return parse_all<HalfInt>(s, [](Cursor& c) { return read_halfint(c); });
}
inline FormalCharacter character(std::string_view s) {
    return parse_all<FormalCharacter>(s, [](Cursor& c) { return read_character(c); });
}
inline Segment segment(std::string_view s) {
    return parse_all<Segment>(s, [](Cursor& c) { return read_segment(c); });
}
inline Multisegment multisegment(std::string_view s) {
    return parse_all<Multisegment>(s, [](Cursor& c) { return read_multisegment(c); });
}
inline ReprExpr expr(std::string_view s) {
    return parse_all<ReprExpr>(s, [](Cursor& c) { return read_expr(c); });
}

}  // namespace shalika::parse
