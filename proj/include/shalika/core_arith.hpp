/*
 * Exact scalar layer: half-integers and formal unramified twists.
 *
 * Everything downstream (segments, duals, pole profiles) is exact; no
 * floating point is allowed anywhere in this tree.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace shalika::core_arith {

// Element of (1/2)Z, stored as twice its value.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.t_ = t;
        return h;
    }
    static constexpr HalfInt whole(std::int64_t v) { return from_twice(2 * v); }

    constexpr std::int64_t twice() const { return t_; }
    constexpr bool is_integer() const { return t_ % 2 == 0; }
    constexpr bool is_zero() const { return t_ == 0; }
    // Valid only when is_integer().
    constexpr std::int64_t as_integer() const { return t_ / 2; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.t_ + b.t_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.t_ - b.t_); }
    constexpr HalfInt operator-() const { return from_twice(-t_); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_twice(k * a.t_); }
    HalfInt& operator+=(HalfInt o) {
        t_ += o.t_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        t_ -= o.t_;
        return *this;
    }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (t_ % 2 == 0) return std::to_string(t_ / 2);
        return std::to_string(t_) + "/2";
    }

  private:
    std::int64_t t_ = 0;
};

inline constexpr HalfInt half(std::int64_t numerator) { return HalfInt::from_twice(numerator); }

// Free abelian group on formal symbols: the ramified part of a character.
// Trivial = empty map; zero exponents are pruned eagerly so that equality
// of the underlying maps is equality in the group.
class CharLabel {
  public:
    CharLabel() = default;
    static CharLabel symbol(const std::string& name, int exponent = 1) {
        CharLabel l;
        if (exponent != 0) l.exp_[name] = exponent;
        return l;
    }

    bool is_trivial() const { return exp_.empty(); }

    CharLabel operator*(const CharLabel& o) const {
        CharLabel out = *this;
        for (const auto& [name, e] : o.exp_) {
            int v = (out.exp_[name] += e);
            if (v == 0) out.exp_.erase(name);
        }
        return out;
    }
    CharLabel inverse() const {
        CharLabel out;
        for (const auto& [name, e] : exp_) out.exp_[name] = -e;
        return out;
    }
    CharLabel pow(std::int64_t k) const {
        CharLabel out;
        if (k == 0) return out;
        for (const auto& [name, e] : exp_) out.exp_[name] = static_cast<int>(k * e);
        return out;
    }

    friend bool operator==(const CharLabel&, const CharLabel&) = default;
    friend auto operator<=>(const CharLabel& a, const CharLabel& b) { return a.exp_ <=> b.exp_; }

    const std::map<std::string, int>& exponents() const { return exp_; }

    std::string str() const {
        if (exp_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [name, e] : exp_) {
            if (!first) os << "*";
            first = false;
            os << name;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

  private:
    std::map<std::string, int> exp_;
};

// chi * nu^exp with chi a CharLabel: one unramified twist away from a label.
struct FormalCharacter {
    CharLabel label;
    HalfInt exp;

    FormalCharacter() = default;
    FormalCharacter(CharLabel l, HalfInt e) : label(std::move(l)), exp(e) {}
    static FormalCharacter trivial() { return {}; }
    static FormalCharacter nu(HalfInt e) { return {CharLabel{}, e}; }

    bool is_trivial() const { return label.is_trivial() && exp.is_zero(); }

    FormalCharacter operator*(const FormalCharacter& o) const {
        return {label * o.label, exp + o.exp};
    }
    FormalCharacter inverse() const { return {label.inverse(), -exp}; }
    FormalCharacter pow(std::int64_t k) const { return {label.pow(k), k * exp}; }
    FormalCharacter twist(HalfInt e) const { return {label, exp + e}; }

    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
    friend auto operator<=>(const FormalCharacter& a, const FormalCharacter& b) {
        if (auto c = a.label <=> b.label; c != 0) return c;
        return a.exp <=> b.exp;
    }

    std::string str() const {
        if (is_trivial()) return "1";
        std::string nu_part;
        if (!exp.is_zero()) nu_part = "nu^{" + exp.str() + "}";
        if (label.is_trivial()) return nu_part;
        if (nu_part.empty()) return label.str();
        return label.str() + "*" + nu_part;
    }
};

[[noreturn]] inline void fail(const std::string& what) { throw std::domain_error(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

}  // namespace shalika::core_arith
