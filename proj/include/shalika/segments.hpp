/*
 * Segments [chi nu^b, ..., chi nu^e] and multisegments.
 *
 * A segment is a run of characters on one cuspidal line chi * nu^Z with
 * consecutive integer steps; b and e may be half-integers but e - b is a
 * non-negative integer.  Multisegments are kept in canonical order:
 * grouped by label, then descending by (b, e).
 */

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "core_arith.hpp"

namespace shalika::segments {

using core_arith::CharLabel;
using core_arith::FormalCharacter;
using core_arith::HalfInt;
using core_arith::require;

struct Segment {
    CharLabel label;
    HalfInt b, e;

    Segment(CharLabel l, HalfInt b_, HalfInt e_) : label(std::move(l)), b(b_), e(e_) {
        require((e - b).is_integer() && b <= e, "segment needs e - b a non-negative integer");
    }
    Segment(HalfInt b_, HalfInt e_) : Segment(CharLabel{}, b_, e_) {}

    std::int64_t length() const { return (e - b).as_integer() + 1; }
    FormalCharacter first() const { return {label, b}; }
    FormalCharacter last() const { return {label, e}; }
    // Central exponent times 2 stays integral even for even-length segments.
    HalfInt center() const { return core_arith::half((b + e).twice() / 2); }

    Segment shifted(HalfInt t) const { return Segment(label, b + t, e + t); }

    friend bool operator==(const Segment&, const Segment&) = default;

    std::string str() const {
        std::string body = (b == e) ? "[" + b.str() + "]" : "[" + b.str() + ".." + e.str() + "]";
        return label.str() == "1" ? body : label.str() + body;
    }
};

// Same cuspidal line: equal labels and integral offset.
inline bool same_line(const Segment& a, const Segment& b) {
    return a.label == b.label && (a.b - b.b).is_integer();
}

inline bool contains(const Segment& a, const Segment& b) {
    return same_line(a, b) && a.b <= b.b && b.e <= a.e;
}

// Linked: union is a segment and neither contains the other.
inline bool linked(const Segment& a, const Segment& b) {
    if (!same_line(a, b)) return false;
    if (contains(a, b) || contains(b, a)) return false;
    return std::max(a.b, b.b) <= std::min(a.e, b.e) + HalfInt::whole(1);
}

inline bool precedes(const Segment& a, const Segment& b) { return linked(a, b) && a.b < b.b; }

// Linked with empty intersection.
inline bool juxtaposed(const Segment& a, const Segment& b) {
    return linked(a, b) && std::max(a.b, b.b) > std::min(a.e, b.e);
}

struct UnionIntersection {
    Segment uni;
    std::optional<Segment> inter;  // empty when the segments are juxtaposed
};

inline UnionIntersection union_intersect(const Segment& a, const Segment& b) {
    require(linked(a, b), "union_intersect needs linked segments");
    UnionIntersection out{Segment(a.label, std::min(a.b, b.b), std::max(a.e, b.e)), std::nullopt};
    if (std::max(a.b, b.b) <= std::min(a.e, b.e))
        out.inter = Segment(a.label, std::max(a.b, b.b), std::min(a.e, b.e));
    return out;
}

// Canonical order: by label, then b descending, then e descending.
inline bool canonical_less(const Segment& x, const Segment& y) {
    if (auto c = x.label <=> y.label; c != 0) return c < 0;
    if (x.b != y.b) return x.b > y.b;
    return x.e > y.e;
}

class Multisegment {
  public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        std::stable_sort(segs_.begin(), segs_.end(), canonical_less);
    }

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }
    const Segment& operator[](std::size_t i) const { return segs_[i]; }

    // Sum of lengths: the rank of the group the attached representation lives on.
    std::int64_t rank() const {
        std::int64_t n = 0;
        for (const auto& s : segs_) n += s.length();
        return n;
    }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (i) out += ",";
            out += segs_[i].str();
        }
        return out + "}";
    }

  private:
    std::vector<Segment> segs_;
};

}  // namespace shalika::segments
