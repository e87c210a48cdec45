/*
 * The involution on multisegments by the descent-chain rewrite.
 *
 * One extraction step on a single cuspidal line: let d be the largest end;
 * walk down d, d-1, ... choosing at each end the segment with the largest
 * begin strictly below the previously chosen begin; the ends of the chain
 * form the extracted segment [d-r .. d]; chain members lose their last
 * element.  Iterating to exhaustion and collecting the extracted segments
 * gives the dual multisegment.  Applied per line, this is an involution;
 * Z(m) and L(m^t) have the same Langlands data.
 */

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "segments.hpp"

namespace shalika::zelevinsky {

using core_arith::HalfInt;
using core_arith::require;
using segments::Multisegment;
using segments::Segment;

// A line is keyed by (label, exponent mod 1): offsets differing by a
// half-integer can never be linked.
inline bool one_line(const Multisegment& m) {
    for (const auto& s : m.segments())
        if (!segments::same_line(s, m[0])) return false;
    return true;
}

struct ExtractStep {
    Segment extracted;
    std::vector<std::size_t> chain;  // indices into the input, in descent order
    Multisegment residual;
};

// One extraction from a non-empty single-line multisegment.
inline ExtractStep mw_extract(const Multisegment& m) {
    require(!m.empty(), "mw_extract needs a non-empty multisegment");
    require(one_line(m), "mw_extract needs a single cuspidal line");

    const auto& segs = m.segments();
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
        if (segs[i].e > segs[i0].e || (segs[i].e == segs[i0].e && segs[i].b > segs[i0].b)) i0 = i;

    std::vector<std::size_t> chain{i0};
    HalfInt end = segs[i0].e;
    HalfInt prev_b = segs[i0].b;
    for (;;) {
        end -= HalfInt::whole(1);
        std::size_t best = segs.size();
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].e != end || segs[i].b >= prev_b) continue;
            if (best == segs.size() || segs[i].b > segs[best].b) best = i;
        }
        if (best == segs.size()) break;
        chain.push_back(best);
        prev_b = segs[best].b;
    }

    HalfInt d = segs[i0].e;
    Segment extracted(segs[i0].label, d - HalfInt::whole(static_cast<std::int64_t>(chain.size()) - 1), d);

    std::vector<Segment> rest;
    std::vector<bool> in_chain(segs.size(), false);
    for (auto i : chain) in_chain[i] = true;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (!in_chain[i]) {
            rest.push_back(segs[i]);
            continue;
        }
        if (segs[i].b < segs[i].e) rest.emplace_back(segs[i].label, segs[i].b, segs[i].e - HalfInt::whole(1));
    }
    return {extracted, std::move(chain), Multisegment(std::move(rest))};
}

struct DualTrace {
    std::vector<ExtractStep> steps;
};

inline Multisegment mw_dual(const Multisegment& m, DualTrace* trace = nullptr) {
    // Split into lines; each line dualizes independently.
    std::map<std::pair<segments::CharLabel, std::int64_t>, std::vector<Segment>> lines;
    for (const auto& s : m.segments()) {
        std::int64_t parity = ((s.b.twice() % 2) + 2) % 2;
        lines[{s.label, parity}].push_back(s);
    }
    std::vector<Segment> out;
    for (auto& [key, segs] : lines) {
        Multisegment line{std::move(segs)};
        while (!line.empty()) {
            ExtractStep step = mw_extract(line);
            out.push_back(step.extracted);
            line = step.residual;
            if (trace) trace->steps.push_back(std::move(step));
        }
    }
    return Multisegment(std::move(out));
}

// Dual of {Delta + alpha, Delta} with Delta the length-n segment centered at
// chi: always n + alpha - 1 segments, in three runs (high singletons, a run
// of two-element segments, low singletons).  Built both ways and checked.
inline Multisegment dual_of_shifted_pair(std::int64_t n, std::int64_t alpha,
                                         const core_arith::FormalCharacter& chi) {
    require(1 <= alpha && alpha <= n, "dual_of_shifted_pair needs 1 <= alpha <= n");
    HalfInt lo = chi.exp - core_arith::half(n - 1);  // chi nu^{-(n-1)/2}
    HalfInt hi = chi.exp + core_arith::half(n - 1);
    Segment delta(chi.label, lo, hi);
    Multisegment pair({delta.shifted(HalfInt::whole(alpha)), delta});

    std::vector<Segment> expect;
    for (std::int64_t j = alpha; j >= 2; --j) expect.emplace_back(chi.label, hi + HalfInt::whole(j), hi + HalfInt::whole(j));
    for (std::int64_t j = n - 1; j >= alpha - 1; --j)
        expect.emplace_back(chi.label, lo + HalfInt::whole(j), lo + HalfInt::whole(j + 1));
    for (std::int64_t j = alpha - 2; j >= 0; --j) expect.emplace_back(chi.label, lo + HalfInt::whole(j), lo + HalfInt::whole(j));

    Multisegment dual = mw_dual(pair);
    require(dual == Multisegment(expect), "dual_of_shifted_pair: rewrite disagrees with closed form");
    require(dual.size() == static_cast<std::size_t>(n + alpha - 1),
            "dual_of_shifted_pair: wrong segment count");
    return dual;
}

}  // namespace shalika::zelevinsky
