#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shalika/zelevinsky.hpp"

using namespace shalika::zelevinsky;
using shalika::core_arith::CharLabel;
using shalika::core_arith::FormalCharacter;
using shalika::core_arith::HalfInt;
using shalika::core_arith::half;
using shalika::segments::Segment;

namespace {

Multisegment ms(std::vector<Segment> v) { return Multisegment(std::move(v)); }

}  // namespace

TEST_CASE("dual of a single segment is its column of points") {
    Multisegment m = ms({Segment(HalfInt::whole(0), HalfInt::whole(2))});
    Multisegment d = mw_dual(m);
    CHECK(d == ms({Segment(HalfInt::whole(2), HalfInt::whole(2)),
                   Segment(HalfInt::whole(1), HalfInt::whole(1)),
                   Segment(HalfInt::whole(0), HalfInt::whole(0))}));
    CHECK(mw_dual(d) == m);
}

TEST_CASE("worked duals on the half-integral line") {
    // One length-4 segment <-> four points.
    CHECK(mw_dual(ms({Segment(half(-3), half(3))})) ==
          ms({Segment(half(3), half(3)), Segment(half(1), half(1)), Segment(half(-1), half(-1)),
              Segment(half(-3), half(-3))}));

    // Two juxtaposed length-2 segments.
    CHECK(mw_dual(ms({Segment(half(1), half(3)), Segment(half(-3), half(-1))})) ==
          ms({Segment(half(3), half(3)), Segment(half(-1), half(1)), Segment(half(-3), half(-3))}));

    // Length 3 plus a low point.
    CHECK(mw_dual(ms({Segment(half(-1), half(3)), Segment(half(-3), half(-3))})) ==
          ms({Segment(half(3), half(3)), Segment(half(1), half(1)), Segment(half(-3), half(-1))}));

    // Length 3 plus a high point.
    CHECK(mw_dual(ms({Segment(half(3), half(3)), Segment(half(-3), half(1))})) ==
          ms({Segment(half(1), half(3)), Segment(half(-1), half(-1)), Segment(half(-3), half(-3))}));
}

TEST_CASE("extraction walks the longest descent chain") {
    Multisegment m = ms({Segment(half(1), half(3)), Segment(half(-3), half(-1))});
    ExtractStep step = mw_extract(m);
    // Top end 3/2 from the high segment; no segment ends at 1/2, so the
    // chain stops immediately.
    CHECK(step.extracted == Segment(half(3), half(3)));
    CHECK(step.chain.size() == 1);
    CHECK(step.residual == ms({Segment(half(1), half(1)), Segment(half(-3), half(-1))}));

    CHECK_THROWS_AS(mw_extract(Multisegment{}), std::domain_error);
    CHECK_THROWS_AS(mw_extract(ms({Segment(HalfInt::whole(0), HalfInt::whole(0)),
                                   Segment(half(1), half(1))})),
                    std::domain_error);
}

TEST_CASE("trace extractions concatenate to the dual") {
    Multisegment m = ms({Segment(half(-1), half(3)), Segment(half(-3), half(-3))});
    DualTrace trace;
    Multisegment d = mw_dual(m, &trace);
    std::vector<Segment> collected;
    for (const auto& st : trace.steps) collected.push_back(st.extracted);
    CHECK(Multisegment(collected) == d);
}

TEST_CASE("lines dualize independently") {
    Segment a(HalfInt::whole(0), HalfInt::whole(1));
    Segment b(HalfInt::whole(1), HalfInt::whole(2));
    Segment c(CharLabel::symbol("chi"), HalfInt::whole(0), HalfInt::whole(1));
    Segment h(half(1), half(1));

    Multisegment whole = mw_dual(ms({a, b, c, h}));
    Multisegment pieces;
    {
        std::vector<Segment> out;
        for (const auto& part : {ms({a, b}), ms({c}), ms({h})})
            for (const auto& s : mw_dual(part).segments()) out.push_back(s);
        pieces = Multisegment(out);
    }
    CHECK(whole == pieces);
}

TEST_CASE("the rewrite is a rank-preserving involution") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nseg(1, 6), twice_b(-8, 8), len(0, 3), coin(0, 2);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Segment> segs;
        int count = nseg(rng);
        for (int i = 0; i < count; ++i) {
            CharLabel label = coin(rng) == 0 ? CharLabel::symbol("chi") : CharLabel{};
            std::int64_t tb = twice_b(rng);
            std::int64_t l = len(rng);
            segs.emplace_back(label, HalfInt::from_twice(tb), HalfInt::from_twice(tb + 2 * l));
        }
        Multisegment m(segs);
        Multisegment d = mw_dual(m);
        CHECK(d.rank() == m.rank());
        CHECK(mw_dual(d) == m);
    }
}

TEST_CASE("dual of the shifted pair has the three-run shape") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t alpha = 1; alpha <= n; ++alpha) {
            for (const FormalCharacter& chi :
                 {FormalCharacter::trivial(), FormalCharacter::nu(half(1)),
                  FormalCharacter{CharLabel::symbol("chi"), HalfInt::whole(-1)}}) {
                Multisegment d = dual_of_shifted_pair(n, alpha, chi);
                CHECK(d.size() == static_cast<std::size_t>(n + alpha - 1));
                CHECK(d.rank() == 2 * n);

                // Round trip back to the pair itself.
                HalfInt lo = chi.exp - half(n - 1), hi = chi.exp + half(n - 1);
                Segment delta(chi.label, lo, hi);
                CHECK(mw_dual(d) == ms({delta.shifted(HalfInt::whole(alpha)), delta}));
            }
        }
    CHECK_THROWS_AS(dual_of_shifted_pair(3, 4, FormalCharacter::trivial()), std::domain_error);
}

TEST_CASE("shifted pair dual, written out for n = alpha = 2") {
    // Pair {[3/2..5/2], [-1/2..1/2]}: one high point, one slanted domino,
    // one low point.
    Multisegment d = dual_of_shifted_pair(2, 2, FormalCharacter::trivial());
    CHECK(d == ms({Segment(half(5), half(5)), Segment(half(1), half(3)),
                   Segment(half(-1), half(-1))}));
}
