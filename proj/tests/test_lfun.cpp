#include <catch2/catch_amalgamated.hpp>

#include "shalika/lfun.hpp"

using namespace shalika::lfun;
using shalika::core_arith::CharLabel;
using shalika::core_arith::FormalCharacter;
using shalika::core_arith::HalfInt;
using shalika::core_arith::half;
using shalika::segments::Segment;
namespace reps = shalika::reps;

namespace {

FormalCharacter nu(std::int64_t twice) { return FormalCharacter::nu(half(twice)); }

reps::ReprExpr lrep(std::vector<Segment> v) { return reps::ReprExpr(reps::LRep{Multisegment(std::move(v))}); }

}  // namespace

TEST_CASE("parameters of the atoms") {
    CHECK(langlands_param(reps::steinberg(4, nu(0))) == LanglandsParam{{4, nu(0)}});

    // A character of G_3 spreads into three singleton blocks.
    LanglandsParam p = langlands_param(reps::character(3, FormalCharacter::trivial()));
    CHECK(p == LanglandsParam{{1, nu(-2)}, {1, nu(0)}, {1, nu(2)}});

    // L-data reads off directly; Z-data passes through the rewrite dual.
    reps::ReprExpr tau = lrep({Segment(half(1), half(3)), Segment(half(-3), half(-1))});
    CHECK(langlands_param(tau) == LanglandsParam{{2, nu(-2)}, {2, nu(2)}});

    reps::ReprExpr zl(reps::ZRep{Multisegment({Segment(half(1), half(3)), Segment(half(-3), half(-1))})});
    CHECK(langlands_param(zl) == LanglandsParam{{2, nu(0)}, {1, nu(-3)}, {1, nu(3)}});
}

TEST_CASE("products need certified irreducibility") {
    // St(2,nu^{1/2}) x char(2,nu^{-1/2}) is certified; its blocks concatenate.
    reps::ReprExpr good = reps::product({reps::steinberg(2, nu(1)), reps::character(2, nu(-1))});
    CHECK(langlands_param(good) == LanglandsParam{{2, nu(1)}, {1, nu(-2)}, {1, nu(0)}});

    // A linked pair of characters is not certified.
    reps::ReprExpr bad = reps::product({reps::character(1, nu(1)), reps::character(1, nu(-1))});
    CHECK_THROWS_AS(langlands_param(bad), std::domain_error);
}

TEST_CASE("parameter utilities") {
    LanglandsParam p{{2, nu(-2)}, {2, nu(2)}, {1, {CharLabel::symbol("chi"), HalfInt{}}}};
    CHECK(param_rank(p) == 5);
    CHECK(str(p) == "Sp(2)(x)nu^{-1} + Sp(2)(x)nu^{1} + Sp(1)(x)chi");
    CHECK(str(LanglandsParam{}) == "0");

    LanglandsParam d = dual_param(p);
    CHECK(param_rank(d) == 5);
    CHECK(dual_param(d) == p);

    CHECK(is_tempered(langlands_param(reps::steinberg(4, nu(0)))));
    CHECK_FALSE(is_tempered(langlands_param(reps::character(4, FormalCharacter::trivial()))));
}

TEST_CASE("speh blocks tensor by the clebsch-gordan rule") {
    LanglandsParam a{{2, nu(0)}}, b{{3, nu(0)}};
    CHECK(tensor_param(a, b) == LanglandsParam{{4, nu(0)}, {2, nu(0)}});

    // Ranks multiply.
    LanglandsParam p{{2, nu(2)}, {1, nu(-1)}};
    LanglandsParam q{{3, nu(0)}, {2, {CharLabel::symbol("chi"), half(1)}}};
    CHECK(param_rank(tensor_param(p, q)) == param_rank(p) * param_rank(q));

    // Labels multiply.
    LanglandsParam r{{1, {CharLabel::symbol("chi"), HalfInt{}}}};
    CHECK(tensor_param(r, r) == LanglandsParam{{1, {CharLabel::symbol("chi", 2), HalfInt{}}}});
}

TEST_CASE("pole profile of the trivial representation of G_k against itself") {
    // ord(s) = k - s for s = 1, ..., k-1.
    for (std::int64_t k = 1; k <= 8; ++k) {
        LanglandsParam p = langlands_param(reps::character(k, FormalCharacter::trivial()));
        PoleProfile prof = pole_profile(tensor_param(p, dual_param(p)), k);
        for (std::int64_t s = 1; s <= k; ++s) CHECK(prof.order_at(s) == std::max<std::int64_t>(0, k - s));
        CHECK(prof.off_lattice.empty());
        CHECK(prof.ramified_blocks == 0);
    }
}

TEST_CASE("ramified and off-lattice blocks are kept out of the order map") {
    LanglandsParam p{{1, {CharLabel::symbol("chi"), half(-2)}}, {1, nu(-1)}, {1, nu(0)}};
    PoleProfile prof = pole_profile(p, 4);
    CHECK(prof.ramified_blocks == 1);
    REQUIRE(prof.off_lattice.size() == 1);
    CHECK(prof.off_lattice[0] == half(1));
    CHECK(prof.orders.empty());
}

TEST_CASE("worked adjoint profiles on G_4") {
    // 1_4: orders 3, 2, 1 at s = 1, 2, 3.
    {
        LanglandsParam p = langlands_param(reps::character(4, FormalCharacter::trivial()));
        PoleProfile prof = adjoint_profile(p, 3);
        CHECK(prof.order_at(1) == 3);
        CHECK(prof.order_at(2) == 2);
        CHECK(prof.order_at(3) == 1);
    }
    // L_{nu^{-1},2} = Z({[1/2..3/2],[-3/2..-1/2]}): orders {1: 2, 3: 1}.
    {
        reps::ReprExpr l(reps::ZRep{Multisegment({Segment(half(1), half(3)), Segment(half(-3), half(-1))})});
        PoleProfile prof = adjoint_profile(langlands_param(l), 3);
        CHECK(prof.order_at(1) == 2);
        CHECK(prof.order_at(2) == 0);
        CHECK(prof.order_at(3) == 1);
    }
    // tau: orders {1: 1, 2: 1}.
    {
        reps::ReprExpr tau = lrep({Segment(half(1), half(3)), Segment(half(-3), half(-1))});
        PoleProfile prof = adjoint_profile(langlands_param(tau), 3);
        CHECK(prof.order_at(1) == 1);
        CHECK(prof.order_at(2) == 1);
        CHECK(prof.order_at(3) == 0);
    }
    // Q and Q^vee share {1: 2, 2: 1}.
    {
        reps::ReprExpr q = lrep({Segment(half(1), half(3)), Segment(half(-1), half(-1)), Segment(half(-3), half(-3))});
        PoleProfile prof = adjoint_profile(langlands_param(q), 3);
        CHECK(prof.order_at(1) == 2);
        CHECK(prof.order_at(2) == 1);
        PoleProfile dual_prof = adjoint_profile(dual_param(langlands_param(q)), 3);
        CHECK(dual_prof.orders == prof.orders);
    }
    // Z: {1: 1}; St_4: empty.
    {
        reps::ReprExpr z = lrep({Segment(half(-1), half(3)), Segment(half(-3), half(-3))});
        PoleProfile prof = adjoint_profile(langlands_param(z), 3);
        CHECK(prof.order_at(1) == 1);
        CHECK(prof.order_at(2) == 0);
        CHECK(prof.order_at(3) == 0);

        PoleProfile st = adjoint_profile(langlands_param(reps::steinberg(4, nu(0))), 3);
        CHECK(st.orders.empty());
    }
}

TEST_CASE("the predicate needs ord(s) >= n + 1 - s on the whole lattice") {
    PoleProfile prof;
    prof.s_max = 2;
    prof.orders = {{1, 3}, {2, 2}};
    CHECK(predicted_tjm_zero(prof, 2));
    prof.orders = {{1, 1}, {2, 2}};
    CHECK_FALSE(predicted_tjm_zero(prof, 2));

    PoleProfile cut;
    cut.s_max = 1;
    CHECK_THROWS_AS(predicted_tjm_zero(cut, 2), std::domain_error);
}

TEST_CASE("conjecture verdicts for the G_4 table") {
    auto check = [](const reps::ReprExpr& e, bool zero) {
        auto rep = conjecture_check(2, e);
        CHECK(rep.predicted_zero == zero);
    };
    check(reps::character(4, FormalCharacter::trivial()), true);
    check(reps::ReprExpr(reps::ZRep{Multisegment({Segment(half(1), half(3)), Segment(half(-3), half(-1))})}),
          false);                                                                      // L
    check(lrep({Segment(half(1), half(3)), Segment(half(-3), half(-1))}), false);      // tau
    check(lrep({Segment(half(1), half(3)), Segment(half(-1), half(-1)), Segment(half(-3), half(-3))}),
          true);                                                                       // Q
    check(lrep({Segment(half(3), half(3)), Segment(half(1), half(1)), Segment(half(-3), half(-1))}),
          true);                                                                       // Q^vee
    check(lrep({Segment(half(-1), half(3)), Segment(half(-3), half(-3))}), false);     // Z
    check(lrep({Segment(half(-3), half(1)), Segment(half(3), half(3))}), false);       // Z^vee
    check(reps::steinberg(4, nu(0)), false);                                           // St_4

    CHECK_THROWS_AS(conjecture_check(3, reps::character(4, FormalCharacter::trivial())),
                    std::domain_error);
}

TEST_CASE("quotient-family profiles follow the closed order formula") {
    // Q_{1,r} in G_{2n}: L({Delta_r} + points of the length 2n-r character
    // segment at nu^{-n}); ord(s) = 2n - r - s + 1, zero verdict iff r <= n.
    for (std::int64_t n = 2; n <= 4; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r) {
            Segment delta = reps::character_segment(r, FormalCharacter::trivial());
            Segment delta_p = reps::character_segment(2 * n - r, nu(-2 * n));
            std::vector<Segment> mq{delta};
            for (HalfInt t = delta_p.e; t >= delta_p.b; t -= HalfInt::whole(1))
                mq.emplace_back(delta_p.label, t, t);
            auto rep = conjecture_check(n, lrep(mq));
            for (std::int64_t s = 1; s <= n; ++s)
                CHECK(rep.profile.order_at(s) == std::max<std::int64_t>(0, 2 * n - r - s + 1));
            CHECK(rep.predicted_zero == (r <= n));
        }
}

TEST_CASE("sub-family profiles switch verdict at the symmetric split") {
    // Z_{1,r}: L({[b-1..e] of Delta_r} + all but the top point); predicted
    // zero iff r < n.
    for (std::int64_t n = 2; n <= 4; ++n)
        for (std::int64_t r = 1; r <= n; ++r) {
            Segment delta = reps::character_segment(r, FormalCharacter::trivial());
            Segment delta_p = reps::character_segment(2 * n - r, nu(-2 * n));
            std::vector<Segment> mz{Segment(delta.label, delta.b - HalfInt::whole(1), delta.e)};
            for (HalfInt t = delta_p.e - HalfInt::whole(1); t >= delta_p.b; t -= HalfInt::whole(1))
                mz.emplace_back(delta_p.label, t, t);
            auto rep = conjecture_check(n, lrep(mz));
            CHECK(rep.predicted_zero == (r < n));
            if (r == n) CHECK(rep.profile.order_at(1) == n - 1);
        }
}

TEST_CASE("one-dimensional against a small factor vanishes for every companion") {
    // 1_{n+1} x sigma: predicted zero for unramified, ramified and mixed
    // companions of rank n - 1.
    for (std::int64_t n = 2; n <= 4; ++n) {
        std::vector<reps::ReprExpr> companions;
        companions.push_back(reps::character(n - 1, FormalCharacter{CharLabel::symbol("chi"), HalfInt{}}));
        companions.push_back(reps::steinberg(n - 1, nu(1)));
        if (n - 1 >= 2)
            companions.push_back(reps::product(
                {reps::character(1, FormalCharacter{CharLabel::symbol("chi"), HalfInt{}}),
                 reps::character(n - 2, nu(1))}));
        for (const auto& sigma : companions) {
            reps::ReprExpr pi = reps::product({reps::character(n + 1, FormalCharacter::trivial()), sigma});
            auto rep = conjecture_check(n, pi);
            CHECK(rep.predicted_zero);
        }
    }
}
