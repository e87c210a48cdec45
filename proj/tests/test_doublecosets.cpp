#include <catch2/catch_amalgamated.hpp>

#include "shalika/doublecosets.hpp"

using namespace shalika::doublecosets;

TEST_CASE("k-range bounds") {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r) {
            KRange kr = krange(n, r);
            CHECK(kr.alpha == std::max<std::int64_t>(0, r - n));
            CHECK(kr.beta == r / 2);
            CHECK(kr.gamma == std::min(r, n));
            CHECK(0 <= kr.alpha);
            CHECK(kr.alpha <= kr.beta);
            CHECK(kr.beta <= kr.gamma);
        }
    CHECK_THROWS_AS(krange(2, 0), std::domain_error);
    CHECK_THROWS_AS(krange(2, 4), std::domain_error);
}

TEST_CASE("permutation matrices compose and invert") {
    PermMatrix s(3);
    s.place(0, 1);
    s.place(1, 0);
    s.place(2, 2);
    REQUIRE(s.complete());
    CHECK(s * s == block_perm({3}, {3}, {{0, 0}}));
    CHECK(s.inverse() == s);

    PermMatrix c(3);  // the 3-cycle e_0 -> e_1 -> e_2 -> e_0
    c.place(1, 0);
    c.place(2, 1);
    c.place(0, 2);
    CHECK(c * c == c.inverse());
    CHECK((c * c) * c == block_perm({3}, {3}, {{0, 0}}));

    auto d = c.dense();
    CHECK(d[1][0] == 1);
    CHECK(d[0][0] == 0);

    PermMatrix bad(2);
    bad.place(0, 0);
    CHECK_FALSE(bad.complete());
    CHECK_THROWS_AS(bad.place(1, 0), std::domain_error);
}

TEST_CASE("block placement validates tiling") {
    CHECK_THROWS_AS(block_perm({2, 1}, {1, 1}, {{0, 0}, {1, 1}}), std::domain_error);
    CHECK_THROWS_AS(block_perm({1, 1}, {1, 1}, {{0, 0}}), std::domain_error);
    CHECK_NOTHROW(block_perm({1, 1}, {1, 1}, {{0, 1}, {1, 0}}));
    // Empty blocks are fine.
    CHECK_NOTHROW(block_perm({2, 0}, {0, 2}, {{0, 1}, {1, 0}}));
}

TEST_CASE("representatives are valid permutations") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r)
            for (auto [k, l] : index_set(n, r)) {
                CHECK(index_valid(n, r, k, l));
                CHECK(w_kl(n, r, k, l).complete());
                CHECK(sigma_kl(n, r, k, l).complete());
            }
    CHECK_FALSE(index_valid(2, 2, 1, 2));
    CHECK_THROWS_AS(w_kl(2, 2, 2, 1), std::domain_error);
}

TEST_CASE("the diagonal-friendly form agrees with w_{k,k}") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r) {
            KRange kr = krange(n, r);
            for (std::int64_t k = kr.alpha; k <= kr.beta; ++k)
                CHECK(w_k_alternate(n, r, k) == w_kl(n, r, k, k));
        }
}

TEST_CASE("sigma translates the base representative") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r)
            for (auto [k, l] : index_set(n, r)) CHECK(compose_check(n, r, k, l));
}

TEST_CASE("index counts match the closed formula") {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r)
            CHECK(static_cast<std::int64_t>(index_set(n, r).size()) == index_count_formula(n, r));

    CHECK(index_count_formula(2, 1) == 2);
    CHECK(index_count_formula(2, 2) == 4);
    CHECK(index_count_formula(2, 3) == 2);
}

TEST_CASE("side shapes and their two-block forms") {
    // n = 3, r = 4, k = 1: side 1 is N_{1,3} in G_4, side 2 is N_{2,0} in G_2.
    BlockShape s1 = side1_shape(3, 4, 1);
    CHECK(s1.ambient == 4);
    CHECK(s1.sizes == std::array<std::int64_t, 3>{1, 1, 2});
    CHECK(s1.two_block_form() == std::pair<std::int64_t, std::int64_t>{1, 3});
    CHECK_FALSE(s1.group_trivial());
    CHECK(s1.psi_nontrivial());

    BlockShape s2 = side2_shape(3, 4, 1);
    CHECK(s2.ambient == 2);
    CHECK(s2.sizes == std::array<std::int64_t, 3>{2, 0, 0});
    CHECK(s2.two_block_form() == std::pair<std::int64_t, std::int64_t>{2, 0});
    CHECK(s2.group_trivial());
    CHECK_FALSE(s2.psi_nontrivial());

    // r = n, k = 0: both sides collapse to the trivial group.
    for (std::int64_t n = 1; n <= 8; ++n) {
        CHECK(side1_shape(n, n, 0).group_trivial());
        CHECK(side2_shape(n, n, 0).group_trivial());
    }

    // Nontrivial group always carries nontrivial psi in this family.
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r) {
            KRange kr = krange(n, r);
            for (std::int64_t k = kr.alpha; k <= kr.beta; ++k) {
                for (const BlockShape& s : {side1_shape(n, r, k), side2_shape(n, r, k)})
                    CHECK(s.group_trivial() == !s.psi_nontrivial());
            }
        }

    CHECK(s1.str() == "N(1,1,2)<G_4 psi@(1,2)");
    CHECK_THROWS_AS(side1_shape(2, 2, 2), std::domain_error);
}

TEST_CASE("stabilizer blocks tile n") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t r = 1; r < 2 * n; ++r) {
            KRange kr = krange(n, r);
            for (std::int64_t k = kr.alpha; k <= kr.beta; ++k) {
                auto b = levi_blocks(n, r, k);
                CHECK(b[0] + b[1] + b[2] == n);
                CHECK(b[0] >= 0);
                CHECK(b[1] >= 0);
                CHECK(b[2] >= 0);
            }
        }
}
