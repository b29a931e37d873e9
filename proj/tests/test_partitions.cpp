#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "titszeta/partitions.hpp"

using namespace titszeta;

TEST_CASE("partition basics") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(dominates(Partition{2, 1}, Partition{1, 1, 1}));
    CHECK_FALSE(dominates(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(conjugate(Partition{4, 2, 1})) == Partition{4, 2, 1});
    CHECK_THROWS_AS(dominates(Partition{2}, Partition{3}), SizeMismatch);
    // descending lex order
    auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("weights") {
    CHECK(row_weight(Partition{3, 2}) == 4);
    CHECK(col_weight(Partition{1, 1, 1}) == 3);
    for (uint32_t n : {3u, 5u, 7u}) CHECK(row_weight(Partition{n}) == Int(n) * (n - 1) / 2);
    // wt_r + wt_c <= n(n-1)/2
    for (uint32_t n = 1; n <= 9; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(row_weight(lam) + col_weight(lam) <= Int(n) * (n - 1) / 2);
}

TEST_CASE("gaussian binomials and multinomials") {
    CHECK(q_binomial(2, 1, 2) == 3);
    CHECK(q_binomial(4, 2, 2) == 35);
    CHECK(q_binomial(5, 2, 3) == 1210);
    CHECK(q_binomial(4, -1, 2) == 0);
    CHECK(q_multinomial(4, {1, 1, 2}, 2) == 105);
    CHECK(q_multinomial(4, {1, -1, 4}, 2) == 0);
    // symmetry and Pascal consistency
    for (uint32_t n = 1; n <= 8; ++n)
        for (int64_t k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k, 2) == q_binomial(n, (int64_t)n - k, 2));
}

TEST_CASE("q-hook dimensions") {
    // hooks of (3,1): {4,2,1,1}
    auto h = hook_lengths(Partition{3, 1});
    std::sort(h.begin(), h.end());
    CHECK(h == std::vector<uint32_t>{1, 1, 2, 4});

    for (uint32_t n : {2u, 3u, 4u, 5u}) {
        CHECK(d_lambda(Partition{n}, 2) == 1);
        // d_{(n-1,1)} = q [n-1]_q
        Int expect = 0;
        for (uint32_t i = 0; i < n - 1; ++i) expect += int_pow(2, i);
        CHECK(d_lambda(Partition{n - 1, 1}, 2) == 2 * expect);
    }
    CHECK(d_lambda(Partition{1, 1, 1}, Int(2)) == 8);  // q^3
    CHECK(d_lambda(Partition{1, 1, 1}, Int(3)) == 27);

    // d_{(n-j,j)} = [n j] - [n j-1]
    for (uint32_t n = 2; n <= 8; ++n)
        for (uint32_t j = 1; 2 * j <= n; ++j)
            for (uint32_t q : {2u, 3u})
                CHECK(d_lambda(Partition{n - j, j}, q) ==
                      q_binomial(n, j, q) - q_binomial(n, j - 1, q));
}

TEST_CASE("three-row dimension identity (alternating six-term multinomial)") {
    for (uint32_t n = 3; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (lam.length() > 3) continue;
            const int64_t x = lam.part(0), y = lam.part(1), z = lam.part(2);
            for (uint32_t q : {2u, 3u}) {
                Int expect = q_multinomial(n, {x, y, z}, q) -
                             q_multinomial(n, {x + 1, y - 1, z}, q) +
                             q_multinomial(n, {x + 2, y - 1, z - 1}, q) -
                             q_multinomial(n, {x, y + 1, z - 1}, q) +
                             q_multinomial(n, {x + 1, y + 1, z - 2}, q) -
                             q_multinomial(n, {x + 2, y, z - 2}, q);
                CHECK(d_lambda(lam, q) == expect);
            }
        }
}

TEST_CASE("degrees and springer exponents") {
    CHECK(deg_psi(Partition{2, 1}) == 2);
    for (uint32_t n : {2u, 3u, 5u}) CHECK(deg_psi(Partition{n}) == 1);
    // sum of squared degrees is n!
    for (uint32_t n = 1; n <= 8; ++n) {
        Int total = 0, fact = 1;
        for (uint32_t i = 2; i <= n; ++i) fact *= i;
        for (const auto& lam : partitions_of(n)) {
            Int d = deg_psi(lam);
            total += d * d;
            CHECK(d == d_lambda(lam, 1));
        }
        CHECK(total == fact);
    }
    for (uint32_t n : {2u, 3u, 4u, 6u}) {
        CHECK(f_lambda(Partition{n}) == Int(n) * n - n);
        CHECK(f_lambda(Partition{n - 1, 1}) == Int(n) * n - 2 * n);
    }
    CHECK(f_lambda(Partition{2, 1}) == 3);
}

TEST_CASE("kostka oracle") {
    CHECK(kostka_ssyt(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    // K_{mu,mu} = 1 and dominance criterion, exhaustive n <= 8
    for (uint32_t n = 1; n <= 8; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts) CHECK(kostka_ssyt(mu, mu) == 1);
        for (const auto& lam : parts)
            for (const auto& mu : parts)
                CHECK((kostka_ssyt(lam, mu) >= 1) == dominates(lam, mu));
    }
    CHECK_THROWS_AS(kostka_ssyt(Partition{13}, Partition{13}), ScaleCap);
}

TEST_CASE("kostka closed form against the oracle, <= 3 rows, n <= 12") {
    for (uint32_t n = 1; n <= 12; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lam : parts) {
            if (lam.length() > 3) continue;
            for (const auto& mu : parts) {
                if (mu.length() > 3 || !dominates(lam, mu)) continue;
                CHECK(kostka_closed3(lam, mu) == kostka_ssyt(lam, mu));
            }
        }
    }
    // table values for mu = (i,4,2), i >= 6
    CHECK(kostka_closed3(Partition{10, 2}, Partition{6, 4, 2}) == 3);
    CHECK(kostka_closed3(Partition{8, 2, 2}, Partition{6, 4, 2}) == 1);
    CHECK(kostka_closed3(Partition{3, 3, 3}, Partition{3, 3, 3}) == 1);
}

TEST_CASE("exponent positivity and residue laws") {
    // f_lambda - 2 wt_r(mu) >= 0 for lam >= mu, n <= 12
    for (uint32_t n = 1; n <= 12; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lam : parts)
            for (const auto& mu : parts)
                if (dominates(lam, mu))
                    CHECK(f_lambda(lam) - 2 * row_weight(mu) >= 0);
    }
    // K_{lam,(k,k,k)} = y - z + 1 mod 3
    for (uint32_t k = 1; 3 * k <= 12; ++k) {
        Partition mu{k, k, k};
        for (const auto& lam : partitions_of(3 * k)) {
            if (lam.length() > 3 || !dominates(lam, mu)) continue;
            Int kost = kostka_closed3(lam, mu);
            int64_t resid = ((int64_t)lam.part(1) - (int64_t)lam.part(2) + 1) % 3;
            CHECK(kost % 3 == resid % 3);
        }
    }
}
