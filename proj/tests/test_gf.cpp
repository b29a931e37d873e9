#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "titszeta/gf.hpp"

using namespace titszeta;

TEST_CASE("prime power recognition") {
    CHECK(factor_prime_power(2).p == 2);
    CHECK(factor_prime_power(8).e == 3);
    CHECK(factor_prime_power(49).p == 7);
    CHECK_THROWS_AS(factor_prime_power(1), NotPrimePower);
    CHECK_THROWS_AS(factor_prime_power(6), NotPrimePower);
    CHECK_THROWS_AS(factor_prime_power(12), NotPrimePower);
    CHECK_THROWS_AS(make_field(1u << 17), CapExceeded);
}

TEST_CASE("characteristic arithmetic") {
    const auto& f2 = make_field(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.neg(1) == 1);
    const auto& f3 = make_field(3);
    CHECK(f3.mul(2, 2) == 1);
    const auto& f5 = make_field(5);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), DivisionByZero);
}

TEST_CASE("GF(4) multiplicative group is cyclic of order 3") {
    const auto& f = make_field(4);
    uint32_t g = f.generator();
    CHECK(g != 1);
    CHECK(f.mul(g, f.mul(g, g)) == 1);
    // exhaustive: every nonzero element satisfies a^3 = 1 and a * inv(a) = 1
    for (uint32_t a = 1; a < 4; ++a) {
        CHECK(f.mul(a, f.mul(a, a)) == 1);
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("field axioms, exhaustive for small q") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u}) {
        const auto& f = make_field(q);
        REQUIRE(f.q() == q);
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (uint32_t c = 0; c < q; ++c) {
                    bool assoc_add = f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    bool assoc_mul = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    bool distrib =
                        f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                    if (!(assoc_add && assoc_mul && distrib)) {
                        CHECK(assoc_add);
                        CHECK(assoc_mul);
                        CHECK(distrib);
                    }
                }
            }
    }
}

TEST_CASE("Frobenius is additive") {
    for (uint32_t q : {4u, 8u, 9u, 16u, 27u, 25u}) {
        const auto& f = make_field(q);
        const uint32_t p = f.p();
        auto pow_p = [&](uint32_t a) {
            uint32_t r = 1;
            for (uint32_t i = 0; i < p; ++i) r = f.mul(r, a);
            return r;
        };
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                CHECK(pow_p(f.add(a, b)) == f.add(pow_p(a), pow_p(b)));
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (uint32_t q : {4u, 8u, 9u, 16u, 27u}) {
        const auto& f = make_field(q);
        uint32_t g = f.generator();
        uint32_t acc = 1;
        uint32_t order = 0;
        do {
            acc = f.mul(acc, g);
            ++order;
        } while (acc != 1);
        CHECK(order == q - 1);
    }
}

TEST_CASE("construction is deterministic") {
    // two independent constructions agree element-by-element
    FieldTable a(16), b(16);
    CHECK(a.modulus() == b.modulus());
    for (uint32_t x = 0; x < 16; ++x)
        for (uint32_t y = 0; y < 16; ++y) CHECK(a.mul(x, y) == b.mul(x, y));
}
