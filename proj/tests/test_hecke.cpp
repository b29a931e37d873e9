#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "titszeta/hecke.hpp"

using namespace titszeta;

namespace {

Permutation transposition(uint32_t n, uint32_t i) {  // s_i, 1-based
    Permutation s = perm_identity(n);
    std::swap(s[i - 1], s[i]);
    return s;
}

Permutation random_perm(uint32_t n, std::mt19937& rng) {
    Permutation w = perm_identity(n);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

}  // namespace

TEST_CASE("reduced words") {
    CHECK(reduced_word(perm_identity(4)).empty());
    CHECK(reduced_word(transposition(2, 1)) == std::vector<uint32_t>{1});
    CHECK(reduced_word(longest_element(3)).size() == 3);
    CHECK(reduced_word(longest_element(5)).size() == 10);

    // the word multiplies back to w, and its length is the inversion count
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation w = random_perm(6, rng);
        auto word = reduced_word(w);
        CHECK(word.size() == perm_inversions(w));
        Permutation prod = perm_identity(6);
        for (uint32_t i : word) prod = perm_compose(prod, transposition(6, i));
        CHECK(prod == w);
    }
}

TEST_CASE("quadratic relation") {
    for (uint32_t q : {1u, 2u, 3u}) {
        HeckeElement as = HeckeElement::basis(2, q, transposition(2, 1));
        HeckeElement sq = hecke_multiply(as, as);
        HeckeElement expect = hecke_add(
            hecke_scale(HeckeElement::identity(2, q), Rat(q)),
            hecke_scale(as, Rat(q) - 1));
        CHECK(sq == expect);
    }
}

TEST_CASE("braid relation") {
    for (uint32_t q : {1u, 2u, 3u}) {
        HeckeElement a1 = HeckeElement::basis(3, q, transposition(3, 1));
        HeckeElement a2 = HeckeElement::basis(3, q, transposition(3, 2));
        HeckeElement lhs = hecke_multiply(hecke_multiply(a1, a2), a1);
        HeckeElement rhs = hecke_multiply(hecke_multiply(a2, a1), a2);
        CHECK(lhs == rhs);
        // both equal the basis element of s1 s2 s1
        Permutation w =
            perm_compose(transposition(3, 1),
                         perm_compose(transposition(3, 2), transposition(3, 1)));
        CHECK(lhs == HeckeElement::basis(3, q, w));
    }
}

TEST_CASE("braid and commutation relations for all generators, n <= 5") {
    for (uint32_t n = 3; n <= 5; ++n)
        for (uint32_t q : {1u, 2u, 3u})
            for (uint32_t i = 1; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j) {
                    HeckeElement ai = HeckeElement::basis(n, q, transposition(n, i));
                    HeckeElement aj = HeckeElement::basis(n, q, transposition(n, j));
                    if (j == i + 1) {
                        CHECK(hecke_multiply(hecke_multiply(ai, aj), ai) ==
                              hecke_multiply(hecke_multiply(aj, ai), aj));
                    } else {
                        CHECK(hecke_multiply(ai, aj) == hecke_multiply(aj, ai));
                    }
                }
}

TEST_CASE("identity and mixed parameters") {
    HeckeElement x = HeckeElement::basis(3, 2, longest_element(3), Rat(5, 3));
    CHECK(hecke_multiply(HeckeElement::identity(3, 2), x) == x);
    CHECK(hecke_multiply(x, HeckeElement::identity(3, 2)) == x);
    HeckeElement other = HeckeElement::identity(3, 3);
    CHECK_THROWS_AS(hecke_multiply(x, other), MixedParameters);
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(21);
    for (uint32_t q : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 12; ++trial) {
            HeckeElement a = HeckeElement::basis(4, q, random_perm(4, rng));
            HeckeElement b = HeckeElement::basis(4, q, random_perm(4, rng));
            HeckeElement c = HeckeElement::basis(4, q, random_perm(4, rng));
            CHECK(hecke_multiply(hecke_multiply(a, b), c) ==
                  hecke_multiply(a, hecke_multiply(b, c)));
        }
    }
}

TEST_CASE("q = 1 recovers the symmetric group") {
    for (uint32_t n : {2u, 3u, 4u}) {
        Permutation w = perm_identity(n);
        std::vector<Permutation> all;
        do all.push_back(w);
        while (std::next_permutation(w.begin(), w.end()));
        for (const auto& u : all)
            for (const auto& v : all) {
                HeckeElement prod = hecke_multiply(HeckeElement::basis(n, 1, u),
                                                   HeckeElement::basis(n, 1, v));
                CHECK(prod == HeckeElement::basis(n, 1, perm_compose(u, v)));
            }
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Permutation u = random_perm(5, rng), v = random_perm(5, rng);
        CHECK(hecke_multiply(HeckeElement::basis(5, 1, u),
                             HeckeElement::basis(5, 1, v)) ==
              HeckeElement::basis(5, 1, perm_compose(u, v)));
    }
}

TEST_CASE("regular representation") {
    auto id = regular_matrix(HeckeElement::identity(3, 2));
    for (size_t i = 0; i < id.size(); ++i)
        for (size_t j = 0; j < id.size(); ++j)
            CHECK(id[i][j] == (i == j ? Rat(1) : Rat(0)));

    // n=2 in basis (a_1, a_s): a_s acts by [[0, q], [1, q-1]]
    for (uint32_t q : {2u, 3u}) {
        auto m = regular_matrix(HeckeElement::basis(2, q, transposition(2, 1)));
        CHECK(m[0][0] == 0);
        CHECK(m[0][1] == Rat(q));
        CHECK(m[1][0] == 1);
        CHECK(m[1][1] == Rat(q) - 1);
    }
}

TEST_CASE("trace of the regular matrix of a_{w0}^2") {
    for (uint32_t n : {2u, 3u, 4u}) {
        for (uint32_t q : {2u, 3u}) {
            HeckeElement aw0 = HeckeElement::basis(n, q, longest_element(n));
            auto m = regular_matrix(hecke_multiply(aw0, aw0));
            Rat tr = 0;
            for (size_t i = 0; i < m.size(); ++i) tr += m[i][i];
            Rat expect = 0;
            for (const auto& lam : partitions_of(n)) {
                Int d = deg_psi(lam);
                expect += Rat(d * d * int_pow(q, f_lambda(lam).convert_to<uint64_t>()));
            }
            CHECK(tr == expect);
        }
    }
}

TEST_CASE("springer verification at small rank") {
    SpringerReport r22 = verify_springer(2, 2);
    REQUIRE(r22.spectrum.size() == 2);
    CHECK(std::get<1>(r22.spectrum[0]) == 4);  // lambda = (2)
    CHECK(std::get<1>(r22.spectrum[1]) == 1);  // lambda = (1,1)

    SpringerReport r32 = verify_springer(3, 2);
    CHECK(std::get<1>(r32.spectrum[0]) == 64);
    CHECK(std::get<2>(r32.spectrum[1]) == 4);
    SpringerReport r33 = verify_springer(3, 3);
    CHECK(std::get<1>(r33.spectrum[0]) == 729);
    CHECK(r33.central);
    CHECK(r33.annihilator_zero);
    CHECK(r33.ranks_match);
    // q = 1 degenerates gracefully (all eigenvalues 1)
    CHECK_NOTHROW(verify_springer(3, 1));
    CHECK_THROWS_AS(verify_springer(6, 2), ScaleCap);
}

TEST_CASE("group algebra traces: threefold shift laws at n = 6") {
    const uint32_t n = 6;
    Partition mu{2, 2, 2};
    Permutation w1 = threefold_shift(n);
    for (const auto& lam : partitions_of(n)) {
        if (lam.length() > 3 || !dominates(lam, mu)) continue;
        Rat phi = group_algebra_trace(
            n, mu, w1, {(int64_t)lam.part(0), (int64_t)lam.part(1), (int64_t)lam.part(2)});
        bool all3 = lam.part(0) % 3 == 0 && lam.part(1) % 3 == 0 && lam.part(2) % 3 == 0;
        CHECK(phi == (all3 ? Rat(1) : Rat(0)));

        Rat psi = psi_trace(n, mu, w1, lam);
        switch ((lam.part(1) - lam.part(2)) % 3) {
            case 0: CHECK(psi == 1); break;
            case 1: CHECK(psi == -1); break;
            default: CHECK(psi == 0);
        }
    }
}

TEST_CASE("group algebra traces: longest element law at n = 4") {
    const uint32_t n = 4;
    Partition mu{2, 2};
    Permutation w0 = longest_element(n);
    for (const auto& lam : partitions_of(n)) {
        if (lam.length() > 2 || !dominates(lam, mu)) continue;
        Rat psi = psi_trace(n, mu, w0, lam);
        CHECK(psi == (lam.part(0) % 2 == 0 ? Rat(1) : Rat(-1)));
    }
    CHECK_THROWS_AS(group_algebra_trace(9, Partition{3, 3, 3}, perm_identity(9), {9, 0, 0}),
                    ScaleCap);
}
