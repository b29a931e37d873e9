#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "titszeta/building.hpp"
#include "titszeta/digraph.hpp"

using namespace titszeta;

namespace {

Digraph directed_cycle(uint32_t n) {
    Digraph g(n);
    for (uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Digraph complete_undirected(uint32_t n) {
    Digraph g(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (i != j) g.add_edge(i, j);
    return g;
}

Digraph random_digraph(uint32_t n, double p, std::mt19937& rng) {
    Digraph g(n);
    std::uniform_real_distribution<double> dist(0, 1);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (i != j && dist(rng) < p) g.add_edge(i, j);
    return g;
}

std::vector<Int> to_ints(std::initializer_list<int64_t> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("closed walk counts on small graphs") {
    CHECK(closed_walk_counts(directed_cycle(3), 3) == to_ints({0, 0, 3}));
    CHECK(closed_walk_counts(complete_undirected(3), 2) == to_ints({0, 6}));
    CHECK(closed_walk_counts(Digraph(4), 5) == to_ints({0, 0, 0, 0, 0}));
}

TEST_CASE("inverse zeta polynomials of small graphs") {
    CHECK(inverse_zeta_polynomial(complete_undirected(3)) ==
          IntPolynomial({1, 0, -3, -2}));
    CHECK(inverse_zeta_polynomial(directed_cycle(3)) == IntPolynomial({1, 0, 0, -1}));
    CHECK(inverse_zeta_polynomial(Digraph(1)) == IntPolynomial::one());
    CHECK_THROWS_AS(inverse_zeta_polynomial(Digraph(10), /*cap=*/5), TooLargeForExact);
}

TEST_CASE("newton power sums") {
    CHECK(newton_power_sums(IntPolynomial({1, -2}), 4) == to_ints({2, 4, 8, 16}));
    CHECK(newton_power_sums(IntPolynomial({1, 0, -3, -2}), 3) == to_ints({0, 6, 6}));
    CHECK(newton_power_sums(IntPolynomial({1, 0, 0, -1}), 3) == to_ints({0, 0, 3}));
}

TEST_CASE("disjoint union multiplies zetas, tensor multiplies counts") {
    Digraph k3 = complete_undirected(3);
    Digraph c3 = directed_cycle(3);
    CHECK(inverse_zeta_polynomial(disjoint_union(k3, c3)) ==
          poly_mul(IntPolynomial({1, 0, -3, -2}), IntPolynomial({1, 0, 0, -1})));
    CHECK(inverse_zeta_polynomial(disjoint_union(k3, Digraph(0))) ==
          inverse_zeta_polynomial(k3));

    // C2 x C3 is a directed 6-cycle
    Digraph t = tensor_product(directed_cycle(2), directed_cycle(3));
    CHECK(closed_walk_counts(t, 6) == closed_walk_counts(directed_cycle(6), 6));

    CHECK(closed_walk_counts(tensor_product(k3, k3), 2).back() == 36);
    CHECK(tensor_product(k3, Digraph(1)).edge_count() == 0);
}

TEST_CASE("randomized union and tensor identities") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph a = random_digraph(5 + trial % 4, 0.4, rng);
        Digraph b = random_digraph(5 + (trial / 2) % 4, 0.35, rng);
        auto ca = closed_walk_counts(a, 8);
        auto cb = closed_walk_counts(b, 8);
        auto cu = closed_walk_counts(disjoint_union(a, b), 8);
        auto ct = closed_walk_counts(tensor_product(a, b), 8);
        for (int l = 0; l < 8; ++l) {
            CHECK(cu[l] == ca[l] + cb[l]);
            CHECK(ct[l] == ca[l] * cb[l]);
        }
    }
}

TEST_CASE("modular charpoly against the Faddeev-LeVerrier oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int64_t> entry(-9, 9);
    for (uint32_t n : {1u, 2u, 3u, 5u, 12u, 25u, 40u}) {
        Mat64 m(n);
        for (auto& v : m.a) v = entry(rng);
        CHECK(charpoly_reversed(m) == charpoly_reversed_exact_slow(m));
    }
}

TEST_CASE("newton power sums of det(I-uA) equal walk counts") {
    std::mt19937 rng(99);
    for (uint32_t n : {6u, 17u, 60u, 150u, 200u}) {
        Digraph g = random_digraph(n, 3.0 / n, rng);
        auto p = inverse_zeta_polynomial(g);
        CHECK(newton_power_sums(p, 12) == closed_walk_counts(g, 12));
    }
}

TEST_CASE("cyclic partite typing") {
    Digraph c3 = directed_cycle(3);
    auto typing = cyclic_partite_types(c3, 3);
    CHECK(typing == std::vector<uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(cyclic_partite_types(complete_undirected(3), 2), NotCyclicPartite);

    // lines/planes of F_2^3 split X0 into a valid 2-partite structure
    BuildingGraph x0 = build_x0_component(3, 2, 1);
    CHECK_NOTHROW(cyclic_partite_types(x0.graph, 2, x0.typing));
}

TEST_CASE("partite block matrices") {
    Digraph c3 = directed_cycle(3);
    Mat64 b = partite_block(c3, 3, {0, 1, 2});
    REQUIRE(b.n == 1);
    CHECK(b.at(0, 0) == 1);

    // complete bipartite K_{2,2}, both directions: block is 2 * ones
    Digraph k22(4);
    for (uint32_t u : {0u, 1u})
        for (uint32_t v : {2u, 3u}) {
            k22.add_edge(u, v);
            k22.add_edge(v, u);
        }
    Mat64 bk = partite_block(k22, 2, {0, 0, 1, 1});
    REQUIRE(bk.n == 2);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) CHECK(bk.at(i, j) == 2);

    // X0^[1](F_2^3): 7x7 block of A^2 on lines, row sums 16
    BuildingGraph x0 = build_x0_component(3, 2, 1);
    Mat64 bl = partite_block(x0.graph, 2, x0.typing);
    REQUIRE(bl.n == 7);
    for (uint32_t i = 0; i < 7; ++i) {
        int64_t s = 0;
        for (uint32_t j = 0; j < 7; ++j) s += bl.at(i, j);
        CHECK(s == 16);
    }
}

TEST_CASE("block product pipeline agrees with restricted matrix powers") {
    BuildingGraph x2 = build_x2_component(3, 2, mdim_classes(3).at(0));
    Mat64 via_power = partite_block(x2.graph, x2.arity, x2.typing);
    Mat64 via_chain = cyclic_block_product(x2.graph, x2.arity, x2.typing);
    CHECK(via_power.a == via_chain.a);
}

TEST_CASE("cyclic reduction identity on random cyclic n-partite digraphs") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const uint32_t arity = 2 + trial % 4;
        std::vector<uint32_t> typing;
        for (uint32_t t = 0; t < arity; ++t)
            for (uint32_t c = 0; c < 2 + (trial + t) % 3; ++c) typing.push_back(t);
        std::shuffle(typing.begin(), typing.end(), rng);
        Digraph g((uint32_t)typing.size());
        for (uint32_t u = 0; u < g.vertex_count; ++u)
            for (uint32_t v = 0; v < g.vertex_count; ++v)
                if (u != v && typing[v] == (typing[u] + 1) % arity && dist(rng) < 0.5)
                    g.add_edge(u, v);
        IntPolynomial direct = inverse_zeta_polynomial(g);
        IntPolynomial reduced = inverse_zeta_cyclic_reduced(g, arity, typing);
        CHECK(direct == reduced);
    }
}

TEST_CASE("closed walks of a cyclic n-partite digraph live in multiples of n") {
    BuildingGraph x2 = build_x2_component(3, 2, mdim_classes(3).at(0));
    auto counts = closed_walk_counts(x2.graph, 12);
    Mat64 b = partite_block(x2.graph, x2.arity, x2.typing);
    std::vector<Mat64> powers{b};
    for (int l = 2; l <= 6; ++l) {
        Mat64 nxt(b.n);
        const Mat64& prev = powers.back();
        for (uint32_t i = 0; i < b.n; ++i)
            for (uint32_t k = 0; k < b.n; ++k)
                for (uint32_t j = 0; j < b.n; ++j)
                    nxt.at(i, j) += prev.at(i, k) * b.at(k, j);
        powers.push_back(std::move(nxt));
    }
    // N_c(l) = 0 unless arity | l; N_c(arity*l) = arity * Tr(B^l)
    for (int l = 1; l <= 12; ++l) {
        if (l % 2 != 0) {
            CHECK(counts[l - 1] == 0);
        } else {
            Int tr = 0;
            const Mat64& p = powers[l / 2 - 1];
            for (uint32_t i = 0; i < p.n; ++i) tr += p.at(i, i);
            CHECK(counts[l - 1] == 2 * tr);
        }
    }
}

TEST_CASE("certified charpoly equals the blind route") {
    BuildingGraph x0 = build_x0_component(3, 2, 1);
    Mat64 b = cyclic_block_product(x0.graph, 2, x0.typing);
    IntPolynomial blind = charpoly_reversed(b, /*is_psd=*/true);
    IntPolynomial cert = charpoly_reversed_certified(b, {Int(2), Int(16)});
    CHECK(blind == cert);
    CHECK_THROWS_AS(charpoly_reversed_certified(b, {Int(2), Int(15)}), VerificationFailed);
    CHECK_THROWS_AS(charpoly_reversed_certified(b, {Int(2)}), VerificationFailed);
}
