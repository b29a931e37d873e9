#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "titszeta/partitions.hpp"
#include "titszeta/subspace.hpp"

using namespace titszeta;

TEST_CASE("canonicalize basics") {
    const auto& f2 = make_field(2);
    Subspace s = canonicalize({{1, 1}, {0, 0}}, 2, f2);
    CHECK(s.dim() == 1);
    CHECK(s.rows == std::vector<std::vector<uint32_t>>{{1, 1}});

    // hand row-reduction: {(1,0,1),(1,1,0)} -> {(1,0,1),(0,1,1)}
    Subspace t = canonicalize({{1, 0, 1}, {1, 1, 0}}, 3, f2);
    CHECK(t.rows == std::vector<std::vector<uint32_t>>{{1, 0, 1}, {0, 1, 1}});

    // idempotence
    Subspace tt = canonicalize(t.rows, 3, f2);
    CHECK(tt == t);

    CHECK_THROWS_AS(canonicalize({{0, 0}}, 2, f2), ZeroSpace);
}

TEST_CASE("sum, intersect, direct sum") {
    const auto& f2 = make_field(2);
    Subspace e1 = canonicalize({{1, 0}}, 2, f2);
    Subspace e2 = canonicalize({{0, 1}}, 2, f2);
    CHECK(is_direct_sum(e1, e2, f2));
    CHECK_FALSE(is_direct_sum(e1, e1, f2));

    // in F_2^3: <e1> + <e1+e2, e3> spans everything, intersection is zero
    Subspace a = canonicalize({{1, 0, 0}}, 3, f2);
    Subspace b = canonicalize({{1, 1, 0}, {0, 0, 1}}, 3, f2);
    CHECK(sum(a, b, f2).dim() == 3);
    CHECK(intersect(a, b, f2).dim() == 0);
    CHECK(is_direct_sum(a, b, f2));

    const auto& f3 = make_field(3);
    Subspace c = canonicalize({{1, 0}}, 2, f3);
    CHECK_THROWS_AS(sum(a, c, f3), AmbientMismatch);
}

TEST_CASE("Grassmann dimension identity on sampled pairs") {
    for (uint32_t q : {2u, 3u}) {
        const auto& f = make_field(q);
        auto all2 = enumerate_grassmannian(4, 2, f);
        for (size_t i = 0; i < all2.size(); i += 3)
            for (size_t j = 0; j < all2.size(); j += 5) {
                const auto& a = all2[i];
                const auto& b = all2[j];
                CHECK(sum(a, b, f).dim() + intersect(a, b, f).dim() == a.dim() + b.dim());
            }
    }
}

TEST_CASE("grassmannian counts match gaussian binomials") {
    const auto& f2 = make_field(2);
    CHECK(enumerate_grassmannian(2, 1, f2).size() == 3);
    CHECK(enumerate_grassmannian(4, 2, f2).size() == 35);
    const auto& f3 = make_field(3);
    CHECK(enumerate_grassmannian(3, 2, f3).size() == 13);
    for (uint32_t q : {2u, 3u}) {
        const auto& f = make_field(q);
        for (uint32_t n = 2; n <= 6; ++n)
            for (uint32_t k = 1; k < n; ++k) {
                Int expect = q_binomial(n, k, Int(q));
                CHECK(Int(enumerate_grassmannian(n, k, f).size()) == expect);
            }
    }
    CHECK_THROWS_AS(enumerate_grassmannian(3, 0, f2), BadDimension);
    CHECK_THROWS_AS(enumerate_grassmannian(3, 3, f2), BadDimension);
}

TEST_CASE("grassmannian is sorted and duplicate-free") {
    const auto& f = make_field(3);
    auto g = enumerate_grassmannian(4, 2, f);
    for (size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
}

TEST_CASE("directed flag enumeration") {
    const auto& f2 = make_field(2);
    auto fl12 = enumerate_directed_flags(3, f2, {1, 2});
    CHECK(fl12.size() == 21);
    auto fl21 = enumerate_directed_flags(3, f2, {2, 1});
    CHECK(fl21.size() == 21);
    auto fl12_4 = enumerate_directed_flags(4, f2, {1, 2});
    CHECK(fl12_4.size() == 105);

    // reversal is an involution between the two enumerations
    for (const auto& fl : fl12) {
        DirectedFlag rev = fl.reversed();
        CHECK(std::find(fl21.begin(), fl21.end(), rev) != fl21.end());
        CHECK(rev.reversed() == fl);
    }
    for (const auto& fl : fl12) {
        CHECK(fl.first.dim() == 1);
        CHECK(fl.second.dim() == 2);
        CHECK(contains(fl.second, fl.first, f2));
    }
    CHECK_THROWS_AS(enumerate_directed_flags(3, f2, {1, 1}), BadMultiDimension);
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    CacheConfig cfg;
    cfg.enabled = true;
    cfg.dir = (fs::temp_directory_path() / "titszeta-test-cache").string();
    fs::remove_all(cfg.dir);
    const auto& f = make_field(3);
    auto fresh = enumerate_grassmannian_cached(3, 1, f, cfg);
    CHECK(fs::exists(cfg.dir + "/grassmannian_n3_q3_k1.json"));
    auto cached = enumerate_grassmannian_cached(3, 1, f, cfg);
    CHECK(fresh.size() == cached.size());
    for (size_t i = 0; i < fresh.size(); ++i) CHECK(fresh[i] == cached[i]);
    fs::remove_all(cfg.dir);
}

TEST_CASE("row packing") {
    std::vector<uint32_t> row{2, 0, 1};
    uint64_t v = pack_row(row, 3);
    CHECK(unpack_row(v, 3, 3) == row);
}
