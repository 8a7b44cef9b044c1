#include <k3lat/mukai.hpp>

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace k3lat;

namespace {

// exhaustive oracle: walk every non-increasing integer tuple with bounded
// parts and keep the ones matching degree and h^0; the positive parts are
// capped by h0, so |part| <= |deg| + rank * (h0 + 1) covers everything
std::vector<std::vector<Int>> splitting_types_oracle(int rank, const Int& degree, const Int& h0) {
    long bound = static_cast<long>(abs_int(degree)) + rank * (static_cast<long>(h0) + 1);
    std::vector<std::vector<Int>> out;
    std::vector<long> cur(rank);
    auto rec = [&](auto&& self, int pos, long hi) -> void {
        if (pos == rank) {
            Int d = 0, h = 0;
            for (long a : cur) {
                d += a;
                if (a >= 0) h += a + 1;
            }
            if (d == degree && h == h0) {
                std::vector<Int> t(cur.begin(), cur.end());
                out.push_back(t);
            }
            return;
        }
        for (long a = hi; a >= -bound; --a) {
            cur[pos] = a;
            self(self, pos + 1, a);
        }
    };
    rec(rec, 0, bound);
    return out;
}

} // namespace

TEST_CASE("mukai pairing and chern data") {
    NSContext y{rank1(8)};
    MukaiVector v{2, {Int(1)}, 2};
    CHECK(mukai_pairing(v, v, y) == 0);
    CHECK(is_isotropic(v, y));
    CHECK(from_chern(2, {Int(1)}, 4, y).s == 2);

    MukaiVector w{1, {Int(0)}, 1};
    CHECK(mukai_pairing(v, w, y) == -4);
    CHECK(mukai_pairing(v, w, y) == mukai_pairing(w, v, y));

    NSContext odd{Lattice(IntMat{{Int(1)}})};
    CHECK_THROWS_AS(from_chern(1, {Int(1)}, 0, odd), std::invalid_argument);
    CHECK_THROWS_AS(mukai_pairing(v, MukaiVector{1, {}, 1}, y), std::invalid_argument);
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(MukaiVector{2, {Int(1)}, 2}));
    CHECK_FALSE(is_primitive(MukaiVector{2, {Int(4)}, 2}));
    CHECK(is_primitive(MukaiVector{0, {Int(0)}, 1}));
    CHECK_FALSE(is_primitive(MukaiVector{0, {Int(0)}, 0}));
}

TEST_CASE("fineness index") {
    NSContext y{rank1(8)};
    CHECK(fineness_index(MukaiVector{2, {Int(1)}, 2}, y) == 2);

    NSContext line{Lattice(IntMat{{Int(8), Int(1)}, {Int(1), Int(-2)}})};
    MukaiVector vl{2, {Int(1), Int(0)}, 2};
    CHECK(fineness_index(vl, line) == 1);
    CHECK(mukai_pairing(MukaiVector{0, {Int(0), Int(1)}, 0}, vl, line) == 1);

    NSContext beta{Lattice(IntMat{{Int(2), Int(3)}, {Int(3), Int(0)}})};
    MukaiVector vb{2, {Int(1), Int(1)}, 2};
    CHECK(mukai_pairing(MukaiVector{0, {Int(0), Int(1)}, 0}, vb, beta) == 3);
    CHECK(fineness_index(vb, beta) == 1);

    CHECK_THROWS_AS(fineness_index(MukaiVector{0, {Int(0)}, 0}, y), std::invalid_argument);
}

TEST_CASE("fineness divides every pairing") {
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 3;
        IntMat g = testing::random_symmetric(rng, n, -4, 4);
        for (std::size_t i = 0; i < n; ++i) g(i, i) = 2 * g(i, i);  // keep the form even
        NSContext ctx{Lattice(g)};
        MukaiVector v{entry(rng), {}, entry(rng)};
        for (std::size_t i = 0; i < n; ++i) v.c1.push_back(entry(rng));
        if (v.is_zero()) continue;
        Int f = fineness_index(v, ctx);
        MukaiVector u{entry(rng), {}, entry(rng)};
        for (std::size_t i = 0; i < n; ++i) u.c1.push_back(entry(rng));
        CHECK(mukai_pairing(u, v, ctx) % f == 0);
    }
}

TEST_CASE("even fineness on the sextic double plane") {
    // (2, D, 2m) on NS = <2>: every generator pairing is even, so n = 2
    NSContext m{rank1(2)};
    for (int mm = 1; mm <= 10; ++mm)
        CHECK(fineness_index(MukaiVector{2, {Int(1)}, 2 * mm}, m) == 2);
}

TEST_CASE("obstruction residues") {
    NSContext y{rank1(8)};
    MukaiVector v{2, {Int(1)}, 2};
    CHECK(obstruction_residue(MukaiVector{1, {Int(0)}, 0}, v, y) == 0);   // -2 mod 2
    CHECK(obstruction_residue(MukaiVector{0, {Int(1)}, 0}, v, y) == 0);   // 8 mod 2
    CHECK(obstruction_residue(MukaiVector{1, {Int(0)}, 1}, v, y) == 0);
    CHECK(obstruction_residue(MukaiVector{1, {Int(1)}, 0}, v, y) == 0);
    // odd pairing against an n = 1 vector is trivially 0 mod 1
    NSContext line{Lattice(IntMat{{Int(8), Int(1)}, {Int(1), Int(-2)}})};
    CHECK(obstruction_residue(MukaiVector{0, {Int(0), Int(1)}, 0},
                              MukaiVector{2, {Int(1), Int(0)}, 2}, line) == 0);
}

TEST_CASE("splitting types") {
    SECTION("no sections, degree -2") {
        auto t = p1_splitting_types(2, -2, 0);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == std::vector<Int>{Int(-1), Int(-1)});
    }
    SECTION("one section, degree -2") {
        auto t = p1_splitting_types(2, -2, 1);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == std::vector<Int>{Int(0), Int(-2)});
    }
    SECTION("line bundles") {
        auto t = p1_splitting_types(1, 2, 3);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == std::vector<Int>{Int(2)});
        CHECK(p1_splitting_types(1, 2, 2).empty());
        CHECK(p1_splitting_types(1, -3, 0).size() == 1);
    }
    SECTION("matches the exhaustive oracle") {
        for (int rank = 1; rank <= 3; ++rank)
            for (long deg = -4; deg <= 4; ++deg)
                for (long h0 = 0; h0 <= 7; ++h0) {
                    auto fast = p1_splitting_types(rank, deg, h0);
                    auto slow = splitting_types_oracle(rank, deg, h0);
                    std::sort(fast.begin(), fast.end());
                    std::sort(slow.begin(), slow.end());
                    CHECK(fast == slow);
                }
    }
    CHECK_THROWS_AS(p1_splitting_types(0, 0, 0), std::invalid_argument);
}

TEST_CASE("schubert pairings") {
    CHECK(schubert_pairing({2}, {2}) == 1);
    CHECK(schubert_pairing({1, 1}, {1, 1}) == 1);
    CHECK(schubert_pairing({2}, {1, 1}) == 0);
    CHECK(schubert_pairing({1, 1}, {2}) == 0);
    CHECK(schubert_pairing({2, 0}, {2}) == 1);  // trailing zeros allowed
    CHECK_THROWS_AS(schubert_pairing({3}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(schubert_pairing({1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(schubert_pairing({1, 1, 1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(schubert_pairing({1, 2}, {2}), std::invalid_argument);
}
