#include <k3lat/fibration.hpp>

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace k3lat;

namespace {

BinForm monomial(int degree, int s_power, int coeff = 1) {
    BinForm f(degree);
    f.c[s_power] = coeff;
    return f;
}

WeierstrassModel sample_model() {
    BinForm g2(8);
    g2.c[0] = 1;
    g2.c[8] = 1;  // t^8 + s^8
    return WeierstrassModel{g2, monomial(12, 12)};  // g3 = s^12
}

} // namespace

TEST_CASE("fibration index") {
    Lattice ma(IntMat{{Int(2), Int(0)}, {Int(0), Int(-2)}});
    CHECK(fibration_index({ma, {Int(1), Int(-1)}}) == 2);

    Lattice mb(IntMat{{Int(2), Int(3)}, {Int(3), Int(0)}});
    CHECK(fibration_index({mb, {Int(0), Int(1)}}) == 3);

    // a section forces index 1
    Lattice sec(IntMat{{Int(-2), Int(1)}, {Int(1), Int(0)}});
    CHECK(fibration_index({sec, {Int(0), Int(1)}}) == 1);

    Lattice j3(IntMat{{Int(0), Int(2)}, {Int(2), Int(0)}});
    CHECK(fibration_index({j3, {Int(1), Int(0)}}) == 2);

    CHECK_THROWS_AS(fibration_index({ma, {Int(0), Int(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(fibration_index({ma, {Int(1), Int(0)}}), std::invalid_argument);  // not isotropic
    CHECK_THROWS_AS(fibration_index({ma, {Int(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(fibration_index({Lattice(IntMat(1, 1)), {Int(1)}}), std::invalid_argument);
}

TEST_CASE("discriminant form") {
    WeierstrassModel w = sample_model();
    BinForm delta = discriminant_form(w);
    CHECK(delta.degree == 24);
    // (t^8 + s^8)^3 - 27 s^24
    CHECK(delta.c[0] == 1);
    CHECK(delta.c[8] == 3);
    CHECK(delta.c[16] == 3);
    CHECK(delta.c[24] == Rat(1 - 27));
    CHECK_THROWS_AS(WeierstrassModel(BinForm(7), BinForm(12)), std::invalid_argument);
}

TEST_CASE("model validity") {
    CHECK(is_valid(sample_model()));

    // multiplicity-(4, 6) point at t = 0 collapses the model
    CHECK_FALSE(is_valid(WeierstrassModel{monomial(8, 4), monomial(12, 6)}));

    // same degeneracy at infinity (s = 0)
    CHECK_FALSE(is_valid(WeierstrassModel{monomial(8, 0), monomial(12, 0)}));

    // g2 = t^4 s^4 against g3 = (t - s)^12: the bad loci are disjoint
    {
        BinForm tms(1);
        tms.c[0] = 1;
        tms.c[1] = -1;
        CHECK(is_valid(WeierstrassModel{monomial(8, 4), tms.pow(12)}));
    }

    // zero g3 with squarefree g2 is fine; zero g3 with a 4-fold zero is not
    {
        BinForm g2(8);
        for (int i = 0; i <= 8; ++i) g2.c[i] = i + 1;
        auto dec = squarefree_decomposition(g2);
        bool squarefree = dec.size() == 1 && dec[0].multiplicity == 1;
        if (squarefree) CHECK(is_valid(WeierstrassModel{g2, BinForm(12)}));
        CHECK_FALSE(is_valid(WeierstrassModel{monomial(8, 4), BinForm(12)}));
    }

    // zero g2: valid iff g3 has no 6-fold zero
    {
        BinForm g3(12);
        g3.c[0] = 1;
        g3.c[12] = 1;
        CHECK(is_valid(WeierstrassModel{BinForm(8), g3}));
        CHECK_FALSE(is_valid(WeierstrassModel{BinForm(8), monomial(12, 6)}));
    }

    // both zero: discriminant vanishes
    CHECK_FALSE(is_valid(WeierstrassModel{BinForm(8), BinForm(12)}));
}

TEST_CASE("nodal fiber count") {
    CHECK(nodal_fiber_count(sample_model()) == 24);

    // oracle: degree of Delta / gcd(Delta, Delta') counts distinct roots;
    // simple roots are those not shared with the derivative part
    {
        WeierstrassModel w = sample_model();
        BinForm delta = discriminant_form(w);
        Int total = 0;
        for (const auto& [factor, mult] : squarefree_decomposition(delta))
            total += Int(factor.degree) * mult;
        CHECK(total == 24);  // sample discriminant has only simple roots
    }

    // g2 = t^8, g3 = 0 gives Delta = t^24, one root of multiplicity 24
    CHECK(nodal_fiber_count(WeierstrassModel{monomial(8, 0), BinForm(12)}) == 0);

    CHECK_THROWS_AS(nodal_fiber_count(WeierstrassModel{BinForm(8), BinForm(12)}),
                    std::invalid_argument);
}

TEST_CASE("j-map degree") {
    CHECK(j_degree(sample_model()) == 24);

    // constant j when g2 vanishes
    CHECK(j_degree(WeierstrassModel{BinForm(8), monomial(12, 0)}) == 0);

    // g3 = 0: j = 1728 everywhere on the base, g2^3 = Delta, degree 0
    CHECK(j_degree(WeierstrassModel{monomial(8, 0), BinForm(12)}) == 0);

    // invariant: j_degree + deg gcd(g2^3, Delta) = 24 whenever g2 != 0
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> coef(-2, 2);
    int done = 0;
    while (done < 30) {
        BinForm g2(8), g3(12);
        for (auto& x : g2.c) x = coef(rng);
        for (auto& x : g3.c) x = coef(rng);
        if (g2.is_zero()) continue;
        WeierstrassModel w{g2, g3};
        BinForm delta = discriminant_form(w);
        if (delta.is_zero()) continue;
        CHECK(j_degree(w) + Int(poly_gcd(g2.pow(3), delta).degree) == 24);
        ++done;
    }
}

TEST_CASE("jacobian kernels") {
    Lattice tj(IntMat{{Int(2), Int(0)}, {Int(0), Int(-2)}});
    auto [k2, n2] = jacobian_kernel(tj, Character(tj, 2, {Int(1), Int(0)}));
    CHECK(n2 == 2);
    CHECK(sublattice_index(k2) == 2);

    auto [k3e, n3] = jacobian_kernel(tj, Character(tj, 3, {Int(1), Int(1)}));
    CHECK(n3 == 3);
    CHECK(sublattice_index(k3e) == 3);

    auto [k0, n0] = jacobian_kernel(tj, Character(tj, 5, {Int(0), Int(0)}));
    CHECK(n0 == 1);
    CHECK(k0.hnf_basis() == IntMat::identity(2));

    Lattice other(IntMat::identity(2));
    CHECK_THROWS_AS(jacobian_kernel(tj, Character(other, 2, {Int(1), Int(0)})),
                    std::invalid_argument);
}
