#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sln/supermatrix.hpp"

using namespace sln;

namespace {
const BlockShape sh21(2, 1);
RadicalScalar I() { return RadicalScalar::i(); }
} // namespace

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(BlockShape(2, 2), EqualDimensions);
    CHECK_THROWS_AS(BlockShape(0, 1), InvalidShape);
    CHECK(sh21.index_parity(1) == 0);
    CHECK(sh21.index_parity(2) == 0);
    CHECK(sh21.index_parity(3) == 1);
}

TEST_CASE("unit matrices and parity tags") {
    SuperMatrix e12 = SuperMatrix::unit(sh21, 1, 2);
    SuperMatrix e13 = SuperMatrix::unit(sh21, 1, 3);
    CHECK(e12.parity() == Parity::Even);
    CHECK(e13.parity() == Parity::Odd);
    CHECK_NOTHROW(e12.validate());
    CHECK_NOTHROW(e13.validate());

    SuperMatrix mixed = e12 + e13;
    CHECK(mixed.parity() == Parity::Inhomogeneous);
    CHECK_NOTHROW(mixed.validate());

    SuperMatrix lying = e13;
    lying.set_parity(Parity::Even);
    CHECK_THROWS_AS(lying.validate(), ParityMismatch);
}

TEST_CASE("supertrace") {
    SuperMatrix m = SuperMatrix::zero(sh21);
    m.at(1, 1) = RadicalScalar(2);
    m.at(2, 2) = RadicalScalar(3);
    m.at(3, 3) = RadicalScalar(5);
    CHECK(supertrace(m) == RadicalScalar(0)); // 2 + 3 - 5
    CHECK(supertrace(SuperMatrix::identity(sh21)) == RadicalScalar(1)); // m - n
}

TEST_CASE("superbracket signs") {
    // Even pair: E_12, E_21 -> commutator E_11 - E_22.
    SuperMatrix e12 = SuperMatrix::unit(sh21, 1, 2);
    SuperMatrix e21 = SuperMatrix::unit(sh21, 2, 1);
    SuperMatrix c = superbracket(e12, e21);
    SuperMatrix want = SuperMatrix::unit(sh21, 1, 1) - SuperMatrix::unit(sh21, 2, 2);
    want.set_parity(Parity::Even);
    CHECK(c == want);

    // Odd pair: E_13, E_31 -> anticommutator E_11 + E_33.
    SuperMatrix e13 = SuperMatrix::unit(sh21, 1, 3);
    SuperMatrix e31 = SuperMatrix::unit(sh21, 3, 1);
    SuperMatrix a = superbracket(e13, e31);
    SuperMatrix want2 = SuperMatrix::unit(sh21, 1, 1) + SuperMatrix::unit(sh21, 3, 3);
    CHECK(a == want2);
    CHECK(supertrace(a) == RadicalScalar(0));

    SuperMatrix mixed = e12 + e13;
    CHECK_THROWS_AS(superbracket(mixed, e12), InhomogeneousOperand);
}

TEST_CASE("superbracket super-antisymmetry and Jacobi on units") {
    std::vector<SuperMatrix> basis;
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t)
            if (s != t) basis.push_back(SuperMatrix::unit(sh21, s, t));
    auto pv = [](const SuperMatrix& x) { return parity_value(x.parity()); };
    for (const auto& x : basis)
        for (const auto& y : basis) {
            int sign = pv(x) * pv(y);
            SuperMatrix lhs = superbracket(x, y);
            SuperMatrix rhs = superbracket(y, x);
            CHECK(lhs == (sign ? rhs : -rhs));
            for (const auto& z : basis) {
                // graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
                SuperMatrix l = superbracket(x, superbracket(y, z));
                SuperMatrix r = superbracket(superbracket(x, y), z);
                SuperMatrix k = superbracket(y, superbracket(x, z));
                SuperMatrix rr = pv(x) * pv(y) ? r - k : r + k;
                CHECK(l == rr);
            }
        }
}

TEST_CASE("supertranspose") {
    // st is the plain transpose with a sign flipped on the lower-left block.
    SuperMatrix e13 = SuperMatrix::unit(sh21, 1, 3);
    SuperMatrix e31 = SuperMatrix::unit(sh21, 3, 1);
    CHECK(supertranspose(e13) == -e31);
    CHECK(supertranspose(e31) == e13);
    // st^2 = sign twist, st^4 = id on odd elements
    SuperMatrix twice = supertranspose(supertranspose(e13));
    CHECK(twice == -e13);
    // st is a superalgebra antihomomorphism on even elements
    SuperMatrix e12 = SuperMatrix::unit(sh21, 1, 2);
    SuperMatrix e21 = SuperMatrix::unit(sh21, 2, 1);
    CHECK(supertranspose(e12 * e21) == supertranspose(e21) * supertranspose(e12));
    // Str is st-invariant
    SuperMatrix g = e13 + RadicalScalar(2) * e12;
    for (const auto& x : {e12, e21, e13, e31, g})
        CHECK(supertrace(supertranspose(x)) == supertrace(x));
}

TEST_CASE("sp_sl is the normalized supertrace form") {
    SuperMatrix e13 = SuperMatrix::unit(sh21, 1, 3);
    SuperMatrix e31 = SuperMatrix::unit(sh21, 3, 1);
    // Str(E_13 E_31) = Str(E_11) = 1, so (E_13,E_31) = -i/2.
    CHECK(sp_sl(e13, e31) == RadicalScalar::gaussian(Rational(0), Rational(-1, 2)));
    // super-symmetry: (x,y) = (-1)^{|x||y|} (y,x)
    CHECK(sp_sl(e31, e13) == -sp_sl(e13, e31));
    SuperMatrix e12 = SuperMatrix::unit(sh21, 1, 2);
    SuperMatrix e21 = SuperMatrix::unit(sh21, 2, 1);
    CHECK(sp_sl(e12, e21) == sp_sl(e21, e12));
    // invariance: ([x,y],z) = (x,[y,z])
    for (const auto& x : {e12, e13})
        for (const auto& y : {e21, e31})
            for (const auto& z : {e12, e31})
                CHECK(sp_sl(superbracket(x, y), z) == sp_sl(x, superbracket(y, z)));
}

TEST_CASE("double elements") {
    SuperMatrix h = SuperMatrix::unit(sh21, 1, 1) - SuperMatrix::unit(sh21, 2, 2);
    h.set_parity(Parity::Even);
    SuperMatrix z = SuperMatrix::zero(sh21);
    DoubleElement x(h, z);
    CHECK(x.in_double());
    CHECK(x.parity() == Parity::Even);
    DoubleElement bad(SuperMatrix::unit(sh21, 1, 1), z);
    CHECK_FALSE(bad.in_double());

    SuperMatrix e13 = SuperMatrix::unit(sh21, 1, 3);
    DoubleElement odd(e13, SuperMatrix::zero(sh21, Parity::Odd));
    CHECK(odd.parity() == Parity::Odd);

    // pairing: ((A,B),(C,D)) = (A,C) - (B,D)
    DoubleElement y(z, h);
    CHECK(sp_double(x, x) == sp_sl(h, h));
    CHECK(sp_double(y, y) == -sp_sl(h, h));
    CHECK(sp_double(x, y) == RadicalScalar(0));

    // componentwise bracket
    DoubleElement br = superbracket(DoubleElement(e13, e13), DoubleElement(h, z));
    CHECK(br.first == superbracket(e13, h));
    CHECK(br.second.is_zero());
}
