#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sln/poisson.hpp"

using namespace sln;

namespace {

const BlockShape sh21(2, 1);
const BlockShape sh12(1, 2);

SuperPoly gen(GenKind k, int i, int j, int d = 3, BlockShape sh = sh21) {
    return SuperPoly::generator(sh, d, k, i, j);
}

std::vector<SuperPoly> all_generators(BlockShape sh, int d) {
    std::vector<SuperPoly> out;
    for (int i = 1; i <= sh.dim(); ++i)
        for (int j = 1; j <= sh.dim(); ++j) {
            out.push_back(SuperPoly::generator(sh, d, GenKind::Y, i, j));
            out.push_back(SuperPoly::generator(sh, d, GenKind::Z, i, j));
        }
    return out;
}

int pv(Parity p) { return p == Parity::Odd ? 1 : 0; }

} // namespace

TEST_CASE("bracket snapshots via both evaluation paths") {
    // Frozen values, committed only after bracket_sum and bracket_general
    // agreed on the full generator square.
    DoubleBasis basis(sh21);
    RMatrixTable tbl = RMatrixTable::from_pair_basis(basis);
    RadicalScalar I = RadicalScalar::i();

    auto both = [&](const SuperPoly& f, const SuperPoly& g) {
        SuperPoly s = bracket_sum(f, g, basis);
        CHECK(s == bracket_general(f, g, tbl));
        return s;
    };

    SuperPoly y11 = gen(GenKind::Y, 1, 1), y12 = gen(GenKind::Y, 1, 2);
    SuperPoly y13 = gen(GenKind::Y, 1, 3), y21 = gen(GenKind::Y, 2, 1);
    SuperPoly y22 = gen(GenKind::Y, 2, 2), z13 = gen(GenKind::Z, 1, 3);
    SuperPoly z11 = gen(GenKind::Z, 1, 1);

    CHECK(both(y11, y12) == -I * (y11 * y12 + y12));
    CHECK(both(y11, y22) == RadicalScalar(Rational(-2)) * I * (y12 * y21));
    // odd-odd pair
    CHECK(both(y13, z13) == RadicalScalar(Rational(2)) * I * (y13 * z13));
    // mixed family, even pair
    CHECK(both(y11, z13) ==
          I * (z13 + y11 * z13) -
              RadicalScalar(Rational(2)) * I * (y13 + z11 * y13));
    // an exactly vanishing pair
    CHECK(both(y12, y21).is_zero());
}

TEST_CASE("double-sum and single-sum brackets agree on all generator pairs") {
    for (BlockShape sh : {sh21, sh12}) {
        DoubleBasis basis(sh);
        RMatrixTable pair_tbl = RMatrixTable::from_pair_basis(basis);
        RMatrixTable comp_tbl = RMatrixTable::from_component_basis(basis);
        std::vector<SuperPoly> gens = all_generators(sh, 3);
        for (const SuperPoly& f : gens)
            for (const SuperPoly& g : gens) {
                SuperPoly s = bracket_sum(f, g, basis);
                CHECK(s == bracket_general(f, g, pair_tbl));
                // basis independence of the double-sum form
                CHECK(s == bracket_general(f, g, comp_tbl));
            }
    }
}

TEST_CASE("superbracket algebra laws") {
    DoubleBasis basis(sh21);
    SuperPoly y11 = gen(GenKind::Y, 1, 1), y13 = gen(GenKind::Y, 1, 3);
    SuperPoly z23 = gen(GenKind::Z, 2, 3), z22 = gen(GenKind::Z, 2, 2);
    SuperPoly one = SuperPoly::one(sh21, 3);

    // constants are central
    for (const SuperPoly& f : all_generators(sh21, 3)) {
        CHECK(bracket_sum(one, f, basis).is_zero());
        CHECK(bracket_sum(f, one, basis).is_zero());
    }

    // graded antisymmetry {f,g} = -(-1)^{|f||g|}{g,f}
    auto anti = [&](const SuperPoly& f, const SuperPoly& g) {
        SuperPoly fg = bracket_sum(f, g, basis);
        SuperPoly gf = bracket_sum(g, f, basis);
        int s = pv(f.parity()) * pv(g.parity());
        CHECK(fg == (s % 2 ? gf : -gf));
    };
    anti(y11, z22);
    anti(y11, y13);
    anti(y13, z23);

    // parity of the bracket adds
    CHECK(bracket_sum(y11, y13, basis).parity() == Parity::Odd);
    CHECK(bracket_sum(y13, gen(GenKind::Z, 1, 3), basis).parity() ==
          Parity::Even);

    // super-Leibniz {f, gh} = {f,g}h + (-1)^{|f||g|} g {f,h}
    auto leibniz = [&](const SuperPoly& f, const SuperPoly& g,
                       const SuperPoly& h) {
        SuperPoly lhs = bracket_sum(f, g * h, basis);
        SuperPoly rhs = bracket_sum(f, g, basis) * h;
        SuperPoly tail = g * bracket_sum(f, h, basis);
        int s = pv(f.parity()) * pv(g.parity());
        rhs += (s % 2) ? -tail : tail;
        CHECK(lhs == rhs);
    };
    leibniz(y11, z22, z23);
    leibniz(y13, y11, z23);
    leibniz(y13, z23, z22);
}

TEST_CASE("defect functionals vanish on samples") {
    DoubleBasis basis(sh21);
    SuperPoly y11 = gen(GenKind::Y, 1, 1), y13 = gen(GenKind::Y, 1, 3);
    SuperPoly z23 = gen(GenKind::Z, 2, 3), z22 = gen(GenKind::Z, 2, 2);

    CHECK(jacobi_defect(y11, z22, y13, basis).is_zero());
    CHECK(jacobi_defect(y13, z23, y11, basis).is_zero());
    CHECK(jacobi_defect(y13, z23, gen(GenKind::Y, 3, 1), basis).is_zero());

    CHECK(coproduct_morphism_defect(y11, y13, basis).is_zero());
    CHECK(coproduct_morphism_defect(y13, z23, basis).is_zero());

    CHECK(star_compat_defect(y11, z22, basis).is_zero());
    CHECK(star_compat_defect(y13, z23, basis).is_zero());
}

TEST_CASE("truncation bounds must match inside the bracket") {
    DoubleBasis basis(sh21);
    CHECK_THROWS_AS(bracket_sum(gen(GenKind::Y, 1, 1, 2),
                                gen(GenKind::Y, 1, 2, 3), basis),
                    TruncationMismatch);
}

TEST_CASE("identity suites pass at both orientations") {
    for (BlockShape sh : {sh21, sh12}) {
        DoubleBasis basis(sh);
        CHECK(verify_jacobi(basis, 3, 1).ok());
        CHECK(verify_coproduct_morphism(basis, 3, 1).ok());
        CHECK(verify_star_compat(basis, 3, 1).ok());
        CHECK(verify_ideals(basis, 3).ok());
        CHECK(verify_c_operator(basis, 3, 1).ok());
        CHECK(verify_wzw(sh, 3, 1).ok());
        CHECK(verify_sdet_compat(basis, 3, 1).ok());
    }
}
