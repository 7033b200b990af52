#ifndef SLN_CALCULUS_HPP
#define SLN_CALCULUS_HPP

#include "sln/hopf.hpp"

namespace sln {

struct RankMismatch : std::runtime_error {
    RankMismatch() : std::runtime_error("operator list does not match tensor rank") {}
};

/// Counit-derivation attached to a matrix pair: kills constants and all
/// monomials of degree != 1, reads the linear part against (A, B).
struct EpsDerivation {
    DoubleElement matrix;

    Parity parity() const { return matrix.parity(); }
};

RadicalScalar eps_apply(const EpsDerivation& d, const SuperPoly& f);

/// Bracket of two counit-derivations evaluated on f:
/// d1(f')d2(f'') - (-1)^{|d1||d2|} d2(f')d1(f'').
RadicalScalar eps_bracket_apply(const EpsDerivation& d1, const EpsDerivation& d2,
                                const SuperPoly& f);

enum class Side { L, R };

/// Right-invariant superderivation (delta (x) id) Delta: on matrix entries
/// acts by left matrix multiplication, nabla^R u_ij = sum_k A_ik u_kj.
SuperPoly nabla_R(const DoubleElement& m, const SuperPoly& f);

/// Left-invariant superderivation, the signed (id (x) delta) Delta:
/// nabla^L u_ij = (-1)^{|M|(|i|+|j|+1)} sum_k u_ik A_kj.
SuperPoly nabla_L(const DoubleElement& m, const SuperPoly& f);

/// Coproduct-path evaluations, kept as cross-check oracles for the closed
/// matrix forms above.
SuperPoly nabla_R_via_coproduct(const DoubleElement& m, const SuperPoly& f);
SuperPoly nabla_L_via_coproduct(const DoubleElement& m, const SuperPoly& f);

SuperPoly nabla(Side side, const DoubleElement& m, const SuperPoly& f);

/// Slotwise application of derivation operators to a tensor with the Koszul
/// prefactor (-1)^{sum_i |op_i| sum_{j<i} |slot_j|} (each operator crosses
/// the slots in front of its own), then multiplication of the slot results.
SuperPoly tensor_eval(const std::vector<std::pair<Side, DoubleElement>>& ops,
                      const TensorPoly& t);

} // namespace sln

#endif
