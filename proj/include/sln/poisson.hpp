#ifndef SLN_POISSON_HPP
#define SLN_POISSON_HPP

#include "sln/calculus.hpp"
#include "sln/liealg.hpp"
#include "sln/report.hpp"

namespace sln {

/// r-matrix coefficients r^{ab} = (1/2) sp_double(R(h^_a), h^_b) over a dual
/// pair (h, h^) of the double.  Only nonzero cells are stored; R is even, so
/// r^{ab} = 0 whenever |h_a| != |h_b|.
struct RMatrixTable {
    std::vector<DoubleElement> h;
    std::vector<DoubleElement> h_hat;
    struct Cell {
        int a, b;
        RadicalScalar value;
    };
    std::vector<Cell> cells;

    /// Combined (T, t) basis with duals (t, (-1)^{|i|} T).
    static RMatrixTable from_pair_basis(const DoubleBasis& basis);
    /// Component basis e = {(v,0)} u {(0,v)} with duals {(v^,0)} u {(0,-v^)}.
    static RMatrixTable from_component_basis(const DoubleBasis& basis);
};

/// Double-sum form of the Poisson superbracket:
/// {f,g} = sum_{a,b} (-1)^{|f||a|} r^{ab}
///         [nabla^L_{h_a}f nabla^L_{h_b}g - nabla^R_{h_a}f nabla^R_{h_b}g].
SuperPoly bracket_general(const SuperPoly& f, const SuperPoly& g,
                          const RMatrixTable& table);

/// Single-sum form over the (T, t) pair:
/// {f,g} = sum_i (-1)^{|i||f|}
///         (nabla^L_{T_i}f nabla^L_{t_i}g - nabla^R_{T_i}f nabla^R_{t_i}g).
SuperPoly bracket_sum(const SuperPoly& f, const SuperPoly& g,
                      const DoubleBasis& basis);

/// Cyclic signed Jacobi sum (-1)^{|f||h|}{f,{g,h}} + cyclic; expected zero.
SuperPoly jacobi_defect(const SuperPoly& f, const SuperPoly& g,
                        const SuperPoly& h, const DoubleBasis& basis);

/// Delta{f,g} - {Delta f, Delta g} with the tensor bracket
/// {f1 (x) f2, g1 (x) g2} = (-1)^{|f2||g1|}({f1,g1} (x) f2 g2
///                                          + f1 g1 (x) {f2,g2}).
TensorPoly coproduct_morphism_defect(const SuperPoly& f, const SuperPoly& g,
                                     const DoubleBasis& basis);

/// {f*, g*} - {f,g}*, computed at truncation bound D+1 and truncated back to
/// degree <= D so that series top-degree artifacts cannot leak in.
SuperPoly star_compat_defect(const SuperPoly& f, const SuperPoly& g,
                             const DoubleBasis& basis);

enum class IdealName { I, J };

/// Identity suites.  Generator pairs/triples are exhausted when m+n <= 3 and
/// pseudo-randomly sampled (recorded seed) otherwise.
SuiteResult verify_jacobi(const DoubleBasis& basis, int degree,
                          unsigned long long seed);
SuiteResult verify_coproduct_morphism(const DoubleBasis& basis, int degree,
                                      unsigned long long seed);
SuiteResult verify_star_compat(const DoubleBasis& basis, int degree,
                               unsigned long long seed);
SuiteResult verify_ideals(const DoubleBasis& basis, int degree);
SuiteResult verify_c_operator(const DoubleBasis& basis, int degree,
                              unsigned long long seed);
SuiteResult verify_wzw(const BlockShape& shape, int degree,
                       unsigned long long seed);
SuiteResult verify_sdet_compat(const DoubleBasis& basis, int degree,
                               unsigned long long seed);

} // namespace sln

#endif
