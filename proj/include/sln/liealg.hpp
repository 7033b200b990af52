#ifndef SLN_LIEALG_HPP
#define SLN_LIEALG_HPP

#include "sln/report.hpp"
#include "sln/supermatrix.hpp"

#include <utility>
#include <vector>

namespace sln {

struct DualityValidationFailed : std::runtime_error {
    int i, j;
    DualityValidationFailed(int i_, int j_)
        : std::runtime_error("dual-basis Kronecker check failed at pair (" +
                             std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

/// Root vectors vs Cartan vectors; drives the sign pattern of the mixed
/// basis of the double.
enum class Family { PositiveRoot, NegativeRoot, Cartan };

struct BasisVector {
    std::string label;
    Family family;
    Parity parity;
    SuperMatrix matrix; // v_i
    SuperMatrix dual;   // v-hat_i with (v_i, v-hat_j)_sl = delta_ij
};

/// Ordered basis of sl(m|n,C): root vectors E (even, upper block),
/// E-tilde (even, lower block, with an i factor), V (odd, off-blocks),
/// Cartans H, H-tilde, H_0.  Display order: E+, E-, H, Et+, Et-, Ht, V+,
/// V-, H0, roots lexicographic in (s,t).  The Kronecker property of the
/// duals is validated at construction.
class SlBasis {
public:
    explicit SlBasis(BlockShape shape);

    const BlockShape& shape() const { return shape_; }
    int dim() const { return static_cast<int>(vectors_.size()); }
    const std::vector<BasisVector>& vectors() const { return vectors_; }
    const BasisVector& operator[](int i) const { return vectors_[i]; }

private:
    BlockShape shape_;
    std::vector<BasisVector> vectors_;
};

struct DoubleBasisVector {
    std::string label;
    Family family;
    int parity; // 0 or 1
    DoubleElement T; // diagonal element (v, v)
    DoubleElement t; // dual partner in b: sp_double(T_i, t_j) = delta_ij
};

/// The pair of bases of the double d = sl (+) sl: T_i spans the diagonal
/// copy g, t_i spans the Borel-type complement b.  Duals: T-hat_i = t_i,
/// t-hat_i = (-1)^{|i|} T_i.
class DoubleBasis {
public:
    explicit DoubleBasis(BlockShape shape);

    const BlockShape& shape() const { return sl_.shape(); }
    const SlBasis& sl() const { return sl_; }
    int dim() const { return static_cast<int>(vectors_.size()); }
    const std::vector<DoubleBasisVector>& vectors() const { return vectors_; }
    const DoubleBasisVector& operator[](int i) const { return vectors_[i]; }

    DoubleElement T_hat(int i) const { return vectors_[i].t; }
    DoubleElement t_hat(int i) const {
        return vectors_[i].parity ? -vectors_[i].T : vectors_[i].T;
    }

    /// Coefficients of x on the T_k (resp. t_k): a_k = (x, t_k)_d and
    /// b_k = (-1)^{|k|} (x, T_k)_d, so that x = sum a_k T_k + sum b_k t_k.
    std::vector<RadicalScalar> g_coefficients(const DoubleElement& x) const;
    std::vector<RadicalScalar> b_coefficients(const DoubleElement& x) const;

private:
    SlBasis sl_;
    std::vector<DoubleBasisVector> vectors_;
};

SlBasis build_sl_basis(BlockShape shape);
DoubleBasis build_double_basis(BlockShape shape);

/// Triangular pieces of a supermatrix.
SuperMatrix strict_upper(const SuperMatrix& m);
SuperMatrix strict_lower(const SuperMatrix& m);
SuperMatrix diagonal_part(const SuperMatrix& m);

/// Splits x = g_part + b_part along d = g (+) b: with x = (A, B),
/// C = A_+ + B_- + (A_0 + B_0)/2, g_part = (C, C), b_part = (A-C, B-C).
std::pair<DoubleElement, DoubleElement> decompose(const DoubleElement& x);

/// R = P_b - P_g.
DoubleElement r_operator(const DoubleElement& x);

/// Graded real structure on one copy: M -> -(-1)^{|M|} conj(M)^st.
SuperMatrix phi_sl(const SuperMatrix& m);

/// Graded real structure on the double: (A, B) ->
/// (-(-1)^{|B|} conj(B)^st, -(-1)^{|A|} conj(A)^st).
DoubleElement phi_double(const DoubleElement& x);

/// Modified Yang-Baxter identity, R-antisymmetry, phi R = R phi and
/// conjugation-compatibility of the pairing, exhaustively on T u t pairs.
SuiteResult verify_baxter(const DoubleBasis& basis);

/// Manin supertriple: isotropy of g and b, closure of both under the
/// superbracket (by coefficient extraction), non-degeneracy of the pairing,
/// and the dual-basis reconstruction roundtrip.
SuiteResult verify_manin(const DoubleBasis& basis);

/// Triangular decomposition properties of sl(m|n): the three
/// pieces are subalgebras, the Cartan part normalizes them, and the
/// orthogonality relations hold on basis elements.
SuiteResult verify_triangular(const SlBasis& basis);

/// Real dimensions of the phi fixed-point sets in g: {even, odd}, computed
/// by exact rational elimination of the real-linear fixed-point system.
std::pair<int, int> phi_fixed_dimensions(BlockShape shape);

/// Structure constants of g (on T) and b (on t) as JSON lines
/// {"basis":"T"|"t","i":i,"j":j,"k":k,"value":"..."} (0-based indices,
/// nonzero entries only).
std::string structure_constants_json(const DoubleBasis& basis);

} // namespace sln

#endif
