#ifndef SLN_DUALITY_HPP
#define SLN_DUALITY_HPP

#include "sln/hopf.hpp"
#include "sln/liealg.hpp"
#include "sln/report.hpp"

#include <map>

namespace sln {

struct NotInKernel : std::runtime_error {
    NotInKernel() : std::runtime_error("element has nonzero counit") {}
};

/// Class of a counit-kernel element modulo squares: only the linear part of
/// a representative survives, stored as coordinates on the generators.
struct CotangentVector {
    BlockShape shape;
    std::map<GeneratorId, RadicalScalar> coordinates;

    explicit CotangentVector(BlockShape sh = BlockShape(1, 0)) : shape(sh) {}

    bool is_zero() const { return coordinates.empty(); }
    Parity parity() const;

    void add(const GeneratorId& g, const RadicalScalar& c);

    CotangentVector& operator+=(const CotangentVector& o);
    friend CotangentVector operator*(const RadicalScalar& c,
                                     const CotangentVector& v);
    friend bool operator==(const CotangentVector& a, const CotangentVector& b) {
        return a.coordinates == b.coordinates;
    }
    friend bool operator!=(const CotangentVector& a, const CotangentVector& b) {
        return !(a == b);
    }
    std::string str() const;
};

/// Canonical projection onto the cotangent space: extracts the linear part.
/// Throws NotInKernel when the counit of f is nonzero.
CotangentVector omega(const SuperPoly& f);

/// <delta_{(A,B)}, w>: contracts y-coordinates against A, z- (and x-)
/// coordinates against B (resp. A).
RadicalScalar pair_delta(const DoubleElement& m, const CotangentVector& w);

/// The two displayed dual families: f_list spans the forms vanishing on the
/// t-side, g_list the forms vanishing on the T-side.  Built from the basis
/// coefficient matrices, with the last Cartan rescaled by (n-m)/(n+m).
/// Construction validates the Kronecker pairings first; when a displayed
/// pairing fails, the family is corrected by exact Gram inversion and the
/// correction is recorded in `notes`.
struct DualFamilies {
    std::vector<SuperPoly> f_list; // corrected, <delta_{T_i}, omega(f_j)> = delta_ij
    std::vector<SuperPoly> g_list; // corrected, <delta_{t_i}, omega(g_j)> = delta_ij
    std::vector<SuperPoly> f_displayed;
    std::vector<SuperPoly> g_displayed;
    bool f_corrected = false;
    bool g_corrected = false;
    std::vector<std::string> notes;

    static DualFamilies build(const DoubleBasis& basis, int degree);
};

/// omega({f, g}) for kernel representatives f, g.
CotangentVector induced_bracket(const SuperPoly& f, const SuperPoly& g,
                                const DoubleBasis& basis);

/// omega(star(f)): the graded real structure transported to the cotangent
/// space.
CotangentVector real_structure_on_dual(const SuperPoly& f);

/// Structure constants of the two dual Lie superalgebras in the rescaled
/// bases, as JSON lines {"basis":"g-star"|"b-star","i":i,"j":j,"k":k,
/// "value":"..."} (0-based, nonzero entries only).
std::string dual_structure_constants_json(const DoubleBasis& basis,
                                          const DualFamilies& fam, int degree);

/// Full cotangent-duality suite: family membership, Kronecker pairings
/// (validate-then-correct), direct-sum decomposition, vanishing mixed
/// brackets, the two structure-constant identities, real-structure
/// transport through the rescaled isomorphisms, and the block-signature
/// twist on the second factor.
SuiteResult verify_duality_isomorphisms(const BlockShape& shape, int degree);

} // namespace sln

#endif
