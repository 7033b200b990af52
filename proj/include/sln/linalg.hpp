#ifndef SLN_LINALG_HPP
#define SLN_LINALG_HPP

#include "sln/rational.hpp"
#include "sln/scalar.hpp"

#include <optional>
#include <vector>

namespace sln {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row rank by fraction-free-ish Gaussian elimination (exact).
int rank(RationalMatrix a);

/// Solves A x = b exactly; nullopt when inconsistent.  When the system is
/// underdetermined an arbitrary particular solution is returned.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

/// True iff b lies in the column span of A.
bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& b);

/// Flattens RadicalScalars into rational coordinate rows: every distinct
/// (radicand, re/im) component over a vector of scalars becomes one row.
/// Used to pose membership / rank questions over Q instead of the radical ring.
class RadicalCoordinates {
public:
    /// Registers a scalar column of length `dim`; returns its column index.
    int add_column(const std::vector<RadicalScalar>& column);
    /// Rational matrix whose columns are the registered scalar columns.
    RationalMatrix matrix() const;

private:
    struct Key {
        size_t slot;
        long radicand;
        bool imag;
        bool operator<(const Key& o) const {
            if (slot != o.slot) return slot < o.slot;
            if (radicand != o.radicand) return radicand < o.radicand;
            return imag < o.imag;
        }
    };
    std::vector<std::vector<std::pair<Key, Rational>>> columns_;
};

} // namespace sln

#endif
