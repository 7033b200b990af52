#ifndef SLN_SUPERMATRIX_HPP
#define SLN_SUPERMATRIX_HPP

#include "sln/scalar.hpp"

#include <string>
#include <vector>

namespace sln {

struct InvalidShape : std::runtime_error {
    explicit InvalidShape(const std::string& what) : std::runtime_error(what) {}
};
struct EqualDimensions : std::runtime_error {
    EqualDimensions() : std::runtime_error("m = n is not supported (H_0 is undefined)") {}
};
struct InhomogeneousOperand : std::runtime_error {
    InhomogeneousOperand() : std::runtime_error("operation requires homogeneous operands") {}
};
struct ParityMismatch : std::runtime_error {
    ParityMismatch() : std::runtime_error("declared parity disagrees with entry support") {}
};
struct NotInDouble : std::runtime_error {
    NotInDouble() : std::runtime_error("element is not supertraceless") {}
};

/// Block grading (m|n).  Index parity |i| = 0 for i <= m, 1 for i > m
/// (1-based indices).
struct BlockShape {
    int m = 0;
    int n = 0;

    BlockShape() = default;
    BlockShape(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw InvalidShape("block dimensions must be >= 1");
        if (m == n) throw EqualDimensions();
    }

    int dim() const { return m + n; }
    /// Parity of 1-based index i.
    int index_parity(int i) const { return i <= m ? 0 : 1; }

    friend bool operator==(const BlockShape& a, const BlockShape& b) {
        return a.m == b.m && a.n == b.n;
    }
    friend bool operator!=(const BlockShape& a, const BlockShape& b) { return !(a == b); }
};

enum class Parity { Even, Odd, Inhomogeneous };

inline int parity_value(Parity p) {
    if (p == Parity::Inhomogeneous) throw InhomogeneousOperand();
    return p == Parity::Odd ? 1 : 0;
}

inline Parity parity_sum(Parity a, Parity b) {
    return (parity_value(a) + parity_value(b)) % 2 ? Parity::Odd : Parity::Even;
}

/// (m+n)x(m+n) supermatrix over RadicalScalar with a declared parity tag.
/// Entries are stored 0-based internally; the element access API is 1-based
/// to match the index conventions everywhere else.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(BlockShape shape, Parity declared)
        : shape_(shape), parity_(declared),
          entries_(static_cast<size_t>(shape.dim()) * shape.dim()) {}

    static SuperMatrix zero(BlockShape shape, Parity declared = Parity::Even) {
        return SuperMatrix(shape, declared);
    }
    static SuperMatrix identity(BlockShape shape) {
        SuperMatrix m(shape, Parity::Even);
        for (int i = 1; i <= shape.dim(); ++i) m.at(i, i) = RadicalScalar(1);
        return m;
    }
    /// Elementary matrix E_st: (E_st)_ij = delta_si delta_tj.
    static SuperMatrix unit(BlockShape shape, int s, int t) {
        Parity p = (shape.index_parity(s) + shape.index_parity(t)) % 2
                       ? Parity::Odd
                       : Parity::Even;
        SuperMatrix m(shape, p);
        m.at(s, t) = RadicalScalar(1);
        return m;
    }

    const BlockShape& shape() const { return shape_; }
    Parity parity() const { return parity_; }
    void set_parity(Parity p) { parity_ = p; }

    RadicalScalar& at(int i, int j) {
        return entries_[static_cast<size_t>(i - 1) * shape_.dim() + (j - 1)];
    }
    const RadicalScalar& at(int i, int j) const {
        return entries_[static_cast<size_t>(i - 1) * shape_.dim() + (j - 1)];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Parity recomputed from the entry support: Even / Odd / Inhomogeneous
    /// (a zero matrix counts as Even).
    Parity support_parity() const;
    /// Throws ParityMismatch if the declared tag disagrees with the support.
    void validate() const;

    SuperMatrix operator-() const;
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const RadicalScalar& c, const SuperMatrix& m);
    /// Plain matrix product (no sign); the declared parity of the result is
    /// the sum when both factors are homogeneous, Inhomogeneous otherwise.
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

    /// Entrywise complex conjugation.
    SuperMatrix conj() const;

    /// JSON array-of-arrays of scalar strings.
    std::string to_json() const;

private:
    BlockShape shape_;
    Parity parity_ = Parity::Even;
    std::vector<RadicalScalar> entries_;
};

/// Str(M) = tr(P) - tr(T): trace of the even block minus trace of the odd block.
RadicalScalar supertrace(const SuperMatrix& m);

/// [M,N] = MN - (-1)^{|M||N|} NM on homogeneous operands.
SuperMatrix superbracket(const SuperMatrix& a, const SuperMatrix& b);

/// Block transpose with a sign on the upper-right block:
/// (P Q; R T)^st = (P^t R^t; -Q^t T^t).
SuperMatrix supertranspose(const SuperMatrix& m);

/// (M,N)_sl = -(i/2) Str(MN).
RadicalScalar sp_sl(const SuperMatrix& a, const SuperMatrix& b);

/// Element of the double d = sl + sl (or gl-level when the supertraceless
/// flag is not asserted).
struct DoubleElement {
    SuperMatrix first;
    SuperMatrix second;

    DoubleElement() = default;
    DoubleElement(SuperMatrix a, SuperMatrix b)
        : first(std::move(a)), second(std::move(b)) {}

    const BlockShape& shape() const { return first.shape(); }
    Parity parity() const;
    bool is_zero() const { return first.is_zero() && second.is_zero(); }

    /// True iff both components are supertraceless (membership in d proper).
    bool in_double() const {
        return supertrace(first).is_zero() && supertrace(second).is_zero();
    }

    DoubleElement operator-() const { return {-first, -second}; }
    friend DoubleElement operator+(const DoubleElement& a, const DoubleElement& b) {
        return {a.first + b.first, a.second + b.second};
    }
    friend DoubleElement operator-(const DoubleElement& a, const DoubleElement& b) {
        return {a.first - b.first, a.second - b.second};
    }
    friend DoubleElement operator*(const RadicalScalar& c, const DoubleElement& x) {
        return {c * x.first, c * x.second};
    }
    friend bool operator==(const DoubleElement& a, const DoubleElement& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const DoubleElement& a, const DoubleElement& b) {
        return !(a == b);
    }
};

/// Componentwise superbracket on the direct sum.
DoubleElement superbracket(const DoubleElement& a, const DoubleElement& b);

/// ((A,B),(C,D))_d = (A,C)_sl - (B,D)_sl.
RadicalScalar sp_double(const DoubleElement& x, const DoubleElement& y);

} // namespace sln

#endif
