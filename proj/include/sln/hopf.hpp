#ifndef SLN_HOPF_HPP
#define SLN_HOPF_HPP

#include "sln/report.hpp"
#include "sln/supermatrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sln {

struct TruncationMismatch : std::runtime_error {
    TruncationMismatch() : std::runtime_error("operands have different truncation data") {}
};

/// X for the single-group algebra, Y/Z for the two factors of the double.
enum class GenKind { X, Y, Z };

struct GeneratorId {
    GenKind kind;
    int i, j;   // 1-based
    int parity; // (|i| + |j|) mod 2, frozen at construction

    GeneratorId(GenKind k, int i_, int j_, const BlockShape& sh)
        : kind(k), i(i_), j(j_),
          parity((sh.index_parity(i_) + sh.index_parity(j_)) % 2) {}

    friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    std::string str() const {
        const char* names[] = {"x", "y", "z"};
        return std::string(names[static_cast<int>(kind)]) + "[" + std::to_string(i) +
               "," + std::to_string(j) + "]";
    }
};

/// Canonical supercommutative word: even factors (with exponents) first,
/// then distinct odd factors, each block sorted by (kind, i, j).
class Monomial {
public:
    Monomial() = default; // the unit monomial

    static Monomial generator(const GeneratorId& g) {
        Monomial m;
        if (g.parity)
            m.odd_.push_back(g);
        else
            m.even_.push_back({g, 1});
        return m;
    }

    const std::vector<std::pair<GeneratorId, int>>& even() const { return even_; }
    const std::vector<GeneratorId>& odd() const { return odd_; }

    int degree() const {
        int d = static_cast<int>(odd_.size());
        for (const auto& [g, e] : even_) d += e;
        return d;
    }
    int parity() const { return static_cast<int>(odd_.size()) % 2; }
    bool is_unit() const { return even_.empty() && odd_.empty(); }

    /// Product with Koszul sign; nullopt when an odd factor repeats.
    static std::optional<std::pair<Monomial, int>> mul(const Monomial& a,
                                                       const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<GeneratorId, int>> even_;
    std::vector<GeneratorId> odd_;
};

/// Element of the degree-truncated supercommutative polynomial algebra.
class SuperPoly {
public:
    using TermMap = std::map<Monomial, RadicalScalar>;

    SuperPoly() = default;
    SuperPoly(BlockShape shape, int degree) : shape_(shape), degree_(degree) {}

    static SuperPoly constant(BlockShape shape, int degree, const RadicalScalar& c) {
        SuperPoly p(shape, degree);
        p.add_term(Monomial(), c);
        return p;
    }
    static SuperPoly one(BlockShape shape, int degree) {
        return constant(shape, degree, RadicalScalar(1));
    }
    static SuperPoly generator(BlockShape shape, int degree, GenKind kind, int i, int j) {
        SuperPoly p(shape, degree);
        p.add_term(Monomial::generator(GeneratorId(kind, i, j, shape)), RadicalScalar(1));
        return p;
    }

    const BlockShape& shape() const { return shape_; }
    int degree_bound() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Parity parity() const;
    RadicalScalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RadicalScalar() : it->second;
    }

    void add_term(const Monomial& m, const RadicalScalar& c);

    SuperPoly operator-() const;
    friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b);
    friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b);
    friend SuperPoly operator*(const RadicalScalar& c, const SuperPoly& p);
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
    SuperPoly& operator+=(const SuperPoly& o) { return *this = *this + o; }
    SuperPoly& operator-=(const SuperPoly& o) { return *this = *this - o; }

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

    /// Entrywise conjugation of coefficients (used by antilinear maps).
    SuperPoly conj_coefficients() const;

    /// Drop all terms of degree above `bound` (for truncation-stability checks).
    SuperPoly truncated(int bound) const;

    std::string str() const;

private:
    void check_compatible(const SuperPoly& o) const {
        if (shape_ != o.shape_ || degree_ != o.degree_) throw TruncationMismatch();
    }

    BlockShape shape_;
    int degree_ = 0;
    TermMap terms_;
};

/// Rank-2 or rank-3 tensor over SuperPoly with factorwise Koszul products
/// and a shared bound on the combined degree.
class TensorPoly {
public:
    using Key = std::vector<Monomial>;
    using TermMap = std::map<Key, RadicalScalar>;

    TensorPoly() = default;
    TensorPoly(BlockShape shape, int degree, int rank)
        : shape_(shape), degree_(degree), rank_(rank) {}

    static TensorPoly outer(const std::vector<SuperPoly>& factors);

    const BlockShape& shape() const { return shape_; }
    int degree_bound() const { return degree_; }
    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const RadicalScalar& c);

    TensorPoly operator-() const;
    friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
    friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
    friend TensorPoly operator*(const RadicalScalar& c, const TensorPoly& t);
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    TensorPoly& operator+=(const TensorPoly& o) { return *this = *this + o; }

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    /// Applies a polynomial map to one slot; `rank_change` is the rank of the
    /// map's output (1 for SuperPoly-valued maps realized as rank-1 tensors).
    TensorPoly map_slot(int slot, const std::function<SuperPoly(const SuperPoly&)>& f) const;
    /// Applies the coproduct to one slot, raising the rank by one.
    TensorPoly coproduct_slot(int slot) const;
    /// Multiplies all slots together left to right (the multiplication map).
    SuperPoly merge() const;

    std::string str() const;

private:
    void check_compatible(const TensorPoly& o) const {
        if (shape_ != o.shape_ || degree_ != o.degree_ || rank_ != o.rank_)
            throw TruncationMismatch();
    }

    BlockShape shape_;
    int degree_ = 0;
    int rank_ = 2;
    TermMap terms_;
};

SuperPoly mul(const SuperPoly& a, const SuperPoly& b);
RadicalScalar counit(const SuperPoly& f);
TensorPoly coproduct(const SuperPoly& f);
SuperPoly antipode(const SuperPoly& f);

/// Superdeterminant of 1 + X for the chosen generator family:
/// det(A - B D^-1 C) / det(D) over the block decomposition.
SuperPoly sdet(BlockShape shape, GenKind family, int degree);

/// Graded star: y*_ij = (-1)^{(|i|+|j|)|j|} S(z_ji) and symmetrically,
/// x*_ij = (-1)^{(|i|+|j|)|j|} S(x_ji); extended as an antilinear morphism.
SuperPoly star(const SuperPoly& f);

/// Slotwise star on a rank-2 tensor, optionally with the Koszul sign
/// (-1)^{|m1||m2|} per term; which convention makes star a coproduct
/// morphism is selected empirically and recorded in reports.
TensorPoly tensor_star(const TensorPoly& t, bool koszul);

/// Quotient by y_ij - z_ij = 0: both families collapse onto x_ij.
SuperPoly project_I(const SuperPoly& f);

/// Quotient onto the lower-unitriangular/antidual coordinates: strict-upper
/// y and strict-lower z vanish, z_ii becomes the series of S(y_ii).
SuperPoly project_J(const SuperPoly& f);

/// Linear part of f contracted against (A, B): y_ij -> A_ij, z_ij -> B_ij,
/// x_ij -> A_ij.
RadicalScalar delta_eval(const DoubleElement& m, const SuperPoly& f);

/// The real structure on the double read off from the star structure:
/// phi(delta_M)(f) = conj(delta_M(star(f))), evaluated on all generators and
/// reassembled as a matrix pair.
DoubleElement phi_from_star(const DoubleElement& m, int degree = 2);

/// Bialgebra/Hopf axiom suite on all generators: counit laws,
/// coassociativity, antipode law, multiplicativity of the counit.
SuiteResult verify_hopf_axioms(const BlockShape& shape, int degree);

/// Star-structure suite: antilinearity, algebra morphism, graded involution,
/// antipode compatibility, coproduct compatibility under exactly one of the
/// two slotwise-star conventions.  The resolved convention is appended as a
/// note "tensor-star=plain" or "tensor-star=koszul".
SuiteResult verify_star_axioms(const BlockShape& shape, int degree);

} // namespace sln

#endif
