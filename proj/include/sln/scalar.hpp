#ifndef SLN_SCALAR_HPP
#define SLN_SCALAR_HPP

#include "sln/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace sln {

struct MultiTermInverse : std::runtime_error {
    MultiTermInverse() : std::runtime_error("inverse of multi-term scalar is unsupported") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("scalar parse error: " + what) {}
};

/// Gaussian rational a + b*i.
struct Gaussian {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Gaussian operator-() const { return {-re, -im}; }
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    Gaussian conj() const { return {re, -im}; }
    Gaussian inverse() const {
        Rational n = re * re + im * im;
        if (n.is_zero()) throw DivisionByZero();
        return {re / n, -im / n};
    }
};

/// Exact element of Q(i)[sqrt(2), sqrt(3), sqrt(5), ...]: a sparse sum of
/// Gaussian-rational coefficients over square-free radicands.  Radicand 1 is
/// the rational part.  Canonical form stores no zero coefficients, so
/// structural equality is value equality.
class RadicalScalar {
public:
    using TermMap = std::map<long, Gaussian>;

    RadicalScalar() = default;
    RadicalScalar(long long n) { set_term(1, Gaussian{Rational(n), Rational()}); }
    RadicalScalar(const Rational& r) { set_term(1, Gaussian{r, Rational()}); }

    static RadicalScalar gaussian(Rational re, Rational im) {
        RadicalScalar s;
        s.set_term(1, Gaussian{std::move(re), std::move(im)});
        return s;
    }
    static RadicalScalar i() { return gaussian(Rational(0), Rational(1)); }

    /// coeff * sqrt(k) for integer k >= 1, reducing k to square-free form.
    static RadicalScalar radical(const Gaussian& coeff, long k);

    /// 1/sqrt(k), exact.
    static RadicalScalar inv_sqrt(long k) {
        return radical(Gaussian{Rational(1, k), Rational()}, k);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational_term_only() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    /// The radicand-1 Gaussian coefficient (zero if absent).
    Gaussian rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Gaussian{} : it->second;
    }

    RadicalScalar operator-() const {
        RadicalScalar r;
        for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, -c);
        return r;
    }
    friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
        return a + (-b);
    }
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar& operator+=(const RadicalScalar& o) { return *this = *this + o; }
    RadicalScalar& operator-=(const RadicalScalar& o) { return *this = *this - o; }
    RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) {
        return !(a == b);
    }

    RadicalScalar conj() const {
        RadicalScalar r;
        for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, c.conj());
        return r;
    }

    /// Exact inverse of a single-term scalar: (q*sqrt(r))^-1 = (1/(q*r))*sqrt(r).
    RadicalScalar invert() const;

    std::string str() const;
    static RadicalScalar parse(const std::string& text);

private:
    void set_term(long rad, Gaussian c) {
        if (!c.is_zero()) terms_[rad] = std::move(c);
    }
    void add_term(long rad, const Gaussian& c) {
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(rad, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline RadicalScalar conj(const RadicalScalar& a) { return a.conj(); }

} // namespace sln

#endif
