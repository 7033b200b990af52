#ifndef SLN_RATIONAL_HPP
#define SLN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sln {

using BigInt = boost::multiprecision::cpp_int;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Arbitrary-precision rational, always kept reduced with positive
/// denominator.  Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

private:
    struct raw_tag {};
    Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DivisionByZero();
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace sln

#endif
