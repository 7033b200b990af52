#include "sln/scalar.hpp"

#include <cstdlib>
#include <numeric>

namespace sln {

namespace {

// Splits k into q^2 * r with r square-free, by trial division.  Radicands in
// this ring stay tiny (normalizers of the Cartan basis), so this is plenty.
std::pair<long, long> square_free_split(long k) {
    long square = 1, free = 1;
    for (long p = 2; p * p <= k; ++p) {
        int e = 0;
        while (k % p == 0) { k /= p; ++e; }
        for (int j = 0; j < e / 2; ++j) square *= p;
        if (e % 2) free *= p;
    }
    free *= k;
    return {square, free};
}

} // namespace

RadicalScalar RadicalScalar::radical(const Gaussian& coeff, long k) {
    if (k < 1) throw std::invalid_argument("radicand must be positive");
    auto [q, r] = square_free_split(k);
    RadicalScalar s;
    s.set_term(r, coeff * Gaussian{Rational(q), Rational()});
    return s;
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar r = a;
    for (const auto& [rad, c] : b.terms_) r.add_term(rad, c);
    return r;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar r;
    for (const auto& [ra, ca] : a.terms_) {
        for (const auto& [rb, cb] : b.terms_) {
            // sqrt(ra)*sqrt(rb) = g*sqrt(ra*rb/g^2) with g = gcd(ra, rb).
            long g = std::gcd(ra, rb);
            long rad = (ra / g) * (rb / g);
            Gaussian c = ca * cb * Gaussian{Rational(g), Rational()};
            r.add_term(rad, c);
        }
    }
    return r;
}

RadicalScalar RadicalScalar::invert() const {
    if (terms_.empty()) throw DivisionByZero();
    if (terms_.size() > 1) throw MultiTermInverse();
    const auto& [rad, c] = *terms_.begin();
    // (q*sqrt(r))^-1 = (q*r)^-1 * sqrt(r)
    Gaussian qr = c * Gaussian{Rational(rad), Rational()};
    RadicalScalar out;
    out.set_term(rad, qr.inverse());
    return out;
}

// Rendering grammar:
//   scalar := term (" + " term)*
//   term   := gauss ["*sqrt(" int ")"]
//   gauss  := rat ["+" rat "i"]
//   rat    := int "/" posint
std::string RadicalScalar::str() const {
    if (terms_.empty()) return "0/1";
    std::string out;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.re.str();
        if (!c.im.is_zero()) out += "+" + c.im.str() + "i";
        if (rad != 1) out += "*sqrt(" + std::to_string(rad) + ")";
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    bool consume(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) == 0) { pos += tok.size(); return true; }
        return false;
    }
    BigInt parse_int() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '-'))
            throw ParseError("expected integer at offset " + std::to_string(start));
        return BigInt(s.substr(start, pos - start));
    }
    Rational parse_rat() {
        BigInt n = parse_int();
        if (!consume("/")) throw ParseError("expected '/' at offset " + std::to_string(pos));
        BigInt d = parse_int();
        if (d <= 0) throw ParseError("denominator must be positive");
        return Rational(n, d);
    }
};

} // namespace

RadicalScalar RadicalScalar::parse(const std::string& text) {
    Cursor c{text};
    RadicalScalar out;
    while (true) {
        Rational re = c.parse_rat();
        Rational im;
        if (c.peek() == '+') {
            ++c.pos;
            im = c.parse_rat();
            if (!c.consume("i")) throw ParseError("expected 'i' at offset " + std::to_string(c.pos));
        }
        long rad = 1;
        if (c.consume("*sqrt(")) {
            BigInt r = c.parse_int();
            if (!c.consume(")")) throw ParseError("expected ')'");
            rad = static_cast<long>(r);
        }
        out += radical(Gaussian{re, im}, rad);
        if (c.eof()) break;
        if (!c.consume(" + ")) throw ParseError("expected ' + ' at offset " + std::to_string(c.pos));
    }
    return out;
}

} // namespace sln
