#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace tempered {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Converts a rational to double without overflowing on huge numerator/denominator
/// pairs whose quotient is still representable.
inline double to_double(const Rational& q) {
    using boost::multiprecision::msb;
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (num == 0) return 0.0;
    const bool negative = num < 0;
    BigInt n = negative ? BigInt(-num) : num;
    BigInt d = den;
    // Shift both operands into a range where the double conversion is exact-ish.
    const long bits_n = static_cast<long>(msb(n));
    const long bits_d = static_cast<long>(msb(d));
    long shift = 0;
    constexpr long kSafeBits = 512;
    if (bits_n > kSafeBits || bits_d > kSafeBits) {
        const long drop = std::max(bits_n, bits_d) - kSafeBits;
        // Keep kSafeBits on the larger operand; the quotient only moves by 2^-kSafeBits-ish.
        const long drop_n = std::min(drop, std::max(0L, bits_n - 64));
        const long drop_d = std::min(drop, std::max(0L, bits_d - 64));
        n >>= static_cast<unsigned>(drop_n);
        d >>= static_cast<unsigned>(drop_d);
        shift = drop_n - drop_d;
    }
    double value = n.convert_to<double>() / d.convert_to<double>();
    value = std::ldexp(value, static_cast<int>(shift));
    return negative ? -value : value;
}

inline double to_double(double x) { return x; }

inline int sign(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline Rational pow_int(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

/// Gaussian rational: exact complex number with rational real and imaginary parts.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}               // NOLINT(google-explicit-constructor)
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(int r) : re(r) {}                               // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator*(int k, const RationalComplex& a) { return {k * a.re, k * a.im}; }
    RationalComplex& operator+=(const RationalComplex& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& b) { return *this = *this * b; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline RationalComplex conj(const RationalComplex& z) { return {z.re, -z.im}; }

/// |z|^2 as an exact rational.
inline Rational norm(const RationalComplex& z) { return z.re * z.re + z.im * z.im; }

inline Complex to_complex(const RationalComplex& z) { return {to_double(z.re), to_double(z.im)}; }

// Scalar traits shared by the floating and exact instantiations of the
// trace/coefficient machinery.
template <class C>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static Complex conjugate(const Complex& z) { return std::conj(z); }
    static double norm(const Complex& z) { return std::norm(z); }
};

template <>
struct scalar_traits<RationalComplex> {
    using real_type = Rational;
    static RationalComplex conjugate(const RationalComplex& z) { return conj(z); }
    static Rational norm(const RationalComplex& z) { return tempered::norm(z); }
};

/// Parses an exact token: an optional-sign integer or "a/b" fraction.
/// Returns nothing for any other syntax (decimal point, exponent, junk).
inline std::optional<Rational> parse_exact(const std::string& token) {
    if (token.empty()) return std::nullopt;
    auto is_integer = [](const std::string& s) {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer(token)) return std::nullopt;
            return Rational(BigInt(token));
        }
        const std::string num = token.substr(0, slash);
        const std::string den = token.substr(slash + 1);
        if (!is_integer(num) || !is_integer(den)) return std::nullopt;
        BigInt d(den);
        if (d == 0) return std::nullopt;
        return Rational(BigInt(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Renders a rational canonically: "n" when integral, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace tempered
