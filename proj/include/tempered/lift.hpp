#pragma once

#include "tempered/qexpansion.hpp"
#include "tempered/rational.hpp"
#include "tempered/satake.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace tempered {

/// Integer Hecke eigenvalue data of a classical holomorphic newform. The
/// Deligne bound |a_p| <= 2 p^{(k-1)/2} is recorded per prime as oracle
/// metadata, not enforced.
struct NewformRecord {
    int weight = 0;
    std::int64_t level = 1;
    std::map<std::int64_t, BigInt> coefficients;
};

inline bool deligne_bound_holds(const BigInt& a_p, std::int64_t p, int weight) {
    // |a|^2 <= 4 p^{k-1}, checked exactly.
    BigInt rhs = 4;
    for (int i = 0; i < weight - 1; ++i) rhs *= p;
    return a_p * a_p <= rhs;
}

/// Unitarized eigenvalue lambda_p = a_p p^{-(k-1)/2}. The square is an exact
/// rational a_p^2 / p^{k-1}; the floating value carries the sign of a_p.
struct NormalizedEigenvalue {
    double value = 0.0;
    Rational square;
};

inline NormalizedEigenvalue normalize_gl2(const BigInt& a_p, std::int64_t p, int weight) {
    if (weight <= 0 || weight % 2 != 0) throw std::invalid_argument("weight must be a positive even integer");
    if (!is_prime(p)) throw std::invalid_argument("normalize_gl2: p must be prime");
    BigInt den = 1;
    for (int i = 0; i < weight - 1; ++i) den *= p;
    NormalizedEigenvalue out;
    out.square = Rational(a_p * a_p, den);
    out.value = std::sqrt(to_double(out.square));
    if (a_p < 0) out.value = -out.value;
    return out;
}

/// Symmetric-square lift of a GL(2) class {alpha, 1/alpha} to the GL(3) class
/// {alpha^2, 1, alpha^-2}: the lifted trace is lambda_p^2 - 1 and the central
/// character is trivial. Exact whenever lambda_p^2 is.
inline HeckeDatumQ sym_square_datum(const Rational& lambda_sq, std::int64_t p) {
    if (lambda_sq < 0) throw std::invalid_argument("sym_square_datum: lambda^2 must be >= 0");
    HeckeDatumQ d;
    d.p = p;
    d.a = RationalComplex(lambda_sq - 1);
    d.omega = RationalComplex(1);
    return d;
}

inline HeckeDatumF sym_square_datum(double lambda_sq, std::int64_t p) {
    if (lambda_sq < 0) throw std::invalid_argument("sym_square_datum: lambda^2 must be >= 0");
    return {p, Complex(lambda_sq - 1.0, 0.0), Complex(1.0, 0.0)};
}

/// Lifts every coefficient of a newform record; keys are the primes present.
inline std::map<std::int64_t, HeckeDatumQ> lift_newform(const NewformRecord& record) {
    std::map<std::int64_t, HeckeDatumQ> data;
    for (const auto& [p, a] : record.coefficients) {
        const auto normalized = normalize_gl2(a, p, record.weight);
        data.emplace(p, sym_square_datum(normalized.square, p));
    }
    return data;
}

/// Convenience: the level-1 weight-12 test corpus straight from the
/// q-expansion oracle.
inline NewformRecord delta_newform(std::int64_t p_max) {
    NewformRecord record;
    record.weight = 12;
    record.level = 1;
    record.coefficients = delta_qexpansion(p_max);
    return record;
}

}  // namespace tempered
