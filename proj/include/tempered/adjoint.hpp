#pragma once

#include "tempered/errors.hpp"
#include "tempered/rational.hpp"
#include "tempered/satake.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tempered {

/// The 8-element eigenvalue multiset of the adjoint lift of a GL(3) class:
/// the tensor square against the conjugate class with one unit eigenvalue
/// removed.
struct AdjointClass8 {
    std::array<Complex, 8> eigenvalues{};
    std::int64_t p = 0;
};

/// Forms {alpha_i * conj(alpha_j)} over all nine pairs and removes the
/// diagonal entry |alpha_i|^2 closest to 1; the result is the same multiset
/// whichever unit eigenvalue is dropped.
inline AdjointClass8 adjoint_class(const UnitaryClass3& c, double tol = kDefaultTol) {
    if (!unitarity_consistent(c, tol))
        throw InvalidClassError("adjoint lift requires a unitarity-consistent class");
    std::size_t drop = 0;
    double best = std::abs(std::norm(c.alphas[0]) - 1.0);
    for (std::size_t i = 1; i < 3; ++i) {
        const double d = std::abs(std::norm(c.alphas[i]) - 1.0);
        if (d < best) {
            best = d;
            drop = i;
        }
    }
    AdjointClass8 out;
    out.p = c.p;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j && i == drop) continue;
            out.eigenvalues[k++] = c.alphas[i] * std::conj(c.alphas[j]);
        }
    return out;
}

/// Adjoint Dirichlet coefficient at the m-th prime power, in trace form:
/// a_{p^m}(Ad) = |tr(A_p^m)|^2 - 1. Computed from the Hecke datum alone via
/// Newton traces, so no root extraction is involved; exact over rationals.
template <class C>
std::vector<typename scalar_traits<C>::real_type> adjoint_coefficients(const HeckeDatum<C>& d,
                                                                       int count) {
    const std::vector<C> traces = power_traces(elementary_symmetrics(d), count);
    std::vector<typename scalar_traits<C>::real_type> out;
    out.reserve(traces.size());
    for (const C& t : traces) out.push_back(scalar_traits<C>::norm(t) - 1);
    return out;
}

template <class C>
typename scalar_traits<C>::real_type adjoint_coefficient(const HeckeDatum<C>& d, int m) {
    if (m < 1) throw std::invalid_argument("adjoint_coefficient requires m >= 1");
    return adjoint_coefficients(d, m).back();
}

/// Closed form of the same coefficient for a non-tempered class:
/// 2 + p^{2mt} + p^{-2mt} + 2 cos(m theta) (p^{mt} + p^{-mt}).
inline double adjoint_coefficient_closed(std::int64_t p, double t, double theta, int m) {
    const double pmt = std::pow(static_cast<double>(p), m * t);
    return 2.0 + pmt * pmt + 1.0 / (pmt * pmt) +
           2.0 * std::cos(m * theta) * (pmt + 1.0 / pmt);
}

inline Complex zeta_local(std::int64_t p, const Complex& s) {
    return 1.0 / (1.0 - std::pow(static_cast<double>(p), -s));
}

namespace detail {

inline double max_modulus(const UnitaryClass3& c) {
    double m = 0.0;
    for (const auto& a : c.alphas) m = std::max(m, std::abs(a));
    return m;
}

}  // namespace detail

/// Local Rankin-Selberg factor of the pair (class, conjugate class): the
/// product of (1 - alpha_i conj(alpha_j) p^-s)^-1 over all nine pairs.
inline Complex local_factor_rankin(const UnitaryClass3& c, const Complex& s) {
    const double top = detail::max_modulus(c);
    if (top * top * std::pow(static_cast<double>(c.p), -s.real()) >= 1.0)
        throw DomainError("Rankin local factor evaluated at or inside its pole radius");
    const Complex ps = std::pow(static_cast<double>(c.p), -s);
    Complex value(1.0, 0.0);
    for (const auto& ai : c.alphas)
        for (const auto& aj : c.alphas) value /= (1.0 - ai * std::conj(aj) * ps);
    return value;
}

/// Local adjoint factor: the 8-fold Euler product over the adjoint class.
/// Each factor is nonzero, so the value is never 0.
inline Complex local_factor_adjoint(const UnitaryClass3& c, const Complex& s,
                                    double tol = kDefaultTol) {
    const double top = detail::max_modulus(c);
    if (top * top * std::pow(static_cast<double>(c.p), -s.real()) >= 1.0)
        throw DomainError("adjoint local factor evaluated at or inside its pole radius");
    const AdjointClass8 adj = adjoint_class(c, tol);
    const Complex ps = std::pow(static_cast<double>(c.p), -s);
    Complex value(1.0, 0.0);
    for (const auto& x : adj.eigenvalues) value /= (1.0 - x * ps);
    return value;
}

enum class CertVerdict { RamanujanCertified, NonTemperedCertified, Undetermined };

enum class CertReason { None, TraceBound, NegativeAdjointCoefficient, OracleRootModulus };

inline const char* to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::RamanujanCertified: return "ramanujan";
        case CertVerdict::NonTemperedCertified: return "non-tempered";
        case CertVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

inline const char* to_string(CertReason r) {
    switch (r) {
        case CertReason::None: return "none";
        case CertReason::TraceBound: return "trace-bound";
        case CertReason::NegativeAdjointCoefficient: return "negative-adjoint-coefficient";
        case CertReason::OracleRootModulus: return "oracle-root-modulus";
    }
    return "?";
}

/// Per-prime certification outcome. A Ramanujan certificate always names the
/// check that produced it; the optional witnesses record the negative
/// coefficient index or the off-circle root modulus.
struct RamanujanCertificate {
    std::int64_t p = 0;
    CertVerdict verdict = CertVerdict::Undetermined;
    CertReason reason = CertReason::None;
    std::optional<int> witness_m;
    std::optional<double> witness_modulus;
};

struct CertifyOptions {
    bool use_oracle = true;
    double tol = kDefaultTol;
};

namespace detail {

/// Oracle stage shared by the exact and floating certifiers. Root moduli
/// beyond 1 + threshold certify non-temperedness; all moduli within threshold
/// of 1 certify temperedness (numerically, at oracle accuracy).
inline RamanujanCertificate oracle_stage(RamanujanCertificate cert, const HeckeDatumF& d,
                                         double delta, const CertifyOptions& opts) {
    const double threshold = std::max(delta, 10.0 * opts.tol);
    const UnitaryClass3 cls = satake_class(d, opts.tol);
    double worst = 0.0;
    double top = 0.0;
    for (const auto& r : cls.alphas) {
        const double mod = std::abs(r);
        top = std::max(top, mod);
        worst = std::max(worst, std::abs(mod - 1.0));
    }
    if (top >= 1.0 + threshold) {
        cert.verdict = CertVerdict::NonTemperedCertified;
        cert.reason = CertReason::OracleRootModulus;
        cert.witness_modulus = top;
        return cert;
    }
    if (opts.use_oracle && worst <= threshold) {
        cert.verdict = CertVerdict::RamanujanCertified;
        cert.reason = CertReason::OracleRootModulus;
        cert.witness_modulus = top;
        return cert;
    }
    return cert;
}

}  // namespace detail

/// Certifies one prime from exact Hecke data. Check order: exact trace bound,
/// then exact negative adjoint coefficients up to depth m_max, then the
/// floating root oracle. delta is ignored by the exact sign tests (strict
/// negativity decides) but still shapes the oracle thresholds.
inline RamanujanCertificate certify_prime(const HeckeDatumQ& d, int m_max, double delta = 0.0,
                                          const CertifyOptions& opts = {}) {
    if (m_max < 0 || delta < 0.0) throw std::invalid_argument("certify_prime: bad settings");
    RamanujanCertificate cert;
    cert.p = d.p;
    if (trace_bound_certificate(d)) {
        cert.verdict = CertVerdict::RamanujanCertified;
        cert.reason = CertReason::TraceBound;
        return cert;
    }
    if (m_max >= 1) {
        const auto coeffs = adjoint_coefficients(d, m_max);
        for (int m = 1; m <= m_max; ++m) {
            if (coeffs[static_cast<std::size_t>(m - 1)] < 0) {
                cert.verdict = CertVerdict::RamanujanCertified;
                cert.reason = CertReason::NegativeAdjointCoefficient;
                cert.witness_m = m;
                return cert;
            }
        }
    }
    return detail::oracle_stage(cert, to_floating(d), delta, opts);
}

/// Floating variant: negative coefficients must clear the margin -delta so a
/// certificate is never produced by rounding noise.
inline RamanujanCertificate certify_prime(const HeckeDatumF& d, int m_max, double delta = 1e-9,
                                          const CertifyOptions& opts = {}) {
    if (m_max < 0 || delta < 0.0) throw std::invalid_argument("certify_prime: bad settings");
    RamanujanCertificate cert;
    cert.p = d.p;
    if (trace_bound_certificate(d, opts.tol)) {
        cert.verdict = CertVerdict::RamanujanCertified;
        cert.reason = CertReason::TraceBound;
        return cert;
    }
    if (m_max >= 1) {
        const auto coeffs = adjoint_coefficients(d, m_max);
        for (int m = 1; m <= m_max; ++m) {
            if (coeffs[static_cast<std::size_t>(m - 1)] < -delta) {
                cert.verdict = CertVerdict::RamanujanCertified;
                cert.reason = CertReason::NegativeAdjointCoefficient;
                cert.witness_m = m;
                return cert;
            }
        }
    }
    return detail::oracle_stage(cert, d, delta, opts);
}

}  // namespace tempered
