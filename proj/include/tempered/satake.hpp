#pragma once

#include "tempered/errors.hpp"
#include "tempered/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace tempered {

inline constexpr double kDefaultTol = 1e-9;

/// Local Hecke datum at a prime: the trace of the Satake class and the
/// central-character value (= determinant of the class). The scalar type is
/// either Complex (floating) or RationalComplex (exact).
template <class C>
struct HeckeDatum {
    std::int64_t p = 0;
    C a;
    C omega;
};

using HeckeDatumF = HeckeDatum<Complex>;
using HeckeDatumQ = HeckeDatum<RationalComplex>;

inline HeckeDatumF to_floating(const HeckeDatumQ& d) {
    return {d.p, to_complex(d.a), to_complex(d.omega)};
}

/// Unordered triple of nonzero complex numbers attached to a prime.
struct UnitaryClass3 {
    std::array<Complex, 3> alphas{};
    std::int64_t p = 0;
};

/// Canonical parameters of a non-tempered class {u p^t, u p^-t, w}, t > 0,
/// |u| = |w| = 1, theta = arg(u^-1 w) in [0, 2pi).
struct NonTemperedShape {
    double t = 0.0;
    Complex u{1.0, 0.0};
    Complex w{1.0, 0.0};
    double theta = 0.0;
};

enum class Verdict { Tempered, NonTempered, Inconsistent };

struct ClassifyResult {
    Verdict verdict = Verdict::Inconsistent;
    std::optional<NonTemperedShape> shape;
};

namespace detail {

/// Greedy nearest-neighbour multiset match; adequate for the short,
/// well-separated multisets handled here.
inline bool multiset_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Complex& x : a) {
        double best = tol;
        std::size_t best_j = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double d = std::abs(x - b[j]);
            if (d <= best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j == b.size()) return false;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_j));
    }
    return true;
}

/// Exhaustive 3-element multiset match (all six permutations).
inline bool multiset_match3(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b,
                            double tol) {
    std::array<int, 3> idx{0, 1, 2};
    std::array<int, 3> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) > tol) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace detail

/// Unitarity symmetry: the conjugates form the same multiset as the inverses.
/// The matching tolerance is widened to 3*tol so that classes sitting within
/// tol of the unit circle never fail the symmetry check on rounding alone.
inline bool unitarity_consistent(const UnitaryClass3& c, double tol = kDefaultTol) {
    std::array<Complex, 3> conjs{};
    std::array<Complex, 3> invs{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (c.alphas[i] == Complex(0.0, 0.0))
            throw InvalidClassError("Satake class entries must be nonzero");
        conjs[i] = std::conj(c.alphas[i]);
        invs[i] = 1.0 / c.alphas[i];
    }
    return detail::multiset_match3(conjs, invs, 3.0 * tol);
}

/// Elementary symmetric functions of the class reconstructed from Hecke data:
/// e1 = a_p, e2 = omega_p * conj(a_p), e3 = omega_p. The unitarity symmetry
/// forces e2 = e3 * conj(e1), so (a_p, omega_p) determines the cubic
/// X^3 - e1 X^2 + e2 X - e3 whose roots are the class.
inline std::array<Complex, 3> elementary_symmetrics(const HeckeDatumF& d, double tol = kDefaultTol) {
    if (std::abs(std::abs(d.omega) - 1.0) > tol)
        throw InvalidDatumError("central-character value must have modulus 1");
    return {d.a, d.omega * std::conj(d.a), d.omega};
}

inline std::array<RationalComplex, 3> elementary_symmetrics(const HeckeDatumQ& d) {
    if (norm(d.omega) != 1)
        throw InvalidDatumError("central-character value must have norm exactly 1");
    return {d.a, d.omega * conj(d.a), d.omega};
}

/// Power-sum traces t_m = tr(A^m) from the elementary symmetric functions,
/// by the three-variable Newton recursion.
template <class C>
std::vector<C> power_traces(const C& e1, const C& e2, const C& e3, int count) {
    if (count < 1) throw std::invalid_argument("power_traces requires count >= 1");
    std::vector<C> t;
    t.reserve(static_cast<std::size_t>(count));
    t.push_back(e1);
    if (count >= 2) t.push_back(e1 * t[0] - e2 - e2);
    if (count >= 3) t.push_back(e1 * t[1] - e2 * t[0] + e3 + e3 + e3);
    for (int m = 4; m <= count; ++m) {
        const std::size_t k = t.size();
        t.push_back(e1 * t[k - 1] - e2 * t[k - 2] + e3 * t[k - 3]);
    }
    return t;
}

template <class C>
std::vector<C> power_traces(const std::array<C, 3>& e, int count) {
    return power_traces(e[0], e[1], e[2], count);
}

namespace detail {

using ComplexL = std::complex<long double>;

inline ComplexL eval_cubic(const ComplexL& e1, const ComplexL& e2, const ComplexL& e3,
                           const ComplexL& z) {
    return ((z - e1) * z + e2) * z - e3;
}

inline ComplexL eval_cubic_deriv(const ComplexL& e1, const ComplexL& e2, const ComplexL& z) {
    return (3.0L * z - 2.0L * e1) * z + e2;
}

inline ComplexL polish_newton(const ComplexL& e1, const ComplexL& e2, const ComplexL& e3,
                              ComplexL z) {
    for (int it = 0; it < 40; ++it) {
        const ComplexL dp = eval_cubic_deriv(e1, e2, z);
        if (std::abs(dp) == 0.0L) break;
        const ComplexL dz = eval_cubic(e1, e2, e3, z) / dp;
        z -= dz;
        if (std::abs(dz) <= std::abs(z) * 1e-19L) break;
    }
    return z;
}

}  // namespace detail

/// Brute-force root solver for X^3 - e1 X^2 + e2 X - e3, used as the
/// ground-truth oracle. Exact triple and double roots are peeled off by their
/// closed forms; the generic case runs a Durand-Kerner iteration in extended
/// precision followed by Newton polishing. Near-coincident roots are merged
/// when their separation falls below ~1e-8, where polishing can no longer
/// distinguish them; that floor is harmless to every caller here.
inline std::array<Complex, 3> roots_oracle(const Complex& e1c, const Complex& e2c, const Complex& e3c,
                                           double tol = 1e-10) {
    using detail::ComplexL;
    if (e3c == Complex(0.0, 0.0)) throw DomainError("cubic oracle requires a nonzero constant term");
    const ComplexL e1(e1c.real(), e1c.imag());
    const ComplexL e2(e2c.real(), e2c.imag());
    const ComplexL e3(e3c.real(), e3c.imag());

    const long double radius = std::max({static_cast<long double>(std::abs(e1c)),
                                         std::sqrt(static_cast<long double>(std::abs(e2c))),
                                         std::cbrt(static_cast<long double>(std::abs(e3c)))});

    // Triple root: e1^2 = 3 e2 and e1^3 = 27 e3.
    {
        const long double s2 = radius * radius;
        const long double s3 = s2 * radius;
        if (std::abs(e1 * e1 - 3.0L * e2) <= 1e-20L * s2 &&
            std::abs(e1 * e1 * e1 - 27.0L * e3) <= 1e-20L * s3) {
            const ComplexL r = e1 / 3.0L;
            const Complex rd(static_cast<double>(r.real()), static_cast<double>(r.imag()));
            return {rd, rd, rd};
        }
    }

    // Double root when the discriminant vanishes (relative to the term scale).
    {
        const ComplexL t1 = 18.0L * e1 * e2 * e3;
        const ComplexL t2 = -4.0L * e1 * e1 * e1 * e3;
        const ComplexL t3 = e1 * e1 * e2 * e2;
        const ComplexL t4 = -4.0L * e2 * e2 * e2;
        const ComplexL t5 = -27.0L * e3 * e3;
        const ComplexL disc = t1 + t2 + t3 + t4 + t5;
        const long double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4),
                                            std::abs(t5)});
        if (std::abs(disc) <= 1e-16L * scale) {
            const ComplexL r = (e1 * e2 - 9.0L * e3) / (2.0L * (e1 * e1 - 3.0L * e2));
            ComplexL s = e1 - 2.0L * r;
            s = detail::polish_newton(e1, e2, e3, s);
            const Complex rd(static_cast<double>(r.real()), static_cast<double>(r.imag()));
            const Complex sd(static_cast<double>(s.real()), static_cast<double>(s.imag()));
            return {rd, rd, sd};
        }
    }

    // Durand-Kerner on three simultaneous approximations.
    const ComplexL seed(0.4L, 0.9L);
    std::array<ComplexL, 3> z{seed * (radius + 0.5L), seed * seed * (radius + 0.5L),
                              seed * seed * seed * (radius + 0.5L)};
    bool converged = false;
    for (int it = 0; it < 2000 && !converged; ++it) {
        long double max_step = 0.0L;
        for (std::size_t i = 0; i < 3; ++i) {
            ComplexL denom(1.0L, 0.0L);
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0L) {
                z[i] += ComplexL(1e-6L, 1e-6L) * (radius + 1.0L);
                max_step = radius;
                continue;
            }
            const ComplexL step = detail::eval_cubic(e1, e2, e3, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step <= 1e-18L * (radius + 1.0L);
    }
    for (auto& zi : z) zi = detail::polish_newton(e1, e2, e3, zi);

    // Validate by reconstructing the coefficients from the computed roots.
    const ComplexL r1 = z[0] + z[1] + z[2];
    const ComplexL r2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
    const ComplexL r3 = z[0] * z[1] * z[2];
    const long double vtol = std::max(static_cast<long double>(tol), 1e-13L);
    if (std::abs(r1 - e1) > vtol * std::max(1.0L, radius) ||
        std::abs(r2 - e2) > vtol * std::max(1.0L, radius * radius) ||
        std::abs(r3 - e3) > vtol * std::max(1.0L, radius * radius * radius))
        throw NumericError("cubic oracle failed to converge to the requested accuracy");

    std::array<Complex, 3> out{};
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = Complex(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
    return out;
}

/// Reconstructs the Satake class of a Hecke datum through the cubic oracle.
inline UnitaryClass3 satake_class(const HeckeDatumF& d, double tol = kDefaultTol) {
    const auto e = elementary_symmetrics(d, tol);
    return {roots_oracle(e[0], e[1], e[2]), d.p};
}

inline UnitaryClass3 satake_class(const HeckeDatumQ& d, double tol = kDefaultTol) {
    return satake_class(to_floating(d), tol);
}

/// Tempered / non-tempered / inconsistent trichotomy. Boundary classes within
/// tol of the unit circle count as tempered; a non-tempered verdict carries the
/// canonical shape with t > 0 fixed by |alpha_max| = p^t > 1.
inline ClassifyResult classify(const UnitaryClass3& c, double tol = kDefaultTol) {
    for (const auto& a : c.alphas)
        if (a == Complex(0.0, 0.0)) throw InvalidClassError("Satake class entries must be nonzero");
    if (!unitarity_consistent(c, tol)) return {Verdict::Inconsistent, std::nullopt};

    bool tempered = true;
    for (const auto& a : c.alphas)
        if (std::abs(std::abs(a) - 1.0) > tol) tempered = false;
    if (tempered) return {Verdict::Tempered, std::nullopt};

    std::array<Complex, 3> sorted = c.alphas;
    std::sort(sorted.begin(), sorted.end(),
              [](const Complex& x, const Complex& y) { return std::abs(x) < std::abs(y); });
    const Complex lo = sorted[0];
    const Complex mid = sorted[1];
    const Complex hi = sorted[2];

    const double mod_hi = std::abs(hi);
    const double logp = std::log(static_cast<double>(c.p));
    NonTemperedShape shape;
    shape.t = std::log(mod_hi) / logp;
    shape.u = hi / mod_hi;
    shape.w = mid;
    if (shape.t <= 0.0) return {Verdict::Inconsistent, std::nullopt};
    if (std::abs(std::abs(mid) - 1.0) > tol) return {Verdict::Inconsistent, std::nullopt};
    // The remaining entry must be the reflected partner u p^-t.
    const Complex partner = shape.u * std::pow(static_cast<double>(c.p), -shape.t);
    if (std::abs(lo - partner) > 3.0 * tol) return {Verdict::Inconsistent, std::nullopt};

    double theta = std::arg(std::conj(shape.u) * shape.w);
    if (theta < 0.0) theta += 2.0 * M_PI;
    shape.theta = theta;
    return {Verdict::NonTempered, shape};
}

/// Rebuilds the class {u p^t, u p^-t, w} from its canonical shape.
inline UnitaryClass3 reconstruct_shape(const NonTemperedShape& s, std::int64_t p) {
    const double pt = std::pow(static_cast<double>(p), s.t);
    return {{s.u * pt, s.u / pt, s.w}, p};
}

/// |trace|^2 of a non-tempered class in closed form:
/// 3 + p^{2t} + p^{-2t} + 2 cos(theta) (p^t + p^{-t}).
inline double trace_squared_formula(std::int64_t p, double t, double theta) {
    const double pt = std::pow(static_cast<double>(p), t);
    return 3.0 + pt * pt + 1.0 / (pt * pt) + 2.0 * std::cos(theta) * (pt + 1.0 / pt);
}

inline double trace_squared_formula(const NonTemperedShape& s, std::int64_t p) {
    return trace_squared_formula(p, s.t, s.theta);
}

/// Certifies temperedness from the trace alone: |a_p| <= 1 forces every class
/// parameter onto the unit circle, because any non-tempered class satisfies
/// |a_p|^2 >= (p^t + p^{-t} - 1)^2 > 1 (the theta = pi minimum of the closed
/// form above). Returns false when no certificate follows; the class may still
/// be tempered.
inline bool trace_bound_certificate(const HeckeDatumF& d, double tol = kDefaultTol) {
    if (std::abs(std::abs(d.omega) - 1.0) > tol)
        throw InvalidDatumError("central-character value must have modulus 1");
    return std::norm(d.a) <= 1.0;
}

/// Exact-rational variant: |a_p|^2 <= 1 decided with no rounding.
inline bool trace_bound_certificate(const HeckeDatumQ& d) {
    if (norm(d.omega) != 1)
        throw InvalidDatumError("central-character value must have norm exactly 1");
    return norm(d.a) <= 1;
}

}  // namespace tempered
