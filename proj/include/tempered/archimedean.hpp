#pragma once

#include "tempered/errors.hpp"
#include "tempered/rational.hpp"
#include "tempered/satake.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace tempered {

inline constexpr double kPoleTol = 1e-9;

namespace detail {

/// Principal-branch-agnostic log Gamma via the Lanczos approximation
/// (g = 607/128, 15 terms), with the reflection formula on Re(z) < 0.5.
/// Relative accuracy of exp(log_gamma) is ~1e-14 on the tested range.
inline Complex log_gamma(Complex z) {
    static constexpr double kG = 607.0 / 128.0;
    static constexpr std::array<double, 15> kC = {
        0.99999999999999709182,    57.156235665862923517,   -59.597960355475491248,
        14.136097974741747174,     -0.49191381609762019978,  0.000033994649984811888699,
        0.000046523628927048575665, -0.000098374475304879564677, 0.00015808870322491248884,
        -0.00021026444172410488319, 0.00021743961811521264320, -0.00016431810653676389022,
        0.000084418223983852743293, -0.000026190838401581408670, 0.0000036899182659531622704};

    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        const Complex log_sin = std::log(std::sin(M_PI * z));
        return std::log(Complex(M_PI, 0.0)) - log_sin - log_gamma(1.0 - z);
    }
    Complex sum(kC[0], 0.0);
    for (std::size_t k = 1; k < kC.size(); ++k) sum += kC[k] / (z - 1.0 + static_cast<double>(k));
    const Complex base = z + kG - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(base) - base + std::log(sum);
}

/// Order (0 or 1) of the pole of Gamma_R at s: simple poles on {0, -2, -4, ...}.
inline int gamma_r_pole_order(const Complex& s, double tol = kPoleTol) {
    const double k = std::round(-s.real() / 2.0);
    if (k < 0.0) return 0;
    return std::abs(s - Complex(-2.0 * k, 0.0)) <= tol ? 1 : 0;
}

}  // namespace detail

/// Gamma_R(s) = pi^{-s/2} Gamma(s/2), the archimedean Euler factor building
/// block. Never vanishes; simple poles at the even nonpositive integers.
inline Complex gamma_R(const Complex& s) {
    if (detail::gamma_r_pole_order(s) > 0)
        throw PoleError("Gamma_R pole at an even nonpositive integer", 1);
    return std::exp(detail::log_gamma(s / 2.0) - s / 2.0 * std::log(Complex(M_PI, 0.0)));
}

/// Archimedean parameters (z_j, delta_j) of the standard local factor
/// prod_j Gamma_R(s + z_j + delta_j). Unitarity forces the multiset {z_j}
/// and {-conj(z_j)} to coincide: either all z_j purely imaginary, or one
/// purely imaginary and the other two of the form u +- t with Re(u) = 0,
/// t > 0.
struct ArchParams {
    std::array<Complex, 3> z{};
    std::array<int, 3> delta{0, 0, 0};
};

inline bool arch_params_consistent(const ArchParams& params, double tol = kDefaultTol) {
    for (int d : params.delta)
        if (d != 0 && d != 1) return false;
    std::array<Complex, 3> lhs{};
    std::array<Complex, 3> rhs{};
    for (std::size_t j = 0; j < 3; ++j) {
        lhs[j] = params.z[j];
        rhs[j] = -std::conj(params.z[j]);
    }
    return detail::multiset_match3(lhs, rhs, 3.0 * tol);
}

/// The 8-element adjoint parameter multiset: {z_i + conj(z_j)} over all nine
/// pairs with one zero element removed. The unitarity invariant guarantees a
/// zero exists (a purely imaginary z_j contributes z_j + conj(z_j) = 0), and
/// another zero always survives the removal.
struct ArchAdjointSet {
    std::array<Complex, 8> B{};
};

inline ArchAdjointSet arch_adjoint_set(const ArchParams& params, double tol = kDefaultTol) {
    if (!arch_params_consistent(params, tol))
        throw InvalidParamsError("archimedean parameters violate the unitarity invariant");
    std::array<Complex, 9> sums{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) sums[k++] = params.z[i] + std::conj(params.z[j]);
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 9; ++i)
        if (std::abs(sums[i]) < std::abs(sums[drop])) drop = i;
    if (std::abs(sums[drop]) > 3.0 * tol)
        throw InvalidParamsError("adjoint parameter multiset contains no zero element");
    ArchAdjointSet out;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 9; ++i)
        if (i != drop) out.B[n++] = sums[i];
    return out;
}

/// Number of elements of B lying on the pole set {0, -2, -4, ...} of Gamma_R;
/// this is the pole order of the adjoint archimedean factor at s = 0.
/// At least 1 for every valid parameter set, since 0 is always in B.
inline int pole_order_at_zero(const ArchParams& params, double tol = kDefaultTol) {
    const ArchAdjointSet set = arch_adjoint_set(params, tol);
    int order = 0;
    for (const auto& b : set.B) order += detail::gamma_r_pole_order(b, kPoleTol);
    return order;
}

/// The adjoint archimedean factor prod_{b in B} Gamma_R(s + b). Throws a
/// PoleError carrying the total pole order when s hits the pole set.
inline Complex adjoint_gamma_factor(const ArchParams& params, const Complex& s,
                                    double tol = kDefaultTol) {
    const ArchAdjointSet set = arch_adjoint_set(params, tol);
    int order = 0;
    for (const auto& b : set.B) order += detail::gamma_r_pole_order(s + b, kPoleTol);
    if (order > 0) throw PoleError("adjoint gamma factor pole", order);
    Complex value(1.0, 0.0);
    for (const auto& b : set.B) value *= gamma_R(s + b);
    return value;
}

/// The standard local factor prod_j Gamma_R(s + z_j + delta_j).
inline Complex standard_gamma_factor(const ArchParams& params, const Complex& s,
                                     double tol = kDefaultTol) {
    if (!arch_params_consistent(params, tol))
        throw InvalidParamsError("archimedean parameters violate the unitarity invariant");
    int order = 0;
    for (std::size_t j = 0; j < 3; ++j)
        order += detail::gamma_r_pole_order(s + params.z[j] + static_cast<double>(params.delta[j]),
                                            kPoleTol);
    if (order > 0) throw PoleError("standard gamma factor pole", order);
    Complex value(1.0, 0.0);
    for (std::size_t j = 0; j < 3; ++j)
        value *= gamma_R(s + params.z[j] + static_cast<double>(params.delta[j]));
    return value;
}

}  // namespace tempered
