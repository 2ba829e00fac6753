#pragma once

#include "tempered/adjoint.hpp"
#include "tempered/errors.hpp"
#include "tempered/primes.hpp"
#include "tempered/rational.hpp"
#include "tempered/satake.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tempered {

/// Truncated logarithm of an incomplete adjoint Euler product: a sparse map
/// from prime powers (p, m) to the adjoint coefficients a_{p^m}(Ad), complete
/// over the window p <= p_max (p outside the excluded set), m <= m_max.
/// Real is double or Rational.
template <class Real>
struct LogDirichletSeries {
    std::map<std::pair<std::int64_t, int>, Real> entries;
    std::set<std::int64_t> excluded;
    std::int64_t p_max = 0;
    int m_max = 0;
};

template <class Real>
struct FirstNegative {
    std::int64_t p = 0;
    int m = 0;
    Real value{};
};

template <class Real>
struct PositivityReport {
    bool is_positive_type = true;  // up to the window
    std::optional<FirstNegative<Real>> first_negative;
    std::int64_t negative_count = 0;
    std::int64_t scanned = 0;
};

struct EvalResult {
    double value = 1.0;
    double tail_bound = 0.0;
    double s = 0.0;
};

template <class Real>
struct Witness {
    std::int64_t p = 0;
    int m = 0;  // smallest index with a negative coefficient
    Real value{};
};

template <class Real>
struct WitnessSummary {
    std::vector<Witness<Real>> witnesses;
    std::int64_t scanned_primes = 0;
    double density = 0.0;  // fraction of scanned primes with a negative witness
};

/// Assembles the log series from per-prime Hecke data. Every prime in the
/// window must be present; the corpus's ramified primes belong in `excluded`.
template <class C>
LogDirichletSeries<typename scalar_traits<C>::real_type> build_adjoint_log_series(
    const std::map<std::int64_t, HeckeDatum<C>>& data, const std::set<std::int64_t>& excluded,
    std::int64_t p_max, int m_max) {
    if (p_max < 2 || m_max < 1)
        throw std::invalid_argument("series window must satisfy p_max >= 2, m_max >= 1");
    LogDirichletSeries<typename scalar_traits<C>::real_type> series;
    series.excluded = excluded;
    series.p_max = p_max;
    series.m_max = m_max;
    for (std::int64_t p : primes_up_to(p_max)) {
        if (excluded.count(p)) continue;
        const auto it = data.find(p);
        if (it == data.end())
            throw IncompleteDataError("corpus has no datum for prime " + std::to_string(p), p);
        const auto coeffs = adjoint_coefficients(it->second, m_max);
        for (int m = 1; m <= m_max; ++m)
            series.entries.emplace(std::make_pair(p, m), coeffs[static_cast<std::size_t>(m - 1)]);
    }
    return series;
}

namespace detail {

inline bool coefficient_negative(double value, double delta) { return value < -delta; }
inline bool coefficient_negative(const Rational& value, double /*delta*/) { return value < 0; }

}  // namespace detail

/// Scans the window in increasing (p, m) order for strictly negative
/// coefficients (floating mode: below -delta). The series is of positive type
/// over the window exactly when no such coefficient exists.
template <class Real>
PositivityReport<Real> positive_type_scan(const LogDirichletSeries<Real>& series,
                                          double delta = 0.0) {
    PositivityReport<Real> report;
    for (const auto& [key, value] : series.entries) {
        ++report.scanned;
        if (detail::coefficient_negative(value, delta)) {
            ++report.negative_count;
            if (!report.first_negative)
                report.first_negative = FirstNegative<Real>{key.first, key.second, value};
        }
    }
    report.is_positive_type = !report.first_negative.has_value();
    return report;
}

/// Exponentiates the truncated log series at a real point s > 2, where the
/// trivial bound t <= 1/2 on non-tempered exponents makes the full series
/// absolutely convergent. The reported tail bound dominates the log-scale
/// contribution of all primes beyond the window:
///   |a_{p^m}(Ad)| <= 9 p^m, so the omitted mass is at most
///   9 * sum_{p > P} sum_{m >= 1} p^{-m(s-1)} <= 9/(1-2^{1-s}) * P^{2-s}/(s-2).
/// Truncation in m is not included; choose m_max accordingly.
template <class Real>
EvalResult evaluate_incomplete(const LogDirichletSeries<Real>& series, double s) {
    if (!(s > 2.0)) throw DomainError("evaluation requires s > 2 for guaranteed convergence");
    double log_sum = 0.0;
    for (const auto& [key, value] : series.entries) {
        const auto& [p, m] = key;
        log_sum += to_double(value) / m * std::pow(static_cast<double>(p), -s * m);
    }
    const double pmax = static_cast<double>(series.p_max);
    const double tail =
        9.0 / (1.0 - std::pow(2.0, 1.0 - s)) * std::pow(pmax, 2.0 - s) / (s - 2.0);
    return {std::exp(log_sum), tail, s};
}

/// Collects every prime in the window holding a negative adjoint coefficient
/// at some m <= m_max. Each such prime is a certified Ramanujan prime: a
/// non-tempered class forces all its adjoint coefficients positive.
template <class Real>
WitnessSummary<Real> witness_report(const LogDirichletSeries<Real>& series, double delta = 0.0) {
    WitnessSummary<Real> summary;
    std::set<std::int64_t> seen;
    for (const auto& [key, value] : series.entries) {
        const auto& [p, m] = key;
        seen.insert(p);
        if (detail::coefficient_negative(value, delta)) {
            if (!summary.witnesses.empty() && summary.witnesses.back().p == p) continue;
            summary.witnesses.push_back(Witness<Real>{p, m, value});
        }
    }
    summary.scanned_primes = static_cast<std::int64_t>(seen.size());
    summary.density = summary.scanned_primes == 0
                          ? 0.0
                          : static_cast<double>(summary.witnesses.size()) /
                                static_cast<double>(summary.scanned_primes);
    return summary;
}

}  // namespace tempered
