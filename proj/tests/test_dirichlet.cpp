#include "tempered/dirichlet.hpp"

#include "helpers.hpp"
#include "tempered/lift.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace tempered;

namespace {

std::map<std::int64_t, HeckeDatumQ> delta_lift(std::int64_t p_max) {
    return lift_newform(delta_newform(p_max));
}

std::map<std::int64_t, HeckeDatumF> synthetic_nontempered(std::int64_t p_max, double t) {
    std::map<std::int64_t, HeckeDatumF> data;
    for (std::int64_t p : primes_up_to(p_max))
        data.emplace(p, testutil::datum_of(reconstruct_shape({t, Complex(1, 0), Complex(1, 0), 0.0}, p)));
    return data;
}

}  // namespace

TEST_CASE("series builder lays out the full requested window") {
    const auto series = build_adjoint_log_series(delta_lift(7), {}, 7, 3);
    REQUIRE(series.entries.size() == 12);  // 4 primes x 3 depths
    REQUIRE(series.p_max == 7);
    REQUIRE(series.m_max == 3);
    REQUIRE(series.entries.at({2, 1}) == Rational(-495, 1024));
}

TEST_CASE("series builder names the missing prime") {
    try {
        build_adjoint_log_series(delta_lift(7), {}, 11, 3);
        FAIL("expected IncompleteDataError");
    } catch (const IncompleteDataError& e) {
        REQUIRE(e.prime() == 11);
    }
}

TEST_CASE("excluding a prime removes it from the window requirement") {
    const auto series = build_adjoint_log_series(delta_lift(7), {11, 13}, 13, 2);
    REQUIRE(series.entries.size() == 8);
    REQUIRE(series.excluded.count(11) == 1);
}

TEST_CASE("series builder validates the window") {
    REQUIRE_THROWS_AS(build_adjoint_log_series(delta_lift(7), {}, 1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(build_adjoint_log_series(delta_lift(7), {}, 7, 0), std::invalid_argument);
}

TEST_CASE("positivity scan reports the first negative coefficient in (p, m) order") {
    const auto report = positive_type_scan(build_adjoint_log_series(delta_lift(30), {}, 30, 3));
    REQUIRE_FALSE(report.is_positive_type);
    REQUIRE(report.first_negative.has_value());
    REQUIRE(report.first_negative->p == 2);
    REQUIRE(report.first_negative->m == 1);
    REQUIRE(report.first_negative->value == Rational(-495, 1024));
    REQUIRE(report.scanned == 30);
    REQUIRE(report.negative_count > 0);
}

TEST_CASE("synthetic non-tempered corpora scan as positive type") {
    const auto series = build_adjoint_log_series(synthetic_nontempered(100, 0.2), {}, 100, 5);
    const auto report = positive_type_scan(series, 1e-9);
    REQUIRE(report.is_positive_type);
    REQUIRE(report.negative_count == 0);
    const auto witnesses = witness_report(series, 1e-9);
    REQUIRE(witnesses.witnesses.empty());
    REQUIRE(witnesses.density == 0.0);
    REQUIRE(witnesses.scanned_primes == 25);
}

TEST_CASE("witness report collects the smallest negative depth per prime") {
    const auto series = build_adjoint_log_series(delta_lift(100), {}, 100, 3);
    const auto summary = witness_report(series);
    REQUIRE(summary.scanned_primes == 25);
    REQUIRE(summary.witnesses.size() == 25);
    REQUIRE(summary.density == 1.0);
    REQUIRE(summary.witnesses.front().p == 2);
    REQUIRE(summary.witnesses.front().m == 1);
    REQUIRE(summary.witnesses.front().value == Rational(-495, 1024));
    // p = 47 resists until depth 2.
    for (const auto& w : summary.witnesses)
        if (w.p == 47) REQUIRE(w.m == 2);
}

TEST_CASE("a delta margin suppresses rounding-noise negatives") {
    std::map<std::int64_t, HeckeDatumF> data;
    data.emplace(2, HeckeDatumF{2, Complex(std::sqrt(1.0 - 1e-12), 0), Complex(1, 0)});
    const auto series = build_adjoint_log_series(data, {}, 2, 1);
    REQUIRE(positive_type_scan(series, 1e-9).is_positive_type);
    REQUIRE_FALSE(positive_type_scan(series, 0.0).is_positive_type);
    REQUIRE(witness_report(series, 1e-9).witnesses.empty());
    REQUIRE(witness_report(series, 0.0).witnesses.size() == 1);
}

TEST_CASE("incomplete evaluation matches the direct Euler product") {
    const auto data = delta_lift(100);
    const auto series = build_adjoint_log_series(data, {}, 100, 25);
    const double s = 3.0;
    const double value = evaluate_incomplete(series, s).value;
    double product = 1.0;
    for (const auto& [p, d] : data)
        product *= local_factor_adjoint(satake_class(d), Complex(s, 0)).real();
    REQUIRE(std::abs(value - product) <= 1e-10 * std::abs(product));
}

TEST_CASE("incomplete evaluation at s = 3 over the first 25 primes") {
    const auto series = build_adjoint_log_series(delta_lift(100), {}, 100, 5);
    const EvalResult result = evaluate_incomplete(series, 3.0);
    REQUIRE(result.value == Catch::Approx(0.9355071775544606).margin(1e-12));
    REQUIRE(result.s == 3.0);
    REQUIRE(result.tail_bound == Catch::Approx(0.12).margin(1e-14));
    REQUIRE(result.value < 1.0);
}

TEST_CASE("synthetic corpora evaluate above 1") {
    const auto series = build_adjoint_log_series(synthetic_nontempered(100, 0.2), {}, 100, 5);
    REQUIRE(evaluate_incomplete(series, 3.0).value > 1.0);
}

TEST_CASE("evaluation requires s > 2") {
    const auto series = build_adjoint_log_series(delta_lift(7), {}, 7, 2);
    REQUIRE_THROWS_AS(evaluate_incomplete(series, 2.0), DomainError);
    REQUIRE_THROWS_AS(evaluate_incomplete(series, 1.5), DomainError);
}

TEST_CASE("an empty window evaluates to the empty product") {
    const auto series = build_adjoint_log_series(delta_lift(7), {2}, 2, 3);
    REQUIRE(series.entries.empty());
    REQUIRE(evaluate_incomplete(series, 3.0).value == 1.0);
    const auto witnesses = witness_report(series);
    REQUIRE(witnesses.scanned_primes == 0);
    REQUIRE(witnesses.density == 0.0);
    REQUIRE(positive_type_scan(series).is_positive_type);
}

TEST_CASE("floating and exact series agree on the Delta lift") {
    const auto exact_data = delta_lift(50);
    std::map<std::int64_t, HeckeDatumF> floating_data;
    for (const auto& [p, d] : exact_data) floating_data.emplace(p, to_floating(d));
    const auto exact_series = build_adjoint_log_series(exact_data, {}, 50, 4);
    const auto floating_series = build_adjoint_log_series(floating_data, {}, 50, 4);
    for (const auto& [key, value] : exact_series.entries) {
        const double reference = to_double(value);
        REQUIRE(floating_series.entries.at(key) ==
                Catch::Approx(reference).margin(1e-9).epsilon(1e-9));
    }
}
