#include "tempered/archimedean.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace tempered;

TEST_CASE("gamma_R special values") {
    REQUIRE(std::abs(gamma_R(Complex(1, 0)) - Complex(1, 0)) < 1e-13);
    REQUIRE(std::abs(gamma_R(Complex(2, 0)) - Complex(1.0 / M_PI, 0)) < 1e-14);
    REQUIRE(std::abs(gamma_R(Complex(3, 0)) - Complex(1.0 / (2.0 * M_PI), 0)) < 1e-14);
    REQUIRE(std::abs(gamma_R(Complex(4, 0)) - Complex(1.0 / (M_PI * M_PI), 0)) < 1e-14);
    // Reflection branch: Gamma_R(-1) = pi^{1/2} Gamma(-1/2) = -2 pi.
    REQUIRE(std::abs(gamma_R(Complex(-1, 0)) - Complex(-2.0 * M_PI, 0)) < 1e-11);
}

TEST_CASE("gamma_R satisfies its functional equation") {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> re(0.2, 5.0), im(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex s(re(rng), im(rng));
        const Complex lhs = gamma_R(s + 2.0);
        const Complex rhs = s / (2.0 * M_PI) * gamma_R(s);
        REQUIRE(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("gamma_R matches factorial values through the Gamma function") {
    // Gamma_R(2k) = pi^{-k} (k-1)!
    double factorial = 1.0;
    for (int k = 1; k <= 8; ++k) {
        const double expected = std::pow(M_PI, -k) * factorial;
        REQUIRE(std::abs(gamma_R(Complex(2.0 * k, 0)) - Complex(expected, 0)) <=
                1e-13 * expected);
        factorial *= k;
    }
}

TEST_CASE("gamma_R has simple poles at the even nonpositive integers") {
    for (double s : {0.0, -2.0, -4.0, -10.0}) {
        try {
            gamma_R(Complex(s, 0));
            FAIL("expected PoleError");
        } catch (const PoleError& e) {
            REQUIRE(e.order() == 1);
        }
    }
    REQUIRE_THROWS_AS(gamma_R(Complex(-2.0 + 1e-12, 0)), PoleError);
    REQUIRE_NOTHROW(gamma_R(Complex(-1.0, 0)));
    REQUIRE_NOTHROW(gamma_R(Complex(-2.0, 0.5)));
}

TEST_CASE("parameter consistency accepts the two unitary shapes") {
    REQUIRE(arch_params_consistent({{Complex(0, 1), Complex(0, 0), Complex(0, -1)}, {0, 0, 0}}));
    REQUIRE(arch_params_consistent({{Complex(0, 0.7), Complex(0, -2.1), Complex(0, 0.4)}, {1, 0, 1}}));
    REQUIRE(arch_params_consistent(
        {{Complex(0.3, 0.5), Complex(-0.3, 0.5), Complex(0, -1)}, {0, 0, 0}}));
    REQUIRE(arch_params_consistent({{Complex(1.0 / 3, 0), Complex(0, 0), Complex(-1.0 / 3, 0)},
                                    {0, 0, 0}}));
}

TEST_CASE("parameter consistency rejects broken shapes") {
    REQUIRE_FALSE(arch_params_consistent({{Complex(0.3, 0), Complex(0, 0), Complex(0, 0)}, {0, 0, 0}}));
    REQUIRE_FALSE(arch_params_consistent({{Complex(0.3, 0.5), Complex(-0.2, 0.5), Complex(0, -1)},
                                          {0, 0, 0}}));
    REQUIRE_FALSE(arch_params_consistent({{Complex(0, 1), Complex(0, 0), Complex(0, -1)}, {2, 0, 0}}));
}

TEST_CASE("the adjoint parameter multiset always contains zero") {
    const ArchParams zeros{{Complex(0, 0), Complex(0, 0), Complex(0, 0)}, {0, 0, 0}};
    const auto set = arch_adjoint_set(zeros);
    for (const auto& b : set.B) REQUIRE(std::abs(b) < 1e-15);
    REQUIRE(pole_order_at_zero(zeros) == 8);
}

TEST_CASE("pole order at zero for the standard examples") {
    REQUIRE(pole_order_at_zero({{Complex(0, 1), Complex(0, 0), Complex(0, -1)}, {0, 0, 0}}) == 2);
    REQUIRE(pole_order_at_zero({{Complex(1.0 / 3, 0), Complex(0, 0), Complex(-1.0 / 3, 0)},
                                {0, 0, 0}}) == 2);
}

TEST_CASE("every valid parameter set produces a pole at s = 0") {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> y(-3.0, 3.0), t(0.05, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        ArchParams params;
        if (trial % 2 == 0) {
            params.z = {Complex(0, y(rng)), Complex(0, y(rng)), Complex(0, y(rng))};
        } else {
            const double tt = t(rng);
            const double yy = y(rng);
            params.z = {Complex(tt, yy), Complex(-tt, yy), Complex(0, y(rng))};
        }
        REQUIRE(arch_params_consistent(params));
        REQUIRE(pole_order_at_zero(params) >= 1);
    }
}

TEST_CASE("adjoint gamma factor evaluates at regular points and reports poles") {
    const ArchParams zeros{{Complex(0, 0), Complex(0, 0), Complex(0, 0)}, {0, 0, 0}};
    REQUIRE(std::abs(adjoint_gamma_factor(zeros, Complex(1, 0)) - Complex(1, 0)) < 1e-12);
    try {
        adjoint_gamma_factor(zeros, Complex(0, 0));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        REQUIRE(e.order() == 8);
    }

    const ArchParams sym{{Complex(0, 1), Complex(0, 0), Complex(0, -1)}, {0, 0, 0}};
    try {
        adjoint_gamma_factor(sym, Complex(0, 0));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        REQUIRE(e.order() == 2);
    }
    // The shifted pole set: at s = -2 the two zero entries of B pole again.
    try {
        adjoint_gamma_factor(sym, Complex(-2, 0));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        REQUIRE(e.order() == 2);
    }
}

TEST_CASE("standard gamma factor multiplies the three building blocks") {
    const ArchParams params{{Complex(0, 0), Complex(0, 0), Complex(0, 0)}, {0, 1, 0}};
    const Complex expected = gamma_R(Complex(1, 0)) * gamma_R(Complex(2, 0)) * gamma_R(Complex(1, 0));
    REQUIRE(std::abs(standard_gamma_factor(params, Complex(1, 0)) - expected) < 1e-14);
    REQUIRE_THROWS_AS(standard_gamma_factor(params, Complex(0, 0)), PoleError);
}

TEST_CASE("invalid parameters are rejected up front") {
    const ArchParams bad{{Complex(1, 0), Complex(0, 0), Complex(0, 0)}, {0, 0, 0}};
    REQUIRE_THROWS_AS(arch_adjoint_set(bad), InvalidParamsError);
    REQUIRE_THROWS_AS(pole_order_at_zero(bad), InvalidParamsError);
    REQUIRE_THROWS_AS(adjoint_gamma_factor(bad, Complex(1, 0)), InvalidParamsError);
    REQUIRE_THROWS_AS(standard_gamma_factor(bad, Complex(1, 0)), InvalidParamsError);
}
