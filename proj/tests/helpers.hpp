#pragma once

#include "tempered/primes.hpp"
#include "tempered/satake.hpp"

#include <cmath>
#include <random>

// Seeded generators shared by the unit and acceptance suites.
namespace testutil {

inline tempered::Complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    return std::polar(1.0, angle(rng));
}

inline tempered::UnitaryClass3 random_tempered(std::mt19937_64& rng, std::int64_t p) {
    return {{random_unit(rng), random_unit(rng), random_unit(rng)}, p};
}

inline tempered::NonTemperedShape random_shape(std::mt19937_64& rng, double t_lo, double t_hi) {
    std::uniform_real_distribution<double> t_dist(t_lo, t_hi);
    tempered::NonTemperedShape shape;
    shape.t = t_dist(rng);
    shape.u = random_unit(rng);
    shape.w = random_unit(rng);
    double theta = std::arg(std::conj(shape.u) * shape.w);
    if (theta < 0.0) theta += 2.0 * M_PI;
    shape.theta = theta;
    return shape;
}

inline tempered::UnitaryClass3 random_nontempered(std::mt19937_64& rng, std::int64_t p,
                                                  double t_lo, double t_hi) {
    return tempered::reconstruct_shape(random_shape(rng, t_lo, t_hi), p);
}

inline tempered::HeckeDatumF datum_of(const tempered::UnitaryClass3& c) {
    return {c.p, c.alphas[0] + c.alphas[1] + c.alphas[2],
            c.alphas[0] * c.alphas[1] * c.alphas[2]};
}

inline std::array<tempered::Complex, 3> symmetrics_of(const tempered::UnitaryClass3& c) {
    return {c.alphas[0] + c.alphas[1] + c.alphas[2],
            c.alphas[0] * c.alphas[1] + c.alphas[0] * c.alphas[2] + c.alphas[1] * c.alphas[2],
            c.alphas[0] * c.alphas[1] * c.alphas[2]};
}

inline std::int64_t random_prime(std::mt19937_64& rng, std::size_t count) {
    static const std::vector<std::int64_t> pool = tempered::first_primes(100);
    std::uniform_int_distribution<std::size_t> pick(0, std::min(count, pool.size()) - 1);
    return pool[pick(rng)];
}

}  // namespace testutil
