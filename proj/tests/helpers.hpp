// Shared test utilities: a seeded generator for reproducible coefficient
// sequences, and tail-bound helpers for series/closed-form comparisons.

#ifndef HARMCONV_TESTS_HELPERS_HPP
#define HARMCONV_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <harmconv/harmonic.hpp>
#include <harmconv/series.hpp>

namespace testutil {

using cplx = std::complex<double>;
using series = harmconv::analytic_series<double>;
using hmap = harmconv::harmonic_map<double>;

class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0)
    {
        // Fixed mapping from raw 64-bit draws; independent of library
        // distribution implementations.
        const double u = std::ldexp(static_cast<double>(gen_()), -64);
        return lo + (hi - lo) * u;
    }

    cplx in_disk(double radius)
    {
        const double r = radius * std::sqrt(uniform());
        const double t = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(r, t);
    }

    cplx on_circle(double radius)
    {
        return std::polar(radius, uniform(0.0, 2.0 * std::numbers::pi));
    }

private:
    std::mt19937_64 gen_;
};

/// Random series with |c_k| <= bound(k); c_0 = 0.
inline series random_decaying(rng& r, std::size_t order, double (*bound)(std::size_t))
{
    std::vector<cplx> c(order + 1, cplx{});
    for (std::size_t k = 1; k <= order; ++k)
        c[k] = std::polar(bound(k) * r.uniform(), r.uniform(0.0, 2.0 * std::numbers::pi));
    return series(std::move(c));
}

inline double inv_k2(std::size_t k) { return 1.0 / (double(k) * double(k)); }

/// Random normalized series (c_0 = 0, c_1 = 1, |c_k| <= 1/k^2 above).
inline series random_normalized(rng& r, std::size_t order)
{
    auto p = random_decaying(r, order, inv_k2);
    std::vector<cplx> c(p.coeffs());
    c[1] = cplx(1.0);
    return series(std::move(c));
}

/// Random g-part for a class-H map: c_0 = c_1 = 0, |c_k| <= 1/k^2.
inline series random_gpart(rng& r, std::size_t order)
{
    auto p = random_decaying(r, order, inv_k2);
    std::vector<cplx> c(p.coeffs());
    c[1] = cplx{};
    return series(std::move(c));
}

/// sum_{n > N} (n+1)^p r^n, an upper tail for series with |c_n| <= (n+1)^p.
inline double poly_tail(std::size_t order, double r, int p)
{
    double sum = 0.0;
    double rn = std::pow(r, double(order + 1));
    for (std::size_t n = order + 1; n < order + 200000; ++n) {
        const double term = std::pow(double(n + 1), double(p)) * rn;
        sum += term;
        if (term < 1e-25 * (1.0 + sum))
            break;
        rn *= r;
    }
    return sum;
}

} // namespace testutil

#endif
