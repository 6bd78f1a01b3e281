// Numerical certification of the hypotheses and conclusions the theorems
// use: Re-ratio bounds, sense-preservation, boundary univalence,
// convexity in one direction, full convexity, and the two imported
// inequality spot-checks. Conditions stated "for all z in the disk" are
// certified on compact subdisk grids; every report carries its r_max.

#ifndef HARMCONV_CHECKS_HPP
#define HARMCONV_CHECKS_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "grid.hpp"
#include "harmonic.hpp"
#include "report.hpp"
#include "series.hpp"

namespace harmconv {

namespace detail {

inline constexpr double vanishing_tol = 1e-13;

/// Minimum of margin_at over the grid; margin_at returns nullopt where
/// the checked quantity is undefined, which fails the report with that
/// point as witness.
template <std::floating_point T, typename MarginFn>
check_report<T> min_margin_over_grid(const disk_grid<T>& grid, MarginFn&& margin_at,
                                     std::string criterion,
                                     std::vector<std::pair<std::string, T>> details = {})
{
    T best = std::numeric_limits<T>::infinity();
    std::complex<T> witness{};
    bool undefined = false;
    std::complex<T> undefined_at{};
    grid.for_each_point([&](std::complex<T> z) {
        if (undefined)
            return;
        const std::optional<T> m = margin_at(z);
        if (!m) {
            undefined = true;
            undefined_at = z;
            return;
        }
        if (*m < best) {
            best = *m;
            witness = z;
        }
    });
    if (undefined) {
        details.emplace_back("undefined_at_witness", T(1));
        return make_report(std::move(criterion), -std::numeric_limits<T>::infinity(),
                           undefined_at, grid, std::move(details));
    }
    return make_report(std::move(criterion), best, witness, grid, std::move(details));
}

} // namespace detail

/// min over the grid of Re(num(z)/den(z)) - threshold for arbitrary
/// pointwise evaluators; grid points where |den| <= 1e-13 fail the
/// report with that witness.
template <std::floating_point T, typename FN, typename FD>
check_report<T> check_re_ratio_of(FN&& num, FD&& den, T threshold, const disk_grid<T>& grid,
                                  std::string criterion = "re-ratio")
{
    return detail::min_margin_over_grid<T>(
        grid,
        [&](std::complex<T> z) -> std::optional<T> {
            const std::complex<T> d = den(z);
            if (std::abs(d) <= T(detail::vanishing_tol))
                return std::nullopt;
            return (num(z) / d).real() - threshold;
        },
        std::move(criterion));
}

/// Re(num'(z)/den'(z)) > threshold on the grid, with the derivative
/// series evaluated by Horner and divided pointwise.
template <std::floating_point T>
check_report<T> check_re_ratio_derivative(const analytic_series<T>& num,
                                          const analytic_series<T>& den, T threshold,
                                          const disk_grid<T>& grid,
                                          std::string criterion = "re-ratio-derivative")
{
    const analytic_series<T> np = differentiate(num);
    const analytic_series<T> dp = differentiate(den);
    return check_re_ratio_of<T>([&](std::complex<T> z) { return evaluate(np, z); },
                                [&](std::complex<T> z) { return evaluate(dp, z); },
                                threshold, grid, std::move(criterion));
}

/// Re(num(z)/den(z)) > threshold on the grid. Should both values vanish
/// at a point (the removable singularity at 0 of normalized inputs), the
/// ratio falls back to the derivative limit num'(z)/den'(z).
template <std::floating_point T>
check_report<T> check_re_ratio_values(const analytic_series<T>& num,
                                      const analytic_series<T>& den, T threshold,
                                      const disk_grid<T>& grid,
                                      std::string criterion = "re-ratio-values")
{
    const analytic_series<T> np = differentiate(num);
    const analytic_series<T> dp = differentiate(den);
    return detail::min_margin_over_grid<T>(
        grid,
        [&](std::complex<T> z) -> std::optional<T> {
            const std::complex<T> d = evaluate(den, z);
            if (std::abs(d) > T(detail::vanishing_tol))
                return (evaluate(num, z) / d).real() - threshold;
            if (std::abs(evaluate(num, z)) > T(detail::vanishing_tol))
                return std::nullopt; // pole, not a removable singularity
            const std::complex<T> dd = evaluate(dp, z);
            if (std::abs(dd) <= T(detail::vanishing_tol))
                return std::nullopt;
            return (evaluate(np, z) / dd).real() - threshold;
        },
        std::move(criterion));
}

/// Margin min(|h'(z)| - |g'(z)|) over the grid; positive iff the map is
/// sense-preserving on the sampled subdisk.
template <std::floating_point T>
check_report<T> check_sense_preserving(const harmonic_map<T>& f, const disk_grid<T>& grid,
                                       std::string criterion = "sense-preserving")
{
    const analytic_series<T> hp = differentiate(f.h);
    const analytic_series<T> gp = differentiate(f.g);
    return detail::min_margin_over_grid<T>(
        grid,
        [&](std::complex<T> z) -> std::optional<T> {
            return std::abs(evaluate(hp, z)) - std::abs(evaluate(gp, z));
        },
        std::move(criterion));
}

namespace detail {

// 16 interior probe preimages: four rings at fractions of r, four angles
// per ring with a per-ring angular offset, covering all 16 directions.
template <std::floating_point T>
std::vector<std::complex<T>> probe_preimages(T r)
{
    const T fracs[4] = {T(0.35), T(0.65), T(0.85), T(0.96)};
    std::vector<std::complex<T>> probes;
    probes.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const T ang = T(2) * std::numbers::pi_v<T> * T(4 * j + i) / T(16);
            probes.push_back(std::polar(fracs[i] * r, ang));
        }
    return probes;
}

template <std::floating_point T>
disk_grid<T> circle_grid(T r, std::size_t samples)
{
    return disk_grid<T>(std::vector<T>{r}, samples);
}

} // namespace detail

/// Univalence surrogate at radius r: samples the closed curve
/// theta -> f(r e^{i theta}); passes iff the polyline has no interior
/// self-crossing and the winding number about 16 interior probe points
/// (images of points well inside the subdisk) equals 1.
template <std::floating_point T, typename F>
check_report<T> check_univalent_boundary(F&& f, T r, std::size_t samples = 4096,
                                         std::string criterion = "univalent-boundary")
{
    if (!(r > T(0)) || !(r < T(1)))
        throw std::invalid_argument("check_univalent_boundary: r must lie in (0, 1)");
    if (samples < 16)
        throw std::invalid_argument("check_univalent_boundary: need at least 16 samples");

    std::vector<std::complex<T>> pts(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const T theta = T(2) * std::numbers::pi_v<T> * T(j) / T(samples);
        pts[j] = f(std::polar(r, theta));
    }
    const auto grid = detail::circle_grid(r, samples);

    for (std::size_t j = 0; j < samples; ++j) {
        if (geom::points_coincide(pts[j], pts[(j + 1) % samples]))
            return make_report<T>(std::move(criterion), T(-1), pts[j], grid,
                                  {{"degenerate_curve", T(1)}});
    }
    if (auto hit = geom::self_intersection(pts)) {
        return make_report<T>(std::move(criterion), T(-1), hit->point, grid,
                              {{"self_intersection", T(1)}});
    }
    for (const auto& pre : detail::probe_preimages(r)) {
        const std::complex<T> w0 = f(pre);
        const std::optional<int> w = geom::winding_number(pts, w0);
        if (!w)
            return make_report<T>(std::move(criterion), T(-1), w0, grid,
                                  {{"probe_on_curve", T(1)}});
        if (*w != 1)
            return make_report<T>(std::move(criterion), T(-1), w0, grid,
                                  {{"winding", T(*w)}});
    }
    return make_report<T>(std::move(criterion), T(1), pts[0], grid);
}

/// Discrete statement of "every horizontal (resp. vertical) line meets
/// the image in one interval": over one period of the boundary curve,
/// Im f (resp. Re f) has exactly one maximal run of increase and one of
/// decrease, i.e. at most 2 strict sign changes of the cyclic finite
/// difference after collapsing |diff| < 1e-12 plateaus.
template <std::floating_point T, typename F>
check_report<T> check_convex_in_direction(F&& f, T r, axis direction,
                                          std::size_t samples = 4096,
                                          std::string criterion = "convex-in-direction")
{
    if (!(r > T(0)) || !(r < T(1)))
        throw std::invalid_argument("check_convex_in_direction: r must lie in (0, 1)");
    if (samples < 64)
        throw std::invalid_argument("check_convex_in_direction: need at least 64 samples");

    std::vector<T> s(samples);
    std::vector<std::complex<T>> pts(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const T theta = T(2) * std::numbers::pi_v<T> * T(j) / T(samples);
        pts[j] = f(std::polar(r, theta));
        s[j] = (direction == axis::real_axis) ? pts[j].imag() : pts[j].real();
    }

    std::vector<int> signs;       // collapsed difference signs around the cycle
    std::vector<std::size_t> at;  // sample index where each sign run starts
    for (std::size_t j = 0; j < samples; ++j) {
        const T d = s[(j + 1) % samples] - s[j];
        if (std::abs(d) < T(1e-12))
            continue;
        const int sgn = d > T(0) ? 1 : -1;
        if (signs.empty() || signs.back() != sgn) {
            signs.push_back(sgn);
            at.push_back(j);
        }
    }
    std::size_t changes = 0;
    std::size_t third_change_at = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != signs[(i + 1) % signs.size()]) {
            ++changes;
            if (changes == 3)
                third_change_at = at[(i + 1) % signs.size()];
        }
    }

    const auto grid = detail::circle_grid(r, samples);
    const T margin = T(3) - T(changes);
    const std::complex<T> witness = (changes > 2) ? pts[third_change_at] : pts[0];
    return make_report<T>(std::move(criterion), margin, witness, grid,
                          {{"sign_changes", T(changes)}});
}

/// Full convexity check: the theta-derivative of arg d/dtheta f(r e^{i theta})
/// must be positive. The tangent is evaluated exactly from the series
/// (d/dtheta f = i (z h'(z) - conj(z g'(z)))); its argument derivative is
/// approximated by centered differences with step 2 pi / 4096.
template <std::floating_point T>
check_report<T> check_fully_convex(const harmonic_map<T>& f, const disk_grid<T>& grid,
                                   std::string criterion = "fully-convex")
{
    const analytic_series<T> hp = differentiate(f.h);
    const analytic_series<T> gp = differentiate(f.g);
    const T delta = std::numbers::pi_v<T> / T(4096);

    const auto tangent = [&](T r, T theta) {
        const std::complex<T> z = std::polar(r, theta);
        return std::complex<T>(0, 1) *
               (z * evaluate(hp, z) - std::conj(z * evaluate(gp, z)));
    };

    T best = std::numeric_limits<T>::infinity();
    std::complex<T> witness{};
    for (T r : grid.radii) {
        for (std::size_t i = 0; i < grid.angular_count; ++i) {
            const T theta = T(2) * std::numbers::pi_v<T> * T(i) / T(grid.angular_count);
            const std::complex<T> tp = tangent(r, theta + delta);
            const std::complex<T> tm = tangent(r, theta - delta);
            if (std::abs(tp) <= T(detail::vanishing_tol) ||
                std::abs(tm) <= T(detail::vanishing_tol)) {
                return make_report<T>(std::move(criterion),
                                      -std::numeric_limits<T>::infinity(),
                                      std::polar(r, theta), grid,
                                      {{"tangent_vanishes", T(1)}});
            }
            const T d = std::arg(tp * std::conj(tm)) / (T(2) * delta);
            if (d < best) {
                best = d;
                witness = std::polar(r, theta);
            }
        }
    }
    return make_report<T>(std::move(criterion), best, witness, grid);
}

/// Spot-check of the cited coefficient inequality: hypothesis
/// Re(z p'' + p') > 1/2 and conclusion Re p' > log 2 on the grid, both
/// margins reported; passes iff both hold. A numeric check, not a proof.
template <std::floating_point T>
check_report<T> check_silverman(const analytic_series<T>& p, const disk_grid<T>& grid,
                                std::string criterion = "silverman")
{
    if (!p.is_normalized())
        throw std::invalid_argument("check_silverman: p must be normalized");
    const analytic_series<T> pp = differentiate(p);
    const analytic_series<T> ppp = differentiate(pp);
    const T log2 = std::log(T(2));

    T hyp_min = std::numeric_limits<T>::infinity();
    T con_min = std::numeric_limits<T>::infinity();
    std::complex<T> hyp_at{}, con_at{};
    grid.for_each_point([&](std::complex<T> z) {
        const T hyp = (z * evaluate(ppp, z) + evaluate(pp, z)).real() - T(0.5);
        const T con = evaluate(pp, z).real() - log2;
        if (hyp < hyp_min) {
            hyp_min = hyp;
            hyp_at = z;
        }
        if (con < con_min) {
            con_min = con;
            con_at = z;
        }
    });
    const bool hyp_binds = hyp_min < con_min;
    return make_report<T>(std::move(criterion), std::min(hyp_min, con_min),
                          hyp_binds ? hyp_at : con_at, grid,
                          {{"hypothesis_margin", hyp_min}, {"conclusion_margin", con_min}});
}

/// Conclusion of the convex-function half-plane bound: Re h(z)/z > 1/2 on
/// the grid. Convexity of h is the caller's asserted hypothesis.
template <std::floating_point T>
check_report<T> check_marx_strohhacker(const analytic_series<T>& h, const disk_grid<T>& grid,
                                       std::string criterion = "marx-strohhacker")
{
    if (!h.is_normalized())
        throw std::invalid_argument("check_marx_strohhacker: h must be normalized");
    return detail::min_margin_over_grid<T>(
        grid,
        [&](std::complex<T> z) -> std::optional<T> {
            return (evaluate(h, z) / z).real() - T(0.5);
        },
        std::move(criterion));
}

} // namespace harmconv

#endif
