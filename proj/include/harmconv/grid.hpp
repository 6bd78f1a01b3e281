// Deterministic polar sampling of a compact subdisk {|z| <= r_max},
// r_max < 1. The open-disk conditions of the theorems are certified on
// these grids only; reports carry r_max so the limitation is explicit.

#ifndef HARMCONV_GRID_HPP
#define HARMCONV_GRID_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmconv {

template <std::floating_point T = double>
struct disk_grid {
    std::vector<T> radii;      // strictly increasing, in (0, r_max], r_max < 1
    std::size_t angular_count; // samples per circle, >= 8

    disk_grid(std::vector<T> radii_, std::size_t angular)
        : radii(std::move(radii_)), angular_count(angular)
    {
        if (angular_count < 8)
            throw std::invalid_argument("disk_grid: angular_count must be >= 8");
        if (radii.empty())
            throw std::invalid_argument("disk_grid: need at least one radius");
        T prev = T(0);
        for (T r : radii) {
            if (!(r > prev) || !(r < T(1)))
                throw std::invalid_argument(
                    "disk_grid: radii must be strictly increasing in (0, 1)");
            prev = r;
        }
    }

    /// Radii accumulating geometrically toward r_max:
    /// r_j = r_max (1 - rho^j)/(1 - rho^m), j = 1..m, with rho = 0.8.
    static disk_grid geometric(T r_max = T(0.99), std::size_t radius_count = 40,
                               std::size_t angular = 720)
    {
        if (!(r_max > T(0)) || !(r_max < T(1)))
            throw std::invalid_argument("disk_grid: r_max must lie in (0, 1)");
        const T rho = T(0.8);
        const T norm = T(1) - std::pow(rho, T(radius_count));
        std::vector<T> radii(radius_count);
        for (std::size_t j = 1; j <= radius_count; ++j)
            radii[j - 1] = r_max * (T(1) - std::pow(rho, T(j))) / norm;
        return disk_grid(std::move(radii), angular);
    }

    T r_max() const { return radii.back(); }

    /// Invokes fn(z) at every grid point r e^{i theta}.
    template <typename Fn>
    void for_each_point(Fn&& fn) const
    {
        for (T r : radii) {
            for (std::size_t i = 0; i < angular_count; ++i) {
                const T theta =
                    T(2) * std::numbers::pi_v<T> * T(i) / T(angular_count);
                fn(std::complex<T>(r * std::cos(theta), r * std::sin(theta)));
            }
        }
    }
};

inline disk_grid<double> default_grid() { return disk_grid<double>::geometric(); }

} // namespace harmconv

#endif
