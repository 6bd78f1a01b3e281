// Planar polyline geometry for the boundary-curve certifications:
// orientation predicates with a relative collinearity tolerance, proper
// segment intersections, a sweep-based self-intersection test and
// winding numbers of sampled closed curves.

#ifndef HARMCONV_CURVE_HPP
#define HARMCONV_CURVE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

namespace harmconv {

namespace geom {

inline constexpr double collinearity_tol = 1e-12;

template <std::floating_point T>
T cross(std::complex<T> u, std::complex<T> v)
{
    return u.real() * v.imag() - u.imag() * v.real();
}

/// Sign of the turn a->b->c; 0 when |cross| is below the collinearity
/// tolerance relative to the segment extents.
template <std::floating_point T>
int orientation(std::complex<T> a, std::complex<T> b, std::complex<T> c)
{
    const std::complex<T> u = b - a;
    const std::complex<T> v = c - a;
    const T x = cross(u, v);
    const T tol = T(collinearity_tol) * std::abs(u) * std::abs(v);
    if (std::abs(x) <= tol)
        return 0;
    return x > T(0) ? 1 : -1;
}

template <std::floating_point T>
bool points_coincide(std::complex<T> a, std::complex<T> b)
{
    const T scale = std::max(T(1), std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) <= T(collinearity_tol) * scale;
}

/// p collinear with [a, b] assumed; true when p lies within the segment's
/// bounding box (inclusive).
template <std::floating_point T>
bool within_bbox(std::complex<T> a, std::complex<T> b, std::complex<T> p)
{
    const T pad = T(collinearity_tol) * std::max({T(1), std::abs(a), std::abs(b)});
    return p.real() >= std::min(a.real(), b.real()) - pad &&
           p.real() <= std::max(a.real(), b.real()) + pad &&
           p.imag() >= std::min(a.imag(), b.imag()) - pad &&
           p.imag() <= std::max(a.imag(), b.imag()) + pad;
}

/// Crossing point of two segments, if their interiors meet. Touching at
/// coinciding endpoints does not count; a T-junction or collinear overlap
/// of positive length does.
template <std::floating_point T>
std::optional<std::complex<T>> segment_crossing(std::complex<T> p1, std::complex<T> p2,
                                                std::complex<T> q1, std::complex<T> q2)
{
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);

    const bool share_p1 = points_coincide(p1, q1) || points_coincide(p1, q2);
    const bool share_p2 = points_coincide(p2, q1) || points_coincide(p2, q2);

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        // Generic transversal crossing; intersect the supporting lines.
        const std::complex<T> r = p2 - p1;
        const std::complex<T> s = q2 - q1;
        const T denom = cross(r, s);
        const T t = cross(q1 - p1, s) / denom;
        return p1 + t * r;
    }

    // Degenerate orientations: endpoint touches are allowed, interior
    // touches and collinear overlap are not.
    const auto interior_touch = [&](std::complex<T> a, std::complex<T> b,
                                    std::complex<T> p) -> bool {
        return within_bbox(a, b, p) && !points_coincide(p, a) && !points_coincide(p, b);
    };
    if (o1 == 0 && interior_touch(p1, p2, q1) && !share_p1 && !share_p2)
        return q1;
    if (o2 == 0 && interior_touch(p1, p2, q2) && !share_p1 && !share_p2)
        return q2;
    if (o3 == 0 && interior_touch(q1, q2, p1))
        return p1;
    if (o4 == 0 && interior_touch(q1, q2, p2))
        return p2;
    return std::nullopt;
}

template <std::floating_point T>
struct crossing {
    std::complex<T> point;
    std::size_t seg_a;
    std::size_t seg_b;
};

/// First interior crossing between non-adjacent segments of a closed
/// polyline (points[m-1] connects back to points[0]). Sweep over
/// segments sorted by their minimal x extent.
template <std::floating_point T>
std::optional<crossing<T>> self_intersection(const std::vector<std::complex<T>>& points)
{
    const std::size_t m = points.size();
    if (m < 4)
        return std::nullopt;
    const auto seg_a = [&](std::size_t i) { return points[i]; };
    const auto seg_b = [&](std::size_t i) { return points[(i + 1) % m]; };

    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<T> xmin(m), xmax(m), ymin(m), ymax(m);
    for (std::size_t i = 0; i < m; ++i) {
        xmin[i] = std::min(seg_a(i).real(), seg_b(i).real());
        xmax[i] = std::max(seg_a(i).real(), seg_b(i).real());
        ymin[i] = std::min(seg_a(i).imag(), seg_b(i).imag());
        ymax[i] = std::max(seg_a(i).imag(), seg_b(i).imag());
    }
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return xmin[a] < xmin[b]; });

    for (std::size_t si = 0; si < m; ++si) {
        const std::size_t i = idx[si];
        for (std::size_t sj = si + 1; sj < m; ++sj) {
            const std::size_t j = idx[sj];
            if (xmin[j] > xmax[i])
                break;
            if (ymin[j] > ymax[i] || ymax[j] < ymin[i])
                continue;
            const std::size_t d = (i > j) ? i - j : j - i;
            if (d == 1 || d == m - 1)
                continue; // adjacent segments share an endpoint
            if (auto p = segment_crossing(seg_a(i), seg_b(i), seg_a(j), seg_b(j)))
                return crossing<T>{*p, std::min(i, j), std::max(i, j)};
        }
    }
    return std::nullopt;
}

/// First crossing between two distinct polylines (open; not closed).
/// Endpoint coincidences (e.g. curves emanating from a common point) do
/// not count as crossings.
template <std::floating_point T>
std::optional<std::complex<T>> polylines_cross(const std::vector<std::complex<T>>& a,
                                               const std::vector<std::complex<T>>& b)
{
    if (a.size() < 2 || b.size() < 2)
        return std::nullopt;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const T xlo = std::min(a[i].real(), a[i + 1].real());
        const T xhi = std::max(a[i].real(), a[i + 1].real());
        const T ylo = std::min(a[i].imag(), a[i + 1].imag());
        const T yhi = std::max(a[i].imag(), a[i + 1].imag());
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            if (std::min(b[j].real(), b[j + 1].real()) > xhi ||
                std::max(b[j].real(), b[j + 1].real()) < xlo ||
                std::min(b[j].imag(), b[j + 1].imag()) > yhi ||
                std::max(b[j].imag(), b[j + 1].imag()) < ylo)
                continue;
            if (auto p = segment_crossing(a[i], a[i + 1], b[j], b[j + 1]))
                return p;
        }
    }
    return std::nullopt;
}

/// Winding number of the sampled closed curve about w0, or nullopt when
/// a sample (numerically) hits w0.
template <std::floating_point T>
std::optional<int> winding_number(const std::vector<std::complex<T>>& points,
                                  std::complex<T> w0)
{
    const std::size_t m = points.size();
    if (m < 3)
        return std::nullopt;
    T total = T(0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::complex<T> u = points[i] - w0;
        const std::complex<T> v = points[(i + 1) % m] - w0;
        const T nu = std::abs(u);
        const T nv = std::abs(v);
        if (nu <= T(collinearity_tol) * (T(1) + std::abs(w0)) ||
            nv <= T(collinearity_tol) * (T(1) + std::abs(w0)))
            return std::nullopt;
        total += std::atan2(cross(u, v), u.real() * v.real() + u.imag() * v.imag());
    }
    const T two_pi = T(2) * std::numbers::pi_v<T>;
    return static_cast<int>(std::lround(total / two_pi));
}

} // namespace geom

} // namespace harmconv

#endif
