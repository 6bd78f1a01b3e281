// Conformal-image visualization: images of equally spaced radial
// segments and concentric circles under a pointwise evaluator, emitted
// as SVG paths or CSV rows.

#ifndef HARMCONV_RENDER_HPP
#define HARMCONV_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "io.hpp"
#include "series.hpp"

namespace harmconv {

enum class curve_kind { circular, radial };

inline const char* curve_kind_name(curve_kind k)
{
    return k == curve_kind::circular ? "circular" : "radial";
}

/// One mapped mesh curve: the image points and, per point, the sample
/// parameter t in [0, 1] along the source curve.
template <std::floating_point T = double>
struct scene_curve {
    curve_kind kind;
    T param; // radius of the source circle, or angle of the radial segment
    std::vector<std::complex<T>> points;
    std::vector<T> ts;
};

template <std::floating_point T = double>
struct render_scene {
    std::vector<scene_curve<T>> curves;

    std::size_t point_count() const
    {
        std::size_t n = 0;
        for (const auto& c : curves)
            n += c.points.size();
        return n;
    }

    struct box {
        T x0, y0, x1, y1;
    };

    /// Bounding rectangle of all points with 5% padding per side; a unit
    /// box for an empty scene.
    box padded_bounds(T pad_fraction = T(0.05)) const
    {
        bool any = false;
        T x0 = 0, y0 = 0, x1 = 0, y1 = 0;
        for (const auto& c : curves)
            for (const auto& p : c.points) {
                if (!any) {
                    x0 = x1 = p.real();
                    y0 = y1 = p.imag();
                    any = true;
                } else {
                    x0 = std::min(x0, p.real());
                    x1 = std::max(x1, p.real());
                    y0 = std::min(y0, p.imag());
                    y1 = std::max(y1, p.imag());
                }
            }
        if (!any)
            return {T(0), T(0), T(1), T(1)};
        const T px = std::max((x1 - x0) * pad_fraction, T(1e-6));
        const T py = std::max((y1 - y0) * pad_fraction, T(1e-6));
        return {x0 - px, y0 - py, x1 + px, y1 + py};
    }
};

/// Maps the polar mesh of circles at radii j r_max / circles and radial
/// segments at angles 2 pi m / segments through f, each curve sampled
/// uniformly in its parameter with points_per_curve points.
template <std::floating_point T, typename F>
render_scene<T> sample_polar_mesh(F&& f, std::size_t circles, std::size_t segments,
                                  std::size_t points_per_curve, T r_max)
{
    if (circles < 1)
        throw std::invalid_argument("sample_polar_mesh: need at least one circle");
    if (segments < 2)
        throw std::invalid_argument("sample_polar_mesh: need at least two segments");
    if (points_per_curve < 16)
        throw std::invalid_argument("sample_polar_mesh: need at least 16 points per curve");
    if (!(r_max > T(0)) || !(r_max < T(1)))
        throw std::invalid_argument("sample_polar_mesh: r_max must lie in (0, 1)");

    render_scene<T> scene;
    scene.curves.reserve(circles + segments);
    const T two_pi = T(2) * std::numbers::pi_v<T>;

    const auto map_point = [&](curve_kind kind, T param, std::complex<T> z) {
        try {
            const std::complex<T> w = f(z);
            if (!is_finite(w))
                throw std::domain_error("evaluator returned a non-finite value");
            return w;
        } catch (const std::domain_error& e) {
            throw std::domain_error(std::string(curve_kind_name(kind)) + " curve param=" +
                                    format_g17(param) + ": " + e.what());
        }
    };

    for (std::size_t j = 1; j <= circles; ++j) {
        const T r = T(j) * r_max / T(circles);
        scene_curve<T> c{curve_kind::circular, r, {}, {}};
        c.points.reserve(points_per_curve);
        c.ts.reserve(points_per_curve);
        for (std::size_t t = 0; t < points_per_curve; ++t) {
            const T u = T(t) / T(points_per_curve - 1);
            c.points.push_back(map_point(c.kind, r, std::polar(r, two_pi * u)));
            c.ts.push_back(u);
        }
        scene.curves.push_back(std::move(c));
    }
    for (std::size_t m = 0; m < segments; ++m) {
        const T ang = two_pi * T(m) / T(segments);
        scene_curve<T> c{curve_kind::radial, ang, {}, {}};
        c.points.reserve(points_per_curve);
        c.ts.reserve(points_per_curve);
        for (std::size_t t = 0; t < points_per_curve; ++t) {
            const T u = T(t) / T(points_per_curve - 1);
            c.points.push_back(map_point(c.kind, ang, std::polar(r_max * u, ang)));
            c.ts.push_back(u);
        }
        scene.curves.push_back(std::move(c));
    }
    return scene;
}

/// Clips unbounded images: each curve is split at points with
/// |w| > max_magnitude and the in-range runs of at least two points are
/// kept as separate polylines.
template <std::floating_point T>
render_scene<T> clip_scene(const render_scene<T>& scene, T max_magnitude)
{
    render_scene<T> out;
    for (const auto& c : scene.curves) {
        scene_curve<T> run{c.kind, c.param, {}, {}};
        const auto flush = [&] {
            if (run.points.size() >= 2)
                out.curves.push_back(run);
            run.points.clear();
            run.ts.clear();
        };
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            if (std::abs(c.points[i]) <= max_magnitude) {
                run.points.push_back(c.points[i]);
                run.ts.push_back(c.ts[i]);
            } else {
                flush();
            }
        }
        flush();
    }
    return out;
}

namespace detail {

template <std::floating_point T>
std::string svg_num(T x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(x));
    return buf;
}

} // namespace detail

/// Static SVG 1.1: one path per curve, stroke width 0.5% of the viewbox,
/// no fill, y axis flipped so the mathematical orientation matches.
template <std::floating_point T>
void emit_svg(const render_scene<T>& scene, std::ostream& os)
{
    const auto b = scene.padded_bounds();
    const T w = b.x1 - b.x0;
    const T h = b.y1 - b.y0;
    const T stroke = T(0.005) * std::max(w, h);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << detail::svg_num(b.x0) << ' ' << detail::svg_num(-b.y1) << ' '
       << detail::svg_num(w) << ' ' << detail::svg_num(h) << "\">\n";
    for (const auto& c : scene.curves) {
        if (c.points.size() < 2)
            continue;
        os << "  <path fill=\"none\" stroke=\"black\" stroke-width=\""
           << detail::svg_num(stroke) << "\" d=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            os << (i == 0 ? "M " : " L ") << detail::svg_num(c.points[i].real()) << ' '
               << detail::svg_num(-c.points[i].imag());
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    if (!os)
        throw std::runtime_error("emit_svg: stream failure");
}

template <std::floating_point T>
void emit_svg(const render_scene<T>& scene, const std::string& path)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("emit_svg: cannot open '" + path + "'");
    emit_svg(scene, os);
}

/// CSV rows curve_id,kind,param,t,re,im with 17 significant digits.
template <std::floating_point T>
void emit_csv(const render_scene<T>& scene, std::ostream& os)
{
    os << "curve_id,kind,param,t,re,im\n";
    for (std::size_t id = 0; id < scene.curves.size(); ++id) {
        const auto& c = scene.curves[id];
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            os << id << ',' << curve_kind_name(c.kind) << ',' << format_g17(c.param) << ','
               << format_g17(c.ts[i]) << ',' << format_g17(c.points[i].real()) << ','
               << format_g17(c.points[i].imag()) << '\n';
        }
    }
    if (!os)
        throw std::runtime_error("emit_csv: stream failure");
}

template <std::floating_point T>
void emit_csv(const render_scene<T>& scene, const std::string& path)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("emit_csv: cannot open '" + path + "'");
    emit_csv(scene, os);
}

/// Parses the emit_csv format back into a scene (grouping rows by
/// curve_id in file order).
template <std::floating_point T = double>
render_scene<T> parse_scene_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "curve_id,kind,param,t,re,im")
        throw std::runtime_error("parse_scene_csv: bad header");
    render_scene<T> scene;
    long current = -1;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                cols.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (cols.size() != 6)
            throw std::runtime_error("parse_scene_csv: bad row '" + line + "'");
        const long id = std::stol(cols[0]);
        if (id != current) {
            scene_curve<T> c{cols[1] == "circular" ? curve_kind::circular
                                                   : curve_kind::radial,
                             static_cast<T>(std::stod(cols[2])),
                             {},
                             {}};
            scene.curves.push_back(std::move(c));
            current = id;
        }
        scene.curves.back().ts.push_back(static_cast<T>(std::stod(cols[3])));
        scene.curves.back().points.push_back(std::complex<T>(
            static_cast<T>(std::stod(cols[4])), static_cast<T>(std::stod(cols[5]))));
    }
    return scene;
}

/// Injectivity surrogate on the rendered mesh: images of disjoint source
/// curves must stay disjoint, so circle images are pairwise disjoint and
/// radial images meet only at the shared image of the origin. Returns a
/// crossing point if one exists. (Radial and circular curves cross by
/// construction, exactly as their preimages do, so only same-kind pairs
/// are tested.)
template <std::floating_point T>
std::optional<std::complex<T>> mesh_crossing(const render_scene<T>& scene)
{
    for (std::size_t i = 0; i < scene.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < scene.curves.size(); ++j) {
            const auto& a = scene.curves[i];
            const auto& b = scene.curves[j];
            if (a.kind != b.kind)
                continue;
            if (a.kind == b.kind && a.param == b.param)
                continue; // clip splits of the same source curve
            if (auto p = geom::polylines_cross(a.points, b.points))
                return p;
        }
    }
    return std::nullopt;
}

} // namespace harmconv

#endif
