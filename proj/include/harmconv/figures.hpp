// The reference figure gallery: images of the catalogue maps and their
// convolutions as polar-mesh SVGs, one file per panel (fig1a..fig10).
// Panels of maps that are non-univalent on the disk are flagged so the
// mesh-noncrossing regression skips them.

#ifndef HARMCONV_FIGURES_HPP
#define HARMCONV_FIGURES_HPP

#include <complex>
#include <concepts>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "gallery.hpp"
#include "render.hpp"

namespace harmconv {

template <std::floating_point T = double>
struct figure_panel {
    std::string file;    // base name without extension, e.g. "fig2b"
    std::string subject; // what is drawn, e.g. "gamma2*gamma2"
    std::function<std::complex<T>(std::complex<T>)> eval;
    bool univalent; // declared univalent on the disk
};

template <std::floating_point T = double>
std::vector<figure_panel<T>> figure_panels()
{
    const auto entry = [](const std::string& name) {
        return make_entry<T>(name, 16).closed_form;
    };
    const auto conv = [](const std::string& a, const std::string& b) {
        return closed_form_convolution<T>(a, b);
    };
    std::vector<figure_panel<T>> panels;
    const char suffix[6] = {'a', 'b', 'c', 'd', 'e', 'f'};

    for (int i = 0; i < 3; ++i) { // p_n and p_n*p_n, n = 2, 3, 4
        const std::string n = std::to_string(i + 2);
        panels.push_back({std::string("fig1") + suffix[2 * i], "p" + n, entry("p" + n), false});
        panels.push_back({std::string("fig1") + suffix[2 * i + 1], "p" + n + "*p" + n,
                          conv("p" + n, "p" + n), true});
    }
    for (int i = 0; i < 3; ++i) { // gamma_k and gamma_k*gamma_k, k = 1, 2, 3
        const std::string k = std::to_string(i + 1);
        panels.push_back(
            {std::string("fig2") + suffix[2 * i], "gamma" + k, entry("gamma" + k), true});
        panels.push_back({std::string("fig2") + suffix[2 * i + 1],
                          "gamma" + k + "*gamma" + k, conv("gamma" + k, "gamma" + k), true});
    }
    panels.push_back({"fig3", "gamma1*ex2_7", conv("gamma1", "ex2_7"), true});
    panels.push_back({"fig4a", "ex2_10", entry("ex2_10"), true});
    panels.push_back({"fig4b", "gamma1*ex2_10", conv("gamma1", "ex2_10"), true});
    panels.push_back({"fig5a", "F", entry("F"), true});
    panels.push_back({"fig5b", "gamma1*F", conv("gamma1", "F"), true});
    panels.push_back({"fig6", "gamma1*K", conv("gamma1", "K"), true});
    for (int i = 0; i < 3; ++i) { // q_n, then p_n*q_n, n = 2, 3, 4
        const std::string n = std::to_string(i + 2);
        panels.push_back({std::string("fig7") + suffix[i], "q" + n, entry("q" + n), false});
        panels.push_back({std::string("fig7") + suffix[3 + i], "p" + n + "*q" + n,
                          conv("p" + n, "q" + n), true});
    }
    for (int i = 0; i < 3; ++i) { // psi_k, then gamma_k*psi_k, k = 1, 2, 3
        const std::string k = std::to_string(i + 1);
        panels.push_back({std::string("fig8") + suffix[i], "psi" + k, entry("psi" + k), true});
        panels.push_back({std::string("fig8") + suffix[3 + i], "gamma" + k + "*psi" + k,
                          conv("gamma" + k, "psi" + k), true});
    }
    panels.push_back({"fig9", "gamma1*ex3_6", conv("gamma1", "ex3_6"), true});
    panels.push_back({"fig10", "gamma1*L", conv("gamma1", "L"), true});
    return panels;
}

template <std::floating_point T = double>
struct written_figure {
    figure_panel<T> panel;
    std::string path;
    render_scene<T> scene; // the clipped scene actually drawn
};

/// Regenerates the whole gallery under out_dir with the default mesh
/// (8 circles, 16 radial segments, 256 points per curve, r_max = 0.97)
/// and magnitude clip 20.
template <std::floating_point T = double>
std::vector<written_figure<T>>
write_figures(const std::string& out_dir, std::size_t circles = 8, std::size_t segments = 16,
              std::size_t points_per_curve = 256, T r_max = T(0.97), T clip = T(20))
{
    std::filesystem::create_directories(out_dir);
    std::vector<written_figure<T>> written;
    for (const auto& panel : figure_panels<T>()) {
        render_scene<T> scene =
            sample_polar_mesh<T>(panel.eval, circles, segments, points_per_curve, r_max);
        scene = clip_scene(scene, clip);
        const std::string path =
            (std::filesystem::path(out_dir) / (panel.file + ".svg")).string();
        emit_svg(scene, path);
        written.push_back({panel, path, std::move(scene)});
    }
    return written;
}

} // namespace harmconv

#endif
