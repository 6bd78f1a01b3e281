// Command-line front end: gallery coefficient dumps, shear construction,
// harmonic convolution, theorem-pipeline checks, and figure rendering.
// All output is deterministic; exit codes are 0 on success, 1 when a
// requested check fails, 2 on usage or input errors.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <harmconv/harmconv.hpp>

namespace {

using harmconv::analytic_series;
using harmconv::harmonic_map;
using cplx = std::complex<double>;
using evaluator = std::function<cplx(cplx)>;

constexpr std::size_t default_order = 64;
// Pipeline checks evaluate truncations near |z| = 0.99, where the
// rational gallery maps need a few thousand coefficients to converge.
constexpr std::size_t default_check_order = 4096;

std::size_t resolve_order(std::size_t flag_value, bool flag_set, std::size_t fallback)
{
    if (flag_set)
        return flag_value;
    if (const char* env = std::getenv("HARMCONV_ORDER")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v < 2)
            throw std::runtime_error("HARMCONV_ORDER must be an integer >= 2");
        return static_cast<std::size_t>(v);
    }
    return fallback;
}

bool is_gallery_name(const std::string& name)
{
    for (const auto& n : harmconv::gallery_names())
        if (n == name)
            return true;
    return false;
}

harmonic_map<double> load_map(const std::string& arg, std::size_t order)
{
    if (is_gallery_name(arg))
        return harmconv::make_entry<double>(arg, order).map;
    return harmconv::read_map_csv_file<double>(arg);
}

analytic_series<double> load_phi(const std::string& arg, std::size_t order)
{
    if (arg == "z")
        return analytic_series<double>::identity(order);
    if (is_gallery_name(arg)) {
        auto entry = harmconv::make_entry<double>(arg, order);
        if (!entry.map.g.is_zero())
            throw std::runtime_error("construct: phi must be analytic; '" + arg +
                                     "' is a harmonic map (try z, l or koebe)");
        return entry.map.h;
    }
    return harmconv::read_series_csv_file<double>(arg);
}

analytic_series<double> load_dilatation(const std::string& arg, std::size_t order)
{
    if (arg == "z")
        return analytic_series<double>::monomial(1, order);
    if (arg.size() > 2 && arg[0] == 'z' && arg[1] == '^') {
        char* end = nullptr;
        const unsigned long k = std::strtoul(arg.c_str() + 2, &end, 10);
        if (*end != '\0')
            throw std::runtime_error("construct: bad monomial '" + arg + "'");
        return analytic_series<double>::monomial(static_cast<std::size_t>(k), order);
    }
    return harmconv::read_series_csv_file<double>(arg);
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (i > start)
                out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

evaluator resolve_evaluator(const std::string& arg, std::size_t order)
{
    if (arg.rfind("conv:", 0) == 0) {
        const auto parts = split_commas(arg.substr(5));
        if (parts.size() != 2)
            throw std::runtime_error("render: expected conv:<a>,<b>");
        if (harmconv::has_closed_form_convolution<double>(parts[0], parts[1]))
            return harmconv::closed_form_convolution<double>(parts[0], parts[1]);
        const auto conv = harmconv::convolve(load_map(parts[0], order),
                                             load_map(parts[1], order));
        return [conv](cplx z) { return harmconv::evaluate_map(conv, z); };
    }
    if (is_gallery_name(arg))
        return harmconv::make_entry<double>(arg, order).closed_form;
    const auto f = harmconv::read_map_csv_file<double>(arg);
    return [f](cplx z) { return harmconv::evaluate_map(f, z); };
}

void write_text_or_file(const std::string& out, const std::string& text)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os)
        throw std::runtime_error("cannot open '" + out + "'");
    os << text;
}

nlohmann::json report_json(const harmconv::check_report<double>& r)
{
    nlohmann::json j;
    j["criterion"] = r.criterion;
    j["passed"] = r.passed;
    if (std::isfinite(r.min_margin))
        j["margin"] = r.min_margin;
    else
        j["margin"] = r.min_margin > 0 ? "inf" : "-inf";
    j["witness"] = {r.witness.real(), r.witness.imag()};
    j["rmax"] = r.grid.r_max();
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [k, v] : r.details)
        d[k] = v;
    j["details"] = d;
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical toolkit for planar harmonic mappings as truncated "
                 "power series: shear construction, harmonic convolution, "
                 "univalence/convexity certification and figure rendering"};
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Dump a gallery entry's coefficients as CSV");
    std::string coeffs_name, coeffs_part, coeffs_out;
    std::size_t coeffs_order = default_order;
    coeffs->add_option("name", coeffs_name, "gallery entry name")->required();
    auto* coeffs_order_opt = coeffs->add_option("--order", coeffs_order, "truncation order");
    coeffs->add_option("--part", coeffs_part, "dump a single series (h or g) as k,re,im");
    coeffs->add_option("--out", coeffs_out, "output file (default stdout)");

    // construct
    auto* construct = app.add_subcommand("construct", "Shear a conformal map into a harmonic map");
    std::string cons_phi, cons_w, cons_dir = "real", cons_out;
    std::size_t cons_order = default_order;
    construct->add_option("--phi", cons_phi, "target: z, an analytic gallery name, or a series CSV file")->required();
    construct->add_option("--dilatation", cons_w, "dilatation: z, z^k, or a series CSV file")->required();
    construct->add_option("--direction", cons_dir, "real or imag")->check(CLI::IsMember({"real", "imag"}));
    auto* cons_order_opt = construct->add_option("--order", cons_order, "truncation order");
    construct->add_option("--out", cons_out, "output file (default stdout)");

    // convolve
    auto* convolve_cmd = app.add_subcommand("convolve", "Harmonic convolution of two maps");
    std::string conv_a, conv_b, conv_out;
    std::size_t conv_order = default_order;
    convolve_cmd->add_option("a", conv_a, "gallery name or map CSV file")->required();
    convolve_cmd->add_option("b", conv_b, "gallery name or map CSV file")->required();
    auto* conv_order_opt = convolve_cmd->add_option("--order", conv_order, "truncation order");
    convolve_cmd->add_option("--out", conv_out, "output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "Run a theorem pipeline and report margins");
    std::string check_pipeline, check_inputs, check_format = "text";
    std::size_t check_order = default_check_order, check_radii = 40, check_angles = 720,
                check_samples = 4096;
    double check_rmax = 0.99, check_boundary_rmax = 0.99;
    check->add_option("pipeline", check_pipeline, "one of Thm2_1 Thm2_6 Thm2_14 Thm3_1 Cor2_2 Cor2_8i Cor2_8ii Cor2_8iii Cor2_9 Cor2_11 Cor3_2 Cor3_5")->required();
    check->add_option("--inputs", check_inputs, "comma-separated gallery names or map CSV files")->required();
    auto* check_order_opt = check->add_option("--order", check_order, "truncation order (default 4096)");
    check->add_option("--rmax", check_rmax, "grid outer radius (default 0.99)");
    check->add_option("--radii", check_radii, "grid radius count (default 40)");
    check->add_option("--angles", check_angles, "grid angular samples (default 720)");
    check->add_option("--samples", check_samples, "boundary-curve samples (default 4096)");
    check->add_option("--boundary-rmax", check_boundary_rmax,
                      "radius of the boundary-curve stages (default 0.99); lower it when "
                      "checking low-order map files");
    check->add_option("--format", check_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // render
    auto* render = app.add_subcommand("render", "Render a map's polar-mesh image as SVG");
    std::string render_spec, render_out, render_csv;
    std::size_t render_circles = 8, render_segments = 16, render_points = 256,
                render_order = default_order;
    double render_rmax = 0.97, render_clip = 20.0;
    render->add_option("map", render_spec, "gallery name, map CSV file, or conv:<a>,<b>")->required();
    render->add_option("--out", render_out, "output SVG path")->required();
    render->add_option("--csv", render_csv, "also dump the scene as CSV");
    render->add_option("--circles", render_circles, "concentric circles (default 8)");
    render->add_option("--segments", render_segments, "radial segments (default 16)");
    render->add_option("--points", render_points, "points per curve (default 256)");
    render->add_option("--rmax", render_rmax, "mesh outer radius (default 0.97)");
    render->add_option("--clip", render_clip, "clip magnitude for unbounded images (default 20)");
    auto* render_order_opt = render->add_option("--order", render_order, "truncation order for series-evaluated maps");

    // figures
    auto* figures = app.add_subcommand("figures", "Regenerate the whole figure gallery");
    std::string figures_out;
    std::size_t fig_circles = 8, fig_segments = 16, fig_points = 256;
    double fig_rmax = 0.97, fig_clip = 20.0;
    figures->add_option("--out", figures_out, "output directory")->required();
    figures->add_option("--circles", fig_circles, "concentric circles (default 8)");
    figures->add_option("--segments", fig_segments, "radial segments (default 16)");
    figures->add_option("--points", fig_points, "points per curve (default 256)");
    figures->add_option("--rmax", fig_rmax, "mesh outer radius (default 0.97)");
    figures->add_option("--clip", fig_clip, "clip magnitude (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs->parsed()) {
            const std::size_t order =
                resolve_order(coeffs_order, coeffs_order_opt->count() > 0, default_order);
            const auto entry = harmconv::make_entry<double>(coeffs_name, order);
            std::ostringstream os;
            if (coeffs_part.empty()) {
                harmconv::write_map_csv(os, entry.map);
            } else if (coeffs_part == "h") {
                harmconv::write_series_csv(os, entry.map.h);
            } else if (coeffs_part == "g") {
                harmconv::write_series_csv(os, entry.map.g);
            } else {
                throw std::runtime_error("coeffs: --part must be h or g");
            }
            write_text_or_file(coeffs_out, os.str());
            return 0;
        }

        if (construct->parsed()) {
            const std::size_t order =
                resolve_order(cons_order, cons_order_opt->count() > 0, default_order);
            const auto phi = load_phi(cons_phi, order);
            const auto w = load_dilatation(cons_w, order);
            const auto dir = cons_dir == "real" ? harmconv::axis::real_axis
                                                : harmconv::axis::imag_axis;
            const auto f = harmconv::shear(phi, w, dir);
            std::ostringstream os;
            harmconv::write_map_csv(os, f);
            write_text_or_file(cons_out, os.str());
            return 0;
        }

        if (convolve_cmd->parsed()) {
            const std::size_t order =
                resolve_order(conv_order, conv_order_opt->count() > 0, default_order);
            const auto f = harmconv::convolve(load_map(conv_a, order), load_map(conv_b, order));
            std::ostringstream os;
            harmconv::write_map_csv(os, f);
            write_text_or_file(conv_out, os.str());
            return 0;
        }

        if (check->parsed()) {
            const auto pipeline = harmconv::parse_pipeline(check_pipeline);
            if (!pipeline)
                throw std::runtime_error("check: unknown pipeline '" + check_pipeline + "'");
            const std::size_t order = resolve_order(
                check_order, check_order_opt->count() > 0, default_check_order);
            std::vector<harmonic_map<double>> maps;
            for (const auto& arg : split_commas(check_inputs))
                maps.push_back(load_map(arg, order));
            const auto grid =
                harmconv::disk_grid<double>::geometric(check_rmax, check_radii, check_angles);
            const auto reports = harmconv::run_theorem<double>(
                *pipeline, maps, std::nullopt, grid, check_samples, check_boundary_rmax);
            if (check_format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports)
                    arr.push_back(report_json(r));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reports)
                    std::cout << r.to_line() << "\n";
            }
            return harmconv::all_passed(reports) ? 0 : 1;
        }

        if (render->parsed()) {
            const std::size_t order =
                resolve_order(render_order, render_order_opt->count() > 0, default_order);
            const auto eval = resolve_evaluator(render_spec, order);
            auto scene = harmconv::sample_polar_mesh<double>(
                eval, render_circles, render_segments, render_points, render_rmax);
            scene = harmconv::clip_scene(scene, render_clip);
            harmconv::emit_svg(scene, render_out);
            if (!render_csv.empty())
                harmconv::emit_csv(scene, render_csv);
            std::cout << "wrote " << render_out << "\n";
            return 0;
        }

        if (figures->parsed()) {
            const auto written = harmconv::write_figures<double>(
                figures_out, fig_circles, fig_segments, fig_points, fig_rmax, fig_clip);
            for (const auto& w : written)
                std::cout << "wrote " << w.path << " (" << w.panel.subject << ")\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
