// Acceptance suite: one criterion per numbered section, each run at its
// stated tolerance, printing one PASS/FAIL line per criterion. With no
// arguments all criteria run; an integer argument 1..10 selects one.
// The exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <harmconv/harmconv.hpp>

#include "helpers.hpp"

using namespace harmconv;
using testutil::cplx;
using testutil::hmap;
using testutil::series;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct failure_log {
    std::ostringstream out;
    bool ok = true;

    template <typename... Args>
    void expect(bool cond, Args&&... context)
    {
        if (cond)
            return;
        ok = false;
        (out << ... << context) << "; ";
    }
};

// ---------------------------------------------------------------- AC 1
// Coefficient identities of the four convolution statements on 100
// seeded random pairs per statement, N = 64, residual < 1e-12, < 1 s.
std::string criterion1()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t N = 64;
    testutil::rng r(20250001);
    double worst = 0.0;

    for (int rep = 0; rep < 100; ++rep) {
        const auto phi = testutil::random_normalized(r, N);
        const auto z = series::identity(N);

        const auto ga = testutil::random_gpart(r, N);
        const auto gb = testutil::random_gpart(r, N);

        // minus(z) * minus(phi) lands in minus(h1*phi)
        {
            const hmap f1(add(z, ga), ga);
            const hmap f2(add(phi, gb), gb);
            worst = std::max(worst,
                             max_abs_diff(sub(hadamard(f1.h, f2.h), hadamard(f1.g, f2.g)),
                                          hadamard(f1.h, phi)));
        }
        // plus(z) * plus(phi) lands in minus(h1*phi)
        {
            const hmap f1(sub(z, ga), ga);
            const hmap f2(sub(phi, gb), gb);
            worst = std::max(worst,
                             max_abs_diff(sub(hadamard(f1.h, f2.h), hadamard(f1.g, f2.g)),
                                          hadamard(f1.h, phi)));
        }
        // minus(z) * plus(phi) lands in plus(h1*phi)
        {
            const hmap f1(add(z, ga), ga);
            const hmap f2(sub(phi, gb), gb);
            worst = std::max(worst,
                             max_abs_diff(add(hadamard(f1.h, f2.h), hadamard(f1.g, f2.g)),
                                          hadamard(f1.h, phi)));
        }
        // minus(z) * minus(z) stays in minus(z)
        {
            const hmap f1(add(z, ga), ga);
            const hmap f2(add(z, gb), gb);
            const auto conv = convolve(f1, f2);
            worst = std::max(worst, max_abs_coeff(class_residual(conv, minus_class(z))));
        }
    }

    failure_log log;
    log.expect(worst < 1e-12, "max residual ", worst);
    const double dt = seconds_since(t0);
    log.expect(dt < 1.0, "runtime ", dt, " s exceeds 1 s");
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 2
// The displayed convolution series, reproduced exactly (< 1e-14):
// p_n*p_n for n = 2..9, gamma_k*gamma_k and gamma_k*psi_k for k = 1..5,
// gamma_1 * (z + z^2/8 + conj(z^2/8)).
std::string criterion2()
{
    const std::size_t N = 64;
    failure_log log;
    double worst = 0.0;

    for (std::size_t n = 2; n <= 9; ++n) {
        const auto pn = make_entry<double>("p" + std::to_string(n), N).map;
        const auto conv = convolve(pn, pn);
        const auto mono = series::monomial(n, N, cplx(1.0 / double(n * n)));
        worst = std::max(worst, max_abs_diff(conv.h, add(series::identity(N), mono)));
        worst = std::max(worst, max_abs_diff(conv.g, mono));
    }

    for (std::size_t k = 1; k <= 5; ++k) {
        const auto gk = make_entry<double>("gamma" + std::to_string(k), N).map;
        const auto sk = make_entry<double>("psi" + std::to_string(k), N).map;
        const auto gg = convolve(gk, gk);
        const auto gs = convolve(gk, sk);
        for (std::size_t j = 0; j <= N; ++j) {
            double hh = j == 1 ? 1.0 : 0.0;
            double hg = 0.0, sh = hh, sg = 0.0;
            if (j > 1 && (j - 1) % k == 0) {
                const std::size_t n = (j - 1) / k;
                const double c = 1.0 / double(j * j);
                hh = hg = c;                // gamma_k * gamma_k, both parts
                sh = (n % 2 == 0) ? c : -c; // gamma_k * psi_k, h part
                sg = -sh;                   // and its g part
            }
            worst = std::max(worst, std::abs(gg.h.coeff(j) - cplx(hh)));
            worst = std::max(worst, std::abs(gg.g.coeff(j) - cplx(hg)));
            worst = std::max(worst, std::abs(gs.h.coeff(j) - cplx(sh)));
            worst = std::max(worst, std::abs(gs.g.coeff(j) - cplx(sg)));
        }
    }

    {
        const auto g1 = make_entry<double>("gamma1", N).map;
        const auto f = make_entry<double>("ex2_10", N).map;
        const auto conv = convolve(g1, f);
        const auto mono = series::monomial(2, N, cplx(1.0 / 16.0));
        worst = std::max(worst, max_abs_diff(conv.h, add(series::identity(N), mono)));
        worst = std::max(worst, max_abs_diff(conv.g, mono));
    }

    log.expect(worst < 1e-14, "max residual ", worst);
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 3
// Series convolutions at N = 256 against the quoted closed forms at 200
// points with |z| <= 0.5, within 1e-10.
std::string criterion3()
{
    const std::size_t N = 256;
    testutil::rng r(20250003);
    failure_log log;

    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"gamma1", "ex2_7"}, {"gamma1", "F"}, {"gamma1", "K"},
        {"gamma1", "ex3_6"}, {"gamma1", "L"}};
    for (const auto& [a, b] : pairs) {
        const auto fa = make_entry<double>(a, N).map;
        const auto fb = make_entry<double>(b, N).map;
        const auto conv = convolve(fa, fb);
        const auto cf = closed_form_convolution<double>(a, b);
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const cplx z = r.in_disk(0.5);
            worst = std::max(worst, std::abs(evaluate_map(conv, z) - cf(z)));
        }
        log.expect(worst < 1e-10, a, "*", b, " max deviation ", worst);
    }
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 4
// Inequality spot-check: on the default grid the hypothesis margin
// Re(z p'' + p') - 1/2 stays positive and min Re(mu_1*mu_1)' is at
// least log 2 - 1e-3.
std::string criterion4()
{
    const auto mu1 = make_entry<double>("gamma1", 2048).map.h;
    const auto rep = check_silverman(hadamard(mu1, mu1), default_grid());
    failure_log log;
    log.expect(rep.details[0].second > 0.0, "hypothesis margin ", rep.details[0].second);
    log.expect(rep.details[1].second >= -1e-3, "conclusion margin ",
               rep.details[1].second);
    log.expect(rep.passed, "report failed overall: ", rep.to_line());
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 5
// Hypothesis margins on the default grid: Re(u_n*u_n)' >= 1 - 1/n - 1e-9
// for n = 2..9; Re (1-z)U(z)/z > 3/4 - 1e-9; the even example's ratio
// Re 1/(1+z^2) > 1/2.
std::string criterion5()
{
    failure_log log;
    const auto grid = default_grid();

    for (std::size_t n = 2; n <= 9; ++n) {
        const auto un = make_entry<double>("p" + std::to_string(n), 64).map.h;
        const auto rep = check_re_ratio_derivative(
            hadamard(un, un), series::identity(64), 1.0 - 1.0 / double(n), grid);
        log.expect(rep.min_margin >= -1e-9, "u_", n, " margin ", rep.min_margin);
    }

    {
        const auto F = make_entry<double>("F", 2048);
        const auto rep = check_re_ratio_values(F.map.h, F.membership->target, 0.75, grid);
        log.expect(rep.min_margin >= -1e-9, "half-plane shear ratio margin ",
                   rep.min_margin);
    }

    {
        const auto f = make_entry<double>("ex3_6", 2048);
        const auto rep = check_re_ratio_values(f.map.h, f.membership->target, 0.5, grid);
        log.expect(rep.passed, "even example ratio margin ", rep.min_margin);
    }
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 6
// Univalence / direction-convexity regressions at r = 0.99 with 4096
// boundary samples, each individual check under 0.5 s.
std::string criterion6()
{
    failure_log log;
    const double r = 0.99;
    const std::size_t samples = 4096;

    struct pass_case {
        std::string a, b;
        axis dir;
    };
    std::vector<pass_case> passes;
    for (int n = 2; n <= 4; ++n) {
        passes.push_back({"p" + std::to_string(n), "p" + std::to_string(n),
                          axis::real_axis});
        passes.push_back({"p" + std::to_string(n), "q" + std::to_string(n),
                          axis::imag_axis});
    }
    for (int k = 1; k <= 3; ++k) {
        passes.push_back({"gamma" + std::to_string(k), "gamma" + std::to_string(k),
                          axis::real_axis});
        passes.push_back({"gamma" + std::to_string(k), "psi" + std::to_string(k),
                          axis::imag_axis});
    }
    passes.push_back({"gamma1", "ex2_7", axis::real_axis});
    passes.push_back({"gamma1", "F", axis::real_axis});
    passes.push_back({"gamma1", "K", axis::real_axis});
    passes.push_back({"gamma1", "ex3_6", axis::imag_axis});
    passes.push_back({"gamma1", "L", axis::imag_axis});

    for (const auto& c : passes) {
        const auto cf = closed_form_convolution<double>(c.a, c.b);
        auto t0 = std::chrono::steady_clock::now();
        const auto uni = check_univalent_boundary(cf, r, samples);
        const double t_uni = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto cvx = check_convex_in_direction(cf, r, c.dir, samples);
        const double t_cvx = seconds_since(t0);
        log.expect(uni.passed, c.a, "*", c.b, " univalence: ", uni.to_line());
        log.expect(cvx.passed, c.a, "*", c.b, " convexity: ", cvx.to_line());
        log.expect(t_uni < 0.5, c.a, "*", c.b, " univalence took ", t_uni, " s");
        log.expect(t_cvx < 0.5, c.a, "*", c.b, " convexity took ", t_cvx, " s");
    }

    for (const std::string name : {"p2", "p3", "q2", "q3"}) {
        const auto cf = make_entry<double>(name, 16).closed_form;
        const auto t0 = std::chrono::steady_clock::now();
        const auto uni = check_univalent_boundary(cf, r, samples);
        const double dt = seconds_since(t0);
        log.expect(!uni.passed, name, " unexpectedly passed univalence");
        log.expect(dt < 0.5, name, " check took ", dt, " s");
        // p3, q2, q3 fail with a detected boundary self-crossing; p2's
        // boundary curve is simple at every radius and its fold is caught
        // by the interior winding probes instead.
        if (name != "p2" && !uni.details.empty())
            log.expect(uni.details.front().first == "self_intersection", name,
                       " failed via ", uni.details.front().first);
    }
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 7
// Jacobian zero of p_n along the ray of angle pi/(n-1): a bisection
// bracket locates J = 0 at radius (1/2)^{1/(n-1)} within 1e-10.
std::string criterion7()
{
    failure_log log;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto pn = make_entry<double>("p" + std::to_string(n), 32).map;
        const double ang = std::numbers::pi / double(n - 1);
        const auto J = [&](double rr) { return jacobian_at(pn, std::polar(rr, ang)); };
        double lo = 0.05, hi = 0.995;
        if (!(J(lo) > 0.0 && J(hi) < 0.0)) {
            log.expect(false, "p", n, ": no sign change in the bracket");
            continue;
        }
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            (J(mid) > 0.0 ? lo : hi) = mid;
        }
        const double root = 0.5 * (lo + hi);
        const double expected = std::pow(0.5, 1.0 / double(n - 1));
        log.expect(std::abs(root - expected) <= 1e-10, "p", n, " root ", root,
                   " expected ", expected);
    }
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 8
// Full convexity: passes for z + z^2/8 + conj(z^2/8) on the default
// grid and fails for p2*p2 (expected failure).
std::string criterion8()
{
    failure_log log;
    const auto grid = default_grid();
    const auto f = make_entry<double>("ex2_10", 16).map;
    const auto good = check_fully_convex(f, grid);
    log.expect(good.passed, "fully-convex failed for the convex example: ",
               good.to_line());

    const auto p2 = make_entry<double>("p2", 16).map;
    const auto bad = check_fully_convex(convolve(p2, p2), grid);
    log.expect(!bad.passed, "p2*p2 unexpectedly certified fully convex");
    return log.ok ? "" : log.out.str();
}

// ---------------------------------------------------------------- AC 9
// The integral operator equals convolution with gamma_1 coefficientwise
// (< 1e-14) on every gallery member.
std::string criterion9()
{
    failure_log log;
    const std::size_t N = 64;
    const auto g1 = make_entry<double>("gamma1", N).map;
    for (const auto& name : gallery_names()) {
        const auto f = make_entry<double>(name, N).map;
        const auto a = alexander(f);
        const auto c = convolve(f, g1);
        const double res = std::max(max_abs_diff(a.h, c.h), max_abs_diff(a.g, c.g));
        log.expect(res < 1e-14, name, " residual ", res);
    }
    return log.ok ? "" : log.out.str();
}

// --------------------------------------------------------------- AC 10
// Figure regeneration: the full gallery renders in under 30 s, every
// figure group fig1..fig10 is present, and the mesh-noncrossing
// property holds for every panel declared univalent at r_max = 0.97.
std::string criterion10()
{
    const auto t0 = std::chrono::steady_clock::now();
    failure_log log;
    const auto dir = std::filesystem::temp_directory_path() / "harmconv_acceptance_figs";
    std::filesystem::remove_all(dir);
    const auto written = write_figures<double>(dir.string());

    for (int fig = 1; fig <= 10; ++fig) {
        bool found = false;
        const std::string prefix = "fig" + std::to_string(fig);
        for (const auto& w : written) {
            if (w.panel.file.rfind(prefix, 0) == 0 &&
                (w.panel.file.size() == prefix.size() ||
                 !std::isdigit(static_cast<unsigned char>(w.panel.file[prefix.size()]))))
                found = std::filesystem::exists(w.path);
        }
        log.expect(found, "figure group ", fig, " missing");
    }

    for (const auto& w : written) {
        if (!w.panel.univalent)
            continue;
        const auto hit = mesh_crossing(w.scene);
        log.expect(!hit, w.panel.file, " (", w.panel.subject, ") mesh curves cross",
                   hit ? " near " + format_g17(hit->real()) + "," + format_g17(hit->imag())
                       : "");
    }

    const double dt = seconds_since(t0);
    log.expect(dt < 30.0, "total runtime ", dt, " s exceeds 30 s");
    std::filesystem::remove_all(dir);
    return log.ok ? "" : log.out.str();
}

} // namespace

int main(int argc, char** argv)
{
    struct criterion {
        int id;
        const char* label;
        std::function<std::string()> run;
    };
    const std::vector<criterion> criteria = {
        {1, "coefficient identities of the convolution statements", criterion1},
        {2, "displayed convolution series reproduced exactly", criterion2},
        {3, "series convolutions match the quoted closed forms", criterion3},
        {4, "derivative-bound spot check on the squared log shear", criterion4},
        {5, "hypothesis margins on the default grid", criterion5},
        {6, "univalence and direction-convexity regressions at r = 0.99", criterion6},
        {7, "Jacobian zeros of the polynomial family located by bisection", criterion7},
        {8, "full-convexity pass and expected failure", criterion8},
        {9, "integral operator equals convolution with gamma_1", criterion9},
        {10, "figure regeneration with mesh-noncrossing regression", criterion10},
    };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 10) {
            std::cerr << "usage: acceptance [1..10]\n";
            return 64;
        }
    }

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only)
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        const double dt = seconds_since(t0);
        std::ostringstream line;
        line << "criterion " << c.id << (err.empty() ? "  PASS  " : "  FAIL  ")
             << c.label << " (" << std::fixed;
        line.precision(2);
        line << dt << " s)";
        std::cout << line.str() << "\n";
        if (!err.empty()) {
            std::cout << "    " << err << "\n";
            ++failures;
        }
    }
    return failures;
}
