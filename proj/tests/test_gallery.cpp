#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include <harmconv/gallery.hpp>

#include "helpers.hpp"

using namespace harmconv;
using testutil::cplx;
using testutil::series;

TEST_CASE("every catalogue entry: series and closed form agree on |z| <= 0.5")
{
    const std::size_t N = 64;
    testutil::rng r(9001);
    for (const auto& name : gallery_names()) {
        INFO("entry " << name);
        const auto entry = make_entry<double>(name, N);
        const double tol = entry.tail_bound(0.5) + 1e-12;
        for (int rep = 0; rep < 100; ++rep) {
            const cplx z = r.in_disk(0.5);
            REQUIRE(std::abs(evaluate_map(entry.map, z) - entry.closed_form(z)) <= tol);
        }
    }
}

TEST_CASE("every tagged entry satisfies its class equation")
{
    const std::size_t N = 64;
    for (const auto& name : gallery_names()) {
        const auto entry = make_entry<double>(name, N);
        if (!entry.membership)
            continue;
        INFO("entry " << name);
        REQUIRE(max_abs_coeff(class_residual(entry.map, *entry.membership)) <= 1e-12);
    }
}

TEST_CASE("catalogue spot values")
{
    SECTION("gamma1 series is (0, 1, 1/2, 1/3, ...) plus the matching g part")
    {
        const auto g1 = make_entry<double>("gamma1", 64);
        REQUIRE(g1.map.h.coeff(0) == cplx{});
        REQUIRE(g1.map.h.coeff(1) == cplx(1.0));
        for (std::size_t k = 2; k <= 64; ++k) {
            REQUIRE(std::abs(g1.map.h.coeff(k) - cplx(1.0 / double(k))) <= 1e-16);
            REQUIRE(std::abs(g1.map.g.coeff(k) - cplx(1.0 / double(k))) <= 1e-16);
        }
    }

    SECTION("p2 at order 8 evaluated at 0.3")
    {
        const auto p2 = make_entry<double>("p2", 8);
        REQUIRE(evaluate_map(p2.map, cplx(0.3)).real() ==
                Catch::Approx(0.3 + 0.045 + 0.045).margin(1e-16));
    }

    SECTION("convolving with e fixes the harmonic Koebe map")
    {
        const auto K = make_entry<double>("K", 64).map;
        const auto e = make_entry<double>("e", 64).map;
        const auto c = convolve(K, e);
        REQUIRE(max_abs_diff(c.h, K.h) == 0.0);
        REQUIRE(max_abs_diff(c.g, K.g) == 0.0);
    }

    SECTION("unknown names are rejected")
    {
        REQUIRE_THROWS_AS(make_entry<double>("p1", 64), std::invalid_argument);
        REQUIRE_THROWS_AS(make_entry<double>("nope", 64), std::invalid_argument);
        REQUIRE_THROWS_AS(make_entry<double>("gamma9", 64), std::invalid_argument);
    }
}

TEST_CASE("shear closed forms against the elementary displays")
{
    testutil::rng r(9002);

    SECTION("gamma1: mu_1 = -log(1-z), nu_1 = -z - log(1-z)")
    {
        const auto g1 = make_entry<double>("gamma1", 16);
        for (int rep = 0; rep < 40; ++rep) {
            const cplx z = r.in_disk(0.95);
            const cplx mu = -std::log(cplx(1.0) - z);
            const cplx nu = -z - std::log(cplx(1.0) - z);
            REQUIRE(std::abs(g1.closed_form(z) - (mu + std::conj(nu))) <= 1e-13);
        }
    }

    SECTION("gamma2: mu_2 = (1/2) log((1+z)/(1-z)), nu_2 = -z + mu_2")
    {
        const auto g2 = make_entry<double>("gamma2", 16);
        for (int rep = 0; rep < 40; ++rep) {
            const cplx z = r.in_disk(0.95);
            const cplx mu = 0.5 * std::log((cplx(1.0) + z) / (cplx(1.0) - z));
            const cplx nu = -z + mu;
            REQUIRE(std::abs(g2.closed_form(z) - (mu + std::conj(nu))) <= 1e-13);
        }
    }

    SECTION("psi1 = conj(z) + 2i arg(1+z)")
    {
        const auto p1 = make_entry<double>("psi1", 16);
        for (int rep = 0; rep < 40; ++rep) {
            const cplx z = r.in_disk(0.95);
            const cplx expect = std::conj(z) + cplx(0.0, 2.0 * std::arg(cplx(1.0) + z));
            REQUIRE(std::abs(p1.closed_form(z) - expect) <= 1e-13);
        }
    }

    SECTION("psi2 = conj(z) + 2i Im(arctan z)")
    {
        const auto p2 = make_entry<double>("psi2", 16);
        const cplx i(0.0, 1.0);
        for (int rep = 0; rep < 40; ++rep) {
            const cplx z = r.in_disk(0.95);
            const cplx atanz = std::log((cplx(1.0) + i * z) / (cplx(1.0) - i * z)) /
                               (cplx(2.0) * i);
            const cplx expect = std::conj(z) + cplx(0.0, 2.0 * atanz.imag());
            REQUIRE(std::abs(p2.closed_form(z) - expect) <= 1e-13);
        }
    }
}

TEST_CASE("rational entries also expand correctly via series division (dual route)")
{
    const std::size_t N = 64;
    const auto one = series::constant(cplx(1.0), N);
    const auto z = series::identity(N);

    SECTION("ex2_7: h = z(1+z)/(1-z)^2 has coefficients 2n-1")
    {
        const auto entry = make_entry<double>("ex2_7", N);
        const auto den = cauchy_product(sub(one, z), sub(one, z));
        const auto h = divide(add(z, series::monomial(2, N)), den);
        REQUIRE(max_abs_diff(entry.map.h, h) <= 1e-11);
        const auto g = divide(add(series::monomial(2, N), series::monomial(3, N)), den);
        REQUIRE(max_abs_diff(entry.map.g, g) <= 1e-11);
    }

    SECTION("ex3_6: h = z/(1-z^2)^2")
    {
        const auto entry = make_entry<double>("ex3_6", N);
        const auto omz2 = sub(one, series::monomial(2, N));
        const auto h = divide(z, cauchy_product(omz2, omz2));
        REQUIRE(max_abs_diff(entry.map.h, h) <= 1e-11);
    }

    SECTION("F and L share U, V with the expected half-plane coefficients")
    {
        const auto F = make_entry<double>("F", N);
        const auto L = make_entry<double>("L", N);
        for (std::size_t n = 1; n <= N; ++n) {
            REQUIRE(std::abs(F.map.h.coeff(n) - cplx(double(n + 1) / 2.0)) <= 1e-13);
            const double vg = n >= 2 ? double(n - 1) / 2.0 : 0.0;
            REQUIRE(std::abs(F.map.g.coeff(n) - cplx(vg)) <= 1e-13);
            REQUIRE(std::abs(L.map.g.coeff(n) + cplx(vg)) <= 1e-13);
        }
    }
}

TEST_CASE("stated dilatations of the gallery shears")
{
    const std::size_t N = 64;
    for (const std::string name : {"gamma3", "psi3", "F"}) {
        INFO("entry " << name);
        const auto entry = make_entry<double>(name, N);
        const auto w = dilatation(entry.map);
        const std::size_t k = (name == "F") ? 1 : 3;
        for (std::size_t j = 0; j + 1 <= N; ++j) {
            const cplx expect = (j == k) ? cplx(1.0) : cplx{};
            REQUIRE(std::abs(w.coeff(j) - expect) <= 1e-10);
        }
    }
}

TEST_CASE("closed-form convolutions")
{
    const std::size_t N = 128;
    testutil::rng r(9003);

    SECTION("gamma1 * F vanishes at the origin")
    {
        REQUIRE(std::abs(closed_form_convolution<double>("gamma1", "F")(cplx{})) == 0.0);
    }

    SECTION("gamma1 * K: series convolution against the quoted form at 0.4")
    {
        const auto g1 = make_entry<double>("gamma1", 256).map;
        const auto K = make_entry<double>("K", 256).map;
        const auto conv = convolve(g1, K);
        const auto cf = closed_form_convolution<double>("gamma1", "K");
        REQUIRE(std::abs(evaluate_map(conv, cplx(0.4)) - cf(cplx(0.4))) <= 1e-12);
    }

    SECTION("gamma2 * gamma2 coefficients are 1/(2n+1)^2 at odd indices")
    {
        const auto g2 = make_entry<double>("gamma2", N).map;
        const auto conv = convolve(g2, g2);
        for (std::size_t j = 2; j <= N; ++j) {
            double expect = 0.0;
            if ((j - 1) % 2 == 0)
                expect = 1.0 / double(j * j);
            REQUIRE(std::abs(conv.h.coeff(j) - cplx(expect)) <= 1e-16);
            REQUIRE(std::abs(conv.g.coeff(j) - cplx(expect)) <= 1e-16);
        }
    }

    SECTION("all catalogue convolutions match the series route pointwise on |z| <= 0.5")
    {
        const std::vector<std::pair<std::string, std::string>> pairs = {
            {"p2", "p2"},         {"p5", "p5"},       {"p3", "q3"},
            {"gamma1", "gamma1"}, {"gamma3", "gamma3"}, {"gamma2", "psi2"},
            {"gamma1", "ex2_7"},  {"gamma1", "ex2_10"}, {"gamma1", "F"},
            {"gamma1", "K"},      {"gamma1", "ex3_6"},  {"gamma1", "L"}};
        for (const auto& [a, b] : pairs) {
            INFO("pair " << a << " * " << b);
            const auto fa = make_entry<double>(a, N).map;
            const auto fb = make_entry<double>(b, N).map;
            const auto conv = convolve(fa, fb);
            const auto cf = closed_form_convolution<double>(a, b);
            for (int rep = 0; rep < 60; ++rep) {
                const cplx z = r.in_disk(0.5);
                REQUIRE(std::abs(evaluate_map(conv, z) - cf(z)) <= 1e-10);
            }
        }
    }

    SECTION("unknown pairs are rejected")
    {
        REQUIRE_THROWS_AS(closed_form_convolution<double>("p2", "p3"),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(closed_form_convolution<double>("K", "K"),
                          std::invalid_argument);
        REQUIRE(has_closed_form_convolution<double>("gamma1", "L"));
        REQUIRE(!has_closed_form_convolution<double>("e", "e"));
    }
}

TEST_CASE("image-region sanity for the half-plane shear")
{
    // The image of F is the region v^2 > -(u + 1/4); all mapped sample
    // points must satisfy the inequality (pointwise containment check,
    // not an identity proof).
    const auto F = make_entry<double>("F", 16);
    for (int i = 0; i < 720; ++i) {
        const double theta = 2.0 * std::numbers::pi * double(i) / 720.0;
        const cplx w = F.closed_form(std::polar(0.97, theta));
        REQUIRE(w.imag() * w.imag() + w.real() + 0.25 > 0.0);
    }
}
