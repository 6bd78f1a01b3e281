// Catalogue of the named harmonic mappings used across the theorems:
// the polynomial families p_n, q_n, the identity shears gamma_k / psi_k,
// the half-plane shear F, the half-plane map L, the harmonic Koebe map K,
// three worked rational examples, the convolution identity e and the
// analytic fixtures l, koebe. Each entry carries a truncated-series
// representation and a closed-form pointwise evaluator so the two
// representations cross-validate.

#ifndef HARMCONV_GALLERY_HPP
#define HARMCONV_GALLERY_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonic.hpp"
#include "series.hpp"

namespace harmconv {

namespace detail {

template <std::floating_point T>
std::complex<T> pow_int(std::complex<T> z, std::size_t n)
{
    std::complex<T> r(1);
    for (std::size_t i = 0; i < n; ++i)
        r *= z;
    return r;
}

template <std::floating_point T>
void require_open_disk(std::complex<T> z)
{
    if (std::abs(z) >= T(1))
        throw std::domain_error("closed form: point outside the open unit disk");
}

// int_0^z dt/(1 - t^k) via partial fractions over the k-th roots of unity:
// -(1/k) sum_j w_j log(1 - z/w_j), w_j = exp(2 pi i j / k). Each factor
// 1 - z/w_j stays in the right half plane on |z| < 1, so the principal
// branch is the analytic one vanishing at 0.
template <std::floating_point T>
std::complex<T> integral_inv_one_minus_pow(std::complex<T> z, std::size_t k)
{
    std::complex<T> acc{};
    for (std::size_t j = 0; j < k; ++j) {
        const T ang = T(2) * std::numbers::pi_v<T> * T(j) / T(k);
        const std::complex<T> w = std::polar(T(1), ang);
        acc += w * std::log(std::complex<T>(1) - z / w);
    }
    return -acc / T(k);
}

// int_0^z dt/(1 + t^k): same partial fractions over the k-th roots of -1.
template <std::floating_point T>
std::complex<T> integral_inv_one_plus_pow(std::complex<T> z, std::size_t k)
{
    std::complex<T> acc{};
    for (std::size_t j = 0; j < k; ++j) {
        const T ang = std::numbers::pi_v<T> * T(2 * j + 1) / T(k);
        const std::complex<T> w = std::polar(T(1), ang);
        acc += w * std::log(std::complex<T>(1) - z / w);
    }
    return -acc / T(k);
}

// sum_{n>=1} s^n z^{nk+1} / (nk+1)^2 with s = +/-1, summed until the
// geometric tail falls below working precision. This is the evaluator for
// the lacunary convolution series with squared denominators, which have
// no elementary closed form.
template <std::floating_point T>
std::complex<T> lacunary_square_sum(std::complex<T> z, std::size_t k, int sign)
{
    require_open_disk(z);
    const std::complex<T> zk = pow_int(z, k);
    const T rho = std::abs(zk);
    std::complex<T> zp = z;
    std::complex<T> acc{};
    T s = T(1);
    for (std::size_t n = 1; n < 2000000; ++n) {
        zp *= zk;
        s *= T(sign);
        const T denom = T(n * k + 1);
        acc += s * zp / (denom * denom);
        if (std::abs(zp) * rho / ((T(1) - rho) * denom * denom) < T(1e-18))
            break;
    }
    return acc;
}

} // namespace detail

/// A named mapping with both a truncated-series representation and a
/// closed-form pointwise evaluator valid on |z| < 1. The two agree within
/// tail_bound(order, |z|), a documented geometric bound derived from the
/// coefficient growth |c_n| <= coeff_scale * (n+1)^coeff_power.
template <std::floating_point T = double>
struct gallery_entry {
    using complex_type = std::complex<T>;
    using evaluator = std::function<complex_type(complex_type)>;

    std::string name;
    harmonic_map<T> map;
    evaluator closed_form;
    std::string description;
    std::optional<class_tag<T>> membership;
    T coeff_scale = T(1);
    int coeff_power = 0;

    /// Upper bound on |series(z) - closed_form(z)| at |z| = r from the
    /// dropped coefficients of both parts.
    T tail_bound(T r) const
    {
        const std::size_t n0 = map.order() + 1;
        T sum = T(0);
        T rn = std::pow(r, T(n0));
        for (std::size_t n = n0; n < n0 + 400000; ++n) {
            const T term = std::pow(T(n + 1), T(coeff_power)) * rn;
            sum += term;
            if (term < T(1e-25) * (T(1) + sum))
                break;
            rn *= r;
        }
        return T(2) * coeff_scale * sum;
    }
};

namespace detail {

template <std::floating_point T>
analytic_series<T> halfplane_series(std::size_t order) // z/(1-z)
{
    std::vector<std::complex<T>> c(order + 1, std::complex<T>(1));
    c[0] = std::complex<T>();
    return analytic_series<T>(std::move(c));
}

template <std::floating_point T>
analytic_series<T> koebe_series(std::size_t order) // z/(1-z)^2
{
    std::vector<std::complex<T>> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c[n] = std::complex<T>(T(n));
    return analytic_series<T>(std::move(c));
}

template <std::floating_point T>
analytic_series<T> from_coeff_fn(std::size_t order, const std::function<T(std::size_t)>& fn)
{
    std::vector<std::complex<T>> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c[n] = std::complex<T>(fn(n));
    return analytic_series<T>(std::move(c));
}

// Parses a family name like "gamma3" -> 3; empty optional if no match.
inline std::optional<std::size_t> family_index(const std::string& name,
                                               const std::string& prefix,
                                               std::size_t lo, std::size_t hi)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::size_t idx = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            return std::nullopt;
        idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    if (idx < lo || idx > hi)
        return std::nullopt;
    return idx;
}

} // namespace detail

/// The gallery names exposed by the CLI, in catalogue order.
inline std::vector<std::string> gallery_names()
{
    std::vector<std::string> names;
    for (std::size_t n = 2; n <= 9; ++n)
        names.push_back("p" + std::to_string(n));
    for (std::size_t n = 2; n <= 9; ++n)
        names.push_back("q" + std::to_string(n));
    for (std::size_t k = 1; k <= 8; ++k)
        names.push_back("gamma" + std::to_string(k));
    for (std::size_t k = 1; k <= 8; ++k)
        names.push_back("psi" + std::to_string(k));
    for (const char* s : {"F", "L", "K", "ex2_7", "ex2_10", "ex3_6", "e", "l", "koebe"})
        names.push_back(s);
    return names;
}

/// Builds the named catalogue entry at the requested truncation order.
/// Throws std::invalid_argument for names outside the catalogue.
template <std::floating_point T = double>
gallery_entry<T> make_entry(const std::string& name, std::size_t order)
{
    using C = std::complex<T>;
    using S = analytic_series<T>;
    if (order < 2)
        throw std::invalid_argument("make_entry: order must be at least 2");

    const auto guard = detail::require_open_disk<T>;

    if (auto n = detail::family_index(name, "p", 2, 9)) {
        if (*n > order)
            throw std::invalid_argument("make_entry: order too small for " + name);
        S h = add(S::identity(order), S::monomial(*n, order, C(T(1) / T(*n))));
        S g = S::monomial(*n, order, C(T(1) / T(*n)));
        const std::size_t nn = *n;
        auto cf = [nn, guard](C z) {
            guard(z);
            const C zn = detail::pow_int(z, nn) / T(nn);
            return z + zn + std::conj(zn);
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "polynomial map z + z^n/n + conj(z^n/n), in W_H^-(z)",
                minus_class(S::identity(order)), T(1), 0};
    }
    if (auto n = detail::family_index(name, "q", 2, 9)) {
        if (*n > order)
            throw std::invalid_argument("make_entry: order too small for " + name);
        S h = sub(S::identity(order), S::monomial(*n, order, C(T(1) / T(*n))));
        S g = S::monomial(*n, order, C(T(1) / T(*n)));
        const std::size_t nn = *n;
        auto cf = [nn, guard](C z) {
            guard(z);
            const C zn = detail::pow_int(z, nn) / T(nn);
            return z - zn + std::conj(zn);
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "polynomial map z - z^n/n + conj(z^n/n), in W_H^+(z)",
                plus_class(S::identity(order)), T(1), 0};
    }
    if (auto k = detail::family_index(name, "gamma", 1, 8)) {
        if (*k > order)
            throw std::invalid_argument("make_entry: order too small for " + name);
        harmonic_map<T> m = shear(S::identity(order), S::monomial(*k, order), axis::real_axis);
        const std::size_t kk = *k;
        auto cf = [kk, guard](C z) {
            guard(z);
            const C mu = detail::integral_inv_one_minus_pow(z, kk);
            return mu + std::conj(mu - z);
        };
        return {name, std::move(m), cf,
                "real-axis shear of the identity with dilatation z^k",
                minus_class(S::identity(order)), T(1), 0};
    }
    if (auto k = detail::family_index(name, "psi", 1, 8)) {
        if (*k > order)
            throw std::invalid_argument("make_entry: order too small for " + name);
        harmonic_map<T> m = shear(S::identity(order), S::monomial(*k, order), axis::imag_axis);
        const std::size_t kk = *k;
        auto cf = [kk, guard](C z) {
            guard(z);
            const C ga = detail::integral_inv_one_plus_pow(z, kk);
            return ga + std::conj(z - ga);
        };
        return {name, std::move(m), cf,
                "imaginary-axis shear of the identity with dilatation z^k",
                plus_class(S::identity(order)), T(1), 0};
    }
    if (name == "F") {
        harmonic_map<T> m =
            shear(detail::halfplane_series<T>(order), S::identity(order), axis::real_axis);
        auto cf = [guard](C z) {
            guard(z);
            const C d = (C(1) - z) * (C(1) - z);
            const C u = (z - z * z / T(2)) / d;
            const C v = (z * z / T(2)) / d;
            return u + std::conj(v);
        };
        return {name, std::move(m), cf,
                "real-axis shear of z/(1-z) with dilatation z, in W_H^-(z/(1-z))",
                minus_class(detail::halfplane_series<T>(order)), T(1), 1};
    }
    if (name == "L") {
        harmonic_map<T> F =
            shear(detail::halfplane_series<T>(order), S::identity(order), axis::real_axis);
        harmonic_map<T> m(F.h, scale(F.g, C(-1)));
        auto cf = [guard](C z) {
            guard(z);
            const C d = (C(1) - z) * (C(1) - z);
            const C u = (z - z * z / T(2)) / d;
            const C v = (z * z / T(2)) / d;
            return u - std::conj(v);
        };
        return {name, std::move(m), cf,
                "harmonic half-plane map U - conj(V), in W_H^+(z/(1-z))",
                plus_class(detail::halfplane_series<T>(order)), T(1), 1};
    }
    if (name == "K") {
        harmonic_map<T> m =
            shear(detail::koebe_series<T>(order), S::identity(order), axis::real_axis);
        auto cf = [guard](C z) {
            guard(z);
            const C omz = C(1) - z;
            const C d = omz * omz * omz;
            const C H = (z - z * z / T(2) + z * z * z / T(6)) / d;
            const C G = (z * z / T(2) + z * z * z / T(6)) / d;
            return H + std::conj(G);
        };
        return {name, std::move(m), cf,
                "harmonic Koebe map: real-axis shear of z/(1-z)^2 with dilatation z",
                minus_class(detail::koebe_series<T>(order)), T(1), 2};
    }
    if (name == "ex2_7") {
        // h = z(1+z)/(1-z)^2, g = z^2(1+z)/(1-z)^2, h - g = z(1+z)/(1-z)
        S h = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n >= 1 ? T(2 * n) - T(1) : T(0);
        });
        S g = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n >= 2 ? T(2 * n) - T(3) : T(0);
        });
        S phi = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n >= 2 ? T(2) : (n == 1 ? T(1) : T(0));
        });
        auto cf = [guard](C z) {
            guard(z);
            const C d = (C(1) - z) * (C(1) - z);
            return z * (C(1) + z) / d + std::conj(z * z * (C(1) + z) / d);
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "rational map with h = z(1+z)/(1-z)^2, in W_H^-(z(1+z)/(1-z))",
                minus_class(std::move(phi)), T(2), 1};
    }
    if (name == "ex2_10") {
        S h = add(S::identity(order), S::monomial(2, order, C(T(1) / T(8))));
        S g = S::monomial(2, order, C(T(1) / T(8)));
        auto cf = [guard](C z) {
            guard(z);
            const C q = z * z / T(8);
            return z + q + std::conj(q);
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "fully convex polynomial map z + z^2/8 + conj(z^2/8), in W_H^-(z)",
                minus_class(S::identity(order)), T(1), 0};
    }
    if (name == "ex3_6") {
        // h = z/(1-z^2)^2, g = z^3/(1-z^2)^2, h + g = z(1+z^2)/(1-z^2)^2
        S h = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n % 2 == 1 ? T((n - 1) / 2 + 1) : T(0);
        });
        S g = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return (n % 2 == 1 && n >= 3) ? T((n - 1) / 2) : T(0);
        });
        S phi = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n % 2 == 1 ? T(n) : T(0);
        });
        auto cf = [guard](C z) {
            guard(z);
            const C d = (C(1) - z * z) * (C(1) - z * z);
            return z / d + std::conj(z * z * z / d);
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "rational map with h = z/(1-z^2)^2, in W_H^+(z(1+z^2)/(1-z^2)^2)",
                plus_class(std::move(phi)), T(1), 1};
    }
    if (name == "e") {
        S h = detail::halfplane_series<T>(order);
        S g = detail::from_coeff_fn<T>(order, [](std::size_t n) {
            return n >= 2 ? T(1) : T(0);
        });
        auto cf = [guard](C z) {
            guard(z);
            return z / (C(1) - z) + std::conj(z * z / (C(1) - z));
        };
        return {name, harmonic_map<T>(std::move(h), std::move(g)), cf,
                "identity element of the harmonic convolution", std::nullopt, T(1), 0};
    }
    if (name == "l") {
        auto cf = [guard](C z) {
            guard(z);
            return z / (C(1) - z);
        };
        return {name, harmonic_map<T>(detail::halfplane_series<T>(order), S::zero(order)),
                cf, "analytic right half-plane map z/(1-z)", std::nullopt, T(1), 0};
    }
    if (name == "koebe") {
        auto cf = [guard](C z) {
            guard(z);
            return z / ((C(1) - z) * (C(1) - z));
        };
        return {name, harmonic_map<T>(detail::koebe_series<T>(order), S::zero(order)), cf,
                "analytic Koebe map z/(1-z)^2", std::nullopt, T(1), 1};
    }
    throw std::invalid_argument("make_entry: unknown gallery name '" + name + "'");
}

/// Closed-form pointwise evaluator for the convolution of two named
/// entries, for the pairs whose convolution has a known display or
/// lacunary coefficient series. The lookup is symmetric in (a, b);
/// unknown pairs throw std::invalid_argument.
template <std::floating_point T = double>
std::function<std::complex<T>(std::complex<T>)>
closed_form_convolution(const std::string& a, const std::string& b)
{
    using C = std::complex<T>;
    const auto guard = detail::require_open_disk<T>;

    const auto match = [&](const std::string& x, const std::string& y,
                           std::string& first, std::string& second) {
        if (a == x && b == y) { first = a; second = b; return true; }
        if (a == y && b == x) { first = b; second = a; return true; }
        return false;
    };

    // p_n * p_n and p_n * q_n (matching n): polynomial results.
    for (std::size_t n = 2; n <= 9; ++n) {
        const std::string pn = "p" + std::to_string(n);
        const std::string qn = "q" + std::to_string(n);
        std::string f, s;
        if (match(pn, pn, f, s)) {
            return [n, guard](C z) {
                guard(z);
                const C zn = detail::pow_int(z, n) / T(n * n);
                return z + zn + std::conj(zn);
            };
        }
        if (match(pn, qn, f, s)) {
            return [n, guard](C z) {
                guard(z);
                const C zn = detail::pow_int(z, n) / T(n * n);
                return z - zn + std::conj(zn);
            };
        }
    }

    // gamma_k * gamma_k and gamma_k * psi_k (matching k): lacunary series
    // z + sum (+/-1)^n z^{nk+1}/(nk+1)^2 in each part.
    for (std::size_t k = 1; k <= 8; ++k) {
        const std::string gk = "gamma" + std::to_string(k);
        const std::string sk = "psi" + std::to_string(k);
        std::string f, s;
        if (match(gk, gk, f, s)) {
            return [k](C z) {
                const C S = detail::lacunary_square_sum(z, k, +1);
                return z + S + std::conj(S);
            };
        }
        if (match(gk, sk, f, s)) {
            return [k](C z) {
                const C A = detail::lacunary_square_sum(z, k, -1);
                return z + A - std::conj(A);
            };
        }
    }

    std::string f, s;
    if (match("gamma1", "ex2_7", f, s)) {
        return [guard](C z) {
            guard(z);
            const C lg = std::log(C(1) - z);
            const C u = T(2) * z / (C(1) - z) + lg;
            const C v = (T(3) * z - z * z) / (C(1) - z) + T(3) * lg;
            return u + std::conj(v);
        };
    }
    if (match("gamma1", "ex2_10", f, s)) {
        return [guard](C z) {
            guard(z);
            const C q = z * z / T(16);
            return z + q + std::conj(q);
        };
    }
    if (match("gamma1", "F", f, s)) {
        return [guard](C z) {
            guard(z);
            const C w = z / (C(1) - z);
            return C(w.real(), -std::arg(C(1) - z));
        };
    }
    if (match("gamma1", "K", f, s)) {
        return [guard](C z) {
            guard(z);
            const C d = (C(1) - z) * (C(1) - z);
            const C w = T(2) / T(3) * z / d;
            const T im = std::imag((z - T(3) * z * z) / d) / T(3);
            const T re = -std::log(std::abs(C(1) - z)) / T(3);
            return C(w.real() + re, w.imag() + im);
        };
    }
    if (match("gamma1", "ex3_6", f, s)) {
        return [guard](C z) {
            guard(z);
            const C w = z / (C(1) - z * z);
            const T v = std::arg((C(1) + z) / (C(1) - z)) / T(2);
            return C(w.real(), v);
        };
    }
    if (match("gamma1", "L", f, s)) {
        return [guard](C z) {
            guard(z);
            return C(-std::log(std::abs(C(1) - z)), std::imag(z / (C(1) - z)));
        };
    }
    throw std::invalid_argument("closed_form_convolution: no catalogue entry for '" + a +
                                "' * '" + b + "'");
}

template <std::floating_point T = double>
bool has_closed_form_convolution(const std::string& a, const std::string& b)
{
    try {
        (void)closed_form_convolution<T>(a, b);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

} // namespace harmconv

#endif
