// Planar harmonic mappings f = h + conj(g) with h, g analytic on the
// unit disk, represented by equal-order truncated series. Provides the
// harmonic convolution, dilatation, Jacobian, shear construction,
// W_H^-/W_H^+ class residuals and the coefficient-halving integral
// operator f -> int h/t + conj(int g/t).

#ifndef HARMCONV_HARMONIC_HPP
#define HARMCONV_HARMONIC_HPP

#include <complex>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "series.hpp"

namespace harmconv {

/// Direction tag shared by the shear construction and the
/// convexity-in-one-direction checkers.
enum class axis { real_axis, imag_axis };

/// f = h + conj(g). Normalized membership in the class H means
/// h(0) = 0, h'(0) = 1, g(0) = 0, g'(0) = 0.
template <std::floating_point T = double>
struct harmonic_map {
    analytic_series<T> h;
    analytic_series<T> g;

    harmonic_map(analytic_series<T> h_, analytic_series<T> g_)
        : h(std::move(h_)), g(std::move(g_))
    {
        if (h.order() != g.order())
            throw std::invalid_argument("harmonic_map: h and g must have equal orders");
    }

    std::size_t order() const { return h.order(); }

    bool is_normalized(T tol = T(1e-12)) const
    {
        return h.is_normalized(tol) && std::abs(g.coeff(0)) <= tol &&
               std::abs(g.coeff(1)) <= tol;
    }
};

/// Which of the two shear families a target belongs to:
/// minus: h - g = phi, plus: h + g = phi.
enum class class_family { minus, plus };

/// Membership tag for the families W_H^-(phi) / W_H^+(phi); the target
/// phi must be normalized.
template <std::floating_point T = double>
struct class_tag {
    class_family kind;
    analytic_series<T> target;

    class_tag(class_family kind_, analytic_series<T> phi)
        : kind(kind_), target(std::move(phi))
    {
        if (!target.is_normalized())
            throw std::invalid_argument("class_tag: target must be normalized (c0=0, c1=1)");
    }
};

template <std::floating_point T>
class_tag<T> minus_class(analytic_series<T> phi)
{
    return class_tag<T>(class_family::minus, std::move(phi));
}

template <std::floating_point T>
class_tag<T> plus_class(analytic_series<T> phi)
{
    return class_tag<T>(class_family::plus, std::move(phi));
}

template <std::floating_point T>
std::complex<T> evaluate_map(const harmonic_map<T>& f, std::complex<T> z)
{
    return evaluate(f.h, z) + std::conj(evaluate(f.g, z));
}

/// Harmonic convolution f*F = h*H + conj(g*G) (Hadamard product on each part).
template <std::floating_point T>
harmonic_map<T> convolve(const harmonic_map<T>& f, const harmonic_map<T>& F)
{
    return harmonic_map<T>(hadamard(f.h, F.h), hadamard(f.g, F.g));
}

/// Dilatation w = g'/h' as a series of usable order N-1. Consumers that
/// need pointwise values near |z| = 1 should prefer dilatation_at, which
/// divides the evaluated derivatives and avoids truncation-division error.
template <std::floating_point T>
analytic_series<T> dilatation(const harmonic_map<T>& f)
{
    analytic_series<T> hp = differentiate(f.h);
    if (std::abs(hp.coeff(0)) <= T(1e-13))
        throw std::invalid_argument("dilatation: h'(0) vanishes");
    return cauchy_product(differentiate(f.g), reciprocal(hp));
}

/// Pointwise dilatation g'(z)/h'(z).
template <std::floating_point T>
std::complex<T> dilatation_at(const harmonic_map<T>& f, std::complex<T> z)
{
    return evaluate(differentiate(f.g), z) / evaluate(differentiate(f.h), z);
}

/// Jacobian |h'(z)|^2 - |g'(z)|^2 at an interior point.
template <std::floating_point T>
T jacobian_at(const harmonic_map<T>& f, std::complex<T> z)
{
    if (std::abs(z) >= T(1))
        throw std::domain_error("jacobian_at: point outside the open unit disk");
    return std::norm(evaluate(differentiate(f.h), z)) -
           std::norm(evaluate(differentiate(f.g), z));
}

/// Shear construction: from a normalized conformal target phi and an
/// intended dilatation w, build the harmonic map with
///   real axis:  h' = phi'/(1-w), g' = w h'   so that h - g = phi,
///   imag axis:  h' = phi'/(1+w), g' = w h'   so that h + g = phi,
/// both parts vanishing at 0. The checker does not certify |w| < 1 on
/// the whole disk; that is the verification layer's job.
template <std::floating_point T>
harmonic_map<T> shear(const analytic_series<T>& phi, const analytic_series<T>& w,
                      axis direction)
{
    if (!phi.is_normalized())
        throw std::invalid_argument("shear: phi must be normalized (c0=0, c1=1)");
    if (phi.order() != w.order())
        throw std::invalid_argument("shear: phi and w must have equal orders");
    if (std::abs(w.coeff(0)) >= T(1))
        throw std::invalid_argument("shear: |w(0)| must be < 1");
    const std::complex<T> sgn =
        (direction == axis::real_axis) ? std::complex<T>(-1) : std::complex<T>(1);
    analytic_series<T> denom =
        add(analytic_series<T>::constant(std::complex<T>(1), w.order()), scale(w, sgn));
    if (std::abs(denom.coeff(0)) <= T(1e-13))
        throw std::invalid_argument("shear: (1 -/+ w)(0) vanishes");
    analytic_series<T> hp = divide(differentiate(phi), denom);
    analytic_series<T> gp = cauchy_product(w, hp);
    return harmonic_map<T>(integrate(hp), integrate(gp));
}

/// Residual of the membership h - g = phi (minus) or h + g = phi (plus);
/// membership holds iff the residual is the zero series within 1e-12.
template <std::floating_point T>
analytic_series<T> class_residual(const harmonic_map<T>& f, const class_tag<T>& tag)
{
    analytic_series<T> combined =
        (tag.kind == class_family::minus) ? sub(f.h, f.g) : add(f.h, f.g);
    return sub(combined, tag.target);
}

/// The integral operator f -> int_0^z h(t)/t dt + conj(int_0^z g(t)/t dt),
/// i.e. the coefficient map a_n -> a_n/n, b_n -> b_n/n. Requires a
/// normalized input so that h/t and g/t are regular at 0.
template <std::floating_point T>
harmonic_map<T> alexander(const harmonic_map<T>& f)
{
    if (!f.is_normalized())
        throw std::invalid_argument("alexander: input must be normalized");
    const auto halve = [](const analytic_series<T>& p) {
        std::vector<std::complex<T>> c(p.coeffs());
        for (std::size_t k = 1; k < c.size(); ++k)
            c[k] /= T(k);
        c[0] = std::complex<T>();
        return analytic_series<T>(std::move(c));
    };
    return harmonic_map<T>(halve(f.h), halve(f.g));
}

} // namespace harmconv

#endif
