// Truncated complex power series on the unit disk.
//
// A series of order N stores the coefficients c_0..c_N of
// sum_k c_k z^k; everything downstream (harmonic maps, shears,
// convolutions) is built from the arithmetic in this header.

#ifndef HARMCONV_SERIES_HPP
#define HARMCONV_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmconv {

template <std::floating_point T>
bool is_finite(const std::complex<T>& c)
{
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

/// Truncated power series c_0 + c_1 z + ... + c_N z^N. Immutable after
/// construction; all operations are pure functions returning new values.
///
/// Arithmetic between two series requires equal truncation orders; use
/// resized() to zero-pad or truncate explicitly. Silent promotion would
/// change the mathematical meaning of a truncation, so it is an error.
template <std::floating_point T = double>
class analytic_series {
public:
    using real_type = T;
    using complex_type = std::complex<T>;

    explicit analytic_series(std::vector<complex_type> coeffs)
        : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() < 2)
            throw std::invalid_argument("analytic_series: order must be a positive integer");
        for (const auto& c : coeffs_)
            if (!is_finite(c))
                throw std::invalid_argument("analytic_series: non-finite coefficient");
    }

    static analytic_series zero(std::size_t order)
    {
        return analytic_series(std::vector<complex_type>(order + 1, complex_type()));
    }

    static analytic_series constant(complex_type c0, std::size_t order)
    {
        std::vector<complex_type> c(order + 1, complex_type());
        c[0] = c0;
        return analytic_series(std::move(c));
    }

    /// The monomial c * z^k at the given truncation order (k <= order).
    static analytic_series monomial(std::size_t k, std::size_t order,
                                    complex_type c = complex_type(1))
    {
        if (k > order)
            throw std::invalid_argument("analytic_series::monomial: exponent exceeds order");
        std::vector<complex_type> v(order + 1, complex_type());
        v[k] = c;
        return analytic_series(std::move(v));
    }

    /// The identity map z.
    static analytic_series identity(std::size_t order) { return monomial(1, order); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<complex_type>& coeffs() const { return coeffs_; }

    complex_type coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : complex_type();
    }

    /// Explicit zero-pad (new_order > order) or truncation (new_order < order).
    analytic_series resized(std::size_t new_order) const
    {
        std::vector<complex_type> c(new_order + 1, complex_type());
        const std::size_t n = std::min(new_order, order());
        std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1, c.begin());
        return analytic_series(std::move(c));
    }

    /// Index of the highest nonzero coefficient (0 for the zero series).
    std::size_t effective_degree() const
    {
        std::size_t k = order();
        while (k > 0 && coeffs_[k] == complex_type())
            --k;
        return k;
    }

    bool is_zero(T tol = T(0)) const
    {
        for (const auto& c : coeffs_)
            if (std::abs(c) > tol)
                return false;
        return true;
    }

    /// Normalized in the sense c_0 = 0, c_1 = 1 (within tol).
    bool is_normalized(T tol = T(1e-12)) const
    {
        return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - complex_type(1)) <= tol;
    }

private:
    std::vector<complex_type> coeffs_;
};

namespace detail {

template <std::floating_point T>
void require_equal_orders(const analytic_series<T>& p, const analytic_series<T>& q,
                          const char* op)
{
    if (p.order() != q.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(p.order()) + " vs " +
                                    std::to_string(q.order()) + ")");
}

} // namespace detail

/// Horner evaluation of the truncation at z, |z| <= 1.
template <std::floating_point T>
std::complex<T> evaluate(const analytic_series<T>& p, std::complex<T> z)
{
    if (std::abs(z) > T(1))
        throw std::domain_error("evaluate: point outside the closed unit disk");
    const auto& c = p.coeffs();
    std::size_t k = p.effective_degree();
    std::complex<T> acc = c[k];
    while (k > 0) {
        --k;
        acc = acc * z + c[k];
    }
    return acc;
}

template <std::floating_point T>
analytic_series<T> add(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "add");
    std::vector<std::complex<T>> c(p.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] += q.coeffs()[k];
    return analytic_series<T>(std::move(c));
}

template <std::floating_point T>
analytic_series<T> sub(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "sub");
    std::vector<std::complex<T>> c(p.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] -= q.coeffs()[k];
    return analytic_series<T>(std::move(c));
}

template <std::floating_point T>
analytic_series<T> scale(const analytic_series<T>& p, std::complex<T> lambda)
{
    std::vector<std::complex<T>> c(p.coeffs());
    for (auto& x : c)
        x *= lambda;
    return analytic_series<T>(std::move(c));
}

/// Termwise derivative, zero-padded back to order N. The top coefficient
/// of the input is lost, so the result's usable order is N-1.
template <std::floating_point T>
analytic_series<T> differentiate(const analytic_series<T>& p)
{
    const std::size_t n = p.order();
    std::vector<std::complex<T>> c(n + 1, std::complex<T>());
    for (std::size_t k = 0; k + 1 <= n; ++k)
        c[k] = T(k + 1) * p.coeffs()[k + 1];
    return analytic_series<T>(std::move(c));
}

/// Termwise antiderivative vanishing at 0; the input's top coefficient
/// has no slot at order N and is dropped.
template <std::floating_point T>
analytic_series<T> integrate(const analytic_series<T>& p)
{
    const std::size_t n = p.order();
    std::vector<std::complex<T>> c(n + 1, std::complex<T>());
    for (std::size_t k = 0; k + 1 <= n; ++k)
        c[k + 1] = p.coeffs()[k] / T(k + 1);
    return analytic_series<T>(std::move(c));
}

/// Coefficients of the pointwise product, truncated at order N.
template <std::floating_point T>
analytic_series<T> cauchy_product(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "cauchy_product");
    const std::size_t n = p.order();
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    const std::size_t da = p.effective_degree();
    const std::size_t db = q.effective_degree();
    std::vector<std::complex<T>> c(n + 1, std::complex<T>());
    for (std::size_t i = 0; i <= da; ++i) {
        if (a[i] == std::complex<T>())
            continue;
        const std::size_t jmax = std::min(db, n - i);
        for (std::size_t j = 0; j <= jmax; ++j)
            c[i + j] += a[i] * b[j];
    }
    return analytic_series<T>(std::move(c));
}

/// Multiplicative inverse of p up to order N, by the standard recurrence
/// r_0 = 1/c_0, r_k = -(1/c_0) sum_{i=1..k} c_i r_{k-i}. Requires a
/// constant term bounded away from zero (|c_0| > 1e-13).
template <std::floating_point T>
analytic_series<T> reciprocal(const analytic_series<T>& p)
{
    const auto& c = p.coeffs();
    if (std::abs(c[0]) <= T(1e-13))
        throw std::invalid_argument("reciprocal: constant term is (near) zero");
    const std::size_t n = p.order();
    std::vector<std::complex<T>> r(n + 1, std::complex<T>());
    const std::complex<T> inv0 = std::complex<T>(1) / c[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::complex<T> s{};
        for (std::size_t i = 1; i <= k; ++i)
            s += c[i] * r[k - i];
        r[k] = -inv0 * s;
    }
    return analytic_series<T>(std::move(r));
}

/// p / q as reciprocal followed by a Cauchy product; the two steps are
/// each independently testable.
template <std::floating_point T>
analytic_series<T> divide(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "divide");
    return cauchy_product(p, reciprocal(q));
}

/// Hadamard (coefficientwise) product: c_k = p_k q_k.
template <std::floating_point T>
analytic_series<T> hadamard(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "hadamard");
    std::vector<std::complex<T>> c(p.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] *= q.coeffs()[k];
    return analytic_series<T>(std::move(c));
}

/// max_k |p_k - q_k|, the residual norm used by all coefficient identities.
template <std::floating_point T>
T max_abs_diff(const analytic_series<T>& p, const analytic_series<T>& q)
{
    detail::require_equal_orders(p, q, "max_abs_diff");
    T m = T(0);
    for (std::size_t k = 0; k <= p.order(); ++k)
        m = std::max(m, std::abs(p.coeffs()[k] - q.coeffs()[k]));
    return m;
}

template <std::floating_point T>
T max_abs_coeff(const analytic_series<T>& p)
{
    T m = T(0);
    for (const auto& c : p.coeffs())
        m = std::max(m, std::abs(c));
    return m;
}

} // namespace harmconv

#endif
