#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include "errors.hpp"
#include "univariate.hpp"

namespace jnt {

struct RootResult {
    double root = 0.0;
    std::size_t iterations = 0;
    double bracket_width = 0.0;
    bool converged = false;
};

/// Brent-style bracketed root finding: inverse quadratic / secant steps
/// guarded by bisection, so progress never stalls and every evaluation
/// stays inside the original [a, b].  Requires a < b and a sign change
/// (f(a) * f(b) <= 0); otherwise DomainError.  Stops when the bracket
/// shrinks to max(tol, ~4 eps |root|) or f hits exactly zero; running out
/// of iterations returns the best point with converged = false.
inline RootResult find_root(const UnivariateFunction& f, double a, double b, double tol = 1e-12,
                            std::size_t max_iter = 100) {
    if (!(a < b)) throw DomainError("find_root: requires a < b");
    if (!(tol > 0.0)) throw DomainError("find_root: tol must be positive");
    constexpr double eps = std::numeric_limits<double>::epsilon();

    double fa = f.eval(a), fb = f.eval(b);
    if (fa == 0.0) return {a, 0, 0.0, true};
    if (fb == 0.0) return {b, 0, 0.0, true};
    if (sign(fa) * sign(fb) > 0.0)
        throw DomainError("find_root: no sign change on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");

    // Classic zeroin state: b is the best point so far, c the counterpoint
    // with opposite sign, a the previous b.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        if (sign(fb) == sign(fc)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0)
            return {b, it - 1, fb == 0.0 ? 0.0 : std::fabs(c - b), true};

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // Interpolate: secant when only two points, inverse quadratic
            // when a, b, c are distinct.
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            else
                p = -p;
            if (2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f.eval(b);
    }
    return {b, max_iter, std::fabs(c - b), false};
}

/// Convenience overload for plain callables.
template <class F>
    requires(!std::is_base_of_v<UnivariateFunction, std::decay_t<F>> &&
             std::is_invocable_r_v<double, F, double>)
RootResult find_root(F&& f, double a, double b, double tol = 1e-12, std::size_t max_iter = 100) {
    const auto wrapped = make_function(std::forward<F>(f));
    return find_root(static_cast<const UnivariateFunction&>(wrapped), a, b, tol, max_iter);
}

} // namespace jnt
