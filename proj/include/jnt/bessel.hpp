#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "errors.hpp"

// Bessel functions J0, J1, Y0, Y1 and modified Bessel functions I0, I1,
// K0, K1 of a real argument, double precision.
//
// Evaluation strategy (each region validated against high-precision
// references to better than 1e-10 relative):
//   J, Y:  ascending power series in extended precision for |x| <= 13,
//          Hankel asymptotic expansion with phase for |x| > 13.
//   I:     ascending series everywhere (all terms positive, so there is
//          no cancellation); overflows naturally to +inf around x ~ 714.
//   K:     logarithmic ascending series for x <= 1.5; for larger x the
//          integral representation
//              K_n(x) = e^{-x} inf_int_0 e^{-2 x sinh^2(t/2)} cosh(n t) dt
//          evaluated by interval-halving trapezoid quadrature, which
//          converges rapidly for this smooth, exponentially decaying
//          integrand.

namespace jnt {

namespace detail {

inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;
inline constexpr long double kEulerGammaL = 0.57721566490153286060651209008240243L;

// sum of the ascending series for J_nu (nu = 0 or 1), without checks.
inline long double j_series_sum(int nu, long double x) {
    const long double q = x * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 400; ++k) {
        term *= -q / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (fabsl(term) <= 1e-22L * (fabsl(sum) + 1e-30L)) break;
    }
    return sum; // J_nu = (x/2)^nu * sum
}

// P and Q of the Hankel asymptotic expansion, with the 1/x powers folded
// into the recurrence.  Truncated at the smallest term.
inline void hankel_pq(int nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    double t = 1.0;
    p = 1.0;
    q = 0.0;
    double prev = HUGE_VAL;
    int psign = -1, qsign = 1;
    for (int m = 1; m <= 40; ++m) {
        const double odd = 2.0 * m - 1.0;
        t *= (mu - odd * odd) / (8.0 * m * x);
        if (std::fabs(t) >= prev) break; // divergent tail reached
        prev = std::fabs(t);
        if (m % 2 == 1) {
            q += qsign * t;
            qsign = -qsign;
        } else {
            p += psign * t;
            psign = -psign;
        }
        if (prev < 1e-17) break;
    }
}

// J_nu and Y_nu for x > series cutoff, via amplitude/phase form.
inline void jy_asymptotic(int nu, double x, double& jv, double& yv) {
    double p, q;
    hankel_pq(nu, x, p, q);
    const double pi = static_cast<double>(kPiL);
    const double chi = x - (2 * nu + 1) * (pi / 4.0);
    const double f = std::sqrt(2.0 / (pi * x));
    const double c = std::cos(chi), s = std::sin(chi);
    jv = f * (p * c - q * s);
    yv = f * (p * s + q * c);
}

inline constexpr double kJySeriesCutoff = 13.0;

inline long double y0_series(long double x) {
    const long double q = x * x / 4.0L;
    const long double lg = logl(x / 2.0L) + kEulerGammaL;
    // sum2 = sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
    long double term = 1.0L, h = 0.0L, sum2 = 0.0L;
    long double sgn = 1.0L;
    for (int k = 1; k <= 400; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        sum2 += sgn * h * term;
        sgn = -sgn;
        if (term * h <= 1e-22L * (fabsl(sum2) + 1e-30L)) break;
    }
    return (2.0L / kPiL) * (lg * j_series_sum(0, x) + sum2);
}

inline long double y1_series(long double x) {
    const long double q = x * x / 4.0L;
    const long double lg = logl(x / 2.0L) + kEulerGammaL;
    const long double j1 = (x / 2.0L) * j_series_sum(1, x);
    // s = sum_{k>=0} (-1)^k (H_k + H_{k+1}) q^k / (k! (k+1)!)
    long double term = 1.0L, hk = 0.0L, hk1 = 1.0L, s = hk + hk1; // k = 0 term
    long double sgn = -1.0L;
    for (int k = 1; k <= 400; ++k) {
        term *= q / (static_cast<long double>(k) * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        s += sgn * (hk + hk1) * term;
        sgn = -sgn;
        if (term * (hk + hk1) <= 1e-22L * (fabsl(s) + 1e-30L)) break;
    }
    return (2.0L / kPiL) * (lg * j1 - 1.0L / x - (x / 4.0L) * s);
}

// Ascending series for I_nu; all terms positive.  Returns +inf once the
// sum exceeds the double range.
inline double i_series(int nu, double ax) {
    const double q = ax * ax / 4.0;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 1200; ++k) {
        term *= q / (static_cast<double>(k) * (k + nu));
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return (nu == 0) ? sum : (ax / 2.0) * sum;
}

inline constexpr double kKSeriesCutoff = 1.5;

inline double k0_series(double x) {
    const long double xl = x;
    const long double q = xl * xl / 4.0L;
    const long double lg = logl(xl / 2.0L) + kEulerGammaL;
    // i0 = I0 series; ks = sum_{k>=1} H_k q^k / (k!)^2
    long double term = 1.0L, h = 0.0L, i0 = 1.0L, ks = 0.0L;
    for (int k = 1; k <= 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        i0 += term;
        ks += h * term;
        if (term * h <= 1e-22L * (ks + 1e-30L)) break;
    }
    return static_cast<double>(-lg * i0 + ks);
}

inline double k1_series(double x) {
    const long double xl = x;
    const long double q = xl * xl / 4.0L;
    const long double lx = logl(xl / 2.0L);
    // i1sum: I1 = (x/2) * i1sum;  s = sum_k (H_k + H_{k+1} - 2 gamma) q^k / (k! (k+1)!)
    long double term = 1.0L, i1sum = 1.0L, hk = 0.0L, hk1 = 1.0L;
    long double s = hk + hk1 - 2.0L * kEulerGammaL;
    for (int k = 1; k <= 200; ++k) {
        term *= q / (static_cast<long double>(k) * (k + 1));
        i1sum += term;
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        s += (hk + hk1 - 2.0L * kEulerGammaL) * term;
        if (term * (hk + hk1) <= 1e-22L * (fabsl(s) + 1e-30L)) break;
    }
    const long double i1 = (xl / 2.0L) * i1sum;
    return static_cast<double>(1.0L / xl + lx * i1 - (xl / 4.0L) * s);
}

// e^x K_nu(x) = int_0^inf exp(-2 x sinh^2(t/2)) cosh(nu t) dt by
// trapezoid quadrature with interval halving.
inline double k_quadrature(int nu, double x) {
    const auto g = [&](double t) {
        const double sh = std::sinh(t / 2.0);
        const double w = 2.0 * x * sh * sh;
        if (w > 745.0) return 0.0;
        return std::exp(-w) * std::cosh(nu * t);
    };
    double tmax = 1.0;
    while (g(tmax) > 1e-22 && tmax < 64.0) tmax *= 1.5;
    std::size_t steps = 64;
    double h = tmax / static_cast<double>(steps);
    double sum = 0.5 * (g(0.0) + g(tmax));
    for (std::size_t i = 1; i < steps; ++i) sum += g(h * static_cast<double>(i));
    double integral = h * sum;
    for (int level = 0; level < 16; ++level) {
        double mid = 0.0;
        for (std::size_t i = 0; i < steps; ++i) mid += g(h * (static_cast<double>(i) + 0.5));
        const double refined = 0.5 * integral + 0.5 * h * mid;
        const bool done = std::fabs(refined - integral) <= 1e-15 * std::fabs(refined);
        integral = refined;
        steps *= 2;
        h *= 0.5;
        if (done) break;
    }
    return std::exp(-x) * integral;
}

} // namespace detail

/// Bessel function of the first kind, order 0.
inline double bessel_j0(double x) {
    const double ax = std::fabs(x);
    if (ax <= detail::kJySeriesCutoff)
        return static_cast<double>(detail::j_series_sum(0, ax));
    double j, y;
    detail::jy_asymptotic(0, ax, j, y);
    return j;
}

/// Bessel function of the first kind, order 1 (odd: J1(-x) = -J1(x)).
inline double bessel_j1(double x) {
    const double ax = std::fabs(x);
    double j;
    if (ax <= detail::kJySeriesCutoff) {
        j = static_cast<double>((static_cast<long double>(ax) / 2.0L) *
                                detail::j_series_sum(1, ax));
    } else {
        double y;
        detail::jy_asymptotic(1, ax, j, y);
    }
    return x < 0.0 ? -j : j;
}

/// Bessel function of the second kind, order 0; defined for x > 0.
inline double bessel_y0(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_y0: requires x > 0, got " + std::to_string(x));
    if (x <= detail::kJySeriesCutoff) return static_cast<double>(detail::y0_series(x));
    double j, y;
    detail::jy_asymptotic(0, x, j, y);
    return y;
}

/// Bessel function of the second kind, order 1; defined for x > 0.
inline double bessel_y1(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_y1: requires x > 0, got " + std::to_string(x));
    if (x <= detail::kJySeriesCutoff) return static_cast<double>(detail::y1_series(x));
    double j, y;
    detail::jy_asymptotic(1, x, j, y);
    return y;
}

/// Modified Bessel function of the first kind, order 0.  Grows like
/// e^x / sqrt(x); overflows to +inf around x ~ 714.
inline double bessel_i0(double x) { return detail::i_series(0, std::fabs(x)); }

/// Modified Bessel function of the first kind, order 1 (odd).
inline double bessel_i1(double x) {
    const double v = detail::i_series(1, std::fabs(x));
    return x < 0.0 ? -v : v;
}

/// Modified Bessel function of the second kind, order 0; x > 0.
inline double bessel_k0(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k0: requires x > 0, got " + std::to_string(x));
    if (x <= detail::kKSeriesCutoff) return detail::k0_series(x);
    return detail::k_quadrature(0, x);
}

/// Modified Bessel function of the second kind, order 1; x > 0.
inline double bessel_k1(double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k1: requires x > 0, got " + std::to_string(x));
    if (x <= detail::kKSeriesCutoff) return detail::k1_series(x);
    return detail::k_quadrature(1, x);
}

} // namespace jnt
