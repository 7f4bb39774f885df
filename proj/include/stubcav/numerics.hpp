#pragma once

/**
 * numerics.hpp — small dependency-free numerical utilities.
 *
 * Everything here is a pure function of its arguments: re-entrant,
 * deterministic, safe for parallel parameter sweeps.
 *
 * find_root is bisection with secant acceleration.  The secant step is
 * taken only when it lands strictly inside the current bracket, and every
 * third iteration bisects unconditionally, so convergence is guaranteed
 * for any continuous sign change.  Callers must supply brackets that do
 * not straddle a pole; a bracketed pole (cot/tan style sign change with
 * |f| diverging) is detected at convergence and reported as an error.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "stubcav/constants.hpp"
#include "stubcav/errors.hpp"

namespace stubcav::numerics {

// Sign-change interval: lo < hi and f_lo * f_hi <= 0.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

template <class F>
Bracket make_bracket(F&& f, double lo, double hi) {
    return Bracket{lo, hi, f(lo), f(hi)};
}

// Sampled function on a strictly increasing grid.
struct GridFunction {
    std::vector<double> xs;
    std::vector<double> ys;
};

inline void validate_grid(const GridFunction& grid) {
    if (grid.xs.size() != grid.ys.size())
        throw ValidationError("grid: xs and ys must have the same length");
    if (grid.xs.size() < 2)
        throw ValidationError("grid: need at least 2 samples");
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        if (!std::isfinite(grid.xs[i]) || !std::isfinite(grid.ys[i]))
            throw ValidationError("grid: all values must be finite");
        if (i > 0 && !(grid.xs[i] > grid.xs[i - 1]))
            throw ValidationError("grid: xs must be strictly increasing");
    }
}

/**
 * Root of f inside the bracket, to relative x-tolerance rel_tol.
 *
 * Guarantees: deterministic, |x - root| <= rel_tol * max(|lo|,|hi|) for a
 * continuous f; for strictly monotone f the root is unique in the bracket.
 * Throws NumericsError on an invalid bracket, a non-finite evaluation
 * (carrying the offending x), or a bracketed pole.
 */
template <class F>
double find_root(F&& f, const Bracket& bracket, double rel_tol = 1e-10) {
    if (!std::isfinite(rel_tol) || !(rel_tol >= 1e-14))
        throw ValidationError("find_root: rel_tol must be >= 1e-14");

    double lo = bracket.lo, hi = bracket.hi;
    double f_lo = bracket.f_lo, f_hi = bracket.f_hi;
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi) ||
        !std::isfinite(f_lo) || !std::isfinite(f_hi))
        throw NumericsError("find_root: invalid bracket");
    if (f_lo * f_hi > 0.0)
        throw NumericsError("find_root: no sign change in bracket");
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;

    const double f_abs_0 = std::max(std::abs(f_lo), std::abs(f_hi));

    for (int iter = 0; iter < 400; ++iter) {
        const double width = hi - lo;
        const double scale = std::max(std::abs(lo), std::abs(hi));
        if (!(width > rel_tol * scale)) break;

        double x = 0.5 * (lo + hi);
        if (iter % 3 != 0 && f_hi != f_lo) {
            const double xs = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            const double guard = 0.01 * width;
            if (xs > lo + guard && xs < hi - guard) x = xs;
        }

        const double fx = f(x);
        if (!std::isfinite(fx))
            throw NumericsError("find_root: non-finite evaluation at x=" + std::to_string(x), x);
        if (fx == 0.0) return x;
        if ((f_lo < 0.0) == (fx < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }

    const double x_mid = 0.5 * (lo + hi);
    const double f_mid = f(x_mid);
    // At a genuine root |f| collapses with the bracket; across a pole it
    // keeps growing at both shrinking endpoints.
    if (std::isfinite(f_mid) && std::abs(f_mid) > 2.0 * f_abs_0 &&
        std::abs(f_lo) > f_abs_0 && std::abs(f_hi) > f_abs_0)
        throw NumericsError("find_root: sign change at x=" + std::to_string(x_mid) +
                                " is a pole, not a root",
                            x_mid);
    return x_mid;
}

/**
 * Continuous phase from wrapped samples: each step is moved by the integer
 * multiple of 2*pi that brings it into (-pi, pi].  The first sample is kept
 * as-is; output minus input is a multiple of 2*pi at every point.
 */
inline GridFunction unwrap_phase(const GridFunction& grid) {
    validate_grid(grid);
    GridFunction out;
    out.xs = grid.xs;
    out.ys.resize(grid.ys.size());
    out.ys[0] = grid.ys[0];
    long long wraps = 0;
    for (std::size_t i = 1; i < grid.ys.size(); ++i) {
        const double d = grid.ys[i] - grid.ys[i - 1];
        wraps += static_cast<long long>(std::ceil((d - constants::pi) / constants::two_pi));
        out.ys[i] = grid.ys[i] - constants::two_pi * static_cast<double>(wraps);
    }
    return out;
}

namespace detail {

// Golden-section maximum of f on [a, b]; assumes f unimodal there.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double rel_tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < 400; ++iter) {
        if (!(b - a > rel_tol * std::max(std::abs(a), std::abs(b)))) break;
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace detail

struct PeakHalfMax {
    double x_peak;
    double x_left_half;
    double x_right_half;
    double y_peak;
};

/**
 * Locate an interior peak of the sampled function and its half-maximum
 * crossings.  `refine` must be the continuous function the grid samples;
 * the peak is polished by golden-section search around the best sample and
 * the half-max abscissas by root finding on refine(x) - y_peak/2.
 */
template <class F>
PeakHalfMax peak_and_halfmax(const GridFunction& grid, F&& refine) {
    validate_grid(grid);
    const std::size_t n = grid.xs.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (grid.ys[i] > grid.ys[best]) best = i;
    if (best == 0 || best == n - 1)
        throw NumericsError("peak not bracketed: maximum lies on the grid boundary");

    auto [x_peak, y_peak] =
        detail::golden_max(refine, grid.xs[best - 1], grid.xs[best + 1], 1e-12);
    if (y_peak < grid.ys[best]) {
        x_peak = grid.xs[best];
        y_peak = grid.ys[best];
    }

    const double half = 0.5 * y_peak;
    auto crossing = [&](double x_out) {
        auto h = [&](double x) { return refine(x) - half; };
        const double a = std::min(x_out, x_peak);
        const double b = std::max(x_out, x_peak);
        return find_root(h, make_bracket(h, a, b), 1e-12);
    };

    std::size_t jl = best;
    while (jl > 0 && !(grid.ys[jl - 1] < half)) --jl;
    if (jl == 0)
        throw NumericsError("half width not bracketed on the left");
    std::size_t jr = best;
    while (jr + 1 < n && !(grid.ys[jr + 1] < half)) ++jr;
    if (jr == n - 1)
        throw NumericsError("half width not bracketed on the right");

    const double x_left = crossing(grid.xs[jl - 1]);
    const double x_right = crossing(grid.xs[jr + 1]);
    return PeakHalfMax{x_peak, x_left, x_right, y_peak};
}

}  // namespace stubcav::numerics
