#pragma once

#include "sem/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

namespace sem
{

struct QuadratureConfig
{
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    std::size_t max_subdivisions = 1'000'000;
    double panel_growth = 2.0; ///< ratio between consecutive far-field panels
    double initial_panel = 1.0; ///< width w0 of the first panel at the left end
};

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    std::size_t panels = 0;
    bool roundoff_limited = false; ///< tolerance below the rounding floor
};

namespace detail
{

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
    double a;
    double b;
    double value;
    double error;
    bool at_floor; ///< estimate is pure rounding; bisection cannot help
};

template <class F>
Panel gauss_kronrod15(F& f, double a, double b)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(centre - dx);
        f2[j] = f(centre + dx);
        const double s = f1[j] + f2[j];
        resk += kWgk[j] * s;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * s;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double scale = std::abs(half);
    const double value = resk * half;
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    bool at_floor = false;
    const double floor = 50.0 * eps * resabs;
    if (floor >= err) {
        err = floor;
        at_floor = true;
    }
    return {a, b, value, err, at_floor};
}

} // namespace detail

/// Adaptive integral of f over [a, b].
///
/// The interval is first cut into geometric panels
/// [a, a + w0], [a + w0, a + 2 w0], [a + 2 w0, a + 4 w0], ... so that
/// integrands decaying algebraically away from `a` cost O(log(b - a))
/// panels. Each panel is integrated with the nested Gauss-Kronrod 7/15
/// pair; the panel with the largest error estimate is bisected until
/// the summed estimate meets max(abs_tol, rel_tol * |value|).
///
/// Throws ConvergenceError (carrying the best value) when the
/// subdivision budget runs out.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {})
{
    if (!(a < b))
        throw UsageError("integrate: requires a < b");
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_subdivisions < 1 ||
        !(cfg.panel_growth > 1.0) || !(cfg.initial_panel > 0.0))
        throw UsageError("integrate: invalid QuadratureConfig");

    std::vector<detail::Panel> active;
    std::vector<detail::Panel> done;
    auto by_error = [](const detail::Panel& l, const detail::Panel& r) { return l.error < r.error; };

    QuadratureResult out;
    auto push = [&](double lo, double hi) {
        auto p = detail::gauss_kronrod15(f, lo, hi);
        out.evaluations += 15;
        if (p.at_floor) {
            done.push_back(p);
        } else {
            active.push_back(p);
            std::push_heap(active.begin(), active.end(), by_error);
        }
        return p;
    };

    double lo = a;
    double width = std::min(cfg.initial_panel, b - a);
    while (lo < b) {
        double hi = lo + width;
        // Avoid a sliver at the end.
        if (hi >= b || (b - hi) < 0.5 * width)
            hi = b;
        push(lo, hi);
        if (lo > a)
            width *= cfg.panel_growth;
        lo = hi;
    }

    auto totals = [&]() {
        double v = 0.0;
        double e = 0.0;
        for (const auto& p : active) {
            v += p.value;
            e += p.error;
        }
        for (const auto& p : done) {
            v += p.value;
            e += p.error;
        }
        return std::pair{v, e};
    };

    auto [value, error] = totals();
    auto converged = [&] { return error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)); };
    std::size_t subdivisions = 0;
    for (;;) {
        // The running totals are updated incrementally; confirm against a
        // fresh sum before stopping.
        if (converged()) {
            std::tie(value, error) = totals();
            if (converged())
                break;
        }
        if (active.empty()) {
            out.roundoff_limited = true;
            break;
        }
        if (subdivisions >= cfg.max_subdivisions)
            throw ConvergenceError("integrate: subdivision budget exhausted", value, error);

        std::pop_heap(active.begin(), active.end(), by_error);
        const detail::Panel worst = active.back();
        active.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            done.push_back(worst);
            out.roundoff_limited = true;
            continue;
        }
        const auto left = push(worst.a, mid);
        const auto right = push(mid, worst.b);
        ++subdivisions;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
    }

    // Deterministic reduction in left-to-right panel order.
    done.insert(done.end(), active.begin(), active.end());
    std::sort(done.begin(), done.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    double sum = 0.0;
    double comp = 0.0;
    double err = 0.0;
    for (const auto& p : done) {
        const double t = sum + p.value;
        if (std::abs(sum) >= std::abs(p.value))
            comp += (sum - t) + p.value;
        else
            comp += (p.value - t) + sum;
        sum = t;
        err += p.error;
    }
    out.value = sum + comp;
    out.error = err;
    out.panels = done.size();
    return out;
}

} // namespace sem
