#pragma once

// Reference implementations used to cross-check the library. They are
// written independently of the library code paths on purpose.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

/// Direct evaluation of p_L(d) with no shortcuts.
inline double los_probability(double d, double d0, double d1)
{
    return 0.5 - std::min(0.5, 5 * std::exp(-d0 / d))
           + std::min(0.5, 5 * std::exp(-d / d1));
}

/// Type-7 sample quantile, written from the textbook definition.
inline double quantile(std::vector<double> v, double q)
{
    std::sort(v.begin(), v.end());
    double const pos = q * static_cast<double>(v.size() - 1);
    auto const lo = static_cast<std::size_t>(std::floor(pos));
    auto const hi = std::min(lo + 1, v.size() - 1);
    double const frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

/// Golden-section search for the maximum of a unimodal g on [a, b].
inline double golden_section_argmax(std::function<double(double)> const& g,
                                    double a,
                                    double b,
                                    double tol = 1e-11)
{
    double const invphi = (std::sqrt(5.0) - 1) / 2;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > tol)
    {
        if (gc > gd)
        {
            b = d;
            d = c;
            gd = gc;
            c = b - invphi * (b - a);
            gc = g(c);
        }
        else
        {
            a = c;
            c = d;
            gc = gd;
            d = a + invphi * (b - a);
            gd = g(d);
        }
    }
    return 0.5 * (a + b);
}

/// ln of the energy efficiency at x = e^t, dropping the constant ln r1:
/// (alpha-1) t - ln(p0 + p_c e^(delta t)).
inline double log_energy_efficiency(double t, double alpha, double delta,
                                    double p0, double p_c)
{
    double const u = std::log(p0);
    double const v = std::log(p_c) + delta * t;
    double const m = std::max(u, v);
    return (alpha - 1) * t - (m + std::log(std::exp(u - m) + std::exp(v - m)));
}

/// Maximizer in x of the energy efficiency, searched on [x_lo, x_hi].
inline double ee_argmax(double alpha, double delta, double p0, double p_c,
                        double x_lo, double x_hi)
{
    double const t = golden_section_argmax(
        [&](double t) { return log_energy_efficiency(t, alpha, delta, p0, p_c); },
        std::log(x_lo),
        std::log(x_hi));
    return std::exp(t);
}

/// Plain energy efficiency r1 x^(alpha-1) / (p0 + p_c x^delta).
inline double energy_efficiency(double x, double alpha, double delta, double r1,
                                double p0, double p_c)
{
    return r1 * std::pow(x, alpha - 1) / (p0 + p_c * std::pow(x, delta));
}

/// Least squares line through (log10 x, log10 y) via the normal equations.
struct Line
{
    double slope;
    double intercept;
};

inline Line log_log_ols(std::vector<double> const& x, std::vector<double> const& y)
{
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double lx = std::log10(x[i]);
        double ly = std::log10(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

}  // namespace oracle
