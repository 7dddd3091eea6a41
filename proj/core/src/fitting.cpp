#include "losnlos/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "losnlos/errors.hpp"

namespace losnlos {

double PowerLawFit::operator()(double x) const noexcept
{
    return a * std::pow(x, b);
}

bool PowerLawFit::contains(double x, bool closed_right) const noexcept
{
    return x >= x_lo && (x < x_hi || (closed_right && x == x_hi));
}

Breakpoints Breakpoints::defaults()
{
    return Breakpoints({10, 60, 400, 8000});
}

Breakpoints::Breakpoints(std::vector<double> values) : values_(std::move(values))
{
    if (values_.size() < 2)
        throw ConfigError("breakpoints need at least 2 entries");
    for (std::size_t i = 0; i < values_.size(); ++i)
    {
        if (!(values_[i] > 0) || !std::isfinite(values_[i]))
            throw ConfigError("breakpoints must be positive and finite");
        if (i > 0 && !(values_[i] > values_[i - 1]))
            throw ConfigError("breakpoints must be strictly increasing");
    }
}

Breakpoints Breakpoints::scaled(double factor) const
{
    std::vector<double> v(values_);
    for (auto& x : v)
        x *= factor;
    return Breakpoints(std::move(v));
}

PowerLawFit fit_power_law(std::span<DataPoint const> points)
{
    std::vector<double> lx, ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (auto const& p : points)
    {
        if (!(p.x > 0) || !(p.y > 0))
        {
            std::ostringstream msg;
            msg << "power-law fit needs positive data, got (" << p.x << ", "
                << p.y << ")";
            throw DomainError(msg.str());
        }
        lx.push_back(std::log10(p.x));
        ly.push_back(std::log10(p.y));
    }
    auto [min_it, max_it] = std::minmax_element(lx.begin(), lx.end());
    if (points.size() < 2 || *min_it == *max_it)
    {
        throw InsufficientDataError(
            "power-law fit needs at least 2 distinct x values");
    }

    double const n = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i)
    {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;

    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i)
    {
        double const dx = lx[i] - mx;
        double const dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    PowerLawFit fit;
    fit.b = sxy / sxx;
    double const intercept = my - fit.b * mx;
    fit.a = std::pow(10.0, intercept);

    double ss_res = 0;
    for (std::size_t i = 0; i < lx.size(); ++i)
    {
        double const r = ly[i] - (intercept + fit.b * lx[i]);
        ss_res += r * r;
    }
    fit.r2 = syy > 0 ? 1 - ss_res / syy : 1.0;
    fit.x_lo = std::pow(10.0, *min_it);
    fit.x_hi = std::pow(10.0, *max_it);
    fit.n_points = points.size();
    return fit;
}

std::vector<PowerLawFit>
fit_piecewise(std::span<DataPoint const> points, Breakpoints const& breakpoints)
{
    auto const bp = breakpoints.values();
    std::vector<PowerLawFit> fits;
    fits.reserve(breakpoints.n_segments());
    for (std::size_t s = 0; s < breakpoints.n_segments(); ++s)
    {
        bool const last = s + 1 == breakpoints.n_segments();
        std::vector<DataPoint> segment;
        for (auto const& p : points)
        {
            double const k = p.segment_key();
            if (k >= bp[s] && (k < bp[s + 1] || (last && k == bp[s + 1])))
                segment.push_back(p);
        }
        try
        {
            PowerLawFit fit = fit_power_law(segment);
            fit.x_lo = bp[s];
            fit.x_hi = bp[s + 1];
            fits.push_back(fit);
        }
        catch (InsufficientDataError const&)
        {
            std::ostringstream msg;
            msg << "segment " << s + 1 << " [" << bp[s] << ", " << bp[s + 1]
                << (last ? "]" : ")") << " has " << segment.size()
                << " point(s); at least 2 distinct x values are required";
            throw InsufficientDataError(msg.str());
        }
    }
    return fits;
}

}  // namespace losnlos
