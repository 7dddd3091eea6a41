#include "losnlos/energy_model.hpp"

#include <cmath>
#include <sstream>

#include "losnlos/errors.hpp"

namespace losnlos {

void EnergyParams::validate() const
{
    if (!(p0_w > 0))
        throw DomainError("static power p0 must be positive");
    if (!(k_rf >= 1))
        throw DomainError("k_rf must be at least 1");
    if (!(area_m2 > 0) || !(bw_hz > 0))
        throw DomainError("area and bandwidth must be positive");
}

double ScalingLaws::r1(EnergyParams const& params) const noexcept
{
    return params.bw_hz * ase_fit.a;
}

double ScalingLaws::p_c(EnergyParams const& params) const noexcept
{
    return params.k_rf * ptx_fit.a;
}

void ScalingLaws::validate() const
{
    if (!(alpha() > 0) || !(delta() < 0))
    {
        std::ostringstream msg;
        msg << "energy model requires an increasing ASE (alpha > 0) and a "
               "decreasing transmit power (delta < 0); got alpha = "
            << alpha() << ", delta = " << delta();
        throw DomainError(msg.str());
    }
    if (!(ase_fit.a > 0) || !(ptx_fit.a > 0))
        throw DomainError("scaling-law coefficients must be positive");
}

std::string_view to_string(RegimeKind kind) noexcept
{
    switch (kind)
    {
        case RegimeKind::monotone_increasing:
            return "monotone_increasing";
        case RegimeKind::monotone_decreasing:
            return "monotone_decreasing";
        case RegimeKind::interior_maximum:
            return "interior_maximum";
    }
    return "unknown";
}

std::optional<double> Regime::x_opt_per_km2() const noexcept
{
    if (!x_opt_per_m2)
        return std::nullopt;
    return *x_opt_per_m2 * 1e6;
}

double
total_power(double x_per_m2, ScalingLaws const& laws, EnergyParams const& params)
{
    double const n_bs = params.area_m2 * x_per_m2;
    return n_bs * (params.p0_w + params.k_rf * laws.ptx_fit(x_per_m2));
}

double
throughput(double x_per_m2, ScalingLaws const& laws, EnergyParams const& params)
{
    return params.area_m2 * params.bw_hz * laws.ase_fit(x_per_m2);
}

double energy_efficiency(double x_per_m2,
                         ScalingLaws const& laws,
                         EnergyParams const& params)
{
    double const numer = laws.r1(params) * std::pow(x_per_m2, laws.alpha() - 1);
    double const denom
        = params.p0_w + laws.p_c(params) * std::pow(x_per_m2, laws.delta());
    return numer / denom;
}

double stationary_density(double alpha, double delta, double p0, double p_c)
{
    return std::pow(p0 * (1 - alpha) / (p_c * (alpha - delta - 1)), 1 / delta);
}

Regime classify_regime(double alpha, double delta, double p0, double p_c)
{
    if (!(alpha > 0) || !(delta < 0) || !(p0 > 0) || !(p_c > 0))
    {
        std::ostringstream msg;
        msg << "regime classification needs alpha > 0, delta < 0, p0 > 0, "
               "p_c > 0; got alpha = "
            << alpha << ", delta = " << delta << ", p0 = " << p0
            << ", p_c = " << p_c;
        throw DomainError(msg.str());
    }

    Regime r;
    if (alpha >= 1)
    {
        r.kind = RegimeKind::monotone_increasing;
        r.boundary_case = alpha == 1;
    }
    else if (alpha <= 1 + delta)
    {
        r.kind = RegimeKind::monotone_decreasing;
        r.boundary_case = alpha == 1 + delta;
    }
    else
    {
        r.kind = RegimeKind::interior_maximum;
        r.x_opt_per_m2 = stationary_density(alpha, delta, p0, p_c);
    }
    return r;
}

std::vector<EeCurvePoint> ee_curve(std::span<ScalingLaws const> segments,
                                   EnergyParams const& params,
                                   std::span<double const> x_grid_per_m2)
{
    params.validate();
    for (auto const& s : segments)
        s.validate();

    std::vector<EeCurvePoint> curve;
    curve.reserve(x_grid_per_m2.size());
    for (double x : x_grid_per_m2)
    {
        std::size_t seg = segments.size();
        for (std::size_t s = 0; s < segments.size(); ++s)
        {
            if (segments[s].ase_fit.contains(x, s + 1 == segments.size()))
            {
                seg = s;
                break;
            }
        }
        if (seg == segments.size())
        {
            std::ostringstream msg;
            msg << "density " << x << " m^-2 lies outside every fitted segment";
            throw DomainError(msg.str());
        }
        EeCurvePoint pt;
        pt.x_per_m2 = x;
        pt.ee_bits_per_joule = energy_efficiency(x, segments[seg], params);
        pt.segment = seg;
        pt.segment_start = curve.empty() || curve.back().segment != seg;
        curve.push_back(pt);
    }
    return curve;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
    if (!(lo > 0) || !(hi > lo) || n < 2)
        throw DomainError("log grid needs 0 < lo < hi and n >= 2");
    std::vector<double> grid(n);
    double const l0 = std::log10(lo);
    double const step = (std::log10(hi) - l0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = std::pow(10.0, l0 + step * static_cast<double>(i));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace losnlos
