#include "losnlos/analysis.hpp"

#include <algorithm>

#include "losnlos/errors.hpp"

namespace losnlos {

std::vector<FitRecord>
fit_sweep(std::span<SweepRow const> rows, Breakpoints const& breakpoints_per_km2)
{
    Breakpoints const bp = breakpoints_per_km2.scaled(per_km2_to_per_m2);
    std::vector<DataPoint> ase, ptx;
    for (auto const& r : rows)
    {
        double const x = r.realized_density_per_km2 * per_km2_to_per_m2;
        double const key = r.density_per_km2 * per_km2_to_per_m2;
        ase.push_back({x, r.ase_bps_hz_m2, key});
        ptx.push_back({x, r.ptx_w, key});
    }

    std::vector<FitRecord> out;
    for (auto const& [metric, points] :
         {std::pair{"ase", &ase}, std::pair{"ptx", &ptx}})
    {
        try
        {
            for (auto const& fit : fit_piecewise(*points, bp))
                out.push_back({metric, fit});
        }
        catch (InsufficientDataError const& e)
        {
            throw InsufficientDataError(std::string("metric '") + metric
                                        + "': " + e.what());
        }
    }
    return out;
}

std::vector<ScalingLaws> scaling_laws(std::span<FitRecord const> fits)
{
    std::vector<PowerLawFit> ase, ptx;
    for (auto const& f : fits)
    {
        if (f.metric == "ase")
            ase.push_back(f.fit);
        else if (f.metric == "ptx")
            ptx.push_back(f.fit);
    }
    if (ase.empty() || ase.size() != ptx.size())
    {
        throw InsufficientDataError(
            "fits must hold the same non-zero number of 'ase' and 'ptx' "
            "segments");
    }
    auto by_lo = [](PowerLawFit const& a, PowerLawFit const& b) {
        return a.x_lo < b.x_lo;
    };
    std::sort(ase.begin(), ase.end(), by_lo);
    std::sort(ptx.begin(), ptx.end(), by_lo);

    std::vector<ScalingLaws> laws;
    for (std::size_t i = 0; i < ase.size(); ++i)
    {
        if (ase[i].x_lo != ptx[i].x_lo || ase[i].x_hi != ptx[i].x_hi)
        {
            throw InsufficientDataError(
                "'ase' and 'ptx' fits use different segment boundaries");
        }
        laws.push_back({ase[i], ptx[i]});
    }
    return laws;
}

EnergyReport analyze_energy(std::span<FitRecord const> fits,
                            std::span<double const> p0_w,
                            double k_rf,
                            EnergyParams const& base,
                            std::size_t points_per_segment)
{
    auto const laws = scaling_laws(fits);
    for (auto const& l : laws)
        l.validate();

    // Shared grid: points_per_segment log-spaced points inside each segment.
    std::vector<double> grid;
    for (std::size_t s = 0; s < laws.size(); ++s)
    {
        auto seg = log_grid(laws[s].ase_fit.x_lo,
                            laws[s].ase_fit.x_hi,
                            points_per_segment + 1);
        bool const last = s + 1 == laws.size();
        if (!last)
            seg.pop_back();
        grid.insert(grid.end(), seg.begin(), seg.end());
    }

    EnergyReport report;
    for (double p0 : p0_w)
    {
        EnergyParams params = base;
        params.p0_w = p0;
        params.k_rf = k_rf;
        params.validate();

        for (std::size_t s = 0; s < laws.size(); ++s)
        {
            EnergyRow row;
            row.p0_w = p0;
            row.k_rf = k_rf;
            row.segment = s;
            row.x_lo_per_km2 = laws[s].ase_fit.x_lo / per_km2_to_per_m2;
            row.x_hi_per_km2 = laws[s].ase_fit.x_hi / per_km2_to_per_m2;
            row.alpha = laws[s].alpha();
            row.delta = laws[s].delta();
            row.regime = classify_regime(
                row.alpha, row.delta, p0, laws[s].p_c(params));
            if (row.regime.x_opt_per_m2)
            {
                row.x_opt_in_segment = laws[s].ase_fit.contains(
                    *row.regime.x_opt_per_m2, s + 1 == laws.size());
            }
            report.rows.push_back(row);
        }
        for (auto const& pt : ee_curve(laws, params, grid))
            report.curve.push_back({p0, pt});
    }
    return report;
}

}  // namespace losnlos
