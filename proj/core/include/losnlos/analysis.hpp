#pragma once

#include <span>
#include <string>
#include <vector>

#include "energy_model.hpp"
#include "fitting.hpp"
#include "sweep.hpp"

namespace losnlos {

inline constexpr double per_km2_to_per_m2 = 1e-6;

/// A fitted law for one metric ("ase" or "ptx") on one segment, x in m^-2.
struct FitRecord
{
    std::string metric;
    PowerLawFit fit;
};

/// Piecewise fits of ASE and transmit power against realized density.
/// Segment membership follows the nominal density so that a lattice
/// rounded below a breakpoint stays in its intended segment.
std::vector<FitRecord>
fit_sweep(std::span<SweepRow const> rows, Breakpoints const& breakpoints_per_km2);

/// Pair the "ase" and "ptx" fits segment by segment.
std::vector<ScalingLaws> scaling_laws(std::span<FitRecord const> fits);

struct EnergyRow
{
    double p0_w = 0;
    double k_rf = 0;
    std::size_t segment = 0;
    double x_lo_per_km2 = 0;
    double x_hi_per_km2 = 0;
    double alpha = 0;
    double delta = 0;
    Regime regime;
    bool x_opt_in_segment = false;
};

struct EnergyCurveRow
{
    double p0_w = 0;
    EeCurvePoint point;
};

struct EnergyReport
{
    std::vector<EnergyRow> rows;
    std::vector<EnergyCurveRow> curve;
};

/// Regime per (p0, segment) and the tabulated efficiency curve.
EnergyReport analyze_energy(std::span<FitRecord const> fits,
                            std::span<double const> p0_w,
                            double k_rf,
                            EnergyParams const& base = {},
                            std::size_t points_per_segment = 64);

}  // namespace losnlos
