#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fitting.hpp"

namespace losnlos {

/// Network power-consumption parameters. Densities are per m^2 throughout.
struct EnergyParams
{
    double p0_w = 2.0;        //!< static consumption per BS
    double k_rf = 10.0;       //!< inverse amplifier efficiency
    double area_m2 = 1e6;     //!< network area A
    double bw_hz = 10e6;      //!< system bandwidth

    void validate() const;
};

/// ASE and transmit-power scaling laws valid on one density interval.
///
/// ASE(x) = eta0 x^alpha in bit/s/Hz/m^2, P_TX(x) = P_T x^delta in W.
struct ScalingLaws
{
    PowerLawFit ase_fit;
    PowerLawFit ptx_fit;

    double alpha() const noexcept { return ase_fit.b; }
    double delta() const noexcept { return ptx_fit.b; }
    /// Per-area throughput coefficient: R(x) = A r1 x^alpha, r1 = BW eta0.
    double r1(EnergyParams const& params) const noexcept;
    /// Consumed RF power coefficient k_rf P_T.
    double p_c(EnergyParams const& params) const noexcept;

    /// Throws DomainError unless alpha > 0 and delta < 0.
    void validate() const;
};

enum class RegimeKind
{
    monotone_increasing,
    monotone_decreasing,
    interior_maximum,
};

std::string_view to_string(RegimeKind kind) noexcept;

struct Regime
{
    RegimeKind kind = RegimeKind::monotone_increasing;
    //! Stationary point (per m^2) for interior_maximum
    std::optional<double> x_opt_per_m2;
    //! alpha == 1 (saturating) or alpha == 1 + delta
    bool boundary_case = false;

    std::optional<double> x_opt_per_km2() const noexcept;
};

/// P_TOT = A x (p0 + k_rf P_T x^delta).
double total_power(double x_per_m2, ScalingLaws const& laws, EnergyParams const& params);

/// R(x) = A BW eta0 x^alpha, in bit/s.
double throughput(double x_per_m2, ScalingLaws const& laws, EnergyParams const& params);

/// r1 x^(alpha-1) / (p0 + p_c x^delta), in bit/J.
double energy_efficiency(double x_per_m2,
                         ScalingLaws const& laws,
                         EnergyParams const& params);

/// Stationary point (p0 (1-alpha) / (p_c (alpha - delta - 1)))^(1/delta).
double stationary_density(double alpha, double delta, double p0, double p_c);

Regime classify_regime(double alpha, double delta, double p0, double p_c);

struct EeCurvePoint
{
    double x_per_m2 = 0;
    double ee_bits_per_joule = 0;
    std::size_t segment = 0;
    //! First grid point evaluated with this segment's laws
    bool segment_start = false;
};

/// Evaluate the piecewise efficiency curve; each x uses the segment whose
/// ASE validity interval contains it (last segment closed on the right).
std::vector<EeCurvePoint> ee_curve(std::span<ScalingLaws const> segments,
                                   EnergyParams const& params,
                                   std::span<double const> x_grid_per_m2);

/// Log-spaced grid with \p n points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace losnlos
