#pragma once

#include <cmath>
#include <variant>

#include <boost/random/normal_distribution.hpp>

#include "rng.hpp"

namespace losnlos {

/// Closest BS-user separation used in any path-loss evaluation.
inline constexpr double min_distance_km = 1e-3;

/// Power-law attenuation K d^beta expressed as intercept_db + 10 beta log10(d).
struct PowerLawLoss
{
    double intercept_db = 0;  //!< 10 log10 K, d in km
    double exponent = 0;      //!< beta

    double linear_k() const noexcept { return std::pow(10.0, intercept_db / 10); }
    /// dB increase per unit of ln(d).
    double slope_per_ln() const noexcept
    {
        return 10 * exponent * 0.43429448190325182765;  // 1 / ln 10
    }
    double at_db(double d_km) const noexcept
    {
        return intercept_db + slope_per_ln() * std::log(d_km);
    }
};

struct SingleSlopeModel
{
    PowerLawLoss loss{140.7, 3.67};

    void validate() const;
};

struct CombinedLosNlosModel
{
    PowerLawLoss los{103.8, 2.09};
    PowerLawLoss nlos{145.4, 3.75};
    double d0_km = 0.156;
    double d1_km = 0.03;

    void validate() const;
};

using PathLossModel = std::variant<SingleSlopeModel, CombinedLosNlosModel>;

enum class LinkState
{
    los,
    nlos,
};

struct ChannelSpec
{
    double shadowing_std_db = 8.0;
    double penetration_loss_db = 20.0;

    void validate() const;
};

/// p_L(d) = 0.5 - min(0.5, 5 exp(-d0/d)) + min(0.5, 5 exp(-d/d1)).
double los_probability(double d_km, CombinedLosNlosModel const& model);

/// Draw LOS with probability los_probability(d).
LinkState
sample_link_state(double d_km, CombinedLosNlosModel const& model, Rng& rng);

/// Path loss in dB; \p state is ignored for the single-slope model and
/// distances below min_distance_km are clamped.
double path_loss_db(PathLossModel const& model, LinkState state, double d_km);

/// 10^{-(pl + shadow + penetration)/10}.
inline double
link_gain_linear(double pl_db, double shadow_db, double penetration_db) noexcept
{
    constexpr double neg_ln10_over_10 = -0.23025850929940456840;
    return std::exp(neg_ln10_over_10 * (pl_db + shadow_db + penetration_db));
}

/// Per-snapshot random draws for links, with separate state and shadowing
/// streams so that a combined model whose LOS probability is identically
/// zero reproduces the matching single-slope run exactly.
class LinkSampler
{
  public:
    LinkSampler(PathLossModel const& model,
                ChannelSpec const& channel,
                std::uint64_t state_seed,
                std::uint64_t shadow_seed);
    LinkSampler(LinkSampler const&) = delete;
    LinkSampler& operator=(LinkSampler const&) = delete;

    /// Draw state and shadowing for one link and return its linear gain.
    double draw_gain(double d_km);

  private:
    PathLossModel model_;
    ChannelSpec channel_;
    Rng state_rng_;
    Rng shadow_rng_;
    CombinedLosNlosModel const* combined_ = nullptr;
    PowerLawLoss single_;
    boost::random::normal_distribution<double> shadow_;
};

}  // namespace losnlos
