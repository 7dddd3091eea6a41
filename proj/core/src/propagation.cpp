#include "losnlos/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "losnlos/errors.hpp"

namespace losnlos {
namespace {

void validate_loss(PowerLawLoss const& loss, char const* name)
{
    if (!std::isfinite(loss.intercept_db) || !(loss.exponent > 0))
    {
        throw ConfigError(std::string(name)
                          + ": path-loss exponent must be positive");
    }
}

// min(0.5, 5 exp(-t)); the exponential is skipped well inside the region
// where the clamp is active (t < ln 10).
inline double clamped_term(double t) noexcept
{
    constexpr double clamp_edge = 2.302585092994045684 - 1e-6;
    if (t < clamp_edge)
        return 0.5;
    return std::min(0.5, 5 * std::exp(-t));
}

}  // namespace

void SingleSlopeModel::validate() const
{
    validate_loss(loss, "single-slope model");
}

void CombinedLosNlosModel::validate() const
{
    validate_loss(los, "LOS branch");
    validate_loss(nlos, "NLOS branch");
    if (!(d0_km > 0) || !(d1_km > 0))
        throw ConfigError("LOS probability distances d0, d1 must be positive");
}

void ChannelSpec::validate() const
{
    if (!(shadowing_std_db >= 0))
        throw ConfigError("shadowing std must be non-negative");
    if (!(penetration_loss_db >= 0))
        throw ConfigError("penetration loss must be non-negative");
}

inline double
los_probability_unchecked(double d_km, CombinedLosNlosModel const& model) noexcept
{
    double p = 0.5 - clamped_term(model.d0_km / d_km)
               + clamped_term(d_km / model.d1_km);
    return std::clamp(p, 0.0, 1.0);
}

[[noreturn]] void throw_bad_distance(double d_km)
{
    throw DomainError("LOS probability needs a positive distance, got "
                      + std::to_string(d_km));
}

double los_probability(double d_km, CombinedLosNlosModel const& model)
{
    if (!(d_km > 0))
        throw_bad_distance(d_km);
    return los_probability_unchecked(d_km, model);
}

LinkState
sample_link_state(double d_km, CombinedLosNlosModel const& model, Rng& rng)
{
    double const p = los_probability(d_km, model);
    return unit_uniform(rng) < p ? LinkState::los : LinkState::nlos;
}

double path_loss_db(PathLossModel const& model, LinkState state, double d_km)
{
    d_km = std::max(d_km, min_distance_km);
    if (auto const* sl = std::get_if<SingleSlopeModel>(&model))
        return sl->loss.at_db(d_km);
    auto const& cm = std::get<CombinedLosNlosModel>(model);
    return (state == LinkState::los ? cm.los : cm.nlos).at_db(d_km);
}

LinkSampler::LinkSampler(PathLossModel const& model,
                         ChannelSpec const& channel,
                         std::uint64_t state_seed,
                         std::uint64_t shadow_seed)
    : model_(model)
    , channel_(channel)
    , state_rng_(state_seed)
    , shadow_rng_(shadow_seed)
    , shadow_(0.0, channel.shadowing_std_db > 0 ? channel.shadowing_std_db : 1.0)
{
    combined_ = std::get_if<CombinedLosNlosModel>(&model_);
    if (auto const* sl = std::get_if<SingleSlopeModel>(&model_))
        single_ = sl->loss;
}

double LinkSampler::draw_gain(double d_km)
{
    // Same draws and arithmetic as sample_link_state + path_loss_db, inlined.
    d_km = std::max(d_km, min_distance_km);
    double const ln_d = std::log(d_km);
    double pl_db;
    if (combined_)
    {
        bool const los = unit_uniform(state_rng_)
                         < los_probability_unchecked(d_km, *combined_);
        auto const& branch = los ? combined_->los : combined_->nlos;
        pl_db = branch.intercept_db + branch.slope_per_ln() * ln_d;
    }
    else
    {
        pl_db = single_.intercept_db + single_.slope_per_ln() * ln_d;
    }
    double const shadow
        = channel_.shadowing_std_db > 0 ? shadow_(shadow_rng_) : 0.0;
    return link_gain_linear(pl_db, shadow, channel_.penetration_loss_db);
}

}  // namespace losnlos
