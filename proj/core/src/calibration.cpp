#include "losnlos/calibration.hpp"

#include <cmath>
#include <sstream>

#include "losnlos/errors.hpp"

namespace losnlos {

void CalibrationCriterion::validate() const
{
    if (!(y_quantile > 0 && y_quantile < 1))
        throw ConfigError("calibration quantile must lie in (0, 1)");
    if (!(delta_db0 > 0))
        throw ConfigError("calibration gap threshold must be positive");
    if (!(search_lo_w > 0) || !(search_lo_w < search_hi_w))
        throw ConfigError("calibration bracket needs 0 < lo < hi");
    if (!(bracket_tol_db > 0))
        throw ConfigError("calibration bracket tolerance must be positive");
}

double CalibrationResult::ptx_dbm() const noexcept
{
    return 10 * std::log10(ptx_w) + 30;
}

double delta_db(SnapshotBatch const& batch,
                NoiseSpec const& noise,
                CalibrationCriterion const& criterion,
                double ptx_w)
{
    double const q = criterion.y_quantile;
    double const sir_q = batch.sir_cdf().quantile(q);
    double const sinr_q
        = batch.sinr_cdf(TxPower::watts(ptx_w), noise).quantile(q);
    if (sir_q == sinr_q)
        return 0;
    return sir_q - sinr_q;
}

double delta_db(Scenario const& scenario,
                NoiseSpec const& noise,
                CalibrationCriterion const& criterion,
                double ptx_w,
                std::span<std::uint64_t const> seeds,
                unsigned workers)
{
    return delta_db(
        simulate_batch(scenario, seeds, workers), noise, criterion, ptx_w);
}

CalibrationResult calibrate_ptx(SnapshotBatch const& batch,
                                NoiseSpec const& noise,
                                CalibrationCriterion const& criterion)
{
    criterion.validate();
    auto gap_at = [&](double log_p) {
        return delta_db(batch, noise, criterion, std::pow(10.0, log_p));
    };

    double lo = std::log10(criterion.search_lo_w);
    double hi = std::log10(criterion.search_hi_w);
    CalibrationResult result;

    double hi_gap = gap_at(hi);
    ++result.iterations;
    if (!(hi_gap <= criterion.delta_db0))
    {
        std::ostringstream msg;
        msg << "criterion not met at the upper power bound "
            << criterion.search_hi_w << " W (gap " << hi_gap << " dB > "
            << criterion.delta_db0 << " dB)";
        throw CalibrationError(msg.str(), hi_gap);
    }

    double lo_gap = gap_at(lo);
    ++result.iterations;
    if (lo_gap <= criterion.delta_db0)
    {
        result.ptx_w = criterion.search_lo_w;
        result.gap_db = lo_gap;
        return result;
    }

    // Invariant: lo infeasible, hi feasible.
    while (10 * (hi - lo) > criterion.bracket_tol_db)
    {
        double const mid = 0.5 * (lo + hi);
        double const gap = gap_at(mid);
        ++result.iterations;
        if (gap <= criterion.delta_db0)
        {
            hi = mid;
            hi_gap = gap;
        }
        else
        {
            lo = mid;
        }
    }
    result.ptx_w = std::pow(10.0, hi);
    result.gap_db = hi_gap;
    return result;
}

CalibrationResult calibrate_ptx(Scenario const& scenario,
                                NoiseSpec const& noise,
                                CalibrationCriterion const& criterion,
                                std::span<std::uint64_t const> seeds,
                                unsigned workers)
{
    return calibrate_ptx(
        simulate_batch(scenario, seeds, workers), noise, criterion);
}

}  // namespace losnlos
