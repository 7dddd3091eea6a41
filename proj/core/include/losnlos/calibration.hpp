#pragma once

#include <cstdint>
#include <span>

#include "simcore.hpp"

namespace losnlos {

/// Interference-limited criterion: SIR and SINR quantiles at y_quantile may
/// differ by at most delta_db0.
struct CalibrationCriterion
{
    double y_quantile = 0.80;
    double delta_db0 = 0.2;
    double search_lo_w = 1e-10;
    double search_hi_w = 1e4;
    double bracket_tol_db = 0.1;

    void validate() const;
};

struct CalibrationResult
{
    double ptx_w = 0;
    double gap_db = 0;
    int iterations = 0;

    double ptx_dbm() const noexcept;
};

/// SIR quantile minus SINR quantile at \p ptx_w over a fixed batch.
double delta_db(SnapshotBatch const& batch,
                NoiseSpec const& noise,
                CalibrationCriterion const& criterion,
                double ptx_w);

/// Draws the batch from \p seeds, then evaluates the gap.
double delta_db(Scenario const& scenario,
                NoiseSpec const& noise,
                CalibrationCriterion const& criterion,
                double ptx_w,
                std::span<std::uint64_t const> seeds,
                unsigned workers = 1);

/// Smallest power (to within bracket_tol_db, rounded up) meeting the
/// criterion. Throws CalibrationError if the upper bracket end is infeasible.
CalibrationResult calibrate_ptx(SnapshotBatch const& batch,
                                NoiseSpec const& noise,
                                CalibrationCriterion const& criterion);

CalibrationResult calibrate_ptx(Scenario const& scenario,
                                NoiseSpec const& noise,
                                CalibrationCriterion const& criterion,
                                std::span<std::uint64_t const> seeds,
                                unsigned workers = 1);

}  // namespace losnlos
