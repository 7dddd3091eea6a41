#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "config.hpp"

namespace losnlos {

/// One calibrated density point.
struct SweepRow
{
    double density_per_km2 = 0;
    double realized_density_per_km2 = 0;
    std::string layout;
    std::string model;
    double ptx_w = 0;
    double ptx_dbm = 0;
    double gap_db = 0;
    double ase_bps_hz_m2 = 0;
    double mean_cell_se = 0;
    double sir_p80_db = 0;
    double sinr_p80_db = 0;
    std::size_t n_snapshots = 0;
    std::uint64_t seed = 0;
    int iterations = 0;
    std::size_t users_per_snapshot = 0;
    int empty_redraws = 0;
    std::size_t interference_free_snapshots = 0;
};

/// Seeds of one batch at a density, in snapshot order.
std::vector<std::uint64_t> batch_seeds(RunConfig const& config,
                                       std::size_t density_index,
                                       BatchMode mode);

/// Calibrate and evaluate one density of the sweep.
SweepRow run_density(RunConfig const& config,
                     std::size_t density_index,
                     unsigned workers = 1);

/// Run every density in order. \p on_row sees each row as soon as it is
/// complete, so rows survive a later calibration failure.
std::vector<SweepRow>
run_sweep(RunConfig const& config,
          unsigned workers = 1,
          std::function<void(SweepRow const&)> const& on_row = {});

}  // namespace losnlos
