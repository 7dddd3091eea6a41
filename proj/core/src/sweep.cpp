#include "losnlos/sweep.hpp"

#include <sstream>

#include "losnlos/errors.hpp"
#include "losnlos/rng.hpp"

namespace losnlos {

std::vector<std::uint64_t> batch_seeds(RunConfig const& config,
                                       std::size_t density_index,
                                       BatchMode mode)
{
    std::vector<std::uint64_t> seeds(config.n_snapshots);
    for (std::size_t s = 0; s < seeds.size(); ++s)
        seeds[s] = snapshot_seed(config.seed, density_index, s, mode);
    return seeds;
}

SweepRow run_density(RunConfig const& config,
                     std::size_t density_index,
                     unsigned workers)
{
    double const density = config.densities_per_km2.at(density_index);
    Scenario const scenario = config.scenario(density);

    auto const calib_seeds
        = batch_seeds(config, density_index, BatchMode::sinr_calibration);
    SnapshotBatch const calib_batch
        = simulate_batch(scenario, calib_seeds, workers);

    CalibrationResult calib;
    try
    {
        calib = calibrate_ptx(calib_batch, config.noise, config.criterion);
    }
    catch (CalibrationError const& e)
    {
        std::ostringstream msg;
        msg << "calibration failed at density " << density
            << " per km^2 (index " << density_index << "): " << e.what();
        throw CalibrationError(msg.str(), e.achieved_gap_db());
    }

    SnapshotBatch independent;
    if (config.final_batch == FinalBatch::independent)
    {
        auto const seeds
            = batch_seeds(config, density_index, BatchMode::sinr_final);
        independent = simulate_batch(scenario, seeds, workers);
    }
    SnapshotBatch const& final_batch
        = config.final_batch == FinalBatch::independent ? independent
                                                        : calib_batch;

    SweepRow row;
    row.density_per_km2 = density;
    row.layout = to_string(config.layout);
    row.model = model_name(config);
    row.n_snapshots = config.n_snapshots;
    row.seed = config.seed;
    row.iterations = calib.iterations;
    row.ptx_w = calib.ptx_w;
    row.ptx_dbm = calib.ptx_dbm();

    double bs_total = 0;
    for (auto const& s : final_batch.snapshots())
    {
        bs_total += static_cast<double>(s.n_bs());
        row.empty_redraws += s.placement.empty_redraws;
        row.users_per_snapshot = std::max(row.users_per_snapshot, s.n_users());
        if (s.interference_free())
            ++row.interference_free_snapshots;
    }
    row.realized_density_per_km2
        = bs_total / static_cast<double>(final_batch.size())
          / config.area.area_km2();

    TxPower const ptx = TxPower::watts(calib.ptx_w);
    double const q = config.criterion.y_quantile;
    row.sir_p80_db = final_batch.sir_cdf().quantile(q);
    row.sinr_p80_db = final_batch.sinr_cdf(ptx, config.noise).quantile(q);
    row.gap_db = row.sir_p80_db == row.sinr_p80_db
                     ? 0.0
                     : row.sir_p80_db - row.sinr_p80_db;

    AseRecord const ase = area_spectral_efficiency(final_batch,
                                                   ptx,
                                                   config.noise,
                                                   row.realized_density_per_km2,
                                                   config.capacity);
    row.ase_bps_hz_m2 = ase.ase_bps_hz_m2;
    row.mean_cell_se = ase.mean_cell_se_bps_hz;
    return row;
}

std::vector<SweepRow> run_sweep(RunConfig const& config,
                                unsigned workers,
                                std::function<void(SweepRow const&)> const& on_row)
{
    config.validate();
    std::vector<SweepRow> rows;
    rows.reserve(config.densities_per_km2.size());
    for (std::size_t i = 0; i < config.densities_per_km2.size(); ++i)
    {
        rows.push_back(run_density(config, i, workers));
        if (on_row)
            on_row(rows.back());
    }
    return rows;
}

}  // namespace losnlos
