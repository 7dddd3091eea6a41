#include "losnlos/metrics.hpp"

#include <cmath>
#include <string>

#include "losnlos/errors.hpp"

namespace losnlos {

void CapacityMap::validate() const
{
    if (!(bw_eff > 0) || !(sinr_eff > 0) || !(se_cap_bps_hz > 0))
        throw ConfigError("capacity map parameters must be positive");
}

double capacity(double gamma_linear, CapacityMap const& map)
{
    if (!(gamma_linear >= 0))
    {
        throw DomainError("capacity needs a non-negative SINR, got "
                          + std::to_string(gamma_linear));
    }
    double const se = map.bw_eff * std::log2(1 + gamma_linear / map.sinr_eff);
    return std::min(se, map.se_cap_bps_hz);
}

AseAccumulator::AseAccumulator(CapacityMap map) : map_(map)
{
    map_.validate();
}

void AseAccumulator::add_snapshot(
    std::span<std::vector<std::size_t> const> cell_members,
    std::span<double const> user_sinr_db)
{
    for (auto const& members : cell_members)
    {
        if (members.empty())
            continue;
        double sum = 0;
        for (std::size_t u : members)
            sum += capacity(std::pow(10.0, user_sinr_db[u] / 10), map_);
        sum_cell_se_ += sum / static_cast<double>(members.size());
        ++n_cells_;
    }
    ++n_snapshots_;
}

AseRecord AseAccumulator::finish(double density_per_km2) const
{
    if (n_cells_ == 0)
        throw InsufficientDataError("ASE needs at least one non-empty cell");
    AseRecord rec;
    rec.density_per_km2 = density_per_km2;
    rec.mean_cell_se_bps_hz = sum_cell_se_ / static_cast<double>(n_cells_);
    rec.ase_bps_hz_m2 = density_per_km2 * 1e-6 * rec.mean_cell_se_bps_hz;
    rec.n_nonempty_cells = n_cells_;
    rec.n_snapshots = n_snapshots_;
    return rec;
}

AseRecord area_spectral_efficiency(std::span<NetworkSnapshot const> snapshots,
                                   double density_per_km2,
                                   CapacityMap const& map)
{
    AseAccumulator acc(map);
    for (auto const& s : snapshots)
    {
        auto const& sinr = s.sinr_db.empty() ? s.sir_db : s.sinr_db;
        acc.add_snapshot(s.links.cell_members, sinr);
    }
    return acc.finish(density_per_km2);
}

AseRecord area_spectral_efficiency(SnapshotBatch const& batch,
                                   TxPower ptx,
                                   NoiseSpec const& noise,
                                   double density_per_km2,
                                   CapacityMap const& map)
{
    AseAccumulator acc(map);
    double const n0 = noise.noise_power_w();
    std::vector<double> sinr;
    for (auto const& s : batch.snapshots())
    {
        sinr.resize(s.n_users());
        for (std::size_t u = 0; u < s.n_users(); ++u)
        {
            sinr[u] = ptx.is_unbounded() ? sir_db(s, u)
                                         : sinr_db(s, u, ptx.watts(), n0);
        }
        acc.add_snapshot(s.cell_members, sinr);
    }
    return acc.finish(density_per_km2);
}

}  // namespace losnlos
