#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simcore.hpp"

namespace losnlos {

/// Truncated Shannon mapping min(bw_eff log2(1 + g/sinr_eff), se_cap).
struct CapacityMap
{
    double bw_eff = 0.75;
    double sinr_eff = 1.33;
    double se_cap_bps_hz = 5.55;

    void validate() const;
};

double capacity(double gamma_linear, CapacityMap const& map = {});

struct AseRecord
{
    double density_per_km2 = 0;
    double ase_bps_hz_m2 = 0;
    double mean_cell_se_bps_hz = 0;
    std::size_t n_nonempty_cells = 0;
    std::size_t n_snapshots = 0;
};

/// Running average of per-cell mean spectral efficiency.
///
/// Cells without users are skipped; the final average runs over every
/// non-empty cell of every snapshot in insertion order.
class AseAccumulator
{
  public:
    explicit AseAccumulator(CapacityMap map = {});

    /// \p user_sinr_db is indexed by user; cells list user indices.
    void add_snapshot(std::span<std::vector<std::size_t> const> cell_members,
                      std::span<double const> user_sinr_db);

    AseRecord finish(double density_per_km2) const;

  private:
    CapacityMap map_;
    double sum_cell_se_ = 0;
    std::size_t n_cells_ = 0;
    std::size_t n_snapshots_ = 0;
};

/// ASE from evaluated snapshots, using SINR where present and SIR otherwise.
AseRecord area_spectral_efficiency(std::span<NetworkSnapshot const> snapshots,
                                   double density_per_km2,
                                   CapacityMap const& map = {});

/// ASE of a batch evaluated at \p ptx.
AseRecord area_spectral_efficiency(SnapshotBatch const& batch,
                                   TxPower ptx,
                                   NoiseSpec const& noise,
                                   double density_per_km2,
                                   CapacityMap const& map = {});

}  // namespace losnlos
