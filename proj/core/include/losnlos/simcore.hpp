#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "propagation.hpp"

namespace losnlos {

/// Thermal noise at the user receiver.
struct NoiseSpec
{
    double psd_dbm_hz = -174;
    double bandwidth_hz = 10e6;
    double noise_figure_db = 9;

    double noise_power_dbm() const noexcept;
    double noise_power_w() const noexcept;
    void validate() const;
};

/// Transmit power per BS, or the noise-free limit used for pure SIR.
class TxPower
{
  public:
    static TxPower watts(double w);
    static constexpr TxPower unbounded() noexcept { return TxPower{}; }

    bool is_unbounded() const noexcept { return unbounded_; }
    double watts() const noexcept { return watts_; }

  private:
    constexpr TxPower() noexcept = default;

    double watts_ = std::numeric_limits<double>::infinity();
    bool unbounded_ = true;
};

/// Everything needed to draw one snapshot apart from the seed.
struct Scenario
{
    AreaSpec area;
    Layout layout;
    PathLossModel model = CombinedLosNlosModel{};
    ChannelSpec channel;
    UserRule users;

    void validate() const;
};

/// Power-independent part of a snapshot: association and per-user gain sums.
struct SnapshotLinks
{
    Placement placement;
    //! BS-major matrix (n_bs x n_users), filled only on request
    std::vector<double> link_gains;
    std::vector<std::size_t> serving;
    std::vector<double> serving_gain;
    //! Sum of gains from every non-serving BS
    std::vector<double> interference_gain;
    std::vector<std::vector<std::size_t>> cell_members;

    std::size_t n_bs() const noexcept { return placement.bs_positions.size(); }
    std::size_t n_users() const noexcept { return serving.size(); }
    //! True when a single BS makes the SIR unbounded
    bool interference_free() const noexcept { return n_bs() == 1; }
};

struct NetworkSnapshot
{
    SnapshotLinks links;
    std::vector<double> sir_db;
    //! Empty in pure-SIR mode
    std::vector<double> sinr_db;
};

/// Sorted sample vector with an interpolating quantile.
class EmpiricalCdf
{
  public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    std::span<double const> samples() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return sorted_.size(); }

    /// Linear interpolation between order statistics at h = (n-1)q + 1.
    double quantile(double q) const;

  private:
    std::vector<double> sorted_;
};

double quantile(EmpiricalCdf const& cdf, double q);

/// Index of the strongest BS for each user; ties go to the lowest index.
std::vector<std::size_t> associate(std::span<double const> link_gains,
                                   std::size_t n_bs,
                                   std::size_t n_users);

/// Draw placement, link states and shadowing, then associate users.
SnapshotLinks
simulate_links(Scenario const& scenario, std::uint64_t seed, bool keep_link_gains = false);

double sir_db(SnapshotLinks const& links, std::size_t user) noexcept;
double sinr_db(SnapshotLinks const& links,
               std::size_t user,
               double ptx_w,
               double noise_power_w) noexcept;

/// Evaluate SIR (and SINR unless \p ptx is unbounded) for every user.
NetworkSnapshot evaluate(SnapshotLinks links, TxPower ptx, NoiseSpec const& noise);

NetworkSnapshot run_snapshot(Scenario const& scenario,
                             NoiseSpec const& noise,
                             TxPower ptx,
                             std::uint64_t seed,
                             bool keep_link_gains = false);

/// A set of snapshots drawn once and re-evaluated at any transmit power.
class SnapshotBatch
{
  public:
    SnapshotBatch() = default;
    explicit SnapshotBatch(std::vector<SnapshotLinks> snapshots);

    std::span<SnapshotLinks const> snapshots() const noexcept
    {
        return snapshots_;
    }
    std::size_t size() const noexcept { return snapshots_.size(); }
    std::size_t total_users() const noexcept { return total_users_; }

    /// Pooled per-user SIR over all snapshots.
    EmpiricalCdf const& sir_cdf() const noexcept { return sir_cdf_; }
    /// Pooled per-user SINR (dB) at \p ptx; equals sir_cdf when unbounded.
    EmpiricalCdf sinr_cdf(TxPower ptx, NoiseSpec const& noise) const;

  private:
    std::vector<SnapshotLinks> snapshots_;
    EmpiricalCdf sir_cdf_;
    std::size_t total_users_ = 0;
};

/// Simulate one snapshot per seed. Results are stored by seed position, so
/// the batch does not depend on \p workers.
SnapshotBatch simulate_batch(Scenario const& scenario,
                             std::span<std::uint64_t const> seeds,
                             unsigned workers = 1);

}  // namespace losnlos
