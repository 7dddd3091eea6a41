#include "losnlos/simcore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "losnlos/errors.hpp"
#include "losnlos/rng.hpp"

namespace losnlos {
namespace {

double to_db(double ratio) noexcept
{
    return 10 * std::log10(ratio);
}

}  // namespace

//---------------------------------------------------------------------------//
// NoiseSpec / TxPower / Scenario
//---------------------------------------------------------------------------//

double NoiseSpec::noise_power_dbm() const noexcept
{
    return psd_dbm_hz + 10 * std::log10(bandwidth_hz) + noise_figure_db;
}

double NoiseSpec::noise_power_w() const noexcept
{
    return std::pow(10.0, (noise_power_dbm() - 30) / 10);
}

void NoiseSpec::validate() const
{
    if (!(bandwidth_hz > 0))
        throw ConfigError("bandwidth must be positive");
    if (!std::isfinite(psd_dbm_hz) || !std::isfinite(noise_figure_db))
        throw ConfigError("noise PSD and noise figure must be finite");
}

TxPower TxPower::watts(double w)
{
    if (!(w > 0) || !std::isfinite(w))
    {
        throw DomainError("transmit power must be positive and finite, got "
                          + std::to_string(w));
    }
    TxPower p;
    p.watts_ = w;
    p.unbounded_ = false;
    return p;
}

void Scenario::validate() const
{
    area.validate();
    layout.validate();
    channel.validate();
    users.validate();
    std::visit([](auto const& m) { m.validate(); }, model);
}

//---------------------------------------------------------------------------//
// EmpiricalCdf
//---------------------------------------------------------------------------//

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples))
{
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::quantile(double q) const
{
    if (!(q > 0 && q < 1))
        throw DomainError("quantile fraction must lie in (0, 1)");
    std::size_t const n = sorted_.size();
    if (n < 2)
    {
        throw InsufficientDataError("quantile needs at least 2 samples, got "
                                    + std::to_string(n));
    }
    double const h = static_cast<double>(n - 1) * q + 1;
    auto const lo = static_cast<std::size_t>(std::floor(h));  // 1-based
    double const frac = h - static_cast<double>(lo);
    double const x_lo = sorted_[lo - 1];
    if (lo >= n || frac == 0)
        return x_lo;
    double const x_hi = sorted_[lo];
    if (x_hi == x_lo)
        return x_lo;
    return x_lo + frac * (x_hi - x_lo);
}

double quantile(EmpiricalCdf const& cdf, double q)
{
    return cdf.quantile(q);
}

//---------------------------------------------------------------------------//
// Snapshot simulation
//---------------------------------------------------------------------------//

std::vector<std::size_t> associate(std::span<double const> link_gains,
                                   std::size_t n_bs,
                                   std::size_t n_users)
{
    if (link_gains.size() != n_bs * n_users || n_bs == 0)
        throw DomainError("link gain matrix has the wrong shape");

    std::vector<std::size_t> serving(n_users, 0);
    for (std::size_t u = 0; u < n_users; ++u)
    {
        double best = link_gains[u];
        for (std::size_t b = 1; b < n_bs; ++b)
        {
            double g = link_gains[b * n_users + u];
            if (g > best)
            {
                best = g;
                serving[u] = b;
            }
        }
    }
    return serving;
}

SnapshotLinks
simulate_links(Scenario const& scenario, std::uint64_t seed, bool keep_link_gains)
{
    scenario.validate();

    SnapshotLinks result;
    result.placement
        = place(scenario.layout, scenario.area, scenario.users, seed);

    auto const& bs = result.placement.bs_positions;
    auto const& users = result.placement.user_positions;
    std::size_t const n_bs = bs.size();
    std::size_t const n_users = users.size();

    LinkSampler sampler(scenario.model,
                        scenario.channel,
                        substream_seed(seed, SubStream::link_states),
                        substream_seed(seed, SubStream::shadowing));

    if (keep_link_gains)
        result.link_gains.assign(n_bs * n_users, 0.0);
    result.serving.resize(n_users);
    result.serving_gain.resize(n_users);
    result.interference_gain.resize(n_users);
    result.cell_members.resize(n_bs);

    std::vector<double> gains(n_bs);
    for (std::size_t u = 0; u < n_users; ++u)
    {
        std::size_t best = 0;
        for (std::size_t b = 0; b < n_bs; ++b)
        {
            gains[b] = sampler.draw_gain(
                distance_km(bs[b], users[u], scenario.area));
            if (gains[b] > gains[best])
                best = b;
        }
        double interference = 0;
        for (std::size_t b = 0; b < n_bs; ++b)
        {
            if (b != best)
                interference += gains[b];
        }
        if (keep_link_gains)
        {
            for (std::size_t b = 0; b < n_bs; ++b)
                result.link_gains[b * n_users + u] = gains[b];
        }
        result.serving[u] = best;
        result.serving_gain[u] = gains[best];
        result.interference_gain[u] = interference;
        result.cell_members[best].push_back(u);
    }
    return result;
}

double sir_db(SnapshotLinks const& links, std::size_t user) noexcept
{
    return to_db(links.serving_gain[user] / links.interference_gain[user]);
}

double sinr_db(SnapshotLinks const& links,
               std::size_t user,
               double ptx_w,
               double noise_power_w) noexcept
{
    if (noise_power_w == 0)
        return sir_db(links, user);
    double const rx = ptx_w * links.serving_gain[user];
    return to_db(rx / (ptx_w * links.interference_gain[user] + noise_power_w));
}

NetworkSnapshot evaluate(SnapshotLinks links, TxPower ptx, NoiseSpec const& noise)
{
    NetworkSnapshot snap;
    std::size_t const n = links.n_users();
    snap.sir_db.resize(n);
    for (std::size_t u = 0; u < n; ++u)
        snap.sir_db[u] = sir_db(links, u);
    if (!ptx.is_unbounded())
    {
        double const n0 = noise.noise_power_w();
        snap.sinr_db.resize(n);
        for (std::size_t u = 0; u < n; ++u)
            snap.sinr_db[u] = sinr_db(links, u, ptx.watts(), n0);
    }
    snap.links = std::move(links);
    return snap;
}

NetworkSnapshot run_snapshot(Scenario const& scenario,
                             NoiseSpec const& noise,
                             TxPower ptx,
                             std::uint64_t seed,
                             bool keep_link_gains)
{
    return evaluate(simulate_links(scenario, seed, keep_link_gains), ptx, noise);
}

//---------------------------------------------------------------------------//
// SnapshotBatch
//---------------------------------------------------------------------------//

SnapshotBatch::SnapshotBatch(std::vector<SnapshotLinks> snapshots)
    : snapshots_(std::move(snapshots))
{
    std::vector<double> pooled;
    for (auto const& s : snapshots_)
        total_users_ += s.n_users();
    pooled.reserve(total_users_);
    for (auto const& s : snapshots_)
    {
        for (std::size_t u = 0; u < s.n_users(); ++u)
            pooled.push_back(sir_db(s, u));
    }
    sir_cdf_ = EmpiricalCdf(std::move(pooled));
}

EmpiricalCdf SnapshotBatch::sinr_cdf(TxPower ptx, NoiseSpec const& noise) const
{
    if (ptx.is_unbounded())
        return sir_cdf_;
    double const n0 = noise.noise_power_w();
    std::vector<double> pooled;
    pooled.reserve(total_users_);
    for (auto const& s : snapshots_)
    {
        for (std::size_t u = 0; u < s.n_users(); ++u)
            pooled.push_back(sinr_db(s, u, ptx.watts(), n0));
    }
    return EmpiricalCdf(std::move(pooled));
}

SnapshotBatch simulate_batch(Scenario const& scenario,
                             std::span<std::uint64_t const> seeds,
                             unsigned workers)
{
    std::vector<SnapshotLinks> results(seeds.size());
    unsigned const n_threads = std::max(
        1u, std::min<unsigned>(workers, static_cast<unsigned>(seeds.size())));

    if (n_threads == 1)
    {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            results[i] = simulate_links(scenario, seeds[i]);
        return SnapshotBatch(std::move(results));
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++)
        {
            try
            {
                results[i] = simulate_links(scenario, seeds[i]);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return SnapshotBatch(std::move(results));
}

}  // namespace losnlos
