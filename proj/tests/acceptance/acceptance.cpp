// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Monte Carlo criteria run the reference configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "losnlos/analysis.hpp"
#include "losnlos/config.hpp"
#include "losnlos/energy_model.hpp"
#include "losnlos/metrics.hpp"
#include "losnlos/propagation.hpp"
#include "losnlos/result_files.hpp"
#include "losnlos/simcore.hpp"
#include "losnlos/sweep.hpp"
#include "oracles.hpp"

using namespace losnlos;

namespace {

unsigned workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, std::string const& title, std::function<Outcome()> const& check)
{
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
        o = check();
    }
    catch (std::exception const& e)
    {
        o = {false, std::string("exception: ") + e.what()};
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass)
        ++failures;
    std::printf("criterion %d: %s  %s  [%s] (%.1f s)\n",
                id,
                o.pass ? "PASS" : "FAIL",
                title.c_str(),
                o.detail.c_str(),
                secs);
    std::fflush(stdout);
}

std::string fmt(double v, int prec = 4)
{
    std::ostringstream s;
    s.precision(prec);
    s << v;
    return s.str();
}

bool within(double v, double target, double tol)
{
    return std::abs(v - target) <= tol;
}

// Simulated sweeps, shared between criteria.
struct SweepFits
{
    std::vector<ScalingLaws> laws;
    std::string error;
};

SweepFits run_and_fit(RunConfig const& config, std::vector<double> const& bp)
{
    SweepFits out;
    try
    {
        auto rows = run_sweep(config, workers());
        auto fits = fit_sweep(rows, Breakpoints(bp));
        out.laws = scaling_laws(fits);
    }
    catch (std::exception const& e)
    {
        out.error = e.what();
    }
    return out;
}

RunConfig single_slope_grid()
{
    RunConfig c;
    c.combined_model = false;
    return c;
}

RunConfig combined(LayoutKind layout)
{
    RunConfig c;
    c.layout = layout;
    return c;
}

std::string list(std::vector<ScalingLaws> const& laws, bool alpha)
{
    std::string s = "(";
    for (std::size_t i = 0; i < laws.size(); ++i)
    {
        s += (i ? ", " : "") + fmt(alpha ? laws[i].alpha() : laws[i].delta(), 3);
    }
    return s + ")";
}

// Published square-grid constants per segment: eta0, alpha, P_T, delta.
struct Segment
{
    double eta0, alpha, p_t, delta;
};
constexpr Segment table_grid[3] = {{3.98e1, 1.25, 4.516e-8, -1.90},
                                   {1.64e-2, 0.45, 7.210e-17, -4.01},
                                   {1.30e-1, 0.72, 5.949e-9, -1.70}};
constexpr double k_rf = 10;

}  // namespace

int main()
{
    std::printf("losnlos acceptance suite, %u worker(s)\n", workers());
    std::fflush(stdout);

    SweepFits single;
    SweepFits grid;
    SweepFits sppp;
    std::vector<double> const full_range{10, 8000};
    std::vector<double> const segments{10, 60, 400, 8000};

    report(1, "single-slope ASE exponent in [0.95, 1.05]", [&] {
        single = run_and_fit(single_slope_grid(), full_range);
        if (!single.error.empty())
            return Outcome{false, single.error};
        double a = single.laws[0].alpha();
        return Outcome{a >= 0.95 && a <= 1.05, "alpha=" + fmt(a)};
    });

    report(2, "single-slope power exponent in [-2.0, -1.65]", [&] {
        if (!single.error.empty())
            return Outcome{false, single.error};
        double d = single.laws[0].delta();
        return Outcome{d >= -2.0 && d <= -1.65, "delta=" + fmt(d)};
    });

    report(3, "combined-model ASE exponents, grid and SPPP", [&] {
        grid = run_and_fit(combined(LayoutKind::square_grid), segments);
        sppp = run_and_fit(combined(LayoutKind::sppp), segments);
        if (!grid.error.empty())
            return Outcome{false, "grid: " + grid.error};
        if (!sppp.error.empty())
            return Outcome{false, "sppp: " + sppp.error};
        double const grid_ref[3] = {1.25, 0.45, 0.72};
        double const sppp_ref[3] = {1.19, 0.62, 0.72};
        bool ok = grid.laws.size() == 3 && sppp.laws.size() == 3;
        for (std::size_t s = 0; ok && s < 3; ++s)
        {
            ok = within(grid.laws[s].alpha(), grid_ref[s], 0.15)
                 && within(sppp.laws[s].alpha(), sppp_ref[s], 0.15);
        }
        ok = ok && grid.laws[0].alpha() > 1.05 && grid.laws[1].alpha() < 0.8;
        return Outcome{ok,
                       "grid alpha=" + list(grid.laws, true) + " sppp alpha="
                           + list(sppp.laws, true)};
    });

    report(4, "combined-model power exponents, grid", [&] {
        if (!grid.error.empty())
            return Outcome{false, grid.error};
        bool ok = grid.laws.size() == 3;
        for (std::size_t s = 0; ok && s < 3; ++s)
            ok = within(grid.laws[s].delta(), table_grid[s].delta, 0.5);
        if (ok)
        {
            double d1 = std::abs(grid.laws[0].delta());
            double d2 = std::abs(grid.laws[1].delta());
            double d3 = std::abs(grid.laws[2].delta());
            ok = d2 > d1 && d2 > d3;
        }
        return Outcome{ok, "delta=" + list(grid.laws, false)};
    });

    report(5, "energy-efficiency regimes from tabulated constants", [&] {
        bool ok = true;
        std::string detail;
        auto r1 = classify_regime(table_grid[0].alpha, table_grid[0].delta, 2,
                                  k_rf * table_grid[0].p_t);
        ok = ok && r1.kind == RegimeKind::monotone_increasing;
        detail += "D1 " + std::string(to_string(r1.kind));
        for (double p0 : {2.0, 10.0})
        {
            auto r2 = classify_regime(table_grid[1].alpha, table_grid[1].delta, p0,
                                      k_rf * table_grid[1].p_t);
            ok = ok && r2.kind == RegimeKind::interior_maximum;
            double x = r2.x_opt_per_km2().value_or(-1);
            ok = ok && x >= 60 && x < 400;
            detail += "; D2 p0=" + fmt(p0) + " x0=" + fmt(x);
            auto r3 = classify_regime(table_grid[2].alpha, table_grid[2].delta, p0,
                                      k_rf * table_grid[2].p_t);
            ok = ok && r3.kind == RegimeKind::interior_maximum;
            double x3 = r3.x_opt_per_km2().value_or(1e9);
            ok = ok && x3 < 400;
            detail += "; D3 p0=" + fmt(p0) + " x0=" + fmt(x3);
        }
        return Outcome{ok, detail};
    });

    report(6, "closed-form optimum vs golden-section search, 100 tuples", [&] {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> u01(0, 1);
        int done = 0;
        double worst = 0;
        while (done < 100)
        {
            double alpha = 0.05 + 0.9 * u01(rng);
            double delta = -5 + 5 * u01(rng);
            if (!(alpha > 1 + delta + 0.02) || delta > -0.05)
                continue;
            double p0 = std::pow(10.0, -1 + 2.5 * u01(rng));
            double p_c = std::pow(10.0, -20 + 18 * u01(rng));
            auto r = classify_regime(alpha, delta, p0, p_c);
            if (r.kind != RegimeKind::interior_maximum)
                return Outcome{false, "tuple not classified as interior maximum"};
            double x0 = *r.x_opt_per_m2;
            if (!(x0 > 1e-9 && x0 < 1e-1))
                continue;  // keep optima inside the search bracket
            double xg = oracle::ee_argmax(alpha, delta, p0, p_c, 1e-12, 1e2);
            worst = std::max(worst, std::abs(x0 / xg - 1));
            ++done;
        }
        return Outcome{worst <= 1e-6, "max relative error=" + fmt(worst, 3)};
    });

    report(7, "D2 optimum within a factor of 2 of 280 and 180 per km^2", [&] {
        auto const& d2 = table_grid[1];
        double x2 = *classify_regime(d2.alpha, d2.delta, 2, k_rf * d2.p_t).x_opt_per_km2();
        double x10 = *classify_regime(d2.alpha, d2.delta, 10, k_rf * d2.p_t).x_opt_per_km2();
        bool ok = x2 >= 140 && x2 <= 560 && x10 >= 90 && x10 <= 360 && x10 < x2;
        return Outcome{ok, "x0(p0=2)=" + fmt(x2) + " x0(p0=10)=" + fmt(x10)};
    });

    report(8, "single-slope efficiency saturates at R0/P0", [&] {
        if (!single.error.empty())
            return Outcome{false, single.error};
        // Linear ASE with the simulated power law.
        ScalingLaws laws = single.laws[0];
        laws.ase_fit.b = 1.0;
        EnergyParams params;
        params.k_rf = k_rf;
        double const x = 1e6 * laws.ase_fit.x_lo;
        double const ee = energy_efficiency(x, laws, params);
        double const limit = laws.r1(params) / params.p0_w;
        double const rel = std::abs(ee / limit - 1);
        return Outcome{rel <= 1e-3, "relative gap=" + fmt(rel, 3)};
    });

    report(9, "property suites", [&] {
        std::vector<std::string> bad;
        CombinedLosNlosModel m;
        if (los_probability(std::numeric_limits<double>::denorm_min(), m) != 1.0
            || los_probability(1e-300, m) != 1.0)
            bad.push_back("p_L(0+) != 1");
        if (los_probability(1e300, m) != 0.0 || los_probability(1e6, m) != 0.0)
            bad.push_back("p_L(inf) != 0");
        if (capacity(1e6) != 5.55 || capacity(1e300) != 5.55)
            bad.push_back("capacity cap");
        if (NoiseSpec{}.noise_power_dbm() != -95.0)
            bad.push_back("noise power " + fmt(NoiseSpec{}.noise_power_dbm(), 17));

        for (auto kind : {LayoutKind::square_grid, LayoutKind::sppp})
        {
            RunConfig c = combined(kind);
            for (double x : {10.0, 400.0, 3200.0})
            {
                auto snap = run_snapshot(c.scenario(x), c.noise, TxPower::watts(1e-3), 77);
                for (std::size_t u = 0; u < snap.sir_db.size(); ++u)
                {
                    if (!(snap.sinr_db[u] <= snap.sir_db[u]))
                    {
                        bad.push_back("SINR > SIR");
                        break;
                    }
                }
            }
        }

        RunConfig c = combined(LayoutKind::sppp);
        c.densities_per_km2 = {20, 200, 2000};
        c.n_snapshots = 4;
        auto text = [&](unsigned w) {
            std::ostringstream out;
            auto rows = run_sweep(c, w);
            write_sweep(out, FileHeader{"sweep", LOSNLOS_VERSION, config_hash(c), c.seed}, rows);
            return out.str();
        };
        std::string const ref = text(1);
        for (unsigned w : {2u, 4u, 7u})
        {
            if (text(w) != ref)
                bad.push_back("output differs with " + std::to_string(w) + " workers");
        }
        std::string detail = bad.empty() ? "all exact" : bad.front();
        for (std::size_t i = 1; i < bad.size(); ++i)
            detail += "; " + bad[i];
        return Outcome{bad.empty(), detail};
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
