// Command-line driver: sweep -> fit -> energy, plus a LOS-probability table.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "losnlos/analysis.hpp"
#include "losnlos/config.hpp"
#include "losnlos/errors.hpp"
#include "losnlos/propagation.hpp"
#include "losnlos/result_files.hpp"
#include "losnlos/sweep.hpp"

namespace fs = std::filesystem;
using namespace losnlos;

namespace {

constexpr char const* out_dir_env = "LOSNLOS_OUT_DIR";

/// Resolve an output file: explicit path wins, else the env directory,
/// else the fallback directory.
fs::path resolve_output(std::string const& explicit_path,
                        fs::path const& fallback_dir,
                        char const* default_name)
{
    if (!explicit_path.empty())
        return explicit_path;
    if (char const* env = std::getenv(out_dir_env); env && *env)
        return fs::path(env) / default_name;
    return fallback_dir / default_name;
}

std::ofstream open_output(fs::path const& path)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    return out;
}

int cmd_sweep(std::string const& config_path,
              std::string const& out_dir,
              unsigned workers)
{
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    config.validate();

    fs::path dir = config.out_dir;
    if (!out_dir.empty())
        dir = out_dir;
    else if (char const* env = std::getenv(out_dir_env); env && *env)
        dir = env;
    fs::path const path = dir / "sweep.csv";
    auto out = open_output(path);

    FileHeader header{"sweep"};
    header.config_hash = config_hash(config);
    header.seed = config.seed;
    write_sweep_header(out, header);
    out.flush();

    std::cerr << "sweep: " << config.densities_per_km2.size()
              << " densities, " << to_string(config.layout) << " layout, "
              << model_name(config) << " model, " << workers << " worker(s)\n";
    try
    {
        run_sweep(config, workers, [&](SweepRow const& row) {
            write_sweep_row(out, row);
            out.flush();
            std::cerr << "  x=" << row.density_per_km2
                      << " ptx=" << row.ptx_dbm << " dBm"
                      << " ase=" << row.ase_bps_hz_m2 << '\n';
        });
    }
    catch (CalibrationError const& e)
    {
        std::cerr << "error: " << e.what() << "\n"
                  << "rows completed so far are kept in " << path << '\n';
        return static_cast<int>(e.exit_code());
    }
    std::cerr << "wrote " << path << '\n';
    return 0;
}

int cmd_fit(std::string const& in_path,
            std::string const& breakpoints,
            std::string const& out_path)
{
    std::ifstream in(in_path);
    if (!in)
        throw ConfigError("cannot open " + in_path);
    FileHeader header = read_header(in);
    in.clear();
    in.seekg(0);
    auto const rows = read_sweep(in);

    auto const fits
        = fit_sweep(rows, Breakpoints(parse_number_list(breakpoints)));

    fs::path const path = resolve_output(out_path, ".", "fits.csv");
    auto out = open_output(path);
    header.kind = "fits";
    header.version = LOSNLOS_VERSION;
    write_fits(out, header, fits);

    for (auto const& f : fits)
    {
        std::cout << f.metric << " [" << f.fit.x_lo * 1e6 << ", "
                  << f.fit.x_hi * 1e6 << ") km^-2: a=" << f.fit.a
                  << " b=" << f.fit.b << " r2=" << f.fit.r2 << '\n';
    }
    return 0;
}

int cmd_energy(std::string const& fits_path,
               std::string const& p0_list,
               double k_rf,
               double area_m2,
               double bw_hz,
               std::size_t points,
               std::string const& out_path)
{
    std::ifstream in(fits_path);
    if (!in)
        throw ConfigError("cannot open " + fits_path);
    FileHeader header = read_header(in);
    in.clear();
    in.seekg(0);
    auto const fits = read_fits(in);

    EnergyParams base;
    base.area_m2 = area_m2;
    base.bw_hz = bw_hz;
    auto const p0 = parse_number_list(p0_list);
    auto const report = analyze_energy(fits, p0, k_rf, base, points);

    fs::path const path = resolve_output(out_path, ".", "energy.csv");
    fs::path curve_path = path;
    curve_path.replace_filename(path.stem().string() + "_curve.csv");

    header.version = LOSNLOS_VERSION;
    header.kind = "energy";
    {
        auto out = open_output(path);
        write_energy(out, header, report.rows);
    }
    header.kind = "energy_curve";
    {
        auto out = open_output(curve_path);
        write_energy_curve(out, header, report.curve);
    }

    for (auto const& r : report.rows)
    {
        std::cout << "p0=" << r.p0_w << " W segment " << r.segment + 1 << ": "
                  << to_string(r.regime.kind);
        if (auto x = r.regime.x_opt_per_km2())
        {
            std::cout << " x_opt=" << *x << " km^-2"
                      << (r.x_opt_in_segment ? " (inside segment)"
                                             : " (outside segment)");
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_losprob(std::vector<std::string> const& distances)
{
    CombinedLosNlosModel const model;
    int status = 0;
    std::cout << "d_km,p_los\n";
    for (auto const& item : distances)
    {
        try
        {
            auto const values = parse_number_list(item);
            for (double d : values)
            {
                try
                {
                    std::cout << d << ',' << los_probability(d, model) << '\n';
                }
                catch (DomainError const& e)
                {
                    std::cout << d << ",error\n";
                    std::cerr << "error: " << e.what() << '\n';
                    status = static_cast<int>(ExitCode::config);
                }
            }
        }
        catch (ConfigError const& e)
        {
            std::cerr << "error: " << e.what() << '\n';
            status = static_cast<int>(ExitCode::config);
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"LOS/NLOS small-cell densification simulator"};
    app.set_version_flag("--version", LOSNLOS_VERSION);
    app.require_subcommand(1);

    std::string config_path, out_dir;
    unsigned workers = 1;
    auto* sweep = app.add_subcommand(
        "sweep", "Calibrate power and compute ASE over a density grid");
    sweep->add_option("--config", config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    sweep->add_option("--out", out_dir, "output directory for sweep.csv");
    sweep->add_option("--workers", workers, "parallel snapshot workers")
        ->check(CLI::Range(1u, 1024u));

    std::string sweep_in, breakpoints = "10,60,400,8000", fits_out;
    auto* fit = app.add_subcommand("fit", "Piecewise power-law fits of a sweep");
    fit->add_option("--in", sweep_in, "sweep.csv")->required();
    fit->add_option("--breakpoints", breakpoints, "segment edges per km^2");
    fit->add_option("--out", fits_out, "fits file");

    std::string fits_in, p0 = "2,10", energy_out;
    double k_rf = 10, area_m2 = 1e6, bw_hz = 10e6;
    std::size_t points = 64;
    auto* energy = app.add_subcommand(
        "energy", "Energy-efficiency regimes and curves from fits");
    energy->add_option("--fits", fits_in, "fits file")->required();
    energy->add_option("--p0", p0, "static BS power list in W");
    energy->add_option("--krf", k_rf, "inverse amplifier efficiency");
    energy->add_option("--area-m2", area_m2, "network area");
    energy->add_option("--bw-hz", bw_hz, "bandwidth");
    energy->add_option("--points", points, "curve points per segment");
    energy->add_option("--out", energy_out, "energy file");

    std::vector<std::string> distances;
    auto* losprob = app.add_subcommand("losprob", "Print p_L(d) for distances in km");
    losprob->add_option("--d", distances, "comma-separated distances")->required();

    auto* defaults = app.add_subcommand("defaults", "Print the default configuration");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::config);
    }

    try
    {
        if (*sweep)
            return cmd_sweep(config_path, out_dir, workers);
        if (*fit)
            return cmd_fit(sweep_in, breakpoints, fits_out);
        if (*energy)
            return cmd_energy(fits_in, p0, k_rf, area_m2, bw_hz, points, energy_out);
        if (*losprob)
            return cmd_losprob(distances);
        if (*defaults)
        {
            std::cout << to_config_text(RunConfig{});
            return 0;
        }
    }
    catch (Error const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.exit_code());
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return 0;
}
