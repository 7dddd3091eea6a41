#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "calibration.hpp"
#include "metrics.hpp"
#include "simcore.hpp"

namespace losnlos {

/// Which realizations the final ASE evaluation uses.
enum class FinalBatch
{
    shared,       //!< reuse the calibration snapshots
    independent,  //!< draw a fresh batch from the sinr_final stream
};

/// Complete description of a sweep. Every default is the reference
/// scenario: 1 km^2, 50 snapshots, 3GPP pico constants, 10 MHz at -174 dBm/Hz.
struct RunConfig
{
    AreaSpec area;
    LayoutKind layout = LayoutKind::square_grid;
    std::vector<double> densities_per_km2{
        10, 20, 40, 60, 100, 200, 400, 800, 1600, 3200, 8000};
    std::size_t n_snapshots = 50;
    std::uint64_t seed = 1;
    UserRule users;

    bool combined_model = true;
    SingleSlopeModel single_slope;
    CombinedLosNlosModel combined;
    ChannelSpec channel;
    NoiseSpec noise;
    CalibrationCriterion criterion;
    CapacityMap capacity;
    FinalBatch final_batch = FinalBatch::shared;

    std::vector<double> breakpoints_per_km2{10, 60, 400, 8000};
    std::vector<double> p0_w{2, 10};
    double k_rf = 10;

    std::filesystem::path out_dir = ".";

    PathLossModel model() const;
    Scenario scenario(double density_per_km2) const;
    void validate() const;
};

/// Parse flat "key = value" text. Blank lines and '#' comments are ignored;
/// unknown keys and malformed values raise ConfigError naming the key.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(std::filesystem::path const& path);

/// Canonical text listing every key with its resolved value.
std::string to_config_text(RunConfig const& config);

/// FNV-1a hash of the canonical text.
std::uint64_t config_hash(RunConfig const& config);

std::string to_string(LayoutKind kind);
std::string model_name(RunConfig const& config);

std::vector<double> parse_number_list(std::string const& text);

}  // namespace losnlos
