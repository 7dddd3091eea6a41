#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "sweep.hpp"

namespace losnlos {

/// Comment block written at the top of every output file.
struct FileHeader
{
    std::string kind;
    std::string version = LOSNLOS_VERSION;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
};

std::string format_hash(std::uint64_t hash);

void write_sweep_header(std::ostream& out, FileHeader const& header);
void write_sweep_row(std::ostream& out, SweepRow const& row);
void write_sweep(std::ostream& out, FileHeader const& header, std::span<SweepRow const> rows);
std::vector<SweepRow> read_sweep(std::istream& in);
std::vector<SweepRow> read_sweep(std::filesystem::path const& path);

void write_fits(std::ostream& out, FileHeader const& header, std::span<FitRecord const> fits);
std::vector<FitRecord> read_fits(std::istream& in);
std::vector<FitRecord> read_fits(std::filesystem::path const& path);

void write_energy(std::ostream& out, FileHeader const& header, std::span<EnergyRow const> rows);
void write_energy_curve(std::ostream& out,
                        FileHeader const& header,
                        std::span<EnergyCurveRow const> rows);

/// Per-user debugging dump: user_id, serving_bs, sir_db, sinr_db.
void write_snapshot_dump(std::ostream& out, NetworkSnapshot const& snapshot);

/// Header fields parsed back from a file ("# key: value" lines).
FileHeader read_header(std::istream& in);

}  // namespace losnlos
