#include "losnlos/result_files.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "losnlos/errors.hpp"

namespace losnlos {
namespace {

std::string num(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_header_block(std::ostream& out,
                        FileHeader const& header,
                        char const* units)
{
    out << "# losnlos " << header.kind << '\n'
        << "# version: " << header.version << '\n'
        << "# config_hash: " << format_hash(header.config_hash) << '\n'
        << "# seed: " << header.seed << '\n'
        << "# units: " << units << '\n';
}

std::vector<std::string> split_csv(std::string const& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

/// Data rows keyed by column name, comments and header skipped.
class CsvTable
{
  public:
    explicit CsvTable(std::istream& in)
    {
        std::string line;
        bool have_header = false;
        while (std::getline(in, line))
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line.front() == '#')
                continue;
            auto cells = split_csv(line);
            if (!have_header)
            {
                for (std::size_t i = 0; i < cells.size(); ++i)
                    columns_[cells[i]] = i;
                have_header = true;
                continue;
            }
            if (cells.size() != columns_.size())
            {
                throw ConfigError("malformed row: expected "
                                  + std::to_string(columns_.size())
                                  + " columns, got "
                                  + std::to_string(cells.size()));
            }
            rows_.push_back(std::move(cells));
        }
        if (!have_header)
            throw InsufficientDataError("file has no column header");
    }

    std::size_t size() const { return rows_.size(); }

    std::string const& str(std::size_t row, std::string const& col) const
    {
        auto it = columns_.find(col);
        if (it == columns_.end())
            throw ConfigError("missing column '" + col + "'");
        return rows_[row][it->second];
    }

    double dbl(std::size_t row, std::string const& col) const
    {
        auto const& s = str(row, col);
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ConfigError("invalid number in column '" + col + "': '" + s + "'");
        return v;
    }

    std::uint64_t u64(std::size_t row, std::string const& col) const
    {
        auto const& s = str(row, col);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ConfigError("invalid integer in column '" + col + "': '" + s + "'");
        return v;
    }

  private:
    std::map<std::string, std::size_t> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::ifstream open_input(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    return in;
}

}  // namespace

std::string format_hash(std::uint64_t hash)
{
    char buf[19] = "0x";
    auto [ptr, ec] = std::to_chars(buf + 2, buf + sizeof(buf), hash, 16);
    std::string s(buf + 2, ptr);
    return "0x" + std::string(16 - s.size(), '0') + s;
}

FileHeader read_header(std::istream& in)
{
    FileHeader h;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line.front() != '#')
            break;
        auto const colon = line.find(':');
        if (line.rfind("# losnlos ", 0) == 0)
        {
            h.kind = line.substr(10);
            continue;
        }
        if (colon == std::string::npos)
            continue;
        std::string const key = line.substr(2, colon - 2);
        std::string const value = line.substr(colon + 2);
        if (key == "version")
            h.version = value;
        else if (key == "config_hash")
            h.config_hash = std::stoull(value, nullptr, 16);
        else if (key == "seed")
            h.seed = std::stoull(value);
    }
    return h;
}

//---------------------------------------------------------------------------//
// Sweep
//---------------------------------------------------------------------------//

void write_sweep_header(std::ostream& out, FileHeader const& header)
{
    write_header_block(out,
                       header,
                       "km^-2,km^-2,-,-,W,dBm,dB,bit/s/Hz/m^2,bit/s/Hz,dB,dB,"
                       "-,-,-,-,-,-");
    out << "density_per_km2,realized_density_per_km2,layout,model,ptx_w,"
           "ptx_dbm,gap_db,ase_bps_hz_m2,mean_cell_se,sir_p80_db,sinr_p80_db,"
           "n_snapshots,seed,iterations,users_per_snapshot,empty_redraws,"
           "interference_free_snapshots\n";
}

void write_sweep_row(std::ostream& out, SweepRow const& r)
{
    out << num(r.density_per_km2) << ',' << num(r.realized_density_per_km2)
        << ',' << r.layout << ',' << r.model << ',' << num(r.ptx_w) << ','
        << num(r.ptx_dbm) << ',' << num(r.gap_db) << ','
        << num(r.ase_bps_hz_m2) << ',' << num(r.mean_cell_se) << ','
        << num(r.sir_p80_db) << ',' << num(r.sinr_p80_db) << ','
        << r.n_snapshots << ',' << r.seed << ',' << r.iterations << ','
        << r.users_per_snapshot << ',' << r.empty_redraws << ','
        << r.interference_free_snapshots << '\n';
}

void write_sweep(std::ostream& out,
                 FileHeader const& header,
                 std::span<SweepRow const> rows)
{
    write_sweep_header(out, header);
    for (auto const& r : rows)
        write_sweep_row(out, r);
}

std::vector<SweepRow> read_sweep(std::istream& in)
{
    CsvTable t(in);
    std::vector<SweepRow> rows(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        auto& r = rows[i];
        r.density_per_km2 = t.dbl(i, "density_per_km2");
        r.realized_density_per_km2 = t.dbl(i, "realized_density_per_km2");
        r.layout = t.str(i, "layout");
        r.model = t.str(i, "model");
        r.ptx_w = t.dbl(i, "ptx_w");
        r.ptx_dbm = t.dbl(i, "ptx_dbm");
        r.gap_db = t.dbl(i, "gap_db");
        r.ase_bps_hz_m2 = t.dbl(i, "ase_bps_hz_m2");
        r.mean_cell_se = t.dbl(i, "mean_cell_se");
        r.sir_p80_db = t.dbl(i, "sir_p80_db");
        r.sinr_p80_db = t.dbl(i, "sinr_p80_db");
        r.n_snapshots = t.u64(i, "n_snapshots");
        r.seed = t.u64(i, "seed");
        r.iterations = static_cast<int>(t.u64(i, "iterations"));
        r.users_per_snapshot = t.u64(i, "users_per_snapshot");
        r.empty_redraws = static_cast<int>(t.u64(i, "empty_redraws"));
        r.interference_free_snapshots
            = t.u64(i, "interference_free_snapshots");
    }
    return rows;
}

std::vector<SweepRow> read_sweep(std::filesystem::path const& path)
{
    auto in = open_input(path);
    return read_sweep(in);
}

//---------------------------------------------------------------------------//
// Fits
//---------------------------------------------------------------------------//

void write_fits(std::ostream& out,
                FileHeader const& header,
                std::span<FitRecord const> fits)
{
    write_header_block(out, header, "-,m^-2,m^-2,SI,-,-,-");
    out << "metric,x_lo,x_hi,a,b,r2,n_points\n";
    for (auto const& f : fits)
    {
        out << f.metric << ',' << num(f.fit.x_lo) << ',' << num(f.fit.x_hi)
            << ',' << num(f.fit.a) << ',' << num(f.fit.b) << ','
            << num(f.fit.r2) << ',' << f.fit.n_points << '\n';
    }
}

std::vector<FitRecord> read_fits(std::istream& in)
{
    CsvTable t(in);
    std::vector<FitRecord> fits(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        fits[i].metric = t.str(i, "metric");
        fits[i].fit.x_lo = t.dbl(i, "x_lo");
        fits[i].fit.x_hi = t.dbl(i, "x_hi");
        fits[i].fit.a = t.dbl(i, "a");
        fits[i].fit.b = t.dbl(i, "b");
        fits[i].fit.r2 = t.dbl(i, "r2");
        fits[i].fit.n_points = t.u64(i, "n_points");
    }
    return fits;
}

std::vector<FitRecord> read_fits(std::filesystem::path const& path)
{
    auto in = open_input(path);
    return read_fits(in);
}

//---------------------------------------------------------------------------//
// Energy
//---------------------------------------------------------------------------//

void write_energy(std::ostream& out,
                  FileHeader const& header,
                  std::span<EnergyRow const> rows)
{
    write_header_block(out, header, "W,-,-,km^-2,km^-2,-,-,-,-,km^-2,m^-2,-");
    out << "p0_w,k_rf,segment,x_lo_per_km2,x_hi_per_km2,alpha,delta,regime,"
           "boundary_case,x_opt_per_km2,x_opt_per_m2,x_opt_in_segment\n";
    for (auto const& r : rows)
    {
        out << num(r.p0_w) << ',' << num(r.k_rf) << ',' << r.segment + 1 << ','
            << num(r.x_lo_per_km2) << ',' << num(r.x_hi_per_km2) << ','
            << num(r.alpha) << ',' << num(r.delta) << ','
            << to_string(r.regime.kind) << ','
            << (r.regime.boundary_case ? "yes" : "no") << ',';
        if (r.regime.x_opt_per_m2)
        {
            out << num(*r.regime.x_opt_per_km2()) << ','
                << num(*r.regime.x_opt_per_m2) << ','
                << (r.x_opt_in_segment ? "yes" : "no");
        }
        else
        {
            out << ",,no";
        }
        out << '\n';
    }
}

void write_energy_curve(std::ostream& out,
                        FileHeader const& header,
                        std::span<EnergyCurveRow const> rows)
{
    write_header_block(out, header, "W,m^-2,km^-2,bit/J,-,-");
    out << "p0_w,x_per_m2,x_per_km2,ee_bits_per_joule,segment,segment_start\n";
    for (auto const& r : rows)
    {
        out << num(r.p0_w) << ',' << num(r.point.x_per_m2) << ','
            << num(r.point.x_per_m2 / per_km2_to_per_m2) << ','
            << num(r.point.ee_bits_per_joule) << ',' << r.point.segment + 1
            << ',' << (r.point.segment_start ? 1 : 0) << '\n';
    }
}

void write_snapshot_dump(std::ostream& out, NetworkSnapshot const& snapshot)
{
    out << "# units: -,-,dB,dB\n";
    out << "user_id,serving_bs,sir_db,sinr_db\n";
    for (std::size_t u = 0; u < snapshot.sir_db.size(); ++u)
    {
        out << u << ',' << snapshot.links.serving[u] << ','
            << num(snapshot.sir_db[u]) << ',';
        if (!snapshot.sinr_db.empty())
            out << num(snapshot.sinr_db[u]);
        out << '\n';
    }
}

}  // namespace losnlos
