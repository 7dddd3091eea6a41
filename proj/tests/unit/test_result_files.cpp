#include <sstream>

#include <gtest/gtest.h>

#include "losnlos/errors.hpp"
#include "losnlos/result_files.hpp"

using namespace losnlos;

namespace {

SweepRow sample_row(double x)
{
    SweepRow r;
    r.density_per_km2 = x;
    r.realized_density_per_km2 = x - 1;
    r.layout = "square_grid";
    r.model = "combined";
    r.ptx_w = 1.0 / 3.0;
    r.ptx_dbm = 10 * std::log10(r.ptx_w) + 30;
    r.gap_db = 0.1987654321;
    r.ase_bps_hz_m2 = 1.234567890123e-4;
    r.mean_cell_se = 2.5;
    r.sir_p80_db = 12.5;
    r.sinr_p80_db = 12.3;
    r.n_snapshots = 50;
    r.seed = 0xffffffffffffULL;
    r.iterations = 9;
    r.users_per_snapshot = 1000;
    r.empty_redraws = 2;
    r.interference_free_snapshots = 1;
    return r;
}

}  // namespace

TEST(SweepFile, RoundTripIsExact)
{
    std::vector<SweepRow> rows{sample_row(10), sample_row(8000)};
    FileHeader h{"sweep", "9.9.9", 0xabcdef, 7};
    std::stringstream ss;
    write_sweep(ss, h, rows);
    auto back = read_sweep(ss);
    ASSERT_EQ(back.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i)
    {
        EXPECT_EQ(back[i].density_per_km2, rows[i].density_per_km2);
        EXPECT_EQ(back[i].realized_density_per_km2, rows[i].realized_density_per_km2);
        EXPECT_EQ(back[i].ptx_w, rows[i].ptx_w);
        EXPECT_EQ(back[i].gap_db, rows[i].gap_db);
        EXPECT_EQ(back[i].ase_bps_hz_m2, rows[i].ase_bps_hz_m2);
        EXPECT_EQ(back[i].layout, rows[i].layout);
        EXPECT_EQ(back[i].seed, rows[i].seed);
        EXPECT_EQ(back[i].iterations, rows[i].iterations);
    }
}

TEST(SweepFile, HeaderBlock)
{
    FileHeader h{"sweep", "1.2.3", 0x1234, 99};
    std::stringstream ss;
    write_sweep(ss, h, std::vector<SweepRow>{sample_row(100)});
    std::string text = ss.str();
    EXPECT_EQ(text.rfind("# losnlos sweep\n", 0), 0u);
    EXPECT_NE(text.find("# units: "), std::string::npos);
    auto back = read_header(ss);
    EXPECT_EQ(back.kind, "sweep");
    EXPECT_EQ(back.version, "1.2.3");
    EXPECT_EQ(back.config_hash, 0x1234u);
    EXPECT_EQ(back.seed, 99u);
    EXPECT_EQ(format_hash(0x1234), "0x0000000000001234");
}

TEST(SweepFile, MalformedInput)
{
    std::istringstream missing("# nothing here\n");
    EXPECT_THROW(read_sweep(missing), InsufficientDataError);
    std::istringstream ragged("density_per_km2,ptx_w\n10\n");
    EXPECT_THROW(read_sweep(ragged), ConfigError);
}

TEST(FitsFile, RoundTrip)
{
    std::vector<FitRecord> fits{{"ase", {0.0164, 0.45, 0.99, 6e-5, 4e-4, 3}},
                                {"ptx", {7.21e-17, -4.01, 0.98, 6e-5, 4e-4, 3}}};
    std::stringstream ss;
    write_fits(ss, FileHeader{"fits"}, fits);
    auto back = read_fits(ss);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1].metric, "ptx");
    EXPECT_EQ(back[1].fit.a, 7.21e-17);
    EXPECT_EQ(back[1].fit.b, -4.01);
    EXPECT_EQ(back[0].fit.x_hi, 4e-4);
    EXPECT_EQ(back[0].fit.n_points, 3u);
}

TEST(SnapshotDump, OneLinePerUser)
{
    NetworkSnapshot s;
    s.links.serving = {0, 1};
    s.sir_db = {3.0, 4.0};
    s.sinr_db = {2.0, 3.5};
    std::stringstream ss;
    write_snapshot_dump(ss, s);
    std::string line;
    int data = 0;
    while (std::getline(ss, line))
        data += !line.empty() && line[0] != '#';
    EXPECT_EQ(data, 3);  // column header plus two users
}
