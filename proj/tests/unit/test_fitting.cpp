#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "losnlos/errors.hpp"
#include "losnlos/fitting.hpp"
#include "oracles.hpp"

using namespace losnlos;

TEST(PowerLaw, ExactRecovery)
{
    std::vector<DataPoint> pts;
    for (double x : {1.0, 10.0, 100.0})
        pts.push_back({x, 2 * std::pow(x, 1.5)});
    auto f = fit_power_law(pts);
    EXPECT_DOUBLE_EQ(f.a, 2.0);
    EXPECT_DOUBLE_EQ(f.b, 1.5);
    EXPECT_DOUBLE_EQ(f.r2, 1.0);
    EXPECT_EQ(f.n_points, 3u);
    EXPECT_DOUBLE_EQ(f.x_lo, 1.0);
    EXPECT_DOUBLE_EQ(f.x_hi, 100.0);
}

TEST(PowerLaw, HandOls)
{
    std::vector<DataPoint> pts{{1, 1}, {10, 5}, {100, 100}};
    auto f = fit_power_law(pts);
    EXPECT_NEAR(f.b, 1.0, 1e-14);
    EXPECT_NEAR(std::log10(f.a), -0.100343, 5e-7);
    EXPECT_NEAR(f.a, 0.79370, 5e-6);
    EXPECT_LT(f.r2, 1.0);
}

TEST(PowerLaw, MatchesNormalEquations)
{
    std::mt19937_64 rng(12);
    std::lognormal_distribution<double> noise(0, 0.3);
    std::vector<double> xs, ys;
    std::vector<DataPoint> pts;
    for (double x = 1e-5; x < 1e-2; x *= 1.3)
    {
        double y = 0.3 * std::pow(x, 0.7) * noise(rng);
        xs.push_back(x);
        ys.push_back(y);
        pts.push_back({x, y});
    }
    auto f = fit_power_law(pts);
    auto line = oracle::log_log_ols(xs, ys);
    EXPECT_NEAR(f.b, line.slope, 1e-9);
    EXPECT_NEAR(std::log10(f.a), line.intercept, 1e-8);
    EXPECT_GT(f.r2, 0.5);
    EXPECT_LT(f.r2, 1.0);
}

TEST(PowerLaw, Errors)
{
    std::vector<DataPoint> dup{{5, 1}, {5, 2}, {5, 3}};
    EXPECT_THROW(fit_power_law(dup), InsufficientDataError);
    std::vector<DataPoint> one{{5, 1}};
    EXPECT_THROW(fit_power_law(one), InsufficientDataError);
    std::vector<DataPoint> none;
    EXPECT_THROW(fit_power_law(none), InsufficientDataError);
    std::vector<DataPoint> zero_y{{1, 1}, {2, 0}};
    EXPECT_THROW(fit_power_law(zero_y), DomainError);
    std::vector<DataPoint> neg_x{{-1, 1}, {2, 1}};
    EXPECT_THROW(fit_power_law(neg_x), DomainError);
}

TEST(Breakpoints, Validation)
{
    EXPECT_EQ(Breakpoints::defaults().n_segments(), 3u);
    EXPECT_THROW(Breakpoints({10}), ConfigError);
    EXPECT_THROW(Breakpoints({10, 10, 20}), ConfigError);
    EXPECT_THROW(Breakpoints({10, 5}), ConfigError);
    EXPECT_THROW(Breakpoints({0, 5}), ConfigError);
    auto s = Breakpoints::defaults().scaled(1e-6);
    EXPECT_DOUBLE_EQ(s.values()[0], 1e-5);
    EXPECT_DOUBLE_EQ(s.values()[3], 8e-3);
}

TEST(Piecewise, RecoversThreeSegments)
{
    // eta0 and alpha of three segments, x in m^-2
    struct Seg
    {
        double a, b;
    };
    std::vector<Seg> segs{{3.98e1, 1.25}, {1.64e-2, 0.45}, {1.30e-1, 0.72}};
    auto bp = Breakpoints::defaults().scaled(1e-6);
    std::vector<DataPoint> pts;
    std::vector<double> grid{10, 20, 40, 60, 100, 200, 400, 800, 1600, 3200, 8000};
    for (double xk : grid)
    {
        double x = xk * 1e-6;
        std::size_t s = xk < 60 ? 0 : (xk < 400 ? 1 : 2);
        pts.push_back({x, segs[s].a * std::pow(x, segs[s].b)});
    }
    auto fits = fit_piecewise(pts, bp);
    ASSERT_EQ(fits.size(), 3u);
    for (std::size_t s = 0; s < 3; ++s)
    {
        EXPECT_NEAR(fits[s].a / segs[s].a, 1.0, 1e-6);
        EXPECT_NEAR(fits[s].b / segs[s].b, 1.0, 1e-6);
        EXPECT_EQ(fits[s].x_lo, bp.values()[s]);
        EXPECT_EQ(fits[s].x_hi, bp.values()[s + 1]);
    }
    // the last segment includes its right end
    EXPECT_EQ(fits[2].n_points, 5u);
    EXPECT_EQ(fits[0].n_points, 3u);
}

TEST(Piecewise, GlobalLawGivesSameSlopeEverywhere)
{
    std::vector<DataPoint> pts;
    for (double x = 1; x <= 1000; x *= 1.5)
        pts.push_back({x, 4 * std::pow(x, -1.83)});
    for (auto const& bp : {std::vector<double>{1, 7, 300, 1000},
                           std::vector<double>{1, 30, 1000}})
    {
        for (auto const& f : fit_piecewise(pts, Breakpoints(bp)))
            EXPECT_NEAR(f.b, -1.83, 1e-12);
    }
}

TEST(Piecewise, SegmentKeyOverridesX)
{
    // realized x just below a breakpoint but nominally inside the next segment
    std::vector<DataPoint> pts{{9, 1, 10}, {20, 2}, {40, 4}, {59.5, 6, 60}, {100, 10}};
    auto fits = fit_piecewise(pts, Breakpoints({10, 60, 400}));
    EXPECT_EQ(fits[0].n_points, 3u);
    EXPECT_EQ(fits[1].n_points, 2u);
}

TEST(Piecewise, NamesStarvedSegment)
{
    std::vector<DataPoint> pts{{10, 1}, {20, 2}, {100, 3}};
    try
    {
        fit_piecewise(pts, Breakpoints({10, 60, 400}));
        FAIL() << "expected InsufficientDataError";
    }
    catch (InsufficientDataError const& e)
    {
        EXPECT_NE(std::string(e.what()).find("segment 2"), std::string::npos) << e.what();
    }
}

TEST(PowerLawFit, Contains)
{
    PowerLawFit f;
    f.x_lo = 1;
    f.x_hi = 2;
    EXPECT_TRUE(f.contains(1));
    EXPECT_FALSE(f.contains(2));
    EXPECT_TRUE(f.contains(2, true));
    EXPECT_FALSE(f.contains(0.999));
}
