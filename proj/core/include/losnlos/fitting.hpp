#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace losnlos {

/// One (x, y) sample. \c key selects the segment in a piecewise fit and
/// defaults to x; set it when segment membership should follow a nominal
/// value (e.g. a target density) while the regression uses a realized one.
struct DataPoint
{
    double x = 0;
    double y = 0;
    double key = std::numeric_limits<double>::quiet_NaN();

    double segment_key() const noexcept { return key == key ? key : x; }
};

/// y = a x^b fitted by least squares in log10-log10 space.
struct PowerLawFit
{
    double a = 0;
    double b = 0;
    double r2 = 0;
    double x_lo = 0;
    double x_hi = 0;
    std::size_t n_points = 0;

    double operator()(double x) const noexcept;
    bool contains(double x, bool closed_right = false) const noexcept;
};

class Breakpoints
{
  public:
    /// Segment boundaries per km^2 used unless configured otherwise.
    static Breakpoints defaults();

    explicit Breakpoints(std::vector<double> values);

    std::span<double const> values() const noexcept { return values_; }
    std::size_t n_segments() const noexcept { return values_.size() - 1; }
    Breakpoints scaled(double factor) const;

  private:
    std::vector<double> values_;
};

PowerLawFit fit_power_law(std::span<DataPoint const> points);

/// Independent fits on [b_i, b_{i+1}); the last segment also includes its
/// right end. Validity intervals are the breakpoints themselves.
std::vector<PowerLawFit>
fit_piecewise(std::span<DataPoint const> points, Breakpoints const& breakpoints);

}  // namespace losnlos
