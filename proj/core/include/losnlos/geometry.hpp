#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace losnlos {

struct Point
{
    double x = 0;  // km
    double y = 0;  // km
};

/// Square simulation region.
struct AreaSpec
{
    double side_km = 1.0;
    //! Measure distances on a torus (minimum image) instead of the plane
    bool wrap_around = true;

    double area_km2() const noexcept { return side_km * side_km; }
    double area_m2() const noexcept { return area_km2() * 1e6; }
    void validate() const;
};

enum class LayoutKind
{
    square_grid,
    sppp,
};

struct Layout
{
    LayoutKind kind = LayoutKind::square_grid;
    double target_density_per_km2 = 100;

    void validate() const;
};

/// Users dropped per snapshot: clamp(per_bs * n_bs, min, max).
struct UserRule
{
    std::size_t min_users = 1000;
    std::size_t users_per_bs = 10;
    std::size_t max_users = 2000;

    std::size_t count_for(std::size_t n_bs) const noexcept;
    void validate() const;
};

struct BsPlacement
{
    std::vector<Point> positions;
    double realized_density_per_km2 = 0;
    //! Number of empty SPPP draws that were rejected
    int empty_redraws = 0;
};

struct Placement
{
    std::vector<Point> bs_positions;
    std::vector<Point> user_positions;
    double realized_density_per_km2 = 0;
    int empty_redraws = 0;
};

/// Side length n of the n-by-n lattice used for a target density.
std::size_t grid_side(double density_per_km2, AreaSpec const& area);

/// Regular n-by-n lattice with spacing side/n, offset side/(2n) from each edge.
BsPlacement place_bs_grid(double density_per_km2, AreaSpec const& area);

/// Homogeneous Poisson point process conditioned on at least one point.
BsPlacement
place_bs_sppp(double density_per_km2, AreaSpec const& area, std::uint64_t seed);

std::vector<Point>
place_users(std::size_t count, AreaSpec const& area, std::uint64_t seed);

/// Full placement for one snapshot; BS and user streams derive from \p seed.
Placement place(Layout const& layout,
                AreaSpec const& area,
                UserRule const& users,
                std::uint64_t seed);

/// Euclidean or minimum-image distance in km.
inline double distance_km(Point a, Point b, AreaSpec const& area) noexcept
{
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    if (dx < 0)
        dx = -dx;
    if (dy < 0)
        dy = -dy;
    if (area.wrap_around)
    {
        if (dx > 0.5 * area.side_km)
            dx = area.side_km - dx;
        if (dy > 0.5 * area.side_km)
            dy = area.side_km - dy;
    }
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace losnlos
