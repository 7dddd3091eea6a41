#include "losnlos/geometry.hpp"

#include <cmath>
#include <random>
#include <string>

#include "losnlos/errors.hpp"
#include "losnlos/rng.hpp"

namespace losnlos {

void AreaSpec::validate() const
{
    if (!(side_km > 0) || !std::isfinite(side_km))
    {
        throw ConfigError("area side must be positive, got "
                          + std::to_string(side_km));
    }
}

void Layout::validate() const
{
    if (!(target_density_per_km2 > 0) || !std::isfinite(target_density_per_km2))
    {
        throw ConfigError("BS density must be positive, got "
                          + std::to_string(target_density_per_km2));
    }
}

std::size_t UserRule::count_for(std::size_t n_bs) const noexcept
{
    std::size_t n = users_per_bs * n_bs;
    if (n < min_users)
        n = min_users;
    if (max_users > 0 && n > max_users)
        n = max_users;
    return n;
}

void UserRule::validate() const
{
    if (min_users < 1)
        throw ConfigError("users_min must be at least 1");
    if (max_users != 0 && max_users < min_users)
        throw ConfigError("users_max must be 0 (no cap) or >= users_min");
}

std::size_t grid_side(double density_per_km2, AreaSpec const& area)
{
    area.validate();
    double expected = density_per_km2 * area.area_km2();
    if (!(expected >= 1))
    {
        throw ConfigError("grid layout needs density * area >= 1, got "
                          + std::to_string(expected));
    }
    return static_cast<std::size_t>(std::llround(std::sqrt(expected)));
}

BsPlacement place_bs_grid(double density_per_km2, AreaSpec const& area)
{
    std::size_t const n = grid_side(density_per_km2, area);
    double const spacing = area.side_km / static_cast<double>(n);

    BsPlacement result;
    result.positions.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row)
    {
        for (std::size_t col = 0; col < n; ++col)
        {
            result.positions.push_back(
                {(static_cast<double>(col) + 0.5) * spacing,
                 (static_cast<double>(row) + 0.5) * spacing});
        }
    }
    result.realized_density_per_km2
        = static_cast<double>(n * n) / area.area_km2();
    return result;
}

BsPlacement
place_bs_sppp(double density_per_km2, AreaSpec const& area, std::uint64_t seed)
{
    area.validate();
    Layout{LayoutKind::sppp, density_per_km2}.validate();

    Rng rng(seed);
    std::poisson_distribution<std::size_t> count_dist(density_per_km2
                                                      * area.area_km2());
    BsPlacement result;
    std::size_t count = count_dist(rng);
    while (count == 0)
    {
        ++result.empty_redraws;
        count = count_dist(rng);
    }

    std::uniform_real_distribution<double> coord(0.0, area.side_km);
    result.positions.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        double x = coord(rng);
        double y = coord(rng);
        result.positions.push_back({x, y});
    }
    result.realized_density_per_km2
        = static_cast<double>(count) / area.area_km2();
    return result;
}

std::vector<Point>
place_users(std::size_t count, AreaSpec const& area, std::uint64_t seed)
{
    area.validate();
    if (count < 1)
        throw ConfigError("user count must be at least 1");

    Rng rng(seed);
    std::uniform_real_distribution<double> coord(0.0, area.side_km);
    std::vector<Point> users;
    users.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        double x = coord(rng);
        double y = coord(rng);
        users.push_back({x, y});
    }
    return users;
}

Placement place(Layout const& layout,
                AreaSpec const& area,
                UserRule const& users,
                std::uint64_t seed)
{
    layout.validate();
    BsPlacement bs
        = layout.kind == LayoutKind::square_grid
              ? place_bs_grid(layout.target_density_per_km2, area)
              : place_bs_sppp(layout.target_density_per_km2,
                              area,
                              substream_seed(seed, SubStream::bs_positions));

    Placement result;
    result.user_positions
        = place_users(users.count_for(bs.positions.size()),
                      area,
                      substream_seed(seed, SubStream::user_positions));
    result.bs_positions = std::move(bs.positions);
    result.realized_density_per_km2 = bs.realized_density_per_km2;
    result.empty_redraws = bs.empty_redraws;
    return result;
}

}  // namespace losnlos
