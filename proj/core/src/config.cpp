#include "losnlos/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "losnlos/errors.hpp"
#include "losnlos/fitting.hpp"

namespace losnlos {
namespace {

std::string trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string const& key, std::string const& text)
{
    double value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("invalid number for '" + key + "': '" + text + "'");
    return value;
}

std::uint64_t parse_unsigned(std::string const& key, std::string const& text)
{
    std::uint64_t value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
    {
        throw ConfigError("invalid non-negative integer for '" + key + "': '"
                          + text + "'");
    }
    return value;
}

bool parse_bool(std::string const& key, std::string const& text)
{
    if (text == "true" || text == "yes" || text == "1" || text == "on")
        return true;
    if (text == "false" || text == "no" || text == "0" || text == "off")
        return false;
    throw ConfigError("invalid boolean for '" + key + "': '" + text + "'");
}

std::string fmt(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fmt_list(std::vector<double> const& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (i)
            out += ',';
        out += fmt(values[i]);
    }
    return out;
}

struct Key
{
    char const* name;
    std::function<void(RunConfig&, std::string const&, std::string const&)> set;
    std::function<std::string(RunConfig const&)> get;
};

#define LOSNLOS_DOUBLE_KEY(NAME, MEMBER)                                   \
    Key                                                                    \
    {                                                                      \
        NAME,                                                              \
            [](RunConfig& c, std::string const& k, std::string const& v) { \
                c.MEMBER = parse_double(k, v);                             \
            },                                                             \
            [](RunConfig const& c) { return fmt(c.MEMBER); }               \
    }

#define LOSNLOS_SIZE_KEY(NAME, MEMBER)                                     \
    Key                                                                    \
    {                                                                      \
        NAME,                                                              \
            [](RunConfig& c, std::string const& k, std::string const& v) { \
                c.MEMBER = parse_unsigned(k, v);                           \
            },                                                             \
            [](RunConfig const& c) { return std::to_string(c.MEMBER); }    \
    }

#define LOSNLOS_LIST_KEY(NAME, MEMBER)                                     \
    Key                                                                    \
    {                                                                      \
        NAME,                                                              \
            [](RunConfig& c, std::string const& k, std::string const& v) { \
                try                                                        \
                {                                                          \
                    c.MEMBER = parse_number_list(v);                       \
                }                                                          \
                catch (ConfigError const& e)                               \
                {                                                          \
                    throw ConfigError("'" + k + "': " + e.what());         \
                }                                                          \
            },                                                             \
            [](RunConfig const& c) { return fmt_list(c.MEMBER); }          \
    }

std::vector<Key> const& keys()
{
    static std::vector<Key> const table = {
        LOSNLOS_DOUBLE_KEY("area_side_km", area.side_km),
        Key{"wrap_around",
            [](RunConfig& c, std::string const& k, std::string const& v) {
                c.area.wrap_around = parse_bool(k, v);
            },
            [](RunConfig const& c) {
                return std::string(c.area.wrap_around ? "true" : "false");
            }},
        Key{"layout",
            [](RunConfig& c, std::string const& k, std::string const& v) {
                if (v == "grid" || v == "square_grid")
                    c.layout = LayoutKind::square_grid;
                else if (v == "sppp" || v == "ppp")
                    c.layout = LayoutKind::sppp;
                else
                    throw ConfigError("invalid value for '" + k + "': '" + v
                                      + "' (expected grid or sppp)");
            },
            [](RunConfig const& c) { return to_string(c.layout); }},
        LOSNLOS_LIST_KEY("densities_per_km2", densities_per_km2),
        LOSNLOS_SIZE_KEY("n_snapshots", n_snapshots),
        LOSNLOS_SIZE_KEY("seed", seed),
        LOSNLOS_SIZE_KEY("users_min", users.min_users),
        LOSNLOS_SIZE_KEY("users_per_bs", users.users_per_bs),
        LOSNLOS_SIZE_KEY("users_max", users.max_users),
        Key{"model",
            [](RunConfig& c, std::string const& k, std::string const& v) {
                if (v == "single_slope")
                    c.combined_model = false;
                else if (v == "combined")
                    c.combined_model = true;
                else
                    throw ConfigError("invalid value for '" + k + "': '" + v
                                      + "' (expected single_slope or combined)");
            },
            [](RunConfig const& c) { return model_name(c); }},
        LOSNLOS_DOUBLE_KEY("sl_intercept_db", single_slope.loss.intercept_db),
        LOSNLOS_DOUBLE_KEY("sl_exponent", single_slope.loss.exponent),
        LOSNLOS_DOUBLE_KEY("los_intercept_db", combined.los.intercept_db),
        LOSNLOS_DOUBLE_KEY("los_exponent", combined.los.exponent),
        LOSNLOS_DOUBLE_KEY("nlos_intercept_db", combined.nlos.intercept_db),
        LOSNLOS_DOUBLE_KEY("nlos_exponent", combined.nlos.exponent),
        LOSNLOS_DOUBLE_KEY("los_d0_km", combined.d0_km),
        LOSNLOS_DOUBLE_KEY("los_d1_km", combined.d1_km),
        LOSNLOS_DOUBLE_KEY("shadowing_std_db", channel.shadowing_std_db),
        LOSNLOS_DOUBLE_KEY("penetration_loss_db", channel.penetration_loss_db),
        LOSNLOS_DOUBLE_KEY("noise_psd_dbm_hz", noise.psd_dbm_hz),
        LOSNLOS_DOUBLE_KEY("bandwidth_hz", noise.bandwidth_hz),
        LOSNLOS_DOUBLE_KEY("noise_figure_db", noise.noise_figure_db),
        LOSNLOS_DOUBLE_KEY("calib_quantile", criterion.y_quantile),
        LOSNLOS_DOUBLE_KEY("calib_delta_db", criterion.delta_db0),
        LOSNLOS_DOUBLE_KEY("calib_lo_w", criterion.search_lo_w),
        LOSNLOS_DOUBLE_KEY("calib_hi_w", criterion.search_hi_w),
        LOSNLOS_DOUBLE_KEY("calib_tol_db", criterion.bracket_tol_db),
        LOSNLOS_DOUBLE_KEY("cap_bw_eff", capacity.bw_eff),
        LOSNLOS_DOUBLE_KEY("cap_sinr_eff", capacity.sinr_eff),
        LOSNLOS_DOUBLE_KEY("cap_max_bps_hz", capacity.se_cap_bps_hz),
        Key{"final_batch",
            [](RunConfig& c, std::string const& k, std::string const& v) {
                if (v == "shared")
                    c.final_batch = FinalBatch::shared;
                else if (v == "independent")
                    c.final_batch = FinalBatch::independent;
                else
                    throw ConfigError("invalid value for '" + k + "': '" + v
                                      + "' (expected shared or independent)");
            },
            [](RunConfig const& c) {
                return std::string(c.final_batch == FinalBatch::shared
                                       ? "shared"
                                       : "independent");
            }},
        LOSNLOS_LIST_KEY("breakpoints_per_km2", breakpoints_per_km2),
        LOSNLOS_LIST_KEY("p0_w", p0_w),
        LOSNLOS_DOUBLE_KEY("k_rf", k_rf),
    };
    return table;
}

#undef LOSNLOS_DOUBLE_KEY
#undef LOSNLOS_SIZE_KEY
#undef LOSNLOS_LIST_KEY

}  // namespace

std::vector<double> parse_number_list(std::string const& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            throw ConfigError("empty entry in list '" + text + "'");
        values.push_back(parse_double("list", item));
    }
    if (values.empty())
        throw ConfigError("empty list");
    return values;
}

std::string to_string(LayoutKind kind)
{
    return kind == LayoutKind::square_grid ? "grid" : "sppp";
}

std::string model_name(RunConfig const& config)
{
    return config.combined_model ? "combined" : "single_slope";
}

PathLossModel RunConfig::model() const
{
    if (combined_model)
        return combined;
    return single_slope;
}

Scenario RunConfig::scenario(double density_per_km2) const
{
    Scenario s;
    s.area = area;
    s.layout = Layout{layout, density_per_km2};
    s.model = model();
    s.channel = channel;
    s.users = users;
    return s;
}

void RunConfig::validate() const
{
    area.validate();
    users.validate();
    channel.validate();
    noise.validate();
    criterion.validate();
    capacity.validate();
    single_slope.validate();
    combined.validate();
    if (densities_per_km2.empty())
        throw ConfigError("densities_per_km2 must not be empty");
    for (std::size_t i = 0; i < densities_per_km2.size(); ++i)
    {
        if (!(densities_per_km2[i] > 0))
            throw ConfigError("densities_per_km2 must be positive");
        if (std::find(densities_per_km2.begin(),
                      densities_per_km2.begin() + static_cast<std::ptrdiff_t>(i),
                      densities_per_km2[i])
            != densities_per_km2.begin() + static_cast<std::ptrdiff_t>(i))
        {
            throw ConfigError("densities_per_km2 must not repeat a value");
        }
    }
    if (n_snapshots < 1)
        throw ConfigError("n_snapshots must be at least 1");
    Breakpoints{breakpoints_per_km2};
    if (p0_w.empty()
        || std::any_of(p0_w.begin(), p0_w.end(), [](double p) { return !(p > 0); }))
    {
        throw ConfigError("p0_w must list positive powers");
    }
    if (!(k_rf >= 1))
        throw ConfigError("k_rf must be at least 1");
}

RunConfig parse_config(std::istream& in, RunConfig base)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        auto const hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos)
        {
            throw ConfigError("line " + std::to_string(lineno)
                              + ": expected 'key = value'");
        }
        std::string const key = trim(std::string_view(line).substr(0, eq));
        std::string const value = trim(std::string_view(line).substr(eq + 1));
        if (key == "out_dir")
        {
            base.out_dir = value;
            continue;
        }
        auto const& table = keys();
        auto it = std::find_if(table.begin(), table.end(), [&](Key const& k) {
            return key == k.name;
        });
        if (it == table.end())
            throw ConfigError("unknown configuration key '" + key + "'");
        it->set(base, key, value);
    }
    base.validate();
    return base;
}

RunConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open configuration file " + path.string());
    return parse_config(in);
}

std::string to_config_text(RunConfig const& config)
{
    std::string out;
    for (auto const& k : keys())
    {
        out += k.name;
        out += " = ";
        out += k.get(config);
        out += '\n';
    }
    return out;
}

std::uint64_t config_hash(RunConfig const& config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_config_text(config))
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace losnlos
