#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace losnlos {

using Rng = std::mt19937_64;

/// Uniform double on [0, 1) from the top 53 bits of one 64-bit draw.
inline double unit_uniform(Rng& rng) noexcept
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Order-sensitive hash of a sequence of words into a single seed.
constexpr std::uint64_t combine_seed(std::initializer_list<std::uint64_t> words) noexcept
{
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (auto w : words)
    {
        h = mix64(h ^ mix64(w));
    }
    return h;
}

/// Which batch a snapshot belongs to.
///
/// SIR and calibration-SINR batches share one stream so that the SINR/SIR
/// gap is evaluated with common random numbers; the final batch is
/// independent.
enum class BatchMode
{
    sir,
    sinr_calibration,
    sinr_final,
};

constexpr std::uint64_t stream_of(BatchMode mode) noexcept
{
    return mode == BatchMode::sinr_final ? 1 : 0;
}

constexpr std::uint64_t snapshot_seed(std::uint64_t global_seed,
                                      std::uint64_t density_index,
                                      std::uint64_t snapshot_index,
                                      BatchMode mode) noexcept
{
    return combine_seed(
        {global_seed, density_index, snapshot_index, stream_of(mode)});
}

// Sub-streams of a single snapshot seed.
enum class SubStream : std::uint64_t
{
    bs_positions = 1,
    user_positions = 2,
    link_states = 3,
    shadowing = 4,
};

constexpr std::uint64_t substream_seed(std::uint64_t seed, SubStream s) noexcept
{
    return combine_seed({seed, static_cast<std::uint64_t>(s)});
}

}  // namespace losnlos
