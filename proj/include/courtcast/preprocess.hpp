#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "courtcast/tracking.hpp"

namespace courtcast {

struct WindowConfig {
    std::size_t T = 128;  // window length in moments
    std::size_t r = 16;   // blind spot in moments
    std::size_t K = 2;    // null windows sampled per possession

    void validate() const {
        require_invariant(T >= 1, "window_length_positive");
    }

    // Smallest admissible reference time; a possession of n moments admits
    // reference times in [T + r, n].
    std::size_t min_reference() const { return T + r; }
};

// Replaces every Cartesian (x,y) with (radius, angle) measured from the
// offensive basket; ball height and shot clock pass through unchanged.
// Radius-zero points get angle 0 by convention.
Possession to_polar(const Possession& possession, const CourtGeometry& geometry);

// Number of valid window reference times, i.e. n - T - r + 1 (0 when the
// possession is too short to hold a single window).
std::size_t window_position_count(const Possession& p, const WindowConfig& cfg);

// Frames at [tau - (T + r), tau - r), labeled with the possession's terminal
// action iff tau is its terminal index.
Window extract_window(const Possession& possession, std::size_t tau,
                      const WindowConfig& cfg);

// True when the terminal-labeled window exists (terminal_index >= T + r).
bool admits_terminal_window(const Possession& p, const WindowConfig& cfg);

struct DownsampleResult {
    std::vector<Window> windows;  // terminal window first, then nulls by position
    bool shortfall = false;       // fewer than K null positions were available
};

// The terminal-labeled window plus K null windows drawn uniformly without
// replacement from the remaining valid positions. Deterministic in the seed;
// callers re-derive the seed per epoch so null positions are redrawn.
DownsampleResult downsample_possession(const Possession& possession,
                                       const WindowConfig& cfg, std::uint64_t seed);

struct DatasetSplit {
    std::vector<std::uint64_t> train;
    std::vector<std::uint64_t> validation;
    std::vector<std::uint64_t> test;
};

// Seed-deterministic disjoint partition at possession granularity.
DatasetSplit split_dataset(std::span<const Possession> possessions,
                           std::array<double, 3> fractions, std::uint64_t seed);

// Per-channel standardization statistics over a set of possessions' moments.
struct ChannelStats {
    std::array<double, kMomentDim> mean{};
    std::array<double, kMomentDim> stdev{};  // floored at 1e-8

    static ChannelStats identity();
};

ChannelStats compute_channel_stats(std::span<const Possession> possessions,
                                   std::span<const std::uint64_t> ids);

}  // namespace courtcast
