#include "courtcast/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "courtcast/rng.hpp"

namespace courtcast {

Possession to_polar(const Possession& possession, const CourtGeometry& geometry) {
    require(possession.coords == CoordMode::cartesian, ErrorKind::state,
            "to_polar: possession " + std::to_string(possession.id) +
                " is already polar");
    auto [bx, by] = geometry.basket(possession.attack);
    auto polar = [&](double x, double y) -> std::array<double, 2> {
        double dx = x - bx;
        double dy = y - by;
        double radius = std::hypot(dx, dy);
        double angle = radius == 0.0 ? 0.0 : std::atan2(dy, dx);
        return {radius, angle};
    };
    Possession out = possession;
    for (auto& m : out.moments) {
        for (int i = 0; i < kPlayersOnCourt; ++i) {
            auto [radius, angle] = polar(m.player_a(i), m.player_b(i));
            m.set_player(i, radius, angle);
        }
        auto [radius, angle] = polar(m.ball_a(), m.ball_b());
        m.set_ball(radius, angle, m.ball_z());
    }
    out.coords = CoordMode::polar;
    return out;
}

std::size_t window_position_count(const Possession& p, const WindowConfig& cfg) {
    std::size_t lo = cfg.min_reference();
    std::size_t hi = p.size();  // reference times run through n inclusive
    return hi >= lo ? hi - lo + 1 : 0;
}

Window extract_window(const Possession& possession, std::size_t tau,
                      const WindowConfig& cfg) {
    cfg.validate();
    require(tau >= cfg.min_reference() && tau <= possession.size(), ErrorKind::bounds,
            "extract_window: reference time " + std::to_string(tau) +
                " outside [" + std::to_string(cfg.min_reference()) + ", " +
                std::to_string(possession.size()) + "] for possession " +
                std::to_string(possession.id));
    Window w;
    w.possession_id = possession.id;
    w.reference_time = tau;
    w.lineup = possession.lineup;
    w.label = tau == possession.terminal_index ? possession.terminal
                                               : TerminalAction::Null;
    std::size_t begin = tau - cfg.min_reference();
    w.frames.assign(possession.moments.begin() + static_cast<std::ptrdiff_t>(begin),
                    possession.moments.begin() + static_cast<std::ptrdiff_t>(begin + cfg.T));
    return w;
}

bool admits_terminal_window(const Possession& p, const WindowConfig& cfg) {
    return p.terminal_index >= cfg.min_reference() && p.terminal_index <= p.size();
}

DownsampleResult downsample_possession(const Possession& possession,
                                       const WindowConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    require(admits_terminal_window(possession, cfg), ErrorKind::bounds,
            "downsample_possession: possession " + std::to_string(possession.id) +
                " admits no terminal window (terminal index " +
                std::to_string(possession.terminal_index) + ", need >= " +
                std::to_string(cfg.min_reference()) + ")");

    std::vector<std::size_t> null_positions;
    for (std::size_t tau = cfg.min_reference(); tau <= possession.size(); ++tau) {
        if (tau != possession.terminal_index) null_positions.push_back(tau);
    }

    DownsampleResult result;
    result.windows.push_back(extract_window(possession, possession.terminal_index, cfg));

    std::size_t take = std::min<std::size_t>(cfg.K, null_positions.size());
    result.shortfall = take < cfg.K;

    // Partial Fisher-Yates: the first `take` entries are a uniform sample
    // without replacement.
    Rng rng(seed);
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + rng.index(null_positions.size() - i);
        std::swap(null_positions[i], null_positions[j]);
    }
    std::sort(null_positions.begin(), null_positions.begin() + static_cast<std::ptrdiff_t>(take));
    for (std::size_t i = 0; i < take; ++i) {
        result.windows.push_back(extract_window(possession, null_positions[i], cfg));
    }
    return result;
}

DatasetSplit split_dataset(std::span<const Possession> possessions,
                           std::array<double, 3> fractions, std::uint64_t seed) {
    require(!possessions.empty(), ErrorKind::config, "split_dataset: empty input");
    double sum = fractions[0] + fractions[1] + fractions[2];
    require(std::abs(sum - 1.0) <= 1e-9, ErrorKind::config,
            "split_dataset: fractions sum to " + std::to_string(sum));
    for (double f : fractions) {
        require(f >= 0.0, ErrorKind::config, "split_dataset: negative fraction");
    }

    std::vector<std::uint64_t> ids;
    ids.reserve(possessions.size());
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : possessions) {
        require(seen.insert(p.id).second, ErrorKind::validation,
                "possession_id_unique: duplicate id " + std::to_string(p.id));
        ids.push_back(p.id);
    }

    Rng rng(seed);
    rng.shuffle(ids);

    auto n = ids.size();
    auto n_train = static_cast<std::size_t>(std::llround(fractions[0] * static_cast<double>(n)));
    auto n_val = static_cast<std::size_t>(std::llround(fractions[1] * static_cast<double>(n)));
    n_train = std::min(n_train, n);
    n_val = std::min(n_val, n - n_train);

    DatasetSplit split;
    split.train.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.validation.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_train),
                            ids.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
    split.test.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), ids.end());
    return split;
}

ChannelStats ChannelStats::identity() {
    ChannelStats s;
    s.mean.fill(0.0);
    s.stdev.fill(1.0);
    return s;
}

ChannelStats compute_channel_stats(std::span<const Possession> possessions,
                                   std::span<const std::uint64_t> ids) {
    std::unordered_set<std::uint64_t> wanted(ids.begin(), ids.end());
    std::array<double, kMomentDim> sum{};
    std::array<double, kMomentDim> sumsq{};
    std::size_t count = 0;
    for (const auto& p : possessions) {
        if (!wanted.empty() && !wanted.count(p.id)) continue;
        for (const auto& m : p.moments) {
            for (int c = 0; c < kMomentDim; ++c) {
                sum[c] += m.v[c];
                sumsq[c] += m.v[c] * m.v[c];
            }
            ++count;
        }
    }
    require(count > 0, ErrorKind::config, "compute_channel_stats: no moments");
    ChannelStats stats;
    for (int c = 0; c < kMomentDim; ++c) {
        stats.mean[c] = sum[c] / static_cast<double>(count);
        double var = sumsq[c] / static_cast<double>(count) - stats.mean[c] * stats.mean[c];
        stats.stdev[c] = std::sqrt(std::max(var, 0.0));
        if (stats.stdev[c] < 1e-8) stats.stdev[c] = 1e-8;
    }
    return stats;
}

}  // namespace courtcast
