#include "courtcast/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace courtcast {

std::string_view action_name(TerminalAction a) {
    switch (a) {
        case TerminalAction::FieldGoalAttempt: return "fga";
        case TerminalAction::ShootingFoul: return "shooting_foul";
        case TerminalAction::NonShootingFoul: return "nonshooting_foul";
        case TerminalAction::Turnover: return "turnover";
        case TerminalAction::Null: return "null";
    }
    return "?";
}

TerminalAction action_from_name(std::string_view name) {
    for (int i = 0; i < kNumActions; ++i) {
        auto a = static_cast<TerminalAction>(i);
        if (action_name(a) == name) return a;
    }
    throw Error(ErrorKind::parse, "unknown terminal action tag '" + std::string(name) + "'");
}

std::array<PlayerId, kPlayersOnCourt> Lineup::slots() const {
    std::array<PlayerId, kPlayersOnCourt> s{};
    std::copy(offense.begin(), offense.end(), s.begin());
    std::copy(defense.begin(), defense.end(), s.begin() + 5);
    return s;
}

Lineup make_lineup(std::array<PlayerId, 5> offense, std::array<PlayerId, 5> defense,
                   std::size_t roster_size) {
    std::sort(offense.begin(), offense.end());
    std::sort(defense.begin(), defense.end());
    std::set<PlayerId> seen;
    for (PlayerId p : offense) seen.insert(p);
    for (PlayerId p : defense) seen.insert(p);
    require_invariant(seen.size() == kPlayersOnCourt, "lineup_distinct",
                      "the 10 player identifiers must be distinct");
    if (roster_size > 0) {
        for (PlayerId p : seen) {
            require_invariant(p < roster_size, "lineup_roster_range",
                              "player " + std::to_string(p) + " >= roster size " +
                                  std::to_string(roster_size));
        }
    }
    return Lineup{offense, defense};
}

static void validate_moment(const Moment& m, CoordMode mode, std::size_t idx) {
    auto at = [&](const char* what, double value) {
        return std::string(what) + " = " + std::to_string(value) + " at moment " +
               std::to_string(idx);
    };
    for (double x : m.v) {
        require_invariant(std::isfinite(x), "moment_finite", at("component", x));
    }
    require_invariant(m.shot_clock() >= 0.0 && m.shot_clock() <= kShotClockSeconds,
                      "shot_clock_range", at("shot_clock", m.shot_clock()));
    require_invariant(m.ball_z() >= 0.0, "ball_height_nonnegative", at("z", m.ball_z()));
    if (mode == CoordMode::polar) {
        for (int i = 0; i < kPlayersOnCourt; ++i) {
            require_invariant(m.player_a(i) >= 0.0, "polar_radius_nonnegative",
                              at("player radius", m.player_a(i)));
        }
        require_invariant(m.ball_a() >= 0.0, "polar_radius_nonnegative",
                          at("ball radius", m.ball_a()));
    }
}

void validate_possession(const Possession& p, std::size_t roster_size) {
    require_invariant(!p.moments.empty(), "possession_nonempty");
    require_invariant(p.terminal != TerminalAction::Null, "terminal_action_not_null");
    require_invariant(p.terminal_index < p.moments.size(), "terminal_index_in_range",
                      std::to_string(p.terminal_index) + " >= n = " +
                          std::to_string(p.moments.size()));
    make_lineup(p.lineup.offense, p.lineup.defense, roster_size);
    for (std::size_t i = 0; i < p.moments.size(); ++i) {
        validate_moment(p.moments[i], p.coords, i);
    }
    for (const auto& e : p.events) {
        require_invariant(e.moment < p.moments.size(), "event_moment_in_range",
                          "event '" + e.tag + "' at " + std::to_string(e.moment));
    }
}

void OutcomeDistribution::validate() const {
    double sum = 0.0;
    for (double p : probs) {
        require_invariant(std::isfinite(p) && p >= 0.0 && p <= 1.0,
                          "probability_range", std::to_string(p));
        sum += p;
    }
    require_invariant(std::abs(sum - 1.0) <= 1e-12, "probability_sum",
                      "sum = " + std::to_string(sum));
}

}  // namespace courtcast
