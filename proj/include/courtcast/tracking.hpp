#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "courtcast/error.hpp"

namespace courtcast {

constexpr int kMomentDim = 24;        // 10 (x,y) pairs + ball (x,y,z) + shot clock
constexpr int kPlayersOnCourt = 10;   // 5 offense + 5 defense
constexpr int kNumActions = 5;        // four terminal actions + null
constexpr double kMomentsPerSecond = 25.0;
constexpr double kShotClockSeconds = 24.0;

using PlayerId = std::uint32_t;

enum class TerminalAction : int {
    FieldGoalAttempt = 0,
    ShootingFoul = 1,
    NonShootingFoul = 2,
    Turnover = 3,
    Null = 4,  // possession still in progress
};

std::string_view action_name(TerminalAction a);
TerminalAction action_from_name(std::string_view name);

enum class CoordMode { cartesian, polar };
enum class AttackDirection { left_basket, right_basket };

struct CourtGeometry {
    double length = 94.0;
    double width = 50.0;
    double basket_inset = 5.25;          // basket x-offset from each baseline
    double three_point_radius = 23.75;

    // Center of the basket the offense attacks.
    std::array<double, 2> basket(AttackDirection dir) const {
        double bx = dir == AttackDirection::left_basket ? basket_inset
                                                        : length - basket_inset;
        return {bx, width / 2.0};
    }
};

// One 25 Hz tracking snapshot, always exactly 24 scalars.
// Layout: players 0-4 offense, 5-9 defense, each an (x,y) pair (or (radius,
// angle) once polar); then ball x,y,z (or radius,angle,z); then shot clock.
struct Moment {
    std::array<double, kMomentDim> v{};

    double player_a(int i) const { return v[2 * i]; }
    double player_b(int i) const { return v[2 * i + 1]; }
    void set_player(int i, double a, double b) {
        v[2 * i] = a;
        v[2 * i + 1] = b;
    }
    double ball_a() const { return v[20]; }
    double ball_b() const { return v[21]; }
    double ball_z() const { return v[22]; }
    void set_ball(double a, double b, double z) {
        v[20] = a;
        v[21] = b;
        v[22] = z;
    }
    double shot_clock() const { return v[23]; }
    void set_shot_clock(double s) { v[23] = s; }

    bool operator==(const Moment&) const = default;
};

// Five offensive and five defensive player identifiers. Slots are stored
// sorted by identifier within each unit so input ordering is deterministic.
struct Lineup {
    std::array<PlayerId, 5> offense{};
    std::array<PlayerId, 5> defense{};

    // Slot order consumed by the embedding: offense 0-4, then defense 5-9.
    std::array<PlayerId, kPlayersOnCourt> slots() const;

    bool operator==(const Lineup&) const = default;
};

// Validates distinctness, sorts each unit. roster_size 0 skips the range check.
Lineup make_lineup(std::array<PlayerId, 5> offense, std::array<PlayerId, 5> defense,
                   std::size_t roster_size = 0);

// Free-form per-moment event annotation (e.g. "pass", "points=2").
struct EventTag {
    std::size_t moment = 0;
    std::string tag;

    bool operator==(const EventTag&) const = default;
};

struct Possession {
    std::uint64_t id = 0;
    AttackDirection attack = AttackDirection::right_basket;
    CoordMode coords = CoordMode::cartesian;
    Lineup lineup;
    TerminalAction terminal = TerminalAction::Turnover;
    std::size_t terminal_index = 0;
    std::vector<Moment> moments;
    std::vector<EventTag> events;

    std::size_t size() const { return moments.size(); }

    bool operator==(const Possession&) const = default;
};

// Invariant checks shared by constructors and the parser. Throws
// Error(ErrorKind::validation) with the violated invariant's name.
void validate_possession(const Possession& p, std::size_t roster_size = 0);

// A fixed-length slice of a possession ending one blind spot before the
// reference time, plus its outcome label.
struct Window {
    std::uint64_t possession_id = 0;
    std::size_t reference_time = 0;
    TerminalAction label = TerminalAction::Null;
    Lineup lineup;
    std::vector<Moment> frames;

    bool operator==(const Window&) const = default;
};

// Probability vector over the five terminal-action classes.
struct OutcomeDistribution {
    std::array<double, kNumActions> probs{};

    double operator[](TerminalAction a) const { return probs[static_cast<int>(a)]; }
    double& operator[](TerminalAction a) { return probs[static_cast<int>(a)]; }

    // Throws unless each entry is in [0,1] and the sum is 1 within 1e-12.
    void validate() const;

    bool operator==(const OutcomeDistribution&) const = default;
};

}  // namespace courtcast
