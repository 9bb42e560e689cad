#pragma once

#include <array>
#include <iosfwd>
#include <span>

#include "courtcast/tracking.hpp"

namespace courtcast {

// Mean squared probability error over all classes:
//   BS = (1/N) sum_i sum_r (f_ir - o_ir)^2
// with o the one-hot truth. Range [0, 2].
double brier_score(std::span<const OutcomeDistribution> predictions,
                   std::span<const TerminalAction> labels);

// Baseline predictor: empirical class frequencies of the given labels.
OutcomeDistribution climatology(std::span<const TerminalAction> labels);

// BSS = 1 - BS / BS_ref. 1 for perfect calibration, 0 for no skill over the
// reference, negative below it. bs_ref must be positive.
double brier_skill_score(double bs, double bs_ref);

constexpr int kReliabilityBins = 20;
constexpr double kReliabilityBinWidth = 0.05;

struct ReliabilityBin {
    std::size_t count = 0;
    double mean_pred = 0.0;  // meaningful only when count > 0
    double frac = 0.0;       // empirical occurrence fraction, only when count > 0
};

// Per class, 20 half-open bins [low, low+0.05) over predicted probability;
// the top bin is closed at 1. Empty bins keep count 0 rather than fabricated
// values.
struct ReliabilityCurve {
    std::array<std::array<ReliabilityBin, kReliabilityBins>, kNumActions> bins{};
    std::size_t samples = 0;

    static int bin_index(double p);
};

ReliabilityCurve reliability_curve(std::span<const OutcomeDistribution> predictions,
                                   std::span<const TerminalAction> labels);

// Columnar text export: class bin_low bin_high count mean_pred frac
// (nan for the empty-bin fields).
void write_reliability_curve(std::ostream& out, const ReliabilityCurve& curve);

}  // namespace courtcast
