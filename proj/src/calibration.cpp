#include "courtcast/calibration.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace courtcast {

double brier_score(std::span<const OutcomeDistribution> predictions,
                   std::span<const TerminalAction> labels) {
    require(predictions.size() == labels.size(), ErrorKind::config,
            "brier_score: " + std::to_string(predictions.size()) + " predictions vs " +
                std::to_string(labels.size()) + " labels");
    require(!predictions.empty(), ErrorKind::config, "brier_score: empty input");
    double total = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        predictions[i].validate();
        for (int r = 0; r < kNumActions; ++r) {
            double o = static_cast<int>(labels[i]) == r ? 1.0 : 0.0;
            double d = predictions[i].probs[r] - o;
            total += d * d;
        }
    }
    return total / static_cast<double>(predictions.size());
}

OutcomeDistribution climatology(std::span<const TerminalAction> labels) {
    require(!labels.empty(), ErrorKind::config, "climatology: empty labels");
    OutcomeDistribution dist;
    for (TerminalAction a : labels) dist.probs[static_cast<int>(a)] += 1.0;
    for (double& p : dist.probs) p /= static_cast<double>(labels.size());
    return dist;
}

double brier_skill_score(double bs, double bs_ref) {
    require(bs_ref > 0.0, ErrorKind::numeric,
            "brier_skill_score: undefined for reference score " + std::to_string(bs_ref));
    return 1.0 - bs / bs_ref;
}

int ReliabilityCurve::bin_index(double p) {
    int idx = static_cast<int>(p / kReliabilityBinWidth);
    if (idx >= kReliabilityBins) idx = kReliabilityBins - 1;  // top bin closed at 1
    if (idx < 0) idx = 0;
    return idx;
}

ReliabilityCurve reliability_curve(std::span<const OutcomeDistribution> predictions,
                                   std::span<const TerminalAction> labels) {
    require(predictions.size() == labels.size(), ErrorKind::config,
            "reliability_curve: prediction/label length mismatch");
    require(!predictions.empty(), ErrorKind::config, "reliability_curve: empty input");

    std::array<std::array<double, kReliabilityBins>, kNumActions> pred_sum{};
    std::array<std::array<double, kReliabilityBins>, kNumActions> hit_sum{};
    ReliabilityCurve curve;
    curve.samples = predictions.size();
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        predictions[i].validate();
        for (int c = 0; c < kNumActions; ++c) {
            double p = predictions[i].probs[c];
            int b = ReliabilityCurve::bin_index(p);
            curve.bins[c][b].count += 1;
            pred_sum[c][b] += p;
            hit_sum[c][b] += static_cast<int>(labels[i]) == c ? 1.0 : 0.0;
        }
    }
    for (int c = 0; c < kNumActions; ++c) {
        for (int b = 0; b < kReliabilityBins; ++b) {
            auto& bin = curve.bins[c][b];
            if (bin.count > 0) {
                bin.mean_pred = pred_sum[c][b] / static_cast<double>(bin.count);
                bin.frac = hit_sum[c][b] / static_cast<double>(bin.count);
            }
        }
    }
    return curve;
}

void write_reliability_curve(std::ostream& out, const ReliabilityCurve& curve) {
    out << "class bin_low bin_high count mean_pred frac\n";
    for (int c = 0; c < kNumActions; ++c) {
        for (int b = 0; b < kReliabilityBins; ++b) {
            const auto& bin = curve.bins[c][b];
            out << action_name(static_cast<TerminalAction>(c)) << ' '
                << b * kReliabilityBinWidth << ' ' << (b + 1) * kReliabilityBinWidth
                << ' ' << bin.count << ' ';
            if (bin.count > 0) {
                out << bin.mean_pred << ' ' << bin.frac << '\n';
            } else {
                out << "nan nan\n";
            }
        }
    }
}

}  // namespace courtcast
