#ifndef EVORL_REWARD_HPP
#define EVORL_REWARD_HPP

#include <evorl/core.hpp>

namespace evorl {

using TaskId = std::string;

/// Weight bounds for the evolvable shaping genome.
inline constexpr double kWeightMin = 0.0;
inline constexpr double kWeightMax = 4.0;

/// The evolvable reward-shaping genome: one weight for the main goal and
/// one per auxiliary task, all in [kWeightMin, kWeightMax].
struct ShapingWeights {
    double w_perf = 1.0;
    std::vector<std::pair<TaskId, double>> aux;

    double aux_weight(const TaskId& id) const {
        for (const auto& [k, v] : aux)
            if (k == id) return v;
        throw structural_error("auxiliary task '" + id + "' missing from weights");
    }

    friend bool operator==(const ShapingWeights&, const ShapingWeights&) = default;
};

/// One step's raw reward signals: the main-goal reward plus one value per
/// auxiliary task, in the same task order as the weights.
struct RewardSample {
    double r_perf = 0.0;
    std::vector<std::pair<TaskId, double>> aux;
};

/// Shaped scalar reward: r_perf * w_perf + sum_i r_i * w_i.
inline double shaped_reward(const RewardSample& s, const ShapingWeights& w) {
    if (s.aux.size() != w.aux.size())
        throw structural_error("reward sample and weights disagree on task count");
    double total = s.r_perf * w.w_perf;
    for (std::size_t i = 0; i < s.aux.size(); ++i) {
        if (s.aux[i].first != w.aux[i].first)
            throw structural_error("reward sample task '" + s.aux[i].first +
                                   "' does not match weight task '" + w.aux[i].first + "'");
        total += s.aux[i].second * w.aux[i].second;
    }
    return total;
}

/// Per-objective min-max normalization over one population snapshot.
/// Values map into [0, 1]; a degenerate objective (max == min) maps
/// everything to 0.5. Order-preserving per objective.
inline std::vector<ObjectiveVector> normalize_objectives(
    const std::vector<ObjectiveVector>& raw) {
    if (raw.empty()) throw structural_error("normalize_objectives: empty population");

    std::vector<ObjectiveVector> out = raw;
    const std::size_t width = raw.front().size();
    for (const auto& v : raw) {
        if (v.size() != width)
            throw structural_error("normalize_objectives: ragged objective vectors");
        if (!v.finite())
            throw structural_error("normalize_objectives: non-finite raw value");
    }

    for (std::size_t k = 0; k < width; ++k) {
        const ObjectiveId& id = raw.front().scores[k].first;
        double lo = raw.front().at(id);
        double hi = lo;
        for (const auto& v : raw) {
            const double x = v.at(id);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const double x = raw[i].at(id);
            out[i].set(id, hi > lo ? (x - lo) / (hi - lo) : 0.5);
        }
    }
    return out;
}

}  // namespace evorl

#endif  // EVORL_REWARD_HPP
