#ifndef EVORL_CORE_HPP
#define EVORL_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace evorl {

// Error taxonomy. Structural errors are malformed data (mismatched
// objective sets, bad vector widths); usage errors are contract
// violations at the call site (stepping a finished game, scalarizing a
// multi-objective formulation).
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct usage_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct selection_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ObjectiveId = std::string;

/// A named score vector. Entries keep a fixed order so that vectors from
/// one population can be compared positionally after an id check.
/// Values are maximized and expected to lie in [0, 1].
struct ObjectiveVector {
    std::vector<std::pair<ObjectiveId, double>> scores;

    ObjectiveVector() = default;
    ObjectiveVector(std::initializer_list<std::pair<ObjectiveId, double>> init)
        : scores(init) {}

    std::size_t size() const { return scores.size(); }
    bool empty() const { return scores.empty(); }

    bool has(const ObjectiveId& id) const {
        for (const auto& [k, v] : scores)
            if (k == id) return true;
        return false;
    }

    double at(const ObjectiveId& id) const {
        for (const auto& [k, v] : scores)
            if (k == id) return v;
        throw structural_error("objective '" + id + "' missing from vector");
    }

    void set(const ObjectiveId& id, double value) {
        for (auto& [k, v] : scores) {
            if (k == id) {
                v = value;
                return;
            }
        }
        scores.emplace_back(id, value);
    }

    std::vector<ObjectiveId> ids() const {
        std::vector<ObjectiveId> out;
        out.reserve(scores.size());
        for (const auto& [k, v] : scores) out.push_back(k);
        return out;
    }

    bool finite() const {
        for (const auto& [k, v] : scores)
            if (!std::isfinite(v)) return false;
        return true;
    }

    friend bool operator==(const ObjectiveVector& a, const ObjectiveVector& b) {
        return a.scores == b.scores;
    }
};

enum class Relation { FirstDominates, SecondDominates, Incomparable, Equal };

struct DominanceResult {
    Relation relation = Relation::Incomparable;

    friend bool operator==(const DominanceResult&, const DominanceResult&) = default;
};

inline DominanceResult mirrored(DominanceResult r) {
    switch (r.relation) {
        case Relation::FirstDominates: return {Relation::SecondDominates};
        case Relation::SecondDominates: return {Relation::FirstDominates};
        default: return r;
    }
}

/// A priority-ordered tuple of objective ids, compared lexicographically
/// (highest priority first).
struct ComplexObjective {
    std::vector<ObjectiveId> components;

    void validate() const {
        if (components.empty())
            throw structural_error("complex objective must be non-empty");
        for (std::size_t i = 0; i < components.size(); ++i)
            for (std::size_t j = i + 1; j < components.size(); ++j)
                if (components[i] == components[j])
                    throw structural_error("duplicate objective id '" + components[i] +
                                           "' in complex objective");
    }
};

enum class FormulationKind { SOP1, SOP2, MOP1, MOP2, MOP3 };

inline std::string to_string(FormulationKind k) {
    switch (k) {
        case FormulationKind::SOP1: return "SOP1";
        case FormulationKind::SOP2: return "SOP2";
        case FormulationKind::MOP1: return "MOP1";
        case FormulationKind::MOP2: return "MOP2";
        case FormulationKind::MOP3: return "MOP3";
    }
    return "?";
}

inline FormulationKind formulation_from_string(const std::string& s) {
    if (s == "SOP1") return FormulationKind::SOP1;
    if (s == "SOP2") return FormulationKind::SOP2;
    if (s == "MOP1") return FormulationKind::MOP1;
    if (s == "MOP2") return FormulationKind::MOP2;
    if (s == "MOP3") return FormulationKind::MOP3;
    throw config_error("unknown formulation '" + s + "'");
}

/// Which optimization problem governs comparison and selection.
///
///   SOP1  maximize perf alone
///   SOP2  maximize the sum of normalized behavior scores
///   MOP1  Pareto dominance over the behavior objectives
///   MOP2  prioritized dominance over [perf, b] pairs, one per behavior
///   MOP3  Pareto dominance over perf plus all behaviors
struct FormulationSpec {
    FormulationKind kind = FormulationKind::MOP3;
    std::vector<ObjectiveId> behavior_ids;
    ObjectiveId perf_id = "perf";

    bool single_objective() const {
        return kind == FormulationKind::SOP1 || kind == FormulationKind::SOP2;
    }

    /// Ids consulted by the formulation's comparator.
    std::vector<ObjectiveId> comparison_ids() const {
        switch (kind) {
            case FormulationKind::SOP1: return {perf_id};
            case FormulationKind::SOP2:
            case FormulationKind::MOP1: return behavior_ids;
            case FormulationKind::MOP2:
            case FormulationKind::MOP3: {
                std::vector<ObjectiveId> out{perf_id};
                out.insert(out.end(), behavior_ids.begin(), behavior_ids.end());
                return out;
            }
        }
        return {};
    }

    /// Flat scalar ids used for crowding-distance truncation. MOP2 crowds
    /// on the underlying scalars, not on the lexicographic pairs.
    std::vector<ObjectiveId> crowding_ids() const {
        switch (kind) {
            case FormulationKind::MOP1: return behavior_ids;
            default: return comparison_ids();
        }
    }

    /// MOP2's induced complex objectives: one [perf, b] per behavior b.
    std::vector<ComplexObjective> induced_complexes() const {
        std::vector<ComplexObjective> out;
        out.reserve(behavior_ids.size());
        for (const auto& b : behavior_ids)
            out.push_back(ComplexObjective{{perf_id, b}});
        return out;
    }
};

}  // namespace evorl

#endif  // EVORL_CORE_HPP
