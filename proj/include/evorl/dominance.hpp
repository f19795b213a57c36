#ifndef EVORL_DOMINANCE_HPP
#define EVORL_DOMINANCE_HPP

#include <span>

#include <evorl/core.hpp>

namespace evorl {

/// Plain Pareto dominance (maximization): a >= b on every id and a > b on
/// at least one. Irreflexive by construction.
inline bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                             std::span<const ObjectiveId> ids) {
    bool strictly_better = false;
    for (const auto& id : ids) {
        const double va = a.at(id);
        const double vb = b.at(id);
        if (va < vb) return false;
        if (va > vb) strictly_better = true;
    }
    return strictly_better;
}

inline bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                             const std::vector<ObjectiveId>& ids) {
    return pareto_dominates(a, b, std::span<const ObjectiveId>(ids));
}

/// Three-way lexicographic comparison of a and b over one complex
/// objective: the higher first component wins; ties fall through to the
/// next component.
inline Relation lex_compare(const ObjectiveVector& a, const ObjectiveVector& b,
                            const ComplexObjective& complex) {
    for (const auto& id : complex.components) {
        const double va = a.at(id);
        const double vb = b.at(id);
        if (va > vb) return Relation::FirstDominates;
        if (va < vb) return Relation::SecondDominates;
    }
    return Relation::Equal;
}

/// Prioritized dominance: Pareto dominance where each coordinate is a
/// complex objective under its lexicographic comparator. a dominates b iff
/// a is not worse under any complex and strictly better under at least one.
inline bool prioritized_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                                  std::span<const ComplexObjective> complexes) {
    if (complexes.empty())
        throw structural_error("prioritized dominance needs at least one complex objective");
    bool strictly_better = false;
    for (const auto& complex : complexes) {
        switch (lex_compare(a, b, complex)) {
            case Relation::SecondDominates: return false;
            case Relation::FirstDominates: strictly_better = true; break;
            default: break;
        }
    }
    return strictly_better;
}

inline bool prioritized_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                                  const std::vector<ComplexObjective>& complexes) {
    return prioritized_dominates(a, b, std::span<const ComplexObjective>(complexes));
}

/// Scalar score of the single-objective formulations. SOP1 projects onto
/// the performance objective; SOP2 sums the behavior scores, which are
/// expected to be normalized already (see normalize_objectives).
inline double scalarize(const ObjectiveVector& v, const FormulationSpec& f) {
    switch (f.kind) {
        case FormulationKind::SOP1:
            return v.at(f.perf_id);
        case FormulationKind::SOP2: {
            double sum = 0.0;
            for (const auto& id : f.behavior_ids) sum += v.at(id);
            return sum;
        }
        default:
            throw usage_error("scalarize is defined only for SOP1/SOP2, got " +
                              to_string(f.kind));
    }
}

/// One comparator for all five formulations. SOP kinds induce a total
/// order on the scalar score; MOP1/MOP3 use Pareto dominance over their id
/// sets; MOP2 uses prioritized dominance over the induced [perf, b] pairs.
inline DominanceResult compare(const ObjectiveVector& a, const ObjectiveVector& b,
                               const FormulationSpec& f) {
    if (f.single_objective()) {
        const double sa = scalarize(a, f);
        const double sb = scalarize(b, f);
        if (sa > sb) return {Relation::FirstDominates};
        if (sa < sb) return {Relation::SecondDominates};
        return {Relation::Equal};
    }
    if (f.kind == FormulationKind::MOP2) {
        const auto complexes = f.induced_complexes();
        if (prioritized_dominates(a, b, complexes)) return {Relation::FirstDominates};
        if (prioritized_dominates(b, a, complexes)) return {Relation::SecondDominates};
        for (const auto& c : complexes)
            if (lex_compare(a, b, c) != Relation::Equal) return {Relation::Incomparable};
        return {Relation::Equal};
    }
    const auto ids = f.comparison_ids();
    if (pareto_dominates(a, b, ids)) return {Relation::FirstDominates};
    if (pareto_dominates(b, a, ids)) return {Relation::SecondDominates};
    for (const auto& id : ids)
        if (a.at(id) != b.at(id)) return {Relation::Incomparable};
    return {Relation::Equal};
}

}  // namespace evorl

#endif  // EVORL_DOMINANCE_HPP
