#ifndef EVORL_SELECTION_HPP
#define EVORL_SELECTION_HPP

#include <evorl/pareto.hpp>

namespace evorl {

/// Diversity-preserving truncation of a population to n survivors,
/// returned as indices into `objs` sorted by `birth` (older first).
///
/// MOP kinds fill whole non-dominated fronts in order and truncate the
/// splitting front by descending crowding distance, computed on the flat
/// scalar ids underlying the formulation. SOP kinds keep the top n by
/// scalar score. All ties break deterministically by birth token (older
/// wins), so the result is permutation-invariant as long as tokens are
/// unique.
inline std::vector<std::size_t> diverse_select(const std::vector<ObjectiveVector>& objs,
                                               const std::vector<std::uint64_t>& birth,
                                               std::size_t n, const FormulationSpec& f) {
    if (objs.size() != birth.size())
        throw structural_error("diverse_select: objective/birth size mismatch");
    if (n < 1 || objs.size() < n)
        throw selection_error("diverse_select: need |pop| >= n >= 1, got |pop|=" +
                              std::to_string(objs.size()) + " n=" + std::to_string(n));

    std::vector<std::size_t> chosen;
    chosen.reserve(n);

    if (f.single_objective()) {
        std::vector<std::size_t> order(objs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<double> score(objs.size());
        for (std::size_t i = 0; i < objs.size(); ++i) score[i] = scalarize(objs[i], f);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (score[a] != score[b]) return score[a] > score[b];
            return birth[a] < birth[b];
        });
        chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
        const auto fronts = nondominated_sort(objs, f);
        const auto crowd_ids = f.crowding_ids();
        for (const auto& front : fronts) {
            if (chosen.size() == n) break;
            if (chosen.size() + front.size() <= n) {
                chosen.insert(chosen.end(), front.begin(), front.end());
                continue;
            }
            // Splitting front: keep the sparsest individuals.
            std::vector<ObjectiveVector> front_objs;
            front_objs.reserve(front.size());
            for (std::size_t i : front) front_objs.push_back(objs[i]);
            const auto dist = crowding_distance(front_objs, crowd_ids);

            std::vector<std::size_t> order(front.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (dist[a] != dist[b]) return dist[a] > dist[b];
                return birth[front[a]] < birth[front[b]];
            });
            const std::size_t need = n - chosen.size();
            for (std::size_t k = 0; k < need; ++k) chosen.push_back(front[order[k]]);
            break;
        }
    }

    std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
        if (birth[a] != birth[b]) return birth[a] < birth[b];
        return a < b;
    });
    return chosen;
}

}  // namespace evorl

#endif  // EVORL_SELECTION_HPP
