#ifndef EVORL_PARETO_HPP
#define EVORL_PARETO_HPP

#include <limits>
#include <numeric>

#include <evorl/dominance.hpp>

namespace evorl {

/// Fast non-dominated sorting (dominance counts plus adjacency lists).
/// Front 0 holds the maximal elements under compare(f); front k holds the
/// maximal elements once fronts < k are removed. Indices within a front
/// are ascending.
inline std::vector<std::vector<std::size_t>> nondominated_sort(
    const std::vector<ObjectiveVector>& pop, const FormulationSpec& f) {
    if (pop.empty()) throw structural_error("nondominated_sort: empty population");
    const std::size_t n = pop.size();

    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (compare(pop[i], pop[j], f).relation) {
                case Relation::FirstDominates:
                    dominated_by[i].push_back(j);
                    ++domination_count[j];
                    break;
                case Relation::SecondDominates:
                    dominated_by[j].push_back(i);
                    ++domination_count[i];
                    break;
                default:
                    break;
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

/// NSGA-II crowding distance over one front. Boundary points per objective
/// get +infinity; interior points accumulate the normalized side length of
/// the cuboid spanned by their neighbors. A degenerate objective
/// (max == min) contributes nothing.
inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front,
                                             std::span<const ObjectiveId> ids) {
    if (front.empty()) throw structural_error("crowding_distance: empty front");
    const std::size_t n = front.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (n <= 2) return std::vector<double>(n, inf);  // every point is a boundary point

    std::vector<double> dist(n, 0.0);
    std::vector<std::size_t> order(n);

    for (const auto& id : ids) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a].at(id) < front[b].at(id);
        });
        const double lo = front[order.front()].at(id);
        const double hi = front[order.back()].at(id);
        if (hi <= lo) continue;  // degenerate objective contributes nothing
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const std::size_t i = order[k];
            if (dist[i] == inf) continue;
            dist[i] += (front[order[k + 1]].at(id) - front[order[k - 1]].at(id)) / (hi - lo);
        }
    }
    return dist;
}

inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front,
                                             const std::vector<ObjectiveId>& ids) {
    return crowding_distance(front, std::span<const ObjectiveId>(ids));
}

}  // namespace evorl

#endif  // EVORL_PARETO_HPP
