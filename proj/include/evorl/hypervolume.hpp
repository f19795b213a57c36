#ifndef EVORL_HYPERVOLUME_HPP
#define EVORL_HYPERVOLUME_HPP

#include <array>
#include <functional>

#include <evorl/dominance.hpp>

namespace evorl {

namespace detail {

/// Area of the union of rectangles [0, x_i] x [0, y_i], by a sweep over
/// points sorted by descending x. Dominated points fall out naturally
/// because the running y maximum already covers them.
inline double hv2d_points(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    double area = 0.0;
    double covered_y = 0.0;
    for (const auto& [x, y] : pts) {
        if (y > covered_y) {
            area += x * (y - covered_y);
            covered_y = y;
        }
    }
    return area;
}

/// Volume of the union of boxes [0, p] in 3D by slicing along the third
/// axis: between consecutive distinct z values the cross-section is a
/// fixed 2D union over the points whose z reaches the slab.
inline double hv3d_points(const std::vector<std::array<double, 3>>& pts) {
    std::vector<double> zs;
    zs.reserve(pts.size());
    for (const auto& p : pts) zs.push_back(p[2]);
    std::sort(zs.begin(), zs.end(), std::greater<>());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

    double volume = 0.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const double z_top = zs[k];
        const double z_bottom = (k + 1 < zs.size()) ? zs[k + 1] : 0.0;
        std::vector<std::pair<double, double>> slab;
        for (const auto& p : pts)
            if (p[2] >= z_top) slab.emplace_back(p[0], p[1]);
        volume += hv2d_points(std::move(slab)) * (z_top - z_bottom);
    }
    return volume;
}

}  // namespace detail

/// Exact hypervolume of the region dominated by `points` relative to the
/// origin (maximization, all values in [0, 1]). Supports two and three
/// objectives; dominated points never change the result.
inline double hypervolume(const std::vector<ObjectiveVector>& points,
                          std::span<const ObjectiveId> ids) {
    if (ids.size() != 2 && ids.size() != 3)
        throw dimension_error("hypervolume supports 2 or 3 objectives, got " +
                              std::to_string(ids.size()));
    for (const auto& p : points)
        for (const auto& id : ids) {
            const double v = p.at(id);
            if (!(v >= 0.0 && v <= 1.0))
                throw structural_error("hypervolume requires values in [0, 1]");
        }

    if (points.empty()) return 0.0;

    if (ids.size() == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(points.size());
        for (const auto& p : points) pts.emplace_back(p.at(ids[0]), p.at(ids[1]));
        return detail::hv2d_points(std::move(pts));
    }

    std::vector<std::array<double, 3>> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        pts.push_back({p.at(ids[0]), p.at(ids[1]), p.at(ids[2])});
    return detail::hv3d_points(pts);
}

inline double hypervolume(const std::vector<ObjectiveVector>& points,
                          const std::vector<ObjectiveId>& ids) {
    return hypervolume(points, std::span<const ObjectiveId>(ids));
}

}  // namespace evorl

#endif  // EVORL_HYPERVOLUME_HPP
