#ifndef SFROPE_SPATIAL_GRID_HPP
#define SFROPE_SPATIAL_GRID_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sfrope/geom.hpp"

namespace sfrope {

/// Uniform 3D grid over [-1,1]^3 for points on the unit sphere, stored CSR.
/// Supports exact fixed-radius and nearest-point queries in chord metric
/// (monotone in the geodesic metric, so "nearest" agrees).
class PointGrid {
public:
    PointGrid(const std::vector<UnitVec>& pts, double cell_hint);

    /// Indices of all points with |p - q| <= r, appended to `out` (unsorted).
    void collect_within(const Vec3& q, double r, std::vector<std::uint32_t>& out) const;

    /// Exact nearest point: (squared chord distance, index). The ring search
    /// never stops before the true minimum, so the result equals a full scan.
    std::pair<double, std::uint32_t> nearest_sq(const Vec3& q) const;

    double cell_size() const { return cell_; }

private:
    int coord(double v) const;
    std::size_t cell_index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * dim_ + iy) * dim_ + iz;
    }

    const std::vector<UnitVec>& pts_;
    double cell_;
    int dim_;
    std::vector<std::uint32_t> offsets_; // dim^3 + 1
    std::vector<std::uint32_t> items_;
};

} // namespace sfrope

#endif
