#include "sfrope/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sfrope {

namespace {
// Cap the grid resolution so the dense CSR stays small (64^3 cells).
constexpr int kMaxDim = 64;
} // namespace

PointGrid::PointGrid(const std::vector<UnitVec>& pts, double cell_hint) : pts_(pts) {
    if (pts.empty()) throw OutOfRangeError("PointGrid needs at least one point");
    cell_ = std::max(cell_hint, 2.0 / kMaxDim);
    if (!(cell_ > 0.0) || !std::isfinite(cell_)) cell_ = 2.0;
    dim_ = std::max(1, std::min(kMaxDim, int(std::ceil(2.0 / cell_))));
    cell_ = 2.0 / dim_; // snap so the grid exactly tiles [-1,1]
    std::size_t ncells = std::size_t(dim_) * dim_ * dim_;
    offsets_.assign(ncells + 1, 0);
    std::vector<std::uint32_t> where(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3& p = pts[i].vec();
        std::size_t ci = cell_index(coord(p.x), coord(p.y), coord(p.z));
        where[i] = std::uint32_t(ci);
        ++offsets_[ci + 1];
    }
    for (std::size_t c = 0; c < ncells; ++c) offsets_[c + 1] += offsets_[c];
    items_.resize(pts.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) items_[cursor[where[i]]++] = std::uint32_t(i);
}

int PointGrid::coord(double v) const {
    int c = int(std::floor((v + 1.0) / cell_));
    return std::clamp(c, 0, dim_ - 1);
}

void PointGrid::collect_within(const Vec3& q, double r, std::vector<std::uint32_t>& out) const {
    double r2 = r * r;
    int x0 = coord(q.x - r), x1 = coord(q.x + r);
    int y0 = coord(q.y - r), y1 = coord(q.y + r);
    int z0 = coord(q.z - r), z1 = coord(q.z + r);
    for (int ix = x0; ix <= x1; ++ix)
        for (int iy = y0; iy <= y1; ++iy)
            for (int iz = z0; iz <= z1; ++iz) {
                std::size_t c = cell_index(ix, iy, iz);
                for (std::uint32_t t = offsets_[c]; t < offsets_[c + 1]; ++t) {
                    std::uint32_t idx = items_[t];
                    if ((pts_[idx].vec() - q).norm_sq() <= r2) out.push_back(idx);
                }
            }
}

std::pair<double, std::uint32_t> PointGrid::nearest_sq(const Vec3& q) const {
    int cx = coord(q.x), cy = coord(q.y), cz = coord(q.z);
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_idx = 0;
    int max_ring = dim_; // scanning every cell is the worst case
    for (int ring = 0; ring <= max_ring; ++ring) {
        // points in cells at Chebyshev distance `ring` are at least
        // (ring - 1) * cell away in Euclidean distance
        if (ring >= 2) {
            double lb = (ring - 1) * cell_;
            if (best <= lb * lb) break;
        }
        int x0 = std::max(0, cx - ring), x1 = std::min(dim_ - 1, cx + ring);
        int y0 = std::max(0, cy - ring), y1 = std::min(dim_ - 1, cy + ring);
        int z0 = std::max(0, cz - ring), z1 = std::min(dim_ - 1, cz + ring);
        for (int ix = x0; ix <= x1; ++ix)
            for (int iy = y0; iy <= y1; ++iy)
                for (int iz = z0; iz <= z1; ++iz) {
                    // shell only: skip the interior already visited
                    if (ring > 0 && std::max({std::abs(ix - cx), std::abs(iy - cy),
                                              std::abs(iz - cz)}) != ring)
                        continue;
                    std::size_t c = cell_index(ix, iy, iz);
                    for (std::uint32_t t = offsets_[c]; t < offsets_[c + 1]; ++t) {
                        std::uint32_t idx = items_[t];
                        double d2 = (pts_[idx].vec() - q).norm_sq();
                        if (d2 < best) { best = d2; best_idx = idx; }
                    }
                }
        if (ring == max_ring) break;
    }
    return {best, best_idx};
}

} // namespace sfrope
