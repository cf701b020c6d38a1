#pragma once

#include <compare>
#include <vector>

#include "kagome/errors.hpp"

namespace kagome {

// One unit box of a plane partition, sitting in the first octant.
struct BoxCoord {
    int i = 0;
    int j = 0;
    int k = 0;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// Finite lower set in Z^3_{>=0}: if a box is present, so are its three
// predecessors (i-1,j,k), (i,j-1,k), (i,j,k-1) whenever their coordinates are
// nonnegative. Boxes are kept sorted lexicographically by (i,j,k).
class PlanePartition {
public:
    PlanePartition() = default;

    // Validates the lower-set property; throws std::invalid_argument otherwise.
    explicit PlanePartition(std::vector<BoxCoord> boxes);

    // Row-major stack heights: heights[i][j] = number of boxes over (i,j).
    // Rows may be jagged; entries must be weakly decreasing along rows and
    // down columns.
    static PlanePartition from_heights(const std::vector<std::vector<int>>& heights);
    std::vector<std::vector<int>> heights() const;

    const std::vector<BoxCoord>& boxes() const { return boxes_; }
    int box_count() const { return static_cast<int>(boxes_.size()); }
    bool empty() const { return boxes_.empty(); }
    bool contains(const BoxCoord& c) const;

    // Copies with one box added/removed; both validate the result.
    PlanePartition with_box(const BoxCoord& c) const;
    PlanePartition without_box(const BoxCoord& c) const;

    friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

private:
    std::vector<BoxCoord> boxes_; // sorted, duplicate-free
};

// Coordinates where a box may legally be added (result stays a lower set).
// Never empty; for the empty partition it is {(0,0,0)}.
std::vector<BoxCoord> addable_boxes(const PlanePartition& pp);

// Boxes that may be removed (no successor box rests on them).
std::vector<BoxCoord> removable_boxes(const PlanePartition& pp);

inline constexpr int kDefaultEnumerationBound = 12;

// All plane partitions with exactly n boxes, lexicographic in the sorted box
// list, duplicate-free. Throws BeyondBound when n exceeds the bound.
std::vector<PlanePartition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

// Coefficients of prod_{k>=1} (1 - q^k)^{-k} up to the requested order.
struct MacMahonSeries {
    std::vector<long long> coeffs; // coeffs[n] = number of n-box plane partitions
};
MacMahonSeries macmahon_coeffs(int n_max);

} // namespace kagome
