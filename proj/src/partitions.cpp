#include "kagome/partitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace kagome {

namespace {

bool is_lower_set(const std::vector<BoxCoord>& sorted_boxes) {
    auto present = [&](const BoxCoord& c) {
        return std::binary_search(sorted_boxes.begin(), sorted_boxes.end(), c);
    };
    for (const BoxCoord& b : sorted_boxes) {
        if (b.i < 0 || b.j < 0 || b.k < 0) return false;
        if (b.i > 0 && !present({b.i - 1, b.j, b.k})) return false;
        if (b.j > 0 && !present({b.i, b.j - 1, b.k})) return false;
        if (b.k > 0 && !present({b.i, b.j, b.k - 1})) return false;
    }
    return true;
}

} // namespace

PlanePartition::PlanePartition(std::vector<BoxCoord> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
        throw std::invalid_argument("duplicate box");
    if (!is_lower_set(boxes_))
        throw std::invalid_argument("box set violates the lower-set property");
}

PlanePartition PlanePartition::from_heights(const std::vector<std::vector<int>>& heights) {
    std::vector<BoxCoord> boxes;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        const auto& row = heights[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            int h = row[j];
            if (h < 0) throw std::invalid_argument("negative stack height");
            if (j + 1 < row.size() && row[j + 1] > h)
                throw std::invalid_argument("heights increase along a row");
            if (i + 1 < heights.size() && j < heights[i + 1].size() && heights[i + 1][j] > h)
                throw std::invalid_argument("heights increase down a column");
            for (int k = 0; k < h; ++k)
                boxes.push_back({static_cast<int>(i), static_cast<int>(j), k});
        }
    }
    return PlanePartition(std::move(boxes));
}

std::vector<std::vector<int>> PlanePartition::heights() const {
    std::map<std::pair<int, int>, int> stack;
    int rows = 0;
    for (const BoxCoord& b : boxes_) {
        ++stack[{b.i, b.j}];
        rows = std::max(rows, b.i + 1);
    }
    std::vector<std::vector<int>> out(rows);
    for (const auto& [ij, h] : stack) {
        auto& row = out[ij.first];
        if (static_cast<int>(row.size()) <= ij.second) row.resize(ij.second + 1, 0);
        row[ij.second] = h;
    }
    return out;
}

bool PlanePartition::contains(const BoxCoord& c) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), c);
}

PlanePartition PlanePartition::with_box(const BoxCoord& c) const {
    if (contains(c)) throw std::invalid_argument("box already present");
    std::vector<BoxCoord> next = boxes_;
    next.push_back(c);
    return PlanePartition(std::move(next));
}

PlanePartition PlanePartition::without_box(const BoxCoord& c) const {
    std::vector<BoxCoord> next;
    next.reserve(boxes_.size());
    for (const BoxCoord& b : boxes_)
        if (!(b == c)) next.push_back(b);
    if (next.size() == boxes_.size())
        throw std::invalid_argument("box not present");
    return PlanePartition(std::move(next));
}

std::vector<BoxCoord> addable_boxes(const PlanePartition& pp) {
    // Candidates: the origin plus every +1 neighbor of an existing box.
    std::vector<BoxCoord> cand = {{0, 0, 0}};
    for (const BoxCoord& b : pp.boxes()) {
        cand.push_back({b.i + 1, b.j, b.k});
        cand.push_back({b.i, b.j + 1, b.k});
        cand.push_back({b.i, b.j, b.k + 1});
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<BoxCoord> out;
    for (const BoxCoord& c : cand) {
        if (pp.contains(c)) continue;
        bool ok = (c.i == 0 || pp.contains({c.i - 1, c.j, c.k})) &&
                  (c.j == 0 || pp.contains({c.i, c.j - 1, c.k})) &&
                  (c.k == 0 || pp.contains({c.i, c.j, c.k - 1}));
        if (ok) out.push_back(c);
    }
    return out; // already sorted
}

std::vector<BoxCoord> removable_boxes(const PlanePartition& pp) {
    std::vector<BoxCoord> out;
    for (const BoxCoord& b : pp.boxes()) {
        bool blocked = pp.contains({b.i + 1, b.j, b.k}) ||
                       pp.contains({b.i, b.j + 1, b.k}) ||
                       pp.contains({b.i, b.j, b.k + 1});
        if (!blocked) out.push_back(b);
    }
    return out;
}

std::vector<PlanePartition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw std::invalid_argument("negative box count");
    if (n > bound)
        throw BeyondBound("enumeration request n=" + std::to_string(n) +
                          " exceeds bound " + std::to_string(bound));

    // Breadth-first growth from the empty partition. A child is emitted only
    // from its canonical parent: the one obtained by deleting the
    // lexicographically smallest removable box. This yields each partition
    // exactly once without a global visited set.
    std::vector<PlanePartition> level = {PlanePartition{}};
    for (int depth = 0; depth < n; ++depth) {
        std::vector<PlanePartition> next;
        for (const PlanePartition& pp : level) {
            for (const BoxCoord& c : addable_boxes(pp)) {
                PlanePartition child = pp.with_box(c);
                std::vector<BoxCoord> rem = removable_boxes(child);
                if (*std::min_element(rem.begin(), rem.end()) == c)
                    next.push_back(std::move(child));
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

MacMahonSeries macmahon_coeffs(int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative order");
    // Multiply out prod_k (1-q^k)^{-k} in exact integer arithmetic. Each
    // factor (1-q^k)^{-1} is a stride-k running sum over the coefficients.
    std::vector<long long> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int rep = 0; rep < k; ++rep)
            for (int idx = k; idx <= n_max; ++idx)
                c[idx] += c[idx - k];
    return MacMahonSeries{std::move(c)};
}

} // namespace kagome
