#pragma once

#include <array>
#include <compare>
#include <set>
#include <vector>

#include "kagome/errors.hpp"
#include "kagome/partitions.hpp"

namespace kagome {

enum class SiteKind { X, Y };

// Site address on the Kagome lattice.
//   X sites: pos = m, an integer with m = row (mod 2) — the rows zigzag.
//   Y sites: pos = r2, the doubled half-integer position (always odd), so the
//            physical coordinate is r = r2 / 2. Doubling keeps everything in
//            integer arithmetic.
struct SiteId {
    SiteKind kind = SiteKind::X;
    int row = 0;
    int pos = 0;
    friend auto operator<=>(const SiteId&, const SiteId&) = default;
};

inline SiteId x_site(int row, int m) { return {SiteKind::X, row, m}; }
inline SiteId y_site(int row, int r2) { return {SiteKind::Y, row, r2}; }

bool valid_site(const SiteId& s);

// Finite viewport. Occupation queries remain meaningful on the whole infinite
// lattice (outside the window the analytic vacuum pattern applies); the window
// only bounds where deviations from vacuum may live.
struct Window {
    int max_abs_row = 0;  // |a| <= max_abs_row
    int max_abs_xpos = 0; // X: |m| <= max_abs_xpos; Y: |r2| <= 2*max_abs_xpos + 3

    // Large enough for any state of up to n boxes, with interior margin.
    static Window for_boxes(int n) { return {n + 2, 2 * n + 4}; }

    bool contains_x(int row, int m) const;
    bool contains_y(int row, int r2) const;
    bool contains_hexagon(int row, int m) const; // both rows and both X ends inside

    friend auto operator<=>(const Window&, const Window&) = default;
};

// Occupation of the infinite-lattice zero-box vacuum at a single site.
//   X row a: occupied exactly for m > |a| (the shifted Dirac seas).
//   Y row a: with s = |2a+1|, occupied exactly when r2 <= s and r2 = s (mod 4)
//            (the staggered two-site pattern built from the fiducial pair).
bool vacuum_occupied(const SiteId& s);

// Immutable lattice state: the vacuum plus a finite set of flipped sites.
class LatticeState {
public:
    LatticeState() = default;
    LatticeState(Window window, std::set<SiteId> flips);

    const Window& window() const { return window_; }
    const std::set<SiteId>& flips() const { return flips_; }

    // vacuum pattern XOR membership in flips; valid for every site.
    bool occupied(const SiteId& s) const;

    LatticeState with_toggled(const std::vector<SiteId>& sites) const;

    friend auto operator<=>(const LatticeState&, const LatticeState&) = default;

private:
    Window window_;
    std::set<SiteId> flips_;
};

// Fixed six-site hexagon layout around cell (a, m):
//   pos1 = Y(a-1, 2m+1)   pos2 = Y(a-1, 2m+3)
//   pos3 = X(a,   m)      pos4 = X(a,   m+2)
//   pos5 = Y(a,   2m+1)   pos6 = Y(a,   2m+3)
struct HexagonConfig {
    std::array<bool, 6> occ{}; // occ[p-1] = position p occupied

    bool operator==(const HexagonConfig&) const = default;
    unsigned mask() const {
        unsigned m = 0;
        for (int p = 0; p < 6; ++p)
            if (occ[p]) m |= 1u << p;
        return m;
    }
};

// The six sites of hexagon (a, m), in position order 1..6.
std::array<SiteId, 6> hexagon_sites(int a, int m);

LatticeState vacuum_state(const Window& window); // needs at least rows 2 / xpos 4

HexagonConfig hexagon_at(const LatticeState& state, int a, int m);

enum class FlipDirection { create, annihilate };

// Toggle all six sites of hexagon (a, m). create requires the box-addable
// configuration {1,4,5}; annihilate requires the box-removable one {2,3,6}.
LatticeState flip_hexagon(const LatticeState& state, int a, int m, FlipDirection dir);

LatticeState partition_to_state(const PlanePartition& pp, const Window& window);

// Exact inverse of partition_to_state; anything unreachable by legal box
// flips raises NotAPartitionState.
PlanePartition state_to_partition(const LatticeState& state);

// Hexagon cell owning the space diagonal through box (i,j,k):
// a = j - i, m = i + j - 2k. All boxes along one diagonal share the cell.
std::pair<int, int> box_hexagon(const BoxCoord& b);

// Iteration range guaranteed to cover every hexagon that can deviate from the
// vacuum pattern (plus the vacuum's own marked cell at the origin), given that
// all flips are interior to the window.
struct HexagonScanRange {
    int row_lo, row_hi;   // inclusive
    int xpos_lo, xpos_hi; // inclusive; only m = row (mod 2) are cells
};
HexagonScanRange hexagon_scan_range(const Window& window);

} // namespace kagome
