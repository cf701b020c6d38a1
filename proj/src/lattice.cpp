#include "kagome/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace kagome {

namespace {

int abs_i(int v) { return v < 0 ? -v : v; }

// Euclidean mod with nonnegative result.
int mod_pos(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

std::string site_str(const SiteId& s) {
    return std::string(s.kind == SiteKind::X ? "X" : "Y") + "(a=" +
           std::to_string(s.row) + ", " +
           (s.kind == SiteKind::X ? "m=" : "r2=") + std::to_string(s.pos) + ")";
}

} // namespace

bool valid_site(const SiteId& s) {
    if (s.kind == SiteKind::X) return mod_pos(s.pos - s.row, 2) == 0; // m = a (mod 2)
    return mod_pos(s.pos, 2) == 1;                                    // r2 odd
}

bool Window::contains_x(int row, int m) const {
    return abs_i(row) <= max_abs_row && abs_i(m) <= max_abs_xpos;
}

bool Window::contains_y(int row, int r2) const {
    return abs_i(row) <= max_abs_row && abs_i(r2) <= 2 * max_abs_xpos + 3;
}

bool Window::contains_hexagon(int row, int m) const {
    return abs_i(row) <= max_abs_row && abs_i(row - 1) <= max_abs_row &&
           abs_i(m) <= max_abs_xpos && abs_i(m + 2) <= max_abs_xpos;
}

bool vacuum_occupied(const SiteId& s) {
    if (s.kind == SiteKind::X) {
        // Row a holds the Dirac sea shifted to start just right of |a|.
        return s.pos > abs_i(s.row);
    }
    // Y rows carry a two-site staggered filling ending at s = |2a+1|:
    // occupied at r2 = s, s-4, s-8, ...
    const int s_edge = abs_i(2 * s.row + 1);
    return s.pos <= s_edge && mod_pos(s.pos - s_edge, 4) == 0;
}

LatticeState::LatticeState(Window window, std::set<SiteId> flips)
    : window_(window), flips_(std::move(flips)) {
    for (const SiteId& s : flips_) {
        if (!valid_site(s))
            throw std::invalid_argument("malformed site " + site_str(s));
        // Flips must sit strictly inside the window so every hexagon read
        // across the viewport boundary still sees the analytic vacuum.
        bool interior = s.kind == SiteKind::X
                            ? (abs_i(s.row) <= window_.max_abs_row - 1 &&
                               abs_i(s.pos) <= window_.max_abs_xpos - 2)
                            : (abs_i(s.row) <= window_.max_abs_row - 1 &&
                               abs_i(s.pos) <= 2 * window_.max_abs_xpos + 1);
        if (!interior)
            throw WindowTooSmall("flip at " + site_str(s) + " not interior to window (rows " +
                                 std::to_string(window_.max_abs_row) + ", xpos " +
                                 std::to_string(window_.max_abs_xpos) + ")");
    }
}

bool LatticeState::occupied(const SiteId& s) const {
    return vacuum_occupied(s) != (flips_.count(s) > 0);
}

LatticeState LatticeState::with_toggled(const std::vector<SiteId>& sites) const {
    std::set<SiteId> next = flips_;
    for (const SiteId& s : sites) {
        auto it = next.find(s);
        if (it != next.end())
            next.erase(it);
        else
            next.insert(s);
    }
    return LatticeState(window_, std::move(next));
}

std::array<SiteId, 6> hexagon_sites(int a, int m) {
    return {y_site(a - 1, 2 * m + 1), y_site(a - 1, 2 * m + 3),
            x_site(a, m),             x_site(a, m + 2),
            y_site(a, 2 * m + 1),     y_site(a, 2 * m + 3)};
}

LatticeState vacuum_state(const Window& window) {
    if (window.max_abs_row < 2 || window.max_abs_xpos < 4)
        throw WindowTooSmall("vacuum needs rows >= 2 and xpos >= 4");
    return LatticeState(window, {});
}

HexagonConfig hexagon_at(const LatticeState& state, int a, int m) {
    if (mod_pos(m - a, 2) != 0)
        throw std::invalid_argument("hexagon position parity: need m = a (mod 2)");
    if (!state.window().contains_hexagon(a, m))
        throw WindowTooSmall("hexagon (a=" + std::to_string(a) + ", m=" + std::to_string(m) +
                             ") outside window");
    HexagonConfig cfg;
    const auto sites = hexagon_sites(a, m);
    for (int p = 0; p < 6; ++p) cfg.occ[p] = state.occupied(sites[p]);
    return cfg;
}

namespace {

const HexagonConfig kAddableCfg = {{true, false, false, true, true, false}};  // {1,4,5}
const HexagonConfig kRemovableCfg = {{false, true, true, false, false, true}}; // {2,3,6}

// Census read without the window guard: occupation is analytic everywhere, so
// scans may look one cell past the viewport.
HexagonConfig hexagon_unchecked(const LatticeState& state, int a, int m) {
    HexagonConfig cfg;
    const auto sites = hexagon_sites(a, m);
    for (int p = 0; p < 6; ++p) cfg.occ[p] = state.occupied(sites[p]);
    return cfg;
}

} // namespace

HexagonScanRange hexagon_scan_range(const Window& w) {
    // A flip on row b disturbs hexagons on rows b and b+1; an X flip at m
    // disturbs cells m and m-2; a Y flip at r2 disturbs cells (r2-1)/2 and
    // (r2-3)/2. With flips interior (|row| <= R-1, |m| <= X-2, |r2| <= 2X+1)
    // every disturbed cell lands inside the range below, as does the vacuum's
    // own marked cell (0, 0).
    return {-w.max_abs_row, w.max_abs_row, -w.max_abs_xpos - 2, w.max_abs_xpos + 2};
}

LatticeState flip_hexagon(const LatticeState& state, int a, int m, FlipDirection dir) {
    const HexagonConfig cfg = hexagon_at(state, a, m);
    const HexagonConfig& need = dir == FlipDirection::create ? kAddableCfg : kRemovableCfg;
    if (!(cfg == need))
        throw IllegalFlip(std::string(dir == FlipDirection::create ? "create" : "annihilate") +
                          " at (a=" + std::to_string(a) + ", m=" + std::to_string(m) +
                          "): hexagon not in the required class");
    const auto sites = hexagon_sites(a, m);
    return state.with_toggled({sites.begin(), sites.end()});
}

std::pair<int, int> box_hexagon(const BoxCoord& b) {
    return {b.j - b.i, b.i + b.j - 2 * b.k};
}

LatticeState partition_to_state(const PlanePartition& pp, const Window& window) {
    LatticeState state = vacuum_state(window);
    // One hexagon toggle per box; XOR composition makes the order immaterial.
    std::vector<SiteId> toggles;
    for (const BoxCoord& b : pp.boxes()) {
        auto [a, m] = box_hexagon(b);
        const auto sites = hexagon_sites(a, m);
        toggles.insert(toggles.end(), sites.begin(), sites.end());
    }
    return state.with_toggled(toggles); // constructor re-checks interiority
}

namespace {

// First box of the diagonal through hexagon (a, m): the unique box of the
// cell with one coordinate zero.
BoxCoord diagonal_base(int a, int m) {
    if (m >= abs_i(a)) return {(m - a) / 2, (m + a) / 2, 0};
    if (a >= 0) return {0, a, (a - m) / 2};
    return {-a, 0, -(a + m) / 2};
}

} // namespace

PlanePartition state_to_partition(const LatticeState& state) {
    // Strip boxes greedily: any box-removable hexagon corresponds to the top
    // box of some diagonal; annihilating it moves the state strictly toward
    // the vacuum. Physical states empty out completely.
    LatticeState work = state;
    std::map<std::pair<int, int>, int> diagonal_depth;
    // Iteration cap: one annihilation per box, and the window can hold at most
    // one diagonal per cell with depth bounded by the viewport extent.
    const std::size_t guard =
        static_cast<std::size_t>(2 * state.window().max_abs_row + 2) *
        static_cast<std::size_t>(2 * state.window().max_abs_xpos + 6);
    std::size_t peeled = 0;
    while (!work.flips().empty()) {
        if (peeled > guard)
            throw NotAPartitionState("peeling does not terminate");
        // Candidate cells: every hexagon touching a flipped site.
        std::set<std::pair<int, int>> cells;
        for (const SiteId& s : work.flips()) {
            if (s.kind == SiteKind::X) {
                cells.insert({s.row, s.pos});
                cells.insert({s.row, s.pos - 2});
            } else {
                for (int mm : {(s.pos - 1) / 2, (s.pos - 3) / 2}) {
                    cells.insert({s.row, mm});
                    cells.insert({s.row + 1, mm});
                }
            }
        }
        bool advanced = false;
        for (const auto& [a, m] : cells) {
            if (mod_pos(m - a, 2) != 0) continue;
            if (hexagon_unchecked(work, a, m) == kRemovableCfg) {
                const auto sites = hexagon_sites(a, m);
                work = work.with_toggled({sites.begin(), sites.end()});
                ++diagonal_depth[{a, m}];
                ++peeled;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw NotAPartitionState("no removable hexagon but state differs from vacuum");
    }

    std::vector<BoxCoord> boxes;
    for (const auto& [cell, depth] : diagonal_depth) {
        const BoxCoord base = diagonal_base(cell.first, cell.second);
        for (int t = 0; t < depth; ++t)
            boxes.push_back({base.i + t, base.j + t, base.k + t});
    }
    PlanePartition pp;
    try {
        pp = PlanePartition(std::move(boxes));
    } catch (const std::invalid_argument&) {
        throw NotAPartitionState("peeled boxes do not form a plane partition");
    }
    if (!(partition_to_state(pp, state.window()) == state))
        throw NotAPartitionState("round trip mismatch after peeling");
    return pp;
}

} // namespace kagome
