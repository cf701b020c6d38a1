#include "kagome/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace kagome {

namespace {

void accumulate(WeightedStateSum& sum, const LatticeState& state, double amp) {
    if (amp == 0.0) return;
    auto [it, inserted] = sum.emplace(state, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second == 0.0) sum.erase(it);
    }
}

const HexagonConfig kAddable = {{true, false, false, true, true, false}};   // {1,4,5}
const HexagonConfig kRemovable = {{false, true, true, false, false, true}}; // {2,3,6}

HexagonConfig read_hexagon(const LatticeState& state, int a, int m) {
    HexagonConfig cfg;
    const auto sites = hexagon_sites(a, m);
    for (int p = 0; p < 6; ++p) cfg.occ[p] = state.occupied(sites[p]);
    return cfg;
}

template <typename Fn>
void for_each_cell(const LatticeState& state, Fn&& fn) {
    const HexagonScanRange r = hexagon_scan_range(state.window());
    for (int a = r.row_lo; a <= r.row_hi; ++a) {
        int m0 = r.xpos_lo + (((a - r.xpos_lo) % 2) + 2) % 2; // first m = a (mod 2)
        for (int m = m0; m <= r.xpos_hi; m += 2) fn(a, m);
    }
}

} // namespace

double fermionic_pair_amplitude(const LatticeState& state, SiteKind kind, int row,
                                int src_pos, int dst_pos) {
    if (src_pos == dst_pos) throw std::invalid_argument("pair endpoints coincide");
    const int step = kind == SiteKind::X ? 2 : 2; // X spacing 2 in m; Y spacing 2 in r2
    if ((dst_pos - src_pos) % step != 0)
        throw std::invalid_argument("pair endpoints not on one chain");
    auto site = [&](int pos) { return SiteId{kind, row, pos}; };
    if (!state.occupied(site(src_pos)) || state.occupied(site(dst_pos))) return 0.0;
    int between = 0;
    const int lo = std::min(src_pos, dst_pos);
    const int hi = std::max(src_pos, dst_pos);
    for (int pos = lo + step; pos < hi; pos += step)
        if (state.occupied(site(pos))) ++between;
    return between % 2 == 0 ? 1.0 : -1.0;
}

int count_addable(const LatticeState& state) {
    int n = 0;
    for_each_cell(state, [&](int a, int m) {
        if (read_hexagon(state, a, m) == kAddable) ++n;
    });
    return n;
}

int count_removable(const LatticeState& state) {
    int n = 0;
    for_each_cell(state, [&](int a, int m) {
        if (read_hexagon(state, a, m) == kRemovable) ++n;
    });
    return n;
}

namespace {

// Hop the hexagon (a, m) in the given direction through the three chain pairs
// of the six-fermion string. Returns 0 amplitude when any factor annihilates.
// create: Y rows a and a-1 move r -> r+1, X row a moves m+2 -> m.
// annihilate: the reverse.
double hexagon_string_amplitude(const LatticeState& state, int a, int m, FlipDirection dir) {
    const int r_lo = 2 * m + 1, r_hi = 2 * m + 3;
    double amp = 1.0;
    if (dir == FlipDirection::create) {
        amp *= fermionic_pair_amplitude(state, SiteKind::Y, a, r_lo, r_hi);
        if (amp == 0.0) return 0.0;
        amp *= fermionic_pair_amplitude(state, SiteKind::Y, a - 1, r_lo, r_hi);
        if (amp == 0.0) return 0.0;
        amp *= fermionic_pair_amplitude(state, SiteKind::X, a, m + 2, m);
    } else {
        amp *= fermionic_pair_amplitude(state, SiteKind::Y, a, r_hi, r_lo);
        if (amp == 0.0) return 0.0;
        amp *= fermionic_pair_amplitude(state, SiteKind::Y, a - 1, r_hi, r_lo);
        if (amp == 0.0) return 0.0;
        amp *= fermionic_pair_amplitude(state, SiteKind::X, a, m, m + 2);
    }
    return amp;
}

WeightedStateSum apply_string(const LatticeState& state, FlipDirection dir) {
    WeightedStateSum out;
    for_each_cell(state, [&](int a, int m) {
        const double amp = hexagon_string_amplitude(state, a, m, dir);
        if (amp == 0.0) return;
        const auto sites = hexagon_sites(a, m);
        accumulate(out, state.with_toggled({sites.begin(), sites.end()}), amp);
    });
    return out;
}

} // namespace

WeightedStateSum apply_create(const LatticeState& state) {
    return apply_string(state, FlipDirection::create);
}

WeightedStateSum apply_annihilate(const LatticeState& state) {
    return apply_string(state, FlipDirection::annihilate);
}

WeightedStateSum hamiltonian_action(const LatticeState& state, const CouplingParams& p) {
    if (!(p.q > 0.0)) throw std::invalid_argument("q must be positive");
    WeightedStateSum out;
    if (p.J != 0.0) {
        for (const auto& [img, amp] : apply_create(state)) accumulate(out, img, -p.J * amp);
        for (const auto& [img, amp] : apply_annihilate(state)) accumulate(out, img, -p.J * amp);
    }
    const double rq = std::sqrt(p.q);
    const double diag = p.V * rq * count_addable(state) + (p.V / rq) * count_removable(state);
    accumulate(out, state, diag);
    return out;
}

namespace {

// z eigenvalue: occupied = up = +1/2.
double zval(const LatticeState& state, const SiteId& s) {
    return state.occupied(s) ? 0.5 : -0.5;
}

// The diagonal bracket  z_first/2 - z_second/2 - z_first z_second + 1/4,
// which is 1 exactly on (up, down) and 0 on the other three configurations —
// but evaluated arithmetically, not by branching.
double bracket(const LatticeState& state, const SiteId& first, const SiteId& second) {
    const double z1 = zval(state, first), z2 = zval(state, second);
    return 0.5 * (z1 - z2) - z1 * z2 + 0.25;
}

// Apply a product of raising/lowering factors right-to-left on occupation
// bits. raise kills an occupied site, lower kills an empty one; no string
// signs appear in this spin form.
struct SpinFactor {
    SiteId site;
    bool raise; // true: down->up, false: up->down
};

bool apply_spin_product(const LatticeState& in, const std::vector<SpinFactor>& factors,
                        LatticeState& out) {
    std::vector<SiteId> toggles;
    for (const SpinFactor& f : factors) {
        // All Hamiltonian strings touch six distinct sites, so occupation can
        // be read from the input state directly.
        const bool occ = in.occupied(f.site);
        if (f.raise == occ) return false;
        toggles.push_back(f.site);
    }
    out = in.with_toggled(toggles);
    return true;
}

} // namespace

WeightedStateSum jw_hamiltonian_action(const LatticeState& state, const CouplingParams& p) {
    if (!(p.q > 0.0)) throw std::invalid_argument("q must be positive");
    WeightedStateSum out;
    const double rq = std::sqrt(p.q);
    for_each_cell(state, [&](int a, int m) {
        const SiteId yr = y_site(a, 2 * m + 1), yr1 = y_site(a, 2 * m + 3);
        const SiteId pr = y_site(a - 1, 2 * m + 1), pr1 = y_site(a - 1, 2 * m + 3);
        const SiteId xm = x_site(a, m), xm2 = x_site(a, m + 2);

        LatticeState img;
        // tau+_r tau-_{r+1} on both Y rows with chi+_{m+2} chi-_m: box removal.
        if (apply_spin_product(state,
                               {{yr, true}, {yr1, false}, {pr, true}, {pr1, false},
                                {xm2, true}, {xm, false}},
                               img))
            accumulate(out, img, -p.J);
        // The reversed product: box creation.
        if (apply_spin_product(state,
                               {{yr, false}, {yr1, true}, {pr, false}, {pr1, true},
                                {xm2, false}, {xm, true}},
                               img))
            accumulate(out, img, -p.J);
        // Diagonal bracket products (the -V sqrt(q)/J and -V/(J sqrt(q)) terms
        // of the spin form, with the overall -J already multiplied through so
        // J = 0 stays well-defined).
        const double add_proj =
            bracket(state, yr, yr1) * bracket(state, pr, pr1) * bracket(state, xm2, xm);
        const double rem_proj =
            bracket(state, yr1, yr) * bracket(state, pr1, pr) * bracket(state, xm, xm2);
        accumulate(out, state, p.V * rq * add_proj + (p.V / rq) * rem_proj);
    });
    return out;
}

} // namespace kagome
