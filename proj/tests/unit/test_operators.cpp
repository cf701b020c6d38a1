#include <doctest.h>

#include <cmath>
#include <set>

#include "kagome/operators.hpp"
#include "kagome/spectra.hpp"

using namespace kagome;

namespace {

void check_sums_equal(const WeightedStateSum& a, const WeightedStateSum& b, double tol) {
    std::set<LatticeState> keys;
    for (const auto& [s, w] : a)
        keys.insert(s);
    for (const auto& [s, w] : b)
        keys.insert(s);
    for (const auto& s : keys) {
        const auto ia = a.find(s), ib = b.find(s);
        const double wa = ia == a.end() ? 0.0 : ia->second;
        const double wb = ib == b.end() ? 0.0 : ib->second;
        CHECK(std::abs(wa - wb) <= tol);
    }
}

} // namespace

TEST_CASE("pair-move amplitudes: occupation gate and intervening-particle sign") {
    const LatticeState vac = vacuum_state(Window::for_boxes(3));

    // Row 0 integer chain holds particles at m = 2, 4, 6, ...
    CHECK(fermionic_pair_amplitude(vac, SiteKind::X, 0, 2, 0) == 1.0);  // nothing between
    CHECK(fermionic_pair_amplitude(vac, SiteKind::X, 0, 4, 0) == -1.0); // m=2 sits between
    CHECK(fermionic_pair_amplitude(vac, SiteKind::X, 0, 0, -2) == 0.0); // source empty
    CHECK(fermionic_pair_amplitude(vac, SiteKind::X, 0, 4, 2) == 0.0);  // target occupied

    // Free the site in between and the sign flips back.
    const LatticeState gapped = vac.with_toggled({x_site(0, 2)});
    CHECK(fermionic_pair_amplitude(gapped, SiteKind::X, 0, 4, 0) == 1.0);
    CHECK(fermionic_pair_amplitude(gapped, SiteKind::X, 0, 4, 2) == 1.0);

    // Half-integer chain, row 0: particles at r2 = 1, -3, -7, ...
    CHECK(fermionic_pair_amplitude(vac, SiteKind::Y, 0, 1, 3) == 1.0);
    CHECK(fermionic_pair_amplitude(vac, SiteKind::Y, 0, -3, 3) == -1.0); // r2=1 between
}

TEST_CASE("projector counts on the smallest states") {
    const Window win = Window::for_boxes(3);
    const LatticeState vac = vacuum_state(win);
    CHECK(count_addable(vac) == 1);
    CHECK(count_removable(vac) == 0);

    const LatticeState one = flip_hexagon(vac, 0, 0, FlipDirection::create);
    CHECK(count_addable(one) == 3);
    CHECK(count_removable(one) == 1);
}

TEST_CASE("growth images on the smallest states") {
    const Window win = Window::for_boxes(3);
    const LatticeState vac = vacuum_state(win);

    const WeightedStateSum created = apply_create(vac);
    REQUIRE(created.size() == 1);
    CHECK(created.begin()->first == flip_hexagon(vac, 0, 0, FlipDirection::create));
    CHECK(created.begin()->second == 1.0);
    CHECK(apply_annihilate(vac).empty());

    const LatticeState one = created.begin()->first;
    CHECK(apply_create(one).size() == 3);
    const WeightedStateSum removed = apply_annihilate(one);
    REQUIRE(removed.size() == 1);
    CHECK(removed.begin()->first == vac);
    CHECK(removed.begin()->second == 1.0);
}

TEST_CASE("growth operators realize partition moves with amplitude +1") {
    for (int n = 0; n <= 5; ++n) {
        const Window win = Window::for_boxes(n + 1);
        for (const auto& pp : enumerate_partitions(n)) {
            const LatticeState st = partition_to_state(pp, win);

            WeightedStateSum expected_up;
            for (const auto& b : addable_boxes(pp))
                expected_up[partition_to_state(pp.with_box(b), win)] = 1.0;
            check_sums_equal(apply_create(st), expected_up, 0.0);

            WeightedStateSum expected_down;
            for (const auto& b : removable_boxes(pp))
                expected_down[partition_to_state(pp.without_box(b), win)] = 1.0;
            check_sums_equal(apply_annihilate(st), expected_down, 0.0);
        }
    }
}

TEST_CASE("diagonal part scales with the projector counts") {
    const Window win = Window::for_boxes(2);
    const LatticeState vac = vacuum_state(win);

    CouplingParams p;
    p.J = 0.0;
    p.V = 1.5;
    p.q = 0.49;
    const WeightedStateSum diag = hamiltonian_action(vac, p);
    REQUIRE(diag.size() == 1);
    CHECK(diag.begin()->first == vac);
    // One addable cell, no removable ones: V sqrt(q) * 1.
    CHECK(diag.begin()->second == doctest::Approx(1.5 * 0.7).epsilon(1e-14));
}

TEST_CASE("couplings must keep q positive") {
    const LatticeState vac = vacuum_state(Window::for_boxes(1));
    CouplingParams p;
    p.q = 0.0;
    CHECK_THROWS_AS(hamiltonian_action(vac, p), std::invalid_argument);
    p.q = -1.0;
    CHECK_THROWS_AS(jw_hamiltonian_action(vac, p), std::invalid_argument);
}

TEST_CASE("spin-product route equals the fermionic route on small states") {
    CouplingParams p;
    p.J = 0.7;
    p.V = 1.3;
    p.q = 0.6;
    for (int n = 0; n <= 3; ++n) {
        const Window win = Window::for_boxes(n + 1);
        for (const auto& pp : enumerate_partitions(n)) {
            const LatticeState st = partition_to_state(pp, win);
            check_sums_equal(hamiltonian_action(st, p), jw_hamiltonian_action(st, p),
                             1e-12);
        }
    }
}
