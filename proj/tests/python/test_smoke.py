#!/usr/bin/env python3
"""Smoke tests for the python module: one probe per exposed area."""

import math

import crystal_kagome as ck


def test_counting():
    assert ck.macmahon(6) == [1, 1, 3, 6, 13, 24, 48]
    assert ck.count_partitions(4) == 13
    assert len(ck.enumerate_heights(3)) == 6
    try:
        ck.count_partitions(99)
    except ck.DomainError:
        pass
    else:
        raise AssertionError("count_partitions(99) should raise DomainError")


def test_lattice():
    assert ck.count_addable([]) == 1
    assert ck.count_removable([]) == 0
    assert ck.count_addable([[1]]) == 3
    assert ck.count_removable([[1]]) == 1
    assert len(ck.state_flips([[1]])) == 6
    svg = ck.render_svg([[1]])
    assert svg.startswith("<svg") and svg == ck.render_svg([[1]])


def test_spectra():
    assert ck.ground_state_residual(4, 0.3) < 1e-12
    assert ck.ground_state_residual(4, 0.5, 1.0, 2.0) > 0.1
    h = ck.hamiltonian_dense(1)
    assert h[0][0] == 1.0 and h[1][1] == 4.0 and h[0][1] == -1.0
    eigs = ck.lowest_eigenvalues(1, 2)
    assert abs(eigs[0] - (5.0 - math.sqrt(13.0)) / 2.0) < 1e-12


def test_hexagons():
    classes = ck.hex_classes()
    assert len(classes) == 18
    assert classes[0]["label"] == "0"
    assert ck.classify_positions([1, 4, 5]) == "3_145"
    assert ck.classify_positions([1, 2]) is None
    assert ck.torus_count(1, 1, "vertical") == 4
    z = ck.classical_z(1, 1)
    assert abs(z - 4.0) < 1e-15
    for M in (1, 2):
        for N in (1, 2):
            a = ck.classical_z(M, N, "vertical", 5)
            b = ck.classical_z_transfer(M, N, 5)
            assert abs(a - b) < 1e-12


def test_family():
    u, v, aniso = 0.8 + 0.3j, -0.45 + 0.6j, 0.37 - 0.22j
    w = ck.descendant_weights(u, aniso)
    assert w["0"] == 1.0 and abs(w["2_15"] - u) < 1e-15 and w["1_1"] == 0.0
    sol = ck.solve_r(u, v, aniso)
    assert sol["kernel_dim"] == 1 and sol["residual"] < 1e-10
    closed = ck.closed_form_r(u, v, aniso)
    diff = max(
        abs(sol["R"][p][q] - closed[p][q]) for p in range(4) for q in range(4)
    )
    assert diff < 1e-10
    assert ck.rtt_residual(u, v, aniso, 2) < 1e-10
    out = ck.transfer_commutator(0, 3)
    assert out["commutator_norm"] > 1e-6 and out["shift_defect"] <= 1e-14


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke ok")


if __name__ == "__main__":
    main()
