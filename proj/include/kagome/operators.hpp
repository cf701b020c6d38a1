#pragma once

#include <map>

#include "kagome/lattice.hpp"

namespace kagome {

struct CouplingParams {
    double J = 1.0;
    double V = 1.0;
    double q = 1.0; // must stay positive
};

// Sparse linear combination of basis states. Keys are canonical lattice
// states; zero amplitudes are dropped on insertion.
using WeightedStateSum = std::map<LatticeState, double>;

// Amplitude of moving one fermion src -> dst on a single chain (same kind and
// row), i.e. the normal-ordered pair c*_dst c_src evaluated on the state:
// zero unless src is occupied and dst empty, otherwise (-1)^(number of
// occupied sites strictly between the two positions). The infinite Dirac-sea
// tails of the string cancel between the creation and annihilation halves,
// leaving exactly this finite count.
double fermionic_pair_amplitude(const LatticeState& state, SiteKind kind, int row,
                                int src_pos, int dst_pos);

// Number of box-addable hexagons (class {1,4,5}): the diagonal projector sum.
int count_addable(const LatticeState& state);
// Number of box-removable hexagons (class {2,3,6}).
int count_removable(const LatticeState& state);

// Sum over addable hexagons of the six-fermion creation string; each image
// carries the product of the three pair amplitudes (which the physics makes
// +1 — asserted in tests, not assumed here).
WeightedStateSum apply_create(const LatticeState& state);
WeightedStateSum apply_annihilate(const LatticeState& state);

// -J (create + annihilate) + [ V sqrt(q) N_add + (V / sqrt(q)) N_rem ] * state.
WeightedStateSum hamiltonian_action(const LatticeState& state, const CouplingParams& p);

// Same operator written through spin-1/2 raising/lowering/z products on
// occupation bits (up = occupied); the projector brackets are evaluated
// arithmetically from z = +-1/2. Independent route used as a cross-check.
WeightedStateSum jw_hamiltonian_action(const LatticeState& state, const CouplingParams& p);

} // namespace kagome
