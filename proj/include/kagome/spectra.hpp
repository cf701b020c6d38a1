#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "kagome/operators.hpp"
#include "kagome/partitions.hpp"

namespace kagome {

// All plane partitions with 0..n_max boxes, concatenated level by level in
// the canonical enumeration order.
class TruncatedBasis {
public:
    explicit TruncatedBasis(int n_max, int bound = kDefaultEnumerationBound);

    int n_max() const { return n_max_; }
    int dimension() const { return static_cast<int>(states_.size()); }
    const std::vector<PlanePartition>& states() const { return states_; }
    const PlanePartition& state(int idx) const { return states_.at(idx); }

    // Index within the basis; nullopt when the partition has too many boxes.
    std::optional<int> index_of(const PlanePartition& pp) const;

    int level_offset(int n) const { return level_offsets_.at(n); } // first index of level n
    int level_size(int n) const;

private:
    int n_max_;
    std::vector<PlanePartition> states_;
    std::vector<int> level_offsets_; // size n_max + 2, last entry = dimension
};

inline TruncatedBasis build_basis(int n_max) { return TruncatedBasis(n_max); }

struct SparseOperatorMatrix {
    int dimension = 0;
    std::vector<std::tuple<int, int, double>> entries; // sorted by (row, col)

    std::vector<double> apply(const std::vector<double>& v) const;
    double max_asymmetry() const;
};

// Matrix of the Hamiltonian on the truncated basis; images above the top
// level are dropped (hard truncation).
SparseOperatorMatrix build_hamiltonian(const TruncatedBasis& basis, const CouplingParams& p);

// Residual of the candidate ground state v_Lambda = q^(#boxes/2) at V = J:
// max |(H v)_Lambda| over the truncation-safe levels #boxes <= n_max - 1.
// J and V are exposed so the off-point behavior can be probed.
double ground_state_residual(int n_max, double q, double J = 1.0, double V = 1.0);

enum class EigMethod { automatic, dense, lanczos };

// k smallest eigenvalues, ascending. automatic = dense below dimension 512,
// Lanczos (full reorthogonalization) above.
std::vector<double> lowest_eigenvalues(const SparseOperatorMatrix& mat, int k,
                                       EigMethod method = EigMethod::automatic);

// Tr exp(-beta H) on the truncated space, by full diagonalization.
double quantum_partition_function(int n_max, const CouplingParams& p, double beta);

} // namespace kagome
