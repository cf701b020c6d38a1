#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "kagome/hexagons.hpp"

namespace kagome {

enum class LaxLayout { fundamental8, adjoint6 };

struct LaxMatrix {
    LaxLayout layout = LaxLayout::fundamental8;
    Eigen::MatrixXcd mat;
};

// 8x8 on (auxiliary X bit) x (Y pair), row = out, col = in. Indexing:
// row = beta*4 + (nu1 + 2 nu2), col = alpha*4 + (mu1 + 2 mu2). Every entry is
// the weight of the hexagon with sites (pos1..pos6) = (mu1, mu2, alpha, beta,
// nu1, nu2); forbidden patterns give structural zeros, which reproduces the
// 5x5 physical block with its 18 weights and 7 zeros, and annihilates the
// decoupled rows and columns.
LaxMatrix lax_fundamental(const WeightTable& table);

// 6x6 on (auxiliary bit) x (three-state Y pair 0: oo, 1: *o, 2: o*), i.e. the
// fundamental layout with the doubly-occupied pair dropped (it is forbidden
// on both sides). Row = beta*3 + out, col = alpha*3 + in.
LaxMatrix lax_adjoint(const WeightTable& table);

// 4x4 pair block with fixed auxiliary legs: in alpha_in, out alpha_out.
Eigen::Matrix4cd lax_pair_block(const WeightTable& table, int alpha_in, int alpha_out);

enum class RowOffset { even, odd };

inline constexpr int kMaxTransferColumns = 6; // dimension 2^(2M) <= 4096

struct TransferMatrix {
    int M = 1;
    RowOffset offset = RowOffset::even;
    RuleSystem rules = RuleSystem::vertical;
    Eigen::MatrixXcd mat; // 2^(2M) x 2^(2M), slot k of the Y row = bit k
};

// Auxiliary-traced product of M pair blocks. Even offset pairs slots
// (0,1),(2,3),...; odd offset pairs (1,2),(3,4),...,(2M-1,0). The rule system
// tags how rows are meant to be stacked; a single row's matrix is the same
// object either way.
TransferMatrix transfer_matrix(const WeightTable& table, int M, RowOffset offset,
                               RuleSystem rules);

// One-slot cyclic shift on the 2M Y slots (bit k -> bit k+1 mod 2M).
Eigen::MatrixXcd slot_shift_matrix(int M);

struct Monodromy {
    int M = 1;
    // T[beta][alpha]: auxiliary enters the first factor as alpha and leaves
    // the last as beta; each block acts on the 4^M quantum space.
    std::array<std::array<Eigen::MatrixXcd, 2>, 2> T;
};

Monodromy monodromy(const WeightTable& table, int M);

struct RMatrix {
    Eigen::Matrix4cd mat = Eigen::Matrix4cd::Zero();

    static RMatrix identity();
    // Unit Frobenius norm, first nonzero entry rotated to the positive reals.
    RMatrix normalized() const;
};

// Pair index on auxiliary x auxiliary: pidx(a, b) = a + 2b.
inline int aux_pair_index(int a, int b) { return a + 2 * b; }

// Frobenius norm of the intertwining defect of the two Lax families:
// sum_{free} | R L(u) L(v) - L(v) L(u) R | over all external indices.
double fcr_residual(const RMatrix& R, const WeightTable& Wu, const WeightTable& Wv);

struct RSolveResult {
    RMatrix R;
    int kernel_dim = 0;
    std::vector<double> singular_values; // all 16, descending
    bool ambiguous = false;              // kernel_dim > 1
};

// Assembles the 256x16 linear system acting on the R entries and returns the
// least-norm kernel direction. NoSolution when the smallest singular value
// stays above 1e-8 of the largest.
RSolveResult solve_R(const WeightTable& Wu, const WeightTable& Wv);

// || R Tu Tv - Tv Tu R ||_F with R acting on the two auxiliary legs and the
// u-factors to the left in quantum-space products.
double rtt_residual(const RMatrix& R, const Monodromy& Tu, const Monodromy& Tv);

// One-parameter family of weight tables (second argument: anisotropy) whose
// transfer matrices commute in the spectral parameter; the particle-number
// conserving seven classes carry the only nonzero weights.
WeightTable descendant_weights(std::complex<double> u, std::complex<double> anisotropy);

// Closed-form intertwiner for the descendant family, normalized like solve_R
// output. Provided for cross-checks; solve_R finds the same direction.
RMatrix descendant_r_matrix(std::complex<double> u, std::complex<double> v,
                            std::complex<double> anisotropy);

// Tr(t^N) for vertical-rule tori; the transfer-path half of the two-route
// classical partition function check.
std::complex<double> classical_partition_function_transfer(const WeightTable& table,
                                                           int M, int N);

} // namespace kagome
