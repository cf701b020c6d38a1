#include "kagome/lax.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace kagome {

namespace {

using complexd = std::complex<double>;

// Weight of the hexagon whose six sites are set from the leg values; 0 for
// forbidden patterns.
complexd leg_weight(const WeightTable& table, int mu1, int mu2, int alpha, int beta,
                    int nu1, int nu2) {
    HexagonConfig cfg;
    cfg.occ = {mu1 != 0, mu2 != 0, alpha != 0, beta != 0, nu1 != 0, nu2 != 0};
    const auto cls = classify(cfg);
    return cls ? table.get(*cls) : complexd{0.0, 0.0};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& hi, const Eigen::MatrixXcd& lo) {
    Eigen::MatrixXcd out(hi.rows() * lo.rows(), hi.cols() * lo.cols());
    for (Eigen::Index i = 0; i < hi.rows(); ++i)
        for (Eigen::Index j = 0; j < hi.cols(); ++j)
            out.block(i * lo.rows(), j * lo.cols(), lo.rows(), lo.cols()) = hi(i, j) * lo;
    return out;
}

} // namespace

LaxMatrix lax_fundamental(const WeightTable& table) {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(8, 8);
    for (int beta = 0; beta < 2; ++beta)
        for (int nu = 0; nu < 4; ++nu)
            for (int alpha = 0; alpha < 2; ++alpha)
                for (int mu = 0; mu < 4; ++mu)
                    mat(beta * 4 + nu, alpha * 4 + mu) =
                        leg_weight(table, mu & 1, mu >> 1, alpha, beta, nu & 1, nu >> 1);
    return {LaxLayout::fundamental8, std::move(mat)};
}

LaxMatrix lax_adjoint(const WeightTable& table) {
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(6, 6);
    for (int beta = 0; beta < 2; ++beta)
        for (int nu = 0; nu < 3; ++nu) // pair states oo, *o, o* (no **)
            for (int alpha = 0; alpha < 2; ++alpha)
                for (int mu = 0; mu < 3; ++mu)
                    mat(beta * 3 + nu, alpha * 3 + mu) =
                        leg_weight(table, mu & 1, mu >> 1, alpha, beta, nu & 1, nu >> 1);
    return {LaxLayout::adjoint6, std::move(mat)};
}

Eigen::Matrix4cd lax_pair_block(const WeightTable& table, int alpha_in, int alpha_out) {
    Eigen::Matrix4cd block;
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            block(nu, mu) =
                leg_weight(table, mu & 1, mu >> 1, alpha_in, alpha_out, nu & 1, nu >> 1);
    return block;
}

Monodromy monodromy(const WeightTable& table, int M) {
    if (M < 1 || M > kMaxTransferColumns)
        throw BeyondBound("monodromy needs 1 <= M <= " + std::to_string(kMaxTransferColumns));
    Eigen::Matrix4cd block[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) block[a][b] = lax_pair_block(table, a, b);

    Monodromy out;
    out.M = M;
    // One factor: auxiliary goes straight through.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out.T[b][a] = block[a][b];
    // Append factors on the high bits; the auxiliary leg threads left to
    // right (each cell's outgoing bit is the next cell's incoming one).
    for (int j = 1; j < M; ++j) {
        std::array<std::array<Eigen::MatrixXcd, 2>, 2> next;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                next[b][a] = kron(Eigen::MatrixXcd(block[0][b]), out.T[0][a]);
                next[b][a] += kron(Eigen::MatrixXcd(block[1][b]), out.T[1][a]);
            }
        out.T = std::move(next);
    }
    return out;
}

Eigen::MatrixXcd slot_shift_matrix(int M) {
    const int slots = 2 * M;
    const int dim = 1 << slots;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(dim, dim);
    for (int in = 0; in < dim; ++in) {
        const int hi = (in >> (slots - 1)) & 1;
        const int shifted = ((in << 1) | hi) & (dim - 1);
        S(shifted, in) = 1.0;
    }
    return S;
}

TransferMatrix transfer_matrix(const WeightTable& table, int M, RowOffset offset,
                               RuleSystem rules) {
    if (M < 1 || M > kMaxTransferColumns)
        throw BeyondBound("transfer matrix needs 1 <= M <= " +
                          std::to_string(kMaxTransferColumns));
    const Monodromy T = monodromy(table, M);
    Eigen::MatrixXcd even = T.T[0][0] + T.T[1][1]; // trace over auxiliary

    TransferMatrix out;
    out.M = M;
    out.offset = offset;
    out.rules = rules;
    if (offset == RowOffset::even) {
        out.mat = std::move(even);
        return out;
    }
    // Odd rows pair slots (1,2),(3,4),...,(2M-1,0): the same contraction read
    // with every site moved one slot up. Relabel indices bit k -> bit k+1
    // (mod 2M); this is an exact permutation of entries, no arithmetic.
    const int slots = 2 * M;
    const int dim = 1 << slots;
    auto shift = [slots, dim](int bits) {
        const int hi = (bits >> (slots - 1)) & 1;
        return ((bits << 1) | hi) & (dim - 1);
    };
    out.mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out.mat(shift(r), shift(c)) = even(r, c);
    return out;
}

RMatrix RMatrix::identity() {
    RMatrix r;
    r.mat = Eigen::Matrix4cd::Identity();
    return r;
}

RMatrix RMatrix::normalized() const {
    RMatrix out = *this;
    const double norm = out.mat.norm();
    if (norm == 0.0) return out;
    out.mat /= norm;
    const double cap = 1e-12 * out.mat.cwiseAbs().maxCoeff();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const complexd z = out.mat(r, c);
            if (std::abs(z) > cap) {
                out.mat *= std::conj(z) / std::abs(z);
                return out;
            }
        }
    return out;
}

namespace {

// The linear action on the 16 R entries whose kernel is the intertwiner:
// rows are the free indices (nu, mu, beta, beta~, alpha, alpha~), columns the
// entries R(p, q) flattened as 4p + q with p = aux_pair_index.
Eigen::MatrixXcd fcr_system(const WeightTable& Wu, const WeightTable& Wv) {
    Eigen::Matrix4cd Lu[2][2], Lv[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Lu[a][b] = lax_pair_block(Wu, a, b);
            Lv[a][b] = lax_pair_block(Wv, a, b);
        }
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(256, 16);
    int row = 0;
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
            for (int be = 0; be < 2; ++be)
                for (int bet = 0; bet < 2; ++bet)
                    for (int al = 0; al < 2; ++al)
                        for (int alt = 0; alt < 2; ++alt) {
                            for (int ga = 0; ga < 2; ++ga)
                                for (int gat = 0; gat < 2; ++gat) {
                                    A(row, 4 * aux_pair_index(be, bet) +
                                               aux_pair_index(ga, gat)) +=
                                        (Lu[al][ga] * Lv[alt][gat])(nu, mu);
                                    A(row, 4 * aux_pair_index(ga, gat) +
                                               aux_pair_index(al, alt)) -=
                                        (Lv[ga][be] * Lu[gat][bet])(nu, mu);
                                }
                            ++row;
                        }
    return A;
}

Eigen::Vector<complexd, 16> vectorize(const RMatrix& R) {
    Eigen::Vector<complexd, 16> v;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) v(4 * p + q) = R.mat(p, q);
    return v;
}

constexpr double kKernelThreshold = 1e-8;

} // namespace

double fcr_residual(const RMatrix& R, const WeightTable& Wu, const WeightTable& Wv) {
    return (fcr_system(Wu, Wv) * vectorize(R)).norm();
}

RSolveResult solve_R(const WeightTable& Wu, const WeightTable& Wv) {
    const Eigen::MatrixXcd A = fcr_system(Wu, Wv);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinV);
    const Eigen::VectorXd sigma = svd.singularValues();

    RSolveResult result;
    result.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
    const double cutoff = kKernelThreshold * sigma(0);
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) < cutoff) ++result.kernel_dim;
    if (result.kernel_dim == 0)
        throw NoSolution("no kernel direction: smallest singular value ratio " +
                         std::to_string(sigma(sigma.size() - 1) / sigma(0)));
    result.ambiguous = result.kernel_dim > 1;

    const Eigen::VectorXcd v = svd.matrixV().col(15); // least-norm kernel vector
    RMatrix R;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) R.mat(p, q) = v(4 * p + q);
    result.R = R.normalized();
    return result;
}

double rtt_residual(const RMatrix& R, const Monodromy& Tu, const Monodromy& Tv) {
    if (Tu.M != Tv.M)
        throw DimensionMismatch("monodromies of unequal size: " + std::to_string(Tu.M) +
                                " vs " + std::to_string(Tv.M));
    double sq = 0.0;
    for (int be = 0; be < 2; ++be)
        for (int bet = 0; bet < 2; ++bet)
            for (int al = 0; al < 2; ++al)
                for (int alt = 0; alt < 2; ++alt) {
                    const int p = aux_pair_index(be, bet);
                    const int q = aux_pair_index(al, alt);
                    Eigen::MatrixXcd lhs =
                        Eigen::MatrixXcd::Zero(Tu.T[0][0].rows(), Tu.T[0][0].cols());
                    Eigen::MatrixXcd rhs = lhs;
                    for (int ga = 0; ga < 2; ++ga)
                        for (int gat = 0; gat < 2; ++gat) {
                            const int g = aux_pair_index(ga, gat);
                            lhs += R.mat(p, g) * (Tu.T[ga][al] * Tv.T[gat][alt]);
                            rhs += (Tv.T[be][ga] * Tu.T[bet][gat]) * R.mat(g, q);
                        }
                    sq += (lhs - rhs).squaredNorm();
                }
    return std::sqrt(sq);
}

namespace {

constexpr double kSingularTol = 1e-12;

void check_descendant_point(complexd u, complexd aniso) {
    const double scale = std::max({std::abs(u), std::abs(aniso), 1e-100});
    if (std::abs(u) < kSingularTol * scale)
        throw SingularParameters("spectral parameter too close to 0");
    if (std::abs(aniso) < kSingularTol * scale)
        throw SingularParameters("anisotropy too close to 0");
    const double qscale = std::max(std::abs(u * u), std::abs(aniso));
    if (std::abs(u * u + aniso) < kSingularTol * qscale)
        throw SingularParameters("u^2 + anisotropy too close to 0");
}

} // namespace

WeightTable descendant_weights(complexd u, complexd aniso) {
    check_descendant_point(u, aniso);
    WeightTable t;
    for (int i = 0; i < kNumHexClasses; ++i) t.set(static_cast<HexClass>(i), 0.0);
    // Particle-conserving family: both diagonal hopping channels share the
    // weight u, their interference partner picks up the anisotropy, and the
    // two three-particle-free crossings balance the empty cell.
    t.set(HexClass::c0, 1.0);
    t.set(HexClass::c2_15, u);
    t.set(HexClass::c2_26, u);
    t.set(HexClass::c2_16, aniso * u);
    t.set(HexClass::c2_14, u * u + aniso);
    t.set(HexClass::c2_36, 1.0);
    t.set(HexClass::c2_34, aniso);
    return t;
}

RMatrix descendant_r_matrix(complexd u, complexd v, complexd aniso) {
    check_descendant_point(u, aniso);
    check_descendant_point(v, aniso);
    RMatrix R;
    R.mat(0, 0) = 1.0;
    R.mat(1, 1) = (v * v + aniso) * u / ((u * u + aniso) * v);
    R.mat(2, 2) = u / v;
    R.mat(2, 1) = (u - v) * (u * v - aniso) / ((u * u + aniso) * v * v);
    R.mat(3, 3) = u / v;
    return R.normalized();
}

std::complex<double> classical_partition_function_transfer(const WeightTable& table,
                                                           int M, int N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    const TransferMatrix t = transfer_matrix(table, M, RowOffset::even, RuleSystem::vertical);
    Eigen::MatrixXcd power = t.mat;
    for (int n = 1; n < N; ++n) power = t.mat * power;
    return power.trace();
}

} // namespace kagome
