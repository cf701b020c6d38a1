#include "kagome/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "kagome/lattice.hpp"
#include "kagome/parallel.hpp"

namespace kagome {

TruncatedBasis::TruncatedBasis(int n_max, int bound) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    level_offsets_.push_back(0);
    for (int n = 0; n <= n_max; ++n) {
        auto level = enumerate_partitions(n, bound); // BeyondBound passes through
        states_.insert(states_.end(), level.begin(), level.end());
        level_offsets_.push_back(static_cast<int>(states_.size()));
    }
}

std::optional<int> TruncatedBasis::index_of(const PlanePartition& pp) const {
    const int n = pp.box_count();
    if (n > n_max_) return std::nullopt;
    const auto first = states_.begin() + level_offsets_[n];
    const auto last = states_.begin() + level_offsets_[n + 1];
    const auto it = std::lower_bound(first, last, pp);
    if (it == last || !(*it == pp))
        throw std::logic_error("partition missing from its level"); // enumeration is complete
    return static_cast<int>(it - states_.begin());
}

int TruncatedBasis::level_size(int n) const {
    return level_offsets_.at(n + 1) - level_offsets_.at(n);
}

std::vector<double> SparseOperatorMatrix::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != dimension)
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                " vs matrix dimension " + std::to_string(dimension));
    std::vector<double> out(v.size(), 0.0);
    for (const auto& [r, c, val] : entries) out[r] += val * v[c];
    return out;
}

double SparseOperatorMatrix::max_asymmetry() const {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dimension, dimension);
    for (const auto& [r, c, val] : entries) dense(r, c) += val;
    return (dense - dense.transpose()).cwiseAbs().maxCoeff();
}

SparseOperatorMatrix build_hamiltonian(const TruncatedBasis& basis, const CouplingParams& p) {
    const int dim = basis.dimension();
    const Window window = Window::for_boxes(basis.n_max() + 1);
    std::vector<std::vector<std::pair<int, double>>> columns(dim);

    parallel_for(static_cast<std::size_t>(dim), [&](std::size_t col) {
        const LatticeState in = partition_to_state(basis.state(static_cast<int>(col)), window);
        for (const auto& [img, amp] : hamiltonian_action(in, p)) {
            const PlanePartition pp = state_to_partition(img);
            if (auto row = basis.index_of(pp)) // hard truncation drops the rest
                columns[col].push_back({*row, amp});
        }
        std::sort(columns[col].begin(), columns[col].end());
    });

    SparseOperatorMatrix mat;
    mat.dimension = dim;
    for (int col = 0; col < dim; ++col)
        for (const auto& [row, val] : columns[col])
            mat.entries.emplace_back(row, col, val);
    std::sort(mat.entries.begin(), mat.entries.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    return mat;
}

double ground_state_residual(int n_max, double q, double J, double V) {
    if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
    const TruncatedBasis basis(n_max);
    const SparseOperatorMatrix H = build_hamiltonian(basis, {J, V, q});
    std::vector<double> v(basis.dimension());
    for (int i = 0; i < basis.dimension(); ++i)
        v[i] = std::pow(q, 0.5 * basis.state(i).box_count());
    const std::vector<double> Hv = H.apply(v);
    double worst = 0.0;
    for (int i = 0; i < basis.level_offset(n_max); ++i) // interior levels only
        worst = std::max(worst, std::abs(Hv[i]));
    return worst;
}

namespace {

Eigen::MatrixXd to_dense(const SparseOperatorMatrix& mat) {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(mat.dimension, mat.dimension);
    for (const auto& [r, c, val] : mat.entries) dense(r, c) += val;
    return dense;
}

std::vector<double> dense_eigenvalues(const SparseOperatorMatrix& mat, int k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(mat),
                                                          Eigen::EigenvaluesOnly);
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

constexpr double kLanczosTol = 1e-10;
constexpr int kLanczosMaxIter = 10000;

// Plain Lanczos with full reorthogonalization against all stored vectors —
// robust at desk scale, where memory for the Krylov basis is a non-issue.
std::vector<double> lanczos_eigenvalues(const SparseOperatorMatrix& mat, int k) {
    const int dim = mat.dimension;
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<Eigen::VectorXd> basis;
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = unit(rng);
    v.normalize();
    basis.push_back(v);

    std::vector<double> alpha, beta;
    std::vector<double> prev_ritz;
    const int max_steps = std::min(dim, kLanczosMaxIter);
    for (int step = 0; step < max_steps; ++step) {
        std::vector<double> w_std(mat.apply(
            std::vector<double>(basis.back().data(), basis.back().data() + dim)));
        Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(w_std.data(), dim);
        alpha.push_back(basis.back().dot(w));
        for (const auto& b : basis) w -= b.dot(w) * b; // full reorthogonalization
        for (const auto& b : basis) w -= b.dot(w) * b; // second pass for stability
        const double nb = w.norm();

        const int steps = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri, Eigen::EigenvaluesOnly);
        std::vector<double> ritz(std::min(k, steps));
        for (std::size_t i = 0; i < ritz.size(); ++i) ritz[i] = solver.eigenvalues()(i);

        if (static_cast<int>(ritz.size()) == k && !prev_ritz.empty()) {
            double delta = 0.0;
            for (int i = 0; i < k; ++i) delta = std::max(delta, std::abs(ritz[i] - prev_ritz[i]));
            if (delta < kLanczosTol) return ritz;
        }
        prev_ritz = ritz;

        if (nb < 1e-14) {
            // Krylov space exhausted: the Ritz values are exact.
            if (static_cast<int>(ritz.size()) == k) return ritz;
            throw ConvergenceFailure("Krylov space exhausted after " +
                                     std::to_string(steps) + " steps with only " +
                                     std::to_string(ritz.size()) + " of " +
                                     std::to_string(k) + " eigenvalues");
        }
        beta.push_back(nb);
        basis.push_back(w / nb);
    }
    throw ConvergenceFailure("no convergence within " + std::to_string(max_steps) +
                             " Lanczos steps (tol " + std::to_string(kLanczosTol) + ")");
}

} // namespace

std::vector<double> lowest_eigenvalues(const SparseOperatorMatrix& mat, int k,
                                       EigMethod method) {
    if (k < 1 || k > mat.dimension)
        throw DimensionMismatch("k=" + std::to_string(k) + " outside 1.." +
                                std::to_string(mat.dimension));
    switch (method) {
        case EigMethod::dense:
            return dense_eigenvalues(mat, k);
        case EigMethod::lanczos:
            return lanczos_eigenvalues(mat, k);
        case EigMethod::automatic:
        default:
            return mat.dimension < 512 ? dense_eigenvalues(mat, k)
                                       : lanczos_eigenvalues(mat, k);
    }
}

double quantum_partition_function(int n_max, const CouplingParams& p, double beta) {
    const TruncatedBasis basis(n_max);
    const SparseOperatorMatrix H = build_hamiltonian(basis, p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(H), Eigen::EigenvaluesOnly);
    double z = 0.0;
    for (int i = 0; i < H.dimension; ++i) z += std::exp(-beta * solver.eigenvalues()(i));
    return z;
}

} // namespace kagome
