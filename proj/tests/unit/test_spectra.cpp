#include <doctest.h>

#include <cmath>

#include "kagome/spectra.hpp"

using namespace kagome;

TEST_CASE("truncated basis layout and lookup") {
    const TruncatedBasis basis(3);
    CHECK(basis.dimension() == 11); // 1 + 1 + 3 + 6
    CHECK(basis.level_offset(0) == 0);
    CHECK(basis.level_offset(1) == 1);
    CHECK(basis.level_offset(2) == 2);
    CHECK(basis.level_offset(3) == 5);
    CHECK(basis.level_offset(4) == 11);
    CHECK(basis.level_size(2) == 3);

    for (int i = 0; i < basis.dimension(); ++i) {
        const auto idx = basis.index_of(basis.state(i));
        REQUIRE(idx.has_value());
        CHECK(*idx == i);
    }
    const auto over = basis.index_of(PlanePartition::from_heights({{2, 2}}));
    CHECK_FALSE(over.has_value());
}

TEST_CASE("two-state truncation reproduces the known 2x2 block") {
    const TruncatedBasis basis(1);
    const SparseOperatorMatrix H = build_hamiltonian(basis, CouplingParams{});
    REQUIRE(H.dimension == 2);

    double dense[2][2] = {{0, 0}, {0, 0}};
    for (const auto& [r, c, v] : H.entries)
        dense[r][c] += v;
    CHECK(dense[0][0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dense[0][1] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(dense[1][0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(dense[1][1] == doctest::Approx(4.0).epsilon(1e-15));

    const auto eigs = lowest_eigenvalues(H, 2, EigMethod::dense);
    const double root = std::sqrt(13.0);
    CHECK(eigs[0] == doctest::Approx((5.0 - root) / 2.0).epsilon(1e-13));
    CHECK(eigs[1] == doctest::Approx((5.0 + root) / 2.0).epsilon(1e-13));
}

TEST_CASE("the truncated matrix is symmetric") {
    const TruncatedBasis basis(3);
    const SparseOperatorMatrix H = build_hamiltonian(basis, CouplingParams{1.0, 1.0, 0.5});
    CHECK(H.max_asymmetry() <= 1e-14);
}

TEST_CASE("matrix-vector application checks dimensions") {
    const TruncatedBasis basis(1);
    const SparseOperatorMatrix H = build_hamiltonian(basis, CouplingParams{});
    CHECK_THROWS_AS(H.apply(std::vector<double>(3, 0.0)), DimensionMismatch);
}

TEST_CASE("the weighted configuration sum is annihilated at the balanced point") {
    CHECK(ground_state_residual(4, 0.3) < 1e-12);
    CHECK(ground_state_residual(4, 0.7) < 1e-12);
    // Detuning the potential destroys the zero mode.
    CHECK(ground_state_residual(4, 0.5, 1.0, 2.0) > 0.1);
}

TEST_CASE("iterative and dense eigenvalues agree") {
    const TruncatedBasis basis(4);
    const SparseOperatorMatrix H = build_hamiltonian(basis, CouplingParams{1.0, 1.0, 0.8});
    const auto dense = lowest_eigenvalues(H, 3, EigMethod::dense);
    const auto iter = lowest_eigenvalues(H, 3, EigMethod::lanczos);
    REQUIRE(dense.size() == 3);
    REQUIRE(iter.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(iter[i] == doctest::Approx(dense[i]).epsilon(1e-8));
}

TEST_CASE("eigenvalue count is validated") {
    const TruncatedBasis basis(1);
    const SparseOperatorMatrix H = build_hamiltonian(basis, CouplingParams{});
    CHECK_THROWS_AS(lowest_eigenvalues(H, 3), DimensionMismatch);
    CHECK_THROWS_AS(lowest_eigenvalues(H, 0), DimensionMismatch);
}

TEST_CASE("thermal trace on the two-state truncation") {
    const double beta = 0.37;
    const double root = std::sqrt(13.0);
    const double expected =
        std::exp(-beta * (5.0 - root) / 2.0) + std::exp(-beta * (5.0 + root) / 2.0);
    CHECK(quantum_partition_function(1, CouplingParams{}, beta) ==
          doctest::Approx(expected).epsilon(1e-13));
}
