// Python bindings for the main operations. Interfaces stick to plain
// containers (lists, dicts, complex numbers) so no array library is pulled in.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "kagome/hexagons.hpp"
#include "kagome/lattice.hpp"
#include "kagome/lax.hpp"
#include "kagome/operators.hpp"
#include "kagome/partitions.hpp"
#include "kagome/spectra.hpp"
#include "kagome/svg.hpp"

namespace py = pybind11;
using cd = std::complex<double>;

namespace {

using Heights = std::vector<std::vector<int>>;

kagome::LatticeState state_of(const Heights& heights) {
    const auto pp = kagome::PlanePartition::from_heights(heights);
    return kagome::partition_to_state(pp, kagome::Window::for_boxes(pp.box_count()));
}

std::vector<std::vector<cd>> nested(const Eigen::MatrixXcd& m) {
    std::vector<std::vector<cd>> out(m.rows(), std::vector<cd>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

kagome::EigMethod method_of(const std::string& name) {
    if (name == "dense") return kagome::EigMethod::dense;
    if (name == "lanczos") return kagome::EigMethod::lanczos;
    if (name == "auto") return kagome::EigMethod::automatic;
    throw std::invalid_argument("method must be auto, dense, or lanczos");
}

kagome::WeightTable table_of(long long seed) {
    return seed >= 0 ? kagome::WeightTable::random(static_cast<std::uint64_t>(seed))
                     : kagome::WeightTable::all_unit();
}

kagome::RuleSystem rules_of(const std::string& name) {
    if (name == "kagome") return kagome::RuleSystem::kagome;
    if (name == "vertical") return kagome::RuleSystem::vertical;
    throw std::invalid_argument("rules must be vertical or kagome");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact desk-scale engine for melting-crystal states, hexagon vertex "
              "classes, and row-transfer algebra.";

    py::register_exception<kagome::Error>(m, "DomainError");

    // --- counting and enumeration -------------------------------------------
    m.def(
        "macmahon",
        [](int n_max) { return kagome::macmahon_coeffs(n_max).coeffs; },
        py::arg("n_max"), "Generating-function box counts for n = 0..n_max.");
    m.def(
        "count_partitions",
        [](int n, int bound) {
            return static_cast<long long>(kagome::enumerate_partitions(n, bound).size());
        },
        py::arg("n"), py::arg("bound") = kagome::kDefaultEnumerationBound,
        "Number of states with exactly n boxes, by direct enumeration.");
    m.def(
        "enumerate_heights",
        [](int n, int bound) {
            std::vector<Heights> out;
            for (const auto& p : kagome::enumerate_partitions(n, bound))
                out.push_back(p.heights());
            return out;
        },
        py::arg("n"), py::arg("bound") = kagome::kDefaultEnumerationBound,
        "All states with exactly n boxes, as height arrays.");

    // --- lattice states ------------------------------------------------------
    m.def(
        "state_flips",
        [](const Heights& heights) {
            const kagome::LatticeState state = state_of(heights);
            std::vector<std::tuple<std::string, int, int>> out;
            for (const auto& s : state.flips())
                out.emplace_back(s.kind == kagome::SiteKind::X ? "X" : "Y", s.row, s.pos);
            return out;
        },
        py::arg("heights"),
        "Sites where the state of a height array deviates from the vacuum.");
    m.def(
        "count_addable", [](const Heights& h) { return kagome::count_addable(state_of(h)); },
        py::arg("heights"), "Number of box-addable plaquettes.");
    m.def(
        "count_removable",
        [](const Heights& h) { return kagome::count_removable(state_of(h)); },
        py::arg("heights"), "Number of box-removable plaquettes.");
    m.def(
        "render_svg", [](const Heights& h) { return kagome::render_state_svg(state_of(h)); },
        py::arg("heights"), "Deterministic SVG rendering of the lattice state.");

    // --- Hamiltonian and spectra ---------------------------------------------
    m.def(
        "ground_state_residual",
        [](int n_max, double q, double J, double V) {
            return kagome::ground_state_residual(n_max, q, J, V);
        },
        py::arg("n_max"), py::arg("q"), py::arg("J") = 1.0, py::arg("V") = 1.0,
        "Residual of the weighted configuration sum on the truncation-safe levels.");
    m.def(
        "hamiltonian_dense",
        [](int n_max, double J, double V, double q) {
            const kagome::TruncatedBasis basis(n_max);
            const auto H = kagome::build_hamiltonian(basis, {J, V, q});
            std::vector<std::vector<double>> out(
                H.dimension, std::vector<double>(H.dimension, 0.0));
            for (const auto& [r, c, v] : H.entries) out[r][c] += v;
            return out;
        },
        py::arg("n_max"), py::arg("J") = 1.0, py::arg("V") = 1.0, py::arg("q") = 1.0,
        "Dense Hamiltonian on the truncated basis.");
    m.def(
        "lowest_eigenvalues",
        [](int n_max, int k, double J, double V, double q, const std::string& method) {
            const kagome::TruncatedBasis basis(n_max);
            const auto H = kagome::build_hamiltonian(basis, {J, V, q});
            return kagome::lowest_eigenvalues(H, k, method_of(method));
        },
        py::arg("n_max"), py::arg("k"), py::arg("J") = 1.0, py::arg("V") = 1.0,
        py::arg("q") = 1.0, py::arg("method") = "auto",
        "k smallest eigenvalues of the truncated Hamiltonian, ascending.");

    // --- hexagon classes and torus sums --------------------------------------
    m.def(
        "hex_classes",
        [] {
            py::list out;
            for (const auto c : kagome::enumerate_allowed()) {
                py::dict row;
                row["label"] = kagome::hex_class_label(c);
                row["particles"] = kagome::hex_class_particles(c);
                py::list positions;
                const unsigned mask = kagome::hex_class_mask(c);
                for (int p = 1; p <= 6; ++p)
                    if ((mask >> (p - 1)) & 1u) positions.append(p);
                row["positions"] = positions;
                out.append(row);
            }
            return out;
        },
        "The 18 allowed plaquette classes with labels and occupied positions.");
    m.def(
        "classify_positions",
        [](const std::vector<int>& positions) -> py::object {
            kagome::HexagonConfig cfg;
            for (const int p : positions) {
                if (p < 1 || p > 6)
                    throw std::invalid_argument("positions must lie in 1..6");
                cfg.occ[p - 1] = true;
            }
            const auto cls = kagome::classify(cfg);
            if (!cls) return py::none();
            return py::cast(kagome::hex_class_label(*cls));
        },
        py::arg("positions"),
        "Class label for an occupation pattern, or None if it is forbidden.");
    m.def(
        "torus_count",
        [](int M, int N, const std::string& rules) {
            kagome::TorusSpec spec;
            spec.M = M;
            spec.N = N;
            spec.rules = rules_of(rules);
            return static_cast<long long>(kagome::enumerate_torus_configs(spec).size());
        },
        py::arg("M") = 1, py::arg("N") = 1, py::arg("rules") = "vertical",
        "Number of admissible torus configurations.");
    m.def(
        "classical_z",
        [](int M, int N, const std::string& rules, long long seed) {
            kagome::TorusSpec spec;
            spec.M = M;
            spec.N = N;
            spec.rules = rules_of(rules);
            return kagome::classical_partition_function(spec, table_of(seed));
        },
        py::arg("M") = 1, py::arg("N") = 1, py::arg("rules") = "vertical",
        py::arg("seed") = -1,
        "Configuration sum over the torus; seed < 0 means unit weights.");
    m.def(
        "classical_z_transfer",
        [](int M, int N, long long seed) {
            return kagome::classical_partition_function_transfer(table_of(seed), M, N);
        },
        py::arg("M") = 1, py::arg("N") = 1, py::arg("seed") = -1,
        "The same sum through the row-transfer trace (vertical rules).");

    // --- transfer matrices and the commuting family --------------------------
    m.def(
        "transfer_commutator",
        [](long long seed, int M) {
            const auto Wu = kagome::WeightTable::random(2 * static_cast<std::uint64_t>(seed));
            const auto Wv =
                kagome::WeightTable::random(2 * static_cast<std::uint64_t>(seed) + 1);
            const auto t = kagome::transfer_matrix(Wu, M, kagome::RowOffset::even,
                                                   kagome::RuleSystem::vertical);
            const auto tt = kagome::transfer_matrix(Wv, M, kagome::RowOffset::odd,
                                                    kagome::RuleSystem::vertical);
            const auto S = kagome::slot_shift_matrix(M);
            const auto to_u = kagome::transfer_matrix(Wu, M, kagome::RowOffset::odd,
                                                      kagome::RuleSystem::vertical);
            py::dict out;
            out["commutator_norm"] = (t.mat * tt.mat - tt.mat * t.mat).norm();
            out["shift_defect"] = (S * t.mat * S.transpose() - to_u.mat).norm();
            return out;
        },
        py::arg("seed"), py::arg("M") = 3,
        "Even/odd commutator norm and shift-identity defect for a seeded pair.");
    m.def(
        "descendant_weights",
        [](cd u, cd aniso) {
            const auto table = kagome::descendant_weights(u, aniso);
            std::map<std::string, cd> out;
            for (int i = 0; i < kagome::kNumHexClasses; ++i) {
                const auto c = static_cast<kagome::HexClass>(i);
                out[kagome::hex_class_label(c)] = table.get(c);
            }
            return out;
        },
        py::arg("u"), py::arg("aniso"),
        "Weight table of the commuting family at a parameter point.");
    m.def(
        "solve_r",
        [](cd u, cd v, cd aniso) {
            const auto Wu = kagome::descendant_weights(u, aniso);
            const auto Wv = kagome::descendant_weights(v, aniso);
            const auto res = kagome::solve_R(Wu, Wv);
            py::dict out;
            out["R"] = nested(res.R.mat);
            out["kernel_dim"] = res.kernel_dim;
            out["singular_values"] = res.singular_values;
            out["residual"] = kagome::fcr_residual(res.R, Wu, Wv);
            return out;
        },
        py::arg("u"), py::arg("v"), py::arg("aniso"),
        "Solve for the intertwiner of two family points and report the defect.");
    m.def(
        "closed_form_r",
        [](cd u, cd v, cd aniso) {
            return nested(kagome::descendant_r_matrix(u, v, aniso).mat);
        },
        py::arg("u"), py::arg("v"), py::arg("aniso"),
        "Closed-form intertwiner, normalized like solve_r output.");
    m.def(
        "rtt_residual",
        [](cd u, cd v, cd aniso, int M) {
            const auto Wu = kagome::descendant_weights(u, aniso);
            const auto Wv = kagome::descendant_weights(v, aniso);
            const auto R = kagome::descendant_r_matrix(u, v, aniso);
            return kagome::rtt_residual(R, kagome::monodromy(Wu, M),
                                        kagome::monodromy(Wv, M));
        },
        py::arg("u"), py::arg("v"), py::arg("aniso"), py::arg("M") = 2,
        "Chain-level intertwining defect at M cells.");

    m.attr("__version__") = "0.1.0";
}
