// Batch front end. Every subcommand is a thin adapter: parse flags, call one
// library pipeline, serialize with the shared formatters. Exit codes: 0 on
// success, 1 on a domain error (JSON error record on stdout), 2 on usage
// errors.

#include <complex>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kagome/hexagons.hpp"
#include "kagome/io.hpp"
#include "kagome/lattice.hpp"
#include "kagome/lax.hpp"
#include "kagome/operators.hpp"
#include "kagome/partitions.hpp"
#include "kagome/spectra.hpp"
#include "kagome/svg.hpp"

using json = nlohmann::json;
using cd = std::complex<double>;

namespace {

constexpr double kGroundResidualTol = 1e-12;

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        kagome::write_text_file(out_path, text);
}

void emit_json(const json& j, const std::string& out_path) {
    emit_text(j.dump(2) + "\n", out_path);
}

// Weight-table source shared by the vertex-model subcommands: a JSON file, a
// seeded random table, or all-unit weights (the default).
struct TableSource {
    std::string file;
    long long seed = -1;
    bool unit = false;

    kagome::WeightTable resolve() const {
        if (!file.empty())
            return kagome::weight_table_from_json(json::parse(kagome::read_text_file(file)));
        if (seed >= 0) return kagome::WeightTable::random(static_cast<std::uint64_t>(seed));
        return kagome::WeightTable::all_unit();
    }
    json describe() const {
        if (!file.empty()) return {{"table", file}};
        if (seed >= 0) return {{"seed", seed}};
        return {{"table", "unit"}};
    }
};

void add_table_options(CLI::App* cmd, TableSource& src) {
    auto* f = cmd->add_option("--table", src.file, "weight table JSON file");
    auto* s = cmd->add_option("--seed", src.seed, "seed for a deterministic random table")
                  ->excludes(f);
    cmd->add_flag("--unit", src.unit, "use unit weights (default)")->excludes(f)->excludes(s);
}

kagome::PlanePartition partition_from_string(const std::string& heights) {
    return kagome::partition_from_json(json::parse(heights));
}

kagome::LatticeState state_from_options(const std::string& heights,
                                        const std::string& state_file, int rows,
                                        int xpos) {
    if (!state_file.empty())
        return kagome::state_from_json(json::parse(kagome::read_text_file(state_file)));
    const kagome::PlanePartition pp = partition_from_string(heights);
    kagome::Window win = kagome::Window::for_boxes(pp.box_count());
    if (rows > 0) win.max_abs_row = rows;
    if (xpos > 0) win.max_abs_xpos = xpos;
    return kagome::partition_to_state(pp, win);
}

kagome::RuleSystem parse_rules(const std::string& name) {
    return name == "kagome" ? kagome::RuleSystem::kagome : kagome::RuleSystem::vertical;
}

json complex_to_json(cd z) { return {z.real(), z.imag()}; }

void build_pp(CLI::App& app) {
    auto* pp = app.add_subcommand("pp", "plane partition enumeration and counting");
    pp->require_subcommand(1);

    {
        auto n = std::make_shared<int>(0);
        auto bound = std::make_shared<int>(kagome::kDefaultEnumerationBound);
        auto out = std::make_shared<std::string>();
        auto* cmd = pp->add_subcommand("enumerate", "list all states with n boxes");
        cmd->add_option("--n", *n, "box count")->required();
        cmd->add_option("--bound", *bound, "enumeration size bound");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n, bound, out] {
            json arr = json::array();
            for (const auto& p : kagome::enumerate_partitions(*n, *bound))
                arr.push_back(kagome::partition_to_json(p));
            emit_json(arr, *out);
        });
    }
    {
        auto n = std::make_shared<int>(0);
        auto bound = std::make_shared<int>(kagome::kDefaultEnumerationBound);
        auto* cmd = pp->add_subcommand("count", "count states with n boxes");
        cmd->add_option("--n", *n, "box count")->required();
        cmd->add_option("--bound", *bound, "enumeration size bound");
        cmd->callback([n, bound] {
            std::cout << kagome::enumerate_partitions(*n, *bound).size() << "\n";
        });
    }
    {
        auto n_max = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        auto* cmd = pp->add_subcommand("macmahon", "generating-function coefficients");
        cmd->add_option("--n-max", *n_max, "highest order")->required();
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n_max, out] {
            emit_json(json(kagome::macmahon_coeffs(*n_max).coeffs), *out);
        });
    }
}

void build_lattice(CLI::App& app) {
    auto* lattice = app.add_subcommand("lattice", "occupation states and rendering");
    lattice->require_subcommand(1);

    {
        auto heights = std::make_shared<std::string>("[]");
        auto rows = std::make_shared<int>(0);
        auto xpos = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        auto* cmd = lattice->add_subcommand("state", "map a partition to its lattice state");
        cmd->add_option("--heights", *heights, "height array JSON, e.g. [[2,1],[1]]");
        cmd->add_option("--rows", *rows, "window row bound (default: fit the boxes)");
        cmd->add_option("--xpos", *xpos, "window position bound (default: fit the boxes)");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([heights, rows, xpos, out] {
            const kagome::LatticeState st = state_from_options(*heights, "", *rows, *xpos);
            json j = kagome::state_to_json(st);
            j["addable"] = kagome::count_addable(st);
            j["removable"] = kagome::count_removable(st);
            emit_json(j, *out);
        });
    }
    {
        auto heights = std::make_shared<std::string>("[]");
        auto state_file = std::make_shared<std::string>();
        auto rows = std::make_shared<int>(0);
        auto xpos = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        auto* cmd = lattice->add_subcommand("render", "render a state as SVG");
        cmd->add_option("--heights", *heights, "height array JSON");
        cmd->add_option("--state-file", *state_file, "state JSON file (overrides --heights)");
        cmd->add_option("--rows", *rows, "window row bound");
        cmd->add_option("--xpos", *xpos, "window position bound");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([heights, state_file, rows, xpos, out] {
            const kagome::LatticeState st =
                state_from_options(*heights, *state_file, *rows, *xpos);
            emit_text(kagome::render_state_svg(st), *out);
        });
    }
}

void build_ham(CLI::App& app) {
    auto* ham = app.add_subcommand("ham", "truncated Hamiltonian jobs");
    ham->require_subcommand(1);

    {
        auto n_max = std::make_shared<int>(0);
        auto J = std::make_shared<double>(1.0);
        auto V = std::make_shared<double>(1.0);
        auto q = std::make_shared<double>(1.0);
        auto format = std::make_shared<std::string>("json");
        auto out = std::make_shared<std::string>();
        auto* cmd = ham->add_subcommand("matrix", "sparse matrix on the truncated basis");
        cmd->add_option("--n-max", *n_max, "truncation level")->required();
        cmd->add_option("--J", *J, "hopping strength");
        cmd->add_option("--V", *V, "potential strength");
        cmd->add_option("--q", *q, "weight parameter (positive)");
        cmd->add_option("--format", *format, "json or coo")
            ->check(CLI::IsMember({"json", "coo"}));
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n_max, J, V, q, format, out] {
            const kagome::TruncatedBasis basis(*n_max);
            const auto H = kagome::build_hamiltonian(basis, {*J, *V, *q});
            if (*format == "coo")
                emit_text(kagome::sparse_matrix_to_coo(H), *out);
            else
                emit_json(kagome::sparse_matrix_to_json(H), *out);
        });
    }
    {
        auto n_max = std::make_shared<int>(0);
        auto J = std::make_shared<double>(1.0);
        auto V = std::make_shared<double>(1.0);
        auto q = std::make_shared<double>(0.5);
        auto out = std::make_shared<std::string>();
        auto* cmd = ham->add_subcommand("ground-check",
                                        "residual of the weighted configuration sum");
        cmd->add_option("--n-max", *n_max, "truncation level")->required();
        cmd->add_option("--q", *q, "weight parameter (positive)")->required();
        cmd->add_option("--J", *J, "hopping strength");
        cmd->add_option("--V", *V, "potential strength");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n_max, J, V, q, out] {
            const double residual = kagome::ground_state_residual(*n_max, *q, *J, *V);
            emit_json(json{{"n_max", *n_max},
                           {"q", *q},
                           {"J", *J},
                           {"V", *V},
                           {"residual", residual},
                           {"tolerance", kGroundResidualTol},
                           {"pass", residual < kGroundResidualTol}},
                      *out);
        });
    }
}

void build_spec(CLI::App& app) {
    auto* spec = app.add_subcommand("spec", "spectra and thermal traces");
    spec->require_subcommand(1);

    {
        auto n_max = std::make_shared<int>(0);
        auto k = std::make_shared<int>(1);
        auto J = std::make_shared<double>(1.0);
        auto V = std::make_shared<double>(1.0);
        auto q = std::make_shared<double>(1.0);
        auto method = std::make_shared<std::string>("auto");
        auto format = std::make_shared<std::string>("json");
        auto out = std::make_shared<std::string>();
        auto* cmd = spec->add_subcommand("eigs", "lowest eigenvalues");
        cmd->add_option("--n-max", *n_max, "truncation level")->required();
        cmd->add_option("--k", *k, "number of eigenvalues")->required();
        cmd->add_option("--J", *J, "hopping strength");
        cmd->add_option("--V", *V, "potential strength");
        cmd->add_option("--q", *q, "weight parameter (positive)");
        cmd->add_option("--method", *method, "auto, dense, or lanczos")
            ->check(CLI::IsMember({"auto", "dense", "lanczos"}));
        cmd->add_option("--format", *format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n_max, k, J, V, q, method, format, out] {
            const kagome::TruncatedBasis basis(*n_max);
            const auto H = kagome::build_hamiltonian(basis, {*J, *V, *q});
            const kagome::EigMethod m = *method == "dense" ? kagome::EigMethod::dense
                                        : *method == "lanczos"
                                            ? kagome::EigMethod::lanczos
                                            : kagome::EigMethod::automatic;
            const auto eigs = kagome::lowest_eigenvalues(H, *k, m);
            if (*format == "csv") {
                std::string text = "index,eigenvalue\n";
                char buf[48];
                for (std::size_t i = 0; i < eigs.size(); ++i) {
                    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, eigs[i]);
                    text += buf;
                }
                emit_text(text, *out);
            } else {
                emit_json(json(eigs), *out);
            }
        });
    }
    {
        auto n_max = std::make_shared<int>(0);
        auto beta = std::make_shared<double>(1.0);
        auto J = std::make_shared<double>(1.0);
        auto V = std::make_shared<double>(1.0);
        auto q = std::make_shared<double>(1.0);
        auto out = std::make_shared<std::string>();
        auto* cmd = spec->add_subcommand("zq", "thermal trace on the truncated basis");
        cmd->add_option("--n-max", *n_max, "truncation level")->required();
        cmd->add_option("--beta", *beta, "inverse temperature")->required();
        cmd->add_option("--J", *J, "hopping strength");
        cmd->add_option("--V", *V, "potential strength");
        cmd->add_option("--q", *q, "weight parameter (positive)");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([n_max, beta, J, V, q, out] {
            const double z = kagome::quantum_partition_function(*n_max, {*J, *V, *q}, *beta);
            emit_json(json{{"n_max", *n_max}, {"beta", *beta}, {"value", z}}, *out);
        });
    }
}

void build_hex(CLI::App& app) {
    auto* hex = app.add_subcommand("hex", "hexagon classes and torus configuration sums");
    hex->require_subcommand(1);

    {
        auto out = std::make_shared<std::string>();
        auto* cmd = hex->add_subcommand("list", "the 18 allowed classes");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([out] {
            std::string text = "[\n";
            const auto classes = kagome::enumerate_allowed();
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const unsigned mask = kagome::hex_class_mask(classes[i]);
                json positions = json::array();
                for (int p = 1; p <= 6; ++p)
                    if ((mask >> (p - 1)) & 1u) positions.push_back(p);
                const json row = {{"label", kagome::hex_class_label(classes[i])},
                                  {"particles", kagome::hex_class_particles(classes[i])},
                                  {"positions", positions}};
                text += row.dump();
                text += i + 1 < classes.size() ? ",\n" : "\n";
            }
            text += "]\n";
            emit_text(text, *out);
        });
    }
    {
        auto positions = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto* cmd = hex->add_subcommand("classify", "classify an occupation pattern");
        cmd->add_option("--positions", *positions,
                        "comma-separated occupied positions in 1..6, e.g. 1,4,5")
            ->required();
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([positions, out] {
            kagome::HexagonConfig cfg;
            json occupied = json::array();
            std::string tok;
            std::istringstream in(*positions);
            while (std::getline(in, tok, ',')) {
                if (tok.empty()) continue;
                std::size_t used = 0;
                const int p = std::stoi(tok, &used);
                if (tok.find_first_not_of(" \t", used) != std::string::npos)
                    throw std::invalid_argument("positions must be comma-separated");
                if (p < 1 || p > 6)
                    throw std::invalid_argument("positions must lie in 1..6");
                cfg.occ[p - 1] = true;
            }
            for (int p = 1; p <= 6; ++p)
                if (cfg.occ[p - 1]) occupied.push_back(p);
            const auto cls = kagome::classify(cfg);
            emit_json(json{{"positions", occupied},
                           {"allowed", cls.has_value()},
                           {"label", cls ? json(kagome::hex_class_label(*cls)) : json()}},
                      *out);
        });
    }
    {
        auto M = std::make_shared<int>(1);
        auto N = std::make_shared<int>(1);
        auto rules = std::make_shared<std::string>("vertical");
        auto out = std::make_shared<std::string>();
        auto* cmd = hex->add_subcommand("torus-count", "count torus configurations");
        cmd->add_option("--M", *M, "cells per row");
        cmd->add_option("--N", *N, "rows");
        cmd->add_option("--rules", *rules, "vertical or kagome")
            ->check(CLI::IsMember({"vertical", "kagome"}));
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([M, N, rules, out] {
            kagome::TorusSpec spec;
            spec.M = *M;
            spec.N = *N;
            spec.rules = parse_rules(*rules);
            emit_json(json{{"M", *M},
                           {"N", *N},
                           {"rules", *rules},
                           {"count", kagome::enumerate_torus_configs(spec).size()}},
                      *out);
        });
    }
    {
        auto M = std::make_shared<int>(1);
        auto N = std::make_shared<int>(1);
        auto rules = std::make_shared<std::string>("vertical");
        auto src = std::make_shared<TableSource>();
        auto out = std::make_shared<std::string>();
        auto* cmd = hex->add_subcommand("zclassical", "weighted torus configuration sum");
        cmd->add_option("--M", *M, "cells per row");
        cmd->add_option("--N", *N, "rows");
        cmd->add_option("--rules", *rules, "vertical or kagome")
            ->check(CLI::IsMember({"vertical", "kagome"}));
        add_table_options(cmd, *src);
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([M, N, rules, src, out] {
            kagome::TorusSpec spec;
            spec.M = *M;
            spec.N = *N;
            spec.rules = parse_rules(*rules);
            const cd z = kagome::classical_partition_function(spec, src->resolve());
            json j = {{"M", *M}, {"N", *N}, {"rules", *rules}, {"value", complex_to_json(z)}};
            j.update(src->describe());
            emit_json(j, *out);
        });
    }
}

void build_tm(CLI::App& app) {
    auto* tm = app.add_subcommand("tm", "row transfer matrices");
    tm->require_subcommand(1);

    {
        auto M = std::make_shared<int>(1);
        auto offset = std::make_shared<std::string>("even");
        auto rules = std::make_shared<std::string>("vertical");
        auto src = std::make_shared<TableSource>();
        auto out = std::make_shared<std::string>();
        auto* cmd = tm->add_subcommand("build", "assemble one row transfer matrix");
        cmd->add_option("--M", *M, "cells per row")->required();
        cmd->add_option("--offset", *offset, "even or odd")
            ->check(CLI::IsMember({"even", "odd"}));
        cmd->add_option("--rules", *rules, "vertical or kagome")
            ->check(CLI::IsMember({"vertical", "kagome"}));
        add_table_options(cmd, *src);
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([M, offset, rules, src, out] {
            const auto t = kagome::transfer_matrix(
                src->resolve(), *M,
                *offset == "odd" ? kagome::RowOffset::odd : kagome::RowOffset::even,
                parse_rules(*rules));
            emit_json(kagome::complex_matrix_to_json(t.mat), *out);
        });
    }
    {
        auto M = std::make_shared<int>(3);
        auto seed = std::make_shared<long long>(0);
        auto out = std::make_shared<std::string>();
        auto* cmd = tm->add_subcommand("commutator",
                                       "even/odd commutator for a seeded table pair");
        cmd->add_option("--M", *M, "cells per row");
        cmd->add_option("--seed", *seed, "pair seed: tables 2*seed and 2*seed+1")
            ->required();
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([M, seed, out] {
            const auto Wu = kagome::WeightTable::random(2 * static_cast<std::uint64_t>(*seed));
            const auto Wv =
                kagome::WeightTable::random(2 * static_cast<std::uint64_t>(*seed) + 1);
            const auto t = kagome::transfer_matrix(Wu, *M, kagome::RowOffset::even,
                                                   kagome::RuleSystem::vertical);
            const auto tt = kagome::transfer_matrix(Wv, *M, kagome::RowOffset::odd,
                                                    kagome::RuleSystem::vertical);
            const auto S = kagome::slot_shift_matrix(*M);
            const auto to_u = kagome::transfer_matrix(Wu, *M, kagome::RowOffset::odd,
                                                      kagome::RuleSystem::vertical);
            emit_json(json{{"M", *M},
                           {"seed", *seed},
                           {"commutator_norm", (t.mat * tt.mat - tt.mat * t.mat).norm()},
                           {"shift_defect",
                            (S * t.mat * S.transpose() - to_u.mat).norm()}},
                      *out);
        });
    }
}

// Shared flags for the commuting-family subcommands.
struct FamilyPoint {
    double u_re = 0.0, u_im = 0.0;
    double v_re = 0.0, v_im = 0.0;
    double a_re = 0.0, a_im = 0.0;
    std::string table_u, table_v;

    bool parametric() const { return table_u.empty(); }
    cd u() const { return {u_re, u_im}; }
    cd v() const { return {v_re, v_im}; }
    cd aniso() const { return {a_re, a_im}; }

    kagome::WeightTable resolve_u() const {
        if (!parametric())
            return kagome::weight_table_from_json(json::parse(kagome::read_text_file(table_u)));
        return kagome::descendant_weights(u(), aniso());
    }
    kagome::WeightTable resolve_v() const {
        if (!parametric()) {
            if (table_v.empty())
                throw std::invalid_argument("--table-v is required with --table-u");
            return kagome::weight_table_from_json(json::parse(kagome::read_text_file(table_v)));
        }
        return kagome::descendant_weights(v(), aniso());
    }
};

void add_point_options(CLI::App* cmd, FamilyPoint& pt, bool with_v) {
    cmd->add_option("--u-re", pt.u_re, "Re u");
    cmd->add_option("--u-im", pt.u_im, "Im u");
    if (with_v) {
        cmd->add_option("--v-re", pt.v_re, "Re v");
        cmd->add_option("--v-im", pt.v_im, "Im v");
    }
    cmd->add_option("--aniso-re", pt.a_re, "Re anisotropy");
    cmd->add_option("--aniso-im", pt.a_im, "Im anisotropy");
    if (with_v) {
        cmd->add_option("--table-u", pt.table_u, "weight table JSON file (first row)");
        cmd->add_option("--table-v", pt.table_v, "weight table JSON file (second row)");
    }
}

Eigen::Matrix4cd r_matrix_4(const Eigen::MatrixXcd& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("the intertwiner must be 4x4");
    return m;
}

void build_fcr(CLI::App& app) {
    auto* fcr = app.add_subcommand("fcr", "intertwiner solving and residuals");
    fcr->require_subcommand(1);

    {
        auto pt = std::make_shared<FamilyPoint>();
        auto out = std::make_shared<std::string>();
        auto* cmd = fcr->add_subcommand("solve", "kernel direction of the intertwining system");
        add_point_options(cmd, *pt, true);
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([pt, out] {
            const auto Wu = pt->resolve_u();
            const auto Wv = pt->resolve_v();
            const auto res = kagome::solve_R(Wu, Wv);
            json j = kagome::solve_report_to_json(res, kagome::fcr_residual(res.R, Wu, Wv));
            j["R"] = kagome::complex_matrix_to_json(res.R.mat);
            emit_json(j, *out);
        });
    }
    {
        auto pt = std::make_shared<FamilyPoint>();
        auto r_file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto* cmd = fcr->add_subcommand("residual", "intertwining defect of a given R");
        add_point_options(cmd, *pt, true);
        cmd->add_option("--r", *r_file, "R matrix JSON file (default: closed form)");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([pt, r_file, out] {
            kagome::RMatrix R;
            if (!r_file->empty())
                R.mat = r_matrix_4(kagome::complex_matrix_from_json(
                    json::parse(kagome::read_text_file(*r_file))));
            else
                R = kagome::descendant_r_matrix(pt->u(), pt->v(), pt->aniso());
            emit_json(json{{"residual",
                            kagome::fcr_residual(R, pt->resolve_u(), pt->resolve_v())}},
                      *out);
        });
    }
}

void build_rtt(CLI::App& app) {
    auto* rtt = app.add_subcommand("rtt", "chain-level intertwining checks");
    rtt->require_subcommand(1);

    {
        auto pt = std::make_shared<FamilyPoint>();
        auto M = std::make_shared<int>(2);
        auto r_file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto* cmd = rtt->add_subcommand("check", "defect of R against M-cell chains");
        add_point_options(cmd, *pt, true);
        cmd->add_option("--M", *M, "cells per chain");
        cmd->add_option("--r", *r_file, "R matrix JSON file (default: closed form / solve)");
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([pt, M, r_file, out] {
            const auto Wu = pt->resolve_u();
            const auto Wv = pt->resolve_v();
            kagome::RMatrix R;
            if (!r_file->empty())
                R.mat = r_matrix_4(kagome::complex_matrix_from_json(
                    json::parse(kagome::read_text_file(*r_file))));
            else if (pt->parametric())
                R = kagome::descendant_r_matrix(pt->u(), pt->v(), pt->aniso());
            else
                R = kagome::solve_R(Wu, Wv).R;
            emit_json(json{{"M", *M},
                           {"residual", kagome::rtt_residual(R, kagome::monodromy(Wu, *M),
                                                             kagome::monodromy(Wv, *M))}},
                      *out);
        });
    }
}

void build_descend(CLI::App& app) {
    auto* descend = app.add_subcommand("descend", "the commuting one-parameter family");
    descend->require_subcommand(1);

    {
        auto pt = std::make_shared<FamilyPoint>();
        auto out = std::make_shared<std::string>();
        auto* cmd = descend->add_subcommand("weights", "weight table at a parameter point");
        add_point_options(cmd, *pt, false);
        cmd->add_option("--out", *out, "output path (default stdout)");
        cmd->callback([pt, out] {
            emit_json(kagome::weight_table_to_json(
                          kagome::descendant_weights(pt->u(), pt->aniso())),
                      *out);
        });
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale workbench for melting-crystal states, hexagon vertex "
                 "classes, and row-transfer algebra"};
    app.require_subcommand(1);

    build_pp(app);
    build_lattice(app);
    build_ham(app);
    build_spec(app);
    build_hex(app);
    build_tm(app);
    build_fcr(app);
    build_rtt(app);
    build_descend(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : 2;
    } catch (const kagome::Error& e) {
        std::cout << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
    return 0;
}
