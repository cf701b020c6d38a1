#pragma once

#include <string>

#include <json.hpp>

#include "kagome/hexagons.hpp"
#include "kagome/lattice.hpp"
#include "kagome/lax.hpp"
#include "kagome/partitions.hpp"
#include "kagome/spectra.hpp"

namespace kagome {

// Plane partitions <-> row-major height arrays, e.g. [[2,1],[1]].
nlohmann::json partition_to_json(const PlanePartition& pp);
PlanePartition partition_from_json(const nlohmann::json& j);

// Lattice states <-> {"window": {...}, "flips": [{"kind":"X","a":..,"m":..},
// {"kind":"Y","a":..,"r2":..}, ...]}.
nlohmann::json state_to_json(const LatticeState& state);
LatticeState state_from_json(const nlohmann::json& j);

// Weight tables <-> {"0": [re, im], "1_1": [re, im], ...}. Unknown labels are
// rejected; absent labels stay unset.
nlohmann::json weight_table_to_json(const WeightTable& table);
WeightTable weight_table_from_json(const nlohmann::json& j);

// Sparse matrix exports: coordinate text ("row col value" per line, 17
// significant digits) and JSON {"dimension": d, "entries": [[r,c,v], ...]}.
std::string sparse_matrix_to_coo(const SparseOperatorMatrix& mat);
nlohmann::json sparse_matrix_to_json(const SparseOperatorMatrix& mat);

// Complex matrices as nested arrays of [re, im].
nlohmann::json complex_matrix_to_json(const Eigen::MatrixXcd& mat);
Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j);

// Solver report: {"residual": .., "kernel_dim": .., "singular_values": [..]}.
nlohmann::json solve_report_to_json(const RSolveResult& result, double residual);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace kagome
