#include "kagome/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kagome {

using nlohmann::json;

json partition_to_json(const PlanePartition& pp) {
    return json(pp.heights());
}

PlanePartition partition_from_json(const json& j) {
    return PlanePartition::from_heights(j.get<std::vector<std::vector<int>>>());
}

json state_to_json(const LatticeState& state) {
    json flips = json::array();
    for (const SiteId& s : state.flips()) {
        if (s.kind == SiteKind::X)
            flips.push_back({{"kind", "X"}, {"a", s.row}, {"m", s.pos}});
        else
            flips.push_back({{"kind", "Y"}, {"a", s.row}, {"r2", s.pos}});
    }
    return {{"window",
             {{"max_abs_row", state.window().max_abs_row},
              {"max_abs_xpos", state.window().max_abs_xpos}}},
            {"flips", flips}};
}

LatticeState state_from_json(const json& j) {
    Window w{j.at("window").at("max_abs_row").get<int>(),
             j.at("window").at("max_abs_xpos").get<int>()};
    std::set<SiteId> flips;
    for (const json& f : j.at("flips")) {
        const std::string kind = f.at("kind").get<std::string>();
        if (kind == "X")
            flips.insert(x_site(f.at("a").get<int>(), f.at("m").get<int>()));
        else if (kind == "Y")
            flips.insert(y_site(f.at("a").get<int>(), f.at("r2").get<int>()));
        else
            throw std::invalid_argument("flip kind must be X or Y");
    }
    return LatticeState(w, std::move(flips));
}

json weight_table_to_json(const WeightTable& table) {
    json out = json::object();
    for (int i = 0; i < kNumHexClasses; ++i) {
        const HexClass c = static_cast<HexClass>(i);
        if (table.has(c)) {
            const auto w = table.get(c);
            out[hex_class_label(c)] = {w.real(), w.imag()};
        }
    }
    return out;
}

WeightTable weight_table_from_json(const json& j) {
    WeightTable table;
    for (const auto& [label, value] : j.items()) {
        const auto cls = hex_class_from_label(label);
        if (!cls) throw std::invalid_argument("unknown hexagon class label: " + label);
        table.set(*cls, {value.at(0).get<double>(), value.at(1).get<double>()});
    }
    return table;
}

std::string sparse_matrix_to_coo(const SparseOperatorMatrix& mat) {
    std::ostringstream out;
    char buf[40];
    for (const auto& [r, c, v] : mat.entries) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << r << ' ' << c << ' ' << buf << '\n';
    }
    return out.str();
}

json sparse_matrix_to_json(const SparseOperatorMatrix& mat) {
    json entries = json::array();
    for (const auto& [r, c, v] : mat.entries) entries.push_back({r, c, v});
    return {{"dimension", mat.dimension}, {"entries", entries}};
}

json complex_matrix_to_json(const Eigen::MatrixXcd& mat) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < mat.cols(); ++c)
            row.push_back({mat(r, c).real(), mat(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Eigen::MatrixXcd mat(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j.at(r).size()) != cols)
            throw std::invalid_argument("ragged complex matrix");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& cell = j.at(r).at(c);
            mat(r, c) = {cell.at(0).get<double>(), cell.at(1).get<double>()};
        }
    }
    return mat;
}

json solve_report_to_json(const RSolveResult& result, double residual) {
    return {{"residual", residual},
            {"kernel_dim", result.kernel_dim},
            {"singular_values", result.singular_values}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace kagome
