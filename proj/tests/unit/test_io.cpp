#include <doctest.h>

#include <cstdio>
#include <string>

#include "kagome/io.hpp"
#include "kagome/svg.hpp"

using namespace kagome;

TEST_CASE("partition JSON round trip") {
    const PlanePartition pp = PlanePartition::from_heights({{2, 1}, {1}});
    const nlohmann::json j = partition_to_json(pp);
    CHECK(j.dump() == "[[2,1],[1]]");
    CHECK(partition_from_json(j) == pp);
    CHECK(partition_from_json(nlohmann::json::parse("[]")).empty());
    CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[[1,2]]")),
                    std::invalid_argument);
}

TEST_CASE("lattice state JSON round trip") {
    const Window win = Window::for_boxes(2);
    const LatticeState one =
        flip_hexagon(vacuum_state(win), 0, 0, FlipDirection::create);
    const nlohmann::json j = state_to_json(one);
    CHECK(j.at("window").at("max_abs_row").get<int>() == win.max_abs_row);
    CHECK(j.at("flips").size() == 6);
    CHECK(state_from_json(j) == one);

    nlohmann::json bad = j;
    bad["flips"][0]["kind"] = "Z";
    CHECK_THROWS_AS(state_from_json(bad), std::invalid_argument);
}

TEST_CASE("weight table JSON round trip") {
    const WeightTable table = WeightTable::random(3);
    const nlohmann::json j = weight_table_to_json(table);
    CHECK(j.size() == 18);
    const WeightTable back = weight_table_from_json(j);
    CHECK(back == table);

    WeightTable partial;
    partial.set(HexClass::c2_15, {0.25, -1.0});
    const nlohmann::json jp = weight_table_to_json(partial);
    CHECK(jp.size() == 1);
    CHECK(weight_table_from_json(jp) == partial);

    CHECK_THROWS_AS(weight_table_from_json(nlohmann::json::parse(R"({"9_9":[0,0]})")),
                    std::invalid_argument);
}

TEST_CASE("sparse matrix exports") {
    SparseOperatorMatrix mat;
    mat.dimension = 2;
    mat.entries = {{0, 0, 1.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 4.0}};

    CHECK(sparse_matrix_to_coo(mat) == "0 0 1\n0 1 -1\n1 0 -1\n1 1 4\n");

    const nlohmann::json j = sparse_matrix_to_json(mat);
    CHECK(j.at("dimension").get<int>() == 2);
    CHECK(j.at("entries").size() == 4);
    CHECK(j.at("entries").at(3).at(2).get<double>() == 4.0);
}

TEST_CASE("complex matrix JSON round trip") {
    Eigen::MatrixXcd m(2, 3);
    m << std::complex<double>(1, 2), std::complex<double>(0, 0),
        std::complex<double>(-0.5, 0.25), std::complex<double>(3, -4),
        std::complex<double>(1e-17, 2e8), std::complex<double>(0, -1);
    const Eigen::MatrixXcd back = complex_matrix_from_json(complex_matrix_to_json(m));
    REQUIRE(back.rows() == 2);
    REQUIRE(back.cols() == 3);
    CHECK((back - m).norm() == 0.0);

    CHECK_THROWS_AS(complex_matrix_from_json(nlohmann::json::parse("[[[0,0]],[]]")),
                    std::invalid_argument);
}

TEST_CASE("text file round trip") {
    const std::string path = "kagome_io_test.tmp";
    const std::string payload = "line1\nline2\n";
    write_text_file(path, payload);
    CHECK(read_text_file(path) == payload);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file(path), std::runtime_error);
}

TEST_CASE("lattice rendering is deterministic and localized") {
    const Window win = Window::for_boxes(1);
    const LatticeState vac = vacuum_state(win);
    const LatticeState one = flip_hexagon(vac, 0, 0, FlipDirection::create);

    const std::string svg_vac = render_state_svg(vac);
    CHECK(svg_vac == render_state_svg(vac)); // byte-identical reruns
    CHECK(svg_vac.rfind("<svg", 0) == 0);
    CHECK(svg_vac.find("</svg>") != std::string::npos);

    // A single flip changes exactly its six site fills plus plaquette marks.
    const std::string svg_one = render_state_svg(one);
    CHECK(svg_one != svg_vac);

    auto circle_lines = [](const std::string& doc) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while ((pos = doc.find("<circle", pos)) != std::string::npos) {
            const std::size_t end = doc.find('\n', pos);
            out.push_back(doc.substr(pos, end - pos));
            pos = end;
        }
        return out;
    };
    const auto a = circle_lines(svg_vac);
    const auto b = circle_lines(svg_one);
    REQUIRE(a.size() == b.size());
    int changed = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++changed;
    CHECK(changed == 6);
}
