#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "kagome/hexagons.hpp"
#include "kagome/lax.hpp"

using namespace kagome;

namespace {

const std::array<std::string, 18> kLabels = {
    "0",    "1_1",  "1_2",  "1_3",  "1_4",  "1_5",  "1_6",  "2_14", "2_15",
    "2_16", "2_23", "2_25", "2_26", "2_34", "2_36", "2_45", "3_145", "3_236"};

HexagonConfig config_from_mask(unsigned mask) {
    HexagonConfig cfg;
    for (int p = 0; p < 6; ++p)
        cfg.occ[p] = (mask >> p) & 1u;
    return cfg;
}

PlacedHexagon placed(int row, int col, HexClass c) {
    return {row, col, config_from_mask(hex_class_mask(c))};
}

} // namespace

TEST_CASE("exhaustive scan finds 18 allowed classes with tallies 1/6/9/2") {
    const auto classes = enumerate_allowed();
    REQUIRE(classes.size() == 18);

    std::array<int, 4> tally{};
    std::set<unsigned> masks;
    for (const auto c : classes) {
        ++tally.at(hex_class_particles(c));
        CHECK(masks.insert(hex_class_mask(c)).second);
    }
    CHECK(tally == std::array<int, 4>{1, 6, 9, 2});

    // No allowed mask may occupy two sites at unit distance.
    const int adjacent[6][2] = {{1, 2}, {2, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 1}};
    for (const unsigned m : masks)
        for (const auto& e : adjacent)
            CHECK(((m >> (e[0] - 1)) & (m >> (e[1] - 1)) & 1u) == 0u);
}

TEST_CASE("class labels are frozen and bijective") {
    for (int i = 0; i < kNumHexClasses; ++i) {
        const auto c = static_cast<HexClass>(i);
        CHECK(hex_class_label(c) == kLabels[i]);
        const auto back = hex_class_from_label(kLabels[i]);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK_FALSE(hex_class_from_label("2_11").has_value());
    CHECK_FALSE(hex_class_from_label("").has_value());
}

TEST_CASE("classification accepts exactly the independent patterns") {
    CHECK(classify(config_from_mask(0)) == HexClass::c0);
    CHECK(classify(config_from_mask(1u << 0)) == HexClass::c1_1);
    // positions 1 and 2 touch
    CHECK_FALSE(classify(config_from_mask(0b000011)).has_value());
    // positions 1, 4, 5 form the creation-eligible triple
    CHECK(classify(config_from_mask((1u << 0) | (1u << 3) | (1u << 4))) ==
          HexClass::c3_145);
    CHECK(classify(config_from_mask((1u << 1) | (1u << 2) | (1u << 5))) ==
          HexClass::c3_236);

    int allowed = 0;
    for (unsigned m = 0; m < 64; ++m)
        if (classify(config_from_mask(m)).has_value())
            ++allowed;
    CHECK(allowed == 18);
}

TEST_CASE("weight tables: access, completeness, generators") {
    WeightTable t;
    CHECK_FALSE(t.has(HexClass::c0));
    CHECK_THROWS_AS(t.get(HexClass::c0), MissingWeight);
    t.set(HexClass::c0, {2.0, -1.0});
    CHECK(t.get(HexClass::c0) == std::complex<double>(2.0, -1.0));
    CHECK_FALSE(t.complete());

    const WeightTable unit = WeightTable::all_unit();
    CHECK(unit.complete());
    for (const auto c : enumerate_allowed())
        CHECK(unit.get(c) == std::complex<double>(1.0, 0.0));

    std::array<double, kNumHexClasses> eps{};
    eps[0] = 0.5;
    eps[17] = -1.25;
    const WeightTable boltz = WeightTable::from_energies(eps, 2.0);
    CHECK(boltz.get(HexClass::c0).real() == doctest::Approx(std::exp(-1.0)));
    CHECK(boltz.get(HexClass::c3_236).real() == doctest::Approx(std::exp(2.5)));

    const WeightTable r1 = WeightTable::random(42);
    const WeightTable r2 = WeightTable::random(42);
    CHECK(r1 == r2);
    CHECK_FALSE(r1 == WeightTable::random(43));
    for (const auto c : enumerate_allowed()) {
        CHECK(std::abs(r1.get(c).real()) <= 0.5);
        CHECK(std::abs(r1.get(c).imag()) <= 0.5);
    }
}

TEST_CASE("shared-site gluing rules") {
    // Horizontal neighbors share the right/left integer site (4 <-> 3).
    CHECK(glue_check(placed(0, 0, HexClass::c2_34), placed(0, 1, HexClass::c1_3), RuleSystem::vertical));
    CHECK_FALSE(glue_check(placed(0, 0, HexClass::c2_34), placed(0, 1, HexClass::c0), RuleSystem::vertical));
    CHECK(glue_check(placed(0, 1, HexClass::c1_3), placed(0, 0, HexClass::c2_34), RuleSystem::vertical));

    // Stacked rows: both half-integer sites must match under vertical rules.
    CHECK(glue_check(placed(0, 0, HexClass::c2_45), placed(1, 0, HexClass::c1_1), RuleSystem::vertical));
    CHECK_FALSE(glue_check(placed(0, 0, HexClass::c2_45), placed(1, 0, HexClass::c1_2), RuleSystem::vertical));
    CHECK(glue_check(placed(0, 0, HexClass::c0), placed(1, 0, HexClass::c2_34), RuleSystem::vertical));

    // Offset stacking shares single sites (6 <-> 1 above, 5 <-> 2 up-left).
    CHECK(glue_check(placed(0, 0, HexClass::c1_6), placed(1, 0, HexClass::c1_1), RuleSystem::kagome));
    CHECK_FALSE(glue_check(placed(0, 0, HexClass::c1_6), placed(1, 0, HexClass::c0), RuleSystem::kagome));
    CHECK(glue_check(placed(0, 0, HexClass::c1_5), placed(1, -1, HexClass::c1_2), RuleSystem::kagome));
    CHECK_FALSE(glue_check(placed(0, 0, HexClass::c1_5), placed(1, -1, HexClass::c1_1), RuleSystem::kagome));

    CHECK_THROWS_AS(glue_check(placed(0, 0, HexClass::c0), placed(2, 0, HexClass::c0), RuleSystem::vertical),
                    NotAdjacent);
    CHECK_THROWS_AS(glue_check(placed(0, 0, HexClass::c0), placed(1, 1, HexClass::c0), RuleSystem::vertical),
                    NotAdjacent);
}

TEST_CASE("single-cell torus admits exactly the four matched classes") {
    TorusSpec spec;
    spec.M = 1;
    spec.N = 1;

    spec.rules = RuleSystem::vertical;
    const auto vert = enumerate_torus_configs(spec);
    std::set<HexClass> vert_classes;
    for (const auto& cfg : vert)
        vert_classes.insert(cfg.cells.at(0));
    CHECK(vert_classes == std::set<HexClass>{HexClass::c0, HexClass::c2_15,
                                             HexClass::c2_26, HexClass::c2_34});

    spec.rules = RuleSystem::kagome;
    const auto kag = enumerate_torus_configs(spec);
    std::set<HexClass> kag_classes;
    for (const auto& cfg : kag)
        kag_classes.insert(cfg.cells.at(0));
    CHECK(kag_classes == std::set<HexClass>{HexClass::c0, HexClass::c2_16,
                                            HexClass::c2_25, HexClass::c2_34});
}

TEST_CASE("torus tallies count the cells") {
    TorusSpec spec;
    spec.M = 2;
    spec.N = 1;
    for (const auto& cfg : enumerate_torus_configs(spec)) {
        REQUIRE(cfg.cells.size() == 2);
        int total = 0;
        for (int i = 0; i < kNumHexClasses; ++i)
            total += cfg.tally.counts[i];
        CHECK(total == 2);
    }
}

TEST_CASE("torus enumeration refuses oversized lattices") {
    TorusSpec spec;
    spec.M = 3;
    spec.N = 3; // 27 sites > 24
    CHECK_THROWS_AS(enumerate_torus_configs(spec), BeyondBound);
}

TEST_CASE("configuration sums: unit weights count configurations") {
    TorusSpec spec;
    spec.M = 1;
    spec.N = 1;
    const WeightTable unit = WeightTable::all_unit();
    spec.rules = RuleSystem::vertical;
    CHECK(classical_partition_function(spec, unit) == std::complex<double>(4.0, 0.0));
    spec.rules = RuleSystem::kagome;
    CHECK(classical_partition_function(spec, unit) == std::complex<double>(4.0, 0.0));
}

TEST_CASE("configuration sums agree with the transfer-trace route") {
    for (const std::uint64_t seed : {5u, 6u, 7u}) {
        const WeightTable table = WeightTable::random(seed);
        for (int M = 1; M <= 2; ++M) {
            for (int N = 1; N <= 2; ++N) {
                TorusSpec spec;
                spec.M = M;
                spec.N = N;
                spec.rules = RuleSystem::vertical;
                const auto direct = classical_partition_function(spec, table);
                const auto traced = classical_partition_function_transfer(table, M, N);
                CHECK(std::abs(direct - traced) <= 1e-12);
            }
        }
    }
}
