#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kagome/errors.hpp"
#include "kagome/lattice.hpp"

namespace kagome {

// The 18 physical hexagon configurations, named <particle count>_<occupied
// positions>. Enum order = lexicographic label order; this is also the
// storage order of WeightTable and the JSON key set.
enum class HexClass : std::uint8_t {
    c0,     // empty
    c1_1, c1_2, c1_3, c1_4, c1_5, c1_6,
    c2_14, c2_15, c2_16, c2_23, c2_25, c2_26, c2_34, c2_36, c2_45,
    c3_145, c3_236,
};

inline constexpr int kNumHexClasses = 18;

const std::string& hex_class_label(HexClass c);
std::optional<HexClass> hex_class_from_label(const std::string& label);
unsigned hex_class_mask(HexClass c); // bit p-1 set when position p is occupied
int hex_class_particles(HexClass c);

// nullopt = forbidden: two occupied sites at unit distance inside the cell
// (equivalently, not an independent set of the hexagon's six-cycle of
// adjacencies 1-2, 2-4, 4-6, 6-5, 5-3, 3-1).
std::optional<HexClass> classify(const HexagonConfig& cfg);

// The 18 classes, one per allowed mask from the exhaustive 64-state scan.
std::vector<HexClass> enumerate_allowed();

// Complex Boltzmann weight per class. Partially filled tables are allowed to
// exist; reading an unset class throws MissingWeight.
class WeightTable {
public:
    WeightTable() = default;

    void set(HexClass c, std::complex<double> w);
    std::complex<double> get(HexClass c) const;
    bool has(HexClass c) const;
    bool complete() const;

    static WeightTable all_unit();
    static WeightTable from_energies(const std::array<double, kNumHexClasses>& eps,
                                     double beta);
    // Deterministic random table: re and im uniform in [-1/2, 1/2].
    static WeightTable random(std::uint64_t seed);

    bool operator==(const WeightTable&) const = default;

private:
    std::array<std::optional<std::complex<double>>, kNumHexClasses> w_{};
};

enum class RuleSystem { kagome, vertical };

struct PlacedHexagon {
    int row = 0;
    int col = 0;
    HexagonConfig config;
};

// Shared-site compatibility between neighboring cells.
//   horizontal (same row, B right of A):  A.pos4 == B.pos3
//   kagome up-right (B row above, same col):       A.pos6 == B.pos1
//   kagome up-left  (B row above, col one left):   A.pos5 == B.pos2
//   vertical (B row above, same col): A.pos5 == B.pos1 and A.pos6 == B.pos2
// The mirrored placements check the same equalities with roles swapped.
// Throws NotAdjacent for any other placement.
bool glue_check(const PlacedHexagon& A, const PlacedHexagon& B, RuleSystem rules);

struct TorusSpec {
    int M = 1; // cells per row
    int N = 1; // rows
    RuleSystem rules = RuleSystem::vertical;
};

struct ConfigTally {
    std::array<int, kNumHexClasses> counts{};
};

struct TorusConfiguration {
    std::vector<HexClass> cells; // row-major, size M*N
    ConfigTally tally;
};

// Every class assignment satisfying all gluing constraints with periodic
// wrap in both directions. Exhaustive; refuses tori with more than 24 sites
// (3 per cell).
std::vector<TorusConfiguration> enumerate_torus_configs(const TorusSpec& spec);

// Sum over configurations of the product of cell weights. Exhaustive within
// the site bound; vertical-rule tori fall back to a transfer-matrix trace for
// larger M x N (implementation lives with the transfer machinery).
std::complex<double> classical_partition_function(const TorusSpec& spec,
                                                  const WeightTable& table);

} // namespace kagome
