#include "kagome/hexagons.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace kagome {

namespace {

// Unit-distance pairs inside the cell, as position bits: the six-cycle
// 1-2, 2-4, 4-6, 6-5, 5-3, 3-1.
constexpr std::array<std::pair<int, int>, 6> kAdjacent = {{
    {1, 2}, {2, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 1},
}};

bool mask_allowed(unsigned mask) {
    for (const auto& [p, q] : kAdjacent)
        if ((mask >> (p - 1) & 1u) && (mask >> (q - 1) & 1u)) return false;
    return true;
}

std::string mask_label(unsigned mask) {
    const int n = std::popcount(mask);
    if (n == 0) return "0";
    std::string label = std::to_string(n) + "_";
    for (int p = 1; p <= 6; ++p)
        if (mask >> (p - 1) & 1u) label += static_cast<char>('0' + p);
    return label;
}

struct ClassTables {
    std::array<std::string, kNumHexClasses> labels;
    std::array<unsigned, kNumHexClasses> masks;
    std::array<std::optional<HexClass>, 64> by_mask;
    std::map<std::string, HexClass> by_label;
};

const ClassTables& tables() {
    static const ClassTables t = [] {
        // Scan all 64 occupation patterns, keep the independent sets, sort by
        // label: that order *is* the HexClass enum order.
        std::vector<std::pair<std::string, unsigned>> found;
        for (unsigned mask = 0; mask < 64; ++mask)
            if (mask_allowed(mask)) found.push_back({mask_label(mask), mask});
        std::sort(found.begin(), found.end());
        if (found.size() != kNumHexClasses)
            throw std::logic_error("hexagon class scan does not yield 18 states");
        ClassTables t;
        for (std::size_t i = 0; i < found.size(); ++i) {
            t.labels[i] = found[i].first;
            t.masks[i] = found[i].second;
            t.by_mask[found[i].second] = static_cast<HexClass>(i);
            t.by_label[found[i].first] = static_cast<HexClass>(i);
        }
        return t;
    }();
    return t;
}

} // namespace

const std::string& hex_class_label(HexClass c) {
    return tables().labels[static_cast<int>(c)];
}

std::optional<HexClass> hex_class_from_label(const std::string& label) {
    const auto& by_label = tables().by_label;
    auto it = by_label.find(label);
    if (it == by_label.end()) return std::nullopt;
    return it->second;
}

unsigned hex_class_mask(HexClass c) { return tables().masks[static_cast<int>(c)]; }

int hex_class_particles(HexClass c) {
    return std::popcount(hex_class_mask(c));
}

std::optional<HexClass> classify(const HexagonConfig& cfg) {
    return tables().by_mask[cfg.mask()];
}

std::vector<HexClass> enumerate_allowed() {
    std::vector<HexClass> out;
    out.reserve(kNumHexClasses);
    for (int i = 0; i < kNumHexClasses; ++i) out.push_back(static_cast<HexClass>(i));
    return out;
}

void WeightTable::set(HexClass c, std::complex<double> w) {
    w_[static_cast<int>(c)] = w;
}

std::complex<double> WeightTable::get(HexClass c) const {
    const auto& slot = w_[static_cast<int>(c)];
    if (!slot) throw MissingWeight("no weight for class " + hex_class_label(c));
    return *slot;
}

bool WeightTable::has(HexClass c) const { return w_[static_cast<int>(c)].has_value(); }

bool WeightTable::complete() const {
    return std::all_of(w_.begin(), w_.end(), [](const auto& s) { return s.has_value(); });
}

WeightTable WeightTable::all_unit() {
    WeightTable t;
    for (int i = 0; i < kNumHexClasses; ++i) t.set(static_cast<HexClass>(i), 1.0);
    return t;
}

WeightTable WeightTable::from_energies(const std::array<double, kNumHexClasses>& eps,
                                       double beta) {
    WeightTable t;
    for (int i = 0; i < kNumHexClasses; ++i)
        t.set(static_cast<HexClass>(i), std::exp(-beta * eps[i]));
    return t;
}

WeightTable WeightTable::random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Map the top 53 bits to [0,1); keeps the stream layout explicit and
    // platform-stable, unlike distribution objects.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1p-53; };
    WeightTable t;
    for (int i = 0; i < kNumHexClasses; ++i) {
        const double re = unit() - 0.5;
        const double im = unit() - 0.5;
        t.set(static_cast<HexClass>(i), {re, im});
    }
    return t;
}

bool glue_check(const PlacedHexagon& A, const PlacedHexagon& B, RuleSystem rules) {
    const int dr = B.row - A.row;
    const int dc = B.col - A.col;
    auto a = [&](int p) { return A.config.occ[p - 1]; };
    auto b = [&](int p) { return B.config.occ[p - 1]; };

    if (dr == 0 && dc == 1) return a(4) == b(3);  // B to the right
    if (dr == 0 && dc == -1) return b(4) == a(3); // B to the left
    if (rules == RuleSystem::vertical) {
        if (dr == 1 && dc == 0) return a(5) == b(1) && a(6) == b(2);
        if (dr == -1 && dc == 0) return b(5) == a(1) && b(6) == a(2);
    } else {
        if (dr == 1 && dc == 0) return a(6) == b(1);  // up-right neighbor
        if (dr == 1 && dc == -1) return a(5) == b(2); // up-left neighbor
        if (dr == -1 && dc == 0) return b(6) == a(1);
        if (dr == -1 && dc == 1) return b(5) == a(2);
    }
    throw NotAdjacent("cells (" + std::to_string(A.row) + "," + std::to_string(A.col) +
                      ") and (" + std::to_string(B.row) + "," + std::to_string(B.col) +
                      ") are not neighbors under the rule system");
}

namespace {

HexagonConfig config_of(HexClass c) {
    HexagonConfig cfg;
    const unsigned mask = hex_class_mask(c);
    for (int p = 0; p < 6; ++p) cfg.occ[p] = (mask >> p) & 1u;
    return cfg;
}

// Directed constraints cell -> neighbor on the torus, as site equalities.
struct Constraint {
    int from, to;                           // flat cell indices
    std::vector<std::pair<int, int>> eqs;   // (pos in from, pos in to)
};

std::vector<Constraint> torus_constraints(const TorusSpec& spec) {
    std::vector<Constraint> out;
    auto flat = [&](int r, int c) { return r * spec.M + c; };
    for (int r = 0; r < spec.N; ++r) {
        for (int c = 0; c < spec.M; ++c) {
            out.push_back({flat(r, c), flat(r, (c + 1) % spec.M), {{4, 3}}});
            const int up = (r + 1) % spec.N;
            if (spec.rules == RuleSystem::vertical) {
                out.push_back({flat(r, c), flat(up, c), {{5, 1}, {6, 2}}});
            } else {
                out.push_back({flat(r, c), flat(up, c), {{6, 1}}});
                out.push_back({flat(r, c), flat(up, (c - 1 + spec.M) % spec.M), {{5, 2}}});
            }
        }
    }
    return out;
}

} // namespace

std::vector<TorusConfiguration> enumerate_torus_configs(const TorusSpec& spec) {
    if (spec.M < 1 || spec.N < 1) throw std::invalid_argument("torus needs M, N >= 1");
    const int cells = spec.M * spec.N;
    if (3 * cells > 24)
        throw BeyondBound("torus with " + std::to_string(3 * cells) +
                          " sites exceeds the exhaustive bound of 24");

    const auto constraints = torus_constraints(spec);
    // Group constraints by the latest cell they touch so the DFS can prune as
    // soon as both endpoints are assigned.
    std::vector<std::vector<const Constraint*>> ready(cells);
    for (const auto& con : constraints) ready[std::max(con.from, con.to)].push_back(&con);

    std::array<HexagonConfig, kNumHexClasses> configs;
    for (int i = 0; i < kNumHexClasses; ++i) configs[i] = config_of(static_cast<HexClass>(i));

    std::vector<TorusConfiguration> out;
    std::vector<int> assign(cells, -1);
    auto dfs = [&](auto&& self, int cell) -> void {
        if (cell == cells) {
            TorusConfiguration tc;
            tc.cells.reserve(cells);
            for (int idx : assign) {
                tc.cells.push_back(static_cast<HexClass>(idx));
                ++tc.tally.counts[idx];
            }
            out.push_back(std::move(tc));
            return;
        }
        for (int cls = 0; cls < kNumHexClasses; ++cls) {
            assign[cell] = cls;
            bool ok = true;
            for (const Constraint* con : ready[cell]) {
                const HexagonConfig& fa = configs[assign[con->from]];
                const HexagonConfig& fb = configs[assign[con->to]];
                for (const auto& [pa, pb] : con->eqs)
                    if (fa.occ[pa - 1] != fb.occ[pb - 1]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) self(self, cell + 1);
        }
        assign[cell] = -1;
    };
    dfs(dfs, 0);
    return out;
}

} // namespace kagome
