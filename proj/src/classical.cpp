#include "kagome/hexagons.hpp"
#include "kagome/lax.hpp"

namespace kagome {

std::complex<double> classical_partition_function(const TorusSpec& spec,
                                                  const WeightTable& table) {
    if (3 * spec.M * spec.N <= 24) {
        std::complex<double> z = 0.0;
        for (const TorusConfiguration& cfg : enumerate_torus_configs(spec)) {
            std::complex<double> w = 1.0;
            for (HexClass c : cfg.cells) w *= table.get(c);
            z += w;
        }
        return z;
    }
    if (spec.rules == RuleSystem::vertical && spec.M <= kMaxTransferColumns)
        return classical_partition_function_transfer(table, spec.M, spec.N);
    throw BeyondBound("torus too large for exhaustive enumeration and no transfer route");
}

} // namespace kagome
