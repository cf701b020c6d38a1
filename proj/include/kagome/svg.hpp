#pragma once

#include <string>

#include "kagome/lattice.hpp"

namespace kagome {

// Renders a lattice state as a standalone SVG document.
//
// Layout: integer-site rows ("X" rows) are drawn as dashed horizontals at
// y = -20a with sites at x = 10m; half-integer rows ("Y" rows) are solid
// horizontals at y = -(20a+10) with sites at x = 5*r2.  Occupied sites are
// filled circles, empty ones open.  Every plaquette whose configuration
// admits a flip is outlined: green for box creation, red for removal.
//
// The output is deterministic byte-for-byte for a given state: elements are
// emitted in a fixed order with integer coordinates only.
std::string render_state_svg(const LatticeState& state);

}  // namespace kagome
