#pragma once

// Static SVG rendering of a net: unit circle, equally spaced labelled
// vertices, straight chords, distinguished vertex marked; optionally the
// marked points r, s with the (r,s) arc highlighted for a given k.

#include <string>

#include "netbounds/diagrams.hpp"

namespace netbounds {

/// k = 0 draws the bare net; 1 <= k <= 2d-4 adds r, s and shades the arc
/// (r,s) holding the last k positions.
std::string render_net_svg(const ChordDiagram& g, int k = 0);

}  // namespace netbounds
