#pragma once

#include <string>

#include "platknot/plat.hpp"

namespace platknot {

// Renders a plat presentation as fixed-width ASCII art: a row of top arcs,
// one row per braid letter, and a row of bottom arcs.  Strands are vertical
// bars; a crossing is a two-column glyph in which the over strand's column
// carries a diagonal ('\' positive, '/' negative) and the under strand's bar
// breaks.  Deterministic; lines have no trailing whitespace and the string
// ends with a newline.
std::string render_ascii(const PlatPresentation& plat);

// Renders a plat presentation as a standalone SVG document.  Arcs are drawn
// as semicircles, crossings as diagonal segments with the under strand
// interrupted.  Deterministic: integer coordinates only, no timestamps or
// random ids.
std::string render_svg(const PlatPresentation& plat);

}  // namespace platknot
