#pragma once

#include <string>

#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

// Figure emission is the one place floats appear: SVG consumers need decimal
// coordinates. Every decision stays exact upstream; each element carries an
// audit comment with the exact rational vertices.
struct RenderSpec {
    Box window;
    enum class Mode { outline, multiplicity_shade };
    Mode mode = Mode::outline;
    double stroke_width = 0.03;
    double fill_opacity = 0.12;  // stacked per translate in shade mode
};

// One <polygon> element per translate meeting the window, in deterministic
// order (reduced offset, then lexicographic). Throws EmptyWindow.
std::string render_svg(const CSPolygon& polygon, const TranslateSet& x, const RenderSpec& spec);

}  // namespace tilekit
