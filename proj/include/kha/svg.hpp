#pragma once

#include <optional>
#include <string>

#include "kha/geometry.hpp"

namespace kha {

// Rendering follows the panel's scheme: red lattice lines under black
// figure circles. The coordinate system is mathematical (+y up), flipped
// once at the document level.
struct RenderStyle {
    std::string lattice_color = "#CC0000";
    std::string figure_color = "#000000";
    std::string auxiliary_color = "#888888";
    std::optional<double> stroke_width;  // default: 1% of the scene extent
    double margin = 0.05;                // fraction of the bounding box
    std::optional<std::string> background;
};

// One SVG element per scene object in scene order; coordinates carry 12
// significant digits; byte-deterministic for identical inputs. Throws
// EmptyScene when there is nothing to draw.
std::string scene_to_svg(const Scene& scene, const RenderStyle& style = {});

}  // namespace kha
