#pragma once

#include <gtorbit/skeleton.hpp>

#include <string>

namespace gtorbit {

/// SVG of the moment-map image for n = 3: vertices and 1-skeleton segments,
/// projected orthonormally onto the plane of constant coordinate sum.
std::string moment_map_svg(const SkeletonGraph& graph);

} // namespace gtorbit
