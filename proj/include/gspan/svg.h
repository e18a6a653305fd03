#pragma once
// SVG 1.1 rendering of an instance and, optionally, a spanner on it.

#include <string>

#include "gspan/generators.h"
#include "gspan/spanner.h"

namespace gspan {

struct SvgOptions {
    double width = 800;  // pixels; height follows the aspect ratio of the bounding box
    double margin = 20;
    double site_radius = 3;
};

// Layers are groups with ids outer, holes, edges, via and sites, drawn in that order. Edges
// are expanded with path when given, otherwise drawn straight through their via points.
std::string render_svg(const Instance& inst, const SpannerGraph* g = nullptr, const PathFn* path = nullptr,
                       const SvgOptions& opt = {});

}  // namespace gspan
