#pragma once
// Recursive geodesic spanners in a simple polygon: balanced vertical chords, the plain
// construction with geodesic edges and the grouped construction with relaxed edges.

#include <functional>
#include <vector>

#include "gspan/geodesic.h"
#include "gspan/spanner.h"
#include "gspan/trapezoid.h"
#include "gspan/weighted_1d.h"

namespace gspan {

struct ChordSplit {
    Chord chord;
    std::vector<int> left, right;  // indices into the site list; sites on the chord go left
    int chord_case = 0;            // 1: wall to the parent, 2: heavy trapezoid, 3: light children
};

// Vertical chord leaving at most ceil(2n/3) sites on each side.
ChordSplit balanced_vertical_chord(const SimplePolygon& poly, const TrapezoidalDecomposition& decomp,
                                   const std::vector<Point>& sites);

// Sites in the in-order traversal of the chord's shortest path tree: feet bottom to top, at
// every node the children left of the chord first, each side ordered bottom to top.
std::vector<int> group_order(const ShortestPathTree& spt, const Chord& chord);

// Relaxed edge between sites i and j of a projection: via the lowest common ancestor r of
// their tree nodes, or through both feet when the two legs only meet at the chord.
struct PiLambda {
    std::vector<Point> via;
    double length = 0;
    int complexity = 0;
};
PiLambda pi_lambda(const ProjectionResult& proj, int i, int j);
GeodesicPath pi_lambda_path(const ProjectionResult& proj, const std::vector<Point>& sites, int i, int j);

// Polygon vertices that are non-root nodes of the minimal subtrees of three or more groups
// of one level.
int two_tree_violations(const ShortestPathTree& spt, const GroupTree& groups);

struct SimpleSpannerOptions {
    Variant variant = Variant::Plain;  // Plain or Grouped
    int k = 1;
    // Odd recursion depths balance trapezoids instead of sites, a proxy for polygon vertices.
    bool alternate_split = false;
};

SpannerGraph build_simple_spanner(const SimplePolygon& poly, const std::vector<Point>& sites,
                                  const SimpleSpannerOptions& opt = {});

// One recursion node handed to a per-level edge builder.
struct ChordLevel {
    const SimplePolygon& poly;  // the node's polygon
    const PolygonSplit& split;
    const std::vector<int>& ids;       // global site ids of the node
    const std::vector<Point>& points;  // their coordinates
    const ProjectionResult& proj;
    int depth;
};
using LevelBuilder = std::function<void(const ChordLevel&, EdgeSet&, RecursionRecord&)>;

// The shared recursion: split by a balanced chord, let `level` add edges, recurse on both
// sides. Nodes with two sites get their geodesic edge directly.
void chord_recursion(const SimplePolygon& poly, const std::vector<Point>& sites, const LevelBuilder& level,
                     SpannerGraph& g, bool alternate_split = false);

}  // namespace gspan
