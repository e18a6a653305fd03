#pragma once
// Spanner graphs shared by every construction: sites, edges with implicit via points, and
// per-recursion-node records.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gspan/geodesic.h"

namespace gspan {

enum class Variant { Plain, Grouped, Refined, Domain };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);  // throws InvalidParams

// An edge is the concatenation of geodesics a -> via[0] -> ... -> b. No via points means the
// edge is the geodesic itself.
struct SpannerEdge {
    int a = -1, b = -1;
    std::vector<Point> via;
    double length = 0;
    int complexity = 0;
    int depth = 0;  // recursion depth of the node that added it
};

struct RecursionRecord {
    int depth = 0;
    int n = 0;
    int n_left = 0;
    int n_right = 0;
    int chord_case = 0;          // balancing rule of the chord, or the separator kind in domains
    int two_tree_violations = 0; // polygon vertices that are non-root nodes of 3+ group subtrees
    int groups = 0;
    int reflex = 0;              // domains: reflex vertices before and after the split
    int reflex_after = 0;
};

struct SpannerGraph {
    std::vector<Point> sites;
    std::vector<SpannerEdge> edges;
    Variant variant = Variant::Plain;
    int k = 1;
    double eps = 0;
    std::vector<RecursionRecord> records;

    long total_complexity() const;
    std::vector<int> edges_per_depth() const;
};

using PathFn = std::function<GeodesicPath(const Point&, const Point&)>;

// Explicit polyline of an edge; site and via ids are tagged, interior bends keep their ids.
GeodesicPath expand_edge(const SpannerGraph& g, const SpannerEdge& e, const PathFn& path);

// Keeps one edge per unordered site pair, the shorter one on collisions.
class EdgeSet {
public:
    explicit EdgeSet(SpannerGraph& g) : g_(g) {}
    void add(SpannerEdge e);

private:
    SpannerGraph& g_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

}  // namespace gspan
