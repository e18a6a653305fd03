#pragma once
// Shortest paths inside simple polygons, shortest path trees, chord splits and projections.

#include <memory>
#include <optional>
#include <vector>

#include "gspan/geometry.h"
#include "gspan/triangulation.h"

namespace gspan {

// Path point tags for non-vertex entries of GeodesicPath::ids.
inline constexpr int kPathStart = -1;
inline constexpr int kPathEnd = -2;
inline constexpr int kChordPoint = -3;

struct GeodesicPath {
    std::vector<Point> points;  // endpoints first and last; interior entries are polygon vertices
    std::vector<int> ids;       // polygon vertex index or one of the tags above
    double length = 0;

    int complexity() const { return points.empty() ? 0 : static_cast<int>(points.size()) - 1; }
    void recompute_length();
    void append(const GeodesicPath& tail);  // tail must start where this path ends
    GeodesicPath reversed() const;
};

// Funnel from a point to a polygon edge: the shared prefix ends at the apex, from which
// two concave chains run to the edge endpoints chain.front() and chain.back().
struct EdgeFunnel {
    GeodesicPath prefix;          // start .. apex
    std::vector<Point> chain;     // left end .. apex .. right end
    std::vector<int> chain_ids;
    std::vector<double> dist;     // geodesic distance from the start to each chain point
    int apex = 0;

    struct Hit {
        Point point;
        double weight = 0;
        int owner = 0;  // chain index of the last path vertex before the hit
    };
    // Closest point of the edge.
    Hit closest() const;
    // Point of the edge reached by a last segment parallel to dir, if any.
    std::optional<Hit> along_direction(const Point& dir) const;
    GeodesicPath path_to(const Hit& h) const;
};

class PolygonGeodesy {
public:
    explicit PolygonGeodesy(SimplePolygon poly, bool validate = true);
    PolygonGeodesy(SimplePolygon poly, Triangulation tri) : poly_(std::move(poly)), tri_(std::move(tri)) {}

    const SimplePolygon& polygon() const { return poly_; }
    const Triangulation& triangulation() const { return tri_; }

    // Triangle containing p; throws OutsidePolygon.
    int locate(const Point& p) const;
    GeodesicPath shortest_path(const Point& p, const Point& q) const;
    double distance(const Point& p, const Point& q) const { return shortest_path(p, q).length; }
    EdgeFunnel funnel_to_edge(const Point& p, int edge) const;

    // Triangle edges crossed from triangle `from` to triangle `to`, as seen walking forward.
    struct Portal {
        Point left, right;
        int lid, rid;
    };
    std::vector<Portal> sleeve(int from, int to) const;

private:
    SimplePolygon poly_;
    Triangulation tri_;
};

GeodesicPath shortest_path(const SimplePolygon& poly, const Triangulation& tri, const Point& p,
                           const Point& q);

enum class NodeKind { Source, Vertex, Site, Foot };

struct ShortestPathTree {
    struct Node {
        Point p;
        NodeKind kind = NodeKind::Vertex;
        int ref = -1;     // vertex index, site id or owning site/vertex for feet
        int parent = -1;  // -1 only at the root
        double dist = 0;
    };
    std::vector<Node> nodes;
    int root = 0;
    std::vector<int> site_node;    // node per site id, -1 when absent
    std::vector<int> vertex_node;  // node per polygon vertex, -1 when absent

    std::vector<std::vector<int>> children() const;
    // Node ids from n up to the root, n first.
    std::vector<int> ancestors(int n) const;
    int lca(int a, int b) const;
};

// Tree of shortest paths from source to every polygon vertex and to each site.
ShortestPathTree shortest_path_tree(const SimplePolygon& poly, const Point& source,
                                    const std::vector<Point>& sites = {});
ShortestPathTree shortest_path_tree(const PolygonGeodesy& geo, const Point& source,
                                    const std::vector<Point>& sites = {});

struct Chord {
    Point bottom, top;  // bottom is the lexicographically smaller endpoint in (y, x)
    double length() const { return dist(bottom, top); }
    double param(const Point& p) const;  // arclength from bottom along the chord
    Point at(double s) const;
    bool vertical() const { return bottom.x == top.x; }
};

// Checks that the chord touches the boundary at both ends and otherwise lies inside.
void validate_chord(const SimplePolygon& poly, const Chord& chord);

struct SidePolygon {
    std::shared_ptr<PolygonGeodesy> geo;
    std::vector<int> origin;  // vertex index in the split polygon, -1 for new chord endpoints
    int chord_edge = -1;      // edge of this side that lies on the chord

    const SimplePolygon& polygon() const { return geo->polygon(); }
};

struct PolygonSplit {
    Chord chord;
    SidePolygon left, right;  // left is traversed from top to bottom, right from bottom to top
};

PolygonSplit split_along_chord(const SimplePolygon& poly, const Chord& chord);

enum class Side { Left = 0, Right = 1, OnChord = 2 };

struct ChordProjection {
    int site = -1;
    Point foot;
    double weight = 0;
    double param = 0;  // arclength of the foot from the bottom endpoint
};

struct ProjectionResult {
    std::vector<ChordProjection> proj;  // one per site
    std::vector<Side> side;
    std::vector<GeodesicPath> paths;    // site to foot, vertex ids of the split polygon
    ShortestPathTree spt;               // root stands for the chord, feet are its children
};

// Side of each site; throws OutsidePolygon if a site lies in neither side.
std::vector<Side> classify_sites(const PolygonSplit& split, const std::vector<Point>& sites);
ProjectionResult project_all(const PolygonSplit& split, const std::vector<Point>& sites);
ProjectionResult project_all(const SimplePolygon& poly, const Chord& chord, const std::vector<Point>& sites);

// Region label of a site in the horizontal decomposition of its side, and the foot the
// label predicts: blue sites see the chord horizontally, green ones inherit the foot of the
// corner where their region attaches, orange and purple ones project to an endpoint.
enum class ProjectionColor { Blue, Orange, Green, Purple, OnChord };
struct ColoredFoot {
    ProjectionColor color;
    Point foot;
};
std::vector<ColoredFoot> colored_projections(const PolygonSplit& split, const std::vector<Point>& sites);

}  // namespace gspan
