#pragma once
// Visibility graphs and exact shortest paths in polygonal domains.

#include <vector>

#include "gspan/geodesic.h"
#include "gspan/geometry.h"

namespace gspan {

// Segment ab lies in the closed free space; a and b are assumed to lie in it.
bool visible(const PolygonalDomain& dom, const Point& a, const Point& b);

struct VisibilityGraph {
    std::vector<Point> nodes;  // domain vertices (outer first, then holes) followed by extras
    std::vector<std::vector<std::pair<int, double>>> adj;
    std::size_t edge_count() const;
};

VisibilityGraph visibility_graph(const PolygonalDomain& dom, const std::vector<Point>& extra = {});

// All-pairs vertex distances of a domain plus per-point attachment, for repeated queries.
class DomainGeodesy {
public:
    explicit DomainGeodesy(PolygonalDomain dom, bool validate = true);

    const PolygonalDomain& domain() const { return dom_; }
    const std::vector<Point>& vertices() const { return verts_; }

    // Distances from p to every domain vertex, with the first vertex of each path.
    struct Attachment {
        Point p;
        std::vector<double> d;
        std::vector<int> via;  // first vertex on the path, -1 if unreachable
    };
    Attachment attach(const Point& p) const;
    double distance(const Attachment& a, const Attachment& b) const;
    GeodesicPath path(const Attachment& a, const Attachment& b) const;

    double distance(const Point& p, const Point& q) const { return distance(attach(p), attach(q)); }
    GeodesicPath path(const Point& p, const Point& q) const { return path(attach(p), attach(q)); }
    // Vertex path between two domain vertices, inclusive.
    std::vector<int> vertex_path(int from, int to) const;
    double vertex_distance(int a, int b) const { return dist_[a][b]; }

private:
    PolygonalDomain dom_;
    std::vector<Point> verts_;
    std::vector<std::vector<double>> dist_;
    std::vector<std::vector<int>> pred_;  // pred_[s][v]: vertex before v on the path from s
};

GeodesicPath domain_geodesic(const PolygonalDomain& dom, const Point& p, const Point& q);

}  // namespace gspan
