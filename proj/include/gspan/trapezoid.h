#pragma once
// Vertical and horizontal trapezoidal decompositions of a simple polygon.
//
// Both are computed by one left-to-right sweep. The horizontal variant runs the
// sweep on the polygon rotated by -90 degrees, so every predicate below works in
// "frame" coordinates where walls are vertical. Ties in the sweep coordinate are
// broken by the other coordinate (symbolic shear).

#include <vector>

#include "gspan/geometry.h"

namespace gspan {

enum class Axis { Vertical, Horizontal };

struct Wall {
    int vertex = -1;     // event vertex the wall emanates from
    bool up = false;     // toward larger frame y
    int hit_edge = -1;   // polygon edge the wall ends on
    Point hit;           // wall end in original coordinates
    int left_trap = -1;  // trapezoid before the wall in frame x
    int right_trap = -1; // trapezoid after the wall
};

struct Trapezoid {
    int bottom_edge = -1;  // frame-lower bounding edge; edge i joins vertex i and i+1
    int top_edge = -1;
    int left_vertex = -1;
    int right_vertex = -1;
    std::vector<int> walls;  // incident walls (dual edges)
};

struct TrapezoidalDecomposition {
    Axis axis = Axis::Vertical;
    std::vector<Point> points;  // original coordinates
    std::vector<Point> frame;   // sweep-frame coordinates
    std::vector<Trapezoid> traps;
    std::vector<Wall> walls;

    Point to_frame(const Point& p) const;
    Point from_frame(const Point& p) const;

    // Trapezoid containing p; boundary ties follow the shear. Throws OutsidePolygon.
    int locate(const Point& p) const;
    bool contains(int trap, const Point& p) const;
    // Frame y of edge e at frame abscissa fx.
    double edge_y_at(int edge, double fx) const;
    int neighbor_across(int trap, int wall) const;
    std::size_t max_degree() const;
    std::vector<std::vector<int>> bucket_sites(const std::vector<Point>& sites) const;
};

TrapezoidalDecomposition decompose(const SimplePolygon& poly, Axis axis);

}  // namespace gspan
