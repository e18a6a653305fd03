#pragma once

#include <array>
#include <vector>

#include "gspan/geometry.h"

namespace gspan {

struct Triangulation {
    std::vector<Point> points;
    std::vector<std::array<int, 3>> tris;  // counterclockwise vertex indices
    // nbr[t][e] is the triangle across edge (tris[t][e], tris[t][(e+1)%3]), -1 on the boundary
    std::vector<std::array<int, 3>> nbr;

    // First triangle whose closed region contains p, -1 if none.
    int locate(const Point& p) const;
    // Triangle sequence from a to b through the dual tree (inclusive).
    std::vector<int> dual_path(int a, int b) const;
    std::size_t dual_edge_count() const;
    double area() const;
};

// Ear clipping. Straight vertices are never used as ear tips.
Triangulation triangulate(const SimplePolygon& poly, bool validate = true);

// Fills nbr from tris by matching shared edges.
void link_triangles(Triangulation& tri);

}  // namespace gspan
