#pragma once
// Triangulation of a point set with prescribed edges.

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gspan/triangulation.h"

namespace gspan {

struct ConstrainedTriangulation {
    Triangulation tri;
    std::unordered_set<std::uint64_t> constrained;  // undirected edge keys

    static std::uint64_t key(int a, int b);
    bool is_constrained(int a, int b) const { return constrained.count(key(a, b)) > 0; }
};

// Triangulates the convex hull of pts so that every segment appears as a union of edges.
// Points must be distinct and segments must not cross; a segment passing through another
// point is split there.
ConstrainedTriangulation constrained_triangulation(const std::vector<Point>& pts,
                                                   const std::vector<std::pair<int, int>>& segments);

}  // namespace gspan
