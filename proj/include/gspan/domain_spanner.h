#pragma once
// Balanced shortest-path separators in polygonal domains and the relaxed spanner built on them.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "gspan/cdt.h"
#include "gspan/geodesic.h"
#include "gspan/simple_spanner.h"
#include "gspan/spanner.h"
#include "gspan/visibility.h"

namespace gspan {

// Triangulation of the domain's bounding box, inflated by 10%, constrained by the boundary
// and by the shortest path tree of the lowest-leftmost outer vertex.
struct WeightedTriangulation {
    Triangulation tri;                // points: domain vertex positions, then the 4 box corners
    std::vector<char> free;           // per triangle: inside the free space
    std::vector<int> weight;          // per triangle: number of assigned sites
    std::vector<int> site_tri;        // per site: its free triangle
    std::vector<int> tree_parent;     // per point: spanning tree parent, -1 at the root
    std::unordered_set<std::uint64_t> boundary;  // edge keys on the domain boundary
    int root = -1;
    int domain_points = 0;            // points before the box corners; corners hang off the tree

    bool is_tree_edge(int a, int b) const { return tree_parent[a] == b || tree_parent[b] == a; }
    bool is_boundary(int a, int b) const { return boundary.count(ConstrainedTriangulation::key(a, b)) > 0; }
};

WeightedTriangulation weighted_triangulation(const PolygonalDomain& dom, const std::vector<Point>& sites);

enum class SeparatorKind { One = 1, Two = 2, Three = 3, Degenerate = 4 };
std::string separator_kind_name(SeparatorKind k);

struct Separator {
    SeparatorKind kind = SeparatorKind::Three;
    std::vector<Point> corners;
    std::vector<std::vector<Point>> paths;  // the shortest paths that bound the left region in free space
    std::vector<int> left;                  // sites in the closed left region
    bool heavy = false;                     // cut inside a triangle holding more than n/3 sites
    // Free triangles on each side; a degenerate left region has none.
    std::vector<Point> mesh;
    std::vector<std::array<int, 3>> left_tris, right_tris;
    // Triangle count and weight of each region visited by the walk.
    std::vector<int> walk_triangles, walk_weights;
};

// Requires at least 5 sites in the free space; 2n/9 <= |left| <= 2n/3.
Separator balanced_sp_separator(const PolygonalDomain& dom, const std::vector<Point>& sites);

struct SubDomain {
    PolygonalDomain domain;  // rings may touch themselves at vertices
    std::vector<int> sites;
    bool left = false;
    bool segment = false;    // degenerate left region: the sites lie on one segment
};

struct DomainSplit {
    std::vector<SubDomain> parts;
    std::size_t reflex_before = 0, reflex_after = 0;
};

// Connected components of both sides with their sites; sites on the separator go left.
DomainSplit split_domain(const PolygonalDomain& dom, const std::vector<Point>& sites, const Separator& sep);

// Closest points of every site on one separator path, with the tree of shortest paths to it.
struct PathProjection {
    std::vector<Point> lambda;
    std::vector<double> cum;         // arclength at each path vertex
    ProjectionResult proj;           // root stands for the path, feet are its children
    std::vector<double> node_param;  // arclength of foot nodes
};

// p itself, or the nearest float neighbour within a few ulps that is not outside the domain;
// rounded points on boundary edges land here.
Point free_point_near(const PolygonalDomain& dom, const Point& p);

PathProjection project_to_path(const DomainGeodesy& geo, const std::vector<Point>& lambda,
                               const std::vector<Point>& sites);

// Sites in the in-order traversal of the path's tree: feet in path order, children left of
// the path first, each side ordered from the back of the path around.
std::vector<int> path_group_order(const PathProjection& P);

// Relaxed edge: via the lowest common ancestor, or through both feet and along the path.
PiLambda path_pi_lambda(const PathProjection& P, int i, int j);

SpannerGraph build_domain_spanner(const PolygonalDomain& dom, const std::vector<Point>& sites, int k);

}  // namespace gspan
