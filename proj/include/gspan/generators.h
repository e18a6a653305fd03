#pragma once
// Instance generators: random polygons and domains, and the lower-bound families.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gspan/geometry.h"

namespace gspan {

using Rng = std::mt19937_64;

struct Instance {
    PolygonalDomain domain;  // a simple polygon is a domain without holes
    std::vector<Point> sites;
    std::vector<std::pair<std::string, std::string>> meta;  // ordered key/value pairs

    bool is_simple() const { return domain.holes.empty(); }
    const SimplePolygon& polygon() const { return domain.outer; }
};

struct LowerBoundInstance {
    Instance instance;
    int n = 0;
    int passage_vertices = 0;  // reflex vertices every crossing path has to wrap
    int per_gap = 0;           // passage vertices between adjacent spikes (general family)
    double spike_length = 1;
    double aperture = 0;
    std::vector<int> side;     // 0 left, 1 right (3eps family); spike index order otherwise
};

// Random simple polygon on m points by untangling a random tour with 2-opt moves.
SimplePolygon random_simple_polygon(int m, Rng& rng, double scale = 100.0);
// Star-shaped polygon with jittered radii.
SimplePolygon random_star_polygon(int m, Rng& rng, double scale = 100.0);
// Points drawn uniformly from the interior of the free space.
std::vector<Point> random_sites(const PolygonalDomain& dom, int n, Rng& rng);
// Outer boundary with h disjoint holes.
PolygonalDomain random_domain(int h, int m_outer, int m_hole, Rng& rng, double scale = 100.0);
// Two chambers behind C-shaped holes; the small chamber holds fewer than 2n/9 sites so
// no boundary-to-boundary path balances the instance.
Instance two_chamber_fixture(int n, Rng& rng);

// Both lower-bound families are built around a thin corridor that wraps a convex chain of
// radius R; spikes of length spike_length leave the corridor radially and carry one site
// each at distance spike_length from the corridor. The corridor is aperture_ratio *
// spike_length wide, so every chain vertex between two spikes is a bend of their geodesic.
// m counts the chain (passage) vertices; the spikes add 4 vertices each.

// n/2 spikes on each end of a passage with m vertices.
LowerBoundInstance gen_lower_bound_3eps(int n, int m, double spike_length = 1.0,
                                        double aperture_ratio = 1e-6);
// n spikes in a row with floor(m/n) passage vertices between neighbours.
LowerBoundInstance gen_lower_bound_general(int n, int m, double spike_length = 1.0,
                                           double aperture_ratio = 1e-6);

}  // namespace gspan
