#pragma once
// Refined projections onto a chord: points reached at a fixed set of final-segment slopes,
// the equally spaced alternative, and the spanners built on them.

#include <optional>
#include <vector>

#include "gspan/geodesic.h"
#include "gspan/spanner.h"

namespace gspan {

struct InvalidEpsilon : InvalidParams {
    using InvalidParams::InvalidParams;
};

struct RefinedPoint {
    Point point;
    double weight = 0;  // geodesic distance from the site
    double param = 0;   // arclength from the chord's bottom endpoint
    GeodesicPath path;  // site to point, vertex ids of the unsplit polygon
};

// Points per site and index i in [-imax, imax]; index 0 is the closest point of the chord.
struct RefinedProjectionSet {
    double delta = 0;
    int imax = 0;
    std::vector<Side> side;
    std::vector<std::vector<std::optional<RefinedPoint>>> points;  // [i + imax][site]

    int index_count() const { return 2 * imax + 1; }
    const std::optional<RefinedPoint>& at(int i, int site) const { return points[i + imax][site]; }
    std::size_t size() const;  // number of present points
};

// delta = eps / (2k); requires 0 < eps < 2k.
double refinement_delta(int k, double eps);

// For i != 0 the point where the final segment of the site's geodesic has slope delta * i
// relative to the chord's normal, above the closest point for i > 0 and below for i < 0.
// imax = ceil(3 / delta^2). Requires a vertical chord.
RefinedProjectionSet angle_points(const PolygonSplit& split, const std::vector<Point>& sites, int k, double eps);
RefinedProjectionSet angle_points(const SimplePolygon& poly, const Chord& chord, const std::vector<Point>& sites,
                                  int k, double eps);

// Equally spaced alternative with delta = eps / t: the chord around the closest point is cut
// into pieces of length delta * d(p, p_chord) out to (1 + 2/delta) * d(p, p_chord), and each
// piece contributes its point closest to the site.
RefinedProjectionSet naive_refinement_points(const PolygonSplit& split, const std::vector<Point>& sites,
                                             double t, double eps);

// The tree formed by the chord, the index-i paths of the left sites and the index-j paths of
// the right sites, as a projection over the sites that have both points. `members` maps
// its site indices back to the caller's.
ProjectionResult pair_projection(const RefinedProjectionSet& R, const Chord& chord, int i, int j,
                                 std::vector<int>& members);

// Relaxed (2k + eps)-spanner: one grouped 1-D spanner per index pair at every chord.
SpannerGraph build_refined_spanner(const SimplePolygon& poly, const std::vector<Point>& sites, int k, double eps);

// Plain construction on the equally spaced points: geodesic (2 + eps)-spanner, no complexity bound.
SpannerGraph build_naive_refined_spanner(const SimplePolygon& poly, const std::vector<Point>& sites, double eps);

}  // namespace gspan
