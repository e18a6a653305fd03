#pragma once
// Independent distance oracles, spanner measurements and scaling experiments.

#include <string>
#include <vector>

#include "gspan/generators.h"
#include "gspan/spanner.h"

namespace gspan {

using DistanceMatrix = std::vector<std::vector<double>>;

enum class OracleMethod { Visibility, Funnel };

// Geodesic distances between all sites. Funnel requires a domain without holes.
DistanceMatrix all_pairs_geodesic(const PolygonalDomain& dom, const std::vector<Point>& sites,
                                  OracleMethod method = OracleMethod::Visibility);
DistanceMatrix all_pairs_geodesic(const Instance& inst, OracleMethod method = OracleMethod::Visibility);

// Point-to-point geodesic paths in the free space of an instance.
PathFn geodesic_paths(const PolygonalDomain& dom);

struct SpannerReport {
    int n = 0;
    int m = 0;
    int k = 1;
    double eps = 0;
    std::string variant;
    std::size_t edges = 0;
    long complexity = 0;
    double max_ratio = 1;
    double mean_ratio = 1;
    int witness_a = -1, witness_b = -1;
    bool disconnected = false;
    std::vector<int> edges_per_depth;
    double seconds = 0;
};

// Ratio of spanner distances (stored edge lengths) to oracle distances over all site pairs.
SpannerReport measure(const SpannerGraph& g, const DistanceMatrix& oracle);

// Edges whose stored length or complexity differs from their expansion.
struct EdgeMismatch {
    int edge = -1;
    double stored = 0, expanded = 0;
    int stored_complexity = 0, expanded_complexity = 0;
};
std::vector<EdgeMismatch> check_edges(const SpannerGraph& g, const PathFn& path, double rel_tol = 1e-9);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingRow {
    int n = 0, m = 0, k = 1;
    long complexity = 0;
    std::size_t edges = 0;
    double seconds = 0;
};
struct ScalingResult {
    std::vector<ScalingRow> rows;
    std::vector<std::pair<int, double>> slopes;  // per k
};
// Grouped spanners on the general lower-bound family with m = m_per_site * n.
ScalingResult scaling_experiment(const std::vector<int>& ks, const std::vector<int>& ns, int m_per_site = 8);

}  // namespace gspan
