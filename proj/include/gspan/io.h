#pragma once
// Line-oriented text formats for instances and spanners. Doubles use the shortest decimal
// form that reads back to the same value.

#include <stdexcept>
#include <string>
#include <vector>

#include "gspan/generators.h"
#include "gspan/oracle.h"
#include "gspan/spanner.h"

namespace gspan {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v);

// gspan-instance 1
// meta <key> <value>      (any number, value is the rest of the line)
// outer <count>           followed by <count> lines "x y"
// hole <count>            (any number)
// sites <count>
// end
std::string write_instance(const Instance& inst);
// Throws ParseError on malformed text, InvalidPolygon on bad geometry, OutsidePolygon on a
// site outside the free space.
Instance read_instance(const std::string& text);

struct SpannerHeader {
    int n = 0;
    int m = 0;
    int k = 1;
    double eps = 0;
    Variant variant = Variant::Plain;
    double ratio = 1;
    std::size_t edges = 0;
    bool explicit_paths = false;
};

struct SpannerFile {
    SpannerHeader header;
    SpannerGraph graph;                // sites are left empty until attached to an instance
    std::vector<GeodesicPath> paths;   // explicit polylines, one per edge when present
};

// gspan-spanner 1
// n <n> m <m> k <k> eps <eps> variant <name> ratio <ratio> edges <count> mode <implicit|explicit>
// edge <a> <b> <length> <complexity> <depth> <via count> [x y]...
// path <count> x y x y ...   (explicit mode, after its edge)
// end
// Declared lengths are kept as written; verification recomputes them from the geometry.
std::string write_spanner(const SpannerGraph& g, int m, double ratio, const PathFn* expand = nullptr);
SpannerFile read_spanner(const std::string& text);

// Proven spanning ratio of a variant: 2 sqrt 2 k for plain (k = 1) and grouped, 2k + eps for
// refined, 6k for domains.
double ratio_bound(Variant v, int k, double eps);

struct VerifyResult {
    bool ok = true;
    std::string failure;  // first violated check, with its witness
    SpannerReport report;
};

// Recomputes every declared quantity of a spanner file against the instance: edge lengths and
// complexities from their expansion, explicit paths, connectivity, the header ratio and the
// variant's bound.
VerifyResult verify_spanner(const Instance& inst, const SpannerFile& file, double rel_tol = 1e-9);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gspan
