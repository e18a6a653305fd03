#include "gspan/spanner.h"

#include <algorithm>

namespace gspan {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Grouped: return "grouped";
        case Variant::Refined: return "refined";
        case Variant::Domain: return "domain";
    }
    return "plain";
}

Variant parse_variant(const std::string& s) {
    if (s == "plain") return Variant::Plain;
    if (s == "grouped") return Variant::Grouped;
    if (s == "refined") return Variant::Refined;
    if (s == "domain") return Variant::Domain;
    throw InvalidParams("unknown variant: " + s);
}

long SpannerGraph::total_complexity() const {
    long c = 0;
    for (const auto& e : edges) c += e.complexity;
    return c;
}

std::vector<int> SpannerGraph::edges_per_depth() const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.depth >= static_cast<int>(out.size())) out.resize(e.depth + 1, 0);
        ++out[e.depth];
    }
    return out;
}

GeodesicPath expand_edge(const SpannerGraph& g, const SpannerEdge& e, const PathFn& path) {
    std::vector<Point> stops{g.sites[e.a]};
    stops.insert(stops.end(), e.via.begin(), e.via.end());
    stops.push_back(g.sites[e.b]);
    GeodesicPath out;
    out.points = {stops[0]};
    out.ids = {kPathStart};
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
        if (stops[i] == stops[i + 1]) continue;
        GeodesicPath leg = path(stops[i], stops[i + 1]);
        for (std::size_t k = 1; k < leg.points.size(); ++k) {
            out.points.push_back(leg.points[k]);
            out.ids.push_back(k + 1 == leg.points.size() ? kChordPoint : leg.ids[k]);
        }
    }
    if (out.points.size() > 1) out.ids.back() = kPathEnd;
    out.recompute_length();
    return out;
}

void EdgeSet::add(SpannerEdge e) {
    if (e.a == e.b) return;
    auto key = std::minmax(e.a, e.b);
    auto it = index_.find({key.first, key.second});
    if (it == index_.end()) {
        index_[{key.first, key.second}] = g_.edges.size();
        g_.edges.push_back(std::move(e));
    } else if (e.length < g_.edges[it->second].length) {
        g_.edges[it->second] = std::move(e);
    }
}

}  // namespace gspan
