#include "gspan/refinement.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gspan/simple_spanner.h"
#include "gspan/weighted_1d.h"

namespace gspan {

namespace {

// Path ids of a side polygon mapped to the unsplit polygon.
void map_ids(GeodesicPath& path, const SidePolygon& sp) {
    for (int& id : path.ids)
        if (id >= 0) id = sp.origin[id] >= 0 ? sp.origin[id] : kChordPoint;
    path.ids.front() = kPathStart;
    path.ids.back() = kChordPoint;
}

RefinedPoint on_chord_point(const Chord& ch, const Point& p) {
    RefinedPoint rp;
    rp.point = p;
    rp.param = ch.param(p);
    rp.path.points = {p};
    rp.path.ids = {kPathStart};
    return rp;
}

RefinedPoint make_point(const Chord& ch, GeodesicPath path) {
    RefinedPoint rp;
    rp.point = path.points.back();
    rp.weight = path.length;
    rp.param = ch.param(rp.point);
    rp.path = std::move(path);
    return rp;
}

}  // namespace

std::size_t RefinedProjectionSet::size() const {
    std::size_t c = 0;
    for (const auto& row : points)
        for (const auto& p : row) c += p.has_value();
    return c;
}

double refinement_delta(int k, double eps) {
    if (k < 1) throw InvalidParams("k must be at least 1");
    if (!(eps > 0) || !(eps < 2.0 * k)) throw InvalidEpsilon("eps must lie in (0, 2k)");
    return eps / (2.0 * k);
}

RefinedProjectionSet angle_points(const PolygonSplit& split, const std::vector<Point>& sites, int k, double eps) {
    const Chord& ch = split.chord;
    if (!ch.vertical()) throw InvalidChord("angle points need a vertical chord");
    RefinedProjectionSet R;
    R.delta = refinement_delta(k, eps);
    R.imax = static_cast<int>(std::ceil(3.0 / (R.delta * R.delta) - 1e-9));
    R.side = classify_sites(split, sites);
    int n = static_cast<int>(sites.size());
    R.points.assign(R.index_count(), std::vector<std::optional<RefinedPoint>>(n));
    for (int s = 0; s < n; ++s) {
        if (R.side[s] == Side::OnChord) {
            R.points[R.imax][s] = on_chord_point(ch, sites[s]);
            continue;
        }
        const SidePolygon& sp = R.side[s] == Side::Left ? split.left : split.right;
        EdgeFunnel f = sp.geo->funnel_to_edge(sites[s], sp.chord_edge);
        double toward = R.side[s] == Side::Left ? 1.0 : -1.0;
        for (int i = -R.imax; i <= R.imax; ++i) {
            std::optional<EdgeFunnel::Hit> h;
            if (i == 0)
                h = f.closest();
            else
                h = f.along_direction({toward, R.delta * i});
            if (!h) continue;
            GeodesicPath path = f.path_to(*h);
            map_ids(path, sp);
            R.points[i + R.imax][s] = make_point(ch, std::move(path));
        }
    }
    return R;
}

RefinedProjectionSet angle_points(const SimplePolygon& poly, const Chord& chord, const std::vector<Point>& sites,
                                  int k, double eps) {
    return angle_points(split_along_chord(poly, chord), sites, k, eps);
}

RefinedProjectionSet naive_refinement_points(const PolygonSplit& split, const std::vector<Point>& sites, double t,
                                             double eps) {
    if (!(t >= 1)) throw InvalidParams("t must be at least 1");
    if (!(eps > 0)) throw InvalidEpsilon("eps must be positive");
    const Chord& ch = split.chord;
    RefinedProjectionSet R;
    R.delta = eps / t;
    R.imax = static_cast<int>(std::ceil((1 + 2 / R.delta) / R.delta - 1e-9));
    ProjectionResult P = project_all(split, sites);
    R.side = P.side;
    int n = static_cast<int>(sites.size());
    R.points.assign(R.index_count(), std::vector<std::optional<RefinedPoint>>(n));
    double len = ch.length();
    for (int s = 0; s < n; ++s) {
        if (R.side[s] == Side::OnChord) {
            R.points[R.imax][s] = on_chord_point(ch, sites[s]);
            continue;
        }
        const SidePolygon& sp = R.side[s] == Side::Left ? split.left : split.right;
        R.points[R.imax][s] = make_point(ch, P.paths[s]);
        double d = P.proj[s].weight, base = P.proj[s].param;
        if (!(d > 0)) continue;
        for (int i = -R.imax; i <= R.imax; ++i) {
            if (i == 0) continue;
            // the piece [base + (i-1) step, base + i step] (mirrored below) is closest at its inner end
            double inner = base + (i > 0 ? i - 1 : i + 1) * R.delta * d;
            if (i > 0 ? !(inner < len) : !(inner > 0)) continue;  // piece lies off the chord
            double at = base + i * R.delta * d;
            if (at < 0 || at > len) at = std::clamp(at, 0.0, len);
            GeodesicPath path = sp.geo->shortest_path(sites[s], ch.at(at));
            map_ids(path, sp);
            R.points[i + R.imax][s] = make_point(ch, std::move(path));
        }
    }
    return R;
}

ProjectionResult pair_projection(const RefinedProjectionSet& R, const Chord& chord, int i, int j,
                                 std::vector<int>& members) {
    members.clear();
    int n = static_cast<int>(R.side.size());
    ProjectionResult out;
    for (int s = 0; s < n; ++s) {
        int idx = R.side[s] == Side::Right ? j : i;
        if (R.at(idx, s)) members.push_back(s);
    }
    int M = static_cast<int>(members.size());
    out.proj.resize(M);
    out.side.resize(M);
    out.paths.resize(M);
    ShortestPathTree& T = out.spt;
    T.nodes.push_back({chord.bottom, NodeKind::Source, -1, -1, 0});
    T.root = 0;
    T.site_node.assign(M, -1);
    // feet are kept apart per side so each side's subtree stays its own
    std::map<std::pair<int, double>, int> feet;
    std::map<int, int> vnode;
    for (int a = 0; a < M; ++a) {
        int s = members[a];
        const RefinedPoint& rp = *R.at(R.side[s] == Side::Right ? j : i, s);
        out.side[a] = R.side[s];
        out.proj[a] = {a, rp.point, rp.weight, rp.param};
        out.paths[a] = rp.path;
        const auto& path = rp.path;
        int sd = R.side[s] == Side::Right ? 1 : 0;
        auto it = feet.find({sd, rp.param});
        int cur;
        if (it == feet.end()) {
            cur = static_cast<int>(T.nodes.size());
            int owner = path.ids.size() >= 2 ? path.ids[path.ids.size() - 2] : -1;
            T.nodes.push_back({rp.point, NodeKind::Foot, owner, T.root, 0});
            feet[{sd, rp.param}] = cur;
        } else {
            cur = it->second;
        }
        for (std::size_t q = path.points.size() - 1; q-- > 1;) {
            int id = path.ids[q];
            auto vit = vnode.find(id);
            if (vit != vnode.end()) {
                cur = vit->second;
                continue;
            }
            int nn = static_cast<int>(T.nodes.size());
            T.nodes.push_back({path.points[q], NodeKind::Vertex, id, cur, 0});
            vnode[id] = nn;
            cur = nn;
        }
        T.site_node[a] = static_cast<int>(T.nodes.size());
        T.nodes.push_back({path.points.front(), NodeKind::Site, a, cur, 0});
    }
    // distances from the chord: parents precede children in node order
    for (std::size_t v = 1; v < T.nodes.size(); ++v) {
        auto& nd = T.nodes[v];
        if (nd.kind != NodeKind::Foot) nd.dist = T.nodes[nd.parent].dist + dist(nd.p, T.nodes[nd.parent].p);
    }
    return out;
}

SpannerGraph build_refined_spanner(const SimplePolygon& poly, const std::vector<Point>& sites, int k, double eps) {
    validate_polygon(poly);
    for (const auto& p : sites)
        if (locate_in_ring(poly.vertices, p) == Location::Outside) throw OutsidePolygon("site outside polygon");
    refinement_delta(k, eps);
    SpannerGraph g;
    g.sites = sites;
    g.variant = Variant::Refined;
    g.k = k;
    g.eps = eps;
    const double inf = std::numeric_limits<double>::infinity();
    LevelBuilder level = [&](const ChordLevel& L, EdgeSet& edges, RecursionRecord& rec) {
        RefinedProjectionSet R = angle_points(L.split, L.points, k, eps);
        int n = static_cast<int>(L.ids.size());
        std::vector<SpannerEdge> best(static_cast<std::size_t>(n) * n);
        for (auto& e : best) e.length = inf;
        std::vector<int> members;
        for (int i = -R.imax; i <= R.imax; ++i)
            for (int j = -R.imax; j <= R.imax; ++j) {
                ProjectionResult PR = pair_projection(R, L.split.chord, i, j, members);
                if (members.size() < 2) continue;
                std::vector<WeightedSite1D> s1;
                for (std::size_t a = 0; a < members.size(); ++a)
                    s1.push_back({PR.proj[a].param, PR.proj[a].weight, static_cast<int>(a)});
                GroupedSpanner1D gs = build_grouped_spanner(s1, group_order(PR.spt, L.split.chord), k);
                for (const auto& e : gs.spanner.edges) {
                    int a = members[e.a], b = members[e.b];
                    PiLambda pl = pi_lambda(PR, e.a, e.b);
                    if (a > b) {
                        std::swap(a, b);
                        std::reverse(pl.via.begin(), pl.via.end());
                    }
                    SpannerEdge& slot = best[static_cast<std::size_t>(a) * n + b];
                    if (pl.length < slot.length) slot = {L.ids[a], L.ids[b], pl.via, pl.length, pl.complexity, L.depth};
                }
                if (k > 1)
                    for (const auto& T : gs.trees) rec.two_tree_violations += two_tree_violations(PR.spt, T);
            }
        for (auto& e : best)
            if (e.length < inf) edges.add(std::move(e));
    };
    chord_recursion(poly, sites, level, g);
    return g;
}

SpannerGraph build_naive_refined_spanner(const SimplePolygon& poly, const std::vector<Point>& sites, double eps) {
    validate_polygon(poly);
    for (const auto& p : sites)
        if (locate_in_ring(poly.vertices, p) == Location::Outside) throw OutsidePolygon("site outside polygon");
    if (!(eps > 0)) throw InvalidEpsilon("eps must be positive");
    SpannerGraph g;
    g.sites = sites;
    g.variant = Variant::Plain;
    g.eps = eps;
    LevelBuilder level = [&](const ChordLevel& L, EdgeSet& edges, RecursionRecord&) {
        RefinedProjectionSet R = naive_refinement_points(L.split, L.points, 2.0, eps);
        std::vector<WeightedSite1D> s1;
        for (const auto& row : R.points)
            for (std::size_t s = 0; s < row.size(); ++s)
                if (row[s]) s1.push_back({row[s]->param, row[s]->weight, static_cast<int>(s)});
        Spanner1D sp = build_2spanner(s1);
        PolygonGeodesy geo(L.poly, false);
        std::map<std::pair<int, int>, bool> seen;
        for (const auto& e : sp.edges) {
            int a = s1[e.a].origin, b = s1[e.b].origin;
            if (a == b || !seen.emplace(std::minmax(a, b), true).second) continue;
            GeodesicPath path = geo.shortest_path(L.points[a], L.points[b]);
            edges.add({L.ids[a], L.ids[b], {}, path.length, path.complexity(), L.depth});
        }
    };
    chord_recursion(poly, sites, level, g);
    return g;
}

}  // namespace gspan
