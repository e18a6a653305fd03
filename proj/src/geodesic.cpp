#include "gspan/geodesic.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "gspan/trapezoid.h"

namespace gspan {

namespace {

// Drops repeated points and straight pass-through vertices.
void simplify(GeodesicPath& path) {
    std::vector<Point> pts;
    std::vector<int> ids;
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        if (!pts.empty() && pts.back() == path.points[i]) {
            if (i + 1 == path.points.size()) ids.back() = path.ids[i];
            continue;
        }
        pts.push_back(path.points[i]);
        ids.push_back(path.ids[i]);
        while (pts.size() >= 3) {
            const Point &a = pts[pts.size() - 3], &b = pts[pts.size() - 2], &c = pts.back();
            if (orient(a, b, c) != 0 || dot(b - a, c - b) <= 0) break;
            pts.erase(pts.end() - 2);
            ids.erase(ids.end() - 2);
        }
    }
    path.points = std::move(pts);
    path.ids = std::move(ids);
    path.recompute_length();
}

// Lee-Preparata funnel over a sleeve of portals.
struct Funnel {
    std::deque<Point> D;
    std::deque<int> ids;
    std::size_t a = 0;
    GeodesicPath prefix;  // start .. current apex

    void init(const Point& p, int pid, const Point& l, int lid, const Point& r, int rid) {
        D = {l, p, r};
        ids = {lid, pid, rid};
        a = 1;
        prefix.points = {p};
        prefix.ids = {pid};
    }

    void add_right(const Point& r, int rid) {
        while (D.size() - 1 > a && orient(D[D.size() - 2], D.back(), r) >= 0) {
            D.pop_back();
            ids.pop_back();
        }
        if (D.size() - 1 == a) {
            while (a > 0 && orient(D[a], D[a - 1], r) > 0) {
                D.pop_back();
                ids.pop_back();
                --a;
                prefix.points.push_back(D[a]);
                prefix.ids.push_back(ids[a]);
            }
        }
        D.push_back(r);
        ids.push_back(rid);
    }

    void add_left(const Point& l, int lid) {
        while (a > 0 && orient(D[1], D[0], l) <= 0) {
            D.pop_front();
            ids.pop_front();
            --a;
        }
        if (a == 0) {
            while (D.size() > 1 && orient(D[0], D[1], l) < 0) {
                D.pop_front();
                ids.pop_front();
                prefix.points.push_back(D[0]);
                prefix.ids.push_back(ids[0]);
            }
        }
        D.push_front(l);
        ids.push_front(lid);
        ++a;
    }
};

double hit_param(const Point& L, const Point& e, const Point& u, const Point& v) {
    // line from u through v against the line L + s e
    Point w = v - u;
    double den = cross(e, w);
    if (den == 0) return std::numeric_limits<double>::quiet_NaN();
    return cross(v - L, w) / den;
}

}  // namespace

void GeodesicPath::recompute_length() {
    length = 0;
    for (std::size_t i = 1; i < points.size(); ++i) length += dist(points[i - 1], points[i]);
}

void GeodesicPath::append(const GeodesicPath& tail) {
    if (tail.points.empty()) return;
    std::size_t start = (!points.empty() && points.back() == tail.points.front()) ? 1 : 0;
    points.insert(points.end(), tail.points.begin() + static_cast<long>(start), tail.points.end());
    ids.insert(ids.end(), tail.ids.begin() + static_cast<long>(start), tail.ids.end());
    recompute_length();
}

GeodesicPath GeodesicPath::reversed() const {
    GeodesicPath r = *this;
    std::reverse(r.points.begin(), r.points.end());
    std::reverse(r.ids.begin(), r.ids.end());
    return r;
}

namespace {

// Chord endpoints inside edges are rarely representable exactly, so an endpoint counts as
// lying on an edge when it is within a few ulps of the polygon's extent from it.
double snap_tolerance(const std::vector<Point>& P) {
    BBox b = bounding_box(P);
    return 1e-9 * std::hypot(b.xmax - b.xmin, b.ymax - b.ymin);
}

double segment_distance(const Point& x, const Point& a, const Point& b) {
    Point e = b - a;
    double t = std::clamp(dot(x - a, e) / dot(e, e), 0.0, 1.0);
    return dist(x, a + e * t);
}

}  // namespace

PolygonGeodesy::PolygonGeodesy(SimplePolygon poly, bool validate) : poly_(std::move(poly)) {
    if (validate) validate_polygon(poly_);
    tri_ = triangulate(poly_, false);
}

int PolygonGeodesy::locate(const Point& p) const {
    int t = tri_.locate(p);
    if (t >= 0) return t;
    // points a rounding error outside, such as snapped chord endpoints, use the nearest triangle
    double best = snap_tolerance(poly_.vertices);
    for (std::size_t k = 0; k < tri_.tris.size(); ++k)
        for (int e = 0; e < 3; ++e) {
            double d = segment_distance(p, tri_.points[tri_.tris[k][e]], tri_.points[tri_.tris[k][(e + 1) % 3]]);
            if (d <= best) {
                best = d;
                t = static_cast<int>(k);
            }
        }
    if (t < 0) throw OutsidePolygon("point outside polygon");
    return t;
}

std::vector<PolygonGeodesy::Portal> PolygonGeodesy::sleeve(int from, int to) const {
    std::vector<Portal> out;
    auto path = tri_.dual_path(from, to);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int t = path[i], u = path[i + 1];
        int e = 0;
        while (tri_.nbr[t][e] != u) ++e;
        int r = tri_.tris[t][e], l = tri_.tris[t][(e + 1) % 3];
        out.push_back({tri_.points[l], tri_.points[r], l, r});
    }
    return out;
}

namespace {

void run_portals(Funnel& f, const std::vector<PolygonGeodesy::Portal>& portals) {
    for (std::size_t i = 1; i < portals.size(); ++i) {
        const auto& prev = portals[i - 1];
        const auto& cur = portals[i];
        if (cur.lid == prev.lid) f.add_right(cur.right, cur.rid);
        else f.add_left(cur.left, cur.lid);
    }
}

}  // namespace

GeodesicPath PolygonGeodesy::shortest_path(const Point& p, const Point& q) const {
    GeodesicPath out;
    if (p == q) {
        locate(p);
        out.points = {p};
        out.ids = {kPathStart};
        return out;
    }
    int tp = locate(p), tq = locate(q);
    if (tp == tq) {
        out.points = {p, q};
        out.ids = {kPathStart, kPathEnd};
        out.recompute_length();
        return out;
    }
    auto portals = sleeve(tp, tq);
    Funnel f;
    f.init(p, kPathStart, portals[0].left, portals[0].lid, portals[0].right, portals[0].rid);
    run_portals(f, portals);
    f.add_right(q, kPathEnd);
    out = f.prefix;
    for (std::size_t k = f.a + 1; k < f.D.size(); ++k) {
        out.points.push_back(f.D[k]);
        out.ids.push_back(f.ids[k]);
    }
    simplify(out);
    return out;
}

EdgeFunnel PolygonGeodesy::funnel_to_edge(const Point& p, int edge) const {
    int m = static_cast<int>(poly_.size());
    int u = edge, v = (edge + 1) % m;
    int tc = -1, ke = -1;
    for (std::size_t t = 0; t < tri_.tris.size() && tc < 0; ++t)
        for (int k = 0; k < 3; ++k)
            if (tri_.tris[t][k] == u && tri_.tris[t][(k + 1) % 3] == v) {
                tc = static_cast<int>(t);
                ke = k;
            }
    if (tc < 0) throw InvalidPolygon("edge missing from triangulation");
    int tp = locate(p);
    auto portals = sleeve(tp, tc);
    portals.push_back({tri_.points[tri_.tris[tc][(ke + 1) % 3]], tri_.points[tri_.tris[tc][ke]],
                       tri_.tris[tc][(ke + 1) % 3], tri_.tris[tc][ke]});
    Funnel f;
    f.init(p, kPathStart, portals[0].left, portals[0].lid, portals[0].right, portals[0].rid);
    run_portals(f, portals);
    EdgeFunnel out;
    out.prefix = f.prefix;
    out.prefix.recompute_length();
    out.chain.assign(f.D.begin(), f.D.end());
    out.chain_ids.assign(f.ids.begin(), f.ids.end());
    out.apex = static_cast<int>(f.a);
    out.dist.assign(out.chain.size(), 0);
    out.dist[f.a] = out.prefix.length;
    for (int j = out.apex - 1; j >= 0; --j) out.dist[j] = out.dist[j + 1] + dist(out.chain[j], out.chain[j + 1]);
    for (std::size_t j = f.a + 1; j < out.chain.size(); ++j)
        out.dist[j] = out.dist[j - 1] + dist(out.chain[j], out.chain[j - 1]);
    return out;
}

namespace {

// Edge parameter intervals owned by each chain point, in [0, 1] from chain.front().
std::vector<std::pair<double, double>> owner_intervals(const EdgeFunnel& f) {
    const auto& D = f.chain;
    int n = static_cast<int>(D.size());
    Point L = D.front(), e = D.back() - D.front();
    std::vector<double> bp(n, 1.0);
    double run = 0;
    for (int j = 0; j + 1 < n; ++j) {
        double s = j + 1 <= f.apex ? hit_param(L, e, D[j + 1], D[j]) : hit_param(L, e, D[j], D[j + 1]);
        if (j == 0) s = 0;
        if (j + 2 == n) s = 1;
        if (!(s == s)) s = run;
        s = std::clamp(s, run, 1.0);
        bp[j] = run = s;
    }
    std::vector<std::pair<double, double>> iv(n);
    for (int j = 0; j < n; ++j) iv[j] = {j == 0 ? 0.0 : bp[j - 1], j + 1 == n ? 1.0 : bp[j]};
    iv[0] = {0, 0};
    iv[n - 1] = {1, 1};
    return iv;
}

}  // namespace

EdgeFunnel::Hit EdgeFunnel::closest() const {
    const auto& D = chain;
    int n = static_cast<int>(D.size());
    Point L = D.front(), R = D.back(), e = R - L;
    double ee = dot(e, e);
    auto iv = owner_intervals(*this);
    Hit best;
    best.weight = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        Point x;
        if (j == 0) x = L;
        else if (j + 1 == n) x = R;
        else {
            double s = dot(D[j] - L, e) / ee;
            double c = std::clamp(s, iv[j].first, iv[j].second);
            if (c == s && L.x == R.x) x = {L.x, D[j].y};
            else if (c == s && L.y == R.y) x = {D[j].x, L.y};
            else if (c <= 0) x = L;
            else if (c >= 1) x = R;
            else x = L + e * c;
        }
        double w = this->dist[j] + gspan::dist(D[j], x);
        if (w < best.weight) {
            best.weight = w;
            best.point = x;
            best.owner = j;
        }
    }
    return best;
}

std::optional<EdgeFunnel::Hit> EdgeFunnel::along_direction(const Point& dir) const {
    const auto& D = chain;
    int n = static_cast<int>(D.size());
    Point L = D.front(), e = D.back() - D.front();
    auto iv = owner_intervals(*this);
    for (int j = 1; j + 1 < n; ++j) {
        double den = cross(e, dir);
        if (den == 0) return std::nullopt;
        // D[j] + t dir on the edge line; t > 0 means the edge lies ahead
        double s = cross(D[j] - L, dir) / den;
        double t = cross(D[j] - L, e) / den;
        if (!(t > 0) || s < iv[j].first || s > iv[j].second) continue;
        Hit h;
        h.owner = j;
        h.point = L.x == D.back().x ? Point{L.x, D[j].y + dir.y * ((L.x - D[j].x) / dir.x)} : L + e * s;
        h.weight = this->dist[j] + gspan::dist(D[j], h.point);
        return h;
    }
    return std::nullopt;
}

GeodesicPath EdgeFunnel::path_to(const Hit& h) const {
    GeodesicPath out = prefix;
    int n = static_cast<int>(chain.size());
    if (h.owner < apex)
        for (int j = apex - 1; j >= h.owner; --j) {
            out.points.push_back(chain[j]);
            out.ids.push_back(chain_ids[j]);
        }
    else
        for (int j = apex + 1; j <= h.owner; ++j) {
            out.points.push_back(chain[j]);
            out.ids.push_back(chain_ids[j]);
        }
    if (h.owner != 0 && h.owner != n - 1) {
        out.points.push_back(h.point);
        out.ids.push_back(kChordPoint);
    }
    simplify(out);
    return out;
}

GeodesicPath shortest_path(const SimplePolygon& poly, const Triangulation& tri, const Point& p,
                           const Point& q) {
    return PolygonGeodesy(poly, tri).shortest_path(p, q);
}

std::vector<std::vector<int>> ShortestPathTree::children() const {
    std::vector<std::vector<int>> ch(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].parent >= 0) ch[nodes[i].parent].push_back(static_cast<int>(i));
    return ch;
}

std::vector<int> ShortestPathTree::ancestors(int n) const {
    std::vector<int> out;
    for (; n >= 0; n = nodes[n].parent) out.push_back(n);
    return out;
}

int ShortestPathTree::lca(int a, int b) const {
    auto pa = ancestors(a), pb = ancestors(b);
    int r = -1;
    while (!pa.empty() && !pb.empty() && pa.back() == pb.back()) {
        r = pa.back();
        pa.pop_back();
        pb.pop_back();
    }
    return r;
}

namespace {

// Distances from parents, in an order where parents come first.
void settle_distances(ShortestPathTree& T) {
    auto ch = T.children();
    std::vector<int> stack{T.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : ch[v]) {
            auto& nd = T.nodes[c];
            if (nd.kind != NodeKind::Foot) nd.dist = T.nodes[v].dist + dist(nd.p, T.nodes[v].p);
            stack.push_back(c);
        }
    }
}

}  // namespace

ShortestPathTree shortest_path_tree(const SimplePolygon& poly, const Point& source,
                                    const std::vector<Point>& sites) {
    PolygonGeodesy geo(poly);
    return shortest_path_tree(geo, source, sites);
}

ShortestPathTree shortest_path_tree(const PolygonGeodesy& geo, const Point& source,
                                    const std::vector<Point>& sites) {
    const auto& P = geo.polygon().vertices;
    int m = static_cast<int>(P.size());
    geo.locate(source);
    ShortestPathTree T;
    T.nodes.push_back({source, NodeKind::Source, -1, -1, 0});
    T.root = 0;
    T.vertex_node.assign(m, -1);
    for (int v = 0; v < m; ++v) {
        if (P[v] == source) {
            T.vertex_node[v] = 0;
            T.nodes[0].ref = v;
            continue;
        }
        T.vertex_node[v] = static_cast<int>(T.nodes.size());
        T.nodes.push_back({P[v], NodeKind::Vertex, v, -1, 0});
    }
    // each vertex hangs from the last bend of its own path
    auto parent_of = [&](const GeodesicPath& path) {
        if (path.points.size() < 2) return T.root;
        int id = path.ids[path.ids.size() - 2];
        return id >= 0 ? T.vertex_node[id] : T.root;
    };
    for (int v = 0; v < m; ++v) {
        int n = T.vertex_node[v];
        if (n == T.root) continue;
        T.nodes[n].parent = parent_of(geo.shortest_path(source, P[v]));
    }
    T.site_node.assign(sites.size(), -1);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        int n = static_cast<int>(T.nodes.size());
        T.nodes.push_back({sites[i], NodeKind::Site, static_cast<int>(i), -1, 0});
        T.nodes[n].parent = parent_of(geo.shortest_path(source, sites[i]));
        if (sites[i] == source) T.nodes[n].parent = T.root;
        T.site_node[i] = n;
    }
    settle_distances(T);
    return T;
}

double Chord::param(const Point& p) const {
    if (vertical()) return p.y - bottom.y;
    Point e = top - bottom;
    return dot(p - bottom, e) / norm(e);
}

Point Chord::at(double s) const {
    if (vertical()) return {bottom.x, bottom.y + s};
    Point e = top - bottom;
    return bottom + e * (s / norm(e));
}

namespace {

struct BoundarySpot {
    int vertex = -1;  // endpoint coincides with this vertex
    int edge = -1;    // otherwise interior of this edge
};

BoundarySpot find_spot(const std::vector<Point>& P, const Point& x) {
    int m = static_cast<int>(P.size());
    for (int i = 0; i < m; ++i)
        if (P[i] == x) return {i, -1};
    for (int i = 0; i < m; ++i)
        if (on_segment(x, P[i], P[(i + 1) % m])) return {-1, i};
    int best = -1;
    double bd = snap_tolerance(P);
    for (int i = 0; i < m; ++i) {
        double d = segment_distance(x, P[i], P[(i + 1) % m]);
        if (d <= bd && P[i] != x && P[(i + 1) % m] != x) {
            bd = d;
            best = i;
        }
    }
    if (best < 0) throw InvalidChord("chord endpoints must lie on the boundary");
    const Point &a = P[best], &b = P[(best + 1) % m];
    if (dist(x, a) <= snap_tolerance(P) || dist(x, b) <= snap_tolerance(P))
        throw InvalidChord("chord endpoint is too close to a vertex");
    return {-1, best};
}

}  // namespace

void validate_chord(const SimplePolygon& poly, const Chord& chord) {
    const auto& P = poly.vertices;
    if (chord.bottom == chord.top) throw InvalidChord("chord has zero length");
    BoundarySpot sb = find_spot(P, chord.bottom), st = find_spot(P, chord.top);
    if (locate_in_ring(P, (chord.bottom + chord.top) * 0.5) != Location::Inside)
        throw InvalidChord("chord leaves the polygon");
    std::size_t m = P.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point &a = P[i], &b = P[(i + 1) % m];
        int e = static_cast<int>(i);
        if (e != sb.edge && e != st.edge && segments_cross(a, b, chord.bottom, chord.top))
            throw InvalidChord("chord crosses an edge");
        if (a != chord.bottom && a != chord.top && on_segment(a, chord.bottom, chord.top))
            throw InvalidChord("chord passes through a vertex");
    }
}

namespace {

SidePolygon make_side(const std::vector<Point>& P, const Point& from, const BoundarySpot& fs,
                      const Point& to, const BoundarySpot& ts) {
    int m = static_cast<int>(P.size());
    SimplePolygon poly;
    SidePolygon side;
    poly.vertices.push_back(from);
    side.origin.push_back(fs.vertex);
    int start = fs.vertex >= 0 ? (fs.vertex + 1) % m : (fs.edge + 1) % m;
    int stop = ts.vertex >= 0 ? ts.vertex : (ts.edge + 1) % m;  // exclusive
    for (int i = start; i != stop; i = (i + 1) % m) {
        poly.vertices.push_back(P[i]);
        side.origin.push_back(i);
    }
    poly.vertices.push_back(to);
    side.origin.push_back(ts.vertex);
    if (poly.vertices.size() < 3) throw InvalidChord("chord cuts off an empty side");
    side.chord_edge = static_cast<int>(poly.vertices.size()) - 1;
    side.geo = std::make_shared<PolygonGeodesy>(std::move(poly), false);
    return side;
}

}  // namespace

PolygonSplit split_along_chord(const SimplePolygon& poly, const Chord& chord) {
    validate_chord(poly, chord);
    const auto& P = poly.vertices;
    BoundarySpot b = find_spot(P, chord.bottom), t = find_spot(P, chord.top);
    PolygonSplit s;
    s.chord = chord;
    s.right = make_side(P, chord.bottom, b, chord.top, t);
    s.left = make_side(P, chord.top, t, chord.bottom, b);
    return s;
}

namespace {

// Points in the sliver between the chord and a snapped endpoint.
bool near_chord(const PolygonSplit& split, const Point& p) {
    const auto& P = split.left.polygon().vertices;
    return segment_distance(p, split.chord.bottom, split.chord.top) <= snap_tolerance(P);
}

}  // namespace

std::vector<Side> classify_sites(const PolygonSplit& split, const std::vector<Point>& sites) {
    std::vector<Side> out;
    for (const auto& p : sites) {
        if (on_segment(p, split.chord.bottom, split.chord.top)) out.push_back(Side::OnChord);
        else if (split.left.geo->triangulation().locate(p) >= 0) out.push_back(Side::Left);
        else if (split.right.geo->triangulation().locate(p) >= 0) out.push_back(Side::Right);
        else if (near_chord(split, p)) out.push_back(orient(split.chord.bottom, split.chord.top, p) > 0 ? Side::Left : Side::Right);
        else throw OutsidePolygon("site outside polygon");
    }
    return out;
}

ProjectionResult project_all(const SimplePolygon& poly, const Chord& chord, const std::vector<Point>& sites) {
    return project_all(split_along_chord(poly, chord), sites);
}

ProjectionResult project_all(const PolygonSplit& split, const std::vector<Point>& sites) {
    ProjectionResult R;
    R.side = classify_sites(split, sites);
    const Chord& ch = split.chord;
    int n = static_cast<int>(sites.size());
    R.proj.resize(n);
    R.paths.resize(n);
    for (int i = 0; i < n; ++i) {
        ChordProjection& pr = R.proj[i];
        pr.site = i;
        if (R.side[i] == Side::OnChord) {
            pr.foot = sites[i];
            pr.weight = 0;
            pr.param = ch.param(sites[i]);
            R.paths[i].points = {sites[i]};
            R.paths[i].ids = {kPathStart};
            continue;
        }
        const SidePolygon& sp = R.side[i] == Side::Left ? split.left : split.right;
        EdgeFunnel f = sp.geo->funnel_to_edge(sites[i], sp.chord_edge);
        EdgeFunnel::Hit h = f.closest();
        GeodesicPath path = f.path_to(h);
        for (std::size_t k = 0; k < path.ids.size(); ++k) {
            int& id = path.ids[k];
            if (id >= 0) id = sp.origin[id] >= 0 ? sp.origin[id] : kChordPoint;
        }
        path.ids.front() = kPathStart;
        path.ids.back() = kChordPoint;
        pr.foot = path.points.back();
        pr.weight = path.length;
        pr.param = ch.param(pr.foot);
        R.paths[i] = std::move(path);
    }

    // shortest path tree of the chord: one foot node per distinct projection point
    ShortestPathTree& T = R.spt;
    T.nodes.push_back({ch.bottom, NodeKind::Source, -1, -1, 0});
    T.root = 0;
    T.site_node.assign(n, -1);
    std::map<double, int> feet;
    std::map<int, int> vnode;
    for (int i = 0; i < n; ++i) {
        const auto& path = R.paths[i];
        auto it = feet.find(R.proj[i].param);
        int cur;
        if (it == feet.end()) {
            cur = static_cast<int>(T.nodes.size());
            int owner = path.ids.size() >= 2 ? path.ids[path.ids.size() - 2] : -1;
            T.nodes.push_back({R.proj[i].foot, NodeKind::Foot, owner, T.root, 0});
            feet[R.proj[i].param] = cur;
        } else {
            cur = it->second;
        }
        for (std::size_t k = path.points.size() - 1; k-- > 1;) {
            int id = path.ids[k];
            auto vit = vnode.find(id);
            if (vit != vnode.end()) {
                cur = vit->second;
                continue;
            }
            int nn = static_cast<int>(T.nodes.size());
            T.nodes.push_back({path.points[k], NodeKind::Vertex, id, cur, 0});
            vnode[id] = nn;
            cur = nn;
        }
        T.site_node[i] = static_cast<int>(T.nodes.size());
        T.nodes.push_back({sites[i], NodeKind::Site, i, cur, 0});
    }
    settle_distances(T);
    return R;
}

std::vector<ColoredFoot> colored_projections(const PolygonSplit& split, const std::vector<Point>& sites) {
    const Chord& ch = split.chord;
    if (!ch.vertical()) throw InvalidChord("colored projections need a vertical chord");
    auto side = classify_sites(split, sites);
    std::vector<ColoredFoot> out(sites.size());
    for (int s = 0; s < 2; ++s) {
        const SidePolygon& sp = s == 0 ? split.left : split.right;
        auto HD = decompose(sp.polygon(), Axis::Horizontal);
        int nt = static_cast<int>(HD.traps.size());
        std::vector<char> blue(nt, 0);
        for (int t = 0; t < nt; ++t)
            blue[t] = HD.traps[t].bottom_edge == sp.chord_edge || HD.traps[t].top_edge == sp.chord_edge;
        // attach every other trapezoid to the wall through which it hangs off the blue set
        std::vector<int> attach(nt, -1);
        std::vector<char> direct(nt, 0);
        std::vector<int> stack;
        for (int t = 0; t < nt; ++t)
            if (blue[t]) stack.push_back(t);
        std::vector<char> seen(blue.begin(), blue.end());
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int w : HD.traps[t].walls) {
                int u = HD.neighbor_across(t, w);
                if (seen[u]) continue;
                seen[u] = 1;
                attach[u] = blue[t] ? w : attach[t];
                direct[u] = blue[t];
                stack.push_back(u);
            }
        }
        double yb = ch.bottom.y, yt = ch.top.y, X = ch.bottom.x;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (side[i] == Side::OnChord) {
                out[i] = {ProjectionColor::OnChord, sites[i]};
                continue;
            }
            if (static_cast<int>(side[i]) != s) continue;
            int t = HD.locate(sites[i]);
            if (blue[t]) {
                out[i] = {ProjectionColor::Blue, {X, sites[i].y}};
                continue;
            }
            double yw = HD.points[HD.walls[attach[t]].vertex].y;
            if (yw > yb && yw < yt) out[i] = {ProjectionColor::Green, {X, yw}};
            else out[i] = {direct[t] ? ProjectionColor::Orange : ProjectionColor::Purple, yw >= yt ? ch.top : ch.bottom};
        }
    }
    return out;
}

}  // namespace gspan
