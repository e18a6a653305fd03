#include "gspan/visibility.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace gspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Direction v->x lies in the closed free cone of the corner (u, v, w).
bool in_cone(const Point& u, const Point& v, const Point& w, const Point& x) {
    int turn = orient(u, v, w);
    if (turn > 0) return orient(v, w, x) >= 0 && orient(v, u, x) <= 0;
    if (turn < 0) return !(orient(v, u, x) > 0 && orient(v, w, x) < 0);
    return orient(v, w, x) >= 0;
}

}  // namespace

bool visible(const PolygonalDomain& dom, const Point& a, const Point& b) {
    if (a == b) return true;
    double xmin = std::min(a.x, b.x), xmax = std::max(a.x, b.x);
    double ymin = std::min(a.y, b.y), ymax = std::max(a.y, b.y);
    // directions that must be free at boundary points on the segment
    struct Need {
        bool to_a = false, to_b = false, a_ok = false, b_ok = false;
    };
    std::vector<std::pair<Point, Need>> touched;
    auto need_at = [&](const Point& v) -> Need& {
        for (auto& t : touched)
            if (t.first == v) return t.second;
        touched.push_back({v, Need{v != a, v != b, false, false}});
        return touched.back().second;
    };
    for (const auto* ring : dom.rings()) {
        const auto& R = *ring;
        std::size_t m = R.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point &c = R[i], &d = R[(i + 1) % m];
            if (std::max(c.x, d.x) < xmin || std::min(c.x, d.x) > xmax || std::max(c.y, d.y) < ymin ||
                std::min(c.y, d.y) > ymax)
                continue;
            if (segments_cross(a, b, c, d)) return false;
            // endpoint in the relative interior of this edge: the segment must leave into the free side
            for (int e = 0; e < 2; ++e) {
                const Point& p = e == 0 ? a : b;
                const Point& o = e == 0 ? b : a;
                if (p != c && p != d && on_segment(p, c, d) && orient(c, d, o) < 0) return false;
            }
            // an edge vertex on the segment: handled by the cone test below
            if (on_segment(c, a, b)) {
                const Point& u = R[(i + m - 1) % m];
                Need& nd = need_at(c);
                if (nd.to_a && in_cone(u, c, d, a)) nd.a_ok = true;
                if (nd.to_b && in_cone(u, c, d, b)) nd.b_ok = true;
            }
        }
    }
    // without proper crossings the segment can only leave the free space at a vertex
    for (const auto& [v, nd] : touched) {
        if (nd.to_a && !nd.a_ok) return false;
        if (nd.to_b && !nd.b_ok) return false;
    }
    return true;
}

std::size_t VisibilityGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& a : adj) c += a.size();
    return c / 2;
}

VisibilityGraph visibility_graph(const PolygonalDomain& dom, const std::vector<Point>& extra) {
    VisibilityGraph G;
    for (const auto* ring : dom.rings()) G.nodes.insert(G.nodes.end(), ring->begin(), ring->end());
    G.nodes.insert(G.nodes.end(), extra.begin(), extra.end());
    std::size_t n = G.nodes.size();
    G.adj.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (G.nodes[i] == G.nodes[j]) continue;
            if (!visible(dom, G.nodes[i], G.nodes[j])) continue;
            double w = dist(G.nodes[i], G.nodes[j]);
            G.adj[i].push_back({static_cast<int>(j), w});
            G.adj[j].push_back({static_cast<int>(i), w});
        }
    return G;
}

DomainGeodesy::DomainGeodesy(PolygonalDomain dom, bool validate) : dom_(std::move(dom)) {
    if (validate) validate_domain(dom_);
    VisibilityGraph G = visibility_graph(dom_);
    verts_ = G.nodes;
    std::size_t n = verts_.size();
    dist_.assign(n, std::vector<double>(n, kInf));
    pred_.assign(n, std::vector<int>(n, -1));
    using Item = std::pair<double, int>;
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = dist_[s];
        auto& pr = pred_[s];
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        d[s] = 0;
        pq.push({0, static_cast<int>(s)});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (auto [v, w] : G.adj[u])
                if (du + w < d[v]) {
                    d[v] = du + w;
                    pr[v] = u;
                    pq.push({d[v], v});
                }
        }
    }
}

DomainGeodesy::Attachment DomainGeodesy::attach(const Point& p) const {
    if (locate_in_domain(dom_, p) == Location::Outside) throw OutsidePolygon("point outside domain");
    std::size_t n = verts_.size();
    Attachment A;
    A.p = p;
    A.d.assign(n, kInf);
    A.via.assign(n, -1);
    std::vector<int> vis;
    for (std::size_t u = 0; u < n; ++u)
        if (visible(dom_, p, verts_[u])) vis.push_back(static_cast<int>(u));
    for (int u : vis) {
        double du = dist(p, verts_[u]);
        const auto& row = dist_[u];
        for (std::size_t v = 0; v < n; ++v)
            if (du + row[v] < A.d[v]) {
                A.d[v] = du + row[v];
                A.via[v] = u;
            }
    }
    return A;
}

double DomainGeodesy::distance(const Attachment& a, const Attachment& b) const {
    if (visible(dom_, a.p, b.p)) return dist(a.p, b.p);
    double best = kInf;
    for (std::size_t v = 0; v < verts_.size(); ++v)
        if (b.d[v] < kInf && b.via[v] == static_cast<int>(v)) best = std::min(best, a.d[v] + b.d[v]);
    return best;
}

std::vector<int> DomainGeodesy::vertex_path(int from, int to) const {
    std::vector<int> out;
    for (int v = to; v != -1; v = pred_[from][v]) {
        out.push_back(v);
        if (v == from) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

GeodesicPath DomainGeodesy::path(const Attachment& a, const Attachment& b) const {
    GeodesicPath out;
    out.points.push_back(a.p);
    out.ids.push_back(kPathStart);
    if (!(a.p == b.p)) {
        if (!visible(dom_, a.p, b.p)) {
            // last vertex v seen directly from b minimizing a.d[v] + |vb|
            int best = -1;
            double bd = kInf;
            for (std::size_t v = 0; v < verts_.size(); ++v)
                if (b.via[v] == static_cast<int>(v) && a.d[v] + b.d[v] < bd) {
                    bd = a.d[v] + b.d[v];
                    best = static_cast<int>(v);
                }
            if (best < 0) throw DegenerateInput("points are not connected in the domain");
            for (int v : vertex_path(a.via[best], best)) {
                out.points.push_back(verts_[v]);
                out.ids.push_back(v);
            }
        }
        out.points.push_back(b.p);
        out.ids.push_back(kPathEnd);
    }
    out.recompute_length();
    return out;
}

GeodesicPath domain_geodesic(const PolygonalDomain& dom, const Point& p, const Point& q) {
    return DomainGeodesy(dom).path(p, q);
}

}  // namespace gspan
