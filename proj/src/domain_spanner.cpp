#include "gspan/domain_spanner.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>

#include "gspan/weighted_1d.h"

namespace gspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using PointKey = std::pair<double, double>;
PointKey pkey(const Point& p) { return {p.x, p.y}; }

double ccw_angle(const Point& from, const Point& to) {
    double a = std::atan2(cross(from, to), dot(from, to));
    return a < 0 ? a + 2 * std::numbers::pi : a;
}

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

bool on_polyline(const std::vector<Point>& path, const Point& p) {
    if (path.size() == 1) return path[0] == p;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (on_segment(p, path[i], path[i + 1])) return true;
    return false;
}

Point unit(const Point& d) { return d * (1.0 / norm(d)); }

}  // namespace

WeightedTriangulation weighted_triangulation(const PolygonalDomain& dom, const std::vector<Point>& sites) {
    WeightedTriangulation W;
    std::vector<Point> pts;
    std::map<PointKey, int> index;
    auto id_of = [&](const Point& p) {
        auto [it, fresh] = index.emplace(pkey(p), static_cast<int>(pts.size()));
        if (fresh) pts.push_back(p);
        return it->second;
    };
    std::vector<std::pair<int, int>> segs;
    bool outer = true;
    for (const auto* ring : dom.rings()) {
        std::vector<int> ids;
        for (const auto& p : *ring) ids.push_back(id_of(p));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            int a = ids[i], b = ids[(i + 1) % ids.size()];
            if (a == b) continue;
            segs.push_back(std::minmax(a, b));
            W.boundary.insert(ConstrainedTriangulation::key(a, b));
        }
        if (outer)
            for (int id : ids)
                if (W.root < 0 || pts[id].y < pts[W.root].y || (pts[id].y == pts[W.root].y && pts[id].x < pts[W.root].x))
                    W.root = id;
        outer = false;
    }
    int U = static_cast<int>(pts.size());
    W.domain_points = U;

    // shortest path tree over visibility edges that pass through no other vertex
    std::vector<std::vector<std::pair<int, double>>> adj(U);
    for (int i = 0; i < U; ++i)
        for (int j = i + 1; j < U; ++j) {
            bool blocked = false;
            for (int k = 0; k < U && !blocked; ++k)
                if (k != i && k != j && on_segment(pts[k], pts[i], pts[j])) blocked = true;
            if (blocked || !visible(dom, pts[i], pts[j])) continue;
            double w = dist(pts[i], pts[j]);
            adj[i].push_back({j, w});
            adj[j].push_back({i, w});
        }
    std::vector<double> d(U, kInf);
    W.tree_parent.assign(U + 4, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[W.root] = 0;
    pq.push({0, W.root});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (auto [v, w] : adj[u])
            if (du + w < d[v]) {
                d[v] = du + w;
                W.tree_parent[v] = u;
                pq.push({d[v], v});
            }
    }
    for (int v = 0; v < U; ++v) {
        if (d[v] == kInf) throw DegenerateInput("domain free space is not connected");
        if (W.tree_parent[v] >= 0) segs.push_back(std::minmax(v, W.tree_parent[v]));
    }

    BBox bb = bounding_box(pts);
    double dx = 0.1 * std::max(bb.xmax - bb.xmin, 1e-9), dy = 0.1 * std::max(bb.ymax - bb.ymin, 1e-9);
    pts.push_back({bb.xmin - dx, bb.ymin - dy});
    pts.push_back({bb.xmax + dx, bb.ymin - dy});
    pts.push_back({bb.xmax + dx, bb.ymax + dy});
    pts.push_back({bb.xmin - dx, bb.ymax + dy});
    std::sort(segs.begin(), segs.end());
    segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
    W.tri = constrained_triangulation(pts, segs).tri;
    const auto& T = W.tri;

    // the corners join the tree: one through its smallest domain neighbour, the rest along the box
    int first = -1, anchor = -1;
    for (int c = 0; c < 4 && first < 0; ++c)
        for (const auto& tr : T.tris)
            for (int e = 0; e < 3; ++e)
                if (tr[e] == U + c)
                    for (int o : {tr[(e + 1) % 3], tr[(e + 2) % 3]})
                        if (o < U && (anchor < 0 || o < anchor)) {
                            anchor = o;
                            first = c;
                        }
    if (first < 0) throw DegenerateInput("box corners do not reach the domain");
    W.tree_parent[U + first] = anchor;
    for (int s = 1; s < 4; ++s) W.tree_parent[U + (first + s) % 4] = U + (first + s - 1) % 4;

    std::size_t F = T.tris.size();
    W.free.assign(F, 0);
    W.weight.assign(F, 0);
    for (std::size_t t = 0; t < F; ++t) {
        const auto& v = T.tris[t];
        Point c = (T.points[v[0]] + T.points[v[1]] + T.points[v[2]]) * (1.0 / 3);
        W.free[t] = locate_in_domain(dom, c) == Location::Inside;
    }
    // the first free triangle wins, so sites on a shared edge land together
    for (const auto& p : sites) {
        int found = -1;
        for (std::size_t t = 0; t < F && found < 0; ++t) {
            if (!W.free[t]) continue;
            const auto& v = T.tris[t];
            if (in_closed_triangle(T.points[v[0]], T.points[v[1]], T.points[v[2]], p)) found = static_cast<int>(t);
        }
        if (found < 0) throw OutsidePolygon("site outside the free space");
        W.site_tri.push_back(found);
        ++W.weight[found];
    }
    return W;
}

std::string separator_kind_name(SeparatorKind k) {
    switch (k) {
        case SeparatorKind::One: return "one";
        case SeparatorKind::Two: return "two";
        case SeparatorKind::Three: return "three";
        case SeparatorKind::Degenerate: return "degenerate";
    }
    return "three";
}

namespace {

void fill_sides(const WeightedTriangulation& W, const std::vector<char>& in_left, Separator& S) {
    for (std::size_t t = 0; t < W.tri.tris.size(); ++t)
        if (W.free[t]) (in_left[t] ? S.left_tris : S.right_tris).push_back(W.tri.tris[t]);
}

// Left region is one whole triangle of the mesh.
void triangle_separator(const WeightedTriangulation& W, int t, const std::vector<Point>& sites, Separator& S) {
    const auto& T = W.tri;
    const auto& v = T.tris[t];
    S.kind = SeparatorKind::Three;
    for (int e = 0; e < 3; ++e) {
        int a = v[e], b = v[(e + 1) % 3];
        S.corners.push_back(T.points[a]);
        if (!W.is_boundary(a, b)) S.paths.push_back({T.points[a], T.points[b]});
    }
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (in_closed_triangle(T.points[v[0]], T.points[v[1]], T.points[v[2]], sites[i]))
            S.left.push_back(static_cast<int>(i));
    std::vector<char> in_left(T.tris.size(), 0);
    in_left[t] = 1;
    fill_sides(W, in_left, S);
}

// A triangle holding more than n/3 sites: cut a wedge off one of its corners, or fall back
// to a segment through collinear sites.
void heavy_separator(const PolygonalDomain& dom, const WeightedTriangulation& W, int t, const std::vector<Point>& sites, int lo, int hi,
                     Separator& S) {
    const auto& T = W.tri;
    S.heavy = true;
    struct Fan {
        std::vector<int> at;                   // sites on the corner itself
        std::vector<std::vector<int>> groups;  // sites by direction from the corner, then distance
    };
    auto fan = [&](int rot) {
        Point A = T.points[T.tris[t][rot]], B = T.points[T.tris[t][(rot + 1) % 3]],
              C = T.points[T.tris[t][(rot + 2) % 3]];
        Fan f;
        std::vector<int> rest;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (!in_closed_triangle(A, B, C, sites[i])) continue;
            (sites[i] == A ? f.at : rest).push_back(static_cast<int>(i));
        }
        std::sort(rest.begin(), rest.end(), [&](int x, int y) {
            int o = orient(A, sites[x], sites[y]);
            if (o != 0) return o > 0;
            double dx = dist(A, sites[x]), dy = dist(A, sites[y]);
            return dx < dy || (dx == dy && x < y);
        });
        for (int i : rest) {
            if (f.groups.empty() || orient(A, sites[f.groups.back()[0]], sites[i]) != 0) f.groups.emplace_back();
            f.groups.back().push_back(i);
        }
        return f;
    };
    for (int rot = 0; rot < 3; ++rot) {
        Fan f = fan(rot);
        int cum = static_cast<int>(f.at.size());
        std::size_t g = 0;
        for (; g < f.groups.size(); ++g) {
            cum += static_cast<int>(f.groups[g].size());
            if (cum >= lo) break;
        }
        if (g == f.groups.size() || cum > hi) continue;
        if (g + 1 == f.groups.size()) {
            triangle_separator(W, t, sites, S);
            S.heavy = true;
            return;
        }
        int a = T.tris[t][rot], b = T.tris[t][(rot + 1) % 3], c = T.tris[t][(rot + 2) % 3];
        Point A = T.points[a], B = T.points[b], C = T.points[c];
        // cut along the bisector of two consecutive directions so no site sits on the cut
        Point dir = unit(sites[f.groups[g][0]] - A) + unit(sites[f.groups[g + 1][0]] - A);
        double u = cross(A - B, dir) / cross(C - B, dir);
        u = std::clamp(u, 1e-12, 1 - 1e-12);
        Point X = free_point_near(dom, B + (C - B) * u);
        S.mesh = T.points;
        int x = static_cast<int>(S.mesh.size());
        S.mesh.push_back(X);
        S.kind = SeparatorKind::Three;
        S.corners = {A, B, X};
        if (!W.is_boundary(a, b)) S.paths.push_back({A, B});
        if (!W.is_boundary(b, c)) S.paths.push_back({B, X});
        S.paths.push_back({X, A});
        S.left = f.at;
        for (std::size_t h = 0; h <= g; ++h) S.left.insert(S.left.end(), f.groups[h].begin(), f.groups[h].end());
        std::sort(S.left.begin(), S.left.end());
        S.left_tris = {{a, b, x}};
        S.right_tris = {{a, x, c}};
        int nb = T.nbr[t][(rot + 1) % 3];
        for (std::size_t s = 0; s < T.tris.size(); ++s) {
            if (!W.free[s] || static_cast<int>(s) == t) continue;
            if (static_cast<int>(s) != nb) {
                S.right_tris.push_back(T.tris[s]);
                continue;
            }
            // the neighbour across bc gets x as a vertex too
            const auto& v = T.tris[s];
            int k = 0;
            while (v[k] != c) ++k;
            int y = v[(k + 2) % 3];
            S.right_tris.push_back({c, x, y});
            S.right_tris.push_back({x, b, y});
        }
        return;
    }
    // no wedge balances: the jump happens on one ray, so the left region is a segment along it
    Fan f = fan(0);
    int cum = static_cast<int>(f.at.size());
    std::size_t g = 0;
    for (; g < f.groups.size(); ++g) {
        if (cum + static_cast<int>(f.groups[g].size()) >= lo) break;
        cum += static_cast<int>(f.groups[g].size());
    }
    if (g == f.groups.size()) throw DegenerateInput("no balanced cut inside the heavy triangle");
    int base = static_cast<int>(f.at.size());
    int j = std::max(1, lo - base);
    if (base + j > hi || j > static_cast<int>(f.groups[g].size()))
        throw DegenerateInput("too many coincident sites for a balanced separator");
    Point A = T.points[T.tris[t][0]], E = sites[f.groups[g][j - 1]];
    S.kind = SeparatorKind::Degenerate;
    S.corners = {A, E};
    S.paths = {{A, E}};
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (on_segment(sites[i], A, E)) S.left.push_back(static_cast<int>(i));
    std::vector<char> none(T.tris.size(), 0);
    fill_sides(W, none, S);
}

}  // namespace

Separator balanced_sp_separator(const PolygonalDomain& dom, const std::vector<Point>& sites) {
    int n = static_cast<int>(sites.size());
    if (n < 5) throw DegenerateInput("a balanced separator needs at least 5 sites");
    WeightedTriangulation W = weighted_triangulation(dom, sites);
    const auto& T = W.tri;
    int lo = (2 * n + 8) / 9, hi = 2 * n / 3;
    Separator S;
    S.mesh = T.points;
    int F = static_cast<int>(T.tris.size());
    for (int t = 0; t < F; ++t)
        if (3 * W.weight[t] > n) {
            heavy_separator(dom, W, t, sites, lo, hi, S);
            return S;
        }

    // dual edges of non-tree edges form a spanning tree of the triangles and the outer face
    int O = F;
    struct DualEdge {
        int to, a, b;
    };
    std::vector<std::vector<DualEdge>> dual(F + 1);
    std::size_t cotree_edges = 0;
    std::array<int, 4> e0{-1, -1, -1, -1};
    auto edge_less = [&](int a1, int b1, int a2, int b2) {
        Point p1 = T.points[a1], q1 = T.points[b1], p2 = T.points[a2], q2 = T.points[b2];
        if (lex_less(q1, p1)) std::swap(p1, q1);
        if (lex_less(q2, p2)) std::swap(p2, q2);
        if (p1 != p2) return lex_less(p1, p2);
        return lex_less(q1, q2);
    };
    for (int t = 0; t < F; ++t)
        for (int e = 0; e < 3; ++e) {
            int a = T.tris[t][e], b = T.tris[t][(e + 1) % 3];
            int u = T.nbr[t][e];
            if (W.is_tree_edge(a, b)) continue;
            if (u < 0) u = O;
            else if (u < t) continue;
            dual[t].push_back({u, a, b});
            dual[u].push_back({t, a, b});
            ++cotree_edges;
            if (e0[0] < 0 || edge_less(a, b, e0[2], e0[3])) e0 = {t, u, a, b};
        }
    std::vector<int> parent(F + 1, -2), order{O};
    parent[O] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& de : dual[order[i]])
            if (parent[de.to] == -2) {
                parent[de.to] = order[i];
                order.push_back(de.to);
            }
    if (cotree_edges != static_cast<std::size_t>(F) || order.size() != static_cast<std::size_t>(F + 1))
        throw DegenerateInput("non-tree edges do not form a dual spanning tree");
    std::vector<int> sub_w(F + 1, 0), sub_t(F + 1, 0);
    for (int t = 0; t < F; ++t) {
        sub_w[t] = W.weight[t];
        sub_t[t] = 1;
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        sub_w[parent[order[i]]] += sub_w[order[i]];
        sub_t[parent[order[i]]] += sub_t[order[i]];
    }
    // weight and triangle count of the component holding y once the dual edge x-y is cut
    auto side = [&](int x, int y) -> std::pair<int, int> {
        if (parent[y] == x) return {sub_w[y], sub_t[y]};
        return {n - sub_w[x], F - sub_t[x]};
    };

    int x = e0[0], y = e0[1];
    if (side(y, x).first > side(x, y).first) std::swap(x, y);
    int terminal = -1;
    for (;;) {
        auto [w, cnt] = side(x, y);
        S.walk_triangles.push_back(cnt);
        S.walk_weights.push_back(w);
        if (w <= hi) break;
        if (y == O) throw DegenerateInput("separator walk entered the outer face");
        int pick = -1, pick_w = -1;
        bool fits = false;
        for (const auto& de : dual[y]) {
            if (de.to == x) continue;
            int wc = side(y, de.to).first;
            bool f = wc >= lo && wc <= hi;
            // prefer a child that balances, then the heaviest
            if ((f && !fits) || (f == fits && wc > pick_w)) {
                pick = de.to;
                pick_w = wc;
                fits = f;
            }
        }
        if (pick < 0 || (!fits && pick_w < lo)) {
            terminal = y;
            break;
        }
        x = y;
        y = pick;
    }
    if (terminal >= 0) {
        triangle_separator(W, terminal, sites, S);
        return S;
    }

    // left region: the component of y
    std::vector<char> in_left(F + 1, 0);
    std::vector<int> stack{y};
    in_left[y] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& de : dual[u])
            if (!in_left[de.to] && !(u == y && de.to == x)) {
                in_left[de.to] = 1;
                stack.push_back(de.to);
            }
    }
    int a = -1, b = -1;
    for (const auto& de : dual[x])
        if (de.to == y) {
            a = de.a;
            b = de.b;
        }
    auto to_root = [&](int v) {
        std::vector<int> out;
        for (; v >= 0; v = W.tree_parent[v]) out.push_back(v);
        return out;
    };
    std::vector<int> ra = to_root(a), rb = to_root(b);
    int lca = -1;
    while (!ra.empty() && !rb.empty() && ra.back() == rb.back()) {
        lca = ra.back();
        ra.pop_back();
        rb.pop_back();
    }
    // lca .. v on domain points only; corner legs run outside the free space
    auto leg = [&](const std::vector<int>& up) {
        std::vector<Point> out;
        if (lca < W.domain_points) out.push_back(T.points[lca]);
        for (auto it = up.rbegin(); it != up.rend(); ++it)
            if (*it < W.domain_points) out.push_back(T.points[*it]);
        return out;
    };
    std::vector<Point> pa = leg(ra), pb = leg(rb);
    bool closing_free = x != O && y != O && W.free[x] && W.free[y];
    if (closing_free) {
        S.kind = SeparatorKind::Three;
        S.corners = {T.points[lca], T.points[a], T.points[b]};
        if (pa.size() >= 2) S.paths.push_back(pa);
        if (pb.size() >= 2) S.paths.push_back(pb);
        S.paths.push_back({T.points[a], T.points[b]});
    } else {
        if (pa.size() >= 2) S.paths.push_back(pa);
        if (pb.size() >= 2) S.paths.push_back(pb);
        if (S.paths.empty()) throw DegenerateInput("separator has no path in the free space");
        if (S.paths.size() == 1) {
            const auto& ring = dom.outer.vertices;
            auto on_outer = [&](const Point& p) { return std::find(ring.begin(), ring.end(), p) != ring.end(); };
            S.kind = on_outer(S.paths[0].front()) && on_outer(S.paths[0].back()) ? SeparatorKind::One
                                                                                 : SeparatorKind::Two;
            S.corners = {S.paths[0].front(), S.paths[0].back()};
        } else {
            S.kind = SeparatorKind::Two;
            S.corners = {pa.front(), pa.back(), pb.back()};
        }
    }
    std::vector<char> left_site(n, 0);
    for (int i = 0; i < n; ++i) {
        if (in_left[W.site_tri[i]]) left_site[i] = 1;
        for (const auto& p : S.paths)
            if (on_polyline(p, sites[i])) left_site[i] = 1;
        if (left_site[i]) S.left.push_back(i);
    }
    in_left.pop_back();
    fill_sides(W, in_left, S);
    return S;
}

namespace {

// Boundary walks of a union of counterclockwise triangles, turning as tightly as possible
// so every walk follows one face.
std::vector<std::vector<Point>> trace_rings(const std::vector<Point>& mesh, const std::vector<std::array<int, 3>>& tris) {
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : tris)
        for (int e = 0; e < 3; ++e) ++directed[{t[e], t[(e + 1) % 3]}];
    std::map<int, std::vector<int>> out;
    std::vector<std::pair<int, int>> boundary;
    for (const auto& [e, c] : directed)
        if (!directed.count({e.second, e.first})) {
            out[e.first].push_back(e.second);
            boundary.push_back(e);
        }
    std::map<std::pair<int, int>, char> used;
    std::vector<std::vector<Point>> rings;
    for (const auto& start : boundary) {
        if (used[start]) continue;
        std::vector<Point> ring;
        auto [u, v] = start;
        used[start] = 1;
        for (;;) {
            ring.push_back(mesh[u]);
            Point back = mesh[u] - mesh[v];
            int best = -1;
            double best_a = kInf;
            for (int w : out[v]) {
                double a = ccw_angle(mesh[w] - mesh[v], back);
                if (a <= 0) a = 2 * std::numbers::pi;
                if (a < best_a) {
                    best_a = a;
                    best = w;
                }
            }
            if (best < 0) throw DegenerateInput("open boundary while splitting the domain");
            std::pair<int, int> next{v, best};
            if (next == start) break;
            if (used[next]) throw DegenerateInput("boundary walk revisits an edge");
            used[next] = 1;
            u = v;
            v = best;
        }
        rings.push_back(std::move(ring));
    }
    return rings;
}

// Sign of a ring's turning, exact at its lowest vertex; slivers defeat the shoelace sum.
int ring_orientation(const std::vector<Point>& ring) {
    std::size_t m = ring.size(), i = 0;
    for (std::size_t j = 1; j < m; ++j)
        if (lex_less(ring[j], ring[i])) i = j;
    int o = orient(ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]);
    if (o != 0) return o;
    double a = signed_area(ring);
    return (a > 0) - (a < 0);
}

std::vector<PolygonalDomain> components(const std::vector<Point>& mesh, const std::vector<std::array<int, 3>>& tris) {
    std::vector<int> uf(tris.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int i) { return uf[i] == i ? i : uf[i] = find(uf[i]); };
    std::map<std::uint64_t, int> seen;
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int e = 0; e < 3; ++e) {
            auto key = ConstrainedTriangulation::key(tris[t][e], tris[t][(e + 1) % 3]);
            auto [it, fresh] = seen.emplace(key, static_cast<int>(t));
            if (!fresh) uf[find(static_cast<int>(t))] = find(it->second);
        }
    std::map<int, std::vector<std::array<int, 3>>> groups;
    for (std::size_t t = 0; t < tris.size(); ++t) groups[find(static_cast<int>(t))].push_back(tris[t]);
    std::vector<PolygonalDomain> out;
    for (const auto& [root, part] : groups) {
        PolygonalDomain dom;
        bool has_outer = false;
        for (auto& ring : trace_rings(mesh, part)) {
            if (ring_orientation(ring) > 0) {
                if (has_outer) throw DegenerateInput("component with two outer boundaries");
                dom.outer.vertices = std::move(ring);
                has_outer = true;
            } else {
                dom.holes.push_back(SimplePolygon{std::move(ring)});
            }
        }
        if (!has_outer) throw DegenerateInput("component without an outer boundary");
        out.push_back(std::move(dom));
    }
    return out;
}

}  // namespace

DomainSplit split_domain(const PolygonalDomain& dom, const std::vector<Point>& sites, const Separator& sep) {
    DomainSplit out;
    out.reflex_before = reflex_count(dom);
    std::vector<char> left(sites.size(), 0);
    for (int i : sep.left) left[i] = 1;
    if (sep.kind == SeparatorKind::Degenerate) {
        SubDomain seg, rest;
        seg.left = seg.segment = true;
        seg.sites = sep.left;
        rest.domain = dom;
        for (std::size_t i = 0; i < sites.size(); ++i)
            if (!left[i]) rest.sites.push_back(static_cast<int>(i));
        out.parts = {std::move(seg), std::move(rest)};
        out.reflex_after = out.reflex_before;
        return out;
    }
    for (int s = 0; s < 2; ++s)
        for (auto& d : components(sep.mesh, s == 0 ? sep.left_tris : sep.right_tris)) {
            SubDomain part;
            part.domain = std::move(d);
            part.left = s == 0;
            out.parts.push_back(std::move(part));
        }
    for (std::size_t i = 0; i < sites.size(); ++i) {
        bool placed = false;
        for (auto& part : out.parts)
            if (part.left == static_cast<bool>(left[i]) && locate_in_domain(part.domain, sites[i]) != Location::Outside) {
                part.sites.push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        if (!placed) throw DegenerateInput("site not covered by its side of the split");
    }
    for (const auto& part : out.parts) out.reflex_after += reflex_count(part.domain);
    return out;
}

Point free_point_near(const PolygonalDomain& dom, const Point& p) {
    if (locate_in_domain(dom, p) != Location::Outside) return p;
    for (int r = 1; r <= 4; ++r) {
        std::vector<double> xs{p.x}, ys{p.y};
        for (int s = 0; s < r; ++s) {
            xs.push_back(std::nextafter(xs.back(), kInf));
            ys.push_back(std::nextafter(ys.back(), kInf));
        }
        for (double x = p.x, y = p.y; static_cast<int>(xs.size()) < 2 * r + 1;) {
            x = std::nextafter(x, -kInf);
            y = std::nextafter(y, -kInf);
            xs.push_back(x);
            ys.push_back(y);
        }
        for (double x : xs)
            for (double y : ys)
                if (locate_in_domain(dom, {x, y}) != Location::Outside) return {x, y};
    }
    throw OutsidePolygon("point outside domain");
}

PathProjection project_to_path(const DomainGeodesy& geo, const std::vector<Point>& lambda,
                               const std::vector<Point>& sites) {
    if (lambda.size() < 2) throw InvalidParams("a separator path needs two points");
    PathProjection out;
    out.lambda = lambda;
    out.cum.assign(lambda.size(), 0);
    for (std::size_t i = 1; i < lambda.size(); ++i) out.cum[i] = out.cum[i - 1] + dist(lambda[i - 1], lambda[i]);
    const auto& dom = geo.domain();
    const auto& V = geo.vertices();
    int nv = static_cast<int>(V.size());
    int L = static_cast<int>(lambda.size()) - 1;

    struct Foot {
        double d = kInf;
        Point p;
        double param = 0;
    };
    // closest point of the path reached by a straight visible segment
    auto direct = [&](const Point& x) {
        std::vector<std::pair<double, int>> cand;
        std::vector<Point> feet(L);
        for (int s = 0; s < L; ++s) {
            Point a = lambda[s], d = lambda[s + 1] - a;
            double t = std::clamp(dot(x - a, d) / dot(d, d), 0.0, 1.0);
            feet[s] = t == 0 ? a : t == 1 ? lambda[s + 1] : free_point_near(dom, a + d * t);
            cand.push_back({dist(x, feet[s]), s});
        }
        std::sort(cand.begin(), cand.end());
        Foot f;
        for (auto [d, s] : cand) {
            const Point& p = feet[s];
            if (visible(dom, x, p) || (d > 0 && visible(dom, x, p + (x - p) * 1e-9))) {
                f.d = d;
                f.p = p;
                f.param = out.cum[s] + dist(lambda[s], p);
                break;
            }
        }
        return f;
    };
    std::vector<Foot> own(nv);
    for (int x = 0; x < nv; ++x) own[x] = direct(V[x]);
    std::vector<double> D(nv, kInf);
    std::vector<int> target(nv, -1), next(nv, -1);
    for (int x = 0; x < nv; ++x) {
        for (int y = 0; y < nv; ++y) {
            double c = geo.vertex_distance(x, y) + own[y].d;
            if (c < D[x]) {
                D[x] = c;
                target[x] = y;
            }
        }
        if (target[x] >= 0 && target[x] != x) {
            auto vp = geo.vertex_path(x, target[x]);
            next[x] = vp[1];
        }
    }

    ShortestPathTree& T = out.proj.spt;
    T.nodes.push_back({lambda[0], NodeKind::Source, -1, -1, 0});
    T.root = 0;
    out.node_param.push_back(0);
    std::map<PointKey, int> feet;
    auto foot_node = [&](const Foot& f) {
        auto it = feet.find(pkey(f.p));
        if (it != feet.end()) return it->second;
        int id = static_cast<int>(T.nodes.size());
        T.nodes.push_back({f.p, NodeKind::Foot, -1, T.root, 0});
        out.node_param.push_back(f.param);
        feet[pkey(f.p)] = id;
        return id;
    };
    std::vector<int> vnode(nv, -1);
    auto vertex_node = [&](int x) {
        std::vector<int> chain;
        int cur = x;
        while (cur >= 0 && vnode[cur] < 0) {
            chain.push_back(cur);
            if (D[cur] == kInf) throw DegenerateInput("vertex cannot reach the separator path");
            cur = next[cur];
        }
        int par = cur >= 0 ? vnode[cur] : foot_node(own[target[chain.back()]]);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            int id = static_cast<int>(T.nodes.size());
            T.nodes.push_back({V[*it], NodeKind::Vertex, *it, par, 0});
            out.node_param.push_back(std::numeric_limits<double>::quiet_NaN());
            vnode[*it] = id;
            par = id;
        }
        return vnode[x];
    };

    int n = static_cast<int>(sites.size());
    T.site_node.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Foot f = direct(sites[i]);
        auto A = geo.attach(sites[i]);
        double best = kInf;
        int via = -1;
        for (int y = 0; y < nv; ++y)
            if (A.via[y] >= 0 && A.d[y] + own[y].d < best) {
                best = A.d[y] + own[y].d;
                via = A.via[y];
            }
        int par;
        if (f.d <= best) par = foot_node(f);
        else if (via >= 0) par = vertex_node(via);
        else throw DegenerateInput("site cannot reach the separator path");
        T.site_node[i] = static_cast<int>(T.nodes.size());
        T.nodes.push_back({sites[i], NodeKind::Site, i, par, 0});
        out.node_param.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    // distances from the path along tree edges; parents precede children
    for (std::size_t v = 1; v < T.nodes.size(); ++v) {
        auto& nd = T.nodes[v];
        if (nd.kind != NodeKind::Foot) nd.dist = T.nodes[nd.parent].dist + dist(nd.p, T.nodes[nd.parent].p);
    }

    auto& R = out.proj;
    R.proj.resize(n);
    R.side.resize(n);
    R.paths.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = T.site_node[i];
        GeodesicPath& path = R.paths[i];
        for (int u = v; u != T.root; u = T.nodes[u].parent) {
            const auto& nd = T.nodes[u];
            path.points.push_back(nd.p);
            path.ids.push_back(nd.kind == NodeKind::Vertex ? nd.ref
                               : nd.kind == NodeKind::Foot ? kChordPoint
                                                           : kPathStart);
        }
        path.recompute_length();
        int foot = v;
        while (T.nodes[foot].parent != T.root) foot = T.nodes[foot].parent;
        R.proj[i] = {i, T.nodes[foot].p, T.nodes[v].dist, out.node_param[foot]};
    }
    return out;
}

namespace {

// Path directions entering and leaving the point at arclength s.
std::pair<Point, Point> frame_at(const PathProjection& P, double s) {
    const auto& q = P.lambda;
    int L = static_cast<int>(q.size()) - 1;
    int i = static_cast<int>(std::upper_bound(P.cum.begin(), P.cum.end(), s) - P.cum.begin()) - 1;
    i = std::clamp(i, 0, L);
    if (i == L) return {q[L] - q[L - 1], q[L] - q[L - 1]};
    Point out = q[i + 1] - q[i];
    if (s == P.cum[i] && i > 0) return {q[i] - q[i - 1], out};
    return {out, out};
}

// Direction u lies on the left of a path arriving along d1 and leaving along d2.
bool left_of(const Point& d1, const Point& d2, const Point& u) {
    return ccw_angle(d2, u) <= ccw_angle(d2, d1 * -1.0);
}

int hops(const ShortestPathTree& T, int a, int r) {
    int c = 0;
    for (; a != r; a = T.nodes[a].parent)
        if (!(T.nodes[a].p == T.nodes[T.nodes[a].parent].p)) ++c;
    return c;
}

int foot_of(const ShortestPathTree& T, int a) {
    while (T.nodes[a].parent != T.root) a = T.nodes[a].parent;
    return a;
}

}  // namespace

std::vector<int> path_group_order(const PathProjection& P) {
    const auto& T = P.proj.spt;
    auto ch = T.children();
    std::vector<int> side(T.nodes.size(), 0);  // 0 left, 1 right
    std::vector<int> out;
    std::vector<int> stack{T.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& nd = T.nodes[v];
        if (nd.kind == NodeKind::Site) out.push_back(nd.ref);
        std::vector<int> kids = ch[v];
        if (v == T.root) {
            std::sort(kids.begin(), kids.end(), [&](int a, int b) {
                return P.node_param[a] < P.node_param[b] || (P.node_param[a] == P.node_param[b] && a < b);
            });
        } else {
            Point base;
            Point d1, d2;
            if (nd.kind == NodeKind::Foot) {
                std::tie(d1, d2) = frame_at(P, P.node_param[v]);
                base = d1 * -1.0;
            } else {
                base = T.nodes[nd.parent].p - nd.p;
            }
            struct Key {
                int side;
                double angle, d;
                int id;
            };
            std::vector<Key> keys;
            for (int c : kids) {
                Point d = T.nodes[c].p - nd.p;
                if (nd.kind == NodeKind::Foot) side[c] = d == Point{} || left_of(d1, d2, d) ? 0 : 1;
                else side[c] = side[v];
                double a = d == Point{} ? 0.0 : ccw_angle(base, d);
                // left of the path turns clockwise from the parent, right turns counterclockwise
                if (side[c] == 0 && a > 0) a = 2 * std::numbers::pi - a;
                keys.push_back({side[c], a, norm(d), c});
            }
            std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
                if (a.side != b.side) return a.side < b.side;
                if (a.angle != b.angle) return a.angle < b.angle;
                if (a.d != b.d) return a.d < b.d;
                return a.id < b.id;
            });
            kids.clear();
            for (const auto& k : keys) kids.push_back(k.id);
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

PiLambda path_pi_lambda(const PathProjection& P, int i, int j) {
    const auto& R = P.proj;
    const auto& T = R.spt;
    int a = T.site_node[i], b = T.site_node[j];
    int r = T.lca(a, b);
    PiLambda out;
    if (r == T.root) {
        int fa = foot_of(T, a), fb = foot_of(T, b);
        double s = R.proj[i].param, t = R.proj[j].param;
        out.via = {T.nodes[fa].p, T.nodes[fb].p};
        out.length = R.proj[i].weight + std::abs(s - t) + R.proj[j].weight;
        int along = 0;
        if (s != t) {
            along = 1;
            for (std::size_t q = 1; q + 1 < P.cum.size(); ++q)
                if (P.cum[q] > std::min(s, t) && P.cum[q] < std::max(s, t)) ++along;
        }
        out.complexity = hops(T, a, fa) + hops(T, b, fb) + along;
    } else {
        out.via = {T.nodes[r].p};
        out.length = (T.nodes[a].dist - T.nodes[r].dist) + (T.nodes[b].dist - T.nodes[r].dist);
        out.complexity = hops(T, a, r) + hops(T, b, r);
    }
    return out;
}

SpannerGraph build_domain_spanner(const PolygonalDomain& dom, const std::vector<Point>& sites, int k) {
    validate_domain(dom);
    if (k < 1) throw InvalidParams("k must be at least 1");
    for (const auto& p : sites)
        if (locate_in_domain(dom, p) == Location::Outside) throw OutsidePolygon("site outside the free space");
    SpannerGraph g;
    g.sites = sites;
    g.variant = Variant::Domain;
    g.k = k;
    EdgeSet edges(g);
    std::function<void(const SubDomain&, const std::vector<int>&, int)> rec =
        [&](const SubDomain& D, const std::vector<int>& ids, int depth) {
            if (ids.size() < 2) return;
            std::vector<Point> pts;
            for (int id : ids) pts.push_back(sites[id]);
            if (D.segment) {
                std::vector<int> ord(ids.size());
                std::iota(ord.begin(), ord.end(), 0);
                std::sort(ord.begin(), ord.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });
                for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
                    int a = ord[i], b = ord[i + 1];
                    edges.add({ids[a], ids[b], {}, dist(pts[a], pts[b]), pts[a] == pts[b] ? 0 : 1, depth});
                }
                return;
            }
            if (ids.size() <= 4) {
                DomainGeodesy geo(D.domain, false);
                for (std::size_t a = 0; a < ids.size(); ++a)
                    for (std::size_t b = a + 1; b < ids.size(); ++b) {
                        GeodesicPath path = geo.path(pts[a], pts[b]);
                        edges.add({ids[a], ids[b], {}, path.length, path.complexity(), depth});
                    }
                return;
            }
            Separator sep = balanced_sp_separator(D.domain, pts);
            DomainGeodesy geo(D.domain, false);
            RecursionRecord info;
            info.depth = depth;
            info.n = static_cast<int>(ids.size());
            info.n_left = static_cast<int>(sep.left.size());
            info.n_right = info.n - info.n_left;
            info.chord_case = static_cast<int>(sep.kind);
            for (const auto& lambda : sep.paths) {
                if (lambda.size() < 2) continue;
                PathProjection P = project_to_path(geo, lambda, pts);
                std::vector<WeightedSite1D> s1;
                for (std::size_t i = 0; i < ids.size(); ++i)
                    s1.push_back({P.proj.proj[i].param, P.proj.proj[i].weight, ids[i]});
                GroupedSpanner1D gs = build_grouped_spanner(s1, path_group_order(P), k);
                for (const auto& e : gs.spanner.edges) {
                    PiLambda pl = path_pi_lambda(P, e.a, e.b);
                    edges.add({ids[e.a], ids[e.b], pl.via, pl.length, pl.complexity, depth});
                }
                for (const auto& T : gs.trees) info.two_tree_violations += two_tree_violations(P.proj.spt, T);
                if (!gs.trees.empty())
                    info.groups += static_cast<int>(gs.trees.front().nodes[0].children.size());
            }
            DomainSplit split = split_domain(D.domain, pts, sep);
            info.reflex = static_cast<int>(split.reflex_before);
            info.reflex_after = static_cast<int>(split.reflex_after);
            g.records.push_back(info);
            for (const auto& part : split.parts) {
                std::vector<int> sub;
                for (int i : part.sites) sub.push_back(ids[i]);
                rec(part, sub, depth + 1);
            }
        };
    SubDomain top;
    top.domain = dom;
    std::vector<int> all(sites.size());
    std::iota(all.begin(), all.end(), 0);
    rec(top, all, 0);
    // Lengths above are measured inside sub-domains, which need not be geodesically convex;
    // each edge becomes the shortest path through its stops in the whole domain, never longer.
    DomainGeodesy geo(dom, false);
    PathFn path = [&](const Point& p, const Point& q) { return geo.path(p, q); };
    for (auto& e : g.edges) {
        GeodesicPath full = expand_edge(g, e, path);
        e.length = full.length;
        e.complexity = full.complexity();
    }
    return g;
}

}  // namespace gspan
