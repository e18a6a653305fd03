#include "gspan/cdt.h"

#include <algorithm>
#include <numeric>

namespace gspan {

std::uint64_t ConstrainedTriangulation::key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

namespace {

// Incremental hull sweep in lexicographic order.
std::vector<std::array<int, 3>> sweep_triangulation(const std::vector<Point>& P) {
    int n = static_cast<int>(P.size());
    std::vector<std::array<int, 3>> tris;
    if (n < 3) return tris;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(P[a], P[b]); });

    // leading collinear run
    std::size_t k = 2;
    while (k < order.size() && orient(P[order[0]], P[order[1]], P[order[k]]) == 0) ++k;
    if (k == order.size()) return tris;
    int p = order[k];
    std::vector<int> next(n, -1), prev(n, -1);
    bool left = orient(P[order[0]], P[order[1]], P[p]) > 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        int a = order[i], b = order[i + 1];
        if (left) tris.push_back({a, b, p});
        else tris.push_back({b, a, p});
    }
    // hull cycle, counterclockwise
    std::vector<int> hull;
    if (left) {
        for (std::size_t i = 0; i < k; ++i) hull.push_back(order[i]);
        hull.push_back(p);
    } else {
        hull.push_back(p);
        for (std::size_t i = k; i-- > 0;) hull.push_back(order[i]);
        std::rotate(hull.begin(), hull.begin() + 1, hull.end());
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        next[hull[i]] = hull[(i + 1) % hull.size()];
        prev[hull[(i + 1) % hull.size()]] = hull[i];
    }
    int last = p;
    for (std::size_t i = k + 1; i < order.size(); ++i) {
        int q = order[i];
        int hi = last, lo = last;
        while (orient(P[hi], P[next[hi]], P[q]) < 0) {
            tris.push_back({next[hi], hi, q});
            hi = next[hi];
        }
        while (orient(P[prev[lo]], P[lo], P[q]) < 0) {
            tris.push_back({lo, prev[lo], q});
            lo = prev[lo];
        }
        // q replaces the visible chain lo..hi
        next[lo] = q;
        prev[q] = lo;
        next[q] = hi;
        prev[hi] = q;
        last = q;
    }
    return tris;
}

}  // namespace

ConstrainedTriangulation constrained_triangulation(const std::vector<Point>& pts,
                                                   const std::vector<std::pair<int, int>>& segments) {
    ConstrainedTriangulation out;
    Triangulation& T = out.tri;
    T.points = pts;
    T.tris = sweep_triangulation(pts);
    link_triangles(T);
    const auto& P = T.points;
    int n = static_cast<int>(pts.size());

    std::vector<std::vector<int>> incident;
    auto rebuild = [&]() {
        incident.assign(n, {});
        for (std::size_t t = 0; t < T.tris.size(); ++t)
            for (int v : T.tris[t]) incident[v].push_back(static_cast<int>(t));
    };
    rebuild();

    auto has_edge = [&](int a, int b) {
        for (int t : incident[a])
            for (int v : T.tris[t])
                if (v == b) return true;
        return false;
    };

    for (auto [a, b] : segments) {
        if (a == b) continue;
        while (a != b) {
            if (has_edge(a, b)) {
                out.constrained.insert(ConstrainedTriangulation::key(a, b));
                break;
            }
            // triangle at a whose wedge holds the direction to b
            int start = -1, ka = -1, through = -1;
            for (int t : incident[a]) {
                int k = 0;
                while (T.tris[t][k] != a) ++k;
                int nx = T.tris[t][(k + 1) % 3], pv = T.tris[t][(k + 2) % 3];
                int s1 = orient(P[a], P[nx], P[b]);
                int s2 = orient(P[a], P[pv], P[b]);
                if (s1 == 0 && dot(P[nx] - P[a], P[b] - P[a]) > 0) {
                    through = nx;
                    break;
                }
                if (s2 == 0 && dot(P[pv] - P[a], P[b] - P[a]) > 0) {
                    through = pv;
                    break;
                }
                if (s1 > 0 && s2 < 0) {
                    start = t;
                    ka = k;
                    break;
                }
            }
            if (through >= 0) {
                out.constrained.insert(ConstrainedTriangulation::key(a, through));
                a = through;
                continue;
            }
            if (start < 0) throw DegenerateInput("constraint leaves the triangulated region");

            std::vector<char> dead(T.tris.size(), 0);
            std::vector<int> lchain, rchain;
            int r = T.tris[start][(ka + 1) % 3], l = T.tris[start][(ka + 2) % 3];
            rchain.push_back(r);
            lchain.push_back(l);
            dead[start] = 1;
            int cur = start, end = -1;
            for (;;) {
                int e = 0;
                while (!((T.tris[cur][e] == r && T.tris[cur][(e + 1) % 3] == l) ||
                         (T.tris[cur][e] == l && T.tris[cur][(e + 1) % 3] == r)))
                    ++e;
                int nt = T.nbr[cur][e];
                if (nt < 0) throw DegenerateInput("constraint leaves the triangulated region");
                int w = T.tris[nt][0] + T.tris[nt][1] + T.tris[nt][2] - r - l;
                dead[nt] = 1;
                cur = nt;
                if (w == b) {
                    end = b;
                    break;
                }
                int s = orient(P[a], P[b], P[w]);
                if (s == 0) {
                    end = w;
                    break;
                }
                if (s > 0) {
                    lchain.push_back(w);
                    l = w;
                } else {
                    rchain.push_back(w);
                    r = w;
                }
            }
            std::vector<std::array<int, 3>> kept;
            for (std::size_t t = 0; t < T.tris.size(); ++t)
                if (!dead[t]) kept.push_back(T.tris[t]);
            auto fill = [&](const std::vector<int>& ring) {
                SimplePolygon poly;
                for (int v : ring) poly.vertices.push_back(P[v]);
                Triangulation sub = triangulate(poly, false);
                for (const auto& tr : sub.tris) kept.push_back({ring[tr[0]], ring[tr[1]], ring[tr[2]]});
            };
            std::vector<int> left_ring{a, end};
            left_ring.insert(left_ring.end(), lchain.rbegin(), lchain.rend());
            std::vector<int> right_ring{end, a};
            right_ring.insert(right_ring.end(), rchain.begin(), rchain.end());
            fill(left_ring);
            fill(right_ring);
            T.tris = std::move(kept);
            link_triangles(T);
            rebuild();
            out.constrained.insert(ConstrainedTriangulation::key(a, end));
            a = end;
        }
    }
    return out;
}

}  // namespace gspan
