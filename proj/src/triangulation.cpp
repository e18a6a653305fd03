#include "gspan/triangulation.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace gspan {

int Triangulation::locate(const Point& p) const {
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& v = tris[t];
        const Point &a = points[v[0]], &b = points[v[1]], &c = points[v[2]];
        if (p.x < std::min({a.x, b.x, c.x}) || p.x > std::max({a.x, b.x, c.x}) ||
            p.y < std::min({a.y, b.y, c.y}) || p.y > std::max({a.y, b.y, c.y}))
            continue;
        if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0)
            return static_cast<int>(t);
    }
    return -1;
}

std::vector<int> Triangulation::dual_path(int a, int b) const {
    std::vector<int> from(tris.size(), -2);
    std::deque<int> q{a};
    from[a] = -1;
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        if (t == b) break;
        for (int u : nbr[t])
            if (u >= 0 && from[u] == -2) {
                from[u] = t;
                q.push_back(u);
            }
    }
    std::vector<int> path;
    if (from[b] == -2) return path;
    for (int t = b; t != -1; t = from[t]) path.push_back(t);
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t Triangulation::dual_edge_count() const {
    std::size_t c = 0;
    for (const auto& n : nbr)
        for (int u : n)
            if (u >= 0) ++c;
    return c / 2;
}

double Triangulation::area() const {
    double s = 0;
    for (const auto& v : tris)
        s += cross(points[v[1]] - points[v[0]], points[v[2]] - points[v[0]]) / 2;
    return s;
}

void link_triangles(Triangulation& tri) {
    std::unordered_map<std::uint64_t, std::pair<int, int>> open;
    open.reserve(tri.tris.size() * 2);
    tri.nbr.assign(tri.tris.size(), {-1, -1, -1});
    auto key = [](int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    };
    for (std::size_t t = 0; t < tri.tris.size(); ++t) {
        for (int e = 0; e < 3; ++e) {
            int a = tri.tris[t][e], b = tri.tris[t][(e + 1) % 3];
            auto it = open.find(key(b, a));
            if (it != open.end()) {
                tri.nbr[t][e] = it->second.first;
                tri.nbr[it->second.first][it->second.second] = static_cast<int>(t);
                open.erase(it);
            } else {
                open[key(a, b)] = {static_cast<int>(t), e};
            }
        }
    }
}

Triangulation triangulate(const SimplePolygon& poly, bool validate) {
    if (validate) validate_polygon(poly);
    const auto& P = poly.vertices;
    int m = static_cast<int>(P.size());
    Triangulation out;
    out.points = P;

    std::vector<int> prev(m), next(m);
    for (int i = 0; i < m; ++i) {
        prev[i] = (i + m - 1) % m;
        next[i] = (i + 1) % m;
    }
    std::vector<char> removed(m, 0), nonconvex(m, 0);
    std::vector<int> blockers;
    auto refresh = [&](int i) {
        nonconvex[i] = orient(P[prev[i]], P[i], P[next[i]]) <= 0;
    };
    for (int i = 0; i < m; ++i) {
        refresh(i);
        if (nonconvex[i]) blockers.push_back(i);
    }

    auto is_ear = [&](int i) {
        int p = prev[i], n = next[i];
        if (orient(P[p], P[i], P[n]) <= 0) return false;
        const Point &a = P[p], &b = P[i], &c = P[n];
        double xmin = std::min({a.x, b.x, c.x}), xmax = std::max({a.x, b.x, c.x});
        double ymin = std::min({a.y, b.y, c.y}), ymax = std::max({a.y, b.y, c.y});
        for (int r : blockers) {
            if (removed[r] || !nonconvex[r] || r == p || r == i || r == n) continue;
            const Point& q = P[r];
            if (q.x < xmin || q.x > xmax || q.y < ymin || q.y > ymax) continue;
            if (orient(a, b, q) >= 0 && orient(b, c, q) >= 0 && orient(c, a, q) >= 0)
                return false;
        }
        return true;
    };

    std::deque<int> queue;
    for (int i = 0; i < m; ++i)
        if (is_ear(i)) queue.push_back(i);

    int remaining = m;
    std::size_t clipped_since_compact = 0;
    auto unlink = [&](int i) {
        int p = prev[i], n = next[i];
        next[p] = n;
        prev[n] = p;
        removed[i] = 1;
        --remaining;
        refresh(p);
        refresh(n);
        if (++clipped_since_compact > 64) {
            std::erase_if(blockers, [&](int r) { return removed[r] || !nonconvex[r]; });
            clipped_since_compact = 0;
        }
    };

    while (remaining > 3) {
        if (queue.empty()) {
            // a blocker may have turned convex without its neighbours being rechecked
            int start = 0;
            while (removed[start]) ++start;
            int i = start;
            do {
                if (is_ear(i)) queue.push_back(i);
                i = next[i];
            } while (i != start);
            if (!queue.empty()) continue;
            // only straight tips left; drop a zero-area one
            int found = -1;
            do {
                if (orient(P[prev[i]], P[i], P[next[i]]) == 0 &&
                    dot(P[i] - P[prev[i]], P[next[i]] - P[i]) > 0) {
                    found = i;
                    break;
                }
                i = next[i];
            } while (i != start);
            if (found < 0) throw InvalidPolygon("triangulation failed: no ear");
            int p = prev[found], n = next[found];
            unlink(found);
            for (int j : {p, n})
                if (is_ear(j)) queue.push_back(j);
            continue;
        }
        int i = queue.front();
        queue.pop_front();
        if (removed[i] || !is_ear(i)) continue;
        int p = prev[i], n = next[i];
        out.tris.push_back({p, i, n});
        unlink(i);
        if (is_ear(p)) queue.push_back(p);
        if (is_ear(n)) queue.push_back(n);
    }
    if (remaining == 3) {
        int i = 0;
        while (removed[i]) ++i;
        if (orient(P[prev[i]], P[i], P[next[i]]) > 0) out.tris.push_back({prev[i], i, next[i]});
    }
    link_triangles(out);
    return out;
}

}  // namespace gspan
