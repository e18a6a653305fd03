#include "gspan/oracle.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <queue>

#include "gspan/simple_spanner.h"
#include "gspan/visibility.h"

namespace gspan {

DistanceMatrix all_pairs_geodesic(const PolygonalDomain& dom, const std::vector<Point>& sites, OracleMethod method) {
    std::size_t n = sites.size();
    DistanceMatrix D(n, std::vector<double>(n, 0));
    if (method == OracleMethod::Funnel) {
        if (!dom.holes.empty()) throw InvalidParams("the funnel oracle needs a simple polygon");
        PolygonGeodesy geo(dom.outer);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) D[i][j] = D[j][i] = geo.distance(sites[i], sites[j]);
        return D;
    }
    DomainGeodesy geo(dom);
    std::vector<DomainGeodesy::Attachment> att;
    for (const auto& p : sites) att.push_back(geo.attach(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) D[i][j] = D[j][i] = geo.distance(att[i], att[j]);
    return D;
}

DistanceMatrix all_pairs_geodesic(const Instance& inst, OracleMethod method) {
    return all_pairs_geodesic(inst.domain, inst.sites, method);
}

PathFn geodesic_paths(const PolygonalDomain& dom) {
    if (dom.holes.empty()) {
        auto geo = std::make_shared<PolygonGeodesy>(dom.outer, false);
        return [geo](const Point& a, const Point& b) { return geo->shortest_path(a, b); };
    }
    auto geo = std::make_shared<DomainGeodesy>(dom, false);
    return [geo](const Point& a, const Point& b) { return geo->path(a, b); };
}

SpannerReport measure(const SpannerGraph& g, const DistanceMatrix& oracle) {
    SpannerReport r;
    int n = static_cast<int>(g.sites.size());
    r.n = n;
    r.k = g.k;
    r.eps = g.eps;
    r.variant = variant_name(g.variant);
    r.edges = g.edges.size();
    r.complexity = g.total_complexity();
    r.edges_per_depth = g.edges_per_depth();
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.a].push_back({e.b, e.length});
        adj[e.b].push_back({e.a, e.length});
    }
    const double inf = std::numeric_limits<double>::infinity();
    double sum = 0;
    long pairs = 0;
    using Item = std::pair<double, int>;
    for (int s = 0; s < n; ++s) {
        std::vector<double> d(n, inf);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        d[s] = 0;
        pq.push({0, s});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (auto [v, w] : adj[u])
                if (du + w < d[v]) {
                    d[v] = du + w;
                    pq.push({d[v], v});
                }
        }
        for (int t = s + 1; t < n; ++t) {
            double ratio;
            if (d[t] == inf) {
                r.disconnected = true;
                ratio = inf;
            } else if (oracle[s][t] > 0) {
                ratio = d[t] / oracle[s][t];
            } else {
                ratio = d[t] > 0 ? inf : 1.0;
            }
            if (r.witness_a < 0 || ratio > r.max_ratio) {
                r.max_ratio = ratio;
                r.witness_a = s;
                r.witness_b = t;
            }
            sum += ratio;
            ++pairs;
        }
    }
    r.mean_ratio = pairs ? sum / static_cast<double>(pairs) : 1.0;
    return r;
}

std::vector<EdgeMismatch> check_edges(const SpannerGraph& g, const PathFn& path, double rel_tol) {
    std::vector<EdgeMismatch> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        GeodesicPath p = expand_edge(g, e, path);
        bool bad_len = std::abs(p.length - e.length) > rel_tol * std::max(1.0, p.length);
        if (bad_len || p.complexity() != e.complexity)
            out.push_back({static_cast<int>(i), e.length, p.length, e.complexity, p.complexity()});
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingResult scaling_experiment(const std::vector<int>& ks, const std::vector<int>& ns, int m_per_site) {
    ScalingResult out;
    for (int k : ks) {
        std::vector<double> xs, ys;
        for (int n : ns) {
            auto lb = gen_lower_bound_general(n, m_per_site * n);
            auto t0 = std::chrono::steady_clock::now();
            SimpleSpannerOptions opt;
            opt.variant = Variant::Grouped;
            opt.k = k;
            SpannerGraph g = build_simple_spanner(lb.instance.polygon(), lb.instance.sites, opt);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ScalingRow row{n, m_per_site * n, k, g.total_complexity(), g.edges.size(), secs};
            out.rows.push_back(row);
            xs.push_back(n);
            ys.push_back(static_cast<double>(row.complexity));
        }
        out.slopes.push_back({k, loglog_slope(xs, ys)});
    }
    return out;
}

}  // namespace gspan
