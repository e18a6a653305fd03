#include "gspan/weighted_1d.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace gspan {

double weighted_distance(const std::vector<WeightedSite1D>& s, int a, int b) {
    if (a == b) return 0;
    return s[a].weight + std::abs(s[a].pos - s[b].pos) + s[b].weight;
}

namespace {

double dw_to(const std::vector<WeightedSite1D>& s, int a, double O) { return s[a].weight + std::abs(s[a].pos - O); }

bool pos_less(const std::vector<WeightedSite1D>& s, int a, int b) {
    return s[a].pos < s[b].pos || (s[a].pos == s[b].pos && a < b);
}

// Member closest to O, smallest index on ties.
int closest_to(const std::vector<WeightedSite1D>& s, const std::vector<int>& cand, double O) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int c : cand) {
        double d = dw_to(s, c, O);
        if (d < bd || (d == bd && c < best)) {
            bd = d;
            best = c;
        }
    }
    return best;
}

std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> out;
    for (int y : v)
        if (y != x) out.push_back(y);
    return out;
}

struct EdgeSink {
    Spanner1D& g;
    std::set<std::pair<int, int>> seen;
    void add(int a, int b, int depth, int level) {
        if (a == b) return;
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return;
        g.edges.push_back({a, b, depth, level});
    }
};

void recurse_2(const std::vector<WeightedSite1D>& s, const std::vector<int>& S, int depth, EdgeSink& out) {
    if (S.size() < 2) return;
    Split1D sp = split_point(s, S);
    int c = closest_to(s, S, sp.O);
    for (int p : S) out.add(p, c, depth, 1);
    recurse_2(s, without(sp.left, c), depth + 1, out);
    recurse_2(s, without(sp.right, c), depth + 1, out);
}

// ceil(n^(1 - j/k)), guarded against rounding just above an integer
int group_size(int n, int j, int k) {
    double g = std::pow(static_cast<double>(n), 1.0 - static_cast<double>(j) / k);
    return std::max(1, static_cast<int>(std::ceil(g - 1e-9)));
}

void recurse_grouped(const std::vector<WeightedSite1D>& s, const std::vector<int>& S, int k, int depth,
                     EdgeSink& out, std::vector<GroupTree>& trees) {
    if (S.size() < 2) return;
    Split1D sp = split_point(s, S);
    GroupTree T;
    T.depth = depth;
    T.O = sp.O;
    T.order = S;
    int n = static_cast<int>(S.size());
    T.nodes.push_back({0, n, -1, 0, -1, {}});
    // top-down partition into consecutive runs
    for (int j = 1; j <= k; ++j) {
        int g = j == k ? 1 : group_size(n, j, k);
        std::size_t count = T.nodes.size();
        for (std::size_t u = 0; u < count; ++u) {
            if (T.nodes[u].level != j - 1) continue;
            for (int b = T.nodes[u].begin; b < T.nodes[u].end; b += g) {
                int id = static_cast<int>(T.nodes.size());
                T.nodes.push_back({b, std::min(b + g, T.nodes[u].end), -1, j, static_cast<int>(u), {}});
                T.nodes[u].children.push_back(id);
            }
        }
    }
    // centers bottom-up: the member closest to O is the closest of the child centers
    for (std::size_t u = T.nodes.size(); u-- > 0;) {
        auto& nd = T.nodes[u];
        std::vector<int> cand;
        if (nd.children.empty())
            for (int i = nd.begin; i < nd.end; ++i) cand.push_back(S[i]);
        else
            for (int ch : nd.children) cand.push_back(T.nodes[ch].center);
        nd.center = closest_to(s, cand, sp.O);
    }
    for (std::size_t u = 1; u < T.nodes.size(); ++u)
        out.add(T.nodes[u].center, T.nodes[T.nodes[u].parent].center, depth, T.nodes[u].level);
    int c = T.nodes[0].center;
    trees.push_back(std::move(T));
    // recursive halves keep the traversal order; for k > 1 the center stays in its half, since
    // its only link to a same-side site runs through the group tree and needs a later split
    std::vector<char> side(s.size(), 2);
    for (int p : sp.left) side[p] = 0;
    for (int p : sp.right) side[p] = 1;
    std::vector<int> L, R;
    for (int p : S) {
        if (p == c && k == 1) continue;
        if (side[p] == 0) L.push_back(p);
        else if (side[p] == 1) R.push_back(p);
    }
    recurse_grouped(s, L, k, depth + 1, out, trees);
    recurse_grouped(s, R, k, depth + 1, out, trees);
}

}  // namespace

Split1D split_point(const std::vector<WeightedSite1D>& s, const std::vector<int>& subset) {
    Split1D out;
    if (subset.empty()) return out;
    std::vector<int> v = subset;
    std::sort(v.begin(), v.end(), [&](int a, int b) { return pos_less(s, a, b); });
    std::size_t n = v.size(), h = n / 2;
    if (n % 2 == 1) {
        out.O = s[v[h]].pos;
        out.left.assign(v.begin(), v.begin() + h);
        out.on_line.push_back(v[h]);
        out.right.assign(v.begin() + h + 1, v.end());
    } else {
        out.O = 0.5 * (s[v[h - 1]].pos + s[v[h]].pos);
        out.left.assign(v.begin(), v.begin() + h);
        out.right.assign(v.begin() + h, v.end());
    }
    return out;
}

Split1D split_point(const std::vector<WeightedSite1D>& s) {
    std::vector<int> all(s.size());
    std::iota(all.begin(), all.end(), 0);
    return split_point(s, all);
}

Spanner1D build_2spanner(const std::vector<WeightedSite1D>& s) {
    Spanner1D g;
    EdgeSink sink{g, {}};
    std::vector<int> all(s.size());
    std::iota(all.begin(), all.end(), 0);
    recurse_2(s, all, 0, sink);
    return g;
}

int GroupTree::height() const {
    int h = 0;
    for (const auto& nd : nodes) h = std::max(h, nd.level);
    return h;
}

std::vector<int> GroupTree::members(int node) const {
    return {order.begin() + nodes[node].begin, order.begin() + nodes[node].end};
}

GroupedSpanner1D build_grouped_spanner(const std::vector<WeightedSite1D>& s, const std::vector<int>& order, int k) {
    if (k < 1) throw InvalidOrder("k must be at least 1");
    std::vector<char> hit(s.size(), 0);
    if (order.size() != s.size()) throw InvalidOrder("order is not a permutation of the sites");
    for (int p : order) {
        if (p < 0 || p >= static_cast<int>(s.size()) || hit[p]) throw InvalidOrder("order is not a permutation of the sites");
        hit[p] = 1;
    }
    GroupedSpanner1D out;
    EdgeSink sink{out.spanner, {}};
    recurse_grouped(s, order, k, 0, sink, out.trees);
    return out;
}

std::vector<std::vector<double>> spanner_distances(const std::vector<WeightedSite1D>& s, const Spanner1D& g) {
    int n = static_cast<int>(s.size());
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& e : g.edges) {
        double w = weighted_distance(s, e.a, e.b);
        adj[e.a].push_back({e.b, w});
        adj[e.b].push_back({e.a, w});
    }
    std::vector<std::vector<double>> D(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    using Item = std::pair<double, int>;
    for (int src = 0; src < n; ++src) {
        auto& d = D[src];
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        d[src] = 0;
        pq.push({0, src});
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
    }
    return D;
}

double max_ratio_1d(const std::vector<WeightedSite1D>& s, const Spanner1D& g) {
    auto D = spanner_distances(s, g);
    double r = 1;
    int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double w = weighted_distance(s, a, b);
            if (w > 0) r = std::max(r, D[a][b] / w);
            else if (D[a][b] > 0) r = std::numeric_limits<double>::infinity();
        }
    return r;
}

}  // namespace gspan
