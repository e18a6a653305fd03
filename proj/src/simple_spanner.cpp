#include "gspan/simple_spanner.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace gspan {

namespace {

struct ChordChoice {
    Chord chord;
    int chord_case = 0;
    int trap = -1;               // trapezoid the chord lies in (cases 2 and 3) or borders (case 1)
    int wall = -1;               // case 1 only
    std::vector<int> trap_side;  // 0 left, 1 right, -1 split by the chord
    double X = 0;
};

// Marks every trapezoid reachable from `from` without entering `block`.
void flood(const TrapezoidalDecomposition& D, int from, int block, int side, std::vector<int>& out) {
    std::vector<int> stack{from};
    out[from] = side;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int w : D.traps[t].walls) {
            int u = D.neighbor_across(t, w);
            if (u == block || out[u] != -2) continue;
            out[u] = side;
            stack.push_back(u);
        }
    }
}

ChordChoice choose_chord(const TrapezoidalDecomposition& D, const std::vector<Point>& items) {
    int n = static_cast<int>(items.size());
    int T = static_cast<int>(D.traps.size());
    auto buckets = D.bucket_sites(items);
    // root the dual tree at trapezoid 0
    std::vector<int> parent(T, -1), parent_wall(T, -1), order{0};
    std::vector<char> seen(T, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int t = order[i];
        for (int w : D.traps[t].walls) {
            int u = D.neighbor_across(t, w);
            if (seen[u]) continue;
            seen[u] = 1;
            parent[u] = t;
            parent_wall[u] = w;
            order.push_back(u);
        }
    }
    std::vector<long> c(T, 0);
    for (int t = 0; t < T; ++t) c[t] = static_cast<long>(buckets[t].size());
    for (std::size_t i = order.size(); i-- > 1;) c[parent[order[i]]] += c[order[i]];
    auto children = [&](int v) {
        std::vector<int> ch;
        for (int w : D.traps[v].walls) {
            int u = D.neighbor_across(v, w);
            if (parent[u] == v && parent_wall[u] == w) ch.push_back(u);
        }
        return ch;
    };
    long third = (n + 2) / 3;  // ceil(n/3)

    ChordChoice out;
    auto in_trap = [&](int v, long left_count) {
        // vertical chord through trapezoid v with left_count of its items on the left
        std::vector<Point> xs;
        for (int i : buckets[v]) xs.push_back(items[i]);
        std::sort(xs.begin(), xs.end(), lex_less);
        long cnt = static_cast<long>(xs.size());
        left_count = std::clamp(left_count, 0L, cnt);
        double xl = D.frame[D.traps[v].left_vertex].x, xr = D.frame[D.traps[v].right_vertex].x;
        double lo = left_count == 0 ? xl : xs[left_count - 1].x;
        double hi = left_count == cnt ? xr : xs[left_count].x;
        double X = 0.5 * (lo + hi);
        if (!(X > xl && X < xr)) X = 0.5 * (xl + xr);
        const Trapezoid& tr = D.traps[v];
        out.chord = Chord{{X, D.edge_y_at(tr.bottom_edge, X)}, {X, D.edge_y_at(tr.top_edge, X)}};
        out.trap = v;
        out.X = X;
        out.trap_side.assign(T, -2);
        out.trap_side[v] = -1;
        for (int w : tr.walls) {
            int u = D.neighbor_across(v, w);
            flood(D, u, v, D.walls[w].right_trap == v ? 0 : 1, out.trap_side);
        }
    };

    int v = 0;
    for (int guard = 0; guard <= T; ++guard) {
        if (v != 0 && 3 * c[v] >= n && 3 * c[v] <= 2L * n) {
            const Wall& w = D.walls[parent_wall[v]];
            Point a = D.points[w.vertex], b = w.hit;
            // a wall that starts along a vertical edge begins at that edge's far end
            int m = static_cast<int>(D.points.size());
            for (int cur = w.vertex, moved = 1; moved;) {
                moved = 0;
                for (int nb : {(cur + 1) % m, (cur + m - 1) % m}) {
                    const Point& q = D.points[nb];
                    if (q.x == a.x && std::min(a.y, b.y) < q.y && q.y < std::max(a.y, b.y)) {
                        a = q;
                        cur = nb;
                        moved = 1;
                        break;
                    }
                }
            }
            out.chord = a.y < b.y ? Chord{a, b} : Chord{b, a};
            out.chord_case = 1;
            out.trap = v;
            out.wall = parent_wall[v];
            out.X = a.x;
            out.trap_side.assign(T, -2);
            int v_side = w.left_trap == v ? 0 : 1;
            flood(D, v, parent[v], v_side, out.trap_side);
            flood(D, parent[v], v, 1 - v_side, out.trap_side);
            return out;
        }
        long own = static_cast<long>(buckets[v].size());
        if (3 * own >= 2L * n) {
            in_trap(v, third);
            out.chord_case = 2;
            return out;
        }
        auto ch = children(v);
        bool all_light = std::all_of(ch.begin(), ch.end(), [&](int u) { return 3 * c[u] < n; });
        if (all_light && 3 * c[v] > 2L * n) {
            bool parent_left = v != 0 && D.walls[parent_wall[v]].right_trap == v;
            long side_sum = 0;
            for (int u : ch) {
                int w = parent_wall[u];
                bool u_left = D.walls[w].left_trap == u;
                if (u_left != parent_left) side_sum += c[u];
            }
            long need = std::max(0L, third - side_sum);
            in_trap(v, parent_left ? own - need : need);
            out.chord_case = 3;
            return out;
        }
        if (3 * c[v] < n) {
            v = parent[v];
            continue;
        }
        int next = -1;
        for (int u : ch)
            if (3 * c[u] >= n) next = u;
        if (next < 0) break;
        v = next;
    }
    throw DegenerateInput("no balanced chord found");
}

double ccw_angle(const Point& from, const Point& to) {
    double a = std::atan2(cross(from, to), dot(from, to));
    return a < 0 ? a + 2 * std::numbers::pi : a;
}

}  // namespace

ChordSplit balanced_vertical_chord(const SimplePolygon& poly, const TrapezoidalDecomposition& decomp,
                                   const std::vector<Point>& sites) {
    (void)poly;
    if (sites.size() < 2) throw DegenerateInput("need at least two sites");
    ChordChoice cc = choose_chord(decomp, sites);
    ChordSplit out;
    out.chord = cc.chord;
    out.chord_case = cc.chord_case;
    auto buckets = decomp.bucket_sites(sites);
    for (std::size_t t = 0; t < buckets.size(); ++t)
        for (int i : buckets[t]) {
            int s = cc.trap_side[t];
            if (s == -1) s = sites[i].x <= cc.X ? 0 : 1;
            (s == 0 ? out.left : out.right).push_back(i);
        }
    std::sort(out.left.begin(), out.left.end());
    std::sort(out.right.begin(), out.right.end());
    return out;
}

std::vector<int> group_order(const ShortestPathTree& spt, const Chord& chord) {
    auto ch = spt.children();
    Point up = chord.top - chord.bottom;
    Point down = chord.bottom - chord.top;
    auto is_left = [&](const Point& p) { return orient(chord.bottom, chord.top, p) >= 0; };
    std::vector<int> out;
    std::vector<int> stack{spt.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& nd = spt.nodes[v];
        if (nd.kind == NodeKind::Site) out.push_back(nd.ref);
        std::vector<int> kids = ch[v];
        if (v == spt.root) {
            std::sort(kids.begin(), kids.end(), [&](int a, int b) {
                double pa = dot(spt.nodes[a].p - chord.bottom, up), pb = dot(spt.nodes[b].p - chord.bottom, up);
                return pa < pb || (pa == pb && a < b);
            });
        } else {
            Point base = nd.kind == NodeKind::Foot ? down : spt.nodes[nd.parent].p - nd.p;
            struct Key {
                int side;
                double angle, d;
                int id;
            };
            std::vector<Key> keys;
            for (int c : kids) {
                Point d = spt.nodes[c].p - nd.p;
                bool left = is_left(spt.nodes[c].p);
                double a = d == Point{} ? 0.0 : ccw_angle(base, d);
                // left of the chord turns clockwise from the parent, right turns counterclockwise
                if (left && a > 0) a = 2 * std::numbers::pi - a;
                keys.push_back({left ? 0 : 1, a, norm(d), c});
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

namespace {

// Segments of nonzero length on the tree path from node a up to its ancestor r.
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

PiLambda pi_lambda(const ProjectionResult& R, int i, int j) {
    const auto& T = R.spt;
    int a = T.site_node[i], b = T.site_node[j];
    int r = T.lca(a, b);
    PiLambda out;
    if (r == T.root) {
        int fa = foot_of(T, a), fb = foot_of(T, b);
        out.via = {T.nodes[fa].p, T.nodes[fb].p};
        out.length = R.proj[i].weight + std::abs(R.proj[i].param - R.proj[j].param) + R.proj[j].weight;
        out.complexity = hops(T, a, fa) + hops(T, b, fb) + (T.nodes[fa].p == T.nodes[fb].p ? 0 : 1);
    } else {
        out.via = {T.nodes[r].p};
        out.length = (T.nodes[a].dist - T.nodes[r].dist) + (T.nodes[b].dist - T.nodes[r].dist);
        out.complexity = hops(T, a, r) + hops(T, b, r);
    }
    return out;
}

GeodesicPath pi_lambda_path(const ProjectionResult& R, const std::vector<Point>& sites, int i, int j) {
    const auto& T = R.spt;
    int a = T.site_node[i], b = T.site_node[j];
    int r = T.lca(a, b);
    auto up = [&](int from, int to) {
        std::vector<int> nodes;
        for (; from != to; from = T.nodes[from].parent) nodes.push_back(from);
        nodes.push_back(to);
        return nodes;
    };
    std::vector<int> first, second;
    if (r == T.root) {
        first = up(a, foot_of(T, a));
        second = up(b, foot_of(T, b));
    } else {
        first = up(a, r);
        second = up(b, r);
        second.pop_back();
    }
    GeodesicPath out;
    auto push = [&](int node) {
        const auto& nd = T.nodes[node];
        if (!out.points.empty() && out.points.back() == nd.p) return;
        out.points.push_back(nd.p);
        out.ids.push_back(nd.kind == NodeKind::Vertex ? nd.ref : kChordPoint);
    };
    for (int node : first) push(node);
    for (auto it = second.rbegin(); it != second.rend(); ++it) push(*it);
    out.points.front() = sites[i];
    out.ids.front() = kPathStart;
    out.ids.back() = kPathEnd;
    out.recompute_length();
    return out;
}

int two_tree_violations(const ShortestPathTree& spt, const GroupTree& groups) {
    int violations = 0;
    for (int level = 1; level <= groups.height(); ++level) {
        std::vector<int> uses(spt.nodes.size(), 0);
        for (std::size_t u = 0; u < groups.nodes.size(); ++u) {
            if (groups.nodes[u].level != level) continue;
            auto members = groups.members(static_cast<int>(u));
            int r = spt.site_node[members[0]];
            for (int p : members) r = spt.lca(r, spt.site_node[p]);
            std::set<int> inside;
            for (int p : members)
                for (int x = spt.site_node[p]; x != r; x = spt.nodes[x].parent) inside.insert(x);
            for (int x : inside)
                if (spt.nodes[x].kind == NodeKind::Vertex) ++uses[x];
        }
        for (int c : uses)
            if (c >= 3) ++violations;
    }
    return violations;
}

void chord_recursion(const SimplePolygon& poly, const std::vector<Point>& sites, const LevelBuilder& level,
                     SpannerGraph& g, bool alternate_split) {
    EdgeSet edges(g);
    std::function<void(const SimplePolygon&, const std::vector<int>&, int)> rec =
        [&](const SimplePolygon& P, const std::vector<int>& ids, int depth) {
            if (ids.size() < 2) return;
            std::vector<Point> pts;
            for (int id : ids) pts.push_back(sites[id]);
            if (ids.size() == 2) {
                GeodesicPath path = PolygonGeodesy(P, false).shortest_path(pts[0], pts[1]);
                edges.add({ids[0], ids[1], {}, path.length, path.complexity(), depth});
                return;
            }
            auto D = decompose(P, Axis::Vertical);
            ChordChoice cc;
            if (alternate_split && depth % 2 == 1) {
                std::vector<Point> centers;
                for (const auto& tr : D.traps) {
                    double x = 0.5 * (D.frame[tr.left_vertex].x + D.frame[tr.right_vertex].x);
                    centers.push_back({x, 0.5 * (D.edge_y_at(tr.bottom_edge, x) + D.edge_y_at(tr.top_edge, x))});
                }
                cc = choose_chord(D, centers);
            } else {
                cc = choose_chord(D, pts);
            }
            PolygonSplit split = split_along_chord(P, cc.chord);
            ProjectionResult R = project_all(split, pts);
            RecursionRecord rec_info;
            rec_info.depth = depth;
            rec_info.n = static_cast<int>(ids.size());
            rec_info.chord_case = cc.chord_case;
            std::vector<int> left, right;
            for (std::size_t i = 0; i < ids.size(); ++i)
                (R.side[i] == Side::Right ? right : left).push_back(ids[i]);
            rec_info.n_left = static_cast<int>(left.size());
            rec_info.n_right = static_cast<int>(right.size());
            level(ChordLevel{P, split, ids, pts, R, depth}, edges, rec_info);
            g.records.push_back(rec_info);
            SimplePolygon lp = split.left.polygon(), rp = split.right.polygon();
            rec(lp, left, depth + 1);
            rec(rp, right, depth + 1);
        };
    std::vector<int> all(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) all[i] = static_cast<int>(i);
    rec(poly, all, 0);
}

SpannerGraph build_simple_spanner(const SimplePolygon& poly, const std::vector<Point>& sites,
                                  const SimpleSpannerOptions& opt) {
    validate_polygon(poly);
    for (const auto& p : sites)
        if (locate_in_ring(poly.vertices, p) == Location::Outside) throw OutsidePolygon("site outside polygon");
    if (opt.k < 1) throw InvalidParams("k must be at least 1");
    SpannerGraph g;
    g.sites = sites;
    g.variant = opt.variant;
    g.k = opt.variant == Variant::Plain ? 1 : opt.k;
    auto to_1d = [](const ChordLevel& L) {
        std::vector<WeightedSite1D> s;
        for (std::size_t i = 0; i < L.ids.size(); ++i)
            s.push_back({L.proj.proj[i].param, L.proj.proj[i].weight, L.ids[i]});
        return s;
    };
    LevelBuilder level;
    if (opt.variant == Variant::Plain) {
        level = [&](const ChordLevel& L, EdgeSet& edges, RecursionRecord&) {
            auto s = to_1d(L);
            Spanner1D sp = build_2spanner(s);
            PolygonGeodesy geo(L.poly, false);
            for (const auto& e : sp.edges) {
                GeodesicPath path = geo.shortest_path(L.points[e.a], L.points[e.b]);
                edges.add({L.ids[e.a], L.ids[e.b], {}, path.length, path.complexity(), L.depth});
            }
        };
    } else if (opt.variant == Variant::Grouped) {
        int k = opt.k;
        level = [k, &to_1d](const ChordLevel& L, EdgeSet& edges, RecursionRecord& rec) {
            auto s = to_1d(L);
            auto order = group_order(L.proj.spt, L.split.chord);
            GroupedSpanner1D gs = build_grouped_spanner(s, order, k);
            for (const auto& e : gs.spanner.edges) {
                PiLambda pl = pi_lambda(L.proj, e.a, e.b);
                edges.add({L.ids[e.a], L.ids[e.b], pl.via, pl.length, pl.complexity, L.depth});
            }
            for (const auto& T : gs.trees) rec.two_tree_violations += two_tree_violations(L.proj.spt, T);
            if (!gs.trees.empty()) rec.groups = static_cast<int>(gs.trees.front().nodes[0].children.size());
        };
    } else {
        throw InvalidParams("build_simple_spanner handles the plain and grouped variants");
    }
    chord_recursion(poly, sites, level, g, opt.alternate_split);
    return g;
}

}  // namespace gspan
