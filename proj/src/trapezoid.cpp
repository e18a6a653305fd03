#include "gspan/trapezoid.h"

#include <algorithm>
#include <numeric>

namespace gspan {

Point TrapezoidalDecomposition::to_frame(const Point& p) const {
    return axis == Axis::Vertical ? p : Point{p.y, -p.x};
}

Point TrapezoidalDecomposition::from_frame(const Point& p) const {
    return axis == Axis::Vertical ? p : Point{-p.y, p.x};
}

namespace {

struct EdgeEnds {
    Point lo, hi;  // lexicographic left and right endpoint in frame coordinates
};

EdgeEnds edge_ends(const std::vector<Point>& F, int e) {
    int m = static_cast<int>(F.size());
    const Point& a = F[e];
    const Point& b = F[(e + 1) % m];
    return lex_less(a, b) ? EdgeEnds{a, b} : EdgeEnds{b, a};
}

// p strictly above (+1), on (0) or below (-1) the edge's supporting line
int side_of_edge(const std::vector<Point>& F, int e, const Point& p) {
    EdgeEnds ee = edge_ends(F, e);
    return orient(ee.lo, ee.hi, p);
}

// Vertical edges make the sweep emit trapezoids of zero width. Those with at most one wall
// on each side are contracted away; the surviving wall keeps the dual tree connected.
void drop_zero_width(TrapezoidalDecomposition& D) {
    std::vector<char> dead_trap(D.traps.size(), 0), dead_wall(D.walls.size(), 0);
    for (std::size_t a = 0; a < D.traps.size(); ++a) {
        Trapezoid& A = D.traps[a];
        if (D.frame[A.left_vertex].x != D.frame[A.right_vertex].x) continue;
        std::vector<int> left, right;
        for (int w : A.walls) (D.walls[w].right_trap == static_cast<int>(a) ? left : right).push_back(w);
        if (left.size() > 1 || right.size() > 1 || A.walls.empty()) continue;
        auto drop_from = [&](int trap, int w) { std::erase(D.traps[trap].walls, w); };
        if (left.size() == 1 && right.size() == 1) {
            int wl = left[0], wr = right[0];
            int t1 = D.walls[wl].left_trap;
            D.walls[wr].left_trap = t1;
            std::replace(D.traps[t1].walls.begin(), D.traps[t1].walls.end(), wl, wr);
            dead_wall[wl] = 1;
        } else {
            int w = left.empty() ? right[0] : left[0];
            drop_from(D.neighbor_across(static_cast<int>(a), w), w);
            dead_wall[w] = 1;
        }
        A.walls.clear();
        dead_trap[a] = 1;
    }
    std::vector<int> tmap(D.traps.size(), -1), wmap(D.walls.size(), -1);
    std::vector<Trapezoid> traps;
    std::vector<Wall> walls;
    for (std::size_t t = 0; t < D.traps.size(); ++t)
        if (!dead_trap[t]) {
            tmap[t] = static_cast<int>(traps.size());
            traps.push_back(std::move(D.traps[t]));
        }
    for (std::size_t w = 0; w < D.walls.size(); ++w)
        if (!dead_wall[w]) {
            wmap[w] = static_cast<int>(walls.size());
            walls.push_back(D.walls[w]);
        }
    for (auto& w : walls) {
        w.left_trap = tmap[w.left_trap];
        w.right_trap = tmap[w.right_trap];
    }
    for (auto& t : traps)
        for (int& w : t.walls) w = wmap[w];
    D.traps = std::move(traps);
    D.walls = std::move(walls);
}

}  // namespace

double TrapezoidalDecomposition::edge_y_at(int e, double fx) const {
    EdgeEnds ee = edge_ends(frame, e);
    if (fx == ee.lo.x) return ee.lo.y;
    if (fx == ee.hi.x) return ee.hi.y;
    double t = (fx - ee.lo.x) / (ee.hi.x - ee.lo.x);
    return ee.lo.y + t * (ee.hi.y - ee.lo.y);
}

bool TrapezoidalDecomposition::contains(int t, const Point& p) const {
    Point f = to_frame(p);
    const Trapezoid& tr = traps[t];
    if (f.x < frame[tr.left_vertex].x || f.x > frame[tr.right_vertex].x) return false;
    return side_of_edge(frame, tr.bottom_edge, f) >= 0 && side_of_edge(frame, tr.top_edge, f) <= 0;
}

int TrapezoidalDecomposition::locate(const Point& p) const {
    for (std::size_t t = 0; t < traps.size(); ++t)
        if (contains(static_cast<int>(t), p)) return static_cast<int>(t);
    throw OutsidePolygon("point outside polygon");
}

int TrapezoidalDecomposition::neighbor_across(int trap, int wall) const {
    const Wall& w = walls[wall];
    return w.left_trap == trap ? w.right_trap : w.left_trap;
}

std::size_t TrapezoidalDecomposition::max_degree() const {
    std::size_t d = 0;
    for (const auto& t : traps) d = std::max(d, t.walls.size());
    return d;
}

std::vector<std::vector<int>> TrapezoidalDecomposition::bucket_sites(
    const std::vector<Point>& sites) const {
    std::vector<std::vector<int>> b(traps.size());
    for (std::size_t i = 0; i < sites.size(); ++i) b[locate(sites[i])].push_back(static_cast<int>(i));
    return b;
}

TrapezoidalDecomposition decompose(const SimplePolygon& poly, Axis axis) {
    TrapezoidalDecomposition D;
    D.axis = axis;
    D.points = poly.vertices;
    int m = static_cast<int>(poly.size());
    if (m < 3) throw InvalidPolygon("polygon: fewer than 3 vertices");
    D.frame.reserve(m);
    for (const auto& p : poly.vertices) D.frame.push_back(D.to_frame(p));
    const auto& F = D.frame;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(F[a], F[b]); });

    struct Slab {
        int lo, hi, trap;
    };
    std::vector<Slab> active;

    auto open_trap = [&](int lo, int hi, int left) {
        Trapezoid t;
        t.bottom_edge = lo;
        t.top_edge = hi;
        t.left_vertex = left;
        D.traps.push_back(t);
        return static_cast<int>(D.traps.size()) - 1;
    };
    auto add_wall = [&](int v, bool up, int edge, int left_trap, int right_trap) {
        Wall w;
        w.vertex = v;
        w.up = up;
        w.hit_edge = edge;
        Point f{F[v].x, D.edge_y_at(edge, F[v].x)};
        w.hit = D.from_frame(f);
        w.left_trap = left_trap;
        w.right_trap = right_trap;
        D.walls.push_back(w);
        int id = static_cast<int>(D.walls.size()) - 1;
        D.traps[left_trap].walls.push_back(id);
        D.traps[right_trap].walls.push_back(id);
    };
    auto find_slab = [&](auto pred) -> std::size_t {
        for (std::size_t s = 0; s < active.size(); ++s)
            if (pred(active[s])) return s;
        throw InvalidPolygon("decomposition sweep lost an edge");
    };

    for (int v : order) {
        int u = (v + m - 1) % m, w = (v + 1) % m;
        int eu = u, ev = v;  // edge ids (u,v) and (v,w)
        bool u_right = lex_less(F[v], F[u]);
        bool w_right = lex_less(F[v], F[w]);
        int turn = orient(F[u], F[v], F[w]);
        if (u_right && w_right) {
            if (turn > 0) {
                // start: w-edge below, u-edge above
                std::size_t k = 0;
                while (k < active.size() && side_of_edge(F, active[k].hi, F[v]) > 0) ++k;
                int t = open_trap(ev, eu, v);
                active.insert(active.begin() + static_cast<long>(k), Slab{ev, eu, t});
            } else {
                // split: u-edge below, w-edge above
                std::size_t s = find_slab([&](const Slab& sl) {
                    return side_of_edge(F, sl.lo, F[v]) > 0 && side_of_edge(F, sl.hi, F[v]) < 0;
                });
                Slab old = active[s];
                D.traps[old.trap].right_vertex = v;
                int ta = open_trap(old.lo, eu, v);
                int tb = open_trap(ev, old.hi, v);
                add_wall(v, false, old.lo, old.trap, ta);
                add_wall(v, true, old.hi, old.trap, tb);
                active[s] = Slab{old.lo, eu, ta};
                active.insert(active.begin() + static_cast<long>(s) + 1, Slab{ev, old.hi, tb});
            }
        } else if (!u_right && !w_right) {
            if (turn > 0) {
                std::size_t s = find_slab([&](const Slab& sl) {
                    return (sl.lo == eu && sl.hi == ev) || (sl.lo == ev && sl.hi == eu);
                });
                D.traps[active[s].trap].right_vertex = v;
                active.erase(active.begin() + static_cast<long>(s));
            } else {
                // merge
                std::size_t a = find_slab([&](const Slab& sl) { return sl.hi == eu || sl.hi == ev; });
                std::size_t b = a + 1;
                if (b >= active.size() || (active[b].lo != eu && active[b].lo != ev))
                    throw InvalidPolygon("decomposition sweep: inconsistent merge");
                Slab sa = active[a], sb = active[b];
                D.traps[sa.trap].right_vertex = v;
                D.traps[sb.trap].right_vertex = v;
                int t = open_trap(sa.lo, sb.hi, v);
                add_wall(v, false, sa.lo, sa.trap, t);
                add_wall(v, true, sb.hi, sb.trap, t);
                active[a] = Slab{sa.lo, sb.hi, t};
                active.erase(active.begin() + static_cast<long>(b));
            }
        } else {
            int old_edge = u_right ? ev : eu;
            int new_edge = u_right ? eu : ev;
            std::size_t s = find_slab([&](const Slab& sl) { return sl.lo == old_edge || sl.hi == old_edge; });
            Slab old = active[s];
            D.traps[old.trap].right_vertex = v;
            if (old.lo == old_edge) {
                int t = open_trap(new_edge, old.hi, v);
                add_wall(v, true, old.hi, old.trap, t);
                active[s] = Slab{new_edge, old.hi, t};
            } else {
                int t = open_trap(old.lo, new_edge, v);
                add_wall(v, false, old.lo, old.trap, t);
                active[s] = Slab{old.lo, new_edge, t};
            }
        }
    }
    if (!active.empty()) throw InvalidPolygon("decomposition sweep left open trapezoids");
    drop_zero_width(D);
    return D;
}

}  // namespace gspan
