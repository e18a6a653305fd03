#include "gspan/geometry.h"

#include <algorithm>
#include <array>
#include <limits>

namespace gspan {

namespace {

// ── Exact arithmetic helpers ──

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bv = s - a;
    double av = s - bv;
    e = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

// Sign of an exact sum of doubles via a growing nonoverlapping expansion.
template <std::size_t N>
int exact_sum_sign(const std::array<double, N>& terms) {
    std::array<double, N> e{};
    std::size_t len = 0;
    for (double b : terms) {
        double q = b;
        std::size_t out = 0;
        for (std::size_t i = 0; i < len; ++i) {
            double s, h;
            two_sum(q, e[i], s, h);
            q = s;
            if (h != 0) e[out++] = h;
        }
        if (q != 0 || out == 0) e[out++] = q;
        len = out;
    }
    for (std::size_t i = len; i-- > 0;) {
        if (e[i] > 0) return 1;
        if (e[i] < 0) return -1;
    }
    return 0;
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    double l = (b.x - a.x) * (c.y - a.y);
    double r = (b.y - a.y) * (c.x - a.x);
    double det = l - r;
    double bound = 3.3306690738754716e-16 * (std::fabs(l) + std::fabs(r));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    // the filter is unreliable when the differences themselves rounded; expand
    // det = ax*by - ax*cy - ay*bx + ay*cx + bx*cy - by*cx
    std::array<double, 12> t{};
    two_product(a.x, b.y, t[0], t[1]);
    two_product(-a.x, c.y, t[2], t[3]);
    two_product(-a.y, b.x, t[4], t[5]);
    two_product(a.y, c.x, t[6], t[7]);
    two_product(b.x, c.y, t[8], t[9]);
    two_product(-b.y, c.x, t[10], t[11]);
    return exact_sum_sign(t);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    if (o1 == 0 || o2 == 0 || o1 == o2) return false;
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o3 != 0 && o4 != 0 && o3 != o4;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return false;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
           on_segment(b, c, d);
}

double signed_area(const std::vector<Point>& ring) {
    double s = 0;
    std::size_t m = ring.size();
    // relative to the first vertex, so large coordinates do not cancel
    for (std::size_t i = 1; i + 1 < m; ++i) s += cross(ring[i] - ring[0], ring[i + 1] - ring[0]);
    return s / 2;
}

std::size_t PolygonalDomain::vertex_count() const {
    std::size_t m = outer.size();
    for (const auto& h : holes) m += h.size();
    return m;
}

std::vector<const std::vector<Point>*> PolygonalDomain::rings() const {
    std::vector<const std::vector<Point>*> r{&outer.vertices};
    for (const auto& h : holes) r.push_back(&h.vertices);
    return r;
}

Location locate_in_ring(const std::vector<Point>& ring, const Point& p) {
    // Crossing parity with exact predicates; boundary detected first.
    bool inside = false;
    std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % m];
        if (on_segment(p, a, b)) return Location::Boundary;
        bool a_up = a.y > p.y, b_up = b.y > p.y;
        if (a_up != b_up) {
            // edge straddles the horizontal line through p
            int o = orient(a, b, p);
            if (b_up ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

Location locate_in_domain(const PolygonalDomain& dom, const Point& p) {
    Location outer = locate_in_ring(dom.outer.vertices, p);
    if (outer != Location::Inside) return outer;
    for (const auto& h : dom.holes) {
        Location l = locate_in_ring(h.vertices, p);
        if (l == Location::Boundary) return Location::Boundary;
        if (l == Location::Inside) return Location::Outside;
    }
    return Location::Inside;
}

namespace {

void validate_ring(const std::vector<Point>& ring, const std::string& what) {
    std::size_t m = ring.size();
    if (m < 3) throw InvalidPolygon(what + ": fewer than 3 vertices");
    for (const auto& p : ring)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidPolygon(what + ": non-finite coordinate");
    for (std::size_t i = 0; i < m; ++i)
        if (ring[i] == ring[(i + 1) % m]) throw InvalidPolygon(what + ": repeated vertex");
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % m];
        // adjacent edge must not fold back onto this one
        const Point& c = ring[(i + 2) % m];
        if (orient(a, b, c) == 0 && dot(b - a, c - b) < 0)
            throw InvalidPolygon(what + ": overlapping adjacent edges");
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;
            if (segments_intersect(a, b, ring[j], ring[(j + 1) % m]))
                throw InvalidPolygon(what + ": edges " + std::to_string(i) + " and " +
                                     std::to_string(j) + " intersect");
        }
    }
}

bool rings_touch(const std::vector<Point>& r1, const std::vector<Point>& r2) {
    BBox b1 = bounding_box(r1), b2 = bounding_box(r2);
    if (b1.xmax < b2.xmin || b2.xmax < b1.xmin || b1.ymax < b2.ymin || b2.ymax < b1.ymin)
        return false;
    for (std::size_t i = 0; i < r1.size(); ++i)
        for (std::size_t j = 0; j < r2.size(); ++j)
            if (segments_intersect(r1[i], r1[(i + 1) % r1.size()], r2[j],
                                   r2[(j + 1) % r2.size()]))
                return true;
    return false;
}

}  // namespace

void validate_polygon(const SimplePolygon& poly) {
    validate_ring(poly.vertices, "polygon");
    if (!(poly.area() > 0)) throw InvalidPolygon("polygon: not counterclockwise");
}

void validate_domain(const PolygonalDomain& dom) {
    validate_polygon(dom.outer);
    for (std::size_t h = 0; h < dom.holes.size(); ++h) {
        const auto& ring = dom.holes[h].vertices;
        std::string what = "hole " + std::to_string(h);
        validate_ring(ring, what);
        if (!(signed_area(ring) < 0)) throw InvalidPolygon(what + ": not clockwise");
        if (rings_touch(ring, dom.outer.vertices))
            throw InvalidPolygon(what + ": touches outer boundary");
        if (locate_in_ring(dom.outer.vertices, ring[0]) != Location::Inside)
            throw InvalidPolygon(what + ": outside outer boundary");
        for (std::size_t g = 0; g < h; ++g) {
            const auto& other = dom.holes[g].vertices;
            if (rings_touch(ring, other))
                throw InvalidPolygon(what + ": touches hole " + std::to_string(g));
            if (locate_in_ring(other, ring[0]) != Location::Outside ||
                locate_in_ring(ring, other[0]) != Location::Outside)
                throw InvalidPolygon(what + ": nested with hole " + std::to_string(g));
        }
    }
}

std::size_t reflex_count(const PolygonalDomain& dom) {
    std::size_t r = 0;
    for (const auto* ring : dom.rings()) {
        std::size_t m = ring->size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& u = (*ring)[(i + m - 1) % m];
            const Point& v = (*ring)[i];
            const Point& w = (*ring)[(i + 1) % m];
            if (orient(u, v, w) < 0) ++r;
        }
    }
    return r;
}

BBox bounding_box(const std::vector<Point>& pts) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BBox b{inf, inf, -inf, -inf};
    for (const auto& p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

}  // namespace gspan
