#include "gspan/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gspan {

namespace {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void make_ccw(std::vector<Point>& ring) {
    if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
}

}  // namespace

SimplePolygon random_simple_polygon(int m, Rng& rng, double scale) {
    if (m < 3) throw InvalidParams("polygon needs at least 3 vertices");
    for (;;) {
        std::vector<Point> pts(m);
        for (auto& p : pts) p = {uniform(rng, 0, scale), uniform(rng, 0, scale)};
        std::shuffle(pts.begin(), pts.end(), rng);
        // untangle: reversing the stretch between two crossing edges shortens the tour
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < m; ++i) {
                for (int j = i + 2; j < m; ++j) {
                    if (i == 0 && j == m - 1) continue;
                    const Point &a = pts[i], &b = pts[i + 1], &c = pts[j], &d = pts[(j + 1) % m];
                    if (segments_intersect(a, b, c, d)) {
                        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                        changed = true;
                    }
                }
            }
        }
        make_ccw(pts);
        SimplePolygon poly{pts};
        try {
            validate_polygon(poly);
            return poly;
        } catch (const InvalidPolygon&) {
            // collinear triples can survive untangling; draw again
        }
    }
}

namespace {

SimplePolygon star(int m, Rng& rng, double scale, double r_min) {
    if (m < 3) throw InvalidParams("polygon needs at least 3 vertices");
    std::vector<double> ang(m);
    // one angle per sector keeps every gap below pi, so the star is simple
    for (int i = 0; i < m; ++i) ang[i] = (i + uniform(rng, 0.1, 0.9)) * 2 * std::numbers::pi / m;
    std::vector<Point> pts;
    double c = scale / 2;
    for (double a : ang) {
        double r = uniform(rng, r_min, 1.0) * c;
        pts.push_back({c + r * std::cos(a), c + r * std::sin(a)});
    }
    SimplePolygon poly{pts};
    validate_polygon(poly);
    return poly;
}

}  // namespace

SimplePolygon random_star_polygon(int m, Rng& rng, double scale) { return star(m, rng, scale, 0.35); }

std::vector<Point> random_sites(const PolygonalDomain& dom, int n, Rng& rng) {
    BBox bb = bounding_box(dom.outer.vertices);
    std::vector<Point> out;
    long attempts = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++attempts > 1000000L + 1000L * n) throw DegenerateInput("free space too small for sites");
        Point p{uniform(rng, bb.xmin, bb.xmax), uniform(rng, bb.ymin, bb.ymax)};
        if (locate_in_domain(dom, p) != Location::Inside) continue;
        if (std::find(out.begin(), out.end(), p) != out.end()) continue;
        out.push_back(p);
    }
    return out;
}

PolygonalDomain random_domain(int h, int m_outer, int m_hole, Rng& rng, double scale) {
    PolygonalDomain dom;
    // a roomy outer boundary so holes fit
    dom.outer = star(m_outer, rng, scale, 0.6);
    dom.holes.clear();
    double c = scale / 2;
    double hr = scale * 0.5 / (2.5 * std::sqrt(static_cast<double>(std::max(h, 1))) + 1);
    int tries = 0;
    while (static_cast<int>(dom.holes.size()) < h) {
        if (++tries > 10000) throw DegenerateInput("could not place holes");
        double a = uniform(rng, 0, 2 * std::numbers::pi);
        double r = std::sqrt(uniform(rng, 0, 1)) * (0.6 * c - hr * 1.2);
        Point ctr{c + r * std::cos(a), c + r * std::sin(a)};
        SimplePolygon hole = random_star_polygon(std::max(3, m_hole), rng, 2 * hr);
        for (auto& p : hole.vertices) p = p - Point{hr, hr} + ctr;
        std::reverse(hole.vertices.begin(), hole.vertices.end());
        PolygonalDomain trial = dom;
        trial.holes.push_back(hole);
        // holes must keep a gap between each other
        bool clear = true;
        for (const auto& o : dom.holes) {
            BBox b1 = bounding_box(o.vertices), b2 = bounding_box(hole.vertices);
            if (b1.xmin < b2.xmax + hr * 0.2 && b2.xmin < b1.xmax + hr * 0.2 &&
                b1.ymin < b2.ymax + hr * 0.2 && b2.ymin < b1.ymax + hr * 0.2)
                clear = false;
        }
        if (!clear) continue;
        try {
            validate_domain(trial);
            dom = std::move(trial);
        } catch (const InvalidPolygon&) {
        }
    }
    return dom;
}

namespace {

// C-shaped ring around the box with wall thickness w and a gap of height g in the middle
// of the right side (left side when open_left); counterclockwise.
std::vector<Point> c_ring(double x0, double y0, double x1, double y1, double w, double g,
                          bool open_left) {
    double yc = (y0 + y1) / 2;
    std::vector<Point> r = {{x0, y0},         {x1, y0},         {x1, yc - g / 2}, {x1 - w, yc - g / 2},
                            {x1 - w, y0 + w}, {x0 + w, y0 + w}, {x0 + w, y1 - w}, {x1 - w, y1 - w},
                            {x1 - w, yc + g / 2}, {x1, yc + g / 2}, {x1, y1},     {x0, y1}};
    if (open_left) {
        for (auto& p : r) p.x = x0 + x1 - p.x;
        std::reverse(r.begin(), r.end());
    }
    return r;
}

}  // namespace

Instance two_chamber_fixture(int n, Rng& rng) {
    if (n < 2) throw InvalidParams("fixture needs at least 2 sites");
    Instance inst;
    inst.domain.outer.vertices = {{0, 0}, {100, 0}, {100, 60}, {0, 60}};
    auto a = c_ring(10, 10, 50, 50, 4, 4, false);
    auto b = c_ring(60.5, 15.5, 90.5, 45.5, 4, 4, true);
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    inst.domain.holes = {SimplePolygon{a}, SimplePolygon{b}};
    validate_domain(inst.domain);
    int small = (2 * n - 1) / 9;  // strictly fewer than 2n/9
    for (int i = 0; i < n; ++i) {
        Point p = i < small ? Point{uniform(rng, 66, 86), uniform(rng, 21, 40)}
                            : Point{uniform(rng, 15.5, 45), uniform(rng, 15.5, 44.5)};
        inst.sites.push_back(p);
    }
    inst.meta = {{"generator", "two_chamber"}, {"n", std::to_string(n)}};
    return inst;
}

namespace {

struct Spike {
    double theta;
    double half;  // angular half-width
};

// Corridor between radius R (a convex chain of inner vertices) and R + H over the angles
// [lo, hi], with radial spikes leaving the outer wall.
SimplePolygon hub_polygon(double R, double H, double lo, double hi, const std::vector<Spike>& spikes,
                          std::vector<double> inner, double far) {
    auto polar = [](double r, double a) { return Point{r * std::cos(a), r * std::sin(a)}; };
    double ro = R + H;
    // consecutive outer vertices must not pinch the corridor below R + H/2
    double max_gap = 2 * std::acos(R / (R + H / 2));
    std::vector<Point> ring;
    double cur = lo;
    auto fill_to = [&](double a) {
        int k = static_cast<int>(std::ceil((a - cur) / max_gap));
        for (int i = 1; i < k; ++i) ring.push_back(polar(ro, cur + (a - cur) * i / k));
    };
    ring.push_back(polar(ro, lo));
    for (const auto& s : spikes) {
        fill_to(s.theta - s.half);
        ring.push_back(polar(ro, s.theta - s.half));
        ring.push_back(polar(far, s.theta - s.half));
        ring.push_back(polar(far, s.theta + s.half));
        ring.push_back(polar(ro, s.theta + s.half));
        cur = s.theta + s.half;
    }
    fill_to(hi);
    ring.push_back(polar(ro, hi));
    ring.push_back(polar(R, hi));
    std::sort(inner.begin(), inner.end(), std::greater<>());
    for (double a : inner) ring.push_back(polar(R, a));
    ring.push_back(polar(R, lo));
    return SimplePolygon{ring};
}

}  // namespace

LowerBoundInstance gen_lower_bound_3eps(int n, int m, double ell, double aperture_ratio) {
    if (n < 2 || n % 2 != 0) throw InvalidParams("lb3eps: n must be even and at least 2");
    if (m < 1) throw InvalidParams("lb3eps: m must be positive");
    if (!(ell > 0) || !(aperture_ratio > 0) || aperture_ratio > 1e-3)
        throw InvalidParams("lb3eps: bad length or aperture");
    double H = aperture_ratio * ell;
    double R = 100 * H;
    double tangent = std::acos(R / (R + H));
    double margin = 1.5 * tangent;
    double step = 0.02, half = 0.005;
    int side_n = n / 2;
    std::vector<Spike> spikes;
    LowerBoundInstance out;
    double a = step;
    for (int i = 0; i < side_n; ++i, a += step) {
        spikes.push_back({a, half});
        out.side.push_back(0);
    }
    double p0 = spikes.back().theta + half + margin;
    double span = std::max(0.3, 2e-4 * m);
    double p1 = p0 + span;
    a = p1 + margin + half;
    for (int i = 0; i < side_n; ++i, a += step) {
        spikes.push_back({a, half});
        out.side.push_back(1);
    }
    double hi = a;
    std::vector<double> inner;
    for (int i = 0; i < m; ++i) inner.push_back(p0 + span * (i + 0.5) / m);
    out.instance.domain.outer = hub_polygon(R, H, 0, hi, spikes, inner, R + H + 1.05 * ell);
    for (const auto& s : spikes) {
        double r = R + H + ell;
        out.instance.sites.push_back({r * std::cos(s.theta), r * std::sin(s.theta)});
    }
    out.n = n;
    out.passage_vertices = m;
    out.per_gap = 0;
    out.spike_length = ell;
    out.aperture = H;
    out.instance.meta = {{"generator", "lb3eps"}, {"n", std::to_string(n)}, {"m", std::to_string(m)}};
    return out;
}

LowerBoundInstance gen_lower_bound_general(int n, int m, double ell, double aperture_ratio) {
    if (n < 2) throw InvalidParams("lbgeneral: n must be at least 2");
    if (m < n) throw InvalidParams("lbgeneral: m must be at least n");
    if (!(ell > 0) || !(aperture_ratio > 0) || aperture_ratio > 1e-3)
        throw InvalidParams("lbgeneral: bad length or aperture");
    double H = aperture_ratio * ell;
    double total = 1.5 * std::numbers::pi;
    double step = total / (n + 1);
    double half = step / 8;
    // the tangent from a mouth corner to the chain must stay inside the gap
    double R = 50 * H / (step * step);
    double margin = 1.5 * std::acos(R / (R + H));
    int k = m / n;
    std::vector<Spike> spikes;
    LowerBoundInstance out;
    for (int i = 0; i < n; ++i) {
        spikes.push_back({step * (i + 1), half});
        out.side.push_back(i);
    }
    std::vector<double> inner;
    for (int g = 0; g + 1 < n; ++g) {
        double g0 = spikes[g].theta + half + margin, g1 = spikes[g + 1].theta - half - margin;
        int cnt = g + 2 == n ? m - k * (n - 2) : k;
        for (int i = 0; i < cnt; ++i) inner.push_back(g0 + (g1 - g0) * (i + 0.5) / cnt);
    }
    out.instance.domain.outer = hub_polygon(R, H, 0, total, spikes, inner, R + H + 1.05 * ell);
    for (const auto& s : spikes) {
        double r = R + H + ell;
        out.instance.sites.push_back({r * std::cos(s.theta), r * std::sin(s.theta)});
    }
    out.n = n;
    out.passage_vertices = m;
    out.per_gap = k;
    out.spike_length = ell;
    out.aperture = H;
    out.instance.meta = {{"generator", "lbgeneral"}, {"n", std::to_string(n)}, {"m", std::to_string(m)}};
    return out;
}

}  // namespace gspan
