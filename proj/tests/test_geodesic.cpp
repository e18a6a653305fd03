#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>

#include "gspan/generators.h"
#include "gspan/geodesic.h"
#include "gspan/visibility.h"

using namespace gspan;

namespace {

SimplePolygon square(double s) { return SimplePolygon{{{0, 0}, {s, 0}, {s, s}, {0, s}}}; }

PolygonalDomain as_domain(const SimplePolygon& p) { return PolygonalDomain{p, {}}; }

// Vertical chord through p, bounded by the nearest boundary crossings below and above.
Chord vertical_chord_through(const SimplePolygon& poly, const Point& p) {
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point &a = poly[i], &b = poly.at_wrapped(static_cast<long>(i) + 1);
        if ((a.x < p.x) == (b.x < p.x)) continue;
        double y = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
        if (y < p.y) lo = std::max(lo, y);
        else hi = std::min(hi, y);
    }
    return Chord{{p.x, lo}, {p.x, hi}};
}

bool is_reflex(const SimplePolygon& poly, int v) {
    return orient(poly.at_wrapped(v - 1), poly[v], poly.at_wrapped(v + 1)) < 0;
}

}  // namespace

TEST_CASE("convex polygons give straight segments") {
    PolygonGeodesy geo(square(10));
    auto path = geo.shortest_path({1, 1}, {9, 7});
    CHECK(path.complexity() == 1);
    CHECK(path.length == doctest::Approx(10.0));
    auto same = geo.shortest_path({3, 3}, {3, 3});
    CHECK(same.points.size() == 1);
    CHECK(same.length == 0);
    CHECK_THROWS_AS(geo.shortest_path({-1, 3}, {3, 3}), OutsidePolygon);
}

TEST_CASE("U-shaped polygon matches the visibility graph") {
    SimplePolygon U{{{0, 0}, {10, 0}, {10, 10}, {7, 10}, {7, 3}, {3, 3}, {3, 10}, {0, 10}}};
    PolygonGeodesy geo(U);
    DomainGeodesy oracle(as_domain(U));
    Point a{1, 9}, b{9, 9};
    auto path = geo.shortest_path(a, b);
    CHECK(path.length == doctest::Approx(oracle.distance(a, b)).epsilon(1e-12));
    CHECK(path.complexity() == 3);
    CHECK(path.ids[1] == 5);
    CHECK(path.ids[2] == 4);
    double expect = dist(a, {3, 3}) + 4 + dist({7, 3}, b);
    CHECK(path.length == doctest::Approx(expect).epsilon(1e-12));
    auto back = geo.shortest_path(b, a);
    CHECK(back.length == doctest::Approx(path.length).epsilon(1e-12));
}

TEST_CASE("random polygons: funnel distances agree with visibility Dijkstra") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        SimplePolygon poly = random_simple_polygon(40, rng);
        PolygonGeodesy geo(poly);
        DomainGeodesy oracle(as_domain(poly));
        auto pts = random_sites(as_domain(poly), 14, rng);
        std::vector<DomainGeodesy::Attachment> att;
        for (const auto& p : pts) att.push_back(oracle.attach(p));
        std::vector<std::vector<double>> d(pts.size(), std::vector<double>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                auto path = geo.shortest_path(pts[i], pts[j]);
                d[i][j] = path.length;
                double ref = oracle.distance(att[i], att[j]);
                CHECK(path.length == doctest::Approx(ref).epsilon(1e-9));
                // taut: every bend is a reflex vertex and every leg stays inside
                for (std::size_t k = 1; k + 1 < path.points.size(); ++k) {
                    REQUIRE(path.ids[k] >= 0);
                    CHECK(is_reflex(poly, path.ids[k]));
                }
                for (std::size_t k = 0; k + 1 < path.points.size(); ++k)
                    CHECK(visible(as_domain(poly), path.points[k], path.points[k + 1]));
            }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                CHECK(d[i][j] == doctest::Approx(d[j][i]).epsilon(1e-12));
                for (std::size_t k = 0; k < pts.size(); ++k) CHECK(d[i][j] <= d[i][k] + d[k][j] + 1e-9);
            }
    }
}

TEST_CASE("visibility respects hole corners and boundary contacts") {
    PolygonalDomain dom{square(10), {SimplePolygon{{{4, 4}, {4, 6}, {6, 6}, {6, 4}}}}};
    validate_domain(dom);
    CHECK(visible(dom, {1, 1}, {9, 1}));
    CHECK_FALSE(visible(dom, {1, 5}, {9, 5}));
    CHECK(visible(dom, {1, 4}, {9, 4}));  // grazes the hole edge
    CHECK(visible(dom, {2, 2}, {8, 8}) == false);
    CHECK(visible(dom, {0, 0}, {4, 4}));
    CHECK(visible(dom, {0, 0}, {6, 4}));
    DomainGeodesy g(dom);
    double d = g.distance(Point{1, 5}, Point{9, 5});
    CHECK(d == doctest::Approx(2 * std::hypot(3, 1) + 2).epsilon(1e-12));
    CHECK_THROWS_AS(g.attach({5, 5}), OutsidePolygon);
}

TEST_CASE("shortest path tree of a point") {
    SUBCASE("convex polygon is a star") {
        auto T = shortest_path_tree(square(10), {3, 4});
        for (int v = 0; v < 4; ++v) CHECK(T.nodes[T.vertex_node[v]].parent == T.root);
    }
    SUBCASE("source on a vertex becomes the root") {
        auto T = shortest_path_tree(square(10), {0, 0});
        CHECK(T.vertex_node[0] == T.root);
        CHECK(T.nodes[T.vertex_node[2]].dist == doctest::Approx(std::sqrt(200.0)));
    }
    SUBCASE("distances match pairwise paths") {
        Rng rng(7);
        SimplePolygon poly = random_simple_polygon(50, rng);
        PolygonGeodesy geo(poly);
        auto sites = random_sites(as_domain(poly), 10, rng);
        auto T = shortest_path_tree(geo, sites[0], sites);
        for (std::size_t v = 0; v < poly.size(); ++v)
            CHECK(T.nodes[T.vertex_node[v]].dist == doctest::Approx(geo.distance(sites[0], poly[v])).epsilon(1e-9));
        for (std::size_t i = 0; i < sites.size(); ++i)
            CHECK(T.nodes[T.site_node[i]].dist == doctest::Approx(geo.distance(sites[0], sites[i])).epsilon(1e-9));
    }
}

TEST_CASE("projection onto a chord") {
    SUBCASE("square, perpendicular foot") {
        auto R = project_all(square(10), Chord{{5, 0}, {5, 10}}, {{2, 3}, {8, 6}, {5, 5}});
        CHECK(R.side[0] == Side::Left);
        CHECK(R.side[1] == Side::Right);
        CHECK(R.side[2] == Side::OnChord);
        CHECK(R.proj[0].foot == Point{5, 3});
        CHECK(R.proj[0].weight == doctest::Approx(3));
        CHECK(R.proj[1].foot == Point{5, 6});
        CHECK(R.proj[1].param == doctest::Approx(6));
        CHECK(R.proj[2].weight == 0);
    }
    SUBCASE("hidden site projects to the chord endpoint") {
        SimplePolygon L{{{0, 0}, {10, 0}, {10, 4}, {4, 4}, {4, 10}, {0, 10}}};
        Chord ch{{7, 0}, {7, 4}};
        auto split = split_along_chord(L, ch);
        auto R = project_all(split, {{2, 8}});
        CHECK(R.proj[0].foot == Point{7, 4});
        CHECK(R.proj[0].weight == doctest::Approx(std::sqrt(20.0) + 3));
        auto col = colored_projections(split, {{2, 8}, {2, 2}});
        CHECK(col[0].color == ProjectionColor::Orange);
        CHECK(col[0].foot == Point{7, 4});
        CHECK(col[1].color == ProjectionColor::Blue);
        CHECK(col[1].foot == Point{7, 2});
    }
    SUBCASE("bad chords are rejected") {
        CHECK_THROWS_AS(split_along_chord(square(10), Chord{{5, 1}, {5, 10}}), InvalidChord);
        CHECK_THROWS_AS(split_along_chord(square(10), Chord{{5, -1}, {5, 10}}), InvalidChord);
    }
}

TEST_CASE("random projections match dense sampling and the region labels") {
    for (std::uint64_t seed = 11; seed <= 30; ++seed) {
        Rng rng(seed);
        SimplePolygon poly = random_simple_polygon(100, rng);
        PolygonGeodesy whole(poly);
        auto probe = random_sites(as_domain(poly), 1, rng)[0];
        Chord ch = vertical_chord_through(poly, probe);
        auto split = split_along_chord(poly, ch);
        auto sites = random_sites(as_domain(poly), 200, rng);
        auto R = project_all(split, sites);
        auto col = colored_projections(split, sites);
        const int samples = 400;
        double spacing = ch.length() / samples;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const auto& pr = R.proj[i];
            CHECK(on_segment(pr.foot, ch.bottom, ch.top));
            CHECK(R.paths[i].length == doctest::Approx(pr.weight).epsilon(1e-12));
            CHECK(whole.distance(sites[i], pr.foot) == doctest::Approx(pr.weight).epsilon(1e-9));
            CHECK(R.spt.nodes[R.spt.site_node[i]].dist == doctest::Approx(pr.weight).epsilon(1e-9));
            CHECK(dist(col[i].foot, pr.foot) <= 1e-9 * (1 + ch.length()));
            if (i % 10 == 0) {
                double best = std::numeric_limits<double>::infinity();
                for (int k = 0; k <= samples; ++k) best = std::min(best, whole.distance(sites[i], ch.at(k * spacing)));
                CHECK(pr.weight <= best + 1e-9);
                CHECK(best <= pr.weight + spacing);
            }
        }
    }
}

TEST_CASE("funnel to an edge: closest point and directed hits") {
    PolygonGeodesy geo(square(10));
    auto f = geo.funnel_to_edge({2, 3}, 1);
    auto h = f.closest();
    CHECK(h.point == Point{10, 3});
    CHECK(h.weight == doctest::Approx(8));
    auto d = f.along_direction({1, 0.5});
    REQUIRE(d.has_value());
    CHECK(d->point.x == 10);
    CHECK(d->point.y == doctest::Approx(7));
    CHECK(d->weight == doctest::Approx(std::hypot(8, 4)));
    CHECK_FALSE(f.along_direction({1, 2}).has_value());
    CHECK_FALSE(f.along_direction({-1, 0}).has_value());
    auto p = f.path_to(*d);
    CHECK(p.points.back() == d->point);
}
