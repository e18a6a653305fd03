#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gspan/domain_spanner.h"
#include "gspan/generators.h"
#include "gspan/oracle.h"

using namespace gspan;

namespace {

PolygonalDomain square_with_hole() {
    PolygonalDomain d;
    d.outer.vertices = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    d.holes.push_back(SimplePolygon{{{4, 4}, {4, 6}, {6, 6}, {6, 4}}});
    return d;
}

struct Fixture {
    PolygonalDomain dom;
    std::vector<Point> sites;
};

Fixture random_fixture(std::uint64_t seed, int h, int n) {
    Rng rng(seed);
    Fixture f;
    f.dom = random_domain(h, 24, 6, rng);
    f.sites = random_sites(f.dom, n, rng);
    return f;
}

bool balanced(const Separator& s, int n) {
    int l = static_cast<int>(s.left.size());
    return 9 * l >= 2 * n && 3 * l <= 2 * n;
}

}  // namespace

TEST_CASE("weighted triangulation") {
    auto f = random_fixture(3, 3, 40);
    auto W = weighted_triangulation(f.dom, f.sites);
    const auto& T = W.tri;
    int U = W.domain_points;
    CHECK(T.points.size() == static_cast<std::size_t>(U) + 4);
    int total = 0;
    for (int w : W.weight) total += w;
    CHECK(total == 40);
    double free_area = 0;
    for (std::size_t t = 0; t < T.tris.size(); ++t) {
        const auto& v = T.tris[t];
        double a = signed_area({T.points[v[0]], T.points[v[1]], T.points[v[2]]});
        CHECK(a > 0);
        if (W.free[t]) free_area += a;
    }
    double dom_area = f.dom.outer.area();
    for (const auto& h : f.dom.holes) dom_area += h.area();
    CHECK(free_area == doctest::Approx(dom_area));
    // every point hangs off the tree exactly once
    int roots = 0;
    for (int v = 0; v < U + 4; ++v) roots += W.tree_parent[v] < 0;
    CHECK(roots == 1);
    CHECK(W.tree_parent[W.root] == -1);
    for (std::size_t i = 0; i < f.sites.size(); ++i) CHECK(W.free[W.site_tri[i]]);
    CHECK_THROWS_AS(weighted_triangulation(f.dom, {{-50, -50}}), OutsidePolygon);
}

TEST_CASE("balanced separator") {
    SUBCASE("random domains") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            for (int h : {0, 1, 3}) {
                auto f = random_fixture(seed, h, 30);
                auto s = balanced_sp_separator(f.dom, f.sites);
                CHECK(balanced(s, 30));
                CHECK_FALSE(s.paths.empty());
                // the walk only descends into heavier-than-2n/3 regions until it stops
                for (std::size_t i = 0; i + 1 < s.walk_weights.size(); ++i) {
                    CHECK(3 * s.walk_weights[i] > 60);
                    CHECK(s.walk_triangles[i + 1] < s.walk_triangles[i]);
                }
                // paths run through free space
                for (const auto& p : s.paths)
                    for (std::size_t q = 0; q + 1 < p.size(); ++q) CHECK(visible(f.dom, p[q], p[q + 1]));
            }
    }
    SUBCASE("two chambers") {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            Rng rng(seed);
            auto inst = two_chamber_fixture(45, rng);
            auto s = balanced_sp_separator(inst.domain, inst.sites);
            CHECK(balanced(s, 45));
            CHECK(s.kind != SeparatorKind::One);
        }
    }
    SUBCASE("heavy triangle") {
        PolygonalDomain d;
        d.outer.vertices = {{0, 0}, {10, 0}, {0, 10}};
        std::vector<Point> sites;
        for (int i = 1; i <= 9; ++i) sites.push_back({0.5 * i, 0.3 + 0.1 * (i % 3)});
        auto s = balanced_sp_separator(d, sites);
        CHECK(s.heavy);
        CHECK(balanced(s, 9));
        auto split = split_domain(d, sites, s);
        std::size_t total = 0;
        for (const auto& p : split.parts) total += p.sites.size();
        CHECK(total == sites.size());
    }
    SUBCASE("collinear heavy sites fall back to a segment") {
        PolygonalDomain d;
        d.outer.vertices = {{0, 0}, {10, 0}, {0, 10}};
        std::vector<Point> sites;
        for (int i = 1; i <= 9; ++i) sites.push_back({i * 0.5, i * 0.5});
        auto s = balanced_sp_separator(d, sites);
        CHECK(balanced(s, 9));
    }
    SUBCASE("too few sites") {
        CHECK_THROWS_AS(balanced_sp_separator(square_with_hole(), {{1, 1}, {2, 2}}), DegenerateInput);
    }
}

TEST_CASE("split") {
    for (std::uint64_t seed = 11; seed <= 20; ++seed) {
        auto f = random_fixture(seed, 2, 40);
        auto s = balanced_sp_separator(f.dom, f.sites);
        auto split = split_domain(f.dom, f.sites, s);
        std::size_t total = 0, left = 0;
        double area = 0;
        for (const auto& p : split.parts) {
            total += p.sites.size();
            if (p.left) left += p.sites.size();
            if (!p.segment) {
                area += p.domain.outer.area();
                for (const auto& h : p.domain.holes) area += h.area();
            }
        }
        double dom_area = f.dom.outer.area();
        for (const auto& h : f.dom.holes) dom_area += h.area();
        CHECK(total == f.sites.size());
        CHECK(left == s.left.size());
        CHECK(area == doctest::Approx(dom_area));
        CHECK(split.reflex_after <= split.reflex_before + 3);
    }
}

TEST_CASE("projection onto a separator path") {
    for (std::uint64_t seed = 21; seed <= 26; ++seed) {
        auto f = random_fixture(seed, 2, 30);
        auto s = balanced_sp_separator(f.dom, f.sites);
        DomainGeodesy geo(f.dom);
        for (const auto& lambda : s.paths) {
            auto P = project_to_path(geo, lambda, f.sites);
            for (std::size_t i = 0; i < f.sites.size(); ++i) {
                const auto& pr = P.proj.proj[i];
                // distance to the foot is geodesic, and no sampled path point is closer
                CHECK(pr.weight == doctest::Approx(geo.distance(f.sites[i], pr.foot)).epsilon(1e-9));
                CHECK(P.proj.paths[i].length == doctest::Approx(pr.weight));
                for (std::size_t q = 0; q + 1 < lambda.size(); ++q)
                    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                        Point x = free_point_near(f.dom, lambda[q] + (lambda[q + 1] - lambda[q]) * t);
                        CHECK(pr.weight <= geo.distance(f.sites[i], x) + 1e-9);
                    }
            }
            auto ord = path_group_order(P);
            CHECK(ord.size() == f.sites.size());
            int m = static_cast<int>(geo.vertices().size());
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 10; ++j) {
                    auto pl = path_pi_lambda(P, i, j);
                    CHECK(pl.complexity <= m + 1 + static_cast<int>(lambda.size()));
                    CHECK(pl.length >= geo.distance(f.sites[i], f.sites[j]) - 1e-9);
                }
        }
    }
}

TEST_CASE("domain spanner") {
    SUBCASE("two sites around a hole") {
        auto d = square_with_hole();
        auto g = build_domain_spanner(d, {{2, 5}, {8, 5}}, 1);
        REQUIRE(g.edges.size() == 1);
        CHECK(measure(g, all_pairs_geodesic(d, g.sites)).max_ratio == doctest::Approx(1.0));
        CHECK(check_edges(g, geodesic_paths(d)).empty());
    }
    SUBCASE("domain without holes") {
        auto f = random_fixture(31, 0, 40);
        auto g = build_domain_spanner(f.dom, f.sites, 1);
        CHECK(measure(g, all_pairs_geodesic(f.dom, f.sites)).max_ratio <= 6 + 1e-9);
        CHECK(check_edges(g, geodesic_paths(f.dom)).empty());
    }
    SUBCASE("random domains, k = 1 and 2") {
        for (std::uint64_t seed = 40; seed < 43; ++seed)
            for (int k : {1, 2}) {
                auto f = random_fixture(seed, 3, 60);
                auto g = build_domain_spanner(f.dom, f.sites, k);
                auto r = measure(g, all_pairs_geodesic(f.dom, f.sites));
                CHECK_FALSE(r.disconnected);
                CHECK(r.max_ratio <= 6 * k + 1e-9);
                CHECK(check_edges(g, geodesic_paths(f.dom)).empty());
                // an edge visits each domain vertex at most once
                std::size_t m = f.dom.outer.vertices.size();
                for (const auto& h : f.dom.holes) m += h.vertices.size();
                for (const auto& e : g.edges) CHECK(e.complexity <= static_cast<int>(m) + 1);
                for (const auto& rec : g.records) {
                    CHECK(9 * rec.n_left >= 2 * rec.n);
                    CHECK(3 * rec.n_left <= 2 * rec.n);
                    CHECK(rec.reflex_after <= rec.reflex + 3);
                }
            }
    }
    SUBCASE("bad input") {
        auto d = square_with_hole();
        CHECK_THROWS_AS(build_domain_spanner(d, {{5, 5}, {1, 1}}, 1), OutsidePolygon);
        CHECK_THROWS_AS(build_domain_spanner(d, {{1, 1}, {2, 2}}, 0), InvalidParams);
    }
}
