#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gspan/oracle.h"
#include "gspan/simple_spanner.h"
#include "gspan/visibility.h"

using namespace gspan;

namespace {

SimplePolygon square(double s) { return SimplePolygon{{{0, 0}, {s, 0}, {s, s}, {0, s}}}; }

void check_metric(const DistanceMatrix& D) {
    std::size_t n = D.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(D[i][i] == 0);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(D[i][j] == D[j][i]);
            for (std::size_t l = 0; l < n; ++l) CHECK(D[i][j] <= D[i][l] + D[l][j] + 1e-9);
        }
    }
}

}  // namespace

TEST_CASE("all-pairs oracle") {
    SUBCASE("convex polygon gives Euclidean distances") {
        Rng rng(1);
        PolygonalDomain dom{square(10), {}};
        auto sites = random_sites(dom, 12, rng);
        sites.push_back(sites[0]);
        auto D = all_pairs_geodesic(dom, sites);
        for (std::size_t i = 0; i < sites.size(); ++i)
            for (std::size_t j = 0; j < sites.size(); ++j)
                CHECK(D[i][j] == doctest::Approx(dist(sites[i], sites[j])).epsilon(1e-12));
        CHECK(D[0].back() == 0);
        check_metric(D);
    }
    SUBCASE("funnel and visibility agree on 30 sites in a 40-gon") {
        Rng rng(40);
        PolygonalDomain dom{random_simple_polygon(40, rng), {}};
        auto sites = random_sites(dom, 30, rng);
        auto A = all_pairs_geodesic(dom, sites, OracleMethod::Visibility);
        auto B = all_pairs_geodesic(dom, sites, OracleMethod::Funnel);
        int pairs = 0;
        for (int i = 0; i < 30; ++i)
            for (int j = i + 1; j < 30; ++j, ++pairs)
                CHECK(std::abs(A[i][j] - B[i][j]) <= 1e-9 * std::max(1.0, B[i][j]));
        CHECK(pairs == 435);
        check_metric(A);
    }
    SUBCASE("domain with holes is metric") {
        Rng rng(5);
        auto dom = random_domain(3, 20, 6, rng);
        auto sites = random_sites(dom, 15, rng);
        check_metric(all_pairs_geodesic(dom, sites));
        CHECK_THROWS_AS(all_pairs_geodesic(dom, sites, OracleMethod::Funnel), InvalidParams);
    }
}

TEST_CASE("measure") {
    SUBCASE("star on three collinear points") {
        SpannerGraph g;
        g.sites = {{1, 5}, {5, 5}, {9, 5}};
        g.edges = {{0, 1, {}, 4, 1, 0}, {1, 2, {}, 4, 1, 0}};
        auto D = all_pairs_geodesic(PolygonalDomain{square(10), {}}, g.sites);
        auto r = measure(g, D);
        CHECK(r.max_ratio == doctest::Approx(1.0));
        CHECK(r.complexity == 2);
        CHECK_FALSE(r.disconnected);
        auto r2 = measure(g, D);
        CHECK(r2.max_ratio == r.max_ratio);
        CHECK(r2.mean_ratio == r.mean_ratio);
    }
    SUBCASE("complete geodesic graph") {
        SimplePolygon U{{{0, 0}, {10, 0}, {10, 10}, {7, 10}, {7, 3}, {3, 3}, {3, 10}, {0, 10}}};
        PolygonalDomain dom{U, {}};
        Rng rng(3);
        SpannerGraph g;
        g.sites = random_sites(dom, 10, rng);
        PolygonGeodesy geo(U);
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j) {
                auto p = geo.shortest_path(g.sites[i], g.sites[j]);
                g.edges.push_back({i, j, {}, p.length, p.complexity(), 0});
            }
        auto r = measure(g, all_pairs_geodesic(dom, g.sites));
        CHECK(r.max_ratio == doctest::Approx(1.0));
        CHECK(check_edges(g, geodesic_paths(dom)).empty());
    }
    SUBCASE("disconnected and tampered graphs") {
        SpannerGraph g;
        g.sites = {{1, 5}, {5, 5}, {9, 5}};
        g.edges = {{0, 1, {}, 4, 1, 0}};
        auto r = measure(g, all_pairs_geodesic(PolygonalDomain{square(10), {}}, g.sites));
        CHECK(r.disconnected);
        CHECK(std::isinf(r.max_ratio));
        g.edges[0].length = 3.5;
        auto bad = check_edges(g, geodesic_paths(PolygonalDomain{square(10), {}}));
        REQUIRE(bad.size() == 1);
        CHECK(bad[0].expanded == doctest::Approx(4.0));
    }
}

TEST_CASE("lower-bound generators") {
    SUBCASE("opposite spikes meet at twice the spike length") {
        auto lb = gen_lower_bound_3eps(4, 24);
        const auto& inst = lb.instance;
        validate_polygon(inst.polygon());
        REQUIRE(inst.sites.size() == 4);
        PolygonGeodesy geo(inst.polygon());
        double l = lb.spike_length;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (lb.side[i] == lb.side[j]) continue;
                auto p = geo.shortest_path(inst.sites[i], inst.sites[j]);
                CHECK(p.length >= 2 * l);
                CHECK(p.length <= 2 * l * (1 + 1e-4));
                CHECK(p.complexity() >= lb.passage_vertices);
            }
        CHECK_THROWS_AS(gen_lower_bound_3eps(3, 24), InvalidParams);
    }
    SUBCASE("spikes in a row: complexity grows with index distance") {
        auto lb = gen_lower_bound_general(8, 8);
        validate_polygon(lb.instance.polygon());
        PolygonGeodesy geo(lb.instance.polygon());
        const auto& s = lb.instance.sites;
        for (int i = 0; i + 1 < 8; ++i) CHECK(geo.shortest_path(s[i], s[i + 1]).complexity() >= 1);
        CHECK(geo.shortest_path(s[0], s[7]).complexity() >= 7);
        auto excess = [](double aperture) {
            auto lb4 = gen_lower_bound_general(8, 32, 1.0, aperture);
            PolygonGeodesy geo4(lb4.instance.polygon());
            const auto& s4 = lb4.instance.sites;
            double worst = 0;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    auto p = geo4.shortest_path(s4[i], s4[j]);
                    CHECK(p.complexity() >= 4 * (j - i));
                    CHECK(p.length >= 2.0);
                    worst = std::max(worst, p.length - 2.0);
                }
            return worst;
        };
        double e6 = excess(1e-6), e8 = excess(1e-8);
        CHECK(e6 < 1e-2);
        CHECK(e8 < e6 / 50);
        CHECK_THROWS_AS(gen_lower_bound_general(8, 4), InvalidParams);
    }
}

TEST_CASE("scaling") {
    CHECK(loglog_slope({1, 2, 4, 8}, {3, 6, 12, 24}) == doctest::Approx(1.0));
    CHECK(loglog_slope({1, 4, 16}, {5, 10, 20}) == doctest::Approx(0.5));
    auto res = scaling_experiment({1, 3}, {16, 32});
    REQUIRE(res.rows.size() == 4);
    REQUIRE(res.slopes.size() == 2);
    // more groups trade stretch for fewer segments
    CHECK(res.rows[2].complexity < res.rows[0].complexity);
    CHECK(res.rows[3].complexity < res.rows[1].complexity);
    for (const auto& row : res.rows) CHECK(row.complexity >= static_cast<long>(row.edges));
}
