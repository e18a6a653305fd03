#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "gspan/generators.h"
#include "gspan/oracle.h"
#include "gspan/simple_spanner.h"

using namespace gspan;

namespace {

const double kRoot2 = std::sqrt(2.0);

SimplePolygon square(double s) { return SimplePolygon{{{0, 0}, {s, 0}, {s, s}, {0, s}}}; }

SimplePolygon u_polygon() {
    return SimplePolygon{{{0, 0}, {10, 0}, {10, 10}, {7, 10}, {7, 3}, {3, 3}, {3, 10}, {0, 10}}};
}

PolygonalDomain as_domain(const SimplePolygon& p) { return PolygonalDomain{p, {}}; }

void check_balance(const ChordSplit& cs, int n) {
    int cap = (2 * n + 2) / 3;
    CHECK(static_cast<int>(cs.left.size()) <= cap);
    CHECK(static_cast<int>(cs.right.size()) <= cap);
    CHECK(static_cast<int>(cs.left.size() + cs.right.size()) == n);
}

}  // namespace

TEST_CASE("balanced vertical chord") {
    SUBCASE("three sites in a square") {
        std::vector<Point> sites{{1, 5}, {5, 4}, {9, 5}};
        auto cs = balanced_vertical_chord(square(10), decompose(square(10), Axis::Vertical), sites);
        check_balance(cs, 3);
        CHECK(cs.chord.vertical());
    }
    SUBCASE("one trapezoid holding 99 sites") {
        Rng rng(4);
        auto sites = random_sites(as_domain(square(10)), 99, rng);
        auto D = decompose(square(10), Axis::Vertical);
        REQUIRE(D.traps.size() == 1);
        auto cs = balanced_vertical_chord(square(10), D, sites);
        CHECK(cs.chord_case == 2);
        CHECK(cs.left.size() == 33);
    }
    SUBCASE("random polygons and sites") {
        std::map<int, int> cases;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            Rng rng(seed);
            auto poly = random_simple_polygon(30 + static_cast<int>(seed % 40), rng);
            auto sites = random_sites(as_domain(poly), 100, rng);
            auto cs = balanced_vertical_chord(poly, decompose(poly, Axis::Vertical), sites);
            check_balance(cs, 100);
            ++cases[cs.chord_case];
            // the dual-tree classification agrees with the geometric split
            auto split = split_along_chord(poly, cs.chord);
            auto side = classify_sites(split, sites);
            for (int i : cs.left) CHECK(side[i] != Side::Right);
            for (int i : cs.right) CHECK(side[i] == Side::Right);
        }
        CHECK(cases.size() >= 2);
    }
}

TEST_CASE("group order") {
    SUBCASE("visible sites follow their feet") {
        std::vector<Point> sites{{2, 7}, {8, 1}, {3, 2}, {9, 9}, {1, 4}};
        auto R = project_all(square(10), Chord{{5, 0}, {5, 10}}, sites);
        auto order = group_order(R.spt, Chord{{5, 0}, {5, 10}});
        CHECK(order == std::vector<int>{1, 2, 4, 0, 3});
    }
    SUBCASE("sites behind one corner are contiguous") {
        SimplePolygon L{{{0, 0}, {10, 0}, {10, 4}, {4, 4}, {4, 10}, {0, 10}}};
        Chord ch{{7, 0}, {7, 4}};
        std::vector<Point> sites{{1, 9}, {5, 3}, {2, 8}, {9, 1}, {3, 9.5}, {1, 1}};
        auto R = project_all(L, ch, sites);
        auto order = group_order(R.spt, ch);
        REQUIRE(order.size() == sites.size());
        std::vector<int> pos(sites.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        std::vector<int> hidden{pos[0], pos[2], pos[4]};
        std::sort(hidden.begin(), hidden.end());
        CHECK(hidden[2] - hidden[0] == 2);
    }
    SUBCASE("restriction to one side matches the side's own tree") {
        Rng rng(9);
        auto poly = random_simple_polygon(60, rng);
        auto sites = random_sites(as_domain(poly), 40, rng);
        auto cs = balanced_vertical_chord(poly, decompose(poly, Axis::Vertical), sites);
        auto split = split_along_chord(poly, cs.chord);
        auto R = project_all(split, sites);
        auto order = group_order(R.spt, cs.chord);
        std::vector<Point> left_sites;
        std::vector<int> left_ids;
        for (std::size_t i = 0; i < sites.size(); ++i)
            if (R.side[i] == Side::Left) {
                left_ids.push_back(static_cast<int>(i));
                left_sites.push_back(sites[i]);
            }
        auto RL = project_all(split, left_sites);
        auto sub = group_order(RL.spt, cs.chord);
        std::vector<int> restricted;
        for (int i : order)
            if (R.side[i] == Side::Left) restricted.push_back(i);
        std::vector<int> mapped;
        for (int i : sub) mapped.push_back(left_ids[i]);
        CHECK(restricted == mapped);
    }
}

TEST_CASE("relaxed chord paths") {
    SUBCASE("disjoint legs in a convex polygon") {
        std::vector<Point> sites{{2, 3}, {8, 6}};
        auto R = project_all(square(10), Chord{{5, 0}, {5, 10}}, sites);
        auto pl = pi_lambda(R, 0, 1);
        REQUIRE(pl.via.size() == 2);
        CHECK(pl.via[0] == Point{5, 3});
        CHECK(pl.via[1] == Point{5, 6});
        CHECK(pl.length == doctest::Approx(3 + 3 + 3));
        CHECK(pl.complexity == 3);
        auto path = pi_lambda_path(R, sites, 0, 1);
        CHECK(path.complexity() == 3);
        CHECK(path.length == doctest::Approx(pl.length));
    }
    SUBCASE("shared leg shortcuts at the common vertex") {
        SimplePolygon L{{{0, 0}, {10, 0}, {10, 4}, {4, 4}, {4, 10}, {0, 10}}};
        Chord ch{{7, 0}, {7, 4}};
        std::vector<Point> sites{{1, 9}, {2, 6}};
        auto R = project_all(L, ch, sites);
        auto pl = pi_lambda(R, 0, 1);
        REQUIRE(pl.via.size() == 1);
        CHECK(pl.via[0] == Point{4, 4});
        CHECK(pl.length == doctest::Approx(dist({1, 9}, {4, 4}) + dist({2, 6}, {4, 4})));
    }
    SUBCASE("random polygons: bounded by the oracle and the weighted distance") {
        for (std::uint64_t seed = 30; seed < 36; ++seed) {
            Rng rng(seed);
            auto poly = random_simple_polygon(50, rng);
            auto sites = random_sites(as_domain(poly), 25, rng);
            auto cs = balanced_vertical_chord(poly, decompose(poly, Axis::Vertical), sites);
            auto R = project_all(poly, cs.chord, sites);
            PolygonGeodesy geo(poly);
            for (int i = 0; i < 25; ++i)
                for (int j = i + 1; j < 25; ++j) {
                    auto pl = pi_lambda(R, i, j);
                    auto path = pi_lambda_path(R, sites, i, j);
                    CHECK(path.length == doctest::Approx(pl.length).epsilon(1e-9));
                    CHECK(path.complexity() == pl.complexity);
                    CHECK(pl.length >= geo.distance(sites[i], sites[j]) - 1e-9);
                    double dw = R.proj[i].weight + std::abs(R.proj[i].param - R.proj[j].param) + R.proj[j].weight;
                    CHECK(pl.length <= dw + 1e-9);
                }
        }
    }
}

TEST_CASE("plain spanner") {
    SUBCASE("two sites give their geodesic") {
        auto g = build_simple_spanner(u_polygon(), {{1, 9}, {9, 9}});
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0].complexity == 3);
        auto rep = measure(g, all_pairs_geodesic(as_domain(u_polygon()), g.sites));
        CHECK(rep.max_ratio == doctest::Approx(1.0));
    }
    SUBCASE("convex polygon: straight edges") {
        Rng rng(2);
        auto sites = random_sites(as_domain(square(10)), 40, rng);
        auto g = build_simple_spanner(square(10), sites);
        for (const auto& e : g.edges) CHECK(e.complexity == 1);
        auto rep = measure(g, all_pairs_geodesic(as_domain(square(10)), sites));
        CHECK(rep.max_ratio <= 2 * kRoot2 + 1e-9);
        CHECK_FALSE(rep.disconnected);
    }
    SUBCASE("random polygons") {
        for (std::uint64_t seed = 100; seed < 108; ++seed) {
            Rng rng(seed);
            auto poly = random_simple_polygon(80, rng);
            auto sites = random_sites(as_domain(poly), 60, rng);
            auto g = build_simple_spanner(poly, sites);
            auto rep = measure(g, all_pairs_geodesic(as_domain(poly), sites));
            CHECK(rep.max_ratio <= 2 * kRoot2 + 1e-9);
            CHECK(check_edges(g, geodesic_paths(as_domain(poly))).empty());
            for (const auto& r : g.records) {
                CHECK(r.n_left <= (2 * r.n + 2) / 3);
                CHECK(r.n_right <= (2 * r.n + 2) / 3);
            }
        }
    }
}

TEST_CASE("grouped spanner") {
    SUBCASE("U polygon, 40 sites, k = 2") {
        Rng rng(12);
        auto sites = random_sites(as_domain(u_polygon()), 40, rng);
        SimpleSpannerOptions opt{Variant::Grouped, 2};
        auto g = build_simple_spanner(u_polygon(), sites, opt);
        auto rep = measure(g, all_pairs_geodesic(as_domain(u_polygon()), sites));
        CHECK(rep.max_ratio <= 4 * kRoot2 + 1e-9);
        CHECK(check_edges(g, geodesic_paths(as_domain(u_polygon()))).empty());
    }
    SUBCASE("random polygons, k = 1..3") {
        for (std::uint64_t seed = 200; seed < 206; ++seed)
            for (int k = 1; k <= 3; ++k) {
                Rng rng(seed);
                auto poly = random_simple_polygon(70, rng);
                auto sites = random_sites(as_domain(poly), 50, rng);
                SimpleSpannerOptions opt{Variant::Grouped, k};
                auto g = build_simple_spanner(poly, sites, opt);
                auto rep = measure(g, all_pairs_geodesic(as_domain(poly), sites));
                CHECK(rep.max_ratio <= 2 * kRoot2 * k + 1e-9);
                CHECK(check_edges(g, geodesic_paths(as_domain(poly))).empty());
                for (const auto& r : g.records) CHECK(r.two_tree_violations == 0);
            }
    }
    SUBCASE("alternating split still certifies the ratio") {
        Rng rng(31);
        auto poly = random_simple_polygon(60, rng);
        auto sites = random_sites(as_domain(poly), 40, rng);
        SimpleSpannerOptions opt{Variant::Grouped, 2, true};
        auto g = build_simple_spanner(poly, sites, opt);
        auto rep = measure(g, all_pairs_geodesic(as_domain(poly), sites));
        CHECK(rep.max_ratio <= 4 * kRoot2 + 1e-9);
    }
    SUBCASE("bad parameters") {
        SimpleSpannerOptions opt{Variant::Grouped, 0};
        CHECK_THROWS_AS(build_simple_spanner(square(10), {{1, 1}, {2, 2}}, opt), InvalidParams);
        CHECK_THROWS_AS(build_simple_spanner(square(10), {{1, 1}, {20, 2}}), OutsidePolygon);
    }
}
