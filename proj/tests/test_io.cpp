#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <regex>

#include "gspan/domain_spanner.h"
#include "gspan/io.h"
#include "gspan/simple_spanner.h"
#include "gspan/svg.h"
#include "mutations.h"

using namespace gspan;

namespace {

std::vector<Instance> corpus() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Rng rng(seed);
        Instance a;
        a.domain.outer = random_simple_polygon(30, rng);
        a.sites = random_sites(a.domain, 15, rng);
        a.meta = {{"generator", "random_simple"}, {"seed", std::to_string(seed)}};
        out.push_back(a);
        Instance b;
        b.domain = random_domain(3, 20, 6, rng);
        b.sites = random_sites(b.domain, 15, rng);
        out.push_back(b);
    }
    out.push_back(gen_lower_bound_3eps(4, 24).instance);
    out.push_back(gen_lower_bound_general(6, 24).instance);
    Rng rng(9);
    out.push_back(two_chamber_fixture(20, rng));
    return out;
}

int count(const std::string& text, const std::string& what) {
    int c = 0;
    for (std::size_t at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("shortest round-trip doubles") {
    Rng rng(3);
    std::uniform_real_distribution<double> U(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        double v = U(rng);
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2) == "2");
}

TEST_CASE("instance files") {
    SUBCASE("round trip on the corpus") {
        for (const auto& inst : corpus()) {
            std::string text = write_instance(inst);
            Instance back = read_instance(text);
            CHECK(back.domain.outer.vertices == inst.domain.outer.vertices);
            REQUIRE(back.domain.holes.size() == inst.domain.holes.size());
            for (std::size_t h = 0; h < back.domain.holes.size(); ++h)
                CHECK(back.domain.holes[h].vertices == inst.domain.holes[h].vertices);
            CHECK(back.sites == inst.sites);
            CHECK(back.meta == inst.meta);
            CHECK(write_instance(back) == text);
        }
    }
    SUBCASE("meta values keep their spaces") {
        Instance inst = corpus().front();
        inst.meta = {{"note", "two  words"}};
        CHECK(read_instance(write_instance(inst)).meta == inst.meta);
    }
    SUBCASE("malformed text") {
        std::string good = write_instance(corpus().front());
        CHECK_THROWS_AS(read_instance(""), ParseError);
        CHECK_THROWS_AS(read_instance("gspan-instance 2\nend\n"), ParseError);
        CHECK_THROWS_AS(read_instance(good.substr(0, good.size() - 4)), ParseError);
        CHECK_THROWS_AS(read_instance(std::regex_replace(good, std::regex("sites"), "points")), ParseError);
        CHECK_THROWS_AS(read_instance("gspan-instance 1\nouter 3\n0 0\n1 x\n0 1\nend\n"), ParseError);
        CHECK_THROWS_AS(read_instance("gspan-instance 1\nouter 3\n0 0\n1 0\nend\n"), ParseError);
    }
    SUBCASE("bad geometry") {
        CHECK_THROWS_AS(read_instance("gspan-instance 1\nouter 4\n0 0\n1 1\n1 0\n0 1\nend\n"), InvalidPolygon);
        CHECK_THROWS_AS(read_instance("gspan-instance 1\nouter 3\n0 0\n1 0\n0 1\nsites 1\n5 5\nend\n"),
                        OutsidePolygon);
    }
}

TEST_CASE("spanner files") {
    Rng rng(12);
    Instance inst;
    inst.domain.outer = random_simple_polygon(40, rng);
    inst.sites = random_sites(inst.domain, 25, rng);
    SimpleSpannerOptions opt;
    opt.variant = Variant::Grouped;
    opt.k = 2;
    SpannerGraph g = build_simple_spanner(inst.polygon(), inst.sites, opt);
    int m = static_cast<int>(inst.domain.outer.vertices.size());
    double ratio = measure(g, all_pairs_geodesic(inst)).max_ratio;
    PathFn path = geodesic_paths(inst.domain);

    SUBCASE("implicit round trip") {
        std::string text = write_spanner(g, m, ratio);
        SpannerFile f = read_spanner(text);
        CHECK(f.header.n == 25);
        CHECK(f.header.edges == g.edges.size());
        CHECK(f.header.variant == Variant::Grouped);
        CHECK_FALSE(f.header.explicit_paths);
        REQUIRE(f.graph.edges.size() == g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            CHECK(f.graph.edges[i].a == g.edges[i].a);
            CHECK(f.graph.edges[i].b == g.edges[i].b);
            CHECK(f.graph.edges[i].via == g.edges[i].via);
            CHECK(f.graph.edges[i].length == g.edges[i].length);
            CHECK(f.graph.edges[i].complexity == g.edges[i].complexity);
        }
        f.graph.sites = inst.sites;
        CHECK(write_spanner(f.graph, m, f.header.ratio) == text);
        auto v = verify_spanner(inst, f);
        CHECK_MESSAGE(v.ok, v.failure);
    }
    SUBCASE("explicit paths match the implicit records") {
        std::string text = write_spanner(g, m, ratio, &path);
        SpannerFile f = read_spanner(text);
        REQUIRE(f.paths.size() == g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            CHECK(f.paths[i].length == doctest::Approx(g.edges[i].length).epsilon(1e-12));
            CHECK(f.paths[i].complexity() == g.edges[i].complexity);
        }
        f.graph.sites = inst.sites;
        CHECK(write_spanner(f.graph, m, f.header.ratio, &path) == text);
        CHECK(verify_spanner(inst, f).ok);
    }
    SUBCASE("mutations are rejected") {
        std::string text = write_spanner(g, m, ratio, &path);
        auto muts = gspan_test::spanner_mutations(text);
        CHECK(muts.size() == 20);
        for (const auto& [name, bad] : muts) {
            CAPTURE(name);
            CHECK(bad != text);
            bool rejected = false;
            try {
                rejected = !verify_spanner(inst, read_spanner(bad)).ok;
            } catch (const ParseError&) {
                rejected = true;
            }
            CHECK(rejected);
        }
    }
}

TEST_CASE("svg") {
    auto lb = gen_lower_bound_3eps(4, 24);
    const auto& inst = lb.instance;
    SUBCASE("instance only") {
        std::string svg = render_svg(inst);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(count(svg, "version=\"1.1\"") == 1);
        CHECK(count(svg, "<circle") == 4);
        CHECK(count(svg, "<polyline") == 0);
        CHECK(count(svg, "<g id=") == 3);
    }
    SUBCASE("domain spanner with via points") {
        Rng rng(2);
        auto dom = random_domain(2, 20, 6, rng);
        Instance di{dom, random_sites(dom, 20, rng), {}};
        auto g = build_domain_spanner(di.domain, di.sites, 1);
        PathFn path = geodesic_paths(di.domain);
        std::string svg = render_svg(di, &g, &path);
        std::size_t via = 0;
        for (const auto& e : g.edges) via += e.via.size();
        CHECK(count(svg, "<polyline") == static_cast<int>(g.edges.size()));
        CHECK(count(svg, "<rect") == static_cast<int>(via));
        CHECK(count(svg, "<path") == 3);
        auto order = std::vector<std::size_t>{svg.find("id=\"outer\""), svg.find("id=\"holes\""),
                                              svg.find("id=\"edges\""), svg.find("id=\"via\""),
                                              svg.find("id=\"sites\"")};
        CHECK(std::is_sorted(order.begin(), order.end()));
    }
    SUBCASE("golden snapshot") {
        SimpleSpannerOptions opt;
        auto g = build_simple_spanner(inst.polygon(), inst.sites, opt);
        PathFn path = geodesic_paths(inst.domain);
        std::string svg = render_svg(inst, &g, &path);
        CHECK(svg == read_file(std::string(GSPAN_GOLDEN_DIR) + "/lb3eps_4_24.svg"));
    }
}
