// Command line front end: gen, build, verify, render and bench.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#include "gspan/domain_spanner.h"
#include "gspan/io.h"
#include "gspan/oracle.h"
#include "gspan/refinement.h"
#include "gspan/simple_spanner.h"
#include "gspan/svg.h"

using namespace gspan;

namespace {

constexpr int kExitParams = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitBound = 4;

struct Options {
    std::string family = "random_simple";
    int n = 20, m = 50, h = 2, hole_m = 8;
    double spike = 1.0, aperture = 1e-6;
    std::uint64_t seed = 1;
    std::string instance, spanner, out;
    std::string variant = "plain", mode = "implicit";
    int k = 1;
    double eps = 0.5;
    std::vector<int> ks{1, 2}, ns{64, 128, 256};
    int m_per_site = 8;
};

int vertex_count(const PolygonalDomain& d) {
    int m = static_cast<int>(d.outer.vertices.size());
    for (const auto& h : d.holes) m += static_cast<int>(h.vertices.size());
    return m;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_file(o.out, text);
}

void print_report(const SpannerReport& r, double seconds) {
    std::printf("n=%d m=%d k=%d eps=%s variant=%s edges=%zu complexity=%ld ratio=%s mean_ratio=%s seconds=%.3f\n", r.n,
                r.m, r.k, format_double(r.eps).c_str(), r.variant.c_str(), r.edges, r.complexity,
                format_double(r.max_ratio).c_str(), format_double(r.mean_ratio).c_str(), seconds);
}

int cmd_gen(const Options& o) {
    Rng rng(o.seed);
    Instance inst;
    auto p = [](auto v) { return std::to_string(v); };
    if (o.family == "lb3eps") {
        inst = gen_lower_bound_3eps(o.n, o.m, o.spike, o.aperture).instance;
    } else if (o.family == "lbgeneral") {
        inst = gen_lower_bound_general(o.n, o.m, o.spike, o.aperture).instance;
    } else if (o.family == "random_simple") {
        if (o.n < 0) throw InvalidParams("n must be non-negative");
        inst.domain.outer = random_simple_polygon(o.m, rng);
        inst.sites = random_sites(inst.domain, o.n, rng);
        inst.meta = {{"generator", "random_simple"}, {"n", p(o.n)}, {"m", p(o.m)}};
    } else if (o.family == "random_domain") {
        if (o.n < 0 || o.h < 0) throw InvalidParams("n and h must be non-negative");
        inst.domain = random_domain(o.h, o.m, o.hole_m, rng);
        inst.sites = random_sites(inst.domain, o.n, rng);
        inst.meta = {{"generator", "random_domain"}, {"n", p(o.n)}, {"m", p(o.m)}, {"h", p(o.h)},
                     {"hole_m", p(o.hole_m)}};
    } else {
        throw InvalidParams("unknown family " + o.family);
    }
    inst.meta.push_back({"seed", std::to_string(o.seed)});
    validate_domain(inst.domain);
    emit(o, write_instance(inst));
    return 0;
}

SpannerGraph construct(const Instance& inst, const Options& o) {
    Variant v = parse_variant(o.variant);
    if (o.k < 1) throw InvalidParams("k must be at least 1");
    if (v != Variant::Domain && !inst.domain.holes.empty())
        throw InvalidParams("variant " + o.variant + " needs a simple polygon; use --variant domain");
    switch (v) {
        case Variant::Plain:
        case Variant::Grouped: {
            SimpleSpannerOptions opt;
            opt.variant = v;
            opt.k = v == Variant::Plain ? 1 : o.k;
            return build_simple_spanner(inst.polygon(), inst.sites, opt);
        }
        case Variant::Refined: return build_refined_spanner(inst.polygon(), inst.sites, o.k, o.eps);
        case Variant::Domain: return build_domain_spanner(inst.domain, inst.sites, o.k);
    }
    throw InvalidParams("unknown variant");
}

int cmd_build(const Options& o) {
    if (o.mode != "implicit" && o.mode != "explicit") throw InvalidParams("mode must be implicit or explicit");
    Instance inst = read_instance(read_file(o.instance));
    auto t0 = std::chrono::steady_clock::now();
    SpannerGraph g = construct(inst, o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    SpannerReport r = measure(g, all_pairs_geodesic(inst));
    r.m = vertex_count(inst.domain);
    PathFn path = geodesic_paths(inst.domain);
    emit(o, write_spanner(g, r.m, r.max_ratio, o.mode == "explicit" ? &path : nullptr));
    if (!o.out.empty()) print_report(r, secs);
    return 0;
}

int cmd_verify(const Options& o) {
    Instance inst = read_instance(read_file(o.instance));
    SpannerFile f = read_spanner(read_file(o.spanner));
    VerifyResult v = verify_spanner(inst, f);
    if (!v.ok) {
        std::fprintf(stderr, "verify failed: %s\n", v.failure.c_str());
        return kExitBound;
    }
    print_report(v.report, 0);
    return 0;
}

int cmd_render(const Options& o) {
    Instance inst = read_instance(read_file(o.instance));
    if (o.spanner.empty()) {
        emit(o, render_svg(inst));
        return 0;
    }
    SpannerFile f = read_spanner(read_file(o.spanner));
    if (f.header.n != static_cast<int>(inst.sites.size())) throw InvalidParams("spanner and instance differ in n");
    f.graph.sites = inst.sites;
    PathFn path = geodesic_paths(inst.domain);
    emit(o, render_svg(inst, &f.graph, &path));
    return 0;
}

int cmd_bench(const Options& o) {
    for (int k : o.ks)
        if (k < 1) throw InvalidParams("k must be at least 1");
    for (int n : o.ns)
        if (n < 2) throw InvalidParams("n must be at least 2");
    ScalingResult res = scaling_experiment(o.ks, o.ns, o.m_per_site);
    std::string text = "n,m,k,edges,complexity,seconds\n";
    for (const auto& r : res.rows)
        text += std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.k) + "," +
                std::to_string(r.edges) + "," + std::to_string(r.complexity) + "," + format_double(r.seconds) + "\n";
    emit(o, text);
    for (int k : o.ks) {
        std::vector<double> xs, ys, per_m;
        for (const auto& r : res.rows)
            if (r.k == k) {
                xs.push_back(r.n);
                ys.push_back(static_cast<double>(r.complexity));
                per_m.push_back(static_cast<double>(r.complexity) / r.m);
            }
        std::fprintf(stderr, "k=%d slope=%.4f slope_per_m=%.4f\n", k, loglog_slope(xs, ys), loglog_slope(xs, per_m));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic spanners in polygons and polygonal domains"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", o.family, "lb3eps, lbgeneral, random_simple or random_domain")
        ->check(CLI::IsMember({"lb3eps", "lbgeneral", "random_simple", "random_domain"}));
    gen->add_option("--n", o.n, "Number of sites");
    gen->add_option("--m", o.m, "Polygon complexity (outer boundary for domains)");
    gen->add_option("--holes", o.h, "Number of holes");
    gen->add_option("--hole-m", o.hole_m, "Vertices per hole");
    gen->add_option("--spike", o.spike, "Spike length of the lower-bound families");
    gen->add_option("--aperture", o.aperture, "Corridor width over spike length");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--out", o.out, "Output file (default stdout)");

    auto* build = app.add_subcommand("build", "Build a spanner for an instance");
    build->add_option("instance", o.instance, "Instance file")->required();
    build->add_option("--variant", o.variant, "plain, grouped, refined or domain")
        ->check(CLI::IsMember({"plain", "grouped", "refined", "domain"}));
    build->add_option("--k", o.k, "Group recursion depth");
    build->add_option("--eps", o.eps, "Additive slack of the refined variant");
    build->add_option("--mode", o.mode, "implicit or explicit")->check(CLI::IsMember({"implicit", "explicit"}));
    build->add_option("--seed", o.seed, "Random seed (construction is deterministic)");
    build->add_option("--out", o.out, "Spanner file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a spanner file against its instance");
    verify->add_option("instance", o.instance, "Instance file")->required();
    verify->add_option("spanner", o.spanner, "Spanner file")->required();

    auto* render = app.add_subcommand("render", "Render an instance and optionally a spanner to SVG");
    render->add_option("instance", o.instance, "Instance file")->required();
    render->add_option("--spanner", o.spanner, "Spanner file");
    render->add_option("--out", o.out, "SVG file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Complexity scaling on the general lower-bound family");
    bench->add_option("--k", o.ks, "Values of k")->delimiter(',');
    bench->add_option("--n", o.ns, "Site counts")->delimiter(',');
    bench->add_option("--m-per-site", o.m_per_site, "Polygon vertices per site");
    bench->add_option("--seed", o.seed, "Random seed (the family is deterministic)");
    bench->add_option("--out", o.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParams;
    }
    try {
        if (*gen) return cmd_gen(o);
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify(o);
        if (*render) return cmd_render(o);
        if (*bench) return cmd_bench(o);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParams;
    } catch (const InvalidParams& e) {
        std::fprintf(stderr, "invalid parameters: %s\n", e.what());
        return kExitParams;
    } catch (const InvalidPolygon& e) {
        std::fprintf(stderr, "invalid geometry: %s\n", e.what());
        return kExitGeometry;
    } catch (const OutsidePolygon& e) {
        std::fprintf(stderr, "invalid geometry: %s\n", e.what());
        return kExitGeometry;
    } catch (const DegenerateInput& e) {
        std::fprintf(stderr, "invalid geometry: %s\n", e.what());
        return kExitGeometry;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParams;
    }
    return kExitParams;
}
