#include "gspan/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <fstream>
#include <sstream>

namespace gspan {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

struct Lines {
    std::vector<std::string> lines;
    std::size_t at = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            lines.push_back(line);
        }
    }
    bool done() const { return at >= lines.size(); }
    const std::string& next() {
        if (done()) throw ParseError("unexpected end of file");
        return lines[at++];
    }
};

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("bad number '" + s + "'");
    return v;
}

long parse_int(const std::string& s) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& s) {
    long v = parse_int(s);
    if (v < 0) throw ParseError("negative count");
    return static_cast<std::size_t>(v);
}

std::string point_line(const Point& p) { return format_double(p.x) + " " + format_double(p.y); }

std::vector<Point> read_points(Lines& in, std::size_t count) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto w = split(in.next());
        if (w.size() != 2) throw ParseError("expected 'x y'");
        out.push_back({parse_double(w[0]), parse_double(w[1])});
    }
    return out;
}

void expect_header(Lines& in, const std::string& magic) {
    auto w = split(in.next());
    if (w.size() != 2 || w[0] != magic) throw ParseError("missing '" + magic + "' header");
    if (w[1] != "1") throw ParseError("unsupported version " + w[1]);
}

// Chord feet are computed in floating point and may sit a rounding error outside.
bool within_snap(const PolygonalDomain& dom, const Point& p) {
    BBox b = bounding_box(dom.outer.vertices);
    double tol = 1e-9 * std::hypot(b.xmax - b.xmin, b.ymax - b.ymin);
    for (const auto* ring : dom.rings())
        for (std::size_t i = 0; i < ring->size(); ++i) {
            Point a = (*ring)[i], d = (*ring)[(i + 1) % ring->size()] - a;
            double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
            if (dist(p, a + d * t) <= tol) return true;
        }
    return false;
}

}  // namespace

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << "gspan-instance 1\n";
    for (const auto& [k, v] : inst.meta) out << "meta " << k << " " << v << "\n";
    auto ring = [&](const char* tag, const std::vector<Point>& pts) {
        out << tag << " " << pts.size() << "\n";
        for (const auto& p : pts) out << point_line(p) << "\n";
    };
    ring("outer", inst.domain.outer.vertices);
    for (const auto& h : inst.domain.holes) ring("hole", h.vertices);
    ring("sites", inst.sites);
    out << "end\n";
    return out.str();
}

Instance read_instance(const std::string& text) {
    Lines in(text);
    expect_header(in, "gspan-instance");
    Instance inst;
    bool outer = false, sites = false;
    for (;;) {
        const std::string& line = in.next();
        auto w = split(line);
        if (w.empty()) continue;
        if (w[0] == "end") break;
        if (w[0] == "meta") {
            if (w.size() < 3) throw ParseError("meta needs a key and a value");
            std::istringstream ls(line);
            std::string tag, key, value;
            ls >> tag >> key;
            std::getline(ls >> std::ws, value);
            inst.meta.push_back({key, value});
            continue;
        }
        if (w.size() != 2) throw ParseError("bad section line '" + line + "'");
        std::size_t count = parse_count(w[1]);
        if (w[0] == "outer") {
            if (outer) throw ParseError("two outer boundaries");
            inst.domain.outer.vertices = read_points(in, count);
            outer = true;
        } else if (w[0] == "hole") {
            inst.domain.holes.push_back(SimplePolygon{read_points(in, count)});
        } else if (w[0] == "sites") {
            if (sites) throw ParseError("two site lists");
            inst.sites = read_points(in, count);
            sites = true;
        } else {
            throw ParseError("unknown section '" + w[0] + "'");
        }
    }
    if (!in.done()) throw ParseError("text after 'end'");
    if (!outer) throw ParseError("missing outer boundary");
    validate_domain(inst.domain);
    for (const auto& p : inst.sites)
        if (locate_in_domain(inst.domain, p) == Location::Outside) throw OutsidePolygon("site outside the free space");
    return inst;
}

std::string write_spanner(const SpannerGraph& g, int m, double ratio, const PathFn* expand) {
    std::ostringstream out;
    out << "gspan-spanner 1\n";
    out << "n " << g.sites.size() << " m " << m << " k " << g.k << " eps " << format_double(g.eps) << " variant "
        << variant_name(g.variant) << " ratio " << format_double(ratio) << " edges " << g.edges.size() << " mode "
        << (expand ? "explicit" : "implicit") << "\n";
    for (const auto& e : g.edges) {
        out << "edge " << e.a << " " << e.b << " " << format_double(e.length) << " " << e.complexity << " " << e.depth
            << " " << e.via.size();
        for (const auto& p : e.via) out << " " << point_line(p);
        out << "\n";
        if (expand) {
            GeodesicPath path = expand_edge(g, e, *expand);
            out << "path " << path.points.size();
            for (const auto& p : path.points) out << " " << point_line(p);
            out << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

SpannerFile read_spanner(const std::string& text) {
    Lines in(text);
    expect_header(in, "gspan-spanner");
    SpannerFile f;
    auto w = split(in.next());
    if (w.size() != 16) throw ParseError("bad spanner header");
    const char* keys[] = {"n", "m", "k", "eps", "variant", "ratio", "edges", "mode"};
    for (int i = 0; i < 8; ++i)
        if (w[2 * i] != keys[i]) throw ParseError(std::string("expected '") + keys[i] + "' in header");
    auto& H = f.header;
    H.n = static_cast<int>(parse_count(w[1]));
    H.m = static_cast<int>(parse_count(w[3]));
    H.k = static_cast<int>(parse_int(w[5]));
    H.eps = parse_double(w[7]);
    try {
        H.variant = parse_variant(w[9]);
    } catch (const InvalidParams&) {
        throw ParseError("unknown variant '" + w[9] + "'");
    }
    H.ratio = parse_double(w[11]);
    H.edges = parse_count(w[13]);
    if (w[15] != "implicit" && w[15] != "explicit") throw ParseError("unknown mode '" + w[15] + "'");
    H.explicit_paths = w[15] == "explicit";
    f.graph.k = H.k;
    f.graph.eps = H.eps;
    f.graph.variant = H.variant;
    for (;;) {
        auto t = split(in.next());
        if (t.empty()) continue;
        if (t[0] == "end") break;
        if (t[0] == "edge") {
            if (t.size() < 7) throw ParseError("short edge record");
            SpannerEdge e;
            e.a = static_cast<int>(parse_int(t[1]));
            e.b = static_cast<int>(parse_int(t[2]));
            if (e.a < 0 || e.b < 0 || e.a >= H.n || e.b >= H.n || e.a == e.b) throw ParseError("bad edge endpoints");
            e.length = parse_double(t[3]);
            e.complexity = static_cast<int>(parse_int(t[4]));
            e.depth = static_cast<int>(parse_int(t[5]));
            std::size_t nv = parse_count(t[6]);
            if (nv > 2 || t.size() != 7 + 2 * nv) throw ParseError("bad via list");
            for (std::size_t i = 0; i < nv; ++i) e.via.push_back({parse_double(t[7 + 2 * i]), parse_double(t[8 + 2 * i])});
            f.graph.edges.push_back(std::move(e));
        } else if (t[0] == "path") {
            if (!H.explicit_paths || f.paths.size() + 1 != f.graph.edges.size()) throw ParseError("unexpected path record");
            if (t.size() < 2) throw ParseError("short path record");
            std::size_t np = parse_count(t[1]);
            if (t.size() != 2 + 2 * np) throw ParseError("bad path record");
            GeodesicPath p;
            for (std::size_t i = 0; i < np; ++i) {
                p.points.push_back({parse_double(t[2 + 2 * i]), parse_double(t[3 + 2 * i])});
                p.ids.push_back(kChordPoint);
            }
            if (!p.points.empty()) {
                p.ids.front() = kPathStart;
                p.ids.back() = kPathEnd;
            }
            p.recompute_length();
            f.paths.push_back(std::move(p));
        } else {
            throw ParseError("unknown record '" + t[0] + "'");
        }
    }
    if (!in.done()) throw ParseError("text after 'end'");
    if (f.graph.edges.size() != H.edges) throw ParseError("edge count does not match the header");
    if (H.explicit_paths && f.paths.size() != f.graph.edges.size()) throw ParseError("missing explicit paths");
    return f;
}

double ratio_bound(Variant v, int k, double eps) {
    switch (v) {
        case Variant::Plain: return 2 * std::sqrt(2.0);
        case Variant::Grouped: return 2 * std::sqrt(2.0) * k;
        case Variant::Refined: return 2.0 * k + eps;
        case Variant::Domain: return 6.0 * k;
    }
    return 0;
}

VerifyResult verify_spanner(const Instance& inst, const SpannerFile& file, double rel_tol) {
    VerifyResult out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.failure = std::move(why);
        return out;
    };
    const auto& H = file.header;
    int m = static_cast<int>(inst.domain.outer.vertices.size());
    for (const auto& h : inst.domain.holes) m += static_cast<int>(h.vertices.size());
    if (H.n != static_cast<int>(inst.sites.size())) return fail("header n differs from the instance");
    if (H.m != m) return fail("header m differs from the instance");
    if (H.k < 1) return fail("header k below 1");
    SpannerGraph g = file.graph;
    g.sites = inst.sites;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (!seen.insert(std::minmax(e.a, e.b)).second)
            return fail("duplicate edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
        for (const auto& p : e.via)
            if (locate_in_domain(inst.domain, p) == Location::Outside && !within_snap(inst.domain, p))
                return fail("edge " + std::to_string(i) + " has a via point outside the free space");
    }
    PathFn path = geodesic_paths(inst.domain);
    auto close = [&](double a, double b) { return std::abs(a - b) <= rel_tol * std::max(1.0, std::abs(b)); };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        GeodesicPath full = expand_edge(g, e, path);
        std::string id = "edge " + std::to_string(i) + " (" + std::to_string(e.a) + "-" + std::to_string(e.b) + ")";
        if (!close(e.length, full.length))
            return fail("length mismatch on " + id + ": declared " + format_double(e.length) + ", expanded " +
                        format_double(full.length));
        if (e.complexity != full.complexity())
            return fail("complexity mismatch on " + id + ": declared " + std::to_string(e.complexity) +
                        ", expanded " + std::to_string(full.complexity()));
        if (H.explicit_paths) {
            const auto& ex = file.paths[i];
            bool same = ex.points.size() == full.points.size();
            for (std::size_t q = 0; same && q < ex.points.size(); ++q)
                same = close(ex.points[q].x, full.points[q].x) && close(ex.points[q].y, full.points[q].y);
            if (!same) return fail("explicit path of " + id + " differs from its expansion");
        }
    }
    out.report = measure(g, all_pairs_geodesic(inst.domain, inst.sites));
    out.report.m = m;
    const auto& r = out.report;
    if (r.disconnected)
        return fail("DisconnectedGraph: no path between sites " + std::to_string(r.witness_a) + " and " +
                    std::to_string(r.witness_b));
    if (!close(H.ratio, r.max_ratio))
        return fail("header ratio " + format_double(H.ratio) + " differs from measured " + format_double(r.max_ratio));
    double bound = ratio_bound(H.variant, H.k, H.eps);
    if (r.max_ratio > bound + 1e-9)
        return fail("ratio " + format_double(r.max_ratio) + " exceeds the bound " + format_double(bound) +
                    " at sites " + std::to_string(r.witness_a) + " and " + std::to_string(r.witness_b));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace gspan
