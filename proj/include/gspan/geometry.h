#pragma once
// Planar primitives: points, exact orientation, polygons and domains.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspan {

struct Point {
    double x = 0;
    double y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// (x, y) lexicographic order; this is the symbolic shear used for vertical sweeps.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct InvalidPolygon : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutsidePolygon : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidChord : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sign of the determinant |b-a, c-a|: +1 iff c lies strictly left of a->b.
// Exact for all finite double inputs barring underflow of the products.
int orient(const Point& a, const Point& b, const Point& c);

// Closed segment test, exact.
bool on_segment(const Point& p, const Point& a, const Point& b);
// Open segments cross at a single interior point of both.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);
// Closed segments share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

double signed_area(const std::vector<Point>& ring);

struct SimplePolygon {
    std::vector<Point> vertices;  // counterclockwise

    std::size_t size() const { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i]; }
    const Point& at_wrapped(long i) const {
        long m = static_cast<long>(vertices.size());
        return vertices[static_cast<std::size_t>(((i % m) + m) % m)];
    }
    double area() const { return signed_area(vertices); }
};

struct PolygonalDomain {
    SimplePolygon outer;
    std::vector<SimplePolygon> holes;  // clockwise

    std::size_t vertex_count() const;
    // All boundary rings, outer first. Free space lies left of every directed edge.
    std::vector<const std::vector<Point>*> rings() const;
};

enum class Location { Inside, Boundary, Outside };

Location locate_in_ring(const std::vector<Point>& ring, const Point& p);
Location locate_in_domain(const PolygonalDomain& dom, const Point& p);

// Throws InvalidPolygon with a reason.
void validate_polygon(const SimplePolygon& poly);
void validate_domain(const PolygonalDomain& dom);

// Vertices whose interior angle toward the free space exceeds pi.
std::size_t reflex_count(const PolygonalDomain& dom);

struct BBox {
    double xmin, ymin, xmax, ymax;
};
BBox bounding_box(const std::vector<Point>& pts);

}  // namespace gspan
