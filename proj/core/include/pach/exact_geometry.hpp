#pragma once

#include "pach/join_complex.hpp"
#include "pach/random.hpp"
#include "pach/rational.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pach {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept { return hash_value(p.x) * 31 + hash_value(p.y); }
};

struct Segment {
    Point a;
    Point b;
};

/// Infinite line through two distinct points.
struct Line {
    Point a;
    Point b;
};

struct Triangle {
    std::array<Point, 3> v;
};

/// Sign of the determinant of (q - p, r - p): +1 counterclockwise.
int orientation(const Point& p, const Point& q, const Point& r);

enum class Location { inside, boundary, outside };

/// Throws std::invalid_argument for a degenerate triangle.
Location point_in_triangle(const Point& p, const Triangle& t);

/// True when p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

/// 1 for a proper transversal crossing, 0 for disjoint segments. Shared
/// endpoints, endpoints lying on the other segment and collinear overlaps
/// throw DegeneracyError.
int segments_cross_parity(const Segment& s1, const Segment& s2);

/// True when the closed segments share at least one point.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// Images of the vertices of a join complex in the plane, stored in vertex
/// rank order (part-major).
class PointConfiguration {
public:
    PointConfiguration() = default;
    PointConfiguration(int parts, int n, std::vector<Point> points);

    int part_count() const { return parts_; }
    int part_size() const { return n_; }
    std::size_t size() const { return points_.size(); }

    const Point& at(const Vertex& v) const { return points_[index_of(v)]; }
    std::size_t index_of(const Vertex& v) const { return static_cast<std::size_t>(v.part) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v.index); }
    Vertex vertex_at(std::size_t i) const { return Vertex{static_cast<int>(i) / n_, static_cast<int>(i) % n_}; }
    const std::vector<Point>& points() const { return points_; }

private:
    int parts_ = 0;
    int n_ = 0;
    std::vector<Point> points_;
};

struct GeneralPositionViolation {
    enum class Kind { duplicate, collinear };
    Kind kind;
    std::vector<Vertex> vertices;
};

struct GeneralPositionReport {
    std::vector<GeneralPositionViolation> violations;
    bool certified() const { return violations.empty(); }
};

/// Checks every pair for coincidence and every triple for collinearity.
GeneralPositionReport certify_general_position(const PointConfiguration& config);

/// Draws bounded-denominator rational points until the configuration is
/// certified. Throws DegeneracyError after max_tries failures.
PointConfiguration random_configuration(int parts, int n, Rng& rng, int max_tries = 100);

struct CandidateOptions {
    /// Multiplies every offset; any value in (0, 1] keeps each candidate in
    /// the same region.
    Rational epsilon_scale = 1;
    /// Optional region signature; candidates repeating a signature are dropped.
    std::function<std::string(const Point&)> signature;
};

struct CandidateSet {
    std::vector<Point> points;
    /// Outside the bounding box of every input; stands for the point at
    /// infinity and for the unfilled region.
    Point far_point;
    std::size_t arrangement_vertices = 0;
};

/// Region representatives for the arrangement of the given segments and
/// lines. Every vertex of the arrangement (endpoint or intersection point)
/// contributes one point inside each angular wedge around it, so every region
/// with a vertex on its boundary is represented; lines with no vertex
/// contribute one point on each side. No candidate lies on any input.
CandidateSet candidate_points(std::span<const Segment> segments, std::span<const Line> lines, const CandidateOptions& options = {});

}  // namespace pach
