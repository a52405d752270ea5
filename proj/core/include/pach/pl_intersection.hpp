#pragma once

#include "pach/bitvector.hpp"
#include "pach/exact_geometry.hpp"
#include "pach/join_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pach {

struct Polyline {
    std::vector<Point> points;

    std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
    Segment segment(std::size_t i) const { return {points[i], points[i + 1]}; }
};

/// Piecewise-linear map of the 2-dimensional join complex into the plane.
/// edges[r] is the image of the 1-face of rank r, running from its
/// lower-part vertex to its higher-part vertex; faces[r] is the triangle
/// list filling the 2-face of rank r.
struct PLMap {
    JoinComplex complex{2, 1};
    PointConfiguration vertices;
    std::vector<Polyline> edges;
    std::vector<std::vector<Triangle>> faces;
};

/// Straight edges and single-triangle faces.
PLMap affine_map(const PointConfiguration& config);

/// Random certified configuration, redrawn until the affine map validates.
PLMap random_affine_map(int n, std::uint64_t seed);

struct MapViolation {
    std::string kind;
    std::string detail;
};

struct MapValidationReport {
    std::vector<MapViolation> violations;
    std::size_t violation_count = 0;  // may exceed violations.size()
    std::size_t segments_checked = 0;
    bool valid() const { return violation_count == 0; }
};

/// Checks endpoint matching, the mod-2 boundary condition of every face's
/// triangle list against its three edge polylines, and pairwise genericity of
/// all distinct segments: no collinear overlaps, no endpoint inside another
/// segment, no three segments through one crossing point.
MapValidationReport validate_map(const PLMap& map, std::size_t max_listed = 64);

/// Parity of the number of triangles of the face's filling containing p.
/// Throws DegeneracyError if p lies on a triangle edge.
int point_face_parity(const PLMap& map, const Face& face, const Point& p);

/// Same parity computed from the face boundary alone: vertical-ray crossing
/// parity against the three edge polylines.
int boundary_ray_parity(const PLMap& map, const Face& face, const Point& p);

/// Vertical-ray crossing parity of every edge polyline, indexed by edge rank.
/// The parity of a face is the xor over its three edges. Throws
/// DegeneracyError if p lies on an edge polyline.
BitVector edge_ray_parities(const PLMap& map, const Point& p);

/// Intersection number of the edge image with the path R over F2.
int edge_path_parity(const PLMap& map, const Face& edge, const Polyline& path);

/// Whether sum_i edge_path_parity(sigma_i, R) equals
/// point_face_parity(sigma, start) + point_face_parity(sigma, end).
bool boundary_identity_check(const PLMap& map, const Face& face, const Polyline& path);

/// Every distinct segment of the map (edge polylines and triangle edges).
std::vector<Segment> map_segments(const PLMap& map);
/// Segments of the edge polylines only.
std::vector<Segment> edge_segments(const PLMap& map);

}  // namespace pach
