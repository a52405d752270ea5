#include "pach/pl_intersection.hpp"

#include "pach/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace pach {

namespace {

bool point_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct SegmentKey {
    Point lo, hi;
    friend bool operator==(const SegmentKey& a, const SegmentKey& b) { return a.lo == b.lo && a.hi == b.hi; }
};

SegmentKey key_of(const Point& a, const Point& b) { return point_less(a, b) ? SegmentKey{a, b} : SegmentKey{b, a}; }

struct SegmentKeyHash {
    std::size_t operator()(const SegmentKey& k) const noexcept {
        PointHash h;
        return h(k.lo) * 1000003u ^ h(k.hi);
    }
};

std::string describe(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

std::string describe(const Face& f) {
    std::string s = "{";
    for (const auto& v : f.vertices()) {
        if (s.size() > 1) s += ",";
        s += "(" + std::to_string(v.part) + "," + std::to_string(v.index) + ")";
    }
    return s + "}";
}

int polyline_ray_parity(const Polyline& line, const Point& p) {
    int parity = 0;
    for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
        const Point& a = line.points[i];
        const Point& b = line.points[i + 1];
        const auto& [lox, hix] = std::minmax(a.x, b.x);
        if (p.x < lox || p.x > hix) continue;
        if (on_segment(p, {a, b})) throw DegeneracyError("point lies on an edge polyline: " + describe(p));
        if ((a.x <= p.x) == (b.x <= p.x)) continue;
        const Point& left = a.x < b.x ? a : b;
        const Point& right = a.x < b.x ? b : a;
        if (orientation(left, right, p) < 0) parity ^= 1;
    }
    return parity;
}

}  // namespace

PLMap affine_map(const PointConfiguration& config) {
    if (config.part_count() != 3) throw std::invalid_argument("affine_map: configuration must have 3 parts");
    PLMap map;
    map.complex = JoinComplex(2, config.part_size());
    map.vertices = config;
    for (const auto& e : map.complex.faces(1)) {
        const auto& vs = e.vertices();
        map.edges.push_back(Polyline{{config.at(vs[0]), config.at(vs[1])}});
    }
    for (const auto& f : map.complex.faces(2)) {
        const auto& vs = f.vertices();
        map.faces.push_back({Triangle{{config.at(vs[0]), config.at(vs[1]), config.at(vs[2])}}});
    }
    return map;
}

PLMap random_affine_map(int n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xaff1));
    for (int attempt = 0; attempt < 50; ++attempt) {
        PLMap map = affine_map(random_configuration(3, n, rng));
        if (validate_map(map, 1).valid()) return map;
    }
    throw DegeneracyError("random_affine_map: no generic configuration within the retry budget");
}

std::vector<Segment> edge_segments(const PLMap& map) {
    std::vector<Segment> out;
    for (const auto& e : map.edges)
        for (std::size_t i = 0; i < e.segment_count(); ++i) out.push_back(e.segment(i));
    return out;
}

std::vector<Segment> map_segments(const PLMap& map) {
    std::unordered_set<SegmentKey, SegmentKeyHash> seen;
    std::vector<Segment> out;
    auto add = [&](const Point& a, const Point& b) {
        if (seen.insert(key_of(a, b)).second) out.push_back({a, b});
    };
    for (const auto& e : map.edges)
        for (std::size_t i = 0; i < e.segment_count(); ++i) add(e.points[i], e.points[i + 1]);
    for (const auto& tris : map.faces)
        for (const auto& t : tris)
            for (int i = 0; i < 3; ++i) add(t.v[i], t.v[(i + 1) % 3]);
    return out;
}

MapValidationReport validate_map(const PLMap& map, std::size_t max_listed) {
    MapValidationReport report;
    auto flag = [&](std::string kind, std::string detail) {
        ++report.violation_count;
        if (report.violations.size() < max_listed) report.violations.push_back({std::move(kind), std::move(detail)});
    };
    const JoinComplex& X = map.complex;
    if (X.dimension() != 2) {
        flag("shape", "only 2-dimensional maps are supported");
        return report;
    }
    if (map.vertices.size() != X.face_count(0) || map.vertices.part_count() != 3 || map.vertices.part_size() != X.part_size()) {
        flag("shape", "vertex image count does not match the complex");
        return report;
    }
    if (map.edges.size() != X.face_count(1) || map.faces.size() != X.face_count(2)) {
        flag("shape", "edge or face image count does not match the complex");
        return report;
    }

    for (std::uint64_t r = 0; r < map.edges.size(); ++r) {
        const Face e = X.unrank(1, r);
        const auto& pts = map.edges[r].points;
        if (pts.size() < 2) {
            flag("edge", "polyline of edge " + describe(e) + " has fewer than 2 points");
            continue;
        }
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1]) flag("edge", "repeated consecutive point in edge " + describe(e));
        if (!(pts.front() == map.vertices.at(e.vertices()[0])) || !(pts.back() == map.vertices.at(e.vertices()[1])))
            flag("endpoint", "edge " + describe(e) + " does not join its vertex images");
    }

    for (std::uint64_t r = 0; r < map.faces.size(); ++r) {
        const Face f = X.unrank(2, r);
        std::unordered_map<SegmentKey, int, SegmentKeyHash> parity;
        bool degenerate = false;
        for (const auto& t : map.faces[r]) {
            if (orientation(t.v[0], t.v[1], t.v[2]) == 0) {
                flag("face", "degenerate triangle in face " + describe(f));
                degenerate = true;
                continue;
            }
            for (int i = 0; i < 3; ++i) parity[key_of(t.v[i], t.v[(i + 1) % 3])] ^= 1;
        }
        if (degenerate) continue;
        for (int part = 0; part < 3; ++part) {
            const Polyline& line = map.edges[X.rank(opposite_face(X, f, part))];
            for (std::size_t i = 0; i + 1 < line.points.size(); ++i) parity[key_of(line.points[i], line.points[i + 1])] ^= 1;
        }
        for (const auto& [k, v] : parity)
            if (v) {
                flag("boundary", "triangle list of face " + describe(f) + " does not bound its edge images (segment " +
                                     describe(k.lo) + "-" + describe(k.hi) + ")");
                break;
            }
    }

    const std::vector<Segment> segs = map_segments(map);
    report.segments_checked = segs.size();
    struct Box {
        Rational lox, hix, loy, hiy;
    };
    std::vector<Box> boxes;
    boxes.reserve(segs.size());
    for (const auto& s : segs) boxes.push_back({std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)});
    // Sweep by left edge of the bounding box.
    std::vector<std::size_t> order(segs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].lox < boxes[b].lox; });

    std::unordered_map<Point, std::vector<std::size_t>, PointHash> crossings;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        const Segment& s = segs[i];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].lox > boxes[i].hix) break;
            if (boxes[j].hiy < boxes[i].loy || boxes[j].loy > boxes[i].hiy) continue;
            const Segment& t = segs[j];
            const bool shared = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
            const int o1 = orientation(s.a, s.b, t.a);
            const int o2 = orientation(s.a, s.b, t.b);
            if (o1 == 0 && o2 == 0) {
                // Collinear: anything beyond a single shared endpoint is an overlap.
                const bool overlap = (on_segment(t.a, s) && !(t.a == s.a || t.a == s.b)) ||
                                     (on_segment(t.b, s) && !(t.b == s.a || t.b == s.b)) ||
                                     (on_segment(s.a, t) && !(s.a == t.a || s.a == t.b)) ||
                                     (on_segment(s.b, t) && !(s.b == t.a || s.b == t.b));
                if (overlap) flag("overlap", "collinear overlap " + describe(s.a) + "-" + describe(s.b) + " / " + describe(t.a) + "-" + describe(t.b));
                continue;
            }
            const int o3 = orientation(t.a, t.b, s.a);
            const int o4 = orientation(t.a, t.b, s.b);
            if (shared) {
                // Sharing an endpoint is fine unless the other endpoint also touches.
                continue;
            }
            if ((o1 == 0 && on_segment(t.a, s)) || (o2 == 0 && on_segment(t.b, s)) || (o3 == 0 && on_segment(s.a, t)) ||
                (o4 == 0 && on_segment(s.b, t))) {
                flag("incidence", "segment endpoint lies on segment " + describe(s.a) + "-" + describe(s.b) + " / " +
                                      describe(t.a) + "-" + describe(t.b));
                continue;
            }
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                const Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
                const Rational ex = t.b.x - t.a.x, ey = t.b.y - t.a.y;
                const Rational u = ((t.a.x - s.a.x) * ey - (t.a.y - s.a.y) * ex) / (dx * ey - dy * ex);
                Point p{s.a.x + u * dx, s.a.y + u * dy};
                auto& list = crossings[p];
                list.push_back(i);
                list.push_back(j);
            }
        }
    }
    for (const auto& [p, list] : crossings) {
        std::vector<std::size_t> distinct = list;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() >= 3) flag("concurrency", std::to_string(distinct.size()) + " segments cross at " + describe(p));
    }
    return report;
}

int point_face_parity(const PLMap& map, const Face& face, const Point& p) {
    const std::uint64_t r = map.complex.rank(face);
    if (face.dimension() != 2) throw std::invalid_argument("point_face_parity: face must be a triangle");
    int parity = 0;
    for (const auto& t : map.faces[r]) {
        switch (point_in_triangle(p, t)) {
            case Location::inside: parity ^= 1; break;
            case Location::boundary: throw DegeneracyError("point_face_parity: point on a filling segment of " + describe(face));
            case Location::outside: break;
        }
    }
    return parity;
}

int boundary_ray_parity(const PLMap& map, const Face& face, const Point& p) {
    if (face.dimension() != 2) throw std::invalid_argument("boundary_ray_parity: face must be a triangle");
    int parity = 0;
    for (int part = 0; part < 3; ++part)
        parity ^= polyline_ray_parity(map.edges[map.complex.rank(opposite_face(map.complex, face, part))], p);
    return parity;
}

BitVector edge_ray_parities(const PLMap& map, const Point& p) {
    BitVector out(map.edges.size());
    for (std::size_t r = 0; r < map.edges.size(); ++r)
        if (polyline_ray_parity(map.edges[r], p)) out.set(r);
    return out;
}

int edge_path_parity(const PLMap& map, const Face& edge, const Polyline& path) {
    if (edge.dimension() != 1) throw std::invalid_argument("edge_path_parity: face must be an edge");
    const Polyline& image = map.edges[map.complex.rank(edge)];
    int parity = 0;
    for (std::size_t i = 0; i < image.segment_count(); ++i) {
        const Segment s = image.segment(i);
        for (std::size_t j = 0; j < path.segment_count(); ++j) parity ^= segments_cross_parity(s, path.segment(j));
    }
    return parity;
}

bool boundary_identity_check(const PLMap& map, const Face& face, const Polyline& path) {
    if (path.points.size() < 2) throw std::invalid_argument("boundary_identity_check: path needs two points");
    int lhs = 0;
    for (int part = 0; part < 3; ++part) lhs ^= edge_path_parity(map, opposite_face(map.complex, face, part), path);
    const int rhs = point_face_parity(map, face, path.points.front()) ^ point_face_parity(map, face, path.points.back());
    return lhs == rhs;
}

}  // namespace pach
