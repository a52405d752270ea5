#include "pach/exact_geometry.hpp"

#include "pach/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pach {

namespace {

int sign(const Rational& v) { return sgn(v); }

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) { return ax * by - ay * bx; }

Rational abs_value(const Rational& v) { return sgn(v) < 0 ? Rational(-v) : v; }

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign(det);
}

Location point_in_triangle(const Point& p, const Triangle& t) {
    const int o = orientation(t.v[0], t.v[1], t.v[2]);
    if (o == 0) throw std::invalid_argument("point_in_triangle: degenerate triangle");
    const int s0 = o * orientation(t.v[0], t.v[1], p);
    const int s1 = o * orientation(t.v[1], t.v[2], p);
    const int s2 = o * orientation(t.v[2], t.v[0], p);
    if (s0 < 0 || s1 < 0 || s2 < 0) return Location::outside;
    if (s0 == 0 || s1 == 0 || s2 == 0) return Location::boundary;
    return Location::inside;
}

bool on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    const auto& [lox, hix] = std::minmax(s.a.x, s.b.x);
    const auto& [loy, hiy] = std::minmax(s.a.y, s.b.y);
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

int segments_cross_parity(const Segment& s1, const Segment& s2) {
    if (s1.a == s1.b || s2.a == s2.b) throw std::invalid_argument("segments_cross_parity: zero-length segment");
    if (on_segment(s2.a, s1) || on_segment(s2.b, s1) || on_segment(s1.a, s2) || on_segment(s1.b, s2))
        throw DegeneracyError("segments_cross_parity: segments touch at an endpoint or overlap");
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);
    return (o1 * o2 < 0 && o3 * o4 < 0) ? 1 : 0;
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(s2.a, s1) || on_segment(s2.b, s1) || on_segment(s1.a, s2) || on_segment(s1.b, s2);
}

PointConfiguration::PointConfiguration(int parts, int n, std::vector<Point> points)
    : parts_(parts), n_(n), points_(std::move(points)) {
    if (parts < 1 || n < 1) throw std::invalid_argument("PointConfiguration: parts and n must be positive");
    if (points_.size() != static_cast<std::size_t>(parts) * static_cast<std::size_t>(n))
        throw std::invalid_argument("PointConfiguration: expected parts * n points");
}

GeneralPositionReport certify_general_position(const PointConfiguration& config) {
    GeneralPositionReport report;
    const auto& pts = config.points();
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pts[i] == pts[j])
                report.violations.push_back({GeneralPositionViolation::Kind::duplicate, {config.vertex_at(i), config.vertex_at(j)}});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (pts[i] == pts[j]) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (pts[k] == pts[i] || pts[k] == pts[j]) continue;
                if (orientation(pts[i], pts[j], pts[k]) == 0)
                    report.violations.push_back({GeneralPositionViolation::Kind::collinear,
                                                 {config.vertex_at(i), config.vertex_at(j), config.vertex_at(k)}});
            }
        }
    return report;
}

PointConfiguration random_configuration(int parts, int n, Rng& rng, int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(parts) * static_cast<std::size_t>(n));
        for (int i = 0; i < parts * n; ++i) pts.push_back({rng.bounded_rational(1000, 8), rng.bounded_rational(1000, 8)});
        PointConfiguration config(parts, n, std::move(pts));
        if (certify_general_position(config).certified()) return config;
    }
    throw DegeneracyError("random_configuration: no certified configuration within the retry budget");
}

namespace {

struct Feature {
    Point a;
    Point b;
    bool infinite = false;
    Rational dx, dy;  // b - a
    Rational lox, hix, loy, hiy;
};

Feature make_feature(const Point& a, const Point& b, bool infinite) {
    if (a == b) throw std::invalid_argument("candidate_points: degenerate segment or line");
    Feature f{a, b, infinite, b.x - a.x, b.y - a.y, {}, {}, {}, {}};
    f.lox = std::min(a.x, b.x);
    f.hix = std::max(a.x, b.x);
    f.loy = std::min(a.y, b.y);
    f.hiy = std::max(a.y, b.y);
    return f;
}

struct Direction {
    Rational x, y;
};

int half_plane(const Direction& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; }

bool angle_less(const Direction& a, const Direction& b) {
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return sgn(cross(a.x, a.y, b.x, b.y)) > 0;
}

bool same_direction(const Direction& a, const Direction& b) {
    return sgn(cross(a.x, a.y, b.x, b.y)) == 0 && sgn(a.x * b.x + a.y * b.y) > 0;
}

Direction normalized(const Direction& d) {
    const Rational m = std::max(abs_value(d.x), abs_value(d.y));
    return {d.x / m, d.y / m};
}

struct ArrangementVertex {
    Point p;
    std::vector<Direction> directions;
    std::vector<std::size_t> features;
};

class VertexTable {
public:
    std::size_t intern(const Point& p) {
        auto [it, inserted] = index_.try_emplace(p, vertices_.size());
        if (inserted) vertices_.push_back(ArrangementVertex{p, {}, {}});
        return it->second;
    }
    void add(std::size_t v, std::size_t feature, const Direction& d) {
        vertices_[v].directions.push_back(d);
        vertices_[v].features.push_back(feature);
    }
    std::vector<ArrangementVertex>& vertices() { return vertices_; }

private:
    std::unordered_map<Point, std::size_t, PointHash> index_;
    std::vector<ArrangementVertex> vertices_;
};

// Smallest positive ray parameter s with v + s*u on feature f, if any.
std::optional<Rational> ray_hit(const Point& v, const Direction& u, const Feature& f) {
    const Rational denom = cross(u.x, u.y, f.dx, f.dy);
    const Rational wx = f.a.x - v.x;
    const Rational wy = f.a.y - v.y;
    if (sgn(denom) == 0) {
        if (sgn(cross(wx, wy, u.x, u.y)) != 0) return std::nullopt;  // parallel, not collinear
        if (f.infinite) return Rational(0);
        // Collinear segment not containing v: nearest endpoint ahead of v.
        const Rational uu = u.x * u.x + u.y * u.y;
        const Rational sa = (wx * u.x + wy * u.y) / uu;
        const Rational sb = ((f.b.x - v.x) * u.x + (f.b.y - v.y) * u.y) / uu;
        const Rational lo = std::min(sa, sb);
        if (sgn(lo) > 0) return lo;
        return std::nullopt;
    }
    const Rational s = cross(wx, wy, f.dx, f.dy) / denom;
    if (sgn(s) <= 0) return std::nullopt;
    if (!f.infinite) {
        const Rational w = cross(wx, wy, u.x, u.y) / denom;
        if (sgn(w) < 0 || w > 1) return std::nullopt;
    }
    return s;
}

bool point_on_feature(const Point& p, const Feature& f) {
    if (orientation(f.a, f.b, p) != 0) return false;
    if (f.infinite) return true;
    return f.lox <= p.x && p.x <= f.hix && f.loy <= p.y && p.y <= f.hiy;
}

}  // namespace

CandidateSet candidate_points(std::span<const Segment> segments, std::span<const Line> lines, const CandidateOptions& options) {
    if (sgn(options.epsilon_scale) <= 0 || options.epsilon_scale > 1)
        throw std::invalid_argument("candidate_points: epsilon_scale must lie in (0, 1]");

    std::vector<Feature> features;
    features.reserve(segments.size() + lines.size());
    for (const auto& s : segments) features.push_back(make_feature(s.a, s.b, false));
    for (const auto& l : lines) features.push_back(make_feature(l.a, l.b, true));

    // Bounding box of every finite input point.
    std::optional<Rational> minx, maxx, miny, maxy;
    auto extend = [&](const Point& p) {
        if (!minx) {
            minx = maxx = p.x;
            miny = maxy = p.y;
            return;
        }
        if (p.x < *minx) minx = p.x;
        if (p.x > *maxx) maxx = p.x;
        if (p.y < *miny) miny = p.y;
        if (p.y > *maxy) maxy = p.y;
    };

    VertexTable table;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Feature& f = features[i];
        table.add(table.intern(f.a), i, {f.dx, f.dy});
        table.add(table.intern(f.b), i, {-f.dx, -f.dy});
        extend(f.a);
        extend(f.b);
    }

    std::vector<bool> line_has_vertex(features.size(), false);
    auto add_interior = [&](std::size_t v, std::size_t fi) {
        const Feature& f = features[fi];
        table.add(v, fi, {f.dx, f.dy});
        table.add(v, fi, {-f.dx, -f.dy});
    };

    for (std::size_t i = 0; i < features.size(); ++i) {
        const Feature& f = features[i];
        for (std::size_t j = i + 1; j < features.size(); ++j) {
            const Feature& g = features[j];
            if (!f.infinite && !g.infinite && (f.hix < g.lox || g.hix < f.lox || f.hiy < g.loy || g.hiy < f.loy)) continue;
            const Rational denom = cross(f.dx, f.dy, g.dx, g.dy);
            if (sgn(denom) == 0) {
                // Collinear overlap: endpoints of one feature inside the other
                // are vertices at which the other feature passes straight through.
                if (sgn(cross(g.a.x - f.a.x, g.a.y - f.a.y, f.dx, f.dy)) != 0) continue;
                auto pass_through = [&](const Feature& host, std::size_t host_index, const Feature& guest) {
                    if (guest.infinite) return;
                    for (const Point* e : {&guest.a, &guest.b}) {
                        if (!point_on_feature(*e, host)) continue;
                        if (!host.infinite && (*e == host.a || *e == host.b)) continue;
                        add_interior(table.intern(*e), host_index);
                        if (host.infinite) line_has_vertex[host_index] = true;
                    }
                };
                pass_through(f, i, g);
                pass_through(g, j, f);
                continue;
            }
            const Rational wx = g.a.x - f.a.x;
            const Rational wy = g.a.y - f.a.y;
            const Rational t = cross(wx, wy, g.dx, g.dy) / denom;
            const Rational u = cross(wx, wy, f.dx, f.dy) / denom;
            if (!f.infinite && (sgn(t) < 0 || t > 1)) continue;
            if (!g.infinite && (sgn(u) < 0 || u > 1)) continue;
            const Point p{f.a.x + t * f.dx, f.a.y + t * f.dy};
            const std::size_t v = table.intern(p);
            extend(p);
            if (f.infinite || (sgn(t) > 0 && t < 1)) add_interior(v, i);
            if (g.infinite || (sgn(u) > 0 && u < 1)) add_interior(v, j);
            line_has_vertex[i] = line_has_vertex[i] || f.infinite;
            line_has_vertex[j] = line_has_vertex[j] || g.infinite;
        }
    }
    for (std::size_t i = segments.size(); i < features.size(); ++i) {
        extend(features[i].a);
        if (!line_has_vertex[i]) add_interior(table.intern(features[i].a), i);
    }

    CandidateSet out;
    auto& vertices = table.vertices();
    out.arrangement_vertices = vertices.size();

    Rational extent = 1;
    if (minx) extent = std::max({Rational(*maxx - *minx), Rational(*maxy - *miny), Rational(1)});
    // Initial offset: a power of two no larger than extent / 8.
    Rational eps0 = 1;
    while (eps0 * 8 > extent) eps0 /= 2;
    while (eps0 * 16 <= extent) eps0 *= 2;

    std::unordered_set<std::string> seen_signatures;
    std::vector<std::size_t> near;
    for (auto& vertex : vertices) {
        const Point& v = vertex.p;
        std::sort(vertex.directions.begin(), vertex.directions.end(), angle_less);
        std::vector<Direction> dirs;
        for (const auto& d : vertex.directions)
            if (dirs.empty() || !same_direction(dirs.back(), d)) dirs.push_back(d);
        if (dirs.size() > 1 && same_direction(dirs.front(), dirs.back())) dirs.pop_back();

        std::vector<Direction> wedges;
        if (dirs.size() == 1) {
            wedges.push_back(normalized({-dirs[0].x, -dirs[0].y}));
        } else {
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                const Direction a = normalized(dirs[i]);
                const Direction b = normalized(dirs[(i + 1) % dirs.size()]);
                if (sgn(cross(a.x, a.y, b.x, b.y)) > 0)
                    wedges.push_back(normalized({a.x + b.x, a.y + b.y}));
                else
                    wedges.push_back({-a.y, a.x});
            }
        }

        std::sort(vertex.features.begin(), vertex.features.end());
        near.clear();
        for (std::size_t fi = 0; fi < features.size(); ++fi) {
            if (std::binary_search(vertex.features.begin(), vertex.features.end(), fi)) continue;
            const Feature& f = features[fi];
            if (!f.infinite && (f.hix < v.x - eps0 || f.lox > v.x + eps0 || f.hiy < v.y - eps0 || f.loy > v.y + eps0)) continue;
            // Features through v that were not recorded (collinear overlaps) are
            // skipped too; rays inside a wedge meet them only at v.
            if (point_on_feature(v, f)) continue;
            near.push_back(fi);
        }

        for (const auto& u : wedges) {
            Rational eps = eps0;
            for (std::size_t fi : near) {
                if (auto s = ray_hit(v, u, features[fi]); s && *s <= 2 * eps) {
                    while (eps * 2 > *s) eps /= 2;
                }
            }
            eps *= options.epsilon_scale;
            Point p{v.x + eps * u.x, v.y + eps * u.y};
            if (options.signature && !seen_signatures.insert(options.signature(p)).second) continue;
            out.points.push_back(std::move(p));
        }
    }

    Rational fx = (maxx ? *maxx : Rational(0)) + extent + 1;
    const Rational fy = (maxy ? *maxy : Rational(0)) + extent + 1;
    auto on_any_line = [&](const Point& p) {
        for (std::size_t i = segments.size(); i < features.size(); ++i)
            if (point_on_feature(p, features[i])) return true;
        return false;
    };
    while (on_any_line({fx, fy})) fx += 1;
    out.far_point = Point{fx, fy};
    return out;
}

}  // namespace pach
