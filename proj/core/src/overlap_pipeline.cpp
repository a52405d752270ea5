#include "pach/overlap_pipeline.hpp"

#include "pach/errors.hpp"
#include "pach/f2_cochains.hpp"
#include "pach/parallel.hpp"
#include "pach/random.hpp"
#include "pach/sphere_construction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pach {

namespace {

using json = nlohmann::json;

struct Box {
    Rational minx, maxx, miny, maxy;
};

Box bounding_box(const PLMap& map) {
    const auto& pts = map.vertices.points();
    if (pts.empty()) return {0, 0, 0, 0};
    Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    auto grow = [&](const Point& p) {
        if (p.x < b.minx) b.minx = p.x;
        if (p.x > b.maxx) b.maxx = p.x;
        if (p.y < b.miny) b.miny = p.y;
        if (p.y > b.maxy) b.maxy = p.y;
    };
    for (const auto& p : pts) grow(p);
    for (const auto& e : map.edges)
        for (const auto& p : e.points) grow(p);
    for (const auto& tris : map.faces)
        for (const auto& t : tris)
            for (const auto& p : t.v) grow(p);
    return b;
}

// Edge ranks of the three sides of every top face, side i missing part i.
std::vector<std::array<std::uint64_t, 3>> face_sides(const JoinComplex& X) {
    std::vector<std::array<std::uint64_t, 3>> sides;
    for (const auto& f : X.faces(2)) {
        std::array<std::uint64_t, 3> s{};
        for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = X.rank(opposite_face(X, f, i));
        sides.push_back(s);
    }
    return sides;
}

BitVector fast_face_parities(const std::vector<std::array<std::uint64_t, 3>>& sides, const BitVector& edge_parity) {
    BitVector out(sides.size());
    for (std::size_t r = 0; r < sides.size(); ++r)
        if (edge_parity.test(sides[r][0]) != (edge_parity.test(sides[r][1]) != edge_parity.test(sides[r][2]))) out.set(r);
    return out;
}

json point_json(const Point& p) { return json{{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

}  // namespace

BitVector face_parities(const PLMap& map, const Point& p) {
    const auto faces = map.complex.faces(2);
    BitVector out(faces.size());
    for (std::size_t r = 0; r < faces.size(); ++r)
        if (point_face_parity(map, faces[r], p)) out.set(r);
    return out;
}

HeavyPoint heavy_point(const PLMap& map, unsigned jobs) {
    const JoinComplex& X = map.complex;
    const auto sides = face_sides(X);
    const auto segs = edge_segments(map);
    const CandidateSet cs = candidate_points(segs, {});
    HeavyPoint hp;
    hp.candidates = cs.points.size();

    struct Best {
        std::size_t count = 0;
        std::size_t index = 0;
        bool have = false;
    };
    std::vector<Best> best(chunk_count(cs.points.size(), jobs));
    parallel_chunks(cs.points.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        Best b;
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t c = fast_face_parities(sides, edge_ray_parities(map, cs.points[i])).count();
            if (!b.have || c > b.count) b = {c, i, true};
        }
        best[chunk] = b;
    });
    Best top;
    for (const auto& b : best)
        if (b.have && (!top.have || b.count > top.count)) top = b;

    if (!top.have) {
        hp.p = exterior_point(map);
        hp.density = 0;
        return hp;
    }
    hp.candidate_index = top.index;
    const Point p = cs.points[top.index];
    const BitVector edge_parity = edge_ray_parities(map, p);
    const BitVector fast = fast_face_parities(sides, edge_parity);

    // Parities only depend on the edge arrangement, but p may still sit on a
    // cone spoke; slide it inside its region until it clears every segment.
    Point q = p;
    BitVector slow;
    bool settled = false;
    try {
        slow = face_parities(map, q);
        settled = true;
    } catch (const DegeneracyError&) {
    }
    if (!settled) {
        Rng rng(derive_seed(top.index, 0x70d6e));
        Rational eps(1, 1024);
        for (int attempt = 0; attempt < 400 && !settled; ++attempt) {
            if (attempt % 4 == 3) eps /= 2;
            const Point cand{p.x + eps * rng.grid(-1, 1, 1024), p.y + eps * rng.grid(-1, 1, 1024)};
            try {
                if (!(edge_ray_parities(map, cand) == edge_parity)) continue;
                slow = face_parities(map, cand);
                q = cand;
                settled = true;
            } catch (const DegeneracyError&) {
            }
        }
        if (!settled) throw DegeneracyError("heavy_point: could not move the maximizer off the filling segments");
        hp.nudged = true;
    }
    if (!(slow == fast)) throw std::logic_error("heavy_point: triangle-count parities disagree with boundary parities");
    hp.p = q;
    for (const auto r : fast.support()) hp.faces.push_back(r);
    hp.density = Rational(static_cast<unsigned long>(hp.faces.size()), static_cast<unsigned long>(X.face_count(2)));
    hp.density.canonicalize();
    return hp;
}

Point exterior_point(const PLMap& map) {
    const Box b = bounding_box(map);
    const Rational extent = (b.maxx - b.minx) + (b.maxy - b.miny) + 1;
    return {b.maxx + extent, b.maxy + extent};
}

Polyline escape_path(const PLMap& map, const Point& p, std::uint64_t seed, int max_tries) {
    const Box b = bounding_box(map);
    const Point far = exterior_point(map);
    const auto segs = edge_segments(map);
    Rng rng(derive_seed(seed, 0xe5c));
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        const Point joint{rng.grid(b.minx - 1, b.maxx + 1, 1u << 20), rng.grid(b.miny - 1, b.maxy + 1, 1u << 20)};
        if (joint == p || joint == far) continue;
        Polyline path{{p, joint, far}};
        try {
            for (const auto& s : segs)
                for (std::size_t j = 0; j < path.segment_count(); ++j) (void)segments_cross_parity(s, path.segment(j));
        } catch (const DegeneracyError&) {
            continue;
        }
        return path;
    }
    throw DegeneracyError("escape_path: no generic path within " + std::to_string(max_tries) + " draws");
}

PiVector pi_vector(const PLMap& map, const Face& sigma, const Polyline& path) {
    PiVector pi{};
    for (int i = 0; i < 3; ++i) pi[static_cast<std::size_t>(i)] = edge_path_parity(map, opposite_face(map.complex, sigma, i), path);
    return pi;
}

PiClass pigeonhole_class(const PLMap& map, const std::vector<std::uint64_t>& faces, const Polyline& path) {
    std::map<PiVector, std::vector<std::uint64_t>> classes;
    for (const auto r : faces) classes[pi_vector(map, map.complex.unrank(2, r), path)].push_back(r);
    PiClass out;
    out.class_count = classes.size();
    for (auto& [pi, members] : classes)
        if (members.size() > out.faces.size()) {
            out.pi = pi;
            out.faces = members;
        }
    return out;
}

TripartiteGraph build_h(const JoinComplex& complex, const std::vector<std::uint64_t>& faces) {
    const int n = complex.part_size();
    TripartiteGraph g({n, n, n});
    for (const auto r : faces) {
        const auto vs = complex.unrank(2, r).vertices();
        g.add_edge(vs[0], vs[1]);
        g.add_edge(vs[0], vs[2]);
        g.add_edge(vs[1], vs[2]);
    }
    return g;
}

bool is_affine(const PLMap& map) {
    const JoinComplex& X = map.complex;
    if (map.edges.size() != X.face_count(1) || map.faces.size() != X.face_count(2)) return false;
    for (std::uint64_t r = 0; r < map.edges.size(); ++r) {
        const auto vs = X.unrank(1, r).vertices();
        const auto& pts = map.edges[r].points;
        if (pts.size() != 2 || !(pts[0] == map.vertices.at(vs[0])) || !(pts[1] == map.vertices.at(vs[1]))) return false;
    }
    for (std::uint64_t r = 0; r < map.faces.size(); ++r) {
        if (map.faces[r].size() != 1) return false;
        const auto vs = X.unrank(2, r).vertices();
        for (const auto& v : vs) {
            const Point& img = map.vertices.at(v);
            const auto& t = map.faces[r][0].v;
            if (std::none_of(t.begin(), t.end(), [&](const Point& q) { return q == img; })) return false;
        }
    }
    return true;
}

bool verify_parity_witness(const PLMap& map, const PachWitness& witness) {
    if (witness.parts.size() != 3) return false;
    for (const auto& part : witness.parts)
        if (part.size() != static_cast<std::size_t>(witness.size)) return false;
    for (int a : witness.parts[0])
        for (int b : witness.parts[1])
            for (int c : witness.parts[2])
                if (point_face_parity(map, Face({Vertex{0, a}, Vertex{1, b}, Vertex{2, c}}), witness.p) != 1) return false;
    return true;
}

PipelineResult run_pipeline(const PLMap& map, std::uint64_t seed, unsigned jobs) {
    PipelineResult out;
    const JoinComplex& X = map.complex;
    json stages = json::array();

    stage("validate", [&] {
        const MapValidationReport report = validate_map(map, 16);
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
        stages.push_back({{"stage", "validate"}, {"segments", report.segments_checked}, {"violations", report.violation_count}});
        if (!report.valid()) {
            std::string msg = std::to_string(report.violation_count) + " violations";
            for (const auto& v : report.violations) msg += "; " + v.kind + ": " + v.detail;
            throw PipelineError("validate", msg);
        }
        return 0;
    });

    out.heavy = stage("heavy_point", [&] { return heavy_point(map, jobs); });
    stages.push_back({{"stage", "heavy_point"},
                      {"p", point_json(out.heavy.p)},
                      {"F", out.heavy.faces.size()},
                      {"density", to_string(out.heavy.density)},
                      {"density_approx", out.heavy.density.get_d()},
                      {"gromov_reference", to_string(gromov_bound(2))},
                      {"candidates", out.heavy.candidates},
                      {"nudged", out.heavy.nudged}});

    out.witness.p = out.heavy.p;
    out.witness.parts.assign(3, {});
    if (out.heavy.faces.empty()) {
        out.verified = true;
        out.witness.log.push_back("no face has odd parity at any candidate");
        out.log = {{"seed", seed}, {"stages", stages}};
        return out;
    }

    out.path = stage("escape_path", [&] { return escape_path(map, out.heavy.p, seed); });
    json path = json::array();
    for (const auto& q : out.path.points) path.push_back(point_json(q));
    stages.push_back({{"stage", "escape_path"}, {"path", path}});

    stage("pi_law", [&] {
        std::vector<int> edge_r(map.edges.size());
        for (std::uint64_t e = 0; e < map.edges.size(); ++e) edge_r[e] = edge_path_parity(map, X.unrank(1, e), out.path);
        const auto sides = face_sides(X);
        BitVector in_f(X.face_count(2));
        for (const auto r : out.heavy.faces) in_f.set(r);
        std::size_t violations = 0;
        for (std::size_t r = 0; r < sides.size(); ++r) {
            const int w = edge_r[sides[r][0]] + edge_r[sides[r][1]] + edge_r[sides[r][2]];
            if ((w % 2 == 1) != in_f.test(r)) ++violations;
        }
        stages.push_back({{"stage", "pi_law"}, {"faces_checked", sides.size()}, {"violations", violations}});
        if (violations) throw PipelineError("pi_law", std::to_string(violations) + " faces break the parity identity");
        return 0;
    });

    out.pi_class = stage("pigeonhole", [&] { return pigeonhole_class(map, out.heavy.faces, out.path); });
    stages.push_back({{"stage", "pigeonhole"},
                      {"pi", out.pi_class.pi},
                      {"class_size", out.pi_class.faces.size()},
                      {"class_count", out.pi_class.class_count}});

    const TripartiteGraph h = stage("build_h", [&] { return build_h(X, out.pi_class.faces); });
    out.h_edges = h.edge_count();
    out.h_triangles = count_triangles(h);
    stages.push_back({{"stage", "build_h"}, {"edges", out.h_edges}, {"triangles", out.h_triangles}});

    const TripartiteExtraction ext = stage("extract", [&] { return extract_largest_tripartite(h); });
    out.witness.size = ext.t;
    for (int i = 0; i < 3; ++i) out.witness.parts[static_cast<std::size_t>(i)] = ext.parts[static_cast<std::size_t>(i)];
    stages.push_back({{"stage", "extract"}, {"t", ext.t}, {"parts", out.witness.parts}});

    stage("verify", [&] {
        out.verified = verify_parity_witness(map, out.witness);
        json rec{{"stage", "verify"}, {"parity", out.verified}, {"covers", nullptr}};
        if (is_affine(map)) {
            PachWitness w = out.witness;
            out.covers_agreement = verify_witness(X, standard_filling(X), map.vertices, w);
            rec["covers"] = out.covers_agreement;
        }
        stages.push_back(rec);
        if (!out.verified) throw PipelineError("verify", "a transversal face over the witness misses p");
        if (is_affine(map) && !out.covers_agreement) throw PipelineError("verify", "covers() disagrees with the parity check");
        return 0;
    });
    out.witness.log.push_back("F = " + std::to_string(out.heavy.faces.size()) + ", class = " + std::to_string(out.pi_class.faces.size()) +
                              ", t = " + std::to_string(ext.t));
    out.log = {{"seed", seed}, {"stages", stages}};
    return out;
}

}  // namespace pach
