#include "pach/io.hpp"

#include <stdexcept>
#include <string>

namespace pach {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) malformed(std::string("field '") + key + "' is not an integer");
    return v.get<int>();
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) malformed("rational must be a string");
    return parse_rational(j.get<std::string>());
}

void expect_format(const json& j, const char* format) {
    if (j.contains("format") && j.at("format") != format) malformed(std::string("expected format ") + format);
}

}  // namespace

json point_to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) malformed("point must be [x, y]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json face_to_json(const Face& f) {
    json out = json::array();
    for (const auto& v : f.vertices()) out.push_back({v.part, v.index});
    return out;
}

Face face_from_json(const json& j) {
    if (!j.is_array()) malformed("face must be a list of [part, index]");
    std::vector<Vertex> vs;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            malformed("vertex must be [part, index]");
        vs.push_back({v[0].get<int>(), v[1].get<int>()});
    }
    return Face(std::move(vs));
}

json cochain_to_json(const JoinComplex& complex, const F2Cochain& a) {
    return {{"format", "pachlab.cochain"},
            {"d", complex.dimension()},
            {"n", complex.part_size()},
            {"k", a.dimension()},
            {"bits", a.bits().to_hex()}};
}

F2Cochain cochain_from_json(const JoinComplex& complex, const json& j) {
    expect_format(j, "pachlab.cochain");
    const int d = int_field(j, "d"), n = int_field(j, "n"), k = int_field(j, "k");
    if (d != complex.dimension() || n != complex.part_size()) malformed("cochain header does not match the complex");
    if (k < 0 || k > d) malformed("cochain dimension out of range");
    const json& bits = field(j, "bits");
    if (!bits.is_string()) malformed("bits must be a hex string");
    return F2Cochain(k, BitVector::from_hex(bits.get<std::string>(), complex.face_count(k)));
}

json configuration_to_json(const PointConfiguration& config) {
    json pts = json::array();
    for (const auto& p : config.points()) pts.push_back(point_to_json(p));
    return {{"format", "pachlab.configuration"}, {"parts", config.part_count()}, {"n", config.part_size()}, {"points", pts}};
}

PointConfiguration configuration_from_json(const json& j) {
    expect_format(j, "pachlab.configuration");
    const int parts = int_field(j, "parts"), n = int_field(j, "n");
    std::vector<Point> pts;
    for (const auto& p : field(j, "points")) pts.push_back(point_from_json(p));
    return PointConfiguration(parts, n, std::move(pts));
}

json plmap_to_json(const PLMap& map) {
    const JoinComplex& X = map.complex;
    json vertices = json::array();
    for (const auto& p : map.vertices.points()) vertices.push_back(point_to_json(p));
    json edges = json::array();
    for (std::uint64_t r = 0; r < map.edges.size(); ++r) {
        json line = json::array();
        for (const auto& p : map.edges[r].points) line.push_back(point_to_json(p));
        edges.push_back({{"face", face_to_json(X.unrank(1, r))}, {"polyline", line}});
    }
    json faces = json::array();
    for (std::uint64_t r = 0; r < map.faces.size(); ++r) {
        json tris = json::array();
        for (const auto& t : map.faces[r]) tris.push_back(json::array({point_to_json(t.v[0]), point_to_json(t.v[1]), point_to_json(t.v[2])}));
        faces.push_back({{"face", face_to_json(X.unrank(2, r))}, {"triangles", tris}});
    }
    return {{"format", "pachlab.plmap"},
            {"version", kPLMapFormatVersion},
            {"d", X.dimension()},
            {"n", X.part_size()},
            {"vertices", vertices},
            {"edges", edges},
            {"faces", faces}};
}

PLMap plmap_from_json(const json& j) {
    expect_format(j, "pachlab.plmap");
    if (j.contains("version") && j.at("version") != kPLMapFormatVersion) malformed("unsupported PLMap version");
    const int d = int_field(j, "d"), n = int_field(j, "n");
    if (d != 2) malformed("only d = 2 maps are supported");
    if (n < 1) malformed("n must be positive");
    PLMap map;
    map.complex = JoinComplex(d, n);
    const JoinComplex& X = map.complex;
    std::vector<Point> pts;
    for (const auto& p : field(j, "vertices")) pts.push_back(point_from_json(p));
    if (pts.size() != X.face_count(0)) malformed("vertex count does not match n");
    map.vertices = PointConfiguration(3, n, std::move(pts));

    const json& edges = field(j, "edges");
    if (!edges.is_array() || edges.size() != X.face_count(1)) malformed("edge count does not match n");
    map.edges.resize(edges.size());
    std::vector<bool> seen(edges.size(), false);
    for (const auto& e : edges) {
        const Face f = face_from_json(field(e, "face"));
        if (f.dimension() != 1 || !X.is_valid(f)) malformed("edge entry names an invalid face");
        const auto r = X.rank(f);
        if (seen[r]) malformed("edge listed twice");
        seen[r] = true;
        for (const auto& p : field(e, "polyline")) map.edges[r].points.push_back(point_from_json(p));
    }
    const json& faces = field(j, "faces");
    if (!faces.is_array() || faces.size() != X.face_count(2)) malformed("face count does not match n");
    map.faces.resize(faces.size());
    seen.assign(faces.size(), false);
    for (const auto& fj : faces) {
        const Face f = face_from_json(field(fj, "face"));
        if (f.dimension() != 2 || !X.is_valid(f)) malformed("face entry names an invalid face");
        const auto r = X.rank(f);
        if (seen[r]) malformed("face listed twice");
        seen[r] = true;
        for (const auto& t : field(fj, "triangles")) {
            if (!t.is_array() || t.size() != 3) malformed("triangle must have 3 points");
            map.faces[r].push_back(Triangle{{point_from_json(t[0]), point_from_json(t[1]), point_from_json(t[2])}});
        }
    }
    return map;
}

json coloring_to_json(const TwoColoring& coloring) {
    return {{"format", "pachlab.coloring"},
            {"d", coloring.d},
            {"n", coloring.n},
            {"seed", coloring.seed},
            {"negative", coloring.negative.to_hex()}};
}

TwoColoring coloring_from_json(const json& j) {
    expect_format(j, "pachlab.coloring");
    TwoColoring c;
    c.d = int_field(j, "d");
    c.n = int_field(j, "n");
    if (c.d < 1 || c.n < 1) malformed("coloring header out of range");
    const json& seed = field(j, "seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) malformed("seed must be an integer");
    c.seed = seed.get<std::uint64_t>();
    const JoinComplex X(c.d, c.n);
    const json& bits = field(j, "negative");
    if (!bits.is_string()) malformed("negative must be a hex string");
    c.negative = BitVector::from_hex(bits.get<std::string>(), X.face_count(c.d - 1));
    return c;
}

json graph_to_json(const TripartiteGraph& g) {
    json adjacency = json::object();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            json rows = json::array();
            for (int v = 0; v < g.sizes()[static_cast<std::size_t>(a)]; ++v) rows.push_back(g.neighbors(a, v, b).support());
            adjacency[std::to_string(a) + "-" + std::to_string(b)] = rows;
        }
    return {{"format", "pachlab.tripartite"}, {"sizes", g.sizes()}, {"adjacency", adjacency}};
}

TripartiteGraph graph_from_json(const json& j) {
    expect_format(j, "pachlab.tripartite");
    const json& sizes = field(j, "sizes");
    if (!sizes.is_array() || sizes.size() != 3) malformed("sizes must list 3 parts");
    std::array<int, 3> sz{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!sizes[i].is_number_integer() || sizes[i].get<int>() < 0) malformed("part size must be a non-negative integer");
        sz[i] = sizes[i].get<int>();
    }
    TripartiteGraph g(sz);
    const json& adjacency = field(j, "adjacency");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const std::string key = std::to_string(a) + "-" + std::to_string(b);
            if (!adjacency.contains(key)) continue;
            const json& rows = adjacency.at(key);
            if (!rows.is_array() || rows.size() != static_cast<std::size_t>(sz[static_cast<std::size_t>(a)]))
                malformed("adjacency " + key + " has the wrong row count");
            for (int v = 0; v < sz[static_cast<std::size_t>(a)]; ++v)
                for (const auto& w : rows[static_cast<std::size_t>(v)]) {
                    if (!w.is_number_integer() || w.get<int>() < 0 || w.get<int>() >= sz[static_cast<std::size_t>(b)])
                        malformed("neighbor index out of range in " + key);
                    g.add_edge({a, v}, {b, w.get<int>()});
                }
        }
    return g;
}

json hypergraph_to_json(const PartiteHypergraph& h) {
    json edges = json::array();
    for (const auto r : h.bits().support()) edges.push_back(h.unrank(r));
    return {{"format", "pachlab.hypergraph"}, {"parts", h.part_count()}, {"n", h.part_size()}, {"edges", edges}};
}

PartiteHypergraph hypergraph_from_json(const json& j) {
    expect_format(j, "pachlab.hypergraph");
    const int parts = int_field(j, "parts"), n = int_field(j, "n");
    if (parts < 1 || n < 1) malformed("hypergraph header out of range");
    PartiteHypergraph h(parts, n);
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != static_cast<std::size_t>(parts)) malformed("hyperedge has the wrong arity");
        std::vector<int> tuple;
        for (const auto& v : e) {
            if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n) malformed("hyperedge index out of range");
            tuple.push_back(v.get<int>());
        }
        h.insert(tuple);
    }
    return h;
}

json witness_to_json(const PachWitness& w) {
    return {{"p", point_to_json(w.p)}, {"size", w.size}, {"parts", w.parts}, {"lower_bound_only", w.lower_bound_only}, {"log", w.log}};
}

}  // namespace pach
