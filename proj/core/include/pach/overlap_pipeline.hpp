#pragma once

#include "pach/exact_geometry.hpp"
#include "pach/extraction.hpp"
#include "pach/pl_intersection.hpp"
#include "pach/witness.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace pach {

/// A generic point p with F = {sigma : phi(sigma) . p = 1}.
struct HeavyPoint {
    Point p;
    std::vector<std::uint64_t> faces;  // ranks, ascending
    Rational density;                  // |F| / n^3
    std::size_t candidates = 0;
    std::size_t candidate_index = 0;
    /// p was moved off a filling segment inside its region.
    bool nudged = false;
};

/// Exact maximizer of |F| over one representative of every region of the
/// edge-image arrangement (face parities are constant on those regions);
/// ties go to the lowest candidate index. The returned F is re-verified with
/// the triangle-count parity.
HeavyPoint heavy_point(const PLMap& map, unsigned jobs = 1);

/// Parities of every face at p via the triangle lists, as a bit per rank.
BitVector face_parities(const PLMap& map, const Point& p);

/// Outside the bounding box of every point of the map.
Point exterior_point(const PLMap& map);

/// p -> random joint -> exterior point, redrawn until both segments cross
/// every edge image transversally. Throws DegeneracyError after max_tries.
Polyline escape_path(const PLMap& map, const Point& p, std::uint64_t seed, int max_tries = 64);

using PiVector = std::array<int, 3>;

/// (phi(sigma_i) . R) for i = 0, 1, 2, sigma_i the edge missing part i.
PiVector pi_vector(const PLMap& map, const Face& sigma, const Polyline& path);

struct PiClass {
    PiVector pi{};
    std::vector<std::uint64_t> faces;
    std::size_t class_count = 0;
};

/// Largest class of F by pi-vector; ties go to the lexicographically
/// smallest vector.
PiClass pigeonhole_class(const PLMap& map, const std::vector<std::uint64_t>& faces, const Polyline& path);

/// Union of the edges of the given top faces.
TripartiteGraph build_h(const JoinComplex& complex, const std::vector<std::uint64_t>& faces);

/// Every face edge straight and every face a single triangle on its vertices.
bool is_affine(const PLMap& map);

struct PipelineResult {
    PachWitness witness;
    HeavyPoint heavy;
    Polyline path;
    PiClass pi_class;
    std::size_t h_edges = 0;
    std::uint64_t h_triangles = 0;
    bool verified = false;
    /// Set when the map is affine and covers() agreed with the parity check.
    bool covers_agreement = false;
    nlohmann::json log;
};

/// heavy point -> escape path -> pi classes -> H -> largest greedy K(t,t,t)
/// -> independent verification. Stage failures surface as PipelineError.
PipelineResult run_pipeline(const PLMap& map, std::uint64_t seed, unsigned jobs = 1);

/// Every transversal face over the witness parts has parity 1 at p,
/// computed from the triangle lists.
bool verify_parity_witness(const PLMap& map, const PachWitness& witness);

}  // namespace pach
