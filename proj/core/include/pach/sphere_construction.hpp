#pragma once

#include "pach/bitvector.hpp"
#include "pach/exact_geometry.hpp"
#include "pach/extraction.hpp"
#include "pach/join_complex.hpp"
#include "pach/log_bounds.hpp"
#include "pach/witness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pach {

/// One bit per ranked top face: 0 keeps the affine triangle, 1 takes its
/// complement on the sphere (the filling through the point at infinity).
struct Filling {
    BitVector bits;
    std::uint64_t seed = 0;
};

Filling random_filling(const JoinComplex& complex, std::uint64_t seed);
Filling standard_filling(const JoinComplex& complex);

/// inside(p, triangle of sigma) xor bit(sigma). Throws DegeneracyError when p
/// lies on the boundary of the triangle.
bool covers(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config, const Face& sigma,
            const Point& p);

/// Tuples (one vertex index per part) whose top face covers p.
PartiteHypergraph coverage_hypergraph(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                                      const Point& p);

struct BoxSearchResult {
    int size = 0;
    BoxParts parts;
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;
};

/// Exact maximum t with a complete box of t vertices per part, by branch and
/// bound over part subsets in lexicographic order (the first box found at the
/// maximum is returned). With an exhausted budget the result is the best box
/// found so far.
BoxSearchResult max_complete_box(const PartiteHypergraph& h, std::uint64_t node_budget = 10'000'000);

PachWitness max_pach_family_at(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                               const Point& p, std::uint64_t node_budget = 10'000'000);

/// Re-checks every transversal face over the witness parts with covers().
bool verify_witness(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                    const PachWitness& witness);

/// Segments joining vertex images of different parts.
std::vector<Segment> configuration_edges(const JoinComplex& complex, const PointConfiguration& config);

struct SphereExperimentConfig {
    int n = 6;
    int d = 2;
    std::vector<std::uint64_t> seeds;
    /// 0 means every candidate region.
    std::size_t max_candidates = 0;
    /// Adds the all-standard filling on the same configuration per seed.
    bool control = true;
    unsigned jobs = 1;
    std::uint64_t node_budget = 10'000'000;
    bool timing = false;
};

struct SphereExperimentRow {
    std::uint64_t seed = 0;
    std::string filling;  // "random" or "control"
    std::size_t candidate_index = 0;
    std::size_t candidates_tested = 0;
    Point p;
    int max_m = 0;
    bool lower_bound_only = false;
    bool far_point_tested = false;
    double wall_seconds = 0;
};

struct SphereExperimentReport {
    SphereExperimentConfig config;
    std::vector<SphereExperimentRow> rows;
    std::int64_t threshold = 0;  // ceil(2 (ln n)^(1/d))
    double threshold_real = 0;
    /// Fraction of seeds whose control maximum is at least the random maximum.
    double control_dominance = 0;
};

SphereExperimentReport sphere_upper_experiment(const SphereExperimentConfig& config);

/// CSV with columns seed, filling, candidate_index, p_x, p_y, max_m,
/// lower_bound_only, and wall_seconds when timing was requested.
std::string to_csv(const SphereExperimentReport& report);

/// ln[C(n,m)^(d+1) n^(d^2) 2^(-m^(d+1))].
LogBound sphere_union_bound(std::uint64_t n, int d, std::uint64_t m);

/// ceil(2 (ln n)^(1/d)).
std::int64_t pach_threshold_sphere(std::uint64_t n, int d);

}  // namespace pach
