#pragma once

#include "pach/bitvector.hpp"
#include "pach/join_complex.hpp"
#include "pach/log_bounds.hpp"
#include "pach/pl_intersection.hpp"
#include "pach/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pach {

/// chi: (d-1)-faces -> {+1, -1}, stored as the set of -1 faces by rank.
struct TwoColoring {
    int d = 2;
    int n = 1;
    BitVector negative;
    std::uint64_t seed = 0;

    int color(std::uint64_t rank) const { return negative.test(rank) ? -1 : 1; }
};

TwoColoring random_coloring(const JoinComplex& complex, std::uint64_t seed);
TwoColoring constant_coloring(const JoinComplex& complex, int color);

/// +1 or -1 when every facet of the top face has that color, 0 otherwise.
int face_color(const JoinComplex& complex, const TwoColoring& coloring, const Face& top);

/// One m-subset per part, each sorted.
using Selector = std::vector<std::vector<int>>;

struct ColoringVerifyOptions {
    std::uint64_t budget = 10'000'000;
    /// Random selectors drawn when the exhaustive count exceeds the budget.
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct ColoringVerification {
    bool ok = false;
    /// Only a random sample of selectors was checked.
    bool sampled_only = false;
    std::uint64_t selectors_checked = 0;
    /// Lexicographically smallest failing selector (exhaustive mode).
    std::optional<Selector> failure;
    bool failure_lacks_positive = false;
    bool failure_lacks_negative = false;
};

/// Whether every (d,m)-subgraph contains a monochromatic (d+1)-clique of
/// each color.
ColoringVerification verify_coloring(const JoinComplex& complex, const TwoColoring& coloring, int m,
                                     const ColoringVerifyOptions& options = {});

struct ColoringSearchResult {
    std::optional<TwoColoring> coloring;
    int attempts = 0;
    ColoringVerification verification;
};

/// First random coloring (attempt seeds derived from `seed`) passing
/// verify_coloring at m_target.
ColoringSearchResult search_coloring(const JoinComplex& complex, int m_target, std::uint64_t seed, int max_retries,
                                     const ColoringVerifyOptions& options = {});

struct CliqueProbabilityOptions {
    /// Exhaustive enumeration up to this many edges.
    unsigned max_exhaustive_edges = 24;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

struct CliqueProbabilityReport {
    int m = 0;
    int d = 0;
    std::uint64_t edges = 0;    // (d+1) m^d
    std::uint64_t cliques = 0;  // m^(d+1)
    bool exact = false;
    /// Exact fraction of clique-free edge subsets (exact mode only).
    Rational fraction;
    std::uint64_t subsets = 0;
    double estimate = 0;
    double ci_low = 0;  // 95% normal interval (sampled mode)
    double ci_high = 0;
    /// (1 - 2^(-d-1))^(m^d).
    Rational bound;
    bool within_bound = false;  // exact mode only
    /// Every edge lies in the same number of cliques.
    bool regular = false;
    std::uint64_t cliques_per_edge = 0;
};

CliqueProbabilityReport clique_probability_oracle(int m, int d, const CliqueProbabilityOptions& options = {});

/// ln[C(n,m)^(d+1) * 2 * (1 - 2^(-d-1))^(m^d)].
LogBound coloring_union_bound(std::uint64_t n, int d, std::uint64_t m);

/// ceil(25 (ln n)^(1/(d-1))), d >= 2.
std::int64_t pach_threshold_coloring(std::uint64_t n, int d);

/// 30 (ln n)^(1/(d-1)): the size cap the construction yields.
double coloring_construction_cap(std::uint64_t n, int d);

/// Geometry of the pushed map. positions are indexed like PointConfiguration
/// (part-major vertex order); heights by edge rank; apexes by face rank.
struct PushedLayout {
    std::vector<Rational> positions;
    std::vector<Rational> heights;
    std::vector<Point> apexes;
};

/// Distinct positions with distinct pairwise sums, prime heights, and apexes
/// following the sign rule: strictly above the axis for all-(+1) faces,
/// strictly below for all-(-1) faces, anywhere off the axis otherwise.
PushedLayout default_pushed_layout(const JoinComplex& complex, const TwoColoring& coloring, std::uint64_t seed);

/// Vertices on the x-axis, each edge a tent through (mid_x, chi * h), each
/// face the cone from its apex over its three tents. Throws
/// std::invalid_argument on repeated positions or heights, or on apexes
/// breaking the sign rule, and DegeneracyError if the result fails
/// validate_map.
PLMap build_pushed_map(const JoinComplex& complex, const TwoColoring& coloring, const PushedLayout& layout);

/// Redraws the layout until the pushed map validates.
PLMap build_pushed_map(const JoinComplex& complex, const TwoColoring& coloring, std::uint64_t seed, int max_tries = 20);

/// Vertices whose image equals p (the low-dimensional faces meeting p).
std::vector<Vertex> q_set(const PointConfiguration& config, const Point& p);

}  // namespace pach
