#include "commands.hpp"

#include <pach/coloring_construction.hpp>
#include <pach/errors.hpp>
#include <pach/extraction.hpp>
#include <pach/f2_cochains.hpp>
#include <pach/io.hpp>
#include <pach/log_bounds.hpp>
#include <pach/overlap_pipeline.hpp>
#include <pach/pl_intersection.hpp>
#include <pach/random.hpp>
#include <pach/sphere_construction.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace pachlab {

using nlohmann::json;
using namespace pach;

json config_json(const Options& o) {
    json c{{"command", o.command},
           {"d", o.d},
           {"n", o.n},
           {"m", o.m},
           {"k", o.k},
           {"seed", o.seed ? json(*o.seed) : json(nullptr)},
           {"jobs", o.jobs},
           {"budget_selectors", o.budget_selectors},
           {"budget_coset_bits", o.budget_coset_bits},
           {"budget_nodes", o.budget_nodes},
           {"budget_part_limit", o.budget_part_limit},
           {"trials", o.trials},
           {"retries", o.retries},
           {"max_candidates", o.max_candidates},
           {"samples", o.samples},
           {"mode", o.mode},
           {"density", o.density},
           {"affine", o.affine},
           {"scan", o.scan},
           {"control", o.control},
           {"timing", o.timing},
           {"format", o.format}};
    if (!o.map_path.empty()) c["map"] = o.map_path;
    if (!o.graph_path.empty()) c["graph"] = o.graph_path;
    if (!o.hypergraph_path.empty()) c["hypergraph"] = o.hypergraph_path;
    return c;
}

namespace {

std::uint64_t require_seed(const Options& o) {
    if (!o.seed) throw CommandError("usage", o.command + " is randomized and needs an explicit --seed");
    return *o.seed;
}

void require_n(const Options& o, int min = 1) {
    if (o.n < min) throw CommandError("usage", o.command + " needs --n >= " + std::to_string(min));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CommandError("io", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CommandError("io", path + ": " + e.what());
    }
}

json log_bound_json(const LogBound& b) {
    return {{"estimate", b.estimate}, {"lower", b.lower_text}, {"upper", b.upper_text}, {"certified_sign", b.certified_sign}};
}

F2Chain basis_chain(const JoinComplex& X, int k, std::uint64_t r) {
    F2Chain c = F2Chain::zero(X, k);
    c.bits().set(r);
    return c;
}

F2Cochain basis_cochain(const JoinComplex& X, int k, std::uint64_t r) {
    F2Cochain c = F2Cochain::zero(X, k);
    c.bits().set(r);
    return c;
}

BitVector random_bits(Rng& rng, std::size_t size) {
    BitVector v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng.bit()) v.set(i);
    return v;
}

Artifact chains_verify(const Options& o) {
    require_n(o);
    const std::uint64_t seed = require_seed(o);
    const JoinComplex X(o.d, o.n);
    json result;
    bool ok = true;

    std::uint64_t dd_failures = 0;
    for (int k = 1; k <= o.d; ++k)
        for (std::uint64_t r = 0; r < X.face_count(k); ++r)
            if (boundary(X, boundary(X, basis_chain(X, k, r))).bits().any()) ++dd_failures;
    std::uint64_t cc_failures = 0;
    for (int k = 0; k + 2 <= o.d; ++k)
        for (std::uint64_t r = 0; r < X.face_count(k); ++r)
            if (coboundary(X, coboundary(X, basis_cochain(X, k, r))).bits().any()) ++cc_failures;

    Rng rng(derive_seed(seed, 0xad1));
    std::uint64_t adj_failures = 0;
    const int pairs = o.trials > 0 ? o.trials : 1000;
    for (int i = 0; i < pairs && o.d >= 1; ++i) {
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(o.d)));
        const F2Cochain a(k, random_bits(rng, X.face_count(k)));
        const F2Chain c(k + 1, random_bits(rng, X.face_count(k + 1)));
        if (pairing(coboundary(X, a), c) != pairing(a, boundary(X, c))) ++adj_failures;
    }
    json ranks = json::array();
    for (int k = 0; k <= o.d; ++k) ranks.push_back(cohomology_rank(X, k));
    ok = dd_failures == 0 && cc_failures == 0 && adj_failures == 0;
    result = {{"boundary_squared_failures", dd_failures},
              {"coboundary_squared_failures", cc_failures},
              {"adjointness_pairs", pairs},
              {"adjointness_failures", adj_failures},
              {"reduced_cohomology_ranks", ranks},
              {"ok", ok}};
    return {result, std::nullopt, ok ? 0 : 3};
}

Artifact cofill(const Options& o) {
    require_n(o);
    const std::uint64_t seed = require_seed(o);
    const JoinComplex X(o.d, o.n);
    const int k = o.k > 0 ? o.k : o.d;
    if (k < 1 || k > o.d) throw CommandError("usage", "cofill needs 1 <= --k <= d");
    Rng rng(derive_seed(seed, 0xc0f));
    const F2Cochain a0(k - 1, random_bits(rng, X.face_count(k - 1)));
    const F2Cochain b = coboundary(X, a0);
    CofillingOptions opts;
    if (o.mode == "exact")
        opts.mode = CofillingMode::exact;
    else if (o.mode == "greedy")
        opts.mode = CofillingMode::greedy;
    else
        throw CommandError("usage", "--mode must be exact or greedy");
    opts.max_coset_bits = o.budget_coset_bits;
    opts.jobs = o.jobs;
    const CofillingReport rep = minimal_cofilling(X, b, opts);
    const Rational L = cofilling_constant(o.d, o.n, k);
    json result{{"k", k},
                {"b", cochain_to_json(X, rep.b)},
                {"a", cochain_to_json(X, rep.a)},
                {"norm_b", to_string(norm(X, rep.b))},
                {"norm_a", to_string(norm(X, rep.a))},
                {"ratio", to_string(rep.ratio)},
                {"cofilling_constant", to_string(L)},
                {"within_constant", rep.ratio <= L},
                {"exact", rep.exact},
                {"coset_dimension", rep.coset_dimension}};
    return {result, std::nullopt, 0};
}

Artifact sphere_exp(const Options& o) {
    require_n(o);
    const std::uint64_t seed = require_seed(o);
    SphereExperimentConfig cfg;
    cfg.n = o.n;
    cfg.d = o.d;
    for (int i = 0; i < std::max(1, o.trials); ++i) cfg.seeds.push_back(seed + static_cast<std::uint64_t>(i));
    cfg.max_candidates = o.max_candidates;
    cfg.control = o.control;
    cfg.jobs = o.jobs;
    cfg.node_budget = o.budget_nodes;
    cfg.timing = o.timing;
    const SphereExperimentReport rep = sphere_upper_experiment(cfg);
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row{{"seed", r.seed},
                 {"filling", r.filling},
                 {"candidate_index", r.candidate_index},
                 {"candidates_tested", r.candidates_tested},
                 {"p", point_to_json(r.p)},
                 {"max_m", r.max_m},
                 {"lower_bound_only", r.lower_bound_only},
                 {"far_point_tested", r.far_point_tested}};
        if (o.timing) row["wall_seconds"] = r.wall_seconds;
        rows.push_back(row);
    }
    json result{{"rows", rows},
                {"threshold", rep.threshold},
                {"threshold_real", rep.threshold_real},
                {"control_dominance", rep.control_dominance}};
    return {result, to_csv(rep), 0};
}

Artifact color_search(const Options& o) {
    require_n(o);
    const std::uint64_t seed = require_seed(o);
    if (o.d < 2) throw CommandError("usage", "color-search needs d >= 2");
    const JoinComplex X(o.d, o.n);
    ColoringVerifyOptions vopts;
    vopts.budget = o.budget_selectors;
    vopts.samples = o.samples;
    vopts.seed = seed;
    vopts.jobs = o.jobs;
    auto search_json = [&](int m, const ColoringSearchResult& r) {
        json j{{"m", m}, {"found", r.coloring.has_value()}, {"attempts", r.attempts}, {"sampled_only", r.verification.sampled_only},
               {"selectors_checked", r.verification.selectors_checked}};
        if (r.coloring) j["coloring"] = coloring_to_json(*r.coloring);
        if (r.verification.failure) j["last_failure"] = *r.verification.failure;
        return j;
    };
    json result;
    if (o.scan) {
        json scans = json::array();
        json minimal = nullptr;
        for (int m = 1; m <= o.n; ++m) {
            const auto r = search_coloring(X, m, seed, o.retries, vopts);
            scans.push_back(search_json(m, r));
            if (r.coloring) {
                minimal = m;
                break;
            }
        }
        result = {{"scan", scans}, {"minimal_m", minimal}};
    } else {
        if (o.m < 1 || o.m > o.n) throw CommandError("usage", "color-search needs 1 <= --m <= n (or --scan)");
        result = search_json(o.m, search_coloring(X, o.m, seed, o.retries, vopts));
    }
    return {result, std::nullopt, 0};
}

Artifact clique_prob(const Options& o) {
    if (o.m < 1 || o.d < 1) throw CommandError("usage", "clique-prob needs --m >= 1 and --d >= 1");
    CliqueProbabilityOptions opts;
    opts.samples = o.samples;
    const std::uint64_t edges = static_cast<std::uint64_t>(o.d + 1) * static_cast<std::uint64_t>(std::pow(o.m, o.d));
    if (edges > opts.max_exhaustive_edges) opts.seed = require_seed(o);
    const auto rep = clique_probability_oracle(o.m, o.d, opts);
    json result{{"m", rep.m},
                {"d", rep.d},
                {"edges", rep.edges},
                {"cliques", rep.cliques},
                {"exact", rep.exact},
                {"subsets", rep.subsets},
                {"bound", to_string(rep.bound)},
                {"regular", rep.regular},
                {"cliques_per_edge", rep.cliques_per_edge}};
    if (rep.exact) {
        result["fraction"] = to_string(rep.fraction);
        result["within_bound"] = rep.within_bound;
    } else {
        result["estimate"] = rep.estimate;
        result["ci95"] = {rep.ci_low, rep.ci_high};
    }
    return {result, std::nullopt, rep.exact && !rep.within_bound ? 3 : 0};
}

Artifact bounds(const Options& o) {
    require_n(o, 2);
    const auto n = static_cast<std::uint64_t>(o.n);
    json result{{"gromov_bound", to_string(gromov_bound(o.d))}};
    const std::int64_t ts = pach_threshold_sphere(n, o.d);
    const std::uint64_t ms = o.m > 0 ? static_cast<std::uint64_t>(o.m) : std::min<std::uint64_t>(static_cast<std::uint64_t>(ts), n);
    result["sphere"] = {{"threshold", ts},
                        {"threshold_real", scaled_log_root(2, n, static_cast<unsigned long>(o.d))},
                        {"union_bound_m", ms},
                        {"union_bound_log", ms <= n ? log_bound_json(sphere_union_bound(n, o.d, ms)) : json(nullptr)}};
    if (o.d >= 2) {
        const std::int64_t tc = pach_threshold_coloring(n, o.d);
        const std::uint64_t mc = o.m > 0 ? static_cast<std::uint64_t>(o.m) : static_cast<std::uint64_t>(tc);
        result["coloring"] = {{"threshold", tc},
                              {"threshold_real", scaled_log_root(25, n, static_cast<unsigned long>(o.d - 1))},
                              {"construction_cap", coloring_construction_cap(n, o.d)},
                              {"lower_bound_constant_term", 1e-14 * std::pow(std::log(static_cast<double>(n)), 1.0 / (o.d - 1))},
                              {"union_bound_m", mc},
                              {"union_bound_log", mc <= n ? log_bound_json(coloring_union_bound(n, o.d, mc)) : json(nullptr)}};
    }
    json cofill = json::array();
    for (int k = 1; k <= o.d; ++k) cofill.push_back({{"k", k}, {"constant", to_string(cofilling_constant(o.d, o.n, k))}});
    result["cofilling_constants"] = cofill;
    return {result, std::nullopt, 0};
}

Artifact build_map(const Options& o) {
    require_n(o);
    const std::uint64_t seed = require_seed(o);
    if (o.d != 2) throw CommandError("usage", "build-map supports d = 2 only");
    const JoinComplex X(2, o.n);
    json result;
    if (o.affine) {
        result["map"] = plmap_to_json(random_affine_map(o.n, seed));
        result["kind"] = "affine";
    } else {
        TwoColoring coloring = random_coloring(X, seed);
        if (o.m > 0) {
            ColoringVerifyOptions vopts;
            vopts.budget = o.budget_selectors;
            vopts.seed = seed;
            vopts.jobs = o.jobs;
            const auto found = search_coloring(X, o.m, seed, o.retries, vopts);
            if (!found.coloring) throw CommandError("search", "no coloring verified at m = " + std::to_string(o.m));
            coloring = *found.coloring;
        }
        result["map"] = plmap_to_json(build_pushed_map(X, coloring, seed));
        result["coloring"] = coloring_to_json(coloring);
        result["kind"] = "pushed";
    }
    return {result, std::nullopt, 0};
}

PLMap load_map(const std::string& path) {
    const json j = read_json_file(path);
    const json& body = j.contains("result") && j["result"].contains("map") ? j["result"]["map"] : j;
    try {
        return plmap_from_json(body);
    } catch (const std::exception& e) {
        throw CommandError("validation", std::string("unreadable map: ") + e.what());
    }
}

Artifact pipeline(const Options& o) {
    if (o.map_path.empty()) throw CommandError("usage", "pipeline needs --map FILE");
    const std::uint64_t seed = require_seed(o);
    const PLMap map = load_map(o.map_path);
    const MapValidationReport report = validate_map(map);
    if (!report.valid()) {
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
        throw CommandError("validation", "map failed validation with " + std::to_string(report.violation_count) + " violations",
                           {{"violation_count", report.violation_count}, {"violations", violations}});
    }
    const PipelineResult r = run_pipeline(map, seed, o.jobs);
    const double ln_n = std::log(static_cast<double>(map.complex.part_size()));
    json result{{"proof_log", r.log},
                {"witness", witness_to_json(r.witness)},
                {"verified", r.verified},
                {"covers_agreement", is_affine(map) ? json(r.covers_agreement) : json(nullptr)},
                {"reference", {{"construction_cap_30_ln_n", 30 * ln_n}, {"lower_bound_1e-14_ln_n", 1e-14 * ln_n}}}};
    return {result, std::nullopt, r.verified ? 0 : 3};
}

Artifact extract(const Options& o) {
    json result;
    if (!o.hypergraph_path.empty()) {
        PartiteHypergraph h = [&] {
            try {
                return hypergraph_from_json(read_json_file(o.hypergraph_path));
            } catch (const std::invalid_argument& e) {
                throw CommandError("validation", e.what());
            }
        }();
        int greedy = 0;
        BoxParts parts;
        for (int t = 1; t <= h.part_size(); ++t) {
            auto box = extract_box(h, t);
            if (!box) break;
            greedy = t;
            parts = *box;
        }
        result = {{"kind", "hypergraph"}, {"density", to_string(h.density())}, {"greedy_t", greedy}, {"greedy_parts", parts}};
        if (h.part_size() <= o.budget_part_limit) {
            const auto oracle = brute_max_box(h, o.budget_part_limit);
            result["oracle_t"] = oracle.t;
            result["oracle_parts"] = oracle.parts;
        }
        return {result, std::nullopt, 0};
    }
    TripartiteGraph g({0, 0, 0});
    if (!o.graph_path.empty()) {
        try {
            g = graph_from_json(read_json_file(o.graph_path));
        } catch (const std::invalid_argument& e) {
            throw CommandError("validation", e.what());
        }
        result["source"] = o.graph_path;
    } else {
        require_n(o);
        const std::uint64_t seed = require_seed(o);
        if (o.density < 0 || o.density > 1) throw CommandError("usage", "--density must lie in [0, 1]");
        g = TripartiteGraph({o.n, o.n, o.n});
        Rng rng(derive_seed(seed, 0xe7));
        const auto cut = static_cast<std::uint64_t>(o.density * static_cast<double>(1u << 20));
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int u = 0; u < o.n; ++u)
                    for (int v = 0; v < o.n; ++v)
                        if (rng.below(1u << 20) < cut) g.add_edge({a, u}, {b, v});
        result["graph"] = graph_to_json(g);
    }
    const auto greedy = extract_largest_tripartite(g);
    result["kind"] = "tripartite";
    result["edges"] = g.edge_count();
    result["triangles"] = count_triangles(g);
    result["greedy_t"] = greedy.t;
    result["greedy_parts"] = greedy.parts;
    const auto& s = g.sizes();
    if (std::max({s[0], s[1], s[2]}) <= o.budget_part_limit) {
        const auto oracle = brute_max_complete_tripartite(g, o.budget_part_limit);
        result["oracle_t"] = oracle.t;
        result["oracle_parts"] = oracle.parts;
    }
    return {result, std::nullopt, 0};
}

}  // namespace

Artifact run_command(const Options& o) {
    if (o.format != "json" && o.format != "csv") throw CommandError("usage", "--format must be json or csv");
    if (o.jobs == 0) throw CommandError("usage", "--jobs must be positive");
    if (o.budget_selectors == 0 || o.budget_coset_bits == 0 || o.budget_nodes == 0 || o.budget_part_limit <= 0)
        throw CommandError("usage", "budgets must be positive");
    if (o.d < 1 || o.d > 16) throw CommandError("usage", "--d must lie in [1, 16]");
    Artifact a;
    if (o.command == "chains-verify")
        a = chains_verify(o);
    else if (o.command == "cofill")
        a = cofill(o);
    else if (o.command == "sphere-exp")
        a = sphere_exp(o);
    else if (o.command == "color-search")
        a = color_search(o);
    else if (o.command == "clique-prob")
        a = clique_prob(o);
    else if (o.command == "bounds")
        a = bounds(o);
    else if (o.command == "build-map")
        a = build_map(o);
    else if (o.command == "pipeline")
        a = pipeline(o);
    else if (o.command == "extract")
        a = extract(o);
    else
        throw CommandError("usage", "unknown command " + o.command);
    if (o.format == "csv" && !a.csv) throw CommandError("usage", o.command + " does not support --format csv");
    return a;
}

}  // namespace pachlab
