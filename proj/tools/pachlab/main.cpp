#include "commands.hpp"

#include <pach/errors.hpp>
#include <pach/version.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using pachlab::Options;

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw pachlab::CommandError("io", "cannot write " + o.out);
    file << text;
}

int report_error(const Options& o, const std::string& type, const std::string& message, const json& details = nullptr,
                 const std::string& stage = {}) {
    json err{{"command", o.command}, {"type", type}, {"message", message}};
    if (!stage.empty()) err["stage"] = stage;
    if (!details.is_null()) err["details"] = details;
    std::cerr << json{{"tool", "pachlab"}, {"version", pach::kVersion}, {"error", err}}.dump() << '\n';
    return type == "usage" ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on topological Pach families"};
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool randomized) {
        sub->add_option("--d", o.d, "Dimension d of the join complex")->capture_default_str();
        sub->add_option("--n", o.n, "Part size n");
        sub->add_option("--jobs", o.jobs, "Worker threads; output does not depend on it")->capture_default_str();
        sub->add_option("--out", o.out, "Write the artifact here instead of stdout");
        sub->add_option("--format", o.format, "json or csv")->capture_default_str();
        if (randomized) sub->add_option("--seed", o.seed, "Random seed (mandatory)");
    };

    auto* chains = app.add_subcommand("chains-verify", "Check chain-complex identities and cohomology ranks");
    common(chains, true);
    chains->add_option("--trials", o.trials, "Random pairs for the adjointness check");
    auto* cof = app.add_subcommand("cofill", "Minimal cofilling of a random coboundary");
    common(cof, true);
    cof->add_option("--k", o.k, "Dimension of the coboundary (default d)");
    cof->add_option("--mode", o.mode, "exact or greedy")->capture_default_str();
    cof->add_option("--budget-coset-bits", o.budget_coset_bits, "Largest coset dimension searched exactly")->capture_default_str();
    auto* sphere = app.add_subcommand("sphere-exp", "Maximum Pach families under random sphere fillings");
    common(sphere, true);
    sphere->add_option("--trials", o.trials, "Number of seeds (seed, seed+1, ...)")->capture_default_str();
    sphere->add_option("--max-candidates", o.max_candidates, "Cap on candidate points per seed (0 = all)");
    sphere->add_option("--budget-nodes", o.budget_nodes, "Search node budget per candidate")->capture_default_str();
    sphere->add_flag("--timing", o.timing, "Include wall time (output is then not reproducible)");
    sphere->add_flag("!--no-control", o.control, "Skip the all-standard control filling");
    auto* color = app.add_subcommand("color-search", "Search for a 2-coloring with monochromatic cliques everywhere");
    common(color, true);
    color->add_option("--m", o.m, "Target subgraph size");
    color->add_option("--retries", o.retries, "Colorings drawn before giving up")->capture_default_str();
    color->add_option("--budget-selectors", o.budget_selectors, "Exhaustive selector budget")->capture_default_str();
    color->add_option("--samples", o.samples, "Selectors sampled beyond the budget")->capture_default_str();
    color->add_flag("--scan", o.scan, "Report the smallest m reached");
    auto* clique = app.add_subcommand("clique-prob", "Clique-free fraction of edge subsets of the complete (d,m)-graph");
    clique->add_option("--d", o.d, "Dimension d")->capture_default_str();
    clique->add_option("--m", o.m, "Part size m");
    clique->add_option("--seed", o.seed, "Seed for the sampled regime");
    clique->add_option("--samples", o.samples, "Samples beyond the exhaustive regime")->capture_default_str();
    clique->add_option("--out", o.out, "Write the artifact here instead of stdout");
    auto* bnd = app.add_subcommand("bounds", "Thresholds and union bounds");
    common(bnd, false);
    bnd->add_option("--m", o.m, "Evaluate union bounds at this m (default: the thresholds)");
    auto* build = app.add_subcommand("build-map", "Build a pushed (or affine) PL map");
    common(build, true);
    build->add_flag("--affine", o.affine, "Random affine map instead of a pushed map");
    build->add_option("--m", o.m, "Search for a coloring verified at this m first");
    build->add_option("--retries", o.retries, "Colorings drawn when --m is given")->capture_default_str();
    build->add_option("--budget-selectors", o.budget_selectors, "Exhaustive selector budget")->capture_default_str();
    auto* pipe = app.add_subcommand("pipeline", "Run the overlap pipeline on a map file");
    common(pipe, true);
    pipe->add_option("--map", o.map_path, "PLMap JSON file (or a build-map artifact)")->required();
    auto* ext = app.add_subcommand("extract", "Greedy and exact complete tripartite extraction");
    common(ext, true);
    ext->add_option("--graph", o.graph_path, "Tripartite graph JSON file");
    ext->add_option("--hypergraph", o.hypergraph_path, "Partite hypergraph JSON file");
    ext->add_option("--density", o.density, "Edge probability for a random graph")->capture_default_str();
    ext->add_option("--budget-part-limit", o.budget_part_limit, "Largest part the exact oracle accepts")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        const pachlab::Artifact a = pachlab::run_command(o);
        const json config = pachlab::config_json(o);
        if (o.format == "csv") {
            emit(o, "# pachlab " + std::string(pach::kVersion) + "\n# config " + config.dump() + "\n" + *a.csv);
        } else {
            const json doc{{"tool", "pachlab"}, {"version", pach::kVersion}, {"command", o.command}, {"config", config}, {"result", a.result}};
            emit(o, doc.dump(2) + "\n");
        }
        return a.status;
    } catch (const pachlab::CommandError& e) {
        return report_error(o, e.type(), e.what(), e.details());
    } catch (const pach::PipelineError& e) {
        return report_error(o, "pipeline", e.what(), nullptr, e.stage());
    } catch (const pach::BudgetExceededError& e) {
        return report_error(o, "budget", e.what());
    } catch (const pach::DegeneracyError& e) {
        return report_error(o, "degeneracy", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(o, "invalid_argument", e.what());
    } catch (const std::exception& e) {
        return report_error(o, "runtime", e.what());
    }
}
