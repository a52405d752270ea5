#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pachlab {

struct Options {
    std::string command;
    int d = 2;
    int n = 0;
    int m = 0;
    int k = 0;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::uint64_t budget_selectors = 10'000'000;
    unsigned budget_coset_bits = 24;
    std::uint64_t budget_nodes = 10'000'000;
    int budget_part_limit = 8;
    int trials = 10;
    int retries = 20;
    std::size_t max_candidates = 0;
    std::uint64_t samples = 100'000;
    std::string mode = "exact";
    std::string map_path;
    std::string graph_path;
    std::string hypergraph_path;
    double density = 0.5;
    bool affine = false;
    bool scan = false;
    bool control = true;
    bool timing = false;
    std::string out;
    std::string format = "json";
};

/// The options that determine a command's output (everything but --out).
nlohmann::json config_json(const Options& o);

struct Artifact {
    nlohmann::json result;
    /// Set by commands that support --format csv.
    std::optional<std::string> csv;
    /// Nonzero when the command ran but an invariant it checks failed.
    int status = 0;
};

/// A failure with a machine-readable payload.
class CommandError : public std::runtime_error {
public:
    CommandError(std::string type, const std::string& message, nlohmann::json details = nullptr)
        : std::runtime_error(message), type_(std::move(type)), details_(std::move(details)) {}
    const std::string& type() const { return type_; }
    const nlohmann::json& details() const { return details_; }

private:
    std::string type_;
    nlohmann::json details_;
};

Artifact run_command(const Options& o);

}  // namespace pachlab
