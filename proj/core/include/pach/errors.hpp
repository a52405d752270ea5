#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pach {

// An exact predicate detected a non-generic incidence. Callers that drew the
// offending input at random are expected to redraw it.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration or search budget would be exceeded.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotACoboundaryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure inside one stage of the overlap pipeline; stage() names it.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace pach
