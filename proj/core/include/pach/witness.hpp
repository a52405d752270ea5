#pragma once

#include "pach/exact_geometry.hpp"

#include <string>
#include <vector>

namespace pach {

/// Parts P_0..P_d (vertex indices within each part) whose transversal faces
/// all cover p. size is the common part size.
struct PachWitness {
    std::vector<std::vector<int>> parts;
    Point p;
    int size = 0;
    /// Set when a search budget ran out; size is then only a lower bound.
    bool lower_bound_only = false;
    std::vector<std::string> log;
};

}  // namespace pach
