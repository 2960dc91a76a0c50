#pragma once

#include <utility>
#include <vector>

#include "deca/descent.hpp"
#include "deca/integer.hpp"

namespace deca::thue {

// Solutions of c1 x^d + c2 y^d = c3 with |x| <= bound; complete within the
// x-window (y is determined exactly by x, so no y-bound is needed).
struct ThueSolutionSet {
    descent::ThueInstance instance;
    Int bound;
    std::vector<std::pair<Int, Int>> solutions;  // sorted by (x, y)
};

// Bounded search standing in for a rigorous Thue resolution: for each
// |x| <= B, solve c2 y^d = c3 - c1 x^d by exact root extraction.
ThueSolutionSet solve_bounded(const descent::ThueInstance& instance, const Int& B);

}  // namespace deca::thue
