#pragma once

#include "grading.hpp"

#include <vector>

namespace g2x {

/// Independent Betti-number computation: enumerates each degree's relation
/// span by exhaustive monomial-times-relation products and row-reduces over
/// the rationals. Shares no code path with the Smith-normal-form engine;
/// used to cross-check compute()'s free ranks.
std::vector<std::size_t> betti_by_rational_elimination(const RingPresentation& p);

}  // namespace g2x
