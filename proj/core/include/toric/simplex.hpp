#pragma once

#include <optional>
#include <vector>

#include "toric/mat.hpp"
#include "toric/rat.hpp"

namespace toric {

// Linear constraint coeff . x REL rhs over free (sign-unrestricted) variables.
struct LinConstraint {
  enum class Rel { Eq, Ge };
  RatVec coeff;
  Rat rhs;
  Rel rel = Rel::Ge;
};

// Exact feasibility of a system of linear constraints; returns a feasible
// point if one exists. Phase-I simplex with Bland's rule, fully rational.
std::optional<RatVec> feasible_point(const std::vector<LinConstraint>& cs, std::size_t nvars);

}  // namespace toric
