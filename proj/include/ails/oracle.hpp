#ifndef AILS_ORACLE_HPP
#define AILS_ORACLE_HPP

#include "ails/instance.hpp"
#include "ails/solution.hpp"

namespace ails {

struct OracleResult {
  double cost = 0.0;
  Solution solution;
};

// Exhaustive optimum for tiny instances: every set partition of the
// customers (restricted-growth enumeration, block count capped by the route
// bound), every per-route visiting order, and a branch-and-bound assignment
// of vehicle types under the per-type availability. Deliberately independent
// of the search machinery; costs are accumulated from the distance matrix
// directly. Refuses n > 8 (std::invalid_argument) and throws
// std::runtime_error if no feasible assignment exists at all.
OracleResult exact_solve(const Instance& inst, const DistanceMatrix& dist);

}  // namespace ails

#endif
