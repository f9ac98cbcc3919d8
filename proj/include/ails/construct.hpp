#ifndef AILS_CONSTRUCT_HPP
#define AILS_CONSTRUCT_HPP

#include "ails/rng.hpp"
#include "ails/search.hpp"
#include "ails/solution.hpp"

namespace ails {

// Start solution: m_lo singleton routes seeded with distinct random
// customers on uniformly drawn available types, remaining customers inserted
// in random order at the nearest-endpoint position with capacity ignored,
// then the repair procedure. Retries the whole recipe until it comes out
// feasible; throws std::runtime_error after 1000 failed attempts.
Solution build_initial(const Instance& inst, const DistanceMatrix& dist,
                       LocalSearch& search, int m_lo, Rng& rng);

}  // namespace ails

#endif
