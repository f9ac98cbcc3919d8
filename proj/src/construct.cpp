#include "ails/construct.hpp"

#include <numeric>
#include <stdexcept>

#include "ails/perturb.hpp"

namespace ails {

namespace {

// Uniform over the types that still have a vehicle left; uniform over all of
// them if the fleet is exhausted (the repair pass then has to sort it out).
int seed_type(const Solution& s, Rng& rng) {
  const Instance& inst = s.instance();
  std::vector<int> used(inst.num_types(), 0);
  for (const Route& rt : s.routes()) ++used[rt.vehicle_type];
  std::vector<int> avail;
  for (int t = 0; t < inst.num_types(); ++t)
    if (used[t] < inst.types[t].count) avail.push_back(t);
  if (avail.empty()) return rng.uniform_int(0, inst.num_types() - 1);
  return avail[rng.uniform_int(0, static_cast<int>(avail.size()) - 1)];
}

}  // namespace

Solution build_initial(const Instance& inst, const DistanceMatrix& dist,
                       LocalSearch& search, int m_lo, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Solution s(inst, dist);
    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    for (int i = 0; i < m_lo; ++i) {
      int r = s.add_route(seed_type(s, rng));
      s.insert_customer(order[i], r, 0);
    }
    for (int i = m_lo; i < inst.n; ++i)
      insert_at_best(s, order[i], InsertionKind::ByDistance, all_positions(s));
    if (search.repair(s, rng)) return s;
  }
  throw std::runtime_error(
      "could not build a feasible start solution in 1000 attempts; "
      "fleet too tight for the demand");
}

}  // namespace ails
