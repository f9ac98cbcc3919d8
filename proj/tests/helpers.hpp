#ifndef AILS_TESTS_HELPERS_HPP
#define AILS_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "ails/instance.hpp"
#include "ails/rng.hpp"
#include "ails/solution.hpp"

namespace ails::testing {

// Raw (unnormalized) instance from point/demand/type lists. Index 0 is the
// depot; demands must already carry the leading 0.
inline Instance make_instance(Variant variant,
                              std::vector<std::pair<double, double>> pts,
                              std::vector<double> demands,
                              std::vector<VehicleType> types) {
  Instance inst;
  inst.name = "test";
  inst.variant = variant;
  inst.n = static_cast<int>(pts.size()) - 1;
  for (auto [x, y] : pts) {
    inst.xs.push_back(x);
    inst.ys.push_back(y);
  }
  inst.demands = std::move(demands);
  inst.types = std::move(types);
  validate_instance(inst);
  return inst;
}

// Solution from explicit (vehicle type, interior sequence) lists.
inline Solution make_solution(
    const Instance& inst, const DistanceMatrix& dist,
    const std::vector<std::pair<int, std::vector<int>>>& routes) {
  Solution s(inst, dist);
  for (const auto& [type, seq] : routes) {
    int r = s.add_route(type);
    for (int v : seq) s.insert_customer(v, r, s.route(r).size());
  }
  return s;
}

// Every customer on its own route, vehicle types drawn uniformly among the
// ones that fit the demand. A convenient starting point for mutation storms.
inline Solution singleton_solution(const Instance& inst,
                                   const DistanceMatrix& dist, Rng& rng) {
  Solution s(inst, dist);
  for (int v = 1; v <= inst.n; ++v) {
    std::vector<int> fitting;
    for (int t = 0; t < inst.num_types(); ++t)
      if (inst.types[t].capacity >= inst.demands[v]) fitting.push_back(t);
    int t = fitting[rng.uniform_int(0, static_cast<int>(fitting.size()) - 1)];
    int r = s.add_route(t);
    s.insert_customer(v, r, 0);
  }
  return s;
}

}  // namespace ails::testing

#endif
