#include "ails/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ails {

void validate_instance(const Instance& inst) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };

  std::size_t v = static_cast<std::size_t>(inst.n) + 1;
  if (inst.n < 1) fail("instance needs at least one customer");
  if (inst.xs.size() != v || inst.ys.size() != v)
    fail("coordinate count does not match DIMENSION");
  if (inst.demands.size() != v) fail("demand count does not match DIMENSION");
  if (inst.demands[0] != 0.0) fail("depot demand must be zero");
  if (inst.types.empty()) fail("at least one vehicle type required");

  double max_cap = 0.0;
  for (const VehicleType& t : inst.types) {
    if (t.capacity <= 0.0) fail("vehicle capacity must be positive");
    if (t.fixed_cost < 0.0 || t.unit_cost < 0.0) fail("negative vehicle cost");
    if (t.count < 0) fail("negative vehicle count");
    max_cap = std::max(max_cap, t.capacity);
  }
  for (int i = 1; i <= inst.n; ++i) {
    if (inst.demands[i] <= 0.0)
      fail("customer " + std::to_string(i) + " has non-positive demand");
    if (inst.demands[i] > max_cap)
      fail("customer " + std::to_string(i) + " exceeds every vehicle capacity");
  }
}

Instance normalize_fleet(const Instance& inst) {
  if (inst.normalized) return inst;
  Instance out = inst;
  out.original_types = inst.types;
  for (VehicleType& t : out.types) {
    if (!has_fixed_costs(inst.variant)) t.fixed_cost = 0.0;
    if (!has_dependent_costs(inst.variant)) t.unit_cost = 1.0;
    if (!limited_fleet(inst.variant)) t.count = inst.n;
  }
  out.normalized = true;
  return out;
}

DistanceMatrix::DistanceMatrix(const Instance& inst)
    : size_(inst.n + 1), d_(static_cast<std::size_t>(size_) * size_, 0.0) {
  for (int i = 0; i <= inst.n; ++i) {
    for (int j = i + 1; j <= inst.n; ++j) {
      double dx = inst.xs[i] - inst.xs[j];
      double dy = inst.ys[i] - inst.ys[j];
      double d = std::sqrt(dx * dx + dy * dy);
      d_[i * size_ + j] = d;
      d_[j * size_ + i] = d;
    }
  }
}

NeighborLists build_neighbors(const Instance& inst, const DistanceMatrix& dist,
                              int phi) {
  if (phi < 1 || phi > inst.n)
    throw std::invalid_argument("phi out of range [1, n]");
  NeighborLists nl;
  nl.at.resize(inst.n + 1);
  std::vector<int> order(inst.n);
  for (int v = 0; v <= inst.n; ++v) {
    order.clear();
    for (int u = 0; u <= inst.n; ++u)
      if (u != v) order.push_back(u);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      double da = dist(v, a), db = dist(v, b);
      if (da != db) return da < db;
      return a < b;
    });
    order.resize(phi);
    nl.at[v] = order;
  }
  return nl;
}

int min_routes(const Instance& inst) {
  double total = std::accumulate(inst.demands.begin(), inst.demands.end(), 0.0);
  double max_cap = 0.0;
  for (const VehicleType& t : inst.types) max_cap = std::max(max_cap, t.capacity);
  int m = static_cast<int>(std::floor(total / max_cap));
  return std::max(1, m);
}

int max_routes(const Instance& inst) {
  if (!limited_fleet(inst.variant)) return inst.n;
  int total = 0;
  for (const VehicleType& t : inst.types) total += t.count;
  return total;
}

}  // namespace ails
