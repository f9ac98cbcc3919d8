#include "ails/solution.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ails {

double route_cost(const Route& r, const Instance& inst) {
  const VehicleType& t = inst.types[r.vehicle_type];
  return t.fixed_cost + t.unit_cost * r.length;
}

Solution::Solution(const Instance& inst, const DistanceMatrix& dist)
    : inst_(&inst),
      dist_(&dist),
      member_route_(inst.n + 1, -1),
      member_pos_(inst.n + 1, -1) {}

double Solution::contribution(const Route& r) const {
  if (r.empty()) return 0.0;
  return route_cost(r, *inst_);
}

void Solution::refresh_route(int r) {
  Route& rt = routes_[r];
  const DistanceMatrix& d = *dist_;
  double load = 0.0, length = 0.0;
  int prev = 0;
  for (int v : rt.customers) {
    load += inst_->demands[v];
    length += d(prev, v);
    prev = v;
  }
  if (!rt.customers.empty()) length += d(prev, 0);
  rt.load = load;
  rt.length = length;
}

void Solution::after_mutation() {
  if (++mutations_ % 1000 == 0) {
    double fresh = total_cost(*this);
    assert(std::abs(fresh - cost_) <= 1e-6 * std::max(1.0, std::abs(fresh)));
    cost_ = fresh;
  }
}

int Solution::add_route(int vehicle_type) {
  assert(vehicle_type >= 0 && vehicle_type < inst_->num_types());
  Route r;
  r.vehicle_type = vehicle_type;
  routes_.push_back(std::move(r));
  ++structure_version_;
  return num_routes() - 1;
}

void Solution::remove_route(int r) {
  cost_ -= contribution(routes_[r]);
  for (int v : routes_[r].customers) {
    member_route_[v] = -1;
    member_pos_[v] = -1;
  }
  routes_.erase(routes_.begin() + r);
  for (int v = 1; v < static_cast<int>(member_route_.size()); ++v)
    if (member_route_[v] > r) --member_route_[v];
  ++structure_version_;
  after_mutation();
}

void Solution::set_vehicle_type(int r, int vehicle_type) {
  assert(vehicle_type >= 0 && vehicle_type < inst_->num_types());
  cost_ -= contribution(routes_[r]);
  routes_[r].vehicle_type = vehicle_type;
  cost_ += contribution(routes_[r]);
  after_mutation();
}

void Solution::remove_customer(int v) {
  int r = member_route_[v];
  int pos = member_pos_[v];
  assert(r >= 0);
  Route& rt = routes_[r];
  cost_ -= contribution(rt);
  rt.customers.erase(rt.customers.begin() + pos);
  for (int p = pos; p < rt.size(); ++p) member_pos_[rt.customers[p]] = p;
  member_route_[v] = -1;
  member_pos_[v] = -1;
  refresh_route(r);
  cost_ += contribution(rt);
  after_mutation();
}

void Solution::insert_customer(int v, int r, int pos) {
  assert(member_route_[v] < 0);
  Route& rt = routes_[r];
  assert(pos >= 0 && pos <= rt.size());
  cost_ -= contribution(rt);
  rt.customers.insert(rt.customers.begin() + pos, v);
  for (int p = pos; p < rt.size(); ++p) member_pos_[rt.customers[p]] = p;
  member_route_[v] = r;
  refresh_route(r);
  cost_ += contribution(rt);
  after_mutation();
}

void Solution::replace_interior(int r, std::vector<int> customers) {
  Route& rt = routes_[r];
  cost_ -= contribution(rt);
  rt.customers = std::move(customers);
  for (int p = 0; p < rt.size(); ++p) {
    member_route_[rt.customers[p]] = r;
    member_pos_[rt.customers[p]] = p;
  }
  refresh_route(r);
  cost_ += contribution(rt);
  after_mutation();
}

void Solution::drop_empty_routes() {
  for (int r = num_routes() - 1; r >= 0; --r)
    if (routes_[r].empty()) remove_route(r);
}

void Solution::resync() {
  for (int r = 0; r < num_routes(); ++r) refresh_route(r);
  cost_ = total_cost(*this);
}

double total_cost(const Solution& s) {
  const Instance& inst = s.instance();
  const DistanceMatrix& d = s.distances();
  double total = 0.0;
  for (const Route& rt : s.routes()) {
    if (rt.empty()) continue;
    const VehicleType& t = inst.types[rt.vehicle_type];
    double length = 0.0;
    int prev = 0;
    for (int v : rt.customers) {
      length += d(prev, v);
      prev = v;
    }
    length += d(prev, 0);
    total += t.fixed_cost + t.unit_cost * length;
  }
  return total;
}

FeasibilityReport check_feasible(const Solution& s) {
  const Instance& inst = s.instance();
  FeasibilityReport rep;
  rep.overload_by_route.resize(s.num_routes(), 0.0);
  std::vector<int> used(inst.num_types(), 0);
  for (int r = 0; r < s.num_routes(); ++r) {
    const Route& rt = s.route(r);
    ++used[rt.vehicle_type];
    double over = rt.load - inst.types[rt.vehicle_type].capacity;
    if (over > 1e-9) {
      rep.overload_by_route[r] = over;
      rep.capacity_violation += over;
    }
  }
  rep.excess_by_type.resize(inst.num_types(), 0);
  for (int t = 0; t < inst.num_types(); ++t) {
    int excess = used[t] - inst.types[t].count;
    if (excess > 0) {
      rep.excess_by_type[t] = excess;
      rep.count_excess += excess;
    }
  }
  rep.feasible = rep.capacity_violation <= 0.0 && rep.count_excess == 0;
  return rep;
}

bool is_feasible(const Solution& s) { return check_feasible(s).feasible; }

std::vector<std::pair<int, int>> solution_edges(const Solution& s) {
  std::vector<std::pair<int, int>> edges;
  for (const Route& rt : s.routes()) {
    if (rt.empty()) continue;
    int prev = 0;
    for (int v : rt.customers) {
      edges.emplace_back(std::min(prev, v), std::max(prev, v));
      prev = v;
    }
    edges.emplace_back(0, prev);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

int solution_distance(const Solution& a, const Solution& b) {
  std::vector<std::pair<int, int>> ea = solution_edges(a);
  std::vector<std::pair<int, int>> eb = solution_edges(b);
  std::size_t i = 0, j = 0;
  int diff = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i] == eb[j]) {
      ++i, ++j;
    } else if (ea[i] < eb[j]) {
      ++diff, ++i;
    } else {
      ++diff, ++j;
    }
  }
  diff += static_cast<int>((ea.size() - i) + (eb.size() - j));
  return diff;
}

std::vector<std::string> validate(const Solution& s) {
  const Instance& inst = s.instance();
  std::vector<std::string> issues;
  std::vector<int> seen(inst.n + 1, 0);
  for (int r = 0; r < s.num_routes(); ++r) {
    const Route& rt = s.route(r);
    if (rt.vehicle_type < 0 || rt.vehicle_type >= inst.num_types()) {
      issues.push_back("route " + std::to_string(r) + ": bad vehicle type");
      continue;
    }
    double load = 0.0, length = 0.0;
    int prev = 0;
    for (int p = 0; p < rt.size(); ++p) {
      int v = rt.customers[p];
      if (v < 1 || v > inst.n) {
        issues.push_back("route " + std::to_string(r) + ": bad vertex " +
                         std::to_string(v));
        continue;
      }
      ++seen[v];
      if (s.route_of(v) != r || s.pos_of(v) != p)
        issues.push_back("customer " + std::to_string(v) +
                         ": membership does not match position");
      load += inst.demands[v];
      length += s.distances()(prev, v);
      prev = v;
    }
    if (!rt.empty()) length += s.distances()(prev, 0);
    if (std::abs(load - rt.load) > 1e-9)
      issues.push_back("route " + std::to_string(r) + ": load cache drift");
    if (std::abs(length - rt.length) > 1e-9 * std::max(1.0, length))
      issues.push_back("route " + std::to_string(r) + ": length cache drift");
  }
  for (int v = 1; v <= inst.n; ++v) {
    if (seen[v] == 0 && s.route_of(v) >= 0)
      issues.push_back("customer " + std::to_string(v) +
                       ": membership points at a route that lacks it");
    if (seen[v] == 0 && s.route_of(v) < 0)
      issues.push_back("customer " + std::to_string(v) + ": unassigned");
    if (seen[v] > 1)
      issues.push_back("customer " + std::to_string(v) + ": appears " +
                       std::to_string(seen[v]) + " times");
  }
  double fresh = total_cost(s);
  if (std::abs(fresh - s.cost()) > 1e-6 * std::max(1.0, std::abs(fresh)))
    issues.push_back("cost cache drift");
  return issues;
}

}  // namespace ails
