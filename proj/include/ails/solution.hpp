#ifndef AILS_SOLUTION_HPP
#define AILS_SOLUTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "ails/instance.hpp"

namespace ails {

// One vehicle trip: depot -> customers... -> depot. Only the interior
// sequence is stored; load and length are caches kept by Solution.
struct Route {
  int vehicle_type = 0;
  std::vector<int> customers;
  double load = 0.0;
  double length = 0.0;

  bool empty() const { return customers.empty(); }
  int size() const { return static_cast<int>(customers.size()); }
};

// Cost of the route if its vehicle were used: fixed cost plus unit cost
// times length. An empty route still reports its fixed cost here; whether
// that is charged is the objective's business (it only charges used
// vehicles, i.e. non-empty routes).
double route_cost(const Route& r, const Instance& inst);

// A (possibly partial, possibly capacity-infeasible) assignment of customers
// to routes. Customer membership and all cost caches are maintained
// incrementally; a full resync runs every 1000 mutations to stop float
// drift, with a debug assert that the caches never wandered.
class Solution {
 public:
  Solution() = default;
  Solution(const Instance& inst, const DistanceMatrix& dist);

  int num_routes() const { return static_cast<int>(routes_.size()); }
  const Route& route(int r) const { return routes_[r]; }
  const std::vector<Route>& routes() const { return routes_; }

  // -1 while a customer is detached (mid-perturbation).
  int route_of(int v) const { return member_route_[v]; }
  int pos_of(int v) const { return member_pos_[v]; }
  bool assigned(int v) const { return member_route_[v] >= 0; }

  int add_route(int vehicle_type);
  void remove_route(int r);  // detaches any customers still on it
  void set_vehicle_type(int r, int vehicle_type);
  void remove_customer(int v);
  void insert_customer(int v, int r, int pos);
  // Wholesale interior replacement for the two routes touched by a tail
  // exchange; every customer in the new interior gets its membership set.
  void replace_interior(int r, std::vector<int> customers);
  void drop_empty_routes();

  // Objective value: sum over non-empty routes of fixed + unit * length.
  double cost() const { return cost_; }

  const Instance& instance() const { return *inst_; }
  const DistanceMatrix& distances() const { return *dist_; }

  // Bumped whenever a route is added/removed, so index-keyed caches outside
  // the class know to rebuild.
  long structure_version() const { return structure_version_; }

  // Recomputes every cache from the stored sequences.
  void resync();

 private:
  double contribution(const Route& r) const;
  void refresh_route(int r);  // load + length from scratch
  void after_mutation();

  const Instance* inst_ = nullptr;
  const DistanceMatrix* dist_ = nullptr;
  std::vector<Route> routes_;
  std::vector<int> member_route_, member_pos_;
  double cost_ = 0.0;
  long mutations_ = 0;
  long structure_version_ = 0;
};

// Objective recomputed from scratch; reference for the cached value.
double total_cost(const Solution& s);

struct FeasibilityReport {
  bool feasible = true;
  double capacity_violation = 0.0;          // sum of route overloads
  std::vector<double> overload_by_route;    // max(0, load - capacity)
  std::vector<int> excess_by_type;          // max(0, used - available)
  int count_excess = 0;                     // sum over types
};

// Capacity and fleet-size check. Every route present counts against its
// type's availability, empty or not.
FeasibilityReport check_feasible(const Solution& s);
bool is_feasible(const Solution& s);

// Undirected edge set of the solution, sorted, duplicates removed (a
// single-customer route contributes one depot edge).
std::vector<std::pair<int, int>> solution_edges(const Solution& s);

// Size of the symmetric difference of the two undirected edge sets.
int solution_distance(const Solution& a, const Solution& b);

// Structural diagnostics: partition violations, membership drift, cache
// drift, bad type indices. Empty result means the solution is sound.
std::vector<std::string> validate(const Solution& s);

}  // namespace ails

#endif
