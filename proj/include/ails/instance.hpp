#ifndef AILS_INSTANCE_HPP
#define AILS_INSTANCE_HPP

#include <string>
#include <vector>

#include "ails/variant.hpp"

namespace ails {

struct VehicleType {
  double capacity = 0.0;
  double fixed_cost = 0.0;
  double unit_cost = 1.0;   // travel cost per distance unit
  int count = 0;            // available vehicles of this type
};

// Immutable problem data. Vertex 0 is the depot; customers are 1..n.
struct Instance {
  std::string name;
  Variant variant = Variant::FSMD;
  int n = 0;  // number of customers
  std::vector<double> xs, ys;    // size n+1
  std::vector<double> demands;   // size n+1, demands[0] == 0
  std::vector<VehicleType> types;
  std::vector<VehicleType> original_types;  // as given, before normalization
  bool normalized = false;

  int num_types() const { return static_cast<int>(types.size()); }
};

// Checks structural sanity (sizes, positive demands, every customer fits some
// vehicle, positive capacities). Throws std::invalid_argument on failure.
void validate_instance(const Instance& inst);

// Applies the variant conventions so the rest of the code never branches on
// them: fixed_cost := 0 where no fixed component is paid, unit_cost := 1
// where travel cost ignores the type, count := n where the fleet is
// unlimited. Idempotent; the pre-normalization types are preserved.
Instance normalize_fleet(const Instance& inst);

// Dense symmetric Euclidean distances over vertices 0..n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Instance& inst);

  double operator()(int i, int j) const { return d_[i * size_ + j]; }
  int size() const { return size_; }

 private:
  int size_ = 0;
  std::vector<double> d_;
};

// For each vertex, the phi nearest other vertices in ascending distance
// order, distance ties broken by lower index.
struct NeighborLists {
  std::vector<std::vector<int>> at;  // size n+1
};

NeighborLists build_neighbors(const Instance& inst, const DistanceMatrix& dist,
                              int phi);

// Lower bound on the route count: total demand over the largest capacity,
// rounded down, never below 1.
int min_routes(const Instance& inst);

// Upper bound on the route count: n for unlimited variants, total fleet size
// for limited ones.
int max_routes(const Instance& inst);

}  // namespace ails

#endif
