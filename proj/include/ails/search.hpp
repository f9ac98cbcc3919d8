#ifndef AILS_SEARCH_HPP
#define AILS_SEARCH_HPP

#include <vector>

#include "ails/instance.hpp"
#include "ails/rng.hpp"
#include "ails/solution.hpp"

namespace ails {

// Inter-route descent over moves generated from (v, u) pairs with u among
// v's nearest neighbors: relocating v next to u (both sides), swapping v and
// u, and the two tail-exchange reconnections cut after v and after u. Routes
// never change vehicle type here; a route emptied by a move is dropped on
// the spot. Intra-route segment reversal can be switched on as an extra
// neighborhood; it is off by default.
class LocalSearch {
 public:
  LocalSearch(const Instance& inst, const DistanceMatrix& dist,
              const NeighborLists& neighbors, bool intra_two_opt = false);

  // Best-improvement cost descent. Only moves keeping the touched routes
  // within capacity are considered; stops when no move improves by more
  // than 1e-9.
  void apply(Solution& s);

  // Drives the solution toward feasibility: same move set, candidates
  // ranked by (violation delta, cost delta) lexicographically, fleet-count
  // violations weighted so they dominate any overload. When stuck while
  // still infeasible a fresh empty route is appended (vehicle type drawn by
  // the usual rule) until the route cap is hit. Returns whether the
  // solution ended up feasible; surviving empty routes are dropped.
  bool repair(Solution& s, Rng& rng);

 private:
  enum class Mode { Descent, Repair };
  struct Candidate {
    int kind = -1;
    int v = -1, u = -1;
    int rv = -1, ru = -1;
    int aux = 0;  // insertion gap / cut position, kind-specific
    double dcost = 0.0;
    double dviol = 0.0;
    bool found = false;
  };

  void build_scan_state(const Solution& s);
  Candidate scan(const Solution& s, Mode mode) const;
  void apply_move(Solution& s, const Candidate& c) const;
  void consider(Candidate& best, Mode mode, const Candidate& c) const;

  const Instance& inst_;
  const DistanceMatrix& dist_;
  const NeighborLists& neighbors_;
  bool intra_two_opt_;
  double count_weight_;  // dominates any capacity overload

  // Per-scan prefix sums: pl_[r][t] / pq_[r][t] cover the first t customers
  // of route r.
  std::vector<std::vector<double>> pl_, pq_;
  std::vector<int> used_by_type_;
};

}  // namespace ails

#endif
