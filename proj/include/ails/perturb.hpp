#ifndef AILS_PERTURB_HPP
#define AILS_PERTURB_HPP

#include <vector>

#include "ails/rng.hpp"
#include "ails/solution.hpp"

namespace ails {

enum class RemovalKind { Concentric, Random, Sequence };
enum class InsertionKind { ByDistance, ByCost };

const char* to_string(RemovalKind k);

// Per-vertex record of the two neighbors a customer had when it was removed.
// A reinsertion may not make the customer adjacent to either of them again
// (the depot counts as a neighbor). Entries live until clear().
class ForbiddenPairs {
 public:
  explicit ForbiddenPairs(int n)
      : pred_(n + 1, 0), succ_(n + 1, 0), stamp_(n + 1, 0) {}

  void clear() { ++epoch_; }
  void record(int v, int pred, int succ) {
    pred_[v] = pred;
    succ_[v] = succ;
    stamp_[v] = epoch_;
  }
  bool has(int v) const { return stamp_[v] == epoch_; }
  bool blocked(int v, int u) const {
    return has(v) && (pred_[v] == u || succ_[v] == u);
  }

 private:
  std::vector<int> pred_, succ_;
  std::vector<long> stamp_;
  long epoch_ = 1;
};

struct Position {
  int route = 0;
  int gap = 0;  // insertion index into the route interior, 0..size
};

// Every insertion gap whose two endpoint vertices (depot at the ends, both
// depot endpoints for an empty route) are not blocked for v.
std::vector<Position> candidate_positions(const Solution& s, int v,
                                          const ForbiddenPairs& forb);

// Unfiltered gap list; the fallback when every position is blocked.
std::vector<Position> all_positions(const Solution& s);

// Applies the chosen insertion rule over the given positions. ByDistance
// picks the gap whose left endpoint is nearest to v; ByCost picks the gap
// with the smallest detour cost under the receiving route's unit cost.
// Capacity is ignored on purpose. Ties fall to the lowest (route, gap).
void insert_at_best(Solution& s, int v, InsertionKind kind,
                    const std::vector<Position>& positions);

// Vehicle type for a route about to be created: uniform over types with
// spare availability when the fleet is limited, otherwise proportional to
// (present count + 1) over every type.
int pick_type_for_new_route(const Solution& s, Rng& rng);

// Reinsertion wrapper: candidate positions, fallback to all positions, and
// if the solution has no route at all a fresh one is opened.
void reinsert(Solution& s, int v, InsertionKind kind,
              const ForbiddenPairs& forb, Rng& rng);

// With probability alpha adds or drops one route inside [m_lo, m_hi]
// (direction uniform unless pinned at a bound). A dropped route's customers
// are reinserted under the given rule with their old adjacencies forbidden.
void mutate_route_count(Solution& s, double alpha, int m_lo, int m_hi,
                        InsertionKind kind, ForbiddenPairs& forb, Rng& rng);

// Picks two distinct routes, then with probability alpha changes their
// vehicle types: swapped under a limited fleet, redrawn independently from
// the present-count distribution otherwise. No-op with fewer than 2 routes.
void mutate_fleet(Solution& s, double alpha, Rng& rng);

// Target sequence of the concentric removal: the center plus the omega-1
// customers nearest to it, ascending by distance, ties by index.
std::vector<int> concentric_targets(const Solution& s, int center, int omega);

// Incremental victim source for the three removal rules. Concentric and
// random targets are frozen when the walk starts; the sequence rule follows
// route successors cyclically and hops to a fresh random route when it
// empties one.
class RemovalSchedule {
 public:
  explicit RemovalSchedule(RemovalKind kind) : kind_(kind) {}

  void start(const Solution& s, int omega, Rng& rng);
  // Next customer to remove, or -1 when nothing removable remains. For the
  // sequence rule the caller must delete the victim's route if the removal
  // empties it.
  int next(const Solution& s, Rng& rng);

 private:
  RemovalKind kind_;
  std::vector<int> targets_;
  std::size_t idx_ = 0;
  int follow_ = -1;
};

// Batch removal without reinsertion; unit-test entry for the removal rules.
// Records forbidden adjacencies; the sequence rule drops emptied routes.
std::vector<int> remove_batch(Solution& s, RemovalKind kind, int omega,
                              ForbiddenPairs& forb, Rng& rng);

// The full perturbation applied to s (normally a copy of the reference):
// insertion rule drawn once, route-count mutation, fleet mutation, then
// omega interleaved remove+reinsert steps. The result may violate capacity;
// empty routes do not survive.
void perturb(Solution& s, RemovalKind kind, int omega, double alpha,
             int m_lo, int m_hi, Rng& rng);

}  // namespace ails

#endif
