#ifndef AILS_ENGINE_HPP
#define AILS_ENGINE_HPP

#include <functional>
#include <string>
#include <vector>

#include "ails/adapt.hpp"
#include "ails/instance.hpp"
#include "ails/perturb.hpp"
#include "ails/solution.hpp"

namespace ails {

struct Params {
  double alpha = 0.4;       // probability of the route-count / fleet mutations
  double d_ref = 15.0;      // target edge distance between s and the reference
  double eta = 0.2;         // acceptance threshold position
  int gamma = 20;           // omega adjustment period; also the window length
  int phi = 20;             // neighbor-list size (clamped to [1, n-1])
  long max_no_improve = 40000;
  double time_limit = 0.0;  // seconds, 0 = unlimited
  std::uint64_t seed = 0;
  bool keep_trace = false;
  bool intra_two_opt = false;
};

struct TraceRecord {
  long iter = 0;
  double f = 0.0;
  double f_best = 0.0;
  RemovalKind heuristic = RemovalKind::Concentric;
  int omega = 0;
  bool accepted = false;
};

struct RunResult {
  Solution best;
  double best_cost = 0.0;
  long iterations = 0;
  double seconds = 0.0;
  std::vector<TraceRecord> trace;
  std::string abort_reason;  // set only by the retry-cap bailout
};

// Post-iteration snapshot for invariant checks; references die with the call.
struct IterationInfo {
  long iter;
  const Solution& current;
  const Solution& reference;
  const Solution& best;
  RemovalKind heuristic;
  int omega;
  bool accepted;
};
using IterationObserver = std::function<void(const IterationInfo&)>;

// One full search on a normalized instance (throws std::invalid_argument
// otherwise). Deterministic for a fixed seed.
RunResult run(const Instance& inst, const Params& params,
              const IterationObserver& observer = {});

// Independent runs with seeds params.seed + run index; results come back in
// run order regardless of thread count.
std::vector<RunResult> run_many(const Instance& inst, const Params& params,
                                int runs, int threads = 1);

}  // namespace ails

#endif
