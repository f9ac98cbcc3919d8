#include "ails/engine.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ails/construct.hpp"
#include "ails/search.hpp"

namespace ails {

namespace {
constexpr int kMaxInnerRetries = 1000;
}

RunResult run(const Instance& inst, const Params& params,
              const IterationObserver& observer) {
  if (!inst.normalized)
    throw std::invalid_argument("engine requires a normalized instance");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  const DistanceMatrix dist(inst);
  const int phi = std::max(1, std::min(params.phi, inst.n - 1));
  const NeighborLists neighbors = build_neighbors(inst, dist, phi);
  LocalSearch search(inst, dist, neighbors, params.intra_two_opt);
  Rng rng(params.seed);
  const int m_lo = min_routes(inst);
  const int m_hi = max_routes(inst);

  RunResult out;
  Solution ref = build_initial(inst, dist, search, m_lo, rng);
  search.apply(ref);
  Solution best = ref;
  double best_cost = best.cost();

  AcceptState accept_state(params.gamma);
  accept_state.update(ref.cost());
  HeuristicStats stats[3];

  long no_improve = 0;
  long iter = 0;
  while (no_improve < params.max_no_improve) {
    if (params.time_limit > 0.0 && elapsed() >= params.time_limit) break;
    ++iter;

    Solution cand;
    RemovalKind kind = RemovalKind::Concentric;
    int omega = 1;
    int attempts = 0;
    bool feasible = false;
    while (!feasible) {
      if (++attempts > kMaxInnerRetries) break;
      int k = rng.uniform_int(0, 2);
      kind = static_cast<RemovalKind>(k);
      omega = applied_omega(stats[k], inst.n);
      cand = ref;
      perturb(cand, kind, omega, params.alpha, m_lo, m_hi, rng);
      feasible = search.repair(cand, rng);
    }
    if (!feasible) {
      out.abort_reason = "no feasible perturbation in " +
                         std::to_string(kMaxInnerRetries) + " retries at iteration " +
                         std::to_string(iter);
      break;
    }
    search.apply(cand);

    const double f = cand.cost();
    const int d = solution_distance(cand, ref);
    record_and_adjust(stats[static_cast<int>(kind)], d, params.d_ref,
                      params.gamma, inst.n);
    const bool accepted = accept_state.accept(f, params.eta);
    if (accepted) ref = cand;
    accept_state.update(f);
    if (f < best_cost - 1e-6) {
      best = cand;
      best_cost = f;
      no_improve = 0;
    } else {
      ++no_improve;
    }

    if (params.keep_trace)
      out.trace.push_back({iter, f, best_cost, kind, omega, accepted});
    if (observer)
      observer({iter, cand, ref, best, kind, omega, accepted});
  }

  best.resync();
  out.best = std::move(best);
  out.best_cost = out.best.cost();
  out.iterations = iter;
  out.seconds = elapsed();
  return out;
}

std::vector<RunResult> run_many(const Instance& inst, const Params& params,
                                int runs, int threads) {
  std::vector<RunResult> results(runs);
  auto job = [&](int i) {
    Params p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(i);
    results[i] = run(inst, p);
  };
  if (threads <= 1) {
    for (int i = 0; i < runs; ++i) job(i);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= runs) return;
      job(i);
    }
  };
  int nt = std::min(threads, runs);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace ails
