#include "ails/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ails {

namespace {

struct SubsetPath {
  double load = 0.0;
  double length = 0.0;
  std::vector<int> order;
};

// Cheapest depot-to-depot path through the subset; first permutation in
// lexicographic order wins ties, which fixes the orientation.
SubsetPath best_path(const Instance& inst, const DistanceMatrix& d,
                     unsigned mask) {
  SubsetPath out;
  std::vector<int> elems;
  for (int v = 1; v <= inst.n; ++v)
    if (mask & (1u << (v - 1))) {
      elems.push_back(v);
      out.load += inst.demands[v];
    }
  out.length = std::numeric_limits<double>::infinity();
  std::vector<int> perm = elems;
  do {
    double len = d(0, perm.front());
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      len += d(perm[i], perm[i + 1]);
    len += d(perm.back(), 0);
    if (len < out.length) {
      out.length = len;
      out.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Assignment {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> types;  // per block
};

// Depth-first type assignment with a remaining-minima bound.
void assign_types(const Instance& inst, const std::vector<SubsetPath*>& blocks,
                  const std::vector<std::vector<std::pair<double, int>>>& options,
                  const std::vector<double>& tail_bound, std::size_t i,
                  double partial, std::vector<int>& counts,
                  std::vector<int>& chosen, Assignment& best) {
  if (partial + tail_bound[i] >= best.cost) return;
  if (i == blocks.size()) {
    best.cost = partial;
    best.types = chosen;
    return;
  }
  for (const auto& [cost, t] : options[i]) {
    if (counts[t] >= inst.types[t].count) continue;
    ++counts[t];
    chosen.push_back(t);
    assign_types(inst, blocks, options, tail_bound, i + 1, partial + cost,
                 counts, chosen, best);
    chosen.pop_back();
    --counts[t];
  }
}

}  // namespace

OracleResult exact_solve(const Instance& inst, const DistanceMatrix& dist) {
  if (inst.n > 8)
    throw std::invalid_argument("exact solver only handles up to 8 customers");
  if (!inst.normalized)
    throw std::invalid_argument("exact solver requires a normalized instance");

  const unsigned full = (1u << inst.n) - 1;
  std::vector<SubsetPath> paths(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask)
    paths[mask] = best_path(inst, dist, mask);

  const int m_hi = max_routes(inst);
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<unsigned> best_blocks;
  std::vector<int> best_types;

  // Restricted-growth enumeration of customer partitions.
  std::vector<int> label(inst.n, 0);
  std::vector<unsigned> blocks;
  auto process = [&] {
    std::vector<SubsetPath*> parts(blocks.size());
    std::vector<std::vector<std::pair<double, int>>> options(blocks.size());
    std::vector<double> tail_bound(blocks.size() + 1, 0.0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      SubsetPath& sp = paths[blocks[b]];
      parts[b] = &sp;
      for (int t = 0; t < inst.num_types(); ++t) {
        if (sp.load > inst.types[t].capacity) continue;
        options[b].emplace_back(
            inst.types[t].fixed_cost + inst.types[t].unit_cost * sp.length, t);
      }
      if (options[b].empty()) return;  // some block fits no vehicle
      std::sort(options[b].begin(), options[b].end());
    }
    for (std::size_t b = blocks.size(); b-- > 0;)
      tail_bound[b] = tail_bound[b + 1] + options[b].front().first;
    if (tail_bound[0] >= best_cost) return;
    Assignment a;
    a.cost = best_cost;
    std::vector<int> counts(inst.num_types(), 0);
    std::vector<int> chosen;
    assign_types(inst, parts, options, tail_bound, 0, 0.0, counts, chosen, a);
    if (a.cost < best_cost && !a.types.empty()) {
      best_cost = a.cost;
      best_blocks = blocks;
      best_types = a.types;
    }
  };

  auto enumerate = [&](auto&& self, int i, int used) -> void {
    if (i == inst.n) {
      blocks.assign(used, 0u);
      for (int v = 0; v < inst.n; ++v) blocks[label[v]] |= 1u << v;
      process();
      return;
    }
    for (int b = 0; b < used; ++b) {
      label[i] = b;
      self(self, i + 1, used);
    }
    if (used < m_hi) {
      label[i] = used;
      self(self, i + 1, used + 1);
    }
  };
  enumerate(enumerate, 0, 0);

  if (!std::isfinite(best_cost))
    throw std::runtime_error("no feasible solution exists for this fleet");

  OracleResult out;
  out.cost = best_cost;
  out.solution = Solution(inst, dist);
  for (std::size_t b = 0; b < best_blocks.size(); ++b) {
    int r = out.solution.add_route(best_types[b]);
    const std::vector<int>& order = paths[best_blocks[b]].order;
    for (std::size_t p = 0; p < order.size(); ++p)
      out.solution.insert_customer(order[p], r, static_cast<int>(p));
  }
  return out;
}

}  // namespace ails
