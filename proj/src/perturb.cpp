#include "ails/perturb.hpp"

#include <algorithm>
#include <cassert>

namespace ails {

const char* to_string(RemovalKind k) {
  switch (k) {
    case RemovalKind::Concentric: return "H1";
    case RemovalKind::Random: return "H2";
    case RemovalKind::Sequence: return "H3";
  }
  return "?";
}

std::vector<Position> candidate_positions(const Solution& s, int v,
                                          const ForbiddenPairs& forb) {
  std::vector<Position> out;
  for (int r = 0; r < s.num_routes(); ++r) {
    const Route& rt = s.route(r);
    for (int g = 0; g <= rt.size(); ++g) {
      int left = g > 0 ? rt.customers[g - 1] : 0;
      int right = g < rt.size() ? rt.customers[g] : 0;
      if (forb.blocked(v, left) || forb.blocked(v, right)) continue;
      out.push_back({r, g});
    }
  }
  return out;
}

std::vector<Position> all_positions(const Solution& s) {
  std::vector<Position> out;
  for (int r = 0; r < s.num_routes(); ++r)
    for (int g = 0; g <= s.route(r).size(); ++g) out.push_back({r, g});
  return out;
}

void insert_at_best(Solution& s, int v, InsertionKind kind,
                    const std::vector<Position>& positions) {
  assert(!positions.empty());
  const DistanceMatrix& d = s.distances();
  const Instance& inst = s.instance();
  Position best = positions.front();
  double best_key = 0.0;
  bool first = true;
  for (const Position& p : positions) {
    const Route& rt = s.route(p.route);
    int left = p.gap > 0 ? rt.customers[p.gap - 1] : 0;
    int right = p.gap < rt.size() ? rt.customers[p.gap] : 0;
    double key;
    if (kind == InsertionKind::ByDistance) {
      key = d(v, left);
    } else {
      double w = inst.types[rt.vehicle_type].unit_cost;
      key = w * (d(v, left) + d(v, right) - d(left, right));
    }
    if (first || key < best_key) {
      best = p;
      best_key = key;
      first = false;
    }
  }
  s.insert_customer(v, best.route, best.gap);
}

int pick_type_for_new_route(const Solution& s, Rng& rng) {
  const Instance& inst = s.instance();
  int h = inst.num_types();
  std::vector<int> used(h, 0);
  for (const Route& rt : s.routes()) ++used[rt.vehicle_type];
  if (limited_fleet(inst.variant)) {
    std::vector<int> avail;
    for (int t = 0; t < h; ++t)
      if (used[t] < inst.types[t].count) avail.push_back(t);
    if (avail.empty()) return rng.uniform_int(0, h - 1);
    return avail[rng.uniform_int(0, static_cast<int>(avail.size()) - 1)];
  }
  std::vector<double> weights(h);
  for (int t = 0; t < h; ++t) weights[t] = used[t] + 1;
  return rng.pick_weighted(weights);
}

void reinsert(Solution& s, int v, InsertionKind kind,
              const ForbiddenPairs& forb, Rng& rng) {
  std::vector<Position> positions = candidate_positions(s, v, forb);
  if (positions.empty()) positions = all_positions(s);
  if (positions.empty()) {
    int r = s.add_route(pick_type_for_new_route(s, rng));
    s.insert_customer(v, r, 0);
    return;
  }
  insert_at_best(s, v, kind, positions);
}

void mutate_route_count(Solution& s, double alpha, int m_lo, int m_hi,
                        InsertionKind kind, ForbiddenPairs& forb, Rng& rng) {
  if (!rng.bernoulli(alpha)) return;
  int m = s.num_routes();
  bool can_inc = m + 1 <= m_hi;
  bool can_dec = m - 1 >= m_lo;
  int dir = 0;
  if (can_inc && can_dec)
    dir = rng.uniform_int(0, 1) == 0 ? 1 : -1;
  else if (can_inc)
    dir = 1;
  else if (can_dec)
    dir = -1;
  if (dir == 1) {
    s.add_route(pick_type_for_new_route(s, rng));
  } else if (dir == -1) {
    int r = rng.uniform_int(0, m - 1);
    const Route& rt = s.route(r);
    std::vector<int> orphans = rt.customers;
    for (int p = 0; p < rt.size(); ++p) {
      int pred = p > 0 ? rt.customers[p - 1] : 0;
      int succ = p + 1 < rt.size() ? rt.customers[p + 1] : 0;
      forb.record(rt.customers[p], pred, succ);
    }
    s.remove_route(r);
    for (int v : orphans) reinsert(s, v, kind, forb, rng);
  }
}

void mutate_fleet(Solution& s, double alpha, Rng& rng) {
  int m = s.num_routes();
  if (m < 2) return;
  int r1 = rng.uniform_int(0, m - 1);
  int r2 = rng.uniform_int(0, m - 2);
  if (r2 >= r1) ++r2;
  if (!rng.bernoulli(alpha)) return;
  const Instance& inst = s.instance();
  if (limited_fleet(inst.variant)) {
    int t1 = s.route(r1).vehicle_type;
    int t2 = s.route(r2).vehicle_type;
    s.set_vehicle_type(r1, t2);
    s.set_vehicle_type(r2, t1);
    return;
  }
  int h = inst.num_types();
  std::vector<double> weights(h, 1.0);
  for (const Route& rt : s.routes()) weights[rt.vehicle_type] += 1.0;
  s.set_vehicle_type(r1, rng.pick_weighted(weights));
  s.set_vehicle_type(r2, rng.pick_weighted(weights));
}

std::vector<int> concentric_targets(const Solution& s, int center, int omega) {
  const Instance& inst = s.instance();
  const DistanceMatrix& d = s.distances();
  std::vector<int> others;
  others.reserve(inst.n - 1);
  for (int v = 1; v <= inst.n; ++v)
    if (v != center) others.push_back(v);
  std::sort(others.begin(), others.end(), [&](int a, int b) {
    double da = d(center, a), db = d(center, b);
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<int> targets;
  targets.reserve(omega);
  targets.push_back(center);
  for (int i = 0; i + 1 < omega && i < static_cast<int>(others.size()); ++i)
    targets.push_back(others[i]);
  return targets;
}

void RemovalSchedule::start(const Solution& s, int omega, Rng& rng) {
  targets_.clear();
  idx_ = 0;
  follow_ = -1;
  const Instance& inst = s.instance();
  if (kind_ == RemovalKind::Concentric) {
    int center = rng.uniform_int(1, inst.n);
    targets_ = concentric_targets(s, center, omega);
  } else if (kind_ == RemovalKind::Random) {
    std::vector<int> picks = rng.sample_distinct(inst.n, omega);
    targets_.reserve(picks.size());
    for (int p : picks) targets_.push_back(p + 1);
  }
}

int RemovalSchedule::next(const Solution& s, Rng& rng) {
  if (kind_ != RemovalKind::Sequence) {
    if (idx_ >= targets_.size()) return -1;
    return targets_[idx_++];
  }
  int v = follow_;
  if (v < 0) {
    std::vector<int> nonempty;
    for (int r = 0; r < s.num_routes(); ++r)
      if (!s.route(r).empty()) nonempty.push_back(r);
    if (nonempty.empty()) return -1;
    int r = nonempty[rng.uniform_int(0, static_cast<int>(nonempty.size()) - 1)];
    v = s.route(r).customers[rng.uniform_int(0, s.route(r).size() - 1)];
  }
  // The walk wraps over the depot; a size-1 route forces a fresh pick.
  int r = s.route_of(v);
  int p = s.pos_of(v);
  int size = s.route(r).size();
  follow_ = size > 1 ? s.route(r).customers[(p + 1) % size] : -1;
  return v;
}

namespace {

// Records v's current neighbors and removes it; under the sequence rule an
// emptied route goes away with it.
void remove_with_record(Solution& s, int v, RemovalKind kind,
                        ForbiddenPairs& forb) {
  int r = s.route_of(v);
  int p = s.pos_of(v);
  const Route& rt = s.route(r);
  int pred = p > 0 ? rt.customers[p - 1] : 0;
  int succ = p + 1 < rt.size() ? rt.customers[p + 1] : 0;
  forb.record(v, pred, succ);
  s.remove_customer(v);
  if (kind == RemovalKind::Sequence && s.route(r).empty()) s.remove_route(r);
}

}  // namespace

std::vector<int> remove_batch(Solution& s, RemovalKind kind, int omega,
                              ForbiddenPairs& forb, Rng& rng) {
  RemovalSchedule plan(kind);
  plan.start(s, omega, rng);
  std::vector<int> removed;
  removed.reserve(omega);
  for (int k = 0; k < omega; ++k) {
    int v = plan.next(s, rng);
    if (v < 0) break;
    remove_with_record(s, v, kind, forb);
    removed.push_back(v);
  }
  return removed;
}

void perturb(Solution& s, RemovalKind kind, int omega, double alpha,
             int m_lo, int m_hi, Rng& rng) {
  const Instance& inst = s.instance();
  ForbiddenPairs forb(inst.n);
  InsertionKind ins = rng.uniform_int(0, 1) == 0 ? InsertionKind::ByDistance
                                                 : InsertionKind::ByCost;
  mutate_route_count(s, alpha, m_lo, m_hi, ins, forb, rng);
  mutate_fleet(s, alpha, rng);

  omega = std::clamp(omega, 1, inst.n);
  RemovalSchedule plan(kind);
  plan.start(s, omega, rng);
  for (int k = 0; k < omega; ++k) {
    int v = plan.next(s, rng);
    if (v < 0) break;
    remove_with_record(s, v, kind, forb);
    reinsert(s, v, ins, forb, rng);
  }
  s.drop_empty_routes();
}

}  // namespace ails
