#include "ails/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ails/perturb.hpp"

namespace ails {

namespace {

constexpr double kEps = 1e-9;

constexpr int kShift = 0;
constexpr int kSwap = 1;
constexpr int kTailStraight = 2;
constexpr int kTailReversed = 3;
constexpr int kShiftToEmpty = 4;
constexpr int kSplitToEmpty = 5;
constexpr int kIntraReverse = 6;

double overload(double load, double cap) { return load > cap ? load - cap : 0.0; }

}  // namespace

LocalSearch::LocalSearch(const Instance& inst, const DistanceMatrix& dist,
                         const NeighborLists& neighbors, bool intra_two_opt)
    : inst_(inst),
      dist_(dist),
      neighbors_(neighbors),
      intra_two_opt_(intra_two_opt) {
  double total_demand = 0.0;
  for (double q : inst.demands) total_demand += q;
  count_weight_ = total_demand;
}

void LocalSearch::build_scan_state(const Solution& s) {
  int m = s.num_routes();
  pl_.resize(m);
  pq_.resize(m);
  for (int r = 0; r < m; ++r) {
    const std::vector<int>& c = s.route(r).customers;
    int k = static_cast<int>(c.size());
    pl_[r].assign(k + 1, 0.0);
    pq_[r].assign(k + 1, 0.0);
    int prev = 0;
    for (int t = 0; t < k; ++t) {
      pl_[r][t + 1] = pl_[r][t] + dist_(prev, c[t]);
      pq_[r][t + 1] = pq_[r][t] + inst_.demands[c[t]];
      prev = c[t];
    }
  }
  used_by_type_.assign(inst_.num_types(), 0);
  for (const Route& rt : s.routes()) ++used_by_type_[rt.vehicle_type];
}

void LocalSearch::consider(Candidate& best, Mode mode,
                           const Candidate& c) const {
  if (mode == Mode::Descent) {
    if (c.dcost >= -kEps) return;
    if (!best.found || c.dcost < best.dcost) best = c, best.found = true;
    return;
  }
  bool improving =
      c.dviol < -kEps || (std::abs(c.dviol) <= kEps && c.dcost < -kEps);
  if (!improving) return;
  if (!best.found || c.dviol < best.dviol - kEps ||
      (c.dviol <= best.dviol + kEps && c.dcost < best.dcost)) {
    best = c;
    best.found = true;
  }
}

LocalSearch::Candidate LocalSearch::scan(const Solution& s, Mode mode) const {
  Candidate best;
  const DistanceMatrix& d = dist_;
  const std::vector<double>& q = inst_.demands;

  // -1 when dropping a route of this type relaxes a fleet-count excess.
  auto count_drop = [&](int type) {
    return used_by_type_[type] > inst_.types[type].count ? -1.0 : 0.0;
  };

  for (int rv = 0; rv < s.num_routes(); ++rv) {
    const Route& A = s.route(rv);
    const int K = A.size();
    const VehicleType& tA = inst_.types[A.vehicle_type];
    const double lenA = A.length, loadA = A.load;
    for (int p = 0; p < K; ++p) {
      const int v = A.customers[p];
      const int pred_v = p > 0 ? A.customers[p - 1] : 0;
      const int succ_v = p + 1 < K ? A.customers[p + 1] : 0;
      const double remove_gain =
          d(pred_v, succ_v) - d(pred_v, v) - d(v, succ_v);

      for (int u : neighbors_.at[v]) {
        if (u == 0) continue;
        const int ru = s.route_of(u);
        const int j = s.pos_of(u);
        if (ru == rv) {
          if (!intra_two_opt_) continue;
          int lo = std::min(p, j), hi = std::max(p, j);
          const auto& c = A.customers;
          int after_hi = hi + 1 < K ? c[hi + 1] : 0;
          double before = d(c[lo], c[lo + 1]) + d(c[hi], after_hi);
          double after = d(c[lo], c[hi]) + d(c[lo + 1], after_hi);
          Candidate cand;
          cand.kind = kIntraReverse;
          cand.v = c[lo];
          cand.u = c[hi];
          cand.rv = rv;
          cand.ru = rv;
          cand.dcost = tA.unit_cost * (after - before);
          cand.dviol = 0.0;
          consider(best, mode, cand);
          continue;
        }
        const Route& B = s.route(ru);
        const int L = B.size();
        const VehicleType& tB = inst_.types[B.vehicle_type];
        const double lenB = B.length, loadB = B.load;
        const int pred_u = j > 0 ? B.customers[j - 1] : 0;
        const int succ_u = j + 1 < L ? B.customers[j + 1] : 0;

        // Relocate v before or after u.
        for (int side = 0; side < 2; ++side) {
          const int left = side == 0 ? pred_u : u;
          const int right = side == 0 ? u : succ_u;
          const double dlenB = d(left, v) + d(v, right) - d(left, right);
          const double la = loadA - q[v];
          const double lb = loadB + q[v];
          Candidate cand;
          cand.kind = kShift;
          cand.v = v;
          cand.rv = rv;
          cand.ru = ru;
          cand.aux = j + side;
          bool empties = K == 1;
          cand.dcost = tA.unit_cost * remove_gain + tB.unit_cost * dlenB -
                       (empties ? tA.fixed_cost : 0.0);
          if (mode == Mode::Descent) {
            if (lb > tB.capacity + kEps) continue;
          } else {
            cand.dviol = overload(la, tA.capacity) - overload(loadA, tA.capacity) +
                         overload(lb, tB.capacity) - overload(loadB, tB.capacity) +
                         (empties ? count_weight_ * count_drop(A.vehicle_type)
                                  : 0.0);
          }
          consider(best, mode, cand);
        }

        // Exchange v and u.
        {
          const double dlenA = d(pred_v, u) + d(u, succ_v) - d(pred_v, v) -
                               d(v, succ_v);
          const double dlenB = d(pred_u, v) + d(v, succ_u) - d(pred_u, u) -
                               d(u, succ_u);
          const double la = loadA - q[v] + q[u];
          const double lb = loadB - q[u] + q[v];
          Candidate cand;
          cand.kind = kSwap;
          cand.v = v;
          cand.u = u;
          cand.rv = rv;
          cand.ru = ru;
          cand.dcost = tA.unit_cost * dlenA + tB.unit_cost * dlenB;
          bool ok = true;
          if (mode == Mode::Descent) {
            ok = la <= tA.capacity + kEps && lb <= tB.capacity + kEps;
          } else {
            cand.dviol = overload(la, tA.capacity) - overload(loadA, tA.capacity) +
                         overload(lb, tB.capacity) - overload(loadB, tB.capacity);
          }
          if (ok) consider(best, mode, cand);
        }

        // Tail exchange, straight: A keeps its head and receives B's tail.
        {
          double lenA2 = pl_[rv][p + 1] +
                         (j + 1 < L ? d(v, B.customers[j + 1]) + lenB -
                                          pl_[ru][j + 2]
                                    : d(v, 0));
          double lenB2 = pl_[ru][j + 1] +
                         (p + 1 < K ? d(u, A.customers[p + 1]) + lenA -
                                          pl_[rv][p + 2]
                                    : d(u, 0));
          const double la = pq_[rv][p + 1] + loadB - pq_[ru][j + 1];
          const double lb = pq_[ru][j + 1] + loadA - pq_[rv][p + 1];
          Candidate cand;
          cand.kind = kTailStraight;
          cand.v = v;
          cand.u = u;
          cand.rv = rv;
          cand.ru = ru;
          cand.dcost =
              tA.unit_cost * (lenA2 - lenA) + tB.unit_cost * (lenB2 - lenB);
          bool ok = true;
          if (mode == Mode::Descent) {
            ok = la <= tA.capacity + kEps && lb <= tB.capacity + kEps;
          } else {
            cand.dviol = overload(la, tA.capacity) - overload(loadA, tA.capacity) +
                         overload(lb, tB.capacity) - overload(loadB, tB.capacity);
          }
          if (ok) consider(best, mode, cand);
        }

        // Tail exchange, reversed: join v-u, heads stay, segments flip.
        {
          const bool b_empties = p + 1 == K && j + 1 == L;
          double lenA2 = pl_[rv][p + 1] + d(v, u) + pl_[ru][j + 1];
          double lenB2 = 0.0;
          if (!b_empties) {
            if (p + 1 < K) {
              lenB2 = d(0, A.customers[K - 1]) + pl_[rv][K] - pl_[rv][p + 2];
              lenB2 += j + 1 < L ? d(A.customers[p + 1], B.customers[j + 1]) +
                                       lenB - pl_[ru][j + 2]
                                 : d(A.customers[p + 1], 0);
            } else {
              lenB2 = d(0, B.customers[j + 1]) + lenB - pl_[ru][j + 2];
            }
          }
          const double la = pq_[rv][p + 1] + pq_[ru][j + 1];
          const double lb = loadA + loadB - la;
          Candidate cand;
          cand.kind = kTailReversed;
          cand.v = v;
          cand.u = u;
          cand.rv = rv;
          cand.ru = ru;
          cand.dcost = tA.unit_cost * (lenA2 - lenA) +
                       tB.unit_cost * (lenB2 - lenB) -
                       (b_empties ? tB.fixed_cost : 0.0);
          bool ok = true;
          if (mode == Mode::Descent) {
            ok = la <= tA.capacity + kEps && lb <= tB.capacity + kEps;
          } else {
            cand.dviol = overload(la, tA.capacity) - overload(loadA, tA.capacity) +
                         overload(lb, tB.capacity) - overload(loadB, tB.capacity) +
                         (b_empties ? count_weight_ * count_drop(B.vehicle_type)
                                    : 0.0);
          }
          if (ok) consider(best, mode, cand);
        }
      }
    }
  }

  // Moves into empty routes; these only exist inside the repair procedure,
  // where appended routes must be reachable.
  for (int re = 0; re < s.num_routes(); ++re) {
    if (!s.route(re).empty()) continue;
    const VehicleType& tE = inst_.types[s.route(re).vehicle_type];
    for (int v = 1; v <= inst_.n; ++v) {
      const int rv = s.route_of(v);
      if (rv < 0) continue;
      const Route& A = s.route(rv);
      const int K = A.size();
      const int p = s.pos_of(v);
      const VehicleType& tA = inst_.types[A.vehicle_type];
      const int pred_v = p > 0 ? A.customers[p - 1] : 0;
      const int succ_v = p + 1 < K ? A.customers[p + 1] : 0;

      {
        const double dlenA = d(pred_v, succ_v) - d(pred_v, v) - d(v, succ_v);
        const double la = A.load - q[v];
        const double le = q[v];
        const bool empties = K == 1;
        Candidate cand;
        cand.kind = kShiftToEmpty;
        cand.v = v;
        cand.rv = rv;
        cand.ru = re;
        cand.dcost = tA.unit_cost * dlenA + tE.unit_cost * 2.0 * d(0, v) +
                     tE.fixed_cost - (empties ? tA.fixed_cost : 0.0);
        bool ok = true;
        if (mode == Mode::Descent) {
          ok = le <= tE.capacity + kEps;
        } else {
          cand.dviol = overload(la, tA.capacity) - overload(A.load, tA.capacity) +
                       overload(le, tE.capacity) +
                       (empties ? count_weight_ * count_drop(A.vehicle_type)
                                : 0.0);
        }
        if (ok) consider(best, mode, cand);
      }

      if (p + 1 < K) {  // split the tail after v into the empty route
        double lenA2 = pl_[rv][p + 1] + d(v, 0);
        double lenE2 = d(0, A.customers[p + 1]) + A.length - pl_[rv][p + 2];
        const double la = pq_[rv][p + 1];
        const double le = A.load - la;
        Candidate cand;
        cand.kind = kSplitToEmpty;
        cand.v = v;
        cand.rv = rv;
        cand.ru = re;
        cand.dcost = tA.unit_cost * (lenA2 - A.length) +
                     tE.unit_cost * lenE2 + tE.fixed_cost;
        bool ok = true;
        if (mode == Mode::Descent) {
          ok = la <= tA.capacity + kEps && le <= tE.capacity + kEps;
        } else {
          cand.dviol = overload(la, tA.capacity) - overload(A.load, tA.capacity) +
                       overload(le, tE.capacity);
        }
        if (ok) consider(best, mode, cand);
      }
    }
  }
  return best;
}

void LocalSearch::apply_move(Solution& s, const Candidate& c) const {
  switch (c.kind) {
    case kShift: {
      s.remove_customer(c.v);
      s.insert_customer(c.v, c.ru, c.aux);
      if (s.route(c.rv).empty()) s.remove_route(c.rv);
      break;
    }
    case kShiftToEmpty: {
      s.remove_customer(c.v);
      s.insert_customer(c.v, c.ru, 0);
      if (s.route(c.rv).empty()) s.remove_route(c.rv);
      break;
    }
    case kSwap: {
      const int pv = s.pos_of(c.v), pu = s.pos_of(c.u);
      s.remove_customer(c.v);
      s.remove_customer(c.u);
      s.insert_customer(c.u, c.rv, pv);
      s.insert_customer(c.v, c.ru, pu);
      break;
    }
    case kTailStraight: {
      const int p = s.pos_of(c.v), j = s.pos_of(c.u);
      std::vector<int> a = s.route(c.rv).customers;
      std::vector<int> b = s.route(c.ru).customers;
      std::vector<int> na(a.begin(), a.begin() + p + 1);
      na.insert(na.end(), b.begin() + j + 1, b.end());
      std::vector<int> nb(b.begin(), b.begin() + j + 1);
      nb.insert(nb.end(), a.begin() + p + 1, a.end());
      s.replace_interior(c.ru, std::move(nb));
      s.replace_interior(c.rv, std::move(na));
      break;
    }
    case kTailReversed: {
      const int p = s.pos_of(c.v), j = s.pos_of(c.u);
      std::vector<int> a = s.route(c.rv).customers;
      std::vector<int> b = s.route(c.ru).customers;
      std::vector<int> na(a.begin(), a.begin() + p + 1);
      na.insert(na.end(), b.rend() - (j + 1), b.rend());
      std::vector<int> nb(a.rbegin(), a.rbegin() + (static_cast<int>(a.size()) - (p + 1)));
      nb.insert(nb.end(), b.begin() + j + 1, b.end());
      s.replace_interior(c.ru, std::move(nb));
      s.replace_interior(c.rv, std::move(na));
      if (s.route(c.ru).empty()) s.remove_route(c.ru);
      break;
    }
    case kSplitToEmpty: {
      const int p = s.pos_of(c.v);
      std::vector<int> a = s.route(c.rv).customers;
      std::vector<int> na(a.begin(), a.begin() + p + 1);
      std::vector<int> ne(a.begin() + p + 1, a.end());
      s.replace_interior(c.ru, std::move(ne));
      s.replace_interior(c.rv, std::move(na));
      break;
    }
    case kIntraReverse: {
      const int lo = std::min(s.pos_of(c.v), s.pos_of(c.u));
      const int hi = std::max(s.pos_of(c.v), s.pos_of(c.u));
      std::vector<int> a = s.route(c.rv).customers;
      std::reverse(a.begin() + lo + 1, a.begin() + hi + 1);
      s.replace_interior(c.rv, std::move(a));
      break;
    }
    default:
      assert(false);
  }
}

void LocalSearch::apply(Solution& s) {
#ifndef NDEBUG
  for (const Route& rt : s.routes()) assert(!rt.empty());
#endif
  while (true) {
    build_scan_state(s);
    Candidate best = scan(s, Mode::Descent);
    if (!best.found) break;
    apply_move(s, best);
  }
}

bool LocalSearch::repair(Solution& s, Rng& rng) {
  if (is_feasible(s)) return true;
  const int m_hi = max_routes(inst_);
  while (true) {
    if (is_feasible(s)) {
      s.drop_empty_routes();
      return true;
    }
    build_scan_state(s);
    Candidate best = scan(s, Mode::Repair);
    if (best.found) {
      apply_move(s, best);
      continue;
    }
    if (s.num_routes() < m_hi) {
      s.add_route(pick_type_for_new_route(s, rng));
      continue;
    }
    s.drop_empty_routes();
    return false;
  }
}

}  // namespace ails
