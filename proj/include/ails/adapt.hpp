#ifndef AILS_ADAPT_HPP
#define AILS_ADAPT_HPP

#include <vector>

namespace ails {

// Per-removal-heuristic control state: omega is the real-valued perturbation
// degree, rescaled once every gamma uses so the observed mean edge distance
// of accepted perturbations tracks the reference distance.
struct HeuristicStats {
  double omega = 1.0;
  double distance_sum = 0.0;
  int uses = 0;
};

// Folds in one observed solution distance; on the gamma-th use rescales
// omega by d_ref over the window mean (a zero mean counts as 1) and clamps
// the result into [1, n].
void record_and_adjust(HeuristicStats& stats, double observed, double d_ref,
                       int gamma, int n);

// The integer degree actually applied: round-to-nearest, at least 1, at
// most n.
int applied_omega(const HeuristicStats& stats, int n);

// Sliding acceptance window over the costs of the last lambda post-descent
// solutions. The running average follows the exact arithmetic mean while
// fewer than lambda samples exist and an exponential-style update after.
class AcceptState {
 public:
  explicit AcceptState(int lambda);

  void update(double f);
  long iterations() const { return it_; }
  double average() const { return avg_; }
  double low() const;  // minimum over the stored window

  // Acceptance bound between the window minimum (eta = 0) and the running
  // average (eta = 1); costs at or under it are accepted.
  double threshold(double eta) const;
  bool accept(double f, double eta) const { return f <= threshold(eta); }

 private:
  int lambda_;
  std::vector<double> window_;
  int filled_ = 0;
  int head_ = 0;
  double avg_ = 0.0;
  long it_ = 0;
};

}  // namespace ails

#endif
