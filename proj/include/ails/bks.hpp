#ifndef AILS_BKS_HPP
#define AILS_BKS_HPP

#include <map>
#include <optional>
#include <string>

#include "ails/variant.hpp"

namespace ails {

// Best-known solution costs, keyed by (instance name, variant). Starts from
// the embedded table for the classic benchmark set; a file can add or
// override rows. File rows look like "13 HVRPFD 3185.09"; blank lines and
// '#' comments are skipped.
class BksRegistry {
 public:
  static BksRegistry builtin();

  void add(const std::string& name, Variant v, double cost);
  void load_file(const std::string& path);
  std::optional<double> lookup(const std::string& name, Variant v) const;
  int size() const { return static_cast<int>(table_.size()); }

 private:
  std::map<std::string, double> table_;
};

// 100 * (value - bks) / bks; throws std::domain_error unless bks > 0.
double gap_percent(double value, double bks);

std::string format_cost(double cost);  // 2 decimals
std::string format_gap(double gap);    // 4 decimals

}  // namespace ails

#endif
