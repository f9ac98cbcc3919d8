#ifndef AILS_VARIANT_HPP
#define AILS_VARIANT_HPP

#include <string>

namespace ails {

// The five heterogeneous-fleet problem variants. They differ in whether the
// number of vehicles per type is bounded, whether a per-vehicle fixed cost is
// paid, and whether travel cost depends on the vehicle type.
enum class Variant {
  HVRPFD,  // limited fleet, fixed + distance-dependent costs
  HVRPD,   // limited fleet, distance-dependent costs
  FSMFD,   // unlimited fleet, fixed + distance-dependent costs
  FSMF,    // unlimited fleet, fixed costs only
  FSMD,    // unlimited fleet, distance-dependent costs
};

bool limited_fleet(Variant v);
bool has_fixed_costs(Variant v);
bool has_dependent_costs(Variant v);

const char* to_string(Variant v);

// Parses the upper-case variant token; throws std::invalid_argument on
// anything else.
Variant variant_from_string(const std::string& s);

}  // namespace ails

#endif
