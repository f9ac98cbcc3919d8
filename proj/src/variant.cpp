#include "ails/variant.hpp"

#include <stdexcept>

namespace ails {

bool limited_fleet(Variant v) {
  return v == Variant::HVRPFD || v == Variant::HVRPD;
}

bool has_fixed_costs(Variant v) {
  return v == Variant::HVRPFD || v == Variant::FSMFD || v == Variant::FSMF;
}

bool has_dependent_costs(Variant v) { return v != Variant::FSMF; }

const char* to_string(Variant v) {
  switch (v) {
    case Variant::HVRPFD: return "HVRPFD";
    case Variant::HVRPD: return "HVRPD";
    case Variant::FSMFD: return "FSMFD";
    case Variant::FSMF: return "FSMF";
    case Variant::FSMD: return "FSMD";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "HVRPFD") return Variant::HVRPFD;
  if (s == "HVRPD") return Variant::HVRPD;
  if (s == "FSMFD") return Variant::FSMFD;
  if (s == "FSMF") return Variant::FSMF;
  if (s == "FSMD") return Variant::FSMD;
  throw std::invalid_argument("unknown variant: " + s);
}

}  // namespace ails
