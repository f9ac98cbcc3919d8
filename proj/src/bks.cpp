#include "ails/bks.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ails {
namespace {

std::string key_of(const std::string& name, Variant v) {
  return name + "/" + to_string(v);
}

struct Row {
  const char* name;
  Variant variant;
  double cost;
};

constexpr Variant kHVRPFD = Variant::HVRPFD;
constexpr Variant kHVRPD = Variant::HVRPD;
constexpr Variant kFSMFD = Variant::FSMFD;
constexpr Variant kFSMF = Variant::FSMF;
constexpr Variant kFSMD = Variant::FSMD;

const Row kBuiltin[] = {
    {"13", kHVRPFD, 3185.09},  {"14", kHVRPFD, 10107.53},
    {"15", kHVRPFD, 3065.29},  {"16", kHVRPFD, 3265.41},
    {"17", kHVRPFD, 2076.96},  {"18", kHVRPFD, 3743.58},
    {"19", kHVRPFD, 10420.34}, {"20", kHVRPFD, 4760.68},

    {"13", kHVRPD, 1517.84},   {"14", kHVRPD, 607.53},
    {"15", kHVRPD, 1015.29},   {"16", kHVRPD, 1144.94},
    {"17", kHVRPD, 1061.96},   {"18", kHVRPD, 1823.58},
    {"19", kHVRPD, 1117.51},   {"20", kHVRPD, 1534.17},
    {"N1", kHVRPD, 2233.90},   {"N2", kHVRPD, 2851.94},
    {"N3", kHVRPD, 2378.99},   {"N4", kHVRPD, 1839.22},
    {"N5", kHVRPD, 2047.81},   {"H1", kHVRPD, 12050.08},
    {"H2", kHVRPD, 10130.30},  {"H3", kHVRPD, 16192.26},
    {"H4", kHVRPD, 17273.75},  {"H5", kHVRPD, 23024.58},

    {"3", kFSMFD, 1144.22},    {"4", kFSMFD, 6437.33},
    {"5", kFSMFD, 1322.26},    {"6", kFSMFD, 6516.47},
    {"13", kFSMFD, 2964.65},   {"14", kFSMFD, 9126.90},
    {"15", kFSMFD, 2634.96},   {"16", kFSMFD, 3168.92},
    {"17", kFSMFD, 2004.48},   {"18", kFSMFD, 3147.99},
    {"19", kFSMFD, 8661.81},   {"20", kFSMFD, 4153.02},

    {"3", kFSMF, 961.03},      {"4", kFSMF, 6437.33},
    {"5", kFSMF, 1007.05},     {"6", kFSMF, 6516.47},
    {"13", kFSMF, 2406.36},    {"14", kFSMF, 9119.03},
    {"15", kFSMF, 2586.37},    {"16", kFSMF, 2720.43},
    {"17", kFSMF, 1734.53},    {"18", kFSMF, 2369.65},
    {"19", kFSMF, 8661.81},    {"20", kFSMF, 4029.61},

    {"3", kFSMD, 623.22},      {"4", kFSMD, 387.18},
    {"5", kFSMD, 742.87},      {"6", kFSMD, 415.03},
    {"13", kFSMD, 1491.86},    {"14", kFSMD, 603.21},
    {"15", kFSMD, 999.82},     {"16", kFSMD, 1131.00},
    {"17", kFSMD, 1038.60},    {"18", kFSMD, 1800.80},
    {"19", kFSMD, 1105.44},    {"20", kFSMD, 1530.43},
    {"N1", kFSMD, 2211.63},    {"N2", kFSMD, 2811.37},
    {"N3", kFSMD, 2234.57},    {"N4", kFSMD, 1822.78},
    {"N5", kFSMD, 2016.79},
};

}  // namespace

BksRegistry BksRegistry::builtin() {
  BksRegistry reg;
  for (const Row& r : kBuiltin) reg.add(r.name, r.variant, r.cost);
  return reg;
}

void BksRegistry::add(const std::string& name, Variant v, double cost) {
  table_[key_of(name, v)] = cost;
}

void BksRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open BKS file");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string name, variant;
    double cost;
    if (!(ss >> name)) continue;
    if (!(ss >> variant >> cost))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'name variant cost'");
    add(name, variant_from_string(variant), cost);
  }
}

std::optional<double> BksRegistry::lookup(const std::string& name,
                                          Variant v) const {
  auto it = table_.find(key_of(name, v));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

double gap_percent(double value, double bks) {
  if (bks <= 0)
    throw std::domain_error("gap needs a positive best-known cost");
  return 100.0 * (value - bks) / bks;
}

std::string format_cost(double cost) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", cost);
  return buf;
}

std::string format_gap(double gap) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", gap);
  return buf;
}

}  // namespace ails
