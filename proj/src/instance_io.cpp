#include "ails/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ails/variant.hpp"

namespace ails {
namespace {

struct LineReader {
  std::istream& in;
  std::string source;
  int line_no = 0;

  // Returns the next non-blank line, or false at end of input.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      bool blank = true;
      for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) {
          blank = false;
          break;
        }
      if (blank) continue;
      out = raw;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(source + ":" + std::to_string(line_no) + ": " + reason);
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

double parse_num(LineReader& rd, const std::string& tok) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) rd.fail("bad number '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    rd.fail("bad number '" + tok + "'");
  }
}

int parse_int(LineReader& rd, const std::string& tok) {
  double v = parse_num(rd, tok);
  int i = static_cast<int>(std::llround(v));
  if (std::abs(v - i) > 1e-9) rd.fail("expected integer, got '" + tok + "'");
  return i;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Trims trailing zeros so integral demands print as integers.
std::string fmt_load(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

Instance parse_instance(std::istream& in, const std::string& source,
                        std::optional<Variant> variant_override) {
  LineReader rd{in, source};
  Instance inst;
  std::string line;

  if (!rd.next(line)) rd.fail("empty input, expected NAME");
  auto toks = tokens_of(line);
  if (toks[0] != "NAME" || toks.size() != 2) rd.fail("expected 'NAME <name>'");
  inst.name = toks[1];

  if (!rd.next(line)) rd.fail("expected VARIANT or DIMENSION");
  toks = tokens_of(line);
  std::optional<Variant> file_variant;
  if (toks[0] == "VARIANT") {
    if (toks.size() != 2) rd.fail("expected 'VARIANT <name>'");
    try {
      file_variant = variant_from_string(toks[1]);
    } catch (const std::invalid_argument& e) {
      rd.fail(e.what());
    }
    if (!rd.next(line)) rd.fail("expected DIMENSION");
    toks = tokens_of(line);
  }
  if (variant_override)
    inst.variant = *variant_override;
  else if (file_variant)
    inst.variant = *file_variant;
  else
    rd.fail("no VARIANT line and no variant given on the command line");

  if (toks[0] != "DIMENSION" || toks.size() != 2)
    rd.fail("expected 'DIMENSION <n+1>'");
  int dim = parse_int(rd, toks[1]);
  if (dim < 2) rd.fail("DIMENSION must be at least 2");
  inst.n = dim - 1;

  if (!rd.next(line)) rd.fail("expected VEHICLE_TYPES");
  toks = tokens_of(line);
  if (toks[0] != "VEHICLE_TYPES" || toks.size() != 2)
    rd.fail("expected 'VEHICLE_TYPES <h>'");
  int h = parse_int(rd, toks[1]);
  if (h < 1) rd.fail("need at least one vehicle type");
  for (int t = 0; t < h; ++t) {
    if (!rd.next(line)) rd.fail("expected a vehicle type line");
    toks = tokens_of(line);
    if (toks.size() != 3 && toks.size() != 4)
      rd.fail("expected 'capacity fixed unit [count]'");
    VehicleType vt;
    vt.capacity = parse_num(rd, toks[0]);
    vt.fixed_cost = parse_num(rd, toks[1]);
    vt.unit_cost = parse_num(rd, toks[2]);
    vt.count = toks.size() == 4 ? parse_int(rd, toks[3]) : inst.n;
    if (vt.count < 1) rd.fail("vehicle count must be positive");
    inst.types.push_back(vt);
  }

  if (!rd.next(line)) rd.fail("expected NODE_COORD_SECTION");
  if (tokens_of(line)[0] != "NODE_COORD_SECTION")
    rd.fail("expected NODE_COORD_SECTION");
  inst.xs.resize(dim);
  inst.ys.resize(dim);
  for (int i = 0; i < dim; ++i) {
    if (!rd.next(line)) rd.fail("expected a coordinate line");
    toks = tokens_of(line);
    if (toks.size() != 3) rd.fail("expected 'id x y'");
    int id = parse_int(rd, toks[0]);
    if (id != i)
      rd.fail("expected node id " + std::to_string(i) + ", got " + toks[0]);
    inst.xs[i] = parse_num(rd, toks[1]);
    inst.ys[i] = parse_num(rd, toks[2]);
  }

  if (!rd.next(line)) rd.fail("expected DEMAND_SECTION");
  if (tokens_of(line)[0] != "DEMAND_SECTION") rd.fail("expected DEMAND_SECTION");
  inst.demands.resize(dim);
  for (int i = 0; i < dim; ++i) {
    if (!rd.next(line)) rd.fail("expected a demand line");
    toks = tokens_of(line);
    if (toks.size() != 2) rd.fail("expected 'id demand'");
    int id = parse_int(rd, toks[0]);
    if (id != i)
      rd.fail("expected node id " + std::to_string(i) + ", got " + toks[0]);
    inst.demands[i] = parse_num(rd, toks[1]);
  }

  if (!rd.next(line) || tokens_of(line)[0] != "EOF") rd.fail("expected EOF");

  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path,
                       std::optional<Variant> variant_override) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_instance(in, path, variant_override);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
  const auto& types = inst.normalized ? inst.original_types : inst.types;
  out << "NAME " << inst.name << "\n";
  out << "VARIANT " << to_string(inst.variant) << "\n";
  out << "DIMENSION " << inst.n + 1 << "\n";
  out << "VEHICLE_TYPES " << types.size() << "\n";
  for (const auto& t : types)
    out << fmt_load(t.capacity) << " " << fmt_load(t.fixed_cost) << " "
        << fmt_load(t.unit_cost) << " " << t.count << "\n";
  out << "NODE_COORD_SECTION\n";
  for (int i = 0; i <= inst.n; ++i)
    out << i << " " << fmt_load(inst.xs[i]) << " " << fmt_load(inst.ys[i])
        << "\n";
  out << "DEMAND_SECTION\n";
  for (int i = 0; i <= inst.n; ++i)
    out << i << " " << fmt_load(inst.demands[i]) << "\n";
  out << "EOF\n";
}

void write_solution(const Solution& s, std::ostream& out) {
  const Instance& inst = s.instance();
  for (int r = 0; r < s.num_routes(); ++r) {
    const Route& route = s.route(r);
    char letter = static_cast<char>('A' + route.vehicle_type);
    out << "Route " << r + 1 << " [type " << letter << "]: 0";
    for (int v : route.customers) out << " " << v;
    out << " 0 (load " << fmt_load(route.load) << ", cost "
        << fmt2(route_cost(route, inst)) << ")\n";
  }
  out << "Total cost: " << fmt2(s.cost()) << "\n";
}

void write_trace_header(std::ostream& out) {
  out << "run,iter,f,f_best,heuristic,omega,accepted\n";
}

void write_trace(const std::vector<TraceRecord>& trace, int run_index,
                 std::ostream& out) {
  char buf[128];
  for (const auto& t : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%lld,%.6f,%.6f,%s,%d,%d\n", run_index,
                  static_cast<long long>(t.iter), t.f, t.f_best,
                  to_string(t.heuristic), t.omega, t.accepted ? 1 : 0);
    out << buf;
  }
}

std::optional<std::vector<VehicleType>> benchmark_fleet(
    const std::string& key) {
  using F = std::vector<VehicleType>;
  // {capacity, fixed, unit, count}
  if (key == "3" || key == "5")
    return F{{20, 20, 1.0, 20},
             {30, 35, 1.1, 20},
             {40, 50, 1.2, 20},
             {70, 120, 1.7, 20},
             {120, 225, 2.5, 20}};
  if (key == "4")
    return F{{60, 1000, 1.0, 20}, {80, 1500, 1.1, 20}, {150, 3000, 1.4, 20}};
  if (key == "6")
    return F{{60, 1000, 1.0, 20}, {30, 1500, 1.1, 20}, {150, 3000, 1.4, 20}};
  if (key == "13")
    return F{{20, 20, 1.0, 4},   {30, 35, 1.1, 2},   {40, 50, 1.2, 4},
             {70, 120, 1.7, 4},  {120, 225, 2.5, 2}, {200, 400, 3.2, 1}};
  if (key == "14")
    return F{{120, 1000, 1.0, 4}, {160, 1500, 1.1, 2}, {300, 3500, 1.4, 1}};
  if (key == "15")
    return F{{50, 100, 1.0, 4}, {100, 250, 1.6, 3}, {160, 450, 2.0, 2}};
  if (key == "16")
    return F{{40, 100, 1.0, 2}, {80, 200, 1.6, 4}, {140, 400, 2.1, 3}};
  if (key == "17")
    return F{{50, 25, 1.0, 4},
             {120, 80, 1.2, 4},
             {200, 150, 1.5, 2},
             {350, 320, 1.8, 1}};
  if (key == "18")
    return F{{20, 10, 1.0, 4},   {50, 35, 1.3, 4},   {100, 100, 1.9, 2},
             {150, 180, 2.4, 2}, {250, 400, 2.9, 1}, {400, 800, 3.2, 1}};
  if (key == "19")
    return F{{100, 500, 1.0, 4}, {200, 1200, 1.4, 3}, {300, 2100, 1.7, 3}};
  if (key == "20")
    return F{{60, 100, 1.0, 6}, {140, 300, 1.7, 4}, {200, 500, 2.0, 3}};
  if (key == "N1")
    return F{{50, 0, 1.0, 5},
             {100, 0, 1.5, 4},
             {150, 0, 1.9, 4},
             {200, 0, 2.2, 3},
             {250, 0, 2.6, 2}};
  if (key == "N2")
    return F{{50, 0, 1.0, 8},  {100, 0, 1.5, 6}, {150, 0, 1.9, 5},
             {200, 0, 2.2, 4}, {250, 0, 2.6, 2}, {350, 0, 3.2, 1}};
  if (key == "N3")
    return F{{50, 0, 1.0, 6},
             {100, 0, 1.5, 3},
             {150, 0, 1.9, 3},
             {200, 0, 2.2, 2}};
  if (key == "N4")
    return F{{50, 0, 1.0, 4},
             {120, 0, 1.6, 4},
             {180, 0, 2.1, 4},
             {240, 0, 2.6, 2}};
  if (key == "N5")
    return F{{900, 0, 1.0, 5},
             {1500, 0, 1.5, 3},
             {2000, 0, 1.8, 2},
             {2500, 0, 2.2, 1}};
  if (key == "H1")
    return F{{50, 0, 1.0, 8},
             {100, 0, 1.1, 6},
             {200, 0, 1.2, 4},
             {500, 0, 1.7, 3},
             {1000, 0, 2.5, 1}};
  if (key == "H2")
    return F{{50, 0, 1.0, 10},
             {100, 0, 1.1, 5},
             {200, 0, 1.2, 5},
             {500, 0, 1.7, 4},
             {1000, 0, 2.5, 1}};
  if (key == "H3")
    return F{{50, 0, 1.0, 10},
             {100, 0, 1.1, 5},
             {200, 0, 1.2, 5},
             {500, 0, 1.7, 4},
             {1000, 0, 2.5, 2}};
  if (key == "H4")
    return F{{50, 0, 1.0, 10},  {100, 0, 1.1, 8}, {200, 0, 1.2, 5},
             {500, 0, 1.7, 2},  {1000, 0, 2.5, 2}, {1500, 0, 3.0, 1}};
  if (key == "H5")
    return F{{50, 0, 1.0, 10},  {100, 0, 1.2, 8}, {200, 0, 1.5, 5},
             {500, 0, 1.8, 1},  {1500, 0, 2.5, 2}, {2000, 0, 3.0, 1}};
  return std::nullopt;
}

Instance convert_legacy(std::istream& in, const std::string& source,
                        const std::string& name, Variant variant,
                        const std::optional<std::string>& fleet_key) {
  LineReader rd{in, source};
  Instance inst;
  inst.name = name;
  inst.variant = variant;

  std::string line;
  if (!rd.next(line)) rd.fail("empty input, expected header");
  auto toks = tokens_of(line);
  if (toks.size() != 1 && toks.size() != 2)
    rd.fail("expected '<n> [<types>]' header");
  inst.n = parse_int(rd, toks[0]);
  if (inst.n < 1) rd.fail("need at least one customer");

  if (fleet_key) {
    auto fleet = benchmark_fleet(*fleet_key);
    if (!fleet)
      rd.fail("unknown fleet key '" + *fleet_key + "'");
    inst.types = *fleet;
  } else {
    if (toks.size() != 2)
      rd.fail("header has no type count and no fleet key was given");
    int h = parse_int(rd, toks[1]);
    if (h < 1) rd.fail("need at least one vehicle type");
    for (int t = 0; t < h; ++t) {
      if (!rd.next(line)) rd.fail("expected a vehicle type line");
      toks = tokens_of(line);
      VehicleType vt;
      if (toks.size() == 4) {
        vt.capacity = parse_num(rd, toks[0]);
        vt.fixed_cost = parse_num(rd, toks[1]);
        vt.unit_cost = parse_num(rd, toks[2]);
        vt.count = parse_int(rd, toks[3]);
      } else if (toks.size() == 3) {
        vt.capacity = parse_num(rd, toks[0]);
        vt.fixed_cost = 0.0;
        vt.unit_cost = parse_num(rd, toks[1]);
        vt.count = parse_int(rd, toks[2]);
      } else {
        rd.fail("expected 'capacity fixed unit count' or 'capacity unit count'");
      }
      if (vt.count < 1) rd.fail("vehicle count must be positive");
      inst.types.push_back(vt);
    }
  }

  int dim = inst.n + 1;
  inst.xs.resize(dim);
  inst.ys.resize(dim);
  inst.demands.resize(dim);
  for (int i = 0; i < dim; ++i) {
    if (!rd.next(line)) rd.fail("expected a node line 'id x y demand'");
    toks = tokens_of(line);
    if (toks.size() != 4) rd.fail("expected 'id x y demand'");
    int id = parse_int(rd, toks[0]);
    if (id != i)
      rd.fail("expected node id " + std::to_string(i) + ", got " + toks[0]);
    inst.xs[i] = parse_num(rd, toks[1]);
    inst.ys[i] = parse_num(rd, toks[2]);
    inst.demands[i] = parse_num(rd, toks[3]);
  }

  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
  return inst;
}

}  // namespace ails
