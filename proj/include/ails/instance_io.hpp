#ifndef AILS_INSTANCE_IO_HPP
#define AILS_INSTANCE_IO_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ails/engine.hpp"
#include "ails/instance.hpp"
#include "ails/solution.hpp"

namespace ails {

// Parse failure with "source:line: reason" in what().
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical instance text:
//
//   NAME <token>
//   VARIANT <HVRPFD|HVRPD|FSMFD|FSMF|FSMD>   (optional)
//   DIMENSION <n+1>
//   VEHICLE_TYPES <h>
//   <capacity fixed unit [count]>            (h lines; count defaults to n)
//   NODE_COORD_SECTION
//   <id x y>                                 (ids 0..n in order, 0 = depot)
//   DEMAND_SECTION
//   <id demand>                              (ids 0..n in order)
//   EOF
//
// The override wins over the VARIANT line; lacking both is an error. The
// result is validated and NOT normalized.
Instance parse_instance(std::istream& in, const std::string& source,
                        std::optional<Variant> variant_override = {});
Instance load_instance(const std::string& path,
                       std::optional<Variant> variant_override = {});

// Writes the canonical format (pre-normalization fleet data).
void serialize_instance(const Instance& inst, std::ostream& out);

// Human-readable routes plus the objective:
//   Route 1 [type A]: 0 5 3 0 (load 12, cost 130.00)
//   Total cost: 523.50
void write_solution(const Solution& s, std::ostream& out);

// One CSV block per run: run,iter,f,f_best,heuristic,omega,accepted.
void write_trace_header(std::ostream& out);
void write_trace(const std::vector<TraceRecord>& trace, int run_index,
                 std::ostream& out);

// Fleet blocks of the 22 classic benchmark instances, keyed "3".."6",
// "13".."20", "N1".."N5", "H1".."H5".
std::optional<std::vector<VehicleType>> benchmark_fleet(const std::string& key);

// Converts the common legacy layout:
//   <n> <h>
//   <h lines: capacity fixed unit count  |  capacity unit count>
//   <n+1 lines: id x y demand>           (id 0 = depot)
// or, with a fleet override, just "<n>" followed by the coordinate lines.
Instance convert_legacy(std::istream& in, const std::string& source,
                        const std::string& name, Variant variant,
                        const std::optional<std::string>& fleet_key = {});

}  // namespace ails

#endif
