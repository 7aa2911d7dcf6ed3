#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

// Malformed input; what() names the line and field.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& field, const std::string& message);
};

// Well-formed input that violates instance or solution semantics.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rounds to 9 fractional digits, the serialized precision. Values that went
// through quantize9 round-trip exactly through the text formats.
double quantize9(double v);

// Fixed-point rendering with 9 fractional digits.
std::string format_real(double v);

// Line-oriented instance format, versioned by its first line:
//   pdptw-instance 1
//   counts <vertices> <pairs> <vehicles>
//   vertex <id> <x> <y> <open> <close> <service> <quantity>   (one per vertex, id order)
//   pair <supplier> <customer>
//   vehicle <id> <capacity> <cost_rate> <speed>
void write_instance(const Instance& instance, std::ostream& out);
void write_instance_file(const Instance& instance, const std::string& path);
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

// Solution report, versioned by its first line:
//   pdptw-solution 1
//   vehicles <K>
//   V<k>: 0 <vertex...> 0        (one per vehicle; "V<k>: 0 0" when unused)
//   stop <vehicle> <vertex> <arrival> <departure> <load>
//   return <vehicle> <arrival>
//   totals cost <c> distance <d> tardiness <t>
//   violations <n>
//   violation <kind> <vehicle> <vertex> <detail>
//   feasible <yes|no>
void write_solution(const Solution& solution, std::ostream& out);
void write_solution_file(const Solution& solution, const std::string& path);

// Reads the route lines back; schedules and the report are recomputed by the
// caller against an instance. Duplicated or misplaced vertices parse fine so
// the validator can report them; only ids outside the instance raise
// ValidationError.
std::vector<std::vector<int>> read_solution_routes(std::istream& in, const Instance& instance);
std::vector<std::vector<int>> read_solution_routes_file(const std::string& path,
                                                        const Instance& instance);

}  // namespace pdptw
