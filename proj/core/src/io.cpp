#include "pdptw/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pdptw {

namespace {

std::string describe(int line, const std::string& field, const std::string& message) {
  return "line " + std::to_string(line) + ": field '" + field + "': " + message;
}

constexpr const char* kInstanceHeader = "pdptw-instance 1";
constexpr const char* kSolutionHeader = "pdptw-solution 1";

// Tracks line numbers so errors can name their location.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_number_;
    return true;
  }

  std::string require(const std::string& field) {
    std::string line;
    if (!next(line)) {
      throw ParseError(line_number_ + 1, field, "unexpected end of file");
    }
    return line;
  }

  int line_number() const { return line_number_; }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

class TokenLine {
 public:
  TokenLine(std::string line, int number) : stream_(std::move(line)), number_(number) {}

  std::string word(const std::string& field) {
    std::string token;
    if (!(stream_ >> token)) {
      throw ParseError(number_, field, "missing value");
    }
    return token;
  }

  int integer(const std::string& field) {
    const std::string token = word(field);
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return value;
    } catch (const std::exception&) {
      throw ParseError(number_, field, "expected an integer, got '" + token + "'");
    }
  }

  double real(const std::string& field) {
    const std::string token = word(field);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      throw ParseError(number_, field, "expected a real number, got '" + token + "'");
    }
    return value;
  }

  void expect_word(const std::string& field, const std::string& expected) {
    const std::string token = word(field);
    if (token != expected) {
      throw ParseError(number_, field, "expected '" + expected + "', got '" + token + "'");
    }
  }

  bool at_end() {
    std::string token;
    return !(stream_ >> token);
  }

  void expect_end() {
    std::string token;
    if (stream_ >> token) {
      throw ParseError(number_, "end of line", "unexpected trailing token '" + token + "'");
    }
  }

  int number() const { return number_; }

 private:
  std::istringstream stream_;
  int number_;
};

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

ParseError::ParseError(int line, const std::string& field, const std::string& message)
    : std::runtime_error(describe(line, field, message)) {}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9f", v);
  return buffer;
}

double quantize9(double v) {
  return std::strtod(format_real(v).c_str(), nullptr);
}

void write_instance(const Instance& instance, std::ostream& out) {
  out << kInstanceHeader << "\n";
  out << "counts " << instance.vertices().size() << " " << instance.pairs().size() << " "
      << instance.fleet().size() << "\n";
  for (const Vertex& v : instance.vertices()) {
    out << "vertex " << v.id << " " << format_real(v.position.x) << " "
        << format_real(v.position.y) << " " << format_real(v.window_open) << " "
        << format_real(v.window_close) << " " << format_real(v.service_time) << " "
        << format_real(v.quantity) << "\n";
  }
  for (const RequestPair& p : instance.pairs()) {
    out << "pair " << p.supplier << " " << p.customer << "\n";
  }
  for (const Vehicle& v : instance.fleet()) {
    out << "vehicle " << v.id << " " << format_real(v.capacity) << " "
        << format_real(v.cost_rate) << " " << format_real(v.speed) << "\n";
  }
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out = open_for_write(path);
  write_instance(instance, out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Instance read_instance(std::istream& in) {
  LineReader reader(in);

  {
    const std::string header = reader.require("format version");
    if (header != kInstanceHeader) {
      throw ParseError(1, "format version", "expected '" + std::string(kInstanceHeader) + "'");
    }
  }

  TokenLine counts(reader.require("counts"), reader.line_number());
  counts.expect_word("counts", "counts");
  const int vertex_count = counts.integer("vertex count");
  const int pair_count = counts.integer("pair count");
  const int vehicle_count = counts.integer("vehicle count");
  counts.expect_end();
  if (vertex_count < 1 || pair_count < 0 || vehicle_count < 1) {
    throw ParseError(counts.number(), "counts", "counts out of range");
  }

  std::vector<Vertex> vertices;
  vertices.reserve(static_cast<std::size_t>(vertex_count));
  for (int i = 0; i < vertex_count; ++i) {
    TokenLine line(reader.require("vertex"), reader.line_number());
    line.expect_word("record type", "vertex");
    Vertex v;
    v.id = line.integer("id");
    if (v.id != i) {
      throw ParseError(line.number(), "id",
                       "expected vertex " + std::to_string(i) + ", got " + std::to_string(v.id));
    }
    v.position.x = line.real("x");
    v.position.y = line.real("y");
    v.window_open = line.real("window_open");
    v.window_close = line.real("window_close");
    v.service_time = line.real("service_time");
    v.quantity = line.real("quantity");
    line.expect_end();
    vertices.push_back(v);
  }

  std::vector<RequestPair> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count));
  for (int i = 0; i < pair_count; ++i) {
    TokenLine line(reader.require("pair"), reader.line_number());
    line.expect_word("record type", "pair");
    RequestPair p;
    p.supplier = line.integer("supplier");
    p.customer = line.integer("customer");
    line.expect_end();
    pairs.push_back(p);
  }

  std::vector<Vehicle> fleet;
  fleet.reserve(static_cast<std::size_t>(vehicle_count));
  for (int i = 0; i < vehicle_count; ++i) {
    TokenLine line(reader.require("vehicle"), reader.line_number());
    line.expect_word("record type", "vehicle");
    Vehicle v;
    v.id = line.integer("id");
    v.capacity = line.real("capacity");
    v.cost_rate = line.real("cost_rate");
    v.speed = line.real("speed");
    line.expect_end();
    fleet.push_back(v);
  }

  {
    std::string extra;
    if (reader.next(extra)) {
      TokenLine line(extra, reader.line_number());
      if (!line.at_end()) {
        throw ParseError(reader.line_number(), "end of file", "unexpected extra content");
      }
    }
  }

  try {
    return Instance(std::move(vertices), std::move(pairs), std::move(fleet));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in = open_for_read(path);
  return read_instance(in);
}

void write_solution(const Solution& solution, std::ostream& out) {
  out << kSolutionHeader << "\n";
  out << "vehicles " << solution.routes.size() << "\n";
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    out << "V" << (k + 1) << ":";
    for (int id : solution.routes[k]) out << " " << id;
    out << "\n";
  }
  for (std::size_t k = 0; k < solution.schedules.size(); ++k) {
    const RouteSchedule& schedule = solution.schedules[k];
    for (const Stop& stop : schedule.stops) {
      out << "stop " << (k + 1) << " " << stop.vertex << " " << format_real(stop.arrival) << " "
          << format_real(stop.departure) << " " << format_real(stop.load_after) << "\n";
    }
    out << "return " << (k + 1) << " " << format_real(schedule.return_arrival) << "\n";
  }
  out << "totals cost " << format_real(solution.total_cost) << " distance "
      << format_real(solution.total_distance) << " tardiness "
      << format_real(solution.total_tardiness) << "\n";
  out << "violations " << solution.report.violations.size() << "\n";
  for (const Violation& v : solution.report.violations) {
    out << "violation " << to_string(v.kind) << " " << v.vehicle << " " << v.vertex << " "
        << v.detail << "\n";
  }
  out << "feasible " << (solution.feasible ? "yes" : "no") << "\n";
}

void write_solution_file(const Solution& solution, const std::string& path) {
  std::ofstream out = open_for_write(path);
  write_solution(solution, out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<std::vector<int>> read_solution_routes(std::istream& in, const Instance& instance) {
  LineReader reader(in);

  {
    const std::string header = reader.require("format version");
    if (header != kSolutionHeader) {
      throw ParseError(1, "format version", "expected '" + std::string(kSolutionHeader) + "'");
    }
  }

  TokenLine count_line(reader.require("vehicles"), reader.line_number());
  count_line.expect_word("vehicles", "vehicles");
  const int vehicle_count = count_line.integer("vehicle count");
  count_line.expect_end();
  if (vehicle_count != instance.fleet_size()) {
    throw ValidationError("solution declares " + std::to_string(vehicle_count) +
                          " vehicles, the instance has " +
                          std::to_string(instance.fleet_size()));
  }

  std::vector<std::vector<int>> routes;
  routes.reserve(static_cast<std::size_t>(vehicle_count));
  for (int k = 0; k < vehicle_count; ++k) {
    const std::string raw = reader.require("route");
    const int line_number = reader.line_number();
    std::istringstream tokens(raw);
    std::string label;
    if (!(tokens >> label) || label != "V" + std::to_string(k + 1) + ":") {
      throw ParseError(line_number, "route label",
                       "expected 'V" + std::to_string(k + 1) + ":'");
    }
    std::vector<int> route;
    std::string token;
    while (tokens >> token) {
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(line_number, "vertex", "expected an integer, got '" + token + "'");
      }
      if (id < 0 || id > instance.n_prime()) {
        throw ValidationError("line " + std::to_string(line_number) + ": vertex " +
                              std::to_string(id) + " does not exist in the instance");
      }
      route.push_back(id);
    }
    routes.push_back(std::move(route));
  }
  return routes;
}

std::vector<std::vector<int>> read_solution_routes_file(const std::string& path,
                                                        const Instance& instance) {
  std::ifstream in = open_for_read(path);
  return read_solution_routes(in, instance);
}

}  // namespace pdptw
