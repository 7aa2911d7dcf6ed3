#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "pdptw/matrix.hpp"
#include "pdptw/schedule.hpp"
#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"
#include "pdptw/validate.hpp"
#include "test_util.hpp"

using namespace pdptw;

TEST(EuclideanDistance, KnownValues) {
  EXPECT_DOUBLE_EQ(euclidean_distance({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(euclidean_distance({1, 1}, {1, 1}), 0.0);
  EXPECT_NEAR(euclidean_distance({0, 0}, {1, 1}), std::sqrt(2.0), 1e-9);
  EXPECT_DOUBLE_EQ(euclidean_distance({3, 4}, {0, 0}), euclidean_distance({0, 0}, {3, 4}));
}

TEST(DistanceMatrix, DiagonalSymmetryAndValues) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  for (int i = 0; i < matrix.size(); ++i) {
    EXPECT_DOUBLE_EQ(matrix(i, i), 0.0);
    for (int j = 0; j < matrix.size(); ++j) {
      EXPECT_DOUBLE_EQ(matrix(i, j), matrix(j, i));
    }
  }
  // Vertices sit at (0,0), (3,4), (3,0): off-diagonals 5, 3, 4.
  EXPECT_DOUBLE_EQ(matrix(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(matrix(0, 2), 3.0);
  EXPECT_DOUBLE_EQ(matrix(1, 2), 4.0);
}

TEST(DistanceMatrix, TriangleInequalityOnRandomInstances) {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    const Instance instance = testutil::random_raw_instance(rng);
    const DistanceMatrix matrix(instance);
    const int n = matrix.size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          EXPECT_LE(matrix(i, k), matrix(i, j) + matrix(j, k) + 1e-9);
        }
      }
    }
  }
}

TEST(DistanceMatrix, ForbiddenArcReadsInfinite) {
  const Instance instance = testutil::worked_instance();
  DistanceMatrix matrix(instance);
  matrix.forbid_arc(0, 1);
  EXPECT_TRUE(std::isinf(matrix(0, 1)));
  EXPECT_TRUE(std::isinf(matrix(1, 0)));
  EXPECT_DOUBLE_EQ(matrix(0, 2), 3.0);
}

TEST(ScheduleRoute, EmptyRoute) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 0}, instance.fleet()[0], instance, matrix);
  EXPECT_TRUE(schedule.empty());
  EXPECT_DOUBLE_EQ(schedule.distance, 0.0);
  EXPECT_DOUBLE_EQ(schedule.tardiness, 0.0);
  EXPECT_DOUBLE_EQ(schedule.return_arrival, 0.0);
}

TEST(ScheduleRoute, WorkedExample) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 2, 0}, instance.fleet()[0], instance, matrix);

  ASSERT_EQ(schedule.stops.size(), 2u);
  EXPECT_DOUBLE_EQ(schedule.stops[0].arrival, 5.0);
  EXPECT_DOUBLE_EQ(schedule.stops[0].departure, 12.0);  // waits for the window, then serves
  EXPECT_DOUBLE_EQ(schedule.stops[0].load_after, 5.0);
  EXPECT_DOUBLE_EQ(schedule.stops[1].arrival, 16.0);
  EXPECT_DOUBLE_EQ(schedule.stops[1].departure, 17.0);
  EXPECT_DOUBLE_EQ(schedule.stops[1].load_after, 0.0);
  EXPECT_DOUBLE_EQ(schedule.return_arrival, 20.0);
  EXPECT_DOUBLE_EQ(schedule.distance, 12.0);
  EXPECT_DOUBLE_EQ(schedule.tardiness, 0.0);
  EXPECT_DOUBLE_EQ(schedule.max_load, 5.0);
}

TEST(ScheduleRoute, TardinessWhenWindowClosesEarly) {
  const Instance instance = testutil::worked_instance(4.0);
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 2, 0}, instance.fleet()[0], instance, matrix);
  EXPECT_DOUBLE_EQ(schedule.tardiness, 1.0);  // arrival 5 against close 4
}

TEST(ScheduleRoute, RejectsMalformedRoutes) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  const Vehicle& vehicle = instance.fleet()[0];
  EXPECT_THROW(schedule_route({1, 2}, vehicle, instance, matrix), std::invalid_argument);
  EXPECT_THROW(schedule_route({0, 1, 1, 0}, vehicle, instance, matrix), std::invalid_argument);
  EXPECT_THROW(schedule_route({0, 1, 2}, vehicle, instance, matrix), std::invalid_argument);
  EXPECT_THROW(schedule_route({0, 7, 0}, vehicle, instance, matrix), std::invalid_argument);
}

TEST(ScheduleRoute, RecurrenceHoldsExactly) {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const Instance instance = testutil::random_raw_instance(rng);
    const DistanceMatrix matrix(instance);
    const Chromosome c = testutil::random_chromosome(instance, rng);
    const std::vector<int> route = [&] {
      std::vector<int> r{0};
      r.insert(r.end(), c.genes.begin(), c.genes.end());
      r.push_back(0);
      return r;
    }();
    const Vehicle& vehicle = instance.fleet()[0];
    const RouteSchedule schedule = schedule_route(route, vehicle, instance, matrix);

    // Re-derive the recurrence independently.
    double departure = 0.0;
    int prev = 0;
    for (const Stop& stop : schedule.stops) {
      const Vertex& v = instance.vertex(stop.vertex);
      const double arrival = departure + matrix(prev, stop.vertex) / vehicle.speed;
      EXPECT_EQ(stop.arrival, arrival);
      EXPECT_EQ(stop.departure, std::max(arrival, v.window_open) + v.service_time);
      departure = stop.departure;
      prev = stop.vertex;
    }
    EXPECT_EQ(schedule.return_arrival, departure + matrix(prev, 0) / vehicle.speed);
  }
}

TEST(ScheduleRoute, LoadTelescoping) {
  Rng rng(13);
  for (int round = 0; round < 200; ++round) {
    const Instance instance = testutil::random_raw_instance(rng);
    const DistanceMatrix matrix(instance);
    const Chromosome c = testutil::random_chromosome(instance, rng);
    std::vector<int> route{0};
    route.insert(route.end(), c.genes.begin(), c.genes.end());
    route.push_back(0);
    const RouteSchedule schedule =
        schedule_route(route, instance.fleet()[0], instance, matrix);

    double sum = 0.0;
    for (int id : c.genes) sum += instance.vertex(id).quantity;
    ASSERT_FALSE(schedule.stops.empty());
    EXPECT_EQ(schedule.stops.back().load_after, sum);
    EXPECT_DOUBLE_EQ(sum, 0.0);  // complete pairs only
  }
}

TEST(CheckCapacity, UnderCapacityIsFeasible) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 2, 0}, instance.fleet()[0], instance, matrix);
  EXPECT_TRUE(check_capacity(schedule, instance.fleet()[0]).empty());
}

TEST(CheckCapacity, FlagsTheOverloadedStop) {
  // Two pairs with quantities 50 and 20: loads 50, 70, 20, 0 against Q=60.
  std::vector<Vertex> vertices{
      {0, {0, 0}, 0, 1e6, 0, 0},   {1, {1, 0}, 0, 1e6, 0, 50},  {2, {2, 0}, 0, 1e6, 0, -50},
      {3, {3, 0}, 0, 1e6, 0, 20},  {4, {4, 0}, 0, 1e6, 0, -20},
  };
  const Instance instance(vertices, {{1, 2}, {3, 4}}, {{1, 60.0, 1.0, 1.0}});
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 3, 2, 4, 0}, instance.fleet()[0], instance, matrix);

  const std::vector<Violation> violations = check_capacity(schedule, instance.fleet()[0]);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].vertex, 3);  // the stop where the load reads 70
}

TEST(CheckCapacity, CustomerBeforeSupplierGoesNegative) {
  std::vector<Vertex> vertices{
      {0, {0, 0}, 0, 1e6, 0, 0},
      {1, {1, 0}, 0, 1e6, 0, 10},
      {2, {2, 0}, 0, 1e6, 0, -10},
  };
  const Instance instance(vertices, {{1, 2}}, {{1, 60.0, 1.0, 1.0}});
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 2, 1, 0}, instance.fleet()[0], instance, matrix);
  const std::vector<Violation> violations = check_capacity(schedule, instance.fleet()[0]);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].vertex, 2);
  EXPECT_EQ(violations[0].detail, "negative load after service");
}

TEST(CheckTimeWindows, BoundaryArrivalIsFeasible) {
  // supplier_close = 5 makes the arrival land exactly on the window close.
  const Instance instance = testutil::worked_instance(5.0);
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 2, 0}, instance.fleet()[0], instance, matrix);
  EXPECT_TRUE(check_time_windows(schedule, instance).empty());
  EXPECT_DOUBLE_EQ(schedule.tardiness, 0.0);
}

TEST(CheckTimeWindows, FlagsLateArrival) {
  const Instance instance = testutil::worked_instance(4.0);
  const DistanceMatrix matrix(instance);
  const RouteSchedule schedule =
      schedule_route({0, 1, 2, 0}, instance.fleet()[0], instance, matrix);
  const std::vector<Violation> violations = check_time_windows(schedule, instance);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].vertex, 1);
}

TEST(CheckTimeWindows, NeverFlagsEarlyArrival) {
  Rng rng(17);
  for (int round = 0; round < 100; ++round) {
    const Instance instance = testutil::random_raw_instance(rng);
    const DistanceMatrix matrix(instance);
    const Chromosome c = testutil::random_chromosome(instance, rng);
    std::vector<int> route{0};
    route.insert(route.end(), c.genes.begin(), c.genes.end());
    route.push_back(0);
    const RouteSchedule schedule =
        schedule_route(route, instance.fleet()[0], instance, matrix);
    for (const Violation& v : check_time_windows(schedule, instance)) {
      if (v.vertex == 0) continue;
      bool found = false;
      for (const Stop& stop : schedule.stops) {
        if (stop.vertex == v.vertex && stop.arrival > instance.vertex(v.vertex).window_close) {
          found = true;
        }
      }
      EXPECT_TRUE(found) << "flagged vertex " << v.vertex << " was not late";
    }
  }
}

TEST(SolutionCost, UnitRatesEqualDistance) {
  const Instance instance = testutil::figure_instance();
  const DistanceMatrix matrix(instance);
  Chromosome c;
  c.genes = {5, 8, 2, 6, 4, 3, 10, 7, 9, 1};
  VehicleSplit split;
  split.counts = {6, 4};
  const Solution solution = make_solution(split_chromosome(c, split).routes, instance, matrix,
                                          PairingMode::same_vehicle);
  EXPECT_NEAR(solution_cost(solution, instance), solution.total_distance, 1e-9);
}

TEST(SolutionCost, EmptyRoutesCostNothing) {
  const Instance instance = testutil::figure_instance();
  Solution solution;
  solution.routes = {{0, 0}, {0, 0}};
  EXPECT_DOUBLE_EQ(solution_cost(solution, instance), 0.0);
}

TEST(SolutionCost, WeightsRoutesByCostRate) {
  // Vehicle rates 2 and 3 over route distances 10 and 20: cost 80.
  std::vector<Vertex> vertices{
      {0, {0, 0}, 0, 1e6, 0, 0},   {1, {5, 0}, 0, 1e6, 0, 1},  {2, {5, 0}, 0, 1e6, 0, -1},
      {3, {0, 10}, 0, 1e6, 0, 1},  {4, {0, 10}, 0, 1e6, 0, -1},
  };
  const Instance instance(vertices, {{1, 2}, {3, 4}},
                          {{1, 60.0, 2.0, 1.0}, {2, 60.0, 3.0, 1.0}});
  Solution solution;
  solution.routes = {{0, 1, 2, 0}, {0, 3, 4, 0}};
  EXPECT_DOUBLE_EQ(solution_cost(solution, instance), 2.0 * 10.0 + 3.0 * 20.0);
}

TEST(CheckPrecedence, SupplierFirstSameRoute) {
  const Instance instance = testutil::worked_instance();
  const DistanceMatrix matrix(instance);
  const Solution ok =
      make_solution({{0, 1, 2, 0}}, instance, matrix, PairingMode::same_vehicle);
  EXPECT_TRUE(check_precedence(ok, instance, PairingMode::same_vehicle).empty());

  const Solution reversed =
      make_solution({{0, 2, 1, 0}}, instance, matrix, PairingMode::same_vehicle);
  EXPECT_EQ(check_precedence(reversed, instance, PairingMode::same_vehicle).size(), 1u);
}

TEST(CheckPrecedence, SameVehicleModeRejectsSplitPairs) {
  // Pair 1 split over two vehicles with departures still ordered.
  std::vector<Vertex> vertices{
      {0, {0, 0}, 0, 1e6, 0, 0},   {1, {1, 0}, 0, 1e6, 0, 5},   {2, {50, 0}, 0, 1e6, 0, -5},
      {3, {2, 0}, 0, 1e6, 0, 7},   {4, {3, 0}, 0, 1e6, 0, -7},
  };
  const Instance instance(vertices, {{1, 2}, {3, 4}},
                          {{1, 60.0, 1.0, 1.0}, {2, 60.0, 1.0, 1.0}});
  const DistanceMatrix matrix(instance);
  const Solution solution = make_solution({{0, 1, 3, 4, 0}, {0, 2, 0}}, instance, matrix,
                                          PairingMode::same_vehicle);

  const std::vector<Violation> same =
      check_precedence(solution, instance, PairingMode::same_vehicle);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0].detail, "pair split across vehicles");

  // Under the literal departure-time reading the same placement is fine:
  // the supplier departs at 1, the customer at 50.
  EXPECT_TRUE(check_precedence(solution, instance, PairingMode::cross_vehicle).empty());
}

TEST(ValidateSolution, FigureSplitIsInfeasibleUnderSameVehiclePairing) {
  const Instance instance = testutil::figure_instance();
  const DistanceMatrix matrix(instance);
  Chromosome c;
  c.genes = {5, 8, 2, 6, 4, 3, 10, 7, 9, 1};
  VehicleSplit split;
  split.counts = {6, 4};
  const Solution solution = make_solution(split_chromosome(c, split).routes, instance, matrix,
                                          PairingMode::same_vehicle);
  EXPECT_FALSE(solution.feasible);
  // Pair (customer 1, supplier 5) lands on different vehicles.
  EXPECT_GT(solution.report.count(ViolationKind::precedence), 0);
}

TEST(ValidateSolution, EmptyAssignmentWithoutRequestsIsFeasible) {
  const Instance instance({Vertex{0, {0, 0}, 0, 100, 0, 0}}, {}, {{1, 10.0, 1.0, 1.0}});
  const DistanceMatrix matrix(instance);
  const Solution solution = make_solution({{0, 0}}, instance, matrix, PairingMode::same_vehicle);
  EXPECT_TRUE(solution.feasible);
  EXPECT_DOUBLE_EQ(solution.total_cost, 0.0);
}

TEST(ValidateSolution, DuplicatedVertexIsAStructureViolation) {
  const Instance instance = testutil::worked_instance();
  Solution solution;
  solution.routes = {{0, 1, 2, 1, 0}};
  const ValidationReport report =
      validate_solution(solution, instance, PairingMode::same_vehicle);
  EXPECT_FALSE(report.feasible());
  EXPECT_GT(report.count(ViolationKind::structure), 0);
}

TEST(ValidateSolution, IsPure) {
  const Instance instance = testutil::figure_instance();
  Solution solution;
  solution.routes = {{0, 5, 1, 8, 2, 0}, {0, 7, 9, 3, 10, 6, 4, 0}};
  const ValidationReport a = validate_solution(solution, instance, PairingMode::same_vehicle);
  const ValidationReport b = validate_solution(solution, instance, PairingMode::same_vehicle);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    EXPECT_EQ(a.violations[i].kind, b.violations[i].kind);
    EXPECT_EQ(a.violations[i].vehicle, b.violations[i].vehicle);
    EXPECT_EQ(a.violations[i].vertex, b.violations[i].vertex);
    EXPECT_EQ(a.violations[i].detail, b.violations[i].detail);
  }
}

TEST(Instance, RejectsBrokenInvariants) {
  // window_open > window_close
  EXPECT_THROW(Instance({Vertex{0, {0, 0}, 5, 1, 0, 0}}, {}, {{1, 10, 1, 1}}),
               std::invalid_argument);
  // depot with nonzero quantity
  EXPECT_THROW(Instance({Vertex{0, {0, 0}, 0, 10, 0, 3}}, {}, {{1, 10, 1, 1}}),
               std::invalid_argument);
  // pair quantities that do not cancel
  EXPECT_THROW(Instance({Vertex{0, {0, 0}, 0, 10, 0, 0}, Vertex{1, {0, 0}, 0, 10, 0, 5},
                         Vertex{2, {0, 0}, 0, 10, 0, -4}},
                        {{1, 2}}, {{1, 10, 1, 1}}),
               std::invalid_argument);
  // fleet larger than N'/2
  EXPECT_THROW(Instance({Vertex{0, {0, 0}, 0, 10, 0, 0}, Vertex{1, {0, 0}, 0, 10, 0, 5},
                         Vertex{2, {0, 0}, 0, 10, 0, -5}},
                        {{1, 2}}, {{1, 10, 1, 1}, {2, 10, 1, 1}}),
               std::invalid_argument);
}
