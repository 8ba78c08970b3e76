#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "leosdn/delay.hpp"
#include "support/exhaustive_oracle.hpp"

using namespace leosdn;

namespace {

DelayMatrix matrix_from(std::initializer_list<std::initializer_list<double>> rows) {
    DelayMatrix m;
    m.num_satellites = static_cast<int>(rows.size());
    m.num_controllers = static_cast<int>(rows.begin()->size());
    for (const auto& row : rows)
        for (double v : row) m.values_ms.push_back(v);
    return m;
}

}  // namespace

TEST_CASE("direct visibility single-edge path") {
    NetworkGraph graph;
    graph.num_satellites = 1;
    graph.num_stations = 1;
    const double dist = 2100.0;
    graph.edges.push_back({0, 1, propagation_delay_ms(dist)});

    const DelayMatrix matrix = delay_matrix(graph);
    CHECK(matrix.at(0, 0) == doctest::Approx(dist / 299792.458 * 1000.0).epsilon(1e-12));
}

TEST_CASE("relayed path sums the legs") {
    // Satellite 0 is not visible; its neighbor 1 reaches the station at
    // 4.42 ms over a 6.00 ms ISL.
    NetworkGraph graph;
    graph.num_satellites = 2;
    graph.num_stations = 1;
    graph.edges.push_back({0, 1, 6.00});
    graph.edges.push_back({1, 2, 4.42});

    const DelayMatrix matrix = delay_matrix(graph);
    CHECK(matrix.at(0, 0) == doctest::Approx(10.42).epsilon(1e-12));
    CHECK(matrix.at(1, 0) == doctest::Approx(4.42).epsilon(1e-12));
}

TEST_CASE("station with no visible satellite yields an unreachable column") {
    NetworkGraph graph;
    graph.num_satellites = 2;
    graph.num_stations = 2;
    graph.edges.push_back({0, 1, 5.0});
    graph.edges.push_back({0, 2, 7.0});  // station 0 sees satellite 0 only

    const DelayMatrix matrix = delay_matrix(graph);
    CHECK(std::isfinite(matrix.at(0, 0)));
    CHECK(std::isfinite(matrix.at(1, 0)));
    CHECK(matrix.at(0, 1) == kUnreachableMs);
    CHECK(matrix.at(1, 1) == kUnreachableMs);
}

TEST_CASE("Dijkstra matches a Floyd-Warshall oracle exactly on dyadic graphs") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const NetworkGraph graph = testsupport::random_dyadic_graph(rng, 30);
        const DelayMatrix matrix = delay_matrix(graph);
        const auto all_pairs = testsupport::floyd_warshall(graph.num_nodes(), graph.edges);

        for (int j = 0; j < graph.num_stations; ++j) {
            const size_t station = static_cast<size_t>(graph.station_node(j));
            for (int i = 0; i < graph.num_satellites; ++i) {
                const double expected = all_pairs[station][static_cast<size_t>(i)];
                const double actual = matrix.at(i, j);
                if (std::isfinite(expected))
                    CHECK(actual == expected);  // exact, by dyadic-grid construction
                else
                    CHECK(actual == kUnreachableMs);
            }
        }
    }
}

TEST_CASE("adding an edge never increases any matrix entry") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        NetworkGraph graph = testsupport::random_dyadic_graph(rng, 20);
        const DelayMatrix before = delay_matrix(graph);

        std::uniform_int_distribution<int> node(0, graph.num_nodes() - 1);
        int u = node(rng);
        int v = node(rng);
        if (u == v) v = (v + 1) % graph.num_nodes();
        graph.edges.push_back({std::min(u, v), std::max(u, v), 0.5});
        const DelayMatrix after = delay_matrix(graph);

        for (size_t idx = 0; idx < before.values_ms.size(); ++idx)
            CHECK(after.values_ms[idx] <= before.values_ms[idx]);
    }
}

TEST_CASE("normalization bounds over slots, excluding the unreachable sentinel") {
    SUBCASE("single matrix") {
        const auto bounds = normalization_bounds({matrix_from({{10.0, 50.0}, {50.0, 10.0}})});
        CHECK(bounds.min_ms == 10.0);
        CHECK(bounds.max_ms == 50.0);
    }
    SUBCASE("across time instances") {
        const auto bounds = normalization_bounds({matrix_from({{10.0}}), matrix_from({{30.0}})});
        CHECK(bounds.min_ms == 10.0);
        CHECK(bounds.max_ms == 30.0);
    }
    SUBCASE("sentinel excluded") {
        const auto bounds = normalization_bounds({matrix_from({{10.0, kUnreachableMs}})});
        CHECK(bounds.min_ms == 10.0);
        CHECK(bounds.max_ms == 10.0);
    }
    SUBCASE("no finite entry anywhere is an error") {
        CHECK_THROWS_AS(normalization_bounds({matrix_from({{kUnreachableMs}})}),
                        InfeasibleScenarioError);
    }
}

TEST_CASE("normalization endpoints and midpoint") {
    const NormalizationBounds bounds{10.0, 50.0};
    CHECK(normalize(10.0, bounds) == 0.0);
    CHECK(normalize(50.0, bounds) == 1.0);
    CHECK(normalize(30.0, bounds) == doctest::Approx(0.5).epsilon(1e-15));

    const NormalizationBounds degenerate{25.0, 25.0};
    CHECK(normalize(25.0, degenerate) == 0.0);
}

TEST_CASE("normalized finite delays stay in [0, 1]") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        const NetworkGraph graph = testsupport::random_dyadic_graph(rng, 15);
        const DelayMatrix matrix = delay_matrix(graph);
        std::vector<DelayMatrix> horizon{matrix};
        NormalizationBounds bounds;
        try {
            bounds = normalization_bounds(horizon);
        } catch (const InfeasibleScenarioError&) {
            continue;  // fully disconnected draw
        }
        for (double v : matrix.values_ms) {
            if (!std::isfinite(v)) continue;
            const double normalized = normalize(v, bounds);
            CHECK(normalized >= 0.0);
            CHECK(normalized <= 1.0);
        }
    }
}

TEST_CASE("matrix CSV dump uses inf for the sentinel") {
    const DelayMatrix matrix = matrix_from({{1.5, kUnreachableMs}, {2.25, 3.0}});
    std::ostringstream out;
    write_delay_matrix_csv(out, matrix);
    CHECK(out.str() == "1.5,inf\n2.25,3\n");
}
