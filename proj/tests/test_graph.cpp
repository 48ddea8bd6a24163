#include "doctest.h"

#include <random>
#include <sstream>

#include "hsw/graph.hpp"
#include "hsw/jacobi.hpp"
#include "hsw/matrices.hpp"

using namespace hsw;

TEST_CASE("baseline families match their definitions") {
    Graph k4 = build_baseline(Family::complete, 4);
    CHECK(k4.m() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph x5 = build_baseline(Family::star, 5);
    CHECK(x5.m() == 4);
    CHECK(x5.degree(0) == 4);
    for (int v = 1; v < 5; ++v) CHECK(x5.degree(v) == 1);

    Graph p4 = build_baseline(Family::path, 4);
    CHECK(p4.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph c5 = build_baseline(Family::cycle, 5);
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("baseline builders reject n below the family minimum") {
    CHECK_THROWS_AS(build_baseline(Family::path, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_baseline(Family::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_baseline(Family::star, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_baseline(Family::complete, 1), std::invalid_argument);
}

TEST_CASE("make_graph validates the edge set") {
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);

    Graph g = make_graph(3, {{2, 1}, {1, 0}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("neighbor lists are symmetric") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = make_graph(n, edges);
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[u]) CHECK(g.has_edge(v, u));
    }
}

TEST_CASE("matrix set invariants: L = D - A, zero row sums, symmetry, stochastic P") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = build_baseline(Family::path, n);
        // sprinkle extra edges on top of a path so the graph stays connected
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v)
                if (rng() % 3 == 0) g = make_graph(n, [&] {
                        auto e = g.edges;
                        e.emplace_back(u, v);
                        return e;
                    }());

        MatrixSet ms = build_matrices(g);
        for (int i = 0; i < n; ++i) {
            double row_l = 0.0, row_p = 0.0;
            for (int j = 0; j < n; ++j) {
                CHECK(ms.laplacian(i, j) == ms.degree(i, j) - ms.adjacency(i, j));
                CHECK(ms.laplacian(i, j) == ms.laplacian(j, i));
                CHECK(ms.adjacency(i, j) == ms.adjacency(j, i));
                row_l += ms.laplacian(i, j);
                row_p += ms.transition(i, j);
            }
            CHECK(row_l == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(row_p == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("K_2 Laplacian is [[1,-1],[-1,1]]") {
    MatrixSet ms = build_matrices(build_baseline(Family::path, 2));
    CHECK(ms.laplacian(0, 0) == 1.0);
    CHECK(ms.laplacian(0, 1) == -1.0);
    CHECK(ms.laplacian(1, 0) == -1.0);
    CHECK(ms.laplacian(1, 1) == 1.0);
}

TEST_CASE("star X_4 Laplacian spectrum is {0,1,1,4}") {
    Graph x4 = build_baseline(Family::star, 4);
    std::vector<double> ev = symmetric_eigenvalues(laplacian_matrix(x4));
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("rank(L) = n-1 for connected graphs: eigenvalue 0 is simple") {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::complete}) {
        Graph g = build_baseline(f, 6);
        std::vector<double> ev = symmetric_eigenvalues(laplacian_matrix(g));
        CHECK(std::fabs(ev[0]) < 1e-10);
        CHECK(ev[1] > 1e-6);
    }
}

TEST_CASE("edge-list round trip preserves the graph and the header") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        Graph g = make_graph(n, edges);

        std::stringstream ss;
        write_edge_list(g, ss);
        std::string first_line;
        std::getline(ss, first_line);
        CHECK(first_line == "# n=" + std::to_string(g.n) + " m=" + std::to_string(g.m()));

        ss.clear();
        ss.seekg(0);
        Graph back = read_edge_list(ss);
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("read_edge_list rejects malformed input") {
    std::stringstream bad_header("n=3 m=1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), std::invalid_argument);
    std::stringstream wrong_count("# n=3 m=2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(wrong_count), std::invalid_argument);
}
