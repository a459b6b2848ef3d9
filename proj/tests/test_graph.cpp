#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsrg/graph.hpp"

using namespace qsrg;

namespace {

Graph rook_3x3() {
    Graph g = make_graph(9);
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            if (i / 3 == j / 3 || i % 3 == j % 3) add_edge(g, i, j);
    return g;
}

const std::vector<std::pair<Family, int>> kAllCases = {
    {Family::hyperbolic, 3}, {Family::parabolic, 4}, {Family::elliptic, 5},
    {Family::hyperbolic, 5}, {Family::parabolic, 6}, {Family::elliptic, 7},
    {Family::hyperbolic, 7}, {Family::parabolic, 8}, {Family::elliptic, 9},
    {Family::hyperbolic, 9},
};

}  // namespace

TEST_CASE("point graphs are strongly regular with the table parameters") {
    for (auto [f, n] : kAllCases) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        const SrgCheckResult res = srg_check(g);
        CHECK(res.is_srg);
        CHECK(res.params == srg_params(f, q.r));
        CHECK(g.edge_count() == res.params.v * res.params.k / 2);
    }
}

TEST_CASE("frozen spot checks") {
    CHECK(srg_check(point_graph(standard_quadric(Family::hyperbolic, 3))).params ==
          SrgParams{9, 4, 1, 2});
    CHECK(srg_check(point_graph(standard_quadric(Family::parabolic, 4))).params ==
          SrgParams{15, 6, 1, 3});
    CHECK(srg_check(point_graph(standard_quadric(Family::elliptic, 5))).params ==
          SrgParams{27, 10, 1, 5});
    CHECK(srg_check(point_graph(standard_quadric(Family::hyperbolic, 5))).params ==
          SrgParams{35, 18, 9, 9});
    CHECK(srg_check(point_graph(standard_quadric(Family::elliptic, 7))).params ==
          SrgParams{119, 54, 21, 27});
}

TEST_CASE("the point graph of the smallest hyperbolic quadric is the 3x3 rook graph") {
    const Graph g = point_graph(standard_quadric(Family::hyperbolic, 3));
    const Graph rook = rook_3x3();
    CHECK(srg_check(rook).params == srg_check(g).params);
    // same parameters and both are 3x3 grids: every vertex lies on exactly
    // two triangles (its row and its column)
    for (int u = 0; u < 9; ++u) {
        int triangles = 0;
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b)
                if (g.adjacent(u, a) && g.adjacent(u, b) && g.adjacent(a, b)) ++triangles;
        CHECK(triangles == 2);
    }
}

TEST_CASE("srg_check failure witnesses") {
    Graph path = make_graph(3);
    add_edge(path, 0, 1);
    add_edge(path, 1, 2);
    const SrgCheckResult res = srg_check(path);
    CHECK_FALSE(res.is_srg);
    CHECK(res.reason == "degree not constant");
    CHECK(res.witness_u == 0);
    CHECK(res.witness_v == 1);

    // C5 is SRG(5,2,0,1)
    Graph c5 = make_graph(5);
    for (int i = 0; i < 5; ++i) add_edge(c5, i, (i + 1) % 5);
    const SrgCheckResult c5res = srg_check(c5);
    CHECK(c5res.is_srg);
    CHECK(c5res.params == SrgParams{5, 2, 0, 1});

    // C6 is regular but not strongly regular
    Graph c6 = make_graph(6);
    for (int i = 0; i < 6; ++i) add_edge(c6, i, (i + 1) % 6);
    const SrgCheckResult c6res = srg_check(c6);
    CHECK_FALSE(c6res.is_srg);
    CHECK(c6res.witness_u >= 0);

    CHECK_THROWS_AS(srg_check(make_graph(1)), std::invalid_argument);
}

TEST_CASE("graph6 encodes the empty 5-vertex graph as D??") {
    CHECK(encode_graph6(make_graph(5)) == "D??");
    const Graph g = decode_graph6("D??");
    CHECK(g.v == 5);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("graph6 round trip on constructed graphs, including the long header") {
    for (auto [f, n] : kAllCases) {
        const Graph g = point_graph(standard_quadric(f, n));
        const std::string enc = encode_graph6(g);
        for (char c : enc) CHECK((c >= 63 && c <= 126));
        const Graph back = decode_graph6(enc);
        CHECK(same_edges(g, back));
        if (g.v > 62) CHECK(enc[0] == 126);
    }
}

TEST_CASE("graph6 round trip on pseudorandom graphs across the header boundary") {
    unsigned state = 12345;
    auto rnd = [&] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int v : {1, 2, 10, 61, 62, 63, 64, 100}) {
        Graph g = make_graph(v);
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (rnd() % 3 == 0) add_edge(g, i, j);
        const std::string enc = encode_graph6(g);
        CHECK(same_edges(decode_graph6(enc), g));
        CHECK(encode_graph6(decode_graph6(enc)) == enc);
    }
}

TEST_CASE("graph6 decode errors") {
    CHECK_THROWS_AS(decode_graph6(""), std::runtime_error);
    CHECK_THROWS_AS(decode_graph6("D?"), std::runtime_error);          // truncated body
    CHECK_THROWS_AS(decode_graph6("D???"), std::runtime_error);        // extra bytes
    CHECK_THROWS_AS(decode_graph6("D?\x1f"), std::runtime_error);      // non-printable
    CHECK_THROWS_AS(decode_graph6(std::string("D?") + char(127)), std::runtime_error);
    // trailing padding bits set: 5 vertices need 10 bits, the low 2 bits of
    // the last byte are padding; '@'+1 = 'A' would set one
    CHECK_THROWS_AS(decode_graph6("D?@"), std::runtime_error);

    // valid small graph: K2
    Graph k2 = make_graph(2);
    add_edge(k2, 0, 1);
    CHECK(decode_graph6(encode_graph6(k2)).adjacent(0, 1));
}
