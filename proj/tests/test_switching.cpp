#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qsrg/switching.hpp"

using namespace qsrg;

namespace {

const std::vector<std::pair<Family, int>> kAllCases = {
    {Family::hyperbolic, 3}, {Family::parabolic, 4}, {Family::elliptic, 5},
    {Family::hyperbolic, 5}, {Family::parabolic, 6}, {Family::elliptic, 7},
    {Family::hyperbolic, 7}, {Family::parabolic, 8}, {Family::elliptic, 9},
    {Family::hyperbolic, 9},
};

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < g.v; ++i)
        g.adj[i].for_each([&](int j) {
            if (i < j) out.insert({i, j});
        });
    return out;
}

}  // namespace

TEST_CASE("vertex classification: frozen counts") {
    {
        const Quadric q = standard_quadric(Family::hyperbolic, 5);
        const TypedPartition part = classify_vertices(q, default_alpha(q, 0));
        CHECK(part.type2.size() == 18);
        CHECK(part.type1.size() == 1);
        CHECK(part.type3.size() == 16);
    }
    {
        const Quadric q = standard_quadric(Family::elliptic, 7);
        const TypedPartition part = classify_vertices(q, default_alpha(q, 1));
        CHECK(part.type2.size() == 20);
        CHECK(part.type1.size() == 3);
        CHECK(part.type3.size() == 96);
    }
}

TEST_CASE("vertex classification matches the closed forms for every case") {
    for (auto [f, n] : kAllCases) {
        const Quadric q = standard_quadric(f, n);
        for (int s = 0; s < q.g; ++s) {
            const TypedPartition part = classify_vertices(q, default_alpha(q, s));
            const CountPrediction pred = predict(f, 2, q.r, s);
            CHECK(BigInt(part.type1.size()) == pred.type_size[0]);
            CHECK(BigInt(part.type2.size()) == pred.type_size[1]);
            CHECK(BigInt(part.type3.size()) == pred.type_size[2]);
            CHECK(part.x_mask.count() + part.y_mask.count() == q.v());
            CHECK_FALSE(part.x_mask.intersects(part.y_mask));

            // type II really spans a singular (s+1)-space with alpha
            for (int i : part.type2) {
                std::vector<ProjPoint> pts = part.alpha.points;
                pts.push_back(q.points[i]);
                const Subspace ext = span(pts);
                CHECK(ext.dim == s + 1);
                CHECK(is_singular_subspace(q, ext));
            }
            for (int i : part.type3) {
                bool all = true;
                for (ProjPoint b : part.alpha.basis)
                    if (!q.contains(b ^ q.points[i])) all = false;
                CHECK_FALSE(all);
            }
        }
    }
}

TEST_CASE("classification preconditions") {
    const Quadric q = standard_quadric(Family::hyperbolic, 5);
    // s = g is out of range: a generator is not a valid base
    CHECK_THROWS_AS(classify_vertices(q, generators(q).front()), std::invalid_argument);
    CHECK_THROWS_AS(classify_vertices(q, span({})), std::invalid_argument);
    // a non-singular line (span through a 2-secant) is rejected
    const ProjPoint a = q.points[0];
    ProjPoint b = 0;
    for (ProjPoint cand : q.points)
        if (cand != a && !q.contains(a ^ cand)) {
            b = cand;
            break;
        }
    REQUIRE(b != 0);
    CHECK_THROWS_AS(classify_vertices(q, span({a, b})), std::invalid_argument);
}

TEST_CASE("switching conditions hold with the predicted degrees") {
    for (auto [f, n] : kAllCases) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        for (int s = 0; s < q.g; ++s) {
            const TypedPartition part = classify_vertices(q, default_alpha(q, s));
            const GmValidation val = gm_validate(g, part);
            CHECK(val.ok);
            CHECK(val.violations.empty());
            CHECK(val.x_size == val.expected_x_size);
            CHECK(val.induced_degree == val.expected_degree);
        }
    }
}

TEST_CASE("frozen induced degrees") {
    {
        const Quadric q = standard_quadric(Family::hyperbolic, 5);
        const Graph g = point_graph(q);
        const GmValidation val = gm_validate(g, classify_vertices(q, default_alpha(q, 0)));
        CHECK(val.induced_degree == 9);
        CHECK(val.x_size == 18);
    }
    {
        const Quadric q = standard_quadric(Family::elliptic, 7);
        const Graph g = point_graph(q);
        const TypedPartition part = classify_vertices(q, default_alpha(q, 1));
        const GmValidation val = gm_validate(g, part);
        CHECK(val.induced_degree == 3);
        // every type-III vertex sees exactly half of X
        for (int i : part.type3) CHECK(g.adj[i].count_and(part.x_mask) == 10);
        for (int i : part.type1) CHECK(g.adj[i].count_and(part.x_mask) == 20);
    }
}

TEST_CASE("gm_validate flags a broken partition") {
    const Quadric q = standard_quadric(Family::hyperbolic, 5);
    const Graph g = point_graph(q);
    TypedPartition part = classify_vertices(q, default_alpha(q, 0));
    // move one vertex from type III to type II
    const int moved = part.type3.back();
    part.type3.pop_back();
    part.type2.push_back(moved);
    part.type_of[moved] = VertexType::II;
    part.x_mask.set(moved);
    part.y_mask.reset(moved);
    const GmValidation val = gm_validate(g, part);
    CHECK_FALSE(val.ok);
    CHECK_FALSE(val.violations.empty());
    CHECK_THROWS_AS(gm_switch(g, part), std::runtime_error);
}

TEST_CASE("switched graphs are strongly regular with unchanged parameters") {
    for (auto [f, n] : kAllCases) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        const SrgCheckResult before = srg_check(g);
        for (int s = 0; s < q.g; ++s) {
            const TypedPartition part = classify_vertices(q, default_alpha(q, s));
            const Graph gs = gm_switch(g, part);
            const SrgCheckResult after = srg_check(gs);
            CHECK(after.is_srg);
            CHECK(after.params == before.params);
            CHECK(after.params == srg_params(f, q.r));
        }
    }
}

TEST_CASE("direct construction equals the switch, edge for edge") {
    for (auto [f, n] : kAllCases) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        for (int s = 0; s < q.g; ++s) {
            const TypedPartition part = classify_vertices(q, default_alpha(q, s));
            CHECK(same_edges(build_direct(q, part), gm_switch(g, part)));
        }
    }
}

TEST_CASE("switching twice restores the original graph") {
    for (auto [f, n] :
         {std::pair{Family::hyperbolic, 5}, {Family::parabolic, 6}, {Family::elliptic, 7}}) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        for (int s = 0; s < q.g; ++s) {
            const TypedPartition part = classify_vertices(q, default_alpha(q, s));
            const Graph once = gm_switch(g, part);
            const Graph twice = gm_switch(once, part);
            CHECK(same_edges(twice, g));
        }
    }
}

TEST_CASE("type I keeps its X-neighbourhood, type III has it complemented") {
    const Quadric q = standard_quadric(Family::parabolic, 6);
    const Graph g = point_graph(q);
    const TypedPartition part = classify_vertices(q, default_alpha(q, 1));
    const Graph gs = gm_switch(g, part);
    for (int i : part.type1) CHECK((g.adj[i] & part.x_mask) == (gs.adj[i] & part.x_mask));
    for (int i : part.type3) {
        BitVec expect = g.adj[i];
        expect ^= part.x_mask;
        expect &= part.x_mask;
        CHECK((gs.adj[i] & part.x_mask) == expect);
    }
    // II-II, I-anything, III-III edges unchanged
    for (int i : part.type2)
        for (int j : part.type2)
            if (i < j) CHECK(g.adjacent(i, j) == gs.adjacent(i, j));
}

TEST_CASE("table rule: I-II pairs are always adjacent in the switched graph") {
    const Quadric q = standard_quadric(Family::hyperbolic, 5);
    const TypedPartition part = classify_vertices(q, default_alpha(q, 1));
    const Graph gs = build_direct(q, part);
    for (int i : part.type1)
        for (int j : part.type2) CHECK(gs.adjacent(i, j));
}

TEST_CASE("the s=0 involution maps the point-graph onto the switched graph") {
    for (auto [f, n] : {std::pair{Family::hyperbolic, 3}, {Family::hyperbolic, 5},
                        {Family::parabolic, 6}, {Family::elliptic, 5}}) {
        const Quadric q = standard_quadric(f, n);
        const Graph g = point_graph(q);
        for (ProjPoint p : {q.points.front(), q.points[q.v() / 2], q.points.back()}) {
            const std::vector<int> phi = switching_involution(q, p);
            for (int i = 0; i < q.v(); ++i) CHECK(phi[phi[i]] == i);

            const TypedPartition part = classify_vertices(q, span({p}));
            for (int i : part.type1) CHECK(phi[i] == i);
            for (int i : part.type3) CHECK(phi[i] == i);
            for (int i : part.type2) CHECK(q.points[phi[i]] == (p ^ q.points[i]));

            const Graph image = apply_permutation(g, phi);
            const Graph g0 = gm_switch(g, part);
            CHECK(edge_set(image) == edge_set(g0));
        }
    }
}

TEST_CASE("involution rejects points off the quadric") {
    const Quadric q = standard_quadric(Family::hyperbolic, 5);
    ProjPoint off = 1;
    while (q.contains(off)) ++off;
    CHECK_THROWS_AS(switching_involution(q, off), std::invalid_argument);
}
