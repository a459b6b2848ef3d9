#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsrg/gf2.hpp"
#include "qsrg/graph.hpp"

namespace qsrg {

// Isomorphism-invariant summary. Equality is necessary, not sufficient.
struct Fingerprint {
    bool is_srg = false;
    SrgParams srg;
    long n_cliques = 0;
    std::map<int, long> clique_size_hist;
    std::map<long, long> cliques_per_vertex_hist;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g, int jobs = 1);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;  // g1 vertex -> g2 vertex, edge-checked
};

// Colour-refinement search with individualization and backtracking, seeded
// with the cliques-per-vertex invariant. A "true" verdict always carries an
// explicitly re-verified bijection; "false" means the search space was
// exhausted. Throws on an exceeded node budget.
IsoResult is_isomorphic(const Graph& g1, const Graph& g2, long node_budget = 50'000'000);

struct AutReport {
    enum class Status { ok, aborted } status = Status::aborted;
    BigInt order = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<int>> orbits;  // sorted, partition of the vertices
    int orbit_count = 0;
};

// Full automorphism group via a stabilizer chain: base points are chosen by
// refinement, transversal elements found by the same backtracking search,
// order as the product of the orbit sizes. Aborts (status) above the vertex
// bound or when the node budget runs out.
AutReport automorphisms(const Graph& g, int vertex_bound = 150,
                        long node_budget = 50'000'000);

// Order of the subgroup of Aut(g) fixing the set as a set, by filtered
// traversal of the group elements. nullopt when the group computation
// aborts or the group is too large to traverse.
std::optional<BigInt> setwise_stabilizer_order(const Graph& g, const std::vector<int>& set,
                                               int vertex_bound = 150,
                                               long node_budget = 50'000'000);

// Recovers the point-graph from an unlabeled switched graph: vertices are
// typed by their maximal-clique counts (three distinct values, decreasing
// from type I to III), then the II-III adjacencies are flipped back.
Graph reconstruct_point_graph(const Graph& g);

bool is_edge_preserving(const Graph& g1, const Graph& g2, const std::vector<int>& perm);

// (f * h)(x) = f(h(x))
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& h);

}  // namespace qsrg
