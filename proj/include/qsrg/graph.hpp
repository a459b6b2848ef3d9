#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsrg/bitvec.hpp"
#include "qsrg/formulas.hpp"
#include "qsrg/quadric.hpp"

namespace qsrg {

// Simple undirected graph, adjacency as per-vertex bit rows. Treated as
// immutable once built. labels optionally carries the quadric point behind
// each vertex.
struct Graph {
    int v = 0;
    std::vector<BitVec> adj;
    std::vector<ProjPoint> labels;

    bool adjacent(int i, int j) const { return adj[i].test(j); }
    int degree(int i) const { return adj[i].count(); }
    long edge_count() const;
};

Graph make_graph(int v);
void add_edge(Graph& g, int i, int j);
bool same_edges(const Graph& a, const Graph& b);

// Collinearity graph of the quadric: vertices are the quadric points in
// canonical order, edges are the lines inside the quadric.
Graph point_graph(const Quadric& q);

struct SrgCheckResult {
    bool is_srg = false;
    SrgParams params;
    int witness_u = -1, witness_v = -1;
    std::string reason;
};

// Exhaustive pair scan: constant degree, constant lambda over adjacent and
// mu over non-adjacent pairs (equivalent to A^2 = kI + lambda A + mu(J-I-A)).
// On failure the first violating pair in canonical order is reported.
SrgCheckResult srg_check(const Graph& g);

// graph6 byte format (printable bytes 63..126, upper triangle column-major).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

}  // namespace qsrg
