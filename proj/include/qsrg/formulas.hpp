#pragma once

#include <cstdint>

#include "qsrg/family.hpp"
#include "qsrg/gf2.hpp"

namespace qsrg {

struct SrgParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;

    // k(k - lambda - 1) = (v - k - 1) mu
    bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
    bool operator==(const SrgParams&) const = default;
};

// Every closed-form count attached to one admissible (family, q, r, s).
// The switching-set quantities are evaluated at the given q; clique counts
// and SRG parameters are the q = 2 values (the graphs only exist there).
struct CountPrediction {
    Family family{};
    long q = 0, r = 0, s = 0, g = 0;

    BigInt quadric_points;   // points of the quadric (general q)
    BigInt x_size;           // switching-set size |X_s| (general q)
    BigInt induced_degree;   // regular degree of the subgraph induced on X_s
    BigInt y_count;          // X_s-neighbours of each vertex off the base structure
    bool y_derived = false;  // true when y_count is the forced |X_s|/2 value (H/P)
    BigInt ext_spaces;       // (s+1)-spaces through the base inside the quadric
    BigInt pencil_lines;     // lines through a fixed point of an (s+1)-space

    // q = 2 graph structure
    BigInt type_size[3];         // vertices of type I / II / III
    long clique_size = 0;        // 2^(g+1) - 1
    BigInt total_cliques;        // maximal cliques of the switched graph
    BigInt n_a, n_b;             // Class A / Class B counts
    BigInt cliques_through[3];   // maximal cliques through a vertex, per type
    BigInt gamma_cliques;        // maximal cliques of the unswitched point-graph
    BigInt gamma_cliques_through_point;
    SrgParams srg;

    long graphs_constructed = 0;  // g switched graphs (s = 0..g-1)
    long graphs_new = 0;          // g-1 of them are new
};

// Projective index of the family at parameter r.
long projective_index(Family f, long r);

// Admissibility: elliptic/parabolic need r >= 2, hyperbolic r >= 1, 0 <= s < g.
CountPrediction predict(Family f, long q, long r, long s);

// The four SRG parameters of the point-graph (and all its switches).
SrgParams srg_params(Family f, long r);

BigInt quadric_point_count(Family f, long q, long r);

// Number of subspaces of projective dimension s contained in the quadric.
BigInt singular_subspace_count(Family f, long q, long r, long s);

}  // namespace qsrg
