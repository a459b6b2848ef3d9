#pragma once

#include <string>
#include <vector>

#include "qsrg/graph.hpp"
#include "qsrg/quadric.hpp"

namespace qsrg {

// Vertex types relative to a fixed singular s-space alpha:
//   I   - on alpha,
//   II  - off alpha but spanning a singular (s+1)-space with it,
//   III - the rest.
enum class VertexType : unsigned char { I, II, III };

struct TypedPartition {
    Family family{};
    int r = 0;
    int s = 0;
    Subspace alpha;
    std::vector<VertexType> type_of;
    BitVec x_mask;  // type II  (the switching set)
    BitVec y_mask;  // types I and III
    std::vector<int> type1, type2, type3;

    int type_count(VertexType t) const {
        switch (t) {
            case VertexType::I: return static_cast<int>(type1.size());
            case VertexType::II: return static_cast<int>(type2.size());
            case VertexType::III: return static_cast<int>(type3.size());
        }
        return 0;
    }
};

// Labels every quadric point I/II/III with respect to alpha.
// Requires alpha contained in the quadric with 0 <= dim alpha < g.
TypedPartition classify_vertices(const Quadric& q, const Subspace& alpha);

struct GmViolation {
    int vertex;
    std::string what;
    long expected, actual;
};

struct GmValidation {
    bool ok = false;
    long x_size = 0;
    long expected_x_size = 0;
    long induced_degree = -1;       // -1 when not regular
    long expected_degree = 0;
    std::vector<GmViolation> violations;
};

// Checks the switching conditions on the point-graph: X_s induces a regular
// subgraph of the predicted degree, type-I vertices see all of X_s, type-III
// vertices see exactly half.
GmValidation gm_validate(const Graph& g, const TypedPartition& part);

// The switch: every vertex with |X_s|/2 neighbours in X_s has that
// neighbourhood complemented within X_s. Validates first and refuses to run
// on a failing partition. Vertex order (and labels) are preserved.
Graph gm_switch(const Graph& g, const TypedPartition& part);

// Direct edge-rule construction of the switched graph: all pairs keep the
// collinearity rule except II-III pairs, which join exactly when their line
// is a 2-secant. Must agree with gm_switch edge for edge.
Graph build_direct(const Quadric& q, const TypedPartition& part);

// The vertex involution witnessing that the s = 0 switch is isomorphic to
// the point-graph: fixes types I and III, swaps each type-II vertex with the
// third point of its line through p.
std::vector<int> switching_involution(const Quadric& q, ProjPoint p);

// Applies a vertex permutation to a graph: edge {i,j} becomes {perm[i], perm[j]}.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace qsrg
