#include "qsrg/switching.hpp"

#include <stdexcept>

#include "qsrg/formulas.hpp"

namespace qsrg {

TypedPartition classify_vertices(const Quadric& q, const Subspace& alpha) {
    if (alpha.dim < 0 || alpha.dim >= q.g)
        throw std::invalid_argument("classify_vertices: need 0 <= dim alpha < g");
    if (!is_singular_subspace(q, alpha))
        throw std::invalid_argument("classify_vertices: alpha not contained in the quadric");

    const int v = q.v();
    TypedPartition part;
    part.family = q.family;
    part.r = q.r;
    part.s = alpha.dim;
    part.alpha = alpha;
    part.type_of.assign(v, VertexType::III);
    part.x_mask = BitVec(v);
    part.y_mask = BitVec(v);

    // Type II <=> off alpha and collinear with every basis point of alpha.
    BitVec ext(v);
    ext.set_all();
    for (ProjPoint b : alpha.basis) ext &= q.coll[q.index(b)];
    for (ProjPoint p : alpha.points) ext.reset(q.index(p));

    for (int i = 0; i < v; ++i) {
        if (alpha.contains(q.points[i]))
            part.type_of[i] = VertexType::I;
        else if (ext.test(i))
            part.type_of[i] = VertexType::II;
    }
    for (int i = 0; i < v; ++i) {
        switch (part.type_of[i]) {
            case VertexType::I:
                part.type1.push_back(i);
                part.y_mask.set(i);
                break;
            case VertexType::II:
                part.type2.push_back(i);
                part.x_mask.set(i);
                break;
            case VertexType::III:
                part.type3.push_back(i);
                part.y_mask.set(i);
                break;
        }
    }
    return part;
}

GmValidation gm_validate(const Graph& g, const TypedPartition& part) {
    if (g.v != static_cast<int>(part.type_of.size()))
        throw std::invalid_argument("gm_validate: partition does not match the graph");

    const CountPrediction pred = predict(part.family, 2, part.r, part.s);
    GmValidation val;
    val.x_size = static_cast<long>(part.type2.size());
    val.expected_x_size = static_cast<long>(pred.x_size);
    val.expected_degree = static_cast<long>(pred.induced_degree);

    if (val.x_size != val.expected_x_size)
        val.violations.push_back({-1, "switching-set size", val.expected_x_size, val.x_size});

    long deg = -1;
    for (int i : part.type2) {
        const long d = g.adj[i].count_and(part.x_mask);
        if (deg == -1) deg = d;
        if (d != val.expected_degree) {
            val.violations.push_back({i, "induced degree", val.expected_degree, d});
            break;
        }
    }
    val.induced_degree = deg;

    const long half = val.x_size / 2;
    for (int i : part.type1) {
        const long d = g.adj[i].count_and(part.x_mask);
        if (d != val.x_size) {
            val.violations.push_back({i, "type I must see all of X", val.x_size, d});
            break;
        }
    }
    for (int i : part.type3) {
        const long d = g.adj[i].count_and(part.x_mask);
        if (d != half) {
            val.violations.push_back({i, "type III must see half of X", half, d});
            break;
        }
    }
    val.ok = val.violations.empty();
    return val;
}

Graph gm_switch(const Graph& g, const TypedPartition& part) {
    const GmValidation val = gm_validate(g, part);
    if (!val.ok)
        throw std::runtime_error("gm_switch: partition fails the switching conditions (" +
                                 val.violations.front().what + ")");
    Graph out = g;
    // Complement each type-III row within X; mirror on the X side.
    for (int i : part.type3) out.adj[i] ^= part.x_mask;
    BitVec t3(g.v);
    for (int i : part.type3) t3.set(i);
    for (int i : part.type2) out.adj[i] ^= t3;
    return out;
}

Graph build_direct(const Quadric& q, const TypedPartition& part) {
    const int v = q.v();
    Graph out = make_graph(v);
    out.labels = q.points;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            const bool collinear = q.contains(q.points[i] ^ q.points[j]);
            const bool swapped =
                (part.type_of[i] == VertexType::II && part.type_of[j] == VertexType::III) ||
                (part.type_of[i] == VertexType::III && part.type_of[j] == VertexType::II);
            if (swapped ? !collinear : collinear) add_edge(out, i, j);
        }
    return out;
}

std::vector<int> switching_involution(const Quadric& q, ProjPoint p) {
    if (!q.contains(p)) throw std::invalid_argument("switching_involution: p not on the quadric");
    const TypedPartition part = classify_vertices(q, span({p}));
    std::vector<int> perm(q.v());
    for (int i = 0; i < q.v(); ++i) perm[i] = i;
    for (int i : part.type2) perm[i] = q.index(p ^ q.points[i]);
    for (int i : part.type2)
        if (perm[perm[i]] != i) throw std::logic_error("switching_involution: not an involution");
    return perm;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph out = make_graph(g.v);
    for (int i = 0; i < g.v; ++i)
        g.adj[i].for_each([&](int j) {
            if (i < j) add_edge(out, perm[i], perm[j]);
        });
    return out;
}

}  // namespace qsrg
