#include "qsrg/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qsrg {

namespace {

// Branch-and-bound Bron-Kerbosch over neighbour bit rows. Only cliques of
// maximum size survive; inclusion-maximal sets that cannot reach the best
// known size are pruned. `best` may be shared across workers (it only ever
// grows, and a stale low value merely delays pruning).
struct BronKerbosch {
    const Graph& g;
    std::atomic<int>& best;
    std::vector<std::vector<int>> out;  // cliques with size == best at record time
    int out_floor = 0;                  // smallest size currently kept in out
    std::vector<int> r;

    // Pivot on the vertex of P|X with the most neighbours in P.
    int pick_pivot(const BitVec& p, const BitVec& x) const {
        int pivot = -1, pivot_cnt = -1;
        auto consider = [&](int u) {
            const int c = g.adj[u].count_and(p);
            if (c > pivot_cnt) {
                pivot_cnt = c;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        return pivot;
    }

    void record() {
        const int sz = static_cast<int>(r.size());
        int cur = best.load(std::memory_order_relaxed);
        while (sz > cur && !best.compare_exchange_weak(cur, sz)) {
        }
        if (sz < best.load(std::memory_order_relaxed)) return;
        if (sz > out_floor) {
            out.clear();
            out_floor = sz;
        }
        out.push_back(r);
    }

    void expand(BitVec p, BitVec x) {
        if (p.none()) {
            if (x.none()) record();
            return;
        }
        if (static_cast<int>(r.size()) + p.count() < best.load(std::memory_order_relaxed))
            return;
        const int u = pick_pivot(p, x);
        BitVec ext = p;
        ext.and_not(g.adj[u]);
        ext.for_each([&](int vtx) {
            r.push_back(vtx);
            expand(p & g.adj[vtx], x & g.adj[vtx]);
            r.pop_back();
            p.reset(vtx);
            x.set(vtx);
        });
    }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int jobs) {
    std::vector<std::vector<int>> result;
    if (g.v == 0) return result;

    BitVec full(g.v);
    full.set_all();
    std::atomic<int> best{0};

    if (jobs <= 1) {
        BronKerbosch bk{g, best, {}, 0, {}};
        bk.expand(full, BitVec(g.v));
        result = std::move(bk.out);
    } else {
        // Materialize the top-level branches, then fan them out.
        struct Branch {
            int vtx;
            BitVec p, x;
        };
        std::vector<Branch> branches;
        {
            BronKerbosch probe{g, best, {}, 0, {}};
            BitVec p = full, x(g.v);
            const int u = probe.pick_pivot(p, x);
            BitVec ext = p;
            ext.and_not(g.adj[u]);
            ext.for_each([&](int vtx) {
                branches.push_back({vtx, p & g.adj[vtx], x & g.adj[vtx]});
                p.reset(vtx);
                x.set(vtx);
            });
        }
        std::vector<std::vector<std::vector<int>>> partial(branches.size());
        std::vector<std::thread> workers;
        std::size_t next = 0;
        const int nw = std::min<long>(jobs, static_cast<long>(branches.size()));
        std::mutex mtx;
        for (int w = 0; w < nw; ++w)
            workers.emplace_back([&] {
                while (true) {
                    std::size_t mine;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (next >= branches.size()) return;
                        mine = next++;
                    }
                    BronKerbosch bk{g, best, {}, 0, {branches[mine].vtx}};
                    bk.expand(branches[mine].p, branches[mine].x);
                    partial[mine] = std::move(bk.out);
                }
            });
        for (auto& t : workers) t.join();
        // A worker may have kept cliques recorded before `best` settled.
        for (auto& chunk : partial)
            for (auto& c : chunk)
                if (static_cast<int>(c.size()) == best.load()) result.push_back(std::move(c));
    }

    for (auto& c : result) std::sort(c.begin(), c.end());
    std::sort(result.begin(), result.end());
    return result;
}

int max_clique_size(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max<int>(best, c.size());
    return best;
}

CliqueReport classify_clique(const Quadric& q, const TypedPartition& part, const Graph& gs,
                             const std::vector<int>& clique) {
    // Maximality: pairwise adjacent, no common neighbour.
    BitVec common(gs.v);
    common.set_all();
    for (int u : clique) {
        for (int w : clique)
            if (u != w && !gs.adjacent(u, w))
                throw std::invalid_argument("classify_clique: vertex set is not a clique");
        common &= gs.adj[u];
    }
    if (common.any()) throw std::invalid_argument("classify_clique: clique is not maximal");

    CliqueReport rep;
    rep.vertices = clique;
    std::sort(rep.vertices.begin(), rep.vertices.end());
    rep.size = static_cast<int>(clique.size());
    for (int u : clique) rep.composition[static_cast<int>(part.type_of[u])]++;

    const int g_idx = q.g;
    const long expect_size = (1L << (g_idx + 1)) - 1;
    if (rep.size != expect_size)
        throw std::logic_error("classify_clique: maximal clique is not a g-clique");

    const long s = part.s;
    if (rep.composition[2] == 0) {
        // Class A: exactly the points of a generator through alpha.
        std::vector<ProjPoint> pts;
        for (int u : clique) pts.push_back(q.points[u]);
        Subspace sigma = span(pts);
        if (sigma.dim != g_idx || !is_singular_subspace(q, sigma) ||
            sigma.points.size() != pts.size())
            throw std::logic_error("classify_clique: type-III-free clique is not a generator");
        for (ProjPoint p : part.alpha.points)
            if (!sigma.contains(p))
                throw std::logic_error("classify_clique: Class A generator misses alpha");
        if (rep.composition[0] != (1 << (s + 1)) - 1 ||
            rep.composition[1] != (1L << (g_idx + 1)) - (1L << (s + 1)))
            throw std::logic_error("classify_clique: Class A composition mismatch");
        rep.clique_class = CliqueClass::A;
        rep.witness_sigma = std::move(sigma);
        return rep;
    }

    // Class B: sigma = <alpha, type-II members>, pi = <type-I, type-III members>.
    std::vector<ProjPoint> sig_pts = part.alpha.points;
    std::vector<ProjPoint> pi_pts;
    for (int u : clique) {
        if (part.type_of[u] == VertexType::II)
            sig_pts.push_back(q.points[u]);
        else
            pi_pts.push_back(q.points[u]);
    }
    Subspace sigma = span(sig_pts);
    Subspace pi = span(pi_pts);
    const Subspace meet = intersection(sigma, pi);
    if (sigma.dim != g_idx || pi.dim != g_idx || !is_singular_subspace(q, sigma) ||
        !is_singular_subspace(q, pi) || meet.dim != g_idx - 1)
        throw std::logic_error("classify_clique: Class B witnesses do not form a generator pair");
    if (rep.composition[0] != (1 << s) - 1 ||
        rep.composition[1] != (1L << g_idx) - (1L << s) ||
        rep.composition[2] != (1L << g_idx))
        throw std::logic_error("classify_clique: Class B composition mismatch");
    rep.clique_class = CliqueClass::B;
    rep.witness_sigma = std::move(sigma);
    rep.witness_pi = std::move(pi);
    return rep;
}

CensusReport clique_census(const Quadric& q, const TypedPartition& part, const Graph& g,
                           bool switched, int jobs) {
    const auto cliques = maximal_cliques(g, jobs);
    CensusReport rep;
    rep.switched = switched;
    rep.total = static_cast<long>(cliques.size());
    rep.per_vertex.assign(g.v, 0);
    for (const auto& c : cliques) {
        rep.max_size = std::max<int>(rep.max_size, c.size());
        for (int u : c) rep.per_vertex[u]++;
    }

    if (switched) {
        for (const auto& c : cliques) {
            const CliqueReport cr = classify_clique(q, part, g, c);
            (cr.clique_class == CliqueClass::A ? rep.n_a : rep.n_b)++;
        }
    }

    // Per-type counts must be constant within each type.
    rep.through_type_constant = true;
    std::array<long, 3> seen{-1, -1, -1};
    for (int u = 0; u < g.v; ++u) {
        long& slot = seen[static_cast<int>(part.type_of[u])];
        if (slot == -1)
            slot = rep.per_vertex[u];
        else if (slot != rep.per_vertex[u])
            rep.through_type_constant = false;
    }
    for (int t = 0; t < 3; ++t) rep.through_type[t] = seen[t];

    const CountPrediction pred = predict(part.family, 2, part.r, part.s);
    rep.expected_size = static_cast<int>(pred.clique_size);
    if (switched) {
        rep.expected_total = static_cast<long>(pred.total_cliques);
        rep.expected_n_a = static_cast<long>(pred.n_a);
        rep.expected_n_b = static_cast<long>(pred.n_b);
        for (int t = 0; t < 3; ++t)
            rep.expected_through_type[t] = static_cast<long>(pred.cliques_through[t]);
    } else {
        rep.expected_total = static_cast<long>(pred.gamma_cliques);
        rep.expected_n_a = rep.n_a;
        rep.expected_n_b = rep.n_b;
        for (int t = 0; t < 3; ++t)
            rep.expected_through_type[t] = static_cast<long>(pred.gamma_cliques_through_point);
    }

    rep.match = rep.through_type_constant && rep.total == rep.expected_total &&
                rep.max_size == rep.expected_size && rep.n_a == rep.expected_n_a &&
                rep.n_b == rep.expected_n_b;
    for (int t = 0; t < 3; ++t)
        if (part.type_count(static_cast<VertexType>(t)) > 0 &&
            rep.through_type[t] != rep.expected_through_type[t])
            rep.match = false;
    return rep;
}

namespace {

struct ExactCover {
    const std::vector<BitVec>& masks;
    const std::vector<std::vector<int>>& through;  // clique ids through each vertex
    int v;
    long budget;
    long nodes = 0;
    BitVec covered;
    std::vector<int> chosen;
    bool exhausted = false;

    bool solve() {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int pick = -1;
        long best = -1;
        for (int u = 0; u < v; ++u) {
            if (covered.test(u)) continue;
            long avail = 0;
            for (int c : through[u])
                if (!masks[c].intersects(covered)) ++avail;
            if (best == -1 || avail < best) {
                best = avail;
                pick = u;
            }
            if (avail == 0) break;
        }
        if (pick == -1) return true;  // everything covered
        if (best == 0) return false;
        for (int c : through[pick]) {
            if (masks[c].intersects(covered)) continue;
            covered |= masks[c];
            chosen.push_back(c);
            if (solve()) return true;
            chosen.pop_back();
            covered.and_not(masks[c]);
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

PartitionSearch clique_partition_exists(const Graph& g, long node_budget) {
    PartitionSearch res;
    const auto cliques = maximal_cliques(g);
    if (g.v == 0) {
        res.status = PartitionSearch::Status::found;
        return res;
    }

    // Divisibility shortcut when all maximal cliques share one size.
    bool uniform = true;
    for (const auto& c : cliques)
        if (c.size() != cliques.front().size()) uniform = false;
    if (uniform && g.v % static_cast<int>(cliques.front().size()) != 0) {
        res.status = PartitionSearch::Status::none;
        return res;
    }

    std::vector<BitVec> masks;
    masks.reserve(cliques.size());
    for (const auto& c : cliques) {
        BitVec m(g.v);
        for (int u : c) m.set(u);
        masks.push_back(std::move(m));
    }
    std::vector<std::vector<int>> through(g.v);
    for (std::size_t ci = 0; ci < cliques.size(); ++ci)
        for (int u : cliques[ci]) through[u].push_back(static_cast<int>(ci));

    ExactCover ec{masks, through, g.v, node_budget, 0, BitVec(g.v), {}, false};
    const bool found = ec.solve();
    res.nodes = ec.nodes;
    if (found) {
        res.status = PartitionSearch::Status::found;
        for (int c : ec.chosen) res.witness.push_back(cliques[c]);
    } else {
        res.status = ec.exhausted ? PartitionSearch::Status::undecided
                                  : PartitionSearch::Status::none;
    }
    return res;
}

}  // namespace qsrg
