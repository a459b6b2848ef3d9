#include "qsrg/iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qsrg/cliques.hpp"

namespace qsrg {

bool is_edge_preserving(const Graph& g1, const Graph& g2, const std::vector<int>& perm) {
    if (g1.v != g2.v || static_cast<int>(perm.size()) != g1.v) return false;
    std::vector<char> hit(g1.v, 0);
    for (int p : perm) {
        if (p < 0 || p >= g1.v || hit[p]) return false;
        hit[p] = 1;
    }
    for (int i = 0; i < g1.v; ++i)
        for (int j = i + 1; j < g1.v; ++j)
            if (g1.adjacent(i, j) != g2.adjacent(perm[i], perm[j])) return false;
    return true;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& h) {
    std::vector<int> out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = f[h[i]];
    return out;
}

namespace {

struct BudgetExceeded {};

std::vector<long> cliques_per_vertex(const Graph& g,
                                     const std::vector<std::vector<int>>& cliques) {
    std::vector<long> counts(g.v, 0);
    for (const auto& c : cliques)
        for (int u : c) counts[u]++;
    return counts;
}

// Backtracking matcher over a pair of coloured graphs. Colours are kept
// aligned between the two sides: after every refinement round the colour
// classes have equal sizes on both sides or the branch dies.
struct IsoEngine {
    const Graph& ga;
    const Graph& gb;
    long budget;
    long nodes = 0;

    std::vector<int> ca, cb;
    int ncolors = 0;

    IsoEngine(const Graph& a, const Graph& b, const std::vector<long>& seed_a,
              const std::vector<long>& seed_b, long node_budget)
        : ga(a), gb(b), budget(node_budget) {
        // Initial colours: joint rank of (degree, seed invariant).
        std::vector<std::pair<long, long>> keys;
        keys.reserve(2 * a.v);
        for (int u = 0; u < a.v; ++u) keys.push_back({a.degree(u), seed_a[u]});
        for (int u = 0; u < b.v; ++u) keys.push_back({b.degree(u), seed_b[u]});
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        auto rank = [&](std::pair<long, long> k) {
            return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
        };
        ca.resize(a.v);
        cb.resize(b.v);
        for (int u = 0; u < a.v; ++u) ca[u] = rank({a.degree(u), seed_a[u]});
        for (int u = 0; u < b.v; ++u) cb[u] = rank({b.degree(u), seed_b[u]});
        ncolors = static_cast<int>(keys.size());
    }

    using Sig = std::vector<int>;

    static void build_sigs(const Graph& g, const std::vector<int>& col, int ncol,
                           std::vector<std::pair<Sig, int>>& out) {
        std::vector<int> cnt(ncol, 0), touched;
        out.resize(g.v);
        for (int u = 0; u < g.v; ++u) {
            touched.clear();
            g.adj[u].for_each([&](int nb) {
                if (cnt[col[nb]]++ == 0) touched.push_back(col[nb]);
            });
            std::sort(touched.begin(), touched.end());
            Sig s;
            s.reserve(1 + 2 * touched.size());
            s.push_back(col[u]);
            for (int c : touched) {
                s.push_back(c);
                s.push_back(cnt[c]);
                cnt[c] = 0;
            }
            out[u] = {std::move(s), u};
        }
    }

    // Equitable refinement of both colourings in lockstep. False when the
    // colour class sizes diverge (no isomorphism extends this state).
    bool refine(std::vector<int>& xa, std::vector<int>& xb, int& ncol) {
        while (true) {
            std::vector<std::pair<Sig, int>> sa, sb;
            build_sigs(ga, xa, ncol, sa);
            build_sigs(gb, xb, ncol, sb);
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());

            int next = 0;
            std::size_t ia = 0, ib = 0;
            while (ia < sa.size() || ib < sb.size()) {
                if (ia == sa.size() || ib == sb.size()) return false;
                if (sa[ia].first != sb[ib].first) return false;
                const Sig& cur = sa[ia].first;
                std::size_t na = 0, nb = 0;
                while (ia < sa.size() && sa[ia].first == cur) xa[sa[ia++].second] = next, ++na;
                while (ib < sb.size() && sb[ib].first == cur) xb[sb[ib++].second] = next, ++nb;
                if (na != nb) return false;
                ++next;
            }
            if (next == ncol) return true;
            ncol = next;
        }
    }

    // First smallest non-singleton colour class; -1 when discrete.
    int target_cell(const std::vector<int>& col, int ncol) const {
        std::vector<int> size(ncol, 0);
        for (int c : col) size[c]++;
        int best = -1;
        for (int c = 0; c < ncol; ++c)
            if (size[c] >= 2 && (best == -1 || size[c] < size[best])) best = c;
        return best;
    }

    std::optional<std::vector<int>> extract(const std::vector<int>& xa,
                                            const std::vector<int>& xb) const {
        std::vector<int> where(ga.v, -1), perm(ga.v, -1);
        for (int u = 0; u < gb.v; ++u) where[xb[u]] = u;
        for (int u = 0; u < ga.v; ++u) perm[u] = where[xa[u]];
        if (is_edge_preserving(ga, gb, perm)) return perm;
        return std::nullopt;
    }

    std::optional<std::vector<int>> dfs(std::vector<int> xa, std::vector<int> xb, int ncol) {
        if (++nodes > budget) throw BudgetExceeded{};
        if (!refine(xa, xb, ncol)) return std::nullopt;
        if (ncol == ga.v) return extract(xa, xb);

        const int cell = target_cell(xa, ncol);
        int va = -1;
        for (int u = 0; u < ga.v; ++u)
            if (xa[u] == cell) {
                va = u;
                break;
            }
        for (int wb = 0; wb < gb.v; ++wb) {
            if (xb[wb] != cell) continue;
            std::vector<int> ya = xa, yb = xb;
            ya[va] = ncol;
            yb[wb] = ncol;
            if (auto res = dfs(std::move(ya), std::move(yb), ncol + 1)) return res;
        }
        return std::nullopt;
    }

    // Search with a forced prefix of vertex pairings.
    std::optional<std::vector<int>> search(const std::vector<std::pair<int, int>>& forced) {
        std::vector<int> xa = ca, xb = cb;
        int ncol = ncolors;
        for (auto [a, b] : forced) {
            xa[a] = ncol;
            xb[b] = ncol;
            ++ncol;
        }
        return dfs(std::move(xa), std::move(xb), ncol);
    }
};

struct ChainLevel {
    int base = -1;
    std::vector<int> orbit;                     // includes base, ascending discovery
    std::vector<std::vector<int>> transversal;  // per orbit point, maps base -> point
};

struct Chain {
    std::vector<ChainLevel> levels;
    BigInt order = 1;
    std::vector<std::vector<int>> generators;  // non-identity transversals
};

std::vector<int> identity_perm(int v) {
    std::vector<int> p(v);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Stabilizer chain via individualization-refinement. At each level the
// candidates for the orbit of the base point are the members of its colour
// class; Schreier-style closure under the transversals found so far keeps
// the number of backtracking searches small.
Chain build_chain(const Graph& g, IsoEngine& eng) {
    Chain chain;
    std::vector<std::pair<int, int>> prefix;
    std::vector<int> col = eng.ca;
    int ncol = eng.ncolors;
    {
        std::vector<int> col_b = col;
        if (!eng.refine(col, col_b, ncol))
            throw std::logic_error("build_chain: self-refinement failed");
    }

    while (ncol < g.v) {
        const int cell = eng.target_cell(col, ncol);
        int base = -1;
        std::vector<int> members;
        for (int u = 0; u < g.v; ++u)
            if (col[u] == cell) {
                if (base < 0) base = u;
                members.push_back(u);
            }

        ChainLevel lv;
        lv.base = base;
        lv.orbit.push_back(base);
        lv.transversal.push_back(identity_perm(g.v));

        std::vector<char> in_orbit(g.v, 0);
        in_orbit[base] = 1;
        // Schreier-style closure: apply every known transversal to every
        // known orbit point; both lists grow while we scan (by index).
        auto close_orbit = [&] {
            for (std::size_t i = 0; i < lv.orbit.size(); ++i)
                for (std::size_t t = 0; t < lv.transversal.size(); ++t) {
                    const int img = lv.transversal[t][lv.orbit[i]];
                    if (!in_orbit[img]) {
                        in_orbit[img] = 1;
                        lv.orbit.push_back(img);
                        lv.transversal.push_back(compose(lv.transversal[t], lv.transversal[i]));
                    }
                }
        };

        for (int w : members) {
            if (in_orbit[w]) continue;
            auto forced = prefix;
            forced.push_back({base, w});
            if (auto perm = eng.search(forced)) {
                if (!is_edge_preserving(g, g, *perm))
                    throw std::logic_error("build_chain: search returned a bad permutation");
                lv.orbit.push_back(w);
                lv.transversal.push_back(*perm);
                in_orbit[w] = 1;
                chain.generators.push_back(*perm);
                close_orbit();
            }
        }

        chain.order *= static_cast<long>(lv.orbit.size());
        chain.levels.push_back(std::move(lv));

        prefix.push_back({base, base});
        col[base] = ncol;
        ++ncol;
        std::vector<int> col_b = col;
        if (!eng.refine(col, col_b, ncol))
            throw std::logic_error("build_chain: self-refinement failed");
    }
    return chain;
}

}  // namespace

Fingerprint fingerprint(const Graph& g, int jobs) {
    Fingerprint fp;
    if (g.v >= 2) {
        const SrgCheckResult sc = srg_check(g);
        fp.is_srg = sc.is_srg;
        if (sc.is_srg) fp.srg = sc.params;
    }
    const auto cliques = maximal_cliques(g, jobs);
    fp.n_cliques = static_cast<long>(cliques.size());
    for (const auto& c : cliques) fp.clique_size_hist[static_cast<int>(c.size())]++;
    for (long cnt : cliques_per_vertex(g, cliques)) fp.cliques_per_vertex_hist[cnt]++;
    return fp;
}

IsoResult is_isomorphic(const Graph& g1, const Graph& g2, long node_budget) {
    IsoResult res;
    if (g1.v != g2.v || g1.edge_count() != g2.edge_count()) return res;
    if (g1.v == 0) {
        res.isomorphic = true;
        return res;
    }

    const auto mc1 = maximal_cliques(g1);
    const auto mc2 = maximal_cliques(g2);
    if (mc1.size() != mc2.size()) return res;
    auto seeds1 = cliques_per_vertex(g1, mc1);
    auto seeds2 = cliques_per_vertex(g2, mc2);
    {
        auto h1 = seeds1, h2 = seeds2;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        if (h1 != h2) return res;
    }

    IsoEngine eng(g1, g2, seeds1, seeds2, node_budget);
    std::optional<std::vector<int>> perm;
    try {
        perm = eng.search({});
    } catch (const BudgetExceeded&) {
        throw std::runtime_error("is_isomorphic: node budget exhausted");
    }
    if (perm && is_edge_preserving(g1, g2, *perm)) {
        res.isomorphic = true;
        res.mapping = std::move(*perm);
    }
    return res;
}

AutReport automorphisms(const Graph& g, int vertex_bound, long node_budget) {
    AutReport rep;
    if (g.v > vertex_bound) return rep;  // aborted
    if (g.v == 0) {
        rep.status = AutReport::Status::ok;
        rep.order = 1;
        rep.orbit_count = 0;
        return rep;
    }

    const auto mc = maximal_cliques(g);
    const auto seeds = cliques_per_vertex(g, mc);
    IsoEngine eng(g, g, seeds, seeds, node_budget);
    Chain chain;
    try {
        chain = build_chain(g, eng);
    } catch (const BudgetExceeded&) {
        return rep;  // aborted
    }

    rep.status = AutReport::Status::ok;
    rep.order = chain.order;
    rep.generators = chain.generators;

    // Orbits of the generated group, by closure.
    std::vector<int> owner(g.v, -1);
    std::vector<std::vector<int>> orbits;
    for (int u = 0; u < g.v; ++u) {
        if (owner[u] >= 0) continue;
        std::vector<int> orb{u};
        owner[u] = static_cast<int>(orbits.size());
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& t : rep.generators) {
                const int img = t[orb[i]];
                if (owner[img] < 0) {
                    owner[img] = owner[u];
                    orb.push_back(img);
                }
            }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    std::sort(orbits.begin(), orbits.end());
    rep.orbits = std::move(orbits);
    rep.orbit_count = static_cast<int>(rep.orbits.size());
    return rep;
}

std::optional<BigInt> setwise_stabilizer_order(const Graph& g, const std::vector<int>& set,
                                               int vertex_bound, long node_budget) {
    if (g.v > vertex_bound) return std::nullopt;
    const auto mc = maximal_cliques(g);
    const auto seeds = cliques_per_vertex(g, mc);
    IsoEngine eng(g, g, seeds, seeds, node_budget);
    Chain chain;
    try {
        chain = build_chain(g, eng);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
    if (chain.order > 100'000'000) return std::nullopt;  // traversal too large

    BitVec mask(g.v);
    for (int u : set) mask.set(u);
    BigInt count = 0;

    // Depth-first traversal of the coset tree, composing transversals.
    std::vector<const ChainLevel*> lvls;
    for (const auto& lv : chain.levels) lvls.push_back(&lv);
    std::vector<int> cur = identity_perm(g.v);

    struct Walker {
        const std::vector<const ChainLevel*>& lvls;
        const BitVec& mask;
        BigInt& count;

        void walk(std::size_t level, const std::vector<int>& acc) {
            if (level == lvls.size()) {
                bool keep = true;
                mask.for_each([&](int u) {
                    if (keep && !mask.test(acc[u])) keep = false;
                });
                if (keep) ++count;
                return;
            }
            const ChainLevel& lv = *lvls[level];
            for (std::size_t i = 0; i < lv.orbit.size(); ++i)
                walk(level + 1, compose(acc, lv.transversal[i]));
        }
    } walker{lvls, mask, count};
    walker.walk(0, cur);
    return count;
}

Graph reconstruct_point_graph(const Graph& g) {
    const auto mc = maximal_cliques(g);
    const auto counts = cliques_per_vertex(g, mc);
    std::vector<long> distinct = counts;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != 3)
        throw std::runtime_error(
            "reconstruct_point_graph: not a recognizable switched graph (expected 3 "
            "clique-count classes, found " +
            std::to_string(distinct.size()) + ")");

    // Highest count = type I, middle = II, lowest = III.
    BitVec t2(g.v), t3(g.v);
    for (int u = 0; u < g.v; ++u) {
        if (counts[u] == distinct[1]) t2.set(u);
        if (counts[u] == distinct[2]) t3.set(u);
    }
    Graph out = g;
    out.labels.clear();
    for (int u = 0; u < g.v; ++u) {
        if (t2.test(u)) out.adj[u] ^= t3;
        if (t3.test(u)) out.adj[u] ^= t2;
    }
    return out;
}

}  // namespace qsrg
