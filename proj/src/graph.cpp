#include "qsrg/graph.hpp"

#include <stdexcept>

namespace qsrg {

long Graph::edge_count() const {
    long total = 0;
    for (const auto& row : adj) total += row.count();
    return total / 2;
}

Graph make_graph(int v) {
    Graph g;
    g.v = v;
    g.adj.assign(v, BitVec(v));
    return g;
}

void add_edge(Graph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("add_edge: loops not allowed");
    g.adj[i].set(j);
    g.adj[j].set(i);
}

bool same_edges(const Graph& a, const Graph& b) {
    return a.v == b.v && a.adj == b.adj;
}

Graph point_graph(const Quadric& q) {
    Graph g;
    g.v = q.v();
    g.adj = q.coll;
    g.labels = q.points;
    return g;
}

SrgCheckResult srg_check(const Graph& g) {
    if (g.v < 2) throw std::invalid_argument("srg_check: need at least 2 vertices");
    SrgCheckResult res;
    res.params.v = g.v;
    res.params.k = g.degree(0);
    for (int i = 1; i < g.v; ++i)
        if (g.degree(i) != res.params.k) {
            res.witness_u = 0;
            res.witness_v = i;
            res.reason = "degree not constant";
            return res;
        }
    long lambda = -1, mu = -1;
    for (int i = 0; i < g.v; ++i)
        for (int j = i + 1; j < g.v; ++j) {
            const long common = g.adj[i].count_and(g.adj[j]);
            long& slot = g.adjacent(i, j) ? lambda : mu;
            if (slot == -1) {
                slot = common;
            } else if (slot != common) {
                res.witness_u = i;
                res.witness_v = j;
                res.reason = g.adjacent(i, j) ? "lambda not constant" : "mu not constant";
                return res;
            }
        }
    res.is_srg = true;
    res.params.lambda = lambda < 0 ? 0 : lambda;
    res.params.mu = mu < 0 ? 0 : mu;
    return res;
}

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    unsigned acc = 0;
    int have = 0;
    for (bool b : bits) {
        acc = acc << 1 | unsigned(b);
        if (++have == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            have = 0;
        }
    }
    if (have) out.push_back(static_cast<char>((acc << (6 - have)) + 63));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const long v = g.v;
    if (v > 258047) throw std::invalid_argument("encode_graph6: graph too large");
    std::string out;
    if (v <= 62) {
        out.push_back(static_cast<char>(v + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>((v >> 12 & 63) + 63));
        out.push_back(static_cast<char>((v >> 6 & 63) + 63));
        out.push_back(static_cast<char>((v & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(v) * (v - 1) / 2);
    for (int j = 1; j < v; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    append_bits(out, bits);
    return out;
}

Graph decode_graph6(std::string_view s) {
    for (char c : s)
        if (c < 63 || c > 126) throw std::runtime_error("graph6: byte outside printable range");
    std::size_t pos = 0;
    long v = 0;
    if (s.empty()) throw std::runtime_error("graph6: empty input");
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126) throw std::runtime_error("graph6: 8-byte sizes not supported");
        if (s.size() < 4) throw std::runtime_error("graph6: truncated header");
        v = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    } else {
        v = s[0] - 63;
        pos = 1;
    }
    const long nbits = v * (v - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != nbytes) throw std::runtime_error("graph6: body length mismatch");

    Graph g = make_graph(static_cast<int>(v));
    long bit = 0;
    for (int j = 1; j < v; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned chunk = static_cast<unsigned>(s[pos + bit / 6] - 63);
            if (chunk >> (5 - bit % 6) & 1u) add_edge(g, i, j);
        }
    for (long t = nbits; t < static_cast<long>(nbytes) * 6; ++t) {
        const unsigned chunk = static_cast<unsigned>(s[pos + t / 6] - 63);
        if (chunk >> (5 - t % 6) & 1u) throw std::runtime_error("graph6: trailing bits nonzero");
    }
    return g;
}

}  // namespace qsrg
