#include "qsrg/formulas.hpp"

#include <stdexcept>

namespace qsrg {

namespace {

using boost::multiprecision::pow;

BigInt qp(long q, long e) { return pow(BigInt(q), static_cast<unsigned>(e)); }

BigInt p2(long e) { return qp(2, e); }

// prod_{i=a}^{b} (2^i + 1), empty product (b < a) = 1
BigInt prod2(long a, long b) {
    BigInt p = 1;
    for (long i = a; i <= b; ++i) p *= p2(i) + 1;
    return p;
}

long min_r(Family f) { return f == Family::hyperbolic ? 1 : 2; }

void check_admissible(Family f, long q, long r, long s) {
    if (q < 2) throw std::invalid_argument("predict: q must be at least 2");
    if (r < min_r(f)) throw std::invalid_argument("predict: r below the family bound");
    const long g = projective_index(f, r);
    if (s < 0 || s >= g) throw std::invalid_argument("predict: need 0 <= s < g");
}

}  // namespace

long projective_index(Family f, long r) { return f == Family::hyperbolic ? r : r - 1; }

BigInt quadric_point_count(Family f, long q, long r) {
    switch (f) {
        case Family::elliptic: return (qp(q, r + 1) + 1) * (qp(q, r) - 1) / (q - 1);
        case Family::hyperbolic: return (qp(q, r) + 1) * (qp(q, r + 1) - 1) / (q - 1);
        case Family::parabolic: return (qp(q, 2 * r) - 1) / (q - 1);
    }
    return 0;
}

BigInt singular_subspace_count(Family f, long q, long r, long s) {
    if (s < 0) return 1;
    const long g = projective_index(f, r);
    if (s > g) return 0;
    // Gaussian count of (s+1)-dim totally singular subspaces of the polar space.
    BigInt extra = 1;
    switch (f) {
        case Family::elliptic:
            for (long i = 0; i <= s; ++i) extra *= qp(q, r + 1 - i) + 1;
            return gaussian_binomial(static_cast<int>(r), static_cast<int>(s + 1), q) * extra;
        case Family::hyperbolic:
            for (long i = 0; i <= s; ++i) extra *= qp(q, r - i) + 1;
            return gaussian_binomial(static_cast<int>(r + 1), static_cast<int>(s + 1), q) * extra;
        case Family::parabolic:
            for (long i = 0; i <= s; ++i) extra *= qp(q, r - i) + 1;
            return gaussian_binomial(static_cast<int>(r), static_cast<int>(s + 1), q) * extra;
    }
    return 0;
}

SrgParams srg_params(Family f, long r) {
    if (r < min_r(f)) throw std::invalid_argument("srg_params: r below the family bound");
    if (r > 30) throw std::invalid_argument("srg_params: r too large for 64-bit parameters");
    const auto e = [](long x) { return std::int64_t{1} << x; };
    SrgParams p;
    switch (f) {
        case Family::elliptic:
            p = {e(2 * r + 1) - e(r) - 1, e(2 * r) - e(r) - 2, e(2 * r - 1) - e(r) - 3,
                 e(2 * r - 1) - e(r - 1) - 1};
            break;
        case Family::hyperbolic:
            p = {e(2 * r + 1) + e(r) - 1, e(2 * r) + e(r) - 2, e(2 * r - 1) + e(r) - 3,
                 e(2 * r - 1) + e(r - 1) - 1};
            break;
        case Family::parabolic:
            p = {e(2 * r) - 1, e(2 * r - 1) - 2, e(2 * r - 2) - 3, e(2 * r - 2) - 1};
            break;
    }
    return p;
}

CountPrediction predict(Family f, long q, long r, long s) {
    check_admissible(f, q, r, s);

    CountPrediction c;
    c.family = f;
    c.q = q;
    c.r = r;
    c.s = s;
    c.g = projective_index(f, r);

    c.quadric_points = quadric_point_count(f, q, r);

    switch (f) {
        case Family::elliptic:
            c.x_size = qp(q, s + 1) * (qp(q, r - s) + 1) * (qp(q, r - s - 1) - 1) / (q - 1);
            break;
        case Family::hyperbolic:
            c.x_size = qp(q, s + 1) * (qp(q, r - s - 1) + 1) * (qp(q, r - s) - 1) / (q - 1);
            break;
        case Family::parabolic:
            c.x_size = qp(q, s + 1) * (qp(q, r - s - 1) + 1) * (qp(q, r - s - 1) - 1) / (q - 1);
            break;
    }

    // Degree of the subgraph induced on X_s. The second term counts lines in
    // singular (s+2)-spaces over the base; its "-1" factor vanishes at
    // s = g-1, and in that case the companion "+1" factor is not evaluated
    // (for hyperbolic it would have a negative exponent).
    {
        long e_plus = 0, e_minus = 0;
        switch (f) {
            case Family::elliptic: e_plus = r - s - 1, e_minus = r - s - 2; break;
            case Family::hyperbolic: e_plus = r - s - 2, e_minus = r - s - 1; break;
            case Family::parabolic: e_plus = r - s - 2, e_minus = r - s - 2; break;
        }
        BigInt second = 0;
        if (e_minus > 0) second = qp(q, s + 2) * (qp(q, e_plus) + 1) * (qp(q, e_minus) - 1) / (q - 1);
        c.induced_degree = qp(q, s + 1) - 1 + second;
    }

    if (f == Family::elliptic) {
        c.y_count = qp(q, s) * (qp(q, r - s) + 1) * (qp(q, r - s - 1) - 1) / (q - 1);
        c.y_derived = false;
    } else {
        c.y_count = c.x_size / 2;
        c.y_derived = true;
    }

    c.ext_spaces = c.x_size / qp(q, s + 1);
    c.pencil_lines = (qp(q, s + 1) - 1) / (q - 1);

    // q = 2 structure below.
    c.type_size[0] = p2(s + 1) - 1;
    switch (f) {
        case Family::elliptic:
            c.type_size[1] = p2(s + 1) * (p2(r - s) + 1) * (p2(r - s - 1) - 1);
            break;
        case Family::hyperbolic:
            c.type_size[1] = p2(s + 1) * (p2(r - s - 1) + 1) * (p2(r - s) - 1);
            break;
        case Family::parabolic:
            c.type_size[1] = p2(s + 1) * (p2(r - s - 1) + 1) * (p2(r - s - 1) - 1);
            break;
    }
    c.type_size[2] = quadric_point_count(f, 2, r) - c.type_size[0] - c.type_size[1];

    c.clique_size = (1L << (c.g + 1)) - 1;

    const bool last = (s == c.g - 1);
    switch (f) {
        case Family::elliptic:
            c.gamma_cliques = prod2(2, r + 1);
            c.gamma_cliques_through_point = prod2(2, r);
            c.n_a = prod2(2, r - s);
            c.total_cliques = c.n_a * (p2(r + 2) - p2(r - s + 1) + 1);
            if (last) {
                c.cliques_through[0] = 5 * (p2(r + 1) - 7);
                c.cliques_through[1] = p2(r + 1) - 3;
                c.cliques_through[2] = 5;
            } else {
                c.cliques_through[0] = prod2(2, r - s) * (p2(r + 1) - p2(r - s + 1) + 1);
                c.cliques_through[1] = prod2(2, r - s - 1) * (p2(r + 1) - p2(r - s) + 1);
                c.cliques_through[2] = prod2(2, r - s);
            }
            break;
        case Family::hyperbolic:
            c.gamma_cliques = prod2(0, r);
            c.gamma_cliques_through_point = prod2(0, r - 1);
            c.n_a = prod2(0, r - s - 1);
            c.total_cliques = c.n_a * (p2(r + 1) - p2(r - s) + 1);
            if (last) {
                c.cliques_through[0] = 2 * (p2(r) - 1);
                c.cliques_through[1] = p2(r);
                c.cliques_through[2] = 2;
            } else {
                c.cliques_through[0] = prod2(0, r - s - 1) * (p2(r) - p2(r - s) + 1);
                c.cliques_through[1] = prod2(0, r - s - 2) * (p2(r) - p2(r - s - 1) + 1);
                c.cliques_through[2] = prod2(0, r - s - 1);
            }
            break;
        case Family::parabolic:
            c.gamma_cliques = prod2(1, r);
            c.gamma_cliques_through_point = prod2(1, r - 1);
            c.n_a = prod2(1, r - s - 1);
            c.total_cliques = c.n_a * (p2(r + 1) - p2(r - s) + 1);
            if (last) {
                c.cliques_through[0] = 3 * (p2(r) - 3);
                c.cliques_through[1] = p2(r) - 1;
                c.cliques_through[2] = 3;
            } else {
                c.cliques_through[0] = prod2(1, r - s - 1) * (p2(r) - p2(r - s) + 1);
                c.cliques_through[1] = prod2(1, r - s - 2) * (p2(r) - p2(r - s - 1) + 1);
                c.cliques_through[2] = prod2(1, r - s - 1);
            }
            break;
    }
    c.n_b = c.total_cliques - c.n_a;

    c.srg = srg_params(f, r);
    c.graphs_constructed = c.g;
    c.graphs_new = c.g - 1;
    return c;
}

}  // namespace qsrg
