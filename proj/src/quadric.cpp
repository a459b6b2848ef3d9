#include "qsrg/quadric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qsrg/formulas.hpp"

namespace qsrg {

bool QuadraticForm::eval(ProjPoint x) const {
    unsigned acc = 0;
    std::uint32_t rem = x;
    while (rem) {
        const int i = std::countr_zero(rem);
        rem &= rem - 1;
        acc ^= static_cast<unsigned>(std::popcount(coeff[i] & x));
    }
    return acc & 1u;
}

bool QuadraticForm::bilinear(ProjPoint x, ProjPoint y) const {
    return eval(x ^ y) ^ eval(x) ^ eval(y);
}

Quadric standard_quadric(Family f, int n) {
    const bool odd = n & 1;
    if (f == Family::parabolic && odd)
        throw std::invalid_argument("parabolic quadrics need even n");
    if (f != Family::parabolic && !odd)
        throw std::invalid_argument("elliptic/hyperbolic quadrics need odd n");
    const int min_n = f == Family::hyperbolic ? 3 : (f == Family::parabolic ? 4 : 5);
    if (n < min_n || n > kMaxProjDim)
        throw std::invalid_argument("n out of range for this family");

    Quadric q;
    q.family = f;
    q.n = n;
    q.r = odd ? (n - 1) / 2 : n / 2;
    q.g = static_cast<int>(projective_index(f, q.r));
    q.form.n = n;

    switch (f) {
        case Family::hyperbolic:
            // x0 x1 + x2 x3 + ... + x_{n-1} x_n
            for (int i = 0; i + 1 <= n; i += 2) q.form.coeff[i] |= 1u << (i + 1);
            break;
        case Family::elliptic:
            // x0^2 + x0 x1 + x1^2 + x2 x3 + ... + x_{n-1} x_n
            q.form.coeff[0] |= 0b11u;
            q.form.coeff[1] |= 0b10u;
            for (int i = 2; i + 1 <= n; i += 2) q.form.coeff[i] |= 1u << (i + 1);
            break;
        case Family::parabolic:
            // x0^2 + x1 x2 + x3 x4 + ... + x_{n-1} x_n
            q.form.coeff[0] |= 1u;
            for (int i = 1; i + 1 <= n; i += 2) q.form.coeff[i] |= 1u << (i + 1);
            break;
    }

    const std::uint32_t space = 1u << (n + 1);
    q.index_of.assign(space, -1);
    for (std::uint32_t x = 1; x < space; ++x) {
        if (!q.form.eval(x)) {
            q.index_of[x] = static_cast<std::int32_t>(q.points.size());
            q.points.push_back(x);
        }
    }

    const BigInt expect = quadric_point_count(f, 2, q.r);
    if (BigInt(q.points.size()) != expect)
        throw std::logic_error("standard_quadric: point count does not match the closed form");

    const int v = q.v();
    q.coll.assign(v, BitVec(v));
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (q.contains(q.points[i] ^ q.points[j])) {
                q.coll[i].set(j);
                q.coll[j].set(i);
            }
    return q;
}

bool is_singular_subspace(const Quadric& q, const Subspace& s) {
    for (ProjPoint p : s.points)
        if (!q.contains(p)) return false;
    return true;
}

namespace {

// Depth-first enumeration of totally singular subspaces, one visit per
// subspace. A (d+1)-space is produced exactly from the pair (S, x) where S
// spans the top d+1 rows of its reduced echelon basis and x is the row with
// the smallest leading bit. cand holds the quadric points collinear with
// every basis row of the current subspace.
struct SingularDfs {
    const Quadric& q;
    int target;
    std::vector<Subspace> out;
    std::vector<ProjPoint> rows;

    bool extension_ok(ProjPoint x) const {
        const int lx = std::bit_width(x) - 1;
        for (ProjPoint r : rows) {
            const int lr = std::bit_width(r) - 1;
            if (x >> lr & 1u) return false;  // x not reduced
            if (lr <= lx) return false;      // leads must decrease
            if (r >> lx & 1u) return false;  // rows not reduced vs x
        }
        return true;
    }

    void dfs(const BitVec& cand, int dim) {
        if (dim == target) {
            out.push_back(subspace_from_rref(rows));
            return;
        }
        cand.for_each([&](int idx) {
            const ProjPoint x = q.points[idx];
            if (!extension_ok(x)) return;
            rows.push_back(x);
            BitVec next = cand;
            next &= q.coll[idx];
            dfs(next, dim + 1);
            rows.pop_back();
        });
    }

    void run() {
        if (target < 0) return;
        for (int idx = 0; idx < q.v(); ++idx) {
            rows.assign(1, q.points[idx]);
            dfs(q.coll[idx], 0);
        }
        std::sort(out.begin(), out.end(),
                  [](const Subspace& a, const Subspace& b) { return a.points < b.points; });
    }
};

}  // namespace

std::vector<Subspace> subspaces_in_quadric(const Quadric& q, int d) {
    if (d < 0 || d > q.g) throw std::invalid_argument("subspace dimension out of range [0, g]");
    SingularDfs dfs{q, d, {}, {}};
    dfs.run();
    return std::move(dfs.out);
}

std::vector<Subspace> generators(const Quadric& q) { return subspaces_in_quadric(q, q.g); }

Subspace tangent_generator(const Quadric& q, const Subspace& sigma, ProjPoint x) {
    if (sigma.dim != q.g || !is_singular_subspace(q, sigma))
        throw std::invalid_argument("sigma is not a generator");
    if (!q.contains(x)) throw std::invalid_argument("x is not on the quadric");
    if (sigma.contains(x)) throw std::invalid_argument("x lies in sigma");

    std::vector<ProjPoint> pts;
    for (ProjPoint p : sigma.points)
        if (q.contains(p ^ x)) pts.push_back(p);
    if (pts.size() != (std::size_t{1} << q.g) - 1)
        throw std::logic_error("tangent_generator: collinear set is not a (g-1)-space");
    pts.push_back(x);
    Subspace pi = span(pts);
    if (pi.dim != q.g || !is_singular_subspace(q, pi))
        throw std::logic_error("tangent_generator: constructed space is not a generator");
    return pi;
}

ProjPoint nucleus(const Quadric& q) {
    if (q.family != Family::parabolic) throw std::invalid_argument("no nucleus");
    const int m = q.n + 1;
    // Bilinear form matrix rows, b(e_i, e_j) for i != j.
    std::vector<std::uint32_t> b(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) {
                const std::uint32_t c = q.form.coeff[std::min(i, j)] >> std::max(i, j) & 1u;
                b[i] |= c << j;
            }
    // Nullspace of B. With the equations in reduced echelon form each pivot
    // coordinate is determined by the free coordinates alone.
    std::vector<ProjPoint> rows;
    for (int i = 0; i < m; ++i)
        if (b[i]) rref_insert(rows, b[i]);
    std::uint32_t pivots = 0;
    for (ProjPoint r : rows) pivots |= 1u << (std::bit_width(r) - 1);
    ProjPoint nuc = 0;
    int free_count = 0;
    for (int jbit = 0; jbit < m; ++jbit) {
        if (pivots >> jbit & 1u) continue;
        ++free_count;
        ProjPoint sol = 1u << jbit;
        for (ProjPoint r : rows)
            if (r >> jbit & 1u) sol |= 1u << (std::bit_width(r) - 1);
        nuc = sol;
    }
    if (free_count != 1) throw std::logic_error("nucleus: radical is not a single point");
    if (q.contains(nuc)) throw std::logic_error("nucleus: radical point lies on the quadric");
    return nuc;
}

SectionKind quadric_section_kind(const Quadric& q, const Subspace& pi) {
    std::size_t on = 0;
    for (ProjPoint p : pi.points) on += q.contains(p);
    if (on == pi.points.size()) return SectionKind::contained;
    const int k = pi.dim;
    if (k < 2) return SectionKind::other;

    // Local coordinates: with the basis in reduced echelon form, the
    // coordinates of a point are its bits at the leading positions.
    const int dim = k + 1;
    std::vector<std::uint32_t> leads;
    for (ProjPoint r : pi.basis) leads.push_back(std::bit_width(r) - 1);
    auto local = [&](ProjPoint p) {
        std::uint32_t c = 0;
        for (int t = 0; t < dim; ++t) c |= (p >> leads[t] & 1u) << t;
        return c;
    };
    std::vector<char> on_local(std::size_t{1} << dim, 0);
    for (ProjPoint p : pi.points)
        if (q.contains(p)) on_local[local(p)] = 1;

    int hyperplanes = 0;
    std::size_t union_size = 0;
    std::vector<char> covered(std::size_t{1} << dim, 0);
    for (std::uint32_t phi = 1; phi < (1u << dim); ++phi) {
        bool inside = true;
        for (std::uint32_t cpt = 1; cpt < (1u << dim) && inside; ++cpt)
            if (!(std::popcount(cpt & phi) & 1) && !on_local[cpt]) inside = false;
        if (!inside) continue;
        ++hyperplanes;
        for (std::uint32_t cpt = 1; cpt < (1u << dim); ++cpt)
            if (!(std::popcount(cpt & phi) & 1) && !covered[cpt]) {
                covered[cpt] = 1;
                ++union_size;
            }
    }
    if (hyperplanes == 1 && union_size == on) return SectionKind::one_hyperplane;
    if (hyperplanes == 2 && union_size == on) return SectionKind::two_hyperplanes;
    return SectionKind::other;
}

Subspace default_alpha(const Quadric& q, int s) {
    if (s < 0 || s >= q.g) throw std::invalid_argument("default_alpha: need 0 <= s < g");
    const auto gens = generators(q);
    const Subspace& first = gens.front();
    std::vector<ProjPoint> rows;
    for (ProjPoint p : first.points) {
        if (static_cast<int>(rows.size()) == s + 1) break;
        rref_insert(rows, p);
    }
    return subspace_from_rref(std::move(rows));
}

}  // namespace qsrg
