#include "qsrg/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qsrg {

ProjPoint third_point(ProjPoint p1, ProjPoint p2) {
    if (p1 == p2) throw std::invalid_argument("degenerate line");
    return p1 ^ p2;
}

bool Subspace::contains(ProjPoint p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

bool operator==(const Subspace& a, const Subspace& b) { return a.points == b.points; }

namespace {
int lead_bit(ProjPoint x) { return std::bit_width(x) - 1; }
}  // namespace

ProjPoint rref_reduce(const std::vector<ProjPoint>& rows, ProjPoint x) {
    for (ProjPoint r : rows)
        if (x >> lead_bit(r) & 1u) x ^= r;
    return x;
}

bool rref_insert(std::vector<ProjPoint>& rows, ProjPoint x) {
    x = rref_reduce(rows, x);
    if (x == 0) return false;
    const int lx = lead_bit(x);
    for (ProjPoint& r : rows)
        if (r >> lx & 1u) r ^= x;
    auto pos = std::find_if(rows.begin(), rows.end(),
                            [&](ProjPoint r) { return lead_bit(r) < lx; });
    rows.insert(pos, x);
    return true;
}

std::vector<ProjPoint> subspace_points(const std::vector<ProjPoint>& rows) {
    const std::size_t k = rows.size();
    std::vector<ProjPoint> pts;
    pts.reserve((std::size_t{1} << k) - 1);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        ProjPoint p = 0;
        std::uint32_t m = mask;
        while (m) {
            p ^= rows[std::countr_zero(m)];
            m &= m - 1;
        }
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

Subspace subspace_from_rref(std::vector<ProjPoint> rows) {
    Subspace s;
    s.dim = static_cast<int>(rows.size()) - 1;
    s.points = subspace_points(rows);
    s.basis = std::move(rows);
    return s;
}

Subspace span(const std::vector<ProjPoint>& pts) {
    std::vector<ProjPoint> rows;
    for (ProjPoint p : pts) rref_insert(rows, p);
    return subspace_from_rref(std::move(rows));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    std::vector<ProjPoint> common;
    std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                          std::back_inserter(common));
    return span(common);
}

BigInt gaussian_binomial(int n, int k, long q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(bq, n - i) - 1;
        den *= boost::multiprecision::pow(bq, i + 1) - 1;
    }
    return num / den;
}

BigInt count_subspaces_in(int dim_big, int dim_small, long q) {
    if (dim_small > dim_big) throw std::invalid_argument("count_subspaces_in: dim_small > dim_big");
    if (q < 2) throw std::invalid_argument("count_subspaces_in: q must be at least 2");
    return gaussian_binomial(dim_big + 1, dim_small + 1, q);
}

}  // namespace qsrg
