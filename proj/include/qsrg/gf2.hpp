#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsrg {

using BigInt = boost::multiprecision::cpp_int;

// A point of PG(n,2): a nonzero bit vector, bit i = coordinate x_i.
// Over GF(2) there is no scalar ambiguity, so the integer IS the point,
// and numeric order gives a canonical enumeration order everywhere.
using ProjPoint = std::uint32_t;

// Largest supported ambient projective dimension (bit width 16).
inline constexpr int kMaxProjDim = 15;

// The third point of the line through two distinct points.
ProjPoint third_point(ProjPoint p1, ProjPoint p2);

// A linear subspace of PG(n,2).
//   basis  - reduced row echelon form, rows ordered by decreasing leading bit
//            (unique per subspace, so comparable/usable as a canonical key)
//   dim    - projective dimension, -1 for the empty subspace
//   points - all 2^(dim+1)-1 nonzero combinations, ascending
struct Subspace {
    std::vector<ProjPoint> basis;
    int dim = -1;
    std::vector<ProjPoint> points;

    bool empty() const { return dim < 0; }
    bool contains(ProjPoint p) const;
};

bool operator==(const Subspace& a, const Subspace& b);

// Inserts x into a reduced echelon basis; returns false (basis unchanged)
// if x is dependent on the existing rows.
bool rref_insert(std::vector<ProjPoint>& rows, ProjPoint x);

// x reduced modulo the echelon basis (zero iff x lies in the span).
ProjPoint rref_reduce(const std::vector<ProjPoint>& rows, ProjPoint x);

// All nonzero combinations of the rows, sorted ascending.
std::vector<ProjPoint> subspace_points(const std::vector<ProjPoint>& rows);

Subspace subspace_from_rref(std::vector<ProjPoint> rows);

// Smallest subspace containing pts. Empty input gives the empty subspace.
Subspace span(const std::vector<ProjPoint>& pts);

Subspace intersection(const Subspace& a, const Subspace& b);

// Gaussian binomial [n choose k]_q: k-dim vector subspaces of an n-dim space.
BigInt gaussian_binomial(int n, int k, long q);

// Number of subspaces of projective dimension dim_small inside a space of
// projective dimension dim_big, over GF(q).
BigInt count_subspaces_in(int dim_big, int dim_small, long q);

}  // namespace qsrg
