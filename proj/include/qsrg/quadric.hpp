#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qsrg/bitvec.hpp"
#include "qsrg/family.hpp"
#include "qsrg/gf2.hpp"

namespace qsrg {

// Quadratic form on GF(2)^(n+1), kept upper triangular: coeff[i] bit j
// (j >= i) is the coefficient of x_i x_j.
struct QuadraticForm {
    int n = 0;
    std::array<std::uint32_t, kMaxProjDim + 1> coeff{};

    bool eval(ProjPoint x) const;
    // Polarization b(x,y) = Q(x^y) + Q(x) + Q(y); symmetric and bilinear.
    bool bilinear(ProjPoint x, ProjPoint y) const;
};

// A non-singular quadric in PG(n,2) with its point list in canonical
// (ascending) order and the collinearity structure precomputed: coll[i] is
// the set of point indices j != i with the line p_i p_j inside the quadric.
struct Quadric {
    Family family{};
    int n = 0;  // ambient projective dimension
    int r = 0;  // n = 2r (parabolic) or 2r+1
    int g = 0;  // projective index
    QuadraticForm form;
    std::vector<ProjPoint> points;
    std::vector<std::int32_t> index_of;  // point -> index, -1 off the quadric
    std::vector<BitVec> coll;

    int v() const { return static_cast<int>(points.size()); }
    bool contains(ProjPoint p) const {
        return p < index_of.size() && index_of[p] >= 0;
    }
    int index(ProjPoint p) const { return index_of[p]; }
};

// Canonical-coordinate quadric of the given family. Requires the family/n
// parity to match and n large enough for the projective index to be >= 1
// (hyperbolic n >= 3, parabolic n >= 4, elliptic n >= 5).
Quadric standard_quadric(Family f, int n);

// All subspaces of projective dimension d contained in the quadric,
// 0 <= d <= g, sorted by point list. d = g gives the generators.
std::vector<Subspace> subspaces_in_quadric(const Quadric& q, int d);
std::vector<Subspace> generators(const Quadric& q);

// True iff every point of s lies on the quadric (s is then totally singular).
bool is_singular_subspace(const Quadric& q, const Subspace& s);

// The unique generator through x meeting the generator sigma in a
// (g-1)-space. The points of sigma collinear with x are exactly that
// (g-1)-space.
Subspace tangent_generator(const Quadric& q, const Subspace& sigma, ProjPoint x);

// Radical point of the bilinear form; exists only for parabolic quadrics.
ProjPoint nucleus(const Quadric& q);

enum class SectionKind { contained, one_hyperplane, two_hyperplanes, other };

// Classifies pi's quadric section when it degenerates into hyperplanes of
// pi (for dim pi >= 2); "other" covers everything else, including 2-secant
// lines.
SectionKind quadric_section_kind(const Quadric& q, const Subspace& pi);

// Deterministic default base subspace: the span of the greedy independent
// prefix of the lexicographically first generator (s+1 basis points).
Subspace default_alpha(const Quadric& q, int s);

}  // namespace qsrg
