#ifndef KLEENEMV_GEOM_HPP
#define KLEENEMV_GEOM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kleenemv/algebra.hpp"
#include "kleenemv/complex.hpp"
#include "kleenemv/core.hpp"
#include "kleenemv/rational.hpp"
#include "kleenemv/space.hpp"

namespace kleenemv {

// Least common multiple of the reduced coordinate denominators.
Int den(const Rat& r);
Int den(const RatVec& v);

// (q x_1, ..., q x_d, q) with q = den(v); the last entry is always den(v).
std::vector<Int> homogeneous(const RatVec& v);

struct RationalSimplex {
    int ambient = 0;
    std::vector<RatVec> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Validates equal arities and affine independence.
RationalSimplex make_simplex(std::vector<RatVec> vertices);

// Barycentric membership tests; relative interior needs strictly positive
// coordinates.
bool in_simplex(const RationalSimplex& s, const RatVec& x);
bool in_relative_interior(const RationalSimplex& s, const RatVec& x);

// Unimodularity: the gcd of all maximal minors of the homogeneous vertex
// matrix equals 1 (for a full-dimensional simplex, determinant +-1).
bool is_regular_simplex(const RationalSimplex& s);

// Euclidean volume for full-dimensional simplices, 0 for lower-dimensional.
Rat simplex_volume(const RationalSimplex& s);

// Stored as maximal simplices over a shared point list; faces are implicit.
struct RationalTriangulation {
    int ambient = 0;
    std::vector<RatVec> points;
    std::vector<std::vector<int>> simplices;  // sorted index sets, list in lex order
};

// Full validation including the exact pairwise proper-intersection check;
// throws std::invalid_argument naming the first violated law.
RationalTriangulation make_triangulation(int ambient, std::vector<RatVec> points,
                                         std::vector<std::vector<int>> simplices);
// Law names: malformed, affine_independence, intersection.
ValidationReport validate_triangulation(const RationalTriangulation& t);

RationalSimplex simplex_at(const RationalTriangulation& t, int i);
bool is_regular_triangulation(const RationalTriangulation& t);
// Total Euclidean content of the full-dimensional simplices.
Rat support_volume(const RationalTriangulation& t);

// Canonical geometric realization of a weighted complex: vertex v_i sits at
// e_i / weight(v_i) in [0,1]^d with d the vertex count, so the realized
// vertex denominator equals the weight.
RationalTriangulation realize(const WeightedComplex& wc);

// Chains of (w, componentwise order) realized at their grid coordinates.
RationalTriangulation realize_grid(const std::vector<Tuple>& w, int n);

// Triangulation of [0,1]^n by the convex hulls of all maximal chains of the
// half-integer grid.
RationalTriangulation kleene_triangulation(int n, int max_n = 3);

// Subtriangulation on the simplices all of whose vertices solve theta.
RationalTriangulation sigma_theta(const std::vector<TermPair>& theta, int n, int max_n = 3);

// Abstract weighted complex of a triangulation: vertices named by their
// coordinates, weights the point denominators.
WeightedComplex sc_of(const RationalTriangulation& t);

// Defining system of a grid-chain simplex: with u_i = x_{coord[i]} when
// negated[i] is false and 1 - x_{coord[i]} otherwise, the simplex is exactly
// { x in [0,1]^n : 1/2 R_0 u_1 R_1 ... R_{n-1} u_n R_n 1 } where R_i is "="
// when equal[i] holds and "<=" otherwise.
struct SimplexSystem {
    std::vector<int> coord;
    std::vector<bool> negated;
    std::vector<bool> equal;  // size n + 1
};

SimplexSystem simplex_system(const RationalSimplex& s);
bool system_satisfied(const SimplexSystem& sys, const RatVec& x);

// The unique face whose relative interior contains x, with its positive
// barycentric coordinates; absent when x lies outside the support.
struct Location {
    std::vector<int> face;
    std::vector<Rat> coords;
};

std::optional<Location> locate(const RationalTriangulation& t, const RatVec& x);

// Stellar subdivision at the Farey mediant of the edge {v,w}: the new point
// m has homogeneous(m) = homogeneous(v) + homogeneous(w) and every simplex
// containing the edge splits in two. Unimodularity of split simplices is
// preserved and checked.
RationalTriangulation farey_star(const RationalTriangulation& t, int v, int w);

}  // namespace kleenemv

#endif
