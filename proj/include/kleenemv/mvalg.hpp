#ifndef KLEENEMV_MVALG_HPP
#define KLEENEMV_MVALG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kleenemv/geom.hpp"
#include "kleenemv/space.hpp"

namespace kleenemv {

// Scalar operations of the standard MV-algebra on [0,1]. Arguments are
// checked to lie in range.
Rat mv_oplus(const Rat& a, const Rat& b);  // min(a + b, 1)
Rat mv_neg(const Rat& a);                  // 1 - a
Rat mv_odot(const Rat& a, const Rat& b);   // max(a + b - 1, 0)
Rat mv_meet(const Rat& a, const Rat& b);
Rat mv_join(const Rat& a, const Rat& b);

// Term tree over generators x1, x2, ... and rational constants.
struct MVTerm {
    enum Kind { Var, Const, Neg, Oplus, Odot, Meet, Join };
    Kind kind = Const;
    int var = -1;              // Var only, zero-based
    Rat value;                 // Const only, in [0,1]
    std::vector<MVTerm> kids;  // one for Neg, two for the binary nodes
};

MVTerm term_var(int i);
MVTerm term_const(const Rat& c);
MVTerm term_neg(MVTerm a);
MVTerm term_oplus(MVTerm a, MVTerm b);
MVTerm term_odot(MVTerm a, MVTerm b);
MVTerm term_meet(MVTerm a, MVTerm b);
MVTerm term_join(MVTerm a, MVTerm b);

// Smallest arity the term fits in: one past the largest generator index.
int term_arity(const MVTerm& t);

Rat eval_term(const MVTerm& t, const RatVec& point);

// Prefix s-expressions: "(oplus x1 (neg x2))", constants as "p/q" or "p".
MVTerm parse_term(const std::string& s);
std::string term_str(const MVTerm& t);

// Function linear on each simplex of its triangulation, stored as the vertex
// values. The domain is shared so a basis worth of hats stays cheap.
struct PLFunction {
    std::shared_ptr<const RationalTriangulation> dom;
    std::vector<Rat> values;  // values[i] at dom->points[i], in [0,1]
};

PLFunction make_pl(std::shared_ptr<const RationalTriangulation> dom, std::vector<Rat> values);
PLFunction make_pl(RationalTriangulation dom, std::vector<Rat> values);

// Exact barycentric interpolation; throws if x lies outside the support.
Rat eval_pl(const PLFunction& f, const RatVec& x);

// Hats over a regular triangulation: hats[i] peaks at vertex i with value
// 1/den(points[i]) and vanishes at the other vertices; mult[i] = den. The
// partition identity sum mult[i]*hats[i] = 1 is checked at construction.
struct SchauderBasis {
    std::shared_ptr<const RationalTriangulation> dom;
    std::vector<PLFunction> hats;
    std::vector<int> mult;

    int size() const { return static_cast<int>(hats.size()); }
};

SchauderBasis schauder_basis(const RationalTriangulation& t);

// The unique morphism-of-triangulations reading of a free-algebra element:
// the function over the grid triangulation interpolating its value table.
PLFunction kleene_to_pl(const KleeneTable& b, int max_n = 3);

// Sampled consistency between the two solution-set readings of a relation
// list: pointwise equality of the interpolated pairs against membership in
// the solution subtriangulation.
struct SampleReport {
    int checked = 0;
    std::vector<RatVec> mismatches;

    bool ok() const { return mismatches.empty(); }
};

SampleReport sol_M_sampled(const std::vector<TermPair>& theta, int n, int samples,
                           unsigned seed = 0, int max_n = 3);

// Algebraic stellar subdivision at a starrable pair of hats; geometrically
// the basis over the mediant subdivision of the domain. Throws if the two
// peak vertices do not span an edge (the meet is the zero function).
SchauderBasis stellar_subdivide(const SchauderBasis& b, int r, int s);

// Sets of hats with positive meet, weighted by the multipliers. A set of
// hats has positive meet exactly when its peaks span a simplex.
WeightedComplex bowtie(const SchauderBasis& b);

// One-step regularity at a starrable pair: whenever the meet of the pair
// with some old hats is positive, it stays positive against the subdivided
// versions of any subset of them not containing both members of the pair.
// Positivity is decided exactly at barycenters of the subdivided domain.
bool one_regular_check(const SchauderBasis& b, int r, int s);

// depth 0: every starrable pair passes one_regular_check. depth d >= 1:
// additionally every one-step subdivision is regular to depth d - 1. The
// default matches the full definition (subdivisions stay 1-regular).
bool is_regular_basis(const SchauderBasis& b, int depth = 1);

}  // namespace kleenemv

#endif
