#ifndef KLEENEMV_SPACE_HPP
#define KLEENEMV_SPACE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleenemv/algebra.hpp"
#include "kleenemv/core.hpp"

namespace kleenemv {

// Finite structured poset dualizing finite Kleene algebras: a partial order,
// a similarity relation R, and a designated set M of maximal points.
struct KleeneSpace {
    std::vector<std::string> points;
    BitMatrix leq;
    BitMatrix R;
    std::vector<char> M;

    int size() const { return static_cast<int>(points.size()); }
    bool le(int a, int b) const { return leq.test(a, b); }
    bool rel(int a, int b) const { return R.test(a, b); }
    bool in_m(int a) const { return M[a] != 0; }
};

// Checks: partial order; M consists of maximal points; R is reflexive;
// (x,y) in R with x in M forces y <= x; (x,y) in R and z <= y force (z,x) in R.
ValidationReport validate_space(const KleeneSpace& s);

// The three-point dualizing space on {0,1/2,1}.
KleeneSpace ktilde();
// Componentwise n-th power of ktilde; points in code order. Guarded.
KleeneSpace power_space(int n, int max_n = 4);
// Induced subobject of the n-th power on a set of grid points (deduplicated,
// sorted by code). Does not materialize the ambient power, so n may be large.
KleeneSpace subspace_from_subset(const std::vector<Tuple>& w, int n);

struct SpaceMorphism {
    std::vector<int> map;
};

bool is_space_morphism(const KleeneSpace& x, const KleeneSpace& y, const std::vector<int>& map);
std::optional<std::vector<int>> is_isomorphic_space(const KleeneSpace& x, const KleeneSpace& y);

// Hom functor into the algebra side: points are the homomorphisms b -> K with
// the pointwise structure of ktilde^b. Point order matches dual_D_points.
KleeneSpace dual_D(const FiniteKleeneAlgebra& b);
std::vector<KleeneHom> dual_D_points(const FiniteKleeneAlgebra& b);

// Hom functor into the space side: elements are the structure-preserving maps
// x -> ktilde with the pointwise algebra structure of K^x.
FiniteKleeneAlgebra dual_E(const KleeneSpace& x);
std::vector<std::vector<Kv>> dual_E_tables(const KleeneSpace& x);

// Contravariant actions: precomposition.
SpaceMorphism dual_D_on_hom(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b,
                            const KleeneHom& f);  // D(f): D(b) -> D(a)
KleeneHom dual_E_on_morphism(const KleeneSpace& x, const KleeneSpace& y,
                             const SpaceMorphism& g);  // E(g): E(y) -> E(x)

// Element of the free algebra as its value table over {0,1/2,1}^arity,
// indexed by code. Constructors validate the three morphism conditions.
struct KleeneTable {
    int arity = 0;
    std::vector<Kv> values;

    Kv at(const Tuple& t) const { return values[code_of(t)]; }
};

KleeneTable make_kleene_table(int arity, std::vector<Kv> values);
bool kleene_table_is_morphism(int arity, const std::vector<Kv>& values,
                              std::string* witness = nullptr);
KleeneTable projection_table(int n, int i);
KleeneTable constant_table(int n, Kv v);

KleeneTable table_meet(const KleeneTable& f, const KleeneTable& g);
KleeneTable table_join(const KleeneTable& f, const KleeneTable& g);
KleeneTable table_neg(const KleeneTable& f);

using TermPair = std::pair<KleeneTable, KleeneTable>;

// Grid points where every pair agrees, sorted by code.
std::vector<Tuple> sol_K(const std::vector<TermPair>& theta, int n);

// For x outside w, a pair of free-algebra elements agreeing on w and
// disagreeing at x (the second takes value 1 there, the first does not).
TermPair separating_pair(const Tuple& x, const std::vector<Tuple>& w);

}  // namespace kleenemv

#endif
