#ifndef KLEENEMV_ALGEBRA_HPP
#define KLEENEMV_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "kleenemv/core.hpp"

namespace kleenemv {

// Finite bounded distributive lattice with a De Morgan involution satisfying
// the Kleene condition. `leq` holds the full order relation; loaders close
// their input reflexively and transitively before building one of these.
struct FiniteKleeneAlgebra {
    std::vector<std::string> elements;
    BitMatrix leq;
    std::vector<int> neg;
    int bot = -1;
    int top = -1;

    int size() const { return static_cast<int>(elements.size()); }
    bool le(int a, int b) const { return leq.test(a, b); }
};

struct LawViolation {
    std::string law;      // e.g. "antisymmetry", "distributivity", "kleene"
    std::string witness;  // human-readable counterexample
};

struct ValidationReport {
    bool ok = false;
    std::vector<LawViolation> violations;
};

ValidationReport validate_kleene_algebra(const FiniteKleeneAlgebra& a);

// Meet/join lookup tables; only constructible from a valid algebra.
struct AlgebraOps {
    int n = 0;
    std::vector<int> meet, join;  // n*n, row-major

    int meet_of(int x, int y) const { return meet[static_cast<size_t>(x) * n + y]; }
    int join_of(int x, int y) const { return join[static_cast<size_t>(x) * n + y]; }
};

// Throws std::invalid_argument naming the first violated law if `a` is invalid.
AlgebraOps algebra_ops(const FiniteKleeneAlgebra& a);

FiniteKleeneAlgebra standard_K();
// Chain 0 < ... < 1 with the order-reversing negation; size >= 1.
FiniteKleeneAlgebra chain_kleene(int size);
FiniteKleeneAlgebra product(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b);
// `carrier` must contain bot and top and be closed under meet, join, neg;
// throws std::invalid_argument with a witness operation otherwise.
FiniteKleeneAlgebra subalgebra(const FiniteKleeneAlgebra& a, std::vector<int> carrier);

// Homomorphism a -> b as an element map.
struct KleeneHom {
    std::vector<int> map;
};

// All homomorphisms a -> b, sorted lexicographically by value tuple.
// Backtracks along a linear extension of a's order, propagating values forced
// by negations and joins of already-assigned elements.
std::vector<KleeneHom> hom_enumerate(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b);

// First isomorphism found (canonical search order), or nullopt.
std::optional<std::vector<int>> is_isomorphic_alg(const FiniteKleeneAlgebra& a,
                                                  const FiniteKleeneAlgebra& b);

// Free Kleene algebra on n generators, built from the dual of the n-th power
// space. Guarded (default n <= 3); see space.hpp for the dual machinery.
FiniteKleeneAlgebra free_kleene(int n, int max_n = 3);

}  // namespace kleenemv

#endif
