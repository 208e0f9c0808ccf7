#ifndef KLEENEMV_PIPELINE_HPP
#define KLEENEMV_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kleenemv/mvalg.hpp"

namespace kleenemv {

// Where a presentation came from: the input file when the CLI produced it,
// and the dual space behind the realization.
struct Provenance {
    std::string algebra_file;
    std::optional<KleeneSpace> space;
};

// A finitely presented MV-algebra given by its basis combinatorics: the
// weighted complex, its canonical geometric realization, and the Schauder
// basis over that realization. The complex always equals the abstraction of
// the realization vertex-for-vertex (names aside).
struct MVPresentation {
    WeightedComplex complex;
    RationalTriangulation realization;
    SchauderBasis basis;
    Provenance provenance;
};

// weights and facets of sc_of(realization) match the stored complex, and the
// multipliers match the weights.
bool presentation_coherent(const MVPresentation& p);

// The free MV-algebra over a finite Kleene algebra, presented through the
// weighted nerve of the dual space.
MVPresentation free_over(const FiniteKleeneAlgebra& b);

struct Recognition {
    bool ok = false;
    char failed_condition = 0;  // 'a', 'b' or 'c' when not ok
    std::string detail;
    FiniteKleeneAlgebra algebra;   // witness the input is free over, when ok
    MVPresentation presentation;   // its free presentation, when ok
};

// Decides whether a weighted complex presents an MV-algebra free over some
// finite Kleene algebra, and builds a witness algebra when it does. The
// reconstructed complex is isomorphic to the input; the witness itself is
// only determined up to that isomorphism.
Recognition recognize(const WeightedComplex& wc);

// All triangulations one diagonal flip away: for each interior edge whose
// two triangles form a strictly convex quadrilateral, swap the diagonal.
// Flips keep the vertex set, so only the simplex lists differ. Ambient
// dimension two only.
std::vector<RationalTriangulation> edge_flips(const RationalTriangulation& t);

struct FlipSearch {
    std::optional<RationalTriangulation> found;
    int states = 0;
    bool budget_exhausted = false;
};

// Breadth-first walk of the flip graph from `start`, looking for a regular
// triangulation whose abstraction is isomorphic to `target`. The budget
// bounds how many states are expanded; exhausting it is reported separately
// from draining the whole component without a hit.
FlipSearch flip_search(const RationalTriangulation& start, const WeightedComplex& target,
                       int budget);

// The two demonstration studies.
//
// Collision: two non-isomorphic algebras with non-isomorphic dual spaces
// whose weighted nerves coincide, so the free construction cannot separate
// them.
FiniteKleeneAlgebra demo_square_algebra();  // product of the three-chain with itself
FiniteKleeneAlgebra demo_pruned_algebra();  // same minus its two complemented middles

// Lifted witness: nine grid points in the cube (the bottom layer minus one
// midpoint, plus one point raised halfway) spanning a non-free algebra whose
// free MV-algebra is nonetheless presented by a triangulation of the square.
std::vector<Tuple> demo_lifted_points();
FiniteKleeneAlgebra demo_lifted_algebra();

struct DemoReport {
    bool collision_spaces_distinct = false;
    bool collision_algebras_distinct = false;
    bool collision_complexes_equal = false;

    bool lifted_not_free = false;
    std::vector<int> lifted_f_vector;
    std::vector<int> lifted_weights;  // sorted
    bool lifted_recognized = false;

    int flip_states = 0;
    bool flip_budget_exhausted = false;
    std::optional<RationalTriangulation> flip_delta;

    bool ok() const {
        return collision_spaces_distinct && collision_algebras_distinct &&
               collision_complexes_equal && lifted_not_free &&
               lifted_f_vector == std::vector<int>{9, 16, 8} && lifted_recognized &&
               flip_delta.has_value();
    }
};

DemoReport counterexample_demo(int budget = 10000);

}  // namespace kleenemv

#endif
