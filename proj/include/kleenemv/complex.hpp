#ifndef KLEENEMV_COMPLEX_HPP
#define KLEENEMV_COMPLEX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleenemv/core.hpp"
#include "kleenemv/space.hpp"

namespace kleenemv {

// Abstract simplicial complex with positive integer vertex weights, stored by
// its facets (sorted index sets, pairwise non-contained, covering every
// vertex). Weight 1 everywhere models the unweighted case.
struct WeightedComplex {
    std::vector<std::string> vertices;
    std::vector<int> weights;
    std::vector<std::vector<int>> facets;

    int size() const { return static_cast<int>(vertices.size()); }
};

// Normalizes a face family: sorts, drops faces contained in others, adds
// singleton facets for uncovered vertices. Throws std::invalid_argument on
// out-of-range indices, nonpositive weights, a repeated vertex inside a face,
// or an exactly repeated face. Empty `weights` means all 1.
WeightedComplex make_complex(std::vector<std::string> vertices, std::vector<int> weights,
                             std::vector<std::vector<int>> faces);

bool is_face(const WeightedComplex& c, std::vector<int> s);
// Every nonempty face, sorted by (size, lexicographic). Exponential in the
// largest facet, which stays tiny here.
std::vector<std::vector<int>> all_faces(const WeightedComplex& c);
// Inclusion-minimal non-faces, same ordering. Singletons are always faces, so
// every missing face has at least two vertices.
std::vector<std::vector<int>> missing_faces(const WeightedComplex& c);
WeightedComplex skeleton(const WeightedComplex& c, int k);

std::vector<int> f_vector(const WeightedComplex& c);

// Chains of a poset; all weights 1.
WeightedComplex nerve(const Poset& p);
// Chains of the space's order, designated points weighted 1, others 2.
WeightedComplex weighted_nerve(const KleeneSpace& s);

// Orientation of the 1-skeleton, directed edges sorted lexicographically.
struct Orientation {
    std::vector<std::pair<int, int>> edges;
};

// First transitive orientation (closed under composition inside the graph)
// with every listed vertex a sink, found by backtracking over the edges with
// propagation of forced orientations. nullopt if none exists.
std::optional<Orientation> transitive_orientation(const WeightedComplex& c,
                                                  const std::vector<int>& required_sinks);

struct OrderWitness {
    Orientation orientation;
    Poset poset;  // same vertex names; edge (u,v) oriented toward v means u < v
};

// Present iff the complex is the chain complex of some poset on its vertices.
std::optional<OrderWitness> is_order_complex(const WeightedComplex& c);

// Recognition of complexes of the dual kind: (a) weights within {1,2},
// (b) no missing face of three or more vertices, (c) transitive orientation
// with all weight-1 vertices sinks.
struct KleeneComplexCheck {
    std::optional<OrderWitness> witness;
    char failed_condition = 0;  // 'a', 'b' or 'c' when absent
    std::string detail;
};

KleeneComplexCheck is_kleene_complex(const WeightedComplex& c);

// Order-embedding of a weighted poset into the (m+1)-power grid; weights must
// lie in {1,2} with every weight-1 element maximal. The image point of v has
// denominator equal to the weight of v.
std::vector<Tuple> embed_poset(const Poset& p, const std::vector<int>& weights);

// Weight-preserving simplicial isomorphism witness, or nullopt.
std::optional<std::vector<int>> complex_isomorphic(const WeightedComplex& a,
                                                   const WeightedComplex& b);

}  // namespace kleenemv

#endif
