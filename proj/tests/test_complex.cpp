#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleenemv/complex.hpp"
#include "kleenemv/space.hpp"
#include "oracles.hpp"

using namespace kleenemv;
namespace oracle = kleenemv_oracles;

namespace {

std::vector<std::string> letters(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

WeightedComplex from_edges(int n, std::vector<std::vector<int>> edges, std::vector<int> w = {}) {
    return make_complex(letters(n), std::move(w), std::move(edges));
}

Poset fence_poset() {
    // a < c, b < c, b < d
    Poset p;
    p.names = letters(4);
    p.leq = BitMatrix(4);
    for (int i = 0; i < 4; ++i) p.leq.set(i, i, true);
    p.leq.set(0, 2, true);
    p.leq.set(1, 2, true);
    p.leq.set(1, 3, true);
    return p;
}

Poset chain_poset(int n) {
    Poset p;
    p.names = letters(n);
    p.leq = BitMatrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p.leq.set(i, j, true);
    return p;
}

WeightedComplex random_complex(std::mt19937& rng, int n, int tries) {
    std::set<std::vector<int>> faces;
    std::uniform_int_distribution<int> size_d(1, std::min(4, n));
    std::uniform_int_distribution<int> v_d(0, n - 1);
    for (int t = 0; t < tries; ++t) {
        std::set<int> f;
        int k = size_d(rng);
        while (static_cast<int>(f.size()) < k) f.insert(v_d(rng));
        faces.insert(std::vector<int>(f.begin(), f.end()));
    }
    return make_complex(letters(n), {},
                        std::vector<std::vector<int>>(faces.begin(), faces.end()));
}

WeightedComplex permuted_copy(const WeightedComplex& c, const std::vector<int>& perm) {
    const int n = c.size();
    std::vector<std::string> verts(n);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) {
        verts[perm[i]] = c.vertices[i] + "'";
        w[perm[i]] = c.weights[i];
    }
    std::vector<std::vector<int>> faces;
    for (const auto& f : c.facets) {
        std::vector<int> img;
        for (int v : f) img.push_back(perm[v]);
        faces.push_back(img);
    }
    return make_complex(verts, w, faces);
}

}  // namespace

TEST_CASE("complex normalization and face queries") {
    SUBCASE("containment removal and singleton coverage") {
        auto c = make_complex(letters(4), {}, {{0, 1}, {1, 0, 2}, {1}});
        REQUIRE(c.facets.size() == 2);
        CHECK(c.facets[0] == std::vector<int>{0, 1, 2});
        CHECK(c.facets[1] == std::vector<int>{3});
        CHECK(c.weights == std::vector<int>(4, 1));
        CHECK(is_face(c, {2, 0}));
        CHECK(is_face(c, {3}));
        CHECK_FALSE(is_face(c, {0, 3}));
        CHECK_FALSE(is_face(c, {}));
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(make_complex(letters(2), {1}, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(make_complex(letters(2), {1, 0}, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(make_complex(letters(2), {}, {{0, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(make_complex(letters(2), {}, {{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(make_complex(letters(3), {}, {{0, 1}, {1, 0}}), std::invalid_argument);
    }
    SUBCASE("all faces and f-vector of a full triangle") {
        auto c = from_edges(3, {{0, 1, 2}});
        auto faces = all_faces(c);
        REQUIRE(faces.size() == 7);
        CHECK(faces.front() == std::vector<int>{0});
        CHECK(faces.back() == std::vector<int>{0, 1, 2});
        CHECK(f_vector(c) == std::vector<int>{3, 3, 1});
        CHECK(missing_faces(c).empty());
    }
    SUBCASE("skeleton") {
        auto c = from_edges(3, {{0, 1, 2}});
        auto sk = skeleton(c, 1);
        CHECK(f_vector(sk) == std::vector<int>{3, 3});
        CHECK(sk.facets == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
        CHECK(skeleton(c, 5).facets == c.facets);
        CHECK(f_vector(skeleton(c, 0)) == std::vector<int>{3});
        CHECK_THROWS_AS(skeleton(c, -1), std::invalid_argument);
    }
    SUBCASE("empty complex") {
        auto c = make_complex({}, {}, {});
        CHECK(c.size() == 0);
        CHECK(all_faces(c).empty());
        CHECK(missing_faces(c).empty());
        CHECK(f_vector(c).empty());
    }
}

TEST_CASE("missing faces") {
    SUBCASE("hollow triangle") {
        auto c = from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
        auto mf = missing_faces(c);
        REQUIRE(mf.size() == 1);
        CHECK(mf[0] == std::vector<int>{0, 1, 2});
    }
    SUBCASE("four-cycle has only its diagonals missing") {
        auto c = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto mf = missing_faces(c);
        REQUIRE(mf.size() == 2);
        CHECK(mf[0] == std::vector<int>{0, 2});
        CHECK(mf[1] == std::vector<int>{1, 3});
    }
    SUBCASE("boundary of a tetrahedron") {
        auto c = from_edges(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        auto mf = missing_faces(c);
        REQUIRE(mf.size() == 1);
        CHECK(mf[0] == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("matches unbounded enumeration on random complexes") {
        std::mt19937 rng(20260822u);
        for (int t = 0; t < 40; ++t) {
            auto c = random_complex(rng, 6, 7);
            CHECK(missing_faces(c) == oracle::missing_faces_bruteforce(c));
        }
    }
}

TEST_CASE("nerves of posets and spaces") {
    SUBCASE("fence") {
        auto c = nerve(fence_poset());
        CHECK(c.facets == std::vector<std::vector<int>>{{0, 2}, {1, 2}, {1, 3}});
        CHECK(c.weights == std::vector<int>(4, 1));
    }
    SUBCASE("isolated points survive") {
        Poset p;
        p.names = letters(2);
        p.leq = BitMatrix(2);
        p.leq.set(0, 0, true);
        p.leq.set(1, 1, true);
        auto c = nerve(p);
        CHECK(c.facets == std::vector<std::vector<int>>{{0}, {1}});
    }
    SUBCASE("weighted nerve of the three-point scalar space") {
        auto c = weighted_nerve(ktilde());
        CHECK(c.weights == std::vector<int>{1, 2, 1});
        CHECK(c.facets == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    }
    SUBCASE("weighted nerve of the dual of the six-element chain") {
        auto d = dual_D(chain_kleene(6));
        auto c = weighted_nerve(d);
        REQUIRE(c.size() == 3);
        CHECK(c.facets == std::vector<std::vector<int>>{{0, 1, 2}});
        int ones = 0;
        for (int w : c.weights) ones += w == 1;
        CHECK(ones == 1);
    }
}

TEST_CASE("transitive orientation") {
    SUBCASE("four-cycle is orientable, five-cycle is not") {
        auto c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto o = transitive_orientation(c4, {});
        REQUIRE(o.has_value());
        CHECK(oracle::orientation_is_transitive(c4, *o, {}));
        auto c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        CHECK_FALSE(transitive_orientation(c5, {}).has_value());
        CHECK_FALSE(oracle::transitive_orientation_exists_bruteforce(c5, {}));
    }
    SUBCASE("sink requirements") {
        auto path = from_edges(3, {{0, 1}, {1, 2}});
        auto ends = transitive_orientation(path, {0, 2});
        REQUIRE(ends.has_value());
        CHECK(oracle::orientation_is_transitive(path, *ends, {0, 2}));
        auto mid = transitive_orientation(path, {1});
        REQUIRE(mid.has_value());
        CHECK(oracle::orientation_is_transitive(path, *mid, {1}));
        auto edge = from_edges(2, {{0, 1}});
        CHECK_FALSE(transitive_orientation(edge, {0, 1}).has_value());
        CHECK_THROWS_AS(transitive_orientation(edge, {5}), std::invalid_argument);
    }
    SUBCASE("agrees with exhaustive search on random complexes") {
        std::mt19937 rng(7u);
        std::uniform_int_distribution<int> sink_d(0, 4);
        for (int t = 0; t < 60; ++t) {
            auto c = random_complex(rng, 5, 6);
            std::vector<int> sinks;
            if (t % 2) sinks.push_back(sink_d(rng));
            auto mine = transitive_orientation(c, sinks);
            bool exists = oracle::transitive_orientation_exists_bruteforce(c, sinks);
            CHECK(mine.has_value() == exists);
            if (mine) CHECK(oracle::orientation_is_transitive(c, *mine, sinks));
        }
    }
}

TEST_CASE("order complex recognition") {
    SUBCASE("full triangle gives a three-chain") {
        auto w = is_order_complex(from_edges(3, {{0, 1, 2}}));
        REQUIRE(w.has_value());
        CHECK(is_valid_poset(w->poset));
        CHECK(maximal_chains(w->poset) == std::vector<std::vector<int>>{{0, 1, 2}});
    }
    SUBCASE("hollow triangle and five-cycle fail") {
        CHECK_FALSE(is_order_complex(from_edges(3, {{0, 1}, {0, 2}, {1, 2}})).has_value());
        CHECK_FALSE(
            is_order_complex(from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).has_value());
    }
    SUBCASE("antichain") {
        auto w = is_order_complex(from_edges(3, {{0}, {1}, {2}}));
        REQUIRE(w.has_value());
        CHECK(w->orientation.edges.empty());
    }
    SUBCASE("nerve of the witness reproduces the complex") {
        std::vector<Poset> posets{fence_poset(), chain_poset(4)};
        for (const auto& p : posets) {
            auto c = nerve(p);
            auto w = is_order_complex(c);
            REQUIRE(w.has_value());
            auto back = nerve(w->poset);
            auto iso = complex_isomorphic(c, back);
            REQUIRE(iso.has_value());
        }
    }
}

TEST_CASE("weighted complex recognition") {
    SUBCASE("weight violations") {
        auto r = is_kleene_complex(from_edges(2, {{0, 1}}, {1, 3}));
        CHECK(r.failed_condition == 'a');
        CHECK(r.detail == "vertex b has weight 3");
    }
    SUBCASE("hollow triangle fails on the missing face") {
        auto r = is_kleene_complex(from_edges(3, {{0, 1}, {0, 2}, {1, 2}}, {2, 2, 2}));
        CHECK(r.failed_condition == 'b');
        CHECK(r.detail == "minimal non-face {a,b,c}");
    }
    SUBCASE("adjacent weight-1 vertices fail on orientation") {
        auto r = is_kleene_complex(from_edges(2, {{0, 1}}, {1, 1}));
        CHECK(r.failed_condition == 'c');
        CHECK_FALSE(r.witness.has_value());
    }
    SUBCASE("five-cycle fails on orientation") {
        auto r = is_kleene_complex(
            from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, std::vector<int>(5, 2)));
        CHECK(r.failed_condition == 'c');
    }
    SUBCASE("accepted examples carry witnesses with weight-1 sinks") {
        std::vector<WeightedComplex> good{
            from_edges(3, {{0, 1, 2}}, {1, 2, 2}),
            weighted_nerve(ktilde()),
            weighted_nerve(dual_D(chain_kleene(6))),
            make_complex({}, {}, {}),
            from_edges(1, {{0}}, {2}),
            from_edges(1, {{0}}, {1}),
        };
        for (const auto& c : good) {
            auto r = is_kleene_complex(c);
            REQUIRE(r.witness.has_value());
            CHECK(r.failed_condition == 0);
            std::vector<int> sinks;
            for (int v = 0; v < c.size(); ++v)
                if (c.weights[v] == 1) sinks.push_back(v);
            CHECK(oracle::orientation_is_transitive(c, r.witness->orientation, sinks));
            // weight-1 vertices end up maximal in the witness order
            auto mx = maximal_elements(r.witness->poset);
            for (int v : sinks) CHECK(std::count(mx.begin(), mx.end(), v) == 1);
        }
    }
}

TEST_CASE("poset embedding into the scalar grid") {
    SUBCASE("single points") {
        Poset p;
        p.names = {"v"};
        p.leq = BitMatrix(1);
        p.leq.set(0, 0, true);
        CHECK(embed_poset(p, {1}) == std::vector<Tuple>{{KV1, KV1}});
        CHECK(embed_poset(p, {2}) == std::vector<Tuple>{{KVH, KV1}});
    }
    SUBCASE("three-chain with a designated top") {
        auto img = embed_poset(chain_poset(3), {2, 2, 1});
        REQUIRE(img.size() == 3);
        CHECK(img[0] == Tuple{KVH, KV1, KVH, KVH});
        CHECK(img[1] == Tuple{KVH, KV1, KV1, KVH});
        CHECK(img[2] == Tuple{KV1, KV1, KV1, KV1});
    }
    SUBCASE("two-antichain of designated points") {
        Poset p;
        p.names = letters(2);
        p.leq = BitMatrix(2);
        p.leq.set(0, 0, true);
        p.leq.set(1, 1, true);
        auto img = embed_poset(p, {1, 1});
        CHECK(img[0] == Tuple{KV1, KV1, KV0});
        CHECK(img[1] == Tuple{KV1, KV0, KV1});
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(embed_poset(chain_poset(2), {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(embed_poset(chain_poset(2), {2, 3}), std::invalid_argument);
        CHECK_THROWS_AS(embed_poset(chain_poset(2), {2}), std::invalid_argument);
    }
    SUBCASE("embedding properties") {
        struct Case {
            Poset p;
            std::vector<int> w;
        };
        std::vector<Case> cases{
            {fence_poset(), {2, 2, 1, 2}},
            {fence_poset(), {2, 2, 2, 2}},
            {fence_poset(), {2, 2, 1, 1}},
            {chain_poset(3), {2, 2, 1}},
            {chain_poset(3), {2, 2, 2}},
            {chain_poset(1), {1}},
        };
        for (const auto& [p, w] : cases) {
            auto img = embed_poset(p, w);
            const int m = static_cast<int>(p.names.size());
            for (int i = 0; i < m; ++i) {
                // image denominator matches the weight
                bool has_half = std::count(img[i].begin(), img[i].end(), KVH) > 0;
                CHECK((has_half ? 2 : 1) == w[i]);
                for (int j = 0; j < m; ++j)
                    CHECK(p.leq.test(i, j) == tuple_prec(img[i], img[j]));
            }
            // the induced subspace has the expected weighted nerve
            auto sub = subspace_from_subset(img, m + 1);
            auto wn = weighted_nerve(sub);
            auto target = make_complex(p.names, w, maximal_chains(p));
            CHECK(complex_isomorphic(wn, target).has_value());
        }
    }
}

TEST_CASE("complex isomorphism") {
    SUBCASE("permuted copies are isomorphic with a verified witness") {
        std::mt19937 rng(99u);
        for (int t = 0; t < 25; ++t) {
            auto c = random_complex(rng, 6, 6);
            std::vector<int> perm(6);
            for (int i = 0; i < 6; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int v = 0; v < 6; ++v) c.weights[v] = 1 + (rng() % 2);
            auto d = permuted_copy(c, perm);
            auto iso = complex_isomorphic(c, d);
            REQUIRE(iso.has_value());
            std::set<std::vector<int>> faces_d;
            for (const auto& f : all_faces(d)) faces_d.insert(f);
            for (const auto& f : all_faces(c)) {
                std::vector<int> img;
                for (int v : f) img.push_back((*iso)[v]);
                std::sort(img.begin(), img.end());
                CHECK(faces_d.count(img) == 1);
            }
            for (int v = 0; v < 6; ++v) CHECK(c.weights[v] == d.weights[(*iso)[v]]);
        }
    }
    SUBCASE("distinguishes path from star") {
        auto path = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        auto star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        CHECK_FALSE(complex_isomorphic(path, star).has_value());
        CHECK_FALSE(oracle::complex_iso_exists_bruteforce(path, star));
    }
    SUBCASE("weights matter") {
        auto a = from_edges(2, {{0, 1}}, {1, 2});
        auto b = from_edges(2, {{0, 1}}, {2, 2});
        CHECK_FALSE(complex_isomorphic(a, b).has_value());
    }
    SUBCASE("agrees with exhaustive search on random pairs") {
        std::mt19937 rng(4242u);
        for (int t = 0; t < 30; ++t) {
            auto a = random_complex(rng, 5, 5);
            auto b = random_complex(rng, 5, 5);
            CHECK(complex_isomorphic(a, b).has_value() ==
                  oracle::complex_iso_exists_bruteforce(a, b));
        }
    }
    SUBCASE("empty complexes are isomorphic") {
        auto e = make_complex({}, {}, {});
        auto iso = complex_isomorphic(e, e);
        REQUIRE(iso.has_value());
        CHECK(iso->empty());
    }
}
