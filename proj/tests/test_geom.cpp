#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "kleenemv/geom.hpp"
#include "oracles.hpp"

using namespace kleenemv;
namespace oracle = kleenemv_oracles;

namespace {

RatVec rv(std::initializer_list<Rat> cs) {
    RatVec out(cs);
    for (auto& c : out) c.canonicalize();
    return out;
}

Rat half() { return Rat(1, 2); }

RatVec tuple_point(const Tuple& t) {
    RatVec out;
    for (Kv v : t) out.push_back(rat(static_cast<int>(v), 2));
    return out;
}

std::vector<Int> ints(std::initializer_list<long> vs) {
    std::vector<Int> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("denominators and homogeneous correspondents") {
    CHECK(den(rv({half(), Rat(3, 4)})) == 4);
    CHECK(den(rv({Rat(0), Rat(1), Rat(1)})) == 1);
    CHECK(den(rv({half(), half(), Rat(0)})) == 2);
    CHECK(den(RatVec{}) == 1);

    CHECK(homogeneous(rv({half(), Rat(3, 4)})) == ints({2, 3, 4}));
    CHECK(homogeneous(rv({Rat(0), Rat(0)})) == ints({0, 0, 1}));

    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> num(-6, 6), dn(1, 9);
    for (int t = 0; t < 50; ++t) {
        RatVec v;
        for (int i = 0; i < 3; ++i) v.push_back(rat(num(rng), dn(rng)));
        auto h = homogeneous(v);
        CHECK(h.back() == den(v));
        for (int i = 0; i < 3; ++i) CHECK(Rat(h[i]) == v[i] * Rat(h.back()));
    }
}

TEST_CASE("simplex construction and membership") {
    auto tri = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)})});
    CHECK(tri.dim() == 2);
    CHECK(in_simplex(tri, rv({Rat(1, 4), Rat(1, 4)})));
    CHECK(in_relative_interior(tri, rv({Rat(1, 4), Rat(1, 4)})));
    CHECK(in_simplex(tri, rv({half(), half()})));
    CHECK_FALSE(in_relative_interior(tri, rv({half(), half()})));
    CHECK_FALSE(in_simplex(tri, rv({Rat(1), Rat(1)})));

    CHECK_THROWS_AS(make_simplex({}), std::invalid_argument);
    CHECK_THROWS_AS(make_simplex({rv({Rat(0)}), rv({Rat(0), Rat(1)})}), std::invalid_argument);
    CHECK_THROWS_AS(
        make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(1)}), rv({half(), half()})}),
        std::invalid_argument);
}

TEST_CASE("unimodular simplices") {
    auto unit = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)})});
    CHECK(is_regular_simplex(unit));
    auto good = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({half(), half()})});
    CHECK(is_regular_simplex(good));
    auto bad = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({half(), Rat(1, 3)})});
    CHECK_FALSE(is_regular_simplex(bad));
    auto bad_edge = make_simplex({rv({half(), Rat(0)}), rv({half(), Rat(1)})});
    CHECK_FALSE(is_regular_simplex(bad_edge));

    SUBCASE("agrees with the completion search") {
        std::vector<RationalSimplex> cases{
            unit,
            good,
            bad,
            bad_edge,
            make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(1)})}),
            make_simplex({rv({half(), half()})}),
            make_simplex({rv({Rat(1, 3), Rat(1, 3)})}),
            make_simplex({rv({Rat(0), Rat(0), Rat(0)}), rv({Rat(1), Rat(0), Rat(0)}),
                          rv({half(), half(), Rat(0)})}),
            make_simplex({rv({Rat(2, 3), Rat(1, 3)}), rv({Rat(1), Rat(0)})}),
            make_simplex({rv({Rat(0), half()}), rv({Rat(1), half()})}),
        };
        for (const auto& s : cases)
            CHECK(is_regular_simplex(s) == oracle::regular_completion_bruteforce(s, 2));
    }
}

TEST_CASE("volumes") {
    auto unit = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)})});
    CHECK(simplex_volume(unit) == half());
    auto small =
        make_simplex({rv({half(), half()}), rv({half(), Rat(0)}), rv({Rat(0), Rat(0)})});
    CHECK(simplex_volume(small) == Rat(1, 8));
    auto edge = make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(1)})});
    CHECK(simplex_volume(edge) == 0);
}

TEST_CASE("triangulation validation") {
    std::vector<RatVec> square{rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)}),
                               rv({Rat(1), Rat(1)})};
    SUBCASE("two triangles sharing an edge pass") {
        auto t = make_triangulation(2, square, {{0, 1, 2}, {1, 2, 3}});
        CHECK(validate_triangulation(t).ok);
        CHECK(support_volume(t) == 1);
    }
    SUBCASE("edge-to-interior contact is rejected") {
        std::vector<RatVec> pts{rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)}),
                                rv({half(), half()}), rv({Rat(1), Rat(1)})};
        CHECK_THROWS_WITH_AS(make_triangulation(2, pts, {{0, 1, 2}, {1, 3, 4}}),
                             "intersection: simplices #0 and #1", std::invalid_argument);
    }
    SUBCASE("overlapping segments on a line are rejected") {
        std::vector<RatVec> pts{rv({Rat(0)}), rv({Rat(2, 3)}), rv({Rat(1, 3)}), rv({Rat(1)})};
        auto rep = validate_triangulation(RationalTriangulation{1, pts, {{0, 1}, {2, 3}}});
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.violations[0].law == "intersection");
    }
    SUBCASE("malformed inputs") {
        CHECK_THROWS_WITH_AS(
            make_triangulation(2, {rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(1)}), rv({half(), half()})},
                               {{0, 1, 2}}),
            "affine_independence: simplex #0", std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, {rv({Rat(0), Rat(0)}), rv({Rat(0), Rat(0)})}, {{0, 1}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, {rv({Rat(0), Rat(0)})}, {{0, 1}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, square, {{0, 1, 2}, {0, 1, 2}, {1, 2, 3}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, square, {{0, 1}, {0, 1, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, square, {{0, 1, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(2, square, {{0, 1, 2}, {}}), std::invalid_argument);
        CHECK_THROWS_AS(make_triangulation(1, square, {{0, 1, 2, 3}}), std::invalid_argument);
    }
}

TEST_CASE("the grid triangulation of the cube") {
    SUBCASE("dimension two") {
        auto s2 = kleene_triangulation(2);
        CHECK(s2.points.size() == 9);
        CHECK(s2.simplices.size() == 8);
        CHECK(validate_triangulation(s2).ok);
        CHECK(is_regular_triangulation(s2));
        CHECK(support_volume(s2) == 1);
        for (size_t i = 0; i < s2.simplices.size(); ++i)
            CHECK(simplex_volume(simplex_at(s2, static_cast<int>(i))) == Rat(1, 8));
        CHECK(f_vector(sc_of(s2)) == std::vector<int>{9, 16, 8});
    }
    SUBCASE("dimension one and three") {
        auto s1 = kleene_triangulation(1);
        CHECK(s1.points.size() == 3);
        CHECK(s1.simplices.size() == 2);
        CHECK(support_volume(s1) == 1);

        auto s3 = kleene_triangulation(3);
        CHECK(s3.points.size() == 27);
        CHECK(s3.simplices.size() == 48);
        CHECK(is_regular_triangulation(s3));
        CHECK(support_volume(s3) == 1);
        for (size_t i = 0; i < s3.simplices.size(); ++i)
            CHECK(simplex_volume(simplex_at(s3, static_cast<int>(i))) == Rat(1, 48));
        CHECK(validate_triangulation(s3).ok);
    }
    SUBCASE("simplex count equals the closed-form chain count") {
        long factorial = 1;
        for (int n = 1; n <= 3; ++n) {
            factorial *= n;
            auto t = kleene_triangulation(n);
            CHECK(static_cast<long>(t.simplices.size()) == (1L << n) * factorial);
        }
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(kleene_triangulation(4), std::invalid_argument);
        CHECK_THROWS_AS(kleene_triangulation(0), std::invalid_argument);
    }
}

TEST_CASE("realization of weighted complexes") {
    SUBCASE("the dual triangle of the six-element chain") {
        auto wc = weighted_nerve(dual_D(chain_kleene(6)));
        auto t = realize(wc);
        CHECK(t.ambient == 3);
        REQUIRE(t.simplices.size() == 1);
        CHECK(t.simplices[0] == std::vector<int>{0, 1, 2});
        std::multiset<Int> dens;
        for (const auto& p : t.points) dens.insert(den(p));
        CHECK(dens == std::multiset<Int>{1, 2, 2});
        CHECK(validate_triangulation(t).ok);
        CHECK(is_regular_triangulation(t));
    }
    SUBCASE("two isolated weight-2 vertices") {
        auto wc = make_complex({"u", "v"}, {2, 2}, {{0}, {1}});
        auto t = realize(wc);
        REQUIRE(t.points.size() == 2);
        CHECK(t.points[0] == rv({half(), Rat(0)}));
        CHECK(t.points[1] == rv({Rat(0), half()}));
        CHECK(t.simplices == std::vector<std::vector<int>>{{0}, {1}});
    }
    SUBCASE("abstraction round trip and weight preservation") {
        std::vector<WeightedComplex> suite{
            weighted_nerve(ktilde()),
            weighted_nerve(dual_D(chain_kleene(6))),
            weighted_nerve(power_space(2)),
            make_complex({"a", "b", "c", "d"}, {2, 1, 2, 1}, {{0, 1}, {0, 2}, {2, 3}}),
        };
        for (const auto& wc : suite) {
            auto t = realize(wc);
            CHECK(validate_triangulation(t).ok);
            CHECK(is_regular_triangulation(t));
            for (int i = 0; i < wc.size(); ++i) CHECK(den(t.points[i]) == wc.weights[i]);
            auto back = sc_of(t);
            CHECK(complex_isomorphic(back, wc).has_value());
        }
    }
}

TEST_CASE("defining systems of grid-chain simplices") {
    SUBCASE("a full triangle") {
        auto s = make_simplex({rv({half(), half()}), rv({Rat(1), half()}), rv({Rat(1), Rat(1)})});
        auto sys = simplex_system(s);
        CHECK(sys.coord == std::vector<int>{1, 0});
        CHECK(sys.negated == std::vector<bool>{false, false});
        CHECK(sys.equal == std::vector<bool>{false, false, false});
        CHECK(system_satisfied(sys, rv({Rat(3, 4), Rat(5, 8)})));
        CHECK_FALSE(system_satisfied(sys, rv({Rat(1, 4), Rat(1, 4)})));
    }
    SUBCASE("the center vertex pins everything except the top relation") {
        auto s = make_simplex({rv({half(), half()})});
        auto sys = simplex_system(s);
        CHECK(sys.equal == std::vector<bool>{true, true, false});
        int hits = 0;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                hits += system_satisfied(sys, rv({Rat(a, 4), Rat(b, 4)}));
        CHECK(hits == 1);
    }
    SUBCASE("an edge with a constant-one coordinate") {
        auto s = make_simplex({rv({Rat(1), half()}), rv({Rat(1), Rat(1)})});
        auto sys = simplex_system(s);
        CHECK(sys.equal == std::vector<bool>{false, false, true});
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(simplex_system(make_simplex({rv({Rat(1, 4), Rat(0)})})),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            simplex_system(make_simplex({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(1)})})),
            std::invalid_argument);
    }
    SUBCASE("membership equivalence for every chain in dimension two") {
        std::vector<Tuple> grid;
        for (long c = 0; c < 9; ++c) grid.push_back(tuple_of(c, 2));
        int chains = 0;
        for (unsigned mask = 1; mask < (1u << 9); ++mask) {
            std::vector<Tuple> pick;
            for (int i = 0; i < 9; ++i)
                if (mask & (1u << i)) pick.push_back(grid[i]);
            bool chain = true;
            for (size_t i = 0; i < pick.size() && chain; ++i)
                for (size_t j = i + 1; j < pick.size() && chain; ++j)
                    if (!tuple_prec(pick[i], pick[j]) && !tuple_prec(pick[j], pick[i]))
                        chain = false;
            if (!chain) continue;
            ++chains;
            std::vector<RatVec> verts;
            for (const auto& t : pick) verts.push_back(tuple_point(t));
            auto s = make_simplex(verts);
            auto sys = simplex_system(s);
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; b <= 4; ++b) {
                    RatVec x = rv({Rat(a, 4), Rat(b, 4)});
                    CHECK(system_satisfied(sys, x) == in_simplex(s, x));
                }
        }
        CHECK(chains == 33);  // 9 + 16 + 8, the face count of the order complex
    }
    SUBCASE("membership spot check for the maximal cells in dimension three") {
        auto s3 = kleene_triangulation(3);
        std::mt19937 rng(5u);
        std::uniform_int_distribution<int> q(0, 4);
        for (size_t i = 0; i < s3.simplices.size(); ++i) {
            auto s = simplex_at(s3, static_cast<int>(i));
            auto sys = simplex_system(s);
            for (int t = 0; t < 40; ++t) {
                RatVec x = rv({Rat(q(rng), 4), Rat(q(rng), 4), Rat(q(rng), 4)});
                CHECK(system_satisfied(sys, x) == in_simplex(s, x));
            }
        }
    }
}

TEST_CASE("solution subtriangulations") {
    SUBCASE("no relations give the full triangulation") {
        auto t = sigma_theta({}, 2);
        auto s2 = kleene_triangulation(2);
        CHECK(t.points == s2.points);
        CHECK(t.simplices == s2.simplices);
    }
    SUBCASE("equating the two projections carves the diagonal") {
        auto t = sigma_theta({{projection_table(2, 0), projection_table(2, 1)}}, 2);
        REQUIRE(t.points.size() == 3);
        CHECK(t.points[0] == rv({Rat(0), Rat(0)}));
        CHECK(t.points[1] == rv({half(), half()}));
        CHECK(t.points[2] == rv({Rat(1), Rat(1)}));
        CHECK(t.simplices == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
        CHECK(support_volume(t) == 0);
    }
    SUBCASE("a coordinate equated with its negation pins it to one half") {
        auto p = projection_table(2, 0);
        auto t = sigma_theta({{p, table_neg(p)}}, 2);
        REQUIRE(t.points.size() == 3);
        CHECK(t.simplices.size() == 2);
        for (const auto& pt : t.points) CHECK(pt[0] == half());
    }
    SUBCASE("arity mismatch") {
        CHECK_THROWS_AS(sigma_theta({{projection_table(3, 0), projection_table(3, 1)}}, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("point location") {
    auto s2 = kleene_triangulation(2);
    SUBCASE("an interior point of a maximal cell") {
        auto loc = locate(s2, rv({Rat(5, 8), Rat(1, 8)}));
        REQUIRE(loc.has_value());
        CHECK(loc->face == std::vector<int>{1, 2, 4});
        CHECK(loc->coords == std::vector<Rat>{half(), Rat(1, 4), Rat(1, 4)});
    }
    SUBCASE("a point on a shared edge reports the edge") {
        auto loc = locate(s2, rv({Rat(1, 4), Rat(1, 4)}));
        REQUIRE(loc.has_value());
        CHECK(loc->face == std::vector<int>{0, 4});
        CHECK(loc->coords == std::vector<Rat>{half(), half()});
    }
    SUBCASE("vertices give indicators") {
        auto loc = locate(s2, rv({half(), half()}));
        REQUIRE(loc.has_value());
        CHECK(loc->face == std::vector<int>{4});
        CHECK(loc->coords == std::vector<Rat>{Rat(1)});
    }
    SUBCASE("outside the cube") {
        CHECK_FALSE(locate(s2, rv({Rat(2), Rat(2)})).has_value());
        CHECK_THROWS_AS(locate(s2, rv({Rat(1)})), std::invalid_argument);
    }
    SUBCASE("located faces reproduce the point") {
        std::mt19937 rng(31u);
        std::uniform_int_distribution<int> num(0, 8);
        for (int t = 0; t < 60; ++t) {
            RatVec x = rv({Rat(num(rng), 8), Rat(num(rng), 8)});
            auto loc = locate(s2, x);
            REQUIRE(loc.has_value());
            Rat sum(0);
            RatVec rebuilt(2, Rat(0));
            for (size_t i = 0; i < loc->face.size(); ++i) {
                CHECK(loc->coords[i] > 0);
                sum += loc->coords[i];
                for (int c = 0; c < 2; ++c)
                    rebuilt[c] += loc->coords[i] * s2.points[loc->face[i]][c];
            }
            CHECK(sum == 1);
            CHECK(rebuilt == x);
        }
    }
}

TEST_CASE("mediant subdivision") {
    SUBCASE("the unit segment splits at one half") {
        auto seg = make_triangulation(1, {rv({Rat(0)}), rv({Rat(1)})}, {{0, 1}});
        auto st = farey_star(seg, 0, 1);
        REQUIRE(st.points.size() == 3);
        CHECK(st.points[2] == rv({half()}));
        CHECK(st.simplices == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
        CHECK(validate_triangulation(st).ok);
    }
    SUBCASE("a half-grid edge inserts one third, then two fifths") {
        auto s1 = kleene_triangulation(1);
        auto st = farey_star(s1, 0, 1);
        REQUIRE(st.points.size() == 4);
        CHECK(st.points[3] == rv({Rat(1, 3)}));
        CHECK(support_volume(st) == 1);
        CHECK(is_regular_triangulation(st));
        CHECK(validate_triangulation(st).ok);

        auto st2 = farey_star(st, 1, 3);
        REQUIRE(st2.points.size() == 5);
        CHECK(st2.points[4] == rv({Rat(2, 5)}));
        CHECK(is_regular_triangulation(st2));
        CHECK(support_volume(st2) == 1);
    }
    SUBCASE("starring inside the square keeps support and regularity") {
        auto s2 = kleene_triangulation(2);
        auto st = farey_star(s2, 0, 4);  // edge from the origin to the center
        CHECK(st.points.size() == 10);
        CHECK(st.points[9] == rv({Rat(1, 3), Rat(1, 3)}));
        CHECK(st.simplices.size() == 10);
        CHECK(support_volume(st) == 1);
        CHECK(is_regular_triangulation(st));
        CHECK(validate_triangulation(st).ok);
        std::mt19937 rng(17u);
        std::uniform_int_distribution<int> num(0, 12);
        for (int t = 0; t < 40; ++t) {
            RatVec x = rv({Rat(num(rng), 12), Rat(num(rng), 12)});
            CHECK(locate(s2, x).has_value() == locate(st, x).has_value());
        }
    }
    SUBCASE("rejections") {
        auto s2 = kleene_triangulation(2);
        CHECK_THROWS_AS(farey_star(s2, 0, 8), std::invalid_argument);  // opposite corners
        CHECK_THROWS_AS(farey_star(s2, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(farey_star(s2, 0, 99), std::invalid_argument);
    }
}
