#include "kleenemv/space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kleenemv {

ValidationReport validate_space(const KleeneSpace& s) {
    ValidationReport rep;
    int n = s.size();
    auto bad = [&](const std::string& law, const std::string& witness) {
        rep.violations.push_back({law, witness});
    };

    if (s.leq.size() != n || s.R.size() != n || static_cast<int>(s.M.size()) != n) {
        bad("malformed", "relation or M size differs from the point set");
        rep.ok = false;
        return rep;
    }

    Poset p{s.points, s.leq};
    if (!s.leq.is_reflexive()) bad("reflexivity", "leq is not reflexive");
    if (!s.leq.is_antisymmetric()) bad("antisymmetry", "leq is not antisymmetric");
    if (!s.leq.is_transitive()) bad("transitivity", "leq is not transitively closed");

    if (rep.violations.empty()) {
        std::vector<char> is_max(n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i && s.le(i, j)) is_max[i] = 0;
        for (int i = 0; i < n; ++i)
            if (s.in_m(i) && !is_max[i]) {
                bad("m_maximal", s.points[i] + " is designated but not maximal");
                break;
            }
    }

    for (int i = 0; i < n; ++i)
        if (!s.rel(i, i)) {
            bad("r_reflexive", "(" + s.points[i] + "," + s.points[i] + ") missing from R");
            break;
        }

    bool done2 = false;
    for (int x = 0; x < n && !done2; ++x) {
        if (!s.in_m(x)) continue;
        for (int y = 0; y < n && !done2; ++y)
            if (s.rel(x, y) && !s.le(y, x)) {
                bad("r_designated",
                    "(" + s.points[x] + "," + s.points[y] + ") in R with " + s.points[x] +
                        " designated, but " + s.points[y] + " is not below it");
                done2 = true;
            }
    }

    bool done3 = false;
    for (int x = 0; x < n && !done3; ++x)
        for (int y = 0; y < n && !done3; ++y) {
            if (!s.rel(x, y)) continue;
            for (int z = 0; z < n && !done3; ++z)
                if (s.le(z, y) && !s.rel(z, x)) {
                    bad("r_down",
                        "(" + s.points[x] + "," + s.points[y] + ") in R and " + s.points[z] +
                            " below " + s.points[y] + ", but (" + s.points[z] + "," +
                            s.points[x] + ") is not in R");
                    done3 = true;
                }
        }

    rep.ok = rep.violations.empty();
    return rep;
}

KleeneSpace ktilde() {
    KleeneSpace s;
    s.points = {"0", "1/2", "1"};
    s.leq = BitMatrix(3);
    s.R = BitMatrix(3);
    s.M = {1, 0, 1};
    for (Kv a = 0; a < 3; ++a)
        for (Kv b = 0; b < 3; ++b) {
            if (kv_prec(a, b)) s.leq.set(a, b);
            if (kv_sim(a, b)) s.R.set(a, b);
        }
    return s;
}

KleeneSpace power_space(int n, int max_n) {
    if (n < 0) throw std::invalid_argument("negative power");
    if (n > max_n)
        throw std::invalid_argument("power " + std::to_string(n) +
                                    " exceeds the guard; raise max_n to override");
    long size = pow3(n);
    KleeneSpace s;
    s.points.reserve(size);
    std::vector<Tuple> pts(size);
    for (long c = 0; c < size; ++c) {
        pts[c] = tuple_of(c, n);
        s.points.push_back(tuple_name(pts[c]));
    }
    s.leq = BitMatrix(static_cast<int>(size));
    s.R = BitMatrix(static_cast<int>(size));
    s.M.assign(size, 0);
    for (long a = 0; a < size; ++a) {
        for (long b = 0; b < size; ++b) {
            if (tuple_prec(pts[a], pts[b])) s.leq.set(a, b);
            if (tuple_sim(pts[a], pts[b])) s.R.set(a, b);
        }
        s.M[a] = tuple_in_m(pts[a]) ? 1 : 0;
    }
    return s;
}

KleeneSpace subspace_from_subset(const std::vector<Tuple>& w, int n) {
    std::vector<Tuple> pts = w;
    for (const Tuple& t : pts) {
        if (static_cast<int>(t.size()) != n) throw std::invalid_argument("tuple arity mismatch");
        for (Kv v : t)
            if (v > 2) throw std::invalid_argument("tuple digit out of range");
    }
    std::sort(pts.begin(), pts.end(),
              [](const Tuple& a, const Tuple& b) { return code_of(a) < code_of(b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    int m = static_cast<int>(pts.size());
    KleeneSpace s;
    s.points.reserve(m);
    for (const Tuple& t : pts) s.points.push_back(tuple_name(t));
    s.leq = BitMatrix(m);
    s.R = BitMatrix(m);
    s.M.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (tuple_prec(pts[a], pts[b])) s.leq.set(a, b);
            if (tuple_sim(pts[a], pts[b])) s.R.set(a, b);
        }
        s.M[a] = tuple_in_m(pts[a]) ? 1 : 0;
    }
    return s;
}

bool is_space_morphism(const KleeneSpace& x, const KleeneSpace& y, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != x.size()) return false;
    for (int v : map)
        if (v < 0 || v >= y.size()) return false;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) {
            if (x.le(a, b) && !y.le(map[a], map[b])) return false;
            if (x.rel(a, b) && !y.rel(map[a], map[b])) return false;
        }
    for (int a = 0; a < x.size(); ++a)
        if (x.in_m(a) && !y.in_m(map[a])) return false;
    return true;
}

namespace {

struct SpaceIsoSearch {
    const KleeneSpace& x;
    const KleeneSpace& y;
    std::vector<int> order, image;
    std::vector<char> used;
    std::vector<long> prof_x, prof_y;

    SpaceIsoSearch(const KleeneSpace& x_, const KleeneSpace& y_) : x(x_), y(y_) {
        Poset px{x.points, x.leq};
        order = linear_extension(px);
        image.assign(x.size(), -1);
        used.assign(y.size(), 0);
        prof_x = profiles(x);
        prof_y = profiles(y);
    }

    static std::vector<long> profiles(const KleeneSpace& s) {
        int n = s.size();
        std::vector<long> p(n);
        for (int i = 0; i < n; ++i) {
            long down = 0, up = 0, rdeg = 0;
            for (int j = 0; j < n; ++j) {
                if (s.le(j, i)) ++down;
                if (s.le(i, j)) ++up;
                if (s.rel(i, j)) ++rdeg;
                if (s.rel(j, i)) ++rdeg;
            }
            p[i] = ((down * (n + 1) + up) * (2 * n + 1) + rdeg) * 2 + (s.in_m(i) ? 1 : 0);
        }
        return p;
    }

    bool consistent(int a, int v) {
        if (prof_x[a] != prof_y[v]) return false;
        if (x.in_m(a) != y.in_m(v)) return false;
        for (int b = 0; b < x.size(); ++b) {
            if (image[b] < 0 || b == a) continue;
            int w = image[b];
            if (x.le(a, b) != y.le(v, w)) return false;
            if (x.le(b, a) != y.le(w, v)) return false;
            if (x.rel(a, b) != y.rel(v, w)) return false;
            if (x.rel(b, a) != y.rel(w, v)) return false;
        }
        return true;
    }

    bool search(size_t depth) {
        if (depth == order.size()) return true;
        int a = order[depth];
        for (int v = 0; v < y.size(); ++v) {
            if (used[v] || !consistent(a, v)) continue;
            image[a] = v;
            used[v] = 1;
            if (search(depth + 1)) return true;
            image[a] = -1;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic_space(const KleeneSpace& x, const KleeneSpace& y) {
    if (x.size() != y.size()) return std::nullopt;
    SpaceIsoSearch s(x, y);
    if (s.search(0)) return s.image;
    return std::nullopt;
}

std::vector<KleeneHom> dual_D_points(const FiniteKleeneAlgebra& b) {
    return hom_enumerate(b, standard_K());
}

namespace {

std::string kv_table_name(const std::vector<int>& values) {
    std::string s;
    s.reserve(values.size());
    for (int v : values) s += kv_char(static_cast<Kv>(v));
    return s;
}

std::string kv_table_name(const std::vector<Kv>& values) {
    std::string s;
    s.reserve(values.size());
    for (Kv v : values) s += kv_char(v);
    return s;
}

}  // namespace

KleeneSpace dual_D(const FiniteKleeneAlgebra& b) {
    std::vector<KleeneHom> homs = dual_D_points(b);
    int n = static_cast<int>(homs.size());
    int m = b.size();
    KleeneSpace s;
    s.points.reserve(n);
    for (const KleeneHom& h : homs) s.points.push_back(kv_table_name(h.map));
    s.leq = BitMatrix(n);
    s.R = BitMatrix(n);
    s.M.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool below = true, sim = true;
            for (int e = 0; e < m && (below || sim); ++e) {
                Kv vi = static_cast<Kv>(homs[i].map[e]);
                Kv vj = static_cast<Kv>(homs[j].map[e]);
                if (!kv_prec(vi, vj)) below = false;
                if (!kv_sim(vi, vj)) sim = false;
            }
            if (below) s.leq.set(i, j);
            if (sim) s.R.set(i, j);
        }
        bool des = true;
        for (int e = 0; e < m && des; ++e)
            if (!kv_in_m(static_cast<Kv>(homs[i].map[e]))) des = false;
        s.M[i] = des ? 1 : 0;
    }
    return s;
}

namespace {

// Backtracking enumeration of structure-preserving maps into ktilde along a
// linear extension, so order constraints against assigned points apply at
// every step.
struct MorphismSearch {
    const KleeneSpace& x;
    std::vector<int> order;
    std::vector<int> value;  // point -> Kv or -1
    std::vector<std::vector<Kv>> results;

    explicit MorphismSearch(const KleeneSpace& x_) : x(x_) {
        Poset p{x.points, x.leq};
        order = linear_extension(p);
        value.assign(x.size(), -1);
    }

    bool consistent(int a, Kv v) {
        if (x.in_m(a) && !kv_in_m(v)) return false;
        if (x.rel(a, a) && !kv_sim(v, v)) return false;
        for (int b = 0; b < x.size(); ++b) {
            if (value[b] < 0 || b == a) continue;
            Kv w = static_cast<Kv>(value[b]);
            if (x.le(b, a) && !kv_prec(w, v)) return false;
            if (x.le(a, b) && !kv_prec(v, w)) return false;
            if (x.rel(a, b) && !kv_sim(v, w)) return false;
            if (x.rel(b, a) && !kv_sim(w, v)) return false;
        }
        return true;
    }

    void search(size_t depth) {
        if (depth == order.size()) {
            std::vector<Kv> table(x.size());
            for (int i = 0; i < x.size(); ++i) table[i] = static_cast<Kv>(value[i]);
            results.push_back(std::move(table));
            return;
        }
        int a = order[depth];
        for (Kv v = 0; v < 3; ++v) {
            if (!consistent(a, v)) continue;
            value[a] = v;
            search(depth + 1);
            value[a] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<Kv>> dual_E_tables(const KleeneSpace& x) {
    MorphismSearch s(x);
    s.search(0);
    std::sort(s.results.begin(), s.results.end());
    return s.results;
}

FiniteKleeneAlgebra dual_E(const KleeneSpace& x) {
    std::vector<std::vector<Kv>> tables = dual_E_tables(x);
    int n = static_cast<int>(tables.size());
    int m = x.size();
    std::map<std::vector<Kv>, int> index;
    for (int i = 0; i < n; ++i) index[tables[i]] = i;

    FiniteKleeneAlgebra a;
    a.elements.reserve(n);
    for (const auto& t : tables) a.elements.push_back(kv_table_name(t));
    a.leq = BitMatrix(n);
    a.neg.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool below = true;
            for (int e = 0; e < m && below; ++e)
                if (tables[i][e] > tables[j][e]) below = false;
            if (below) a.leq.set(i, j);
        }
        std::vector<Kv> nt(m);
        for (int e = 0; e < m; ++e) nt[e] = kv_neg(tables[i][e]);
        auto it = index.find(nt);
        if (it == index.end())
            throw std::logic_error("dual algebra carrier is not closed under negation");
        a.neg[i] = it->second;
    }
    auto find_const = [&](Kv v) {
        auto it = index.find(std::vector<Kv>(m, v));
        if (it == index.end())
            throw std::logic_error("dual algebra carrier is missing a constant map");
        return it->second;
    };
    a.bot = find_const(KV0);
    a.top = find_const(KV1);
    return a;
}

SpaceMorphism dual_D_on_hom(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b,
                            const KleeneHom& f) {
    if (static_cast<int>(f.map.size()) != a.size())
        throw std::invalid_argument("hom domain size mismatch");
    std::vector<KleeneHom> pb = dual_D_points(b);
    std::vector<KleeneHom> pa = dual_D_points(a);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < pa.size(); ++i) index[pa[i].map] = static_cast<int>(i);

    SpaceMorphism out;
    out.map.reserve(pb.size());
    for (const KleeneHom& h : pb) {
        std::vector<int> comp(a.size());
        for (int e = 0; e < a.size(); ++e) comp[e] = h.map[f.map[e]];
        auto it = index.find(comp);
        if (it == index.end())
            throw std::logic_error("precomposition left the dual space");
        out.map.push_back(it->second);
    }
    return out;
}

KleeneHom dual_E_on_morphism(const KleeneSpace& x, const KleeneSpace& y, const SpaceMorphism& g) {
    if (static_cast<int>(g.map.size()) != x.size())
        throw std::invalid_argument("morphism domain size mismatch");
    std::vector<std::vector<Kv>> ty = dual_E_tables(y);
    std::vector<std::vector<Kv>> tx = dual_E_tables(x);
    std::map<std::vector<Kv>, int> index;
    for (size_t i = 0; i < tx.size(); ++i) index[tx[i]] = static_cast<int>(i);

    KleeneHom out;
    out.map.reserve(ty.size());
    for (const auto& t : ty) {
        std::vector<Kv> comp(x.size());
        for (int p = 0; p < x.size(); ++p) comp[p] = t[g.map[p]];
        auto it = index.find(comp);
        if (it == index.end())
            throw std::logic_error("precomposition left the dual algebra");
        out.map.push_back(it->second);
    }
    return out;
}

FiniteKleeneAlgebra free_kleene(int n, int max_n) {
    if (n < 0) throw std::invalid_argument("negative generator count");
    if (n > max_n)
        throw std::invalid_argument("free algebra on " + std::to_string(n) +
                                    " generators exceeds the guard; raise max_n to override");
    return dual_E(power_space(n, n < 4 ? 4 : n));
}

bool kleene_table_is_morphism(int arity, const std::vector<Kv>& values, std::string* witness) {
    long size = pow3(arity);
    if (static_cast<long>(values.size()) != size) {
        if (witness) *witness = "table size differs from 3^arity";
        return false;
    }
    for (Kv v : values)
        if (v > 2) {
            if (witness) *witness = "table value out of range";
            return false;
        }

    // covers of the componentwise order: one 1/2 digit resolved to 0 or 1
    for (long c = 0; c < size; ++c) {
        Tuple t = tuple_of(c, arity);
        long step = 1;
        for (int i = 0; i < arity; ++i, step *= 3) {
            if (t[i] != KVH) continue;
            for (long delta : {-step, step}) {
                long d = c + delta;  // digit i becomes 0 or 2
                if (!kv_prec(values[c], values[d])) {
                    if (witness)
                        *witness = "not order-preserving at " + tuple_name(t) + " vs " +
                                   tuple_name(tuple_of(d, arity));
                    return false;
                }
            }
        }
    }

    // similar pairs, enumerated componentwise
    std::vector<long> partner;
    for (long c = 0; c < size; ++c) {
        Tuple t = tuple_of(c, arity);
        partner.assign(1, 0);
        long step = 1;
        for (int i = 0; i < arity; ++i, step *= 3) {
            std::vector<long> next;
            for (Kv v = 0; v < 3; ++v) {
                if (!kv_sim(t[i], v)) continue;
                for (long base : partner) next.push_back(base + v * step);
            }
            partner.swap(next);
        }
        for (long d : partner)
            if (!kv_sim(values[c], values[d])) {
                if (witness)
                    *witness = "not similarity-preserving at " + tuple_name(t) + " vs " +
                               tuple_name(tuple_of(d, arity));
                return false;
            }
    }

    for (long c = 0; c < size; ++c) {
        Tuple t = tuple_of(c, arity);
        if (tuple_in_m(t) && !kv_in_m(values[c])) {
            if (witness) *witness = "designated point " + tuple_name(t) + " maps to 1/2";
            return false;
        }
    }
    return true;
}

KleeneTable make_kleene_table(int arity, std::vector<Kv> values) {
    std::string witness;
    if (!kleene_table_is_morphism(arity, values, &witness))
        throw std::invalid_argument("not a free-algebra element: " + witness);
    return KleeneTable{arity, std::move(values)};
}

KleeneTable projection_table(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("projection index out of range");
    long size = pow3(n);
    std::vector<Kv> values(size);
    for (long c = 0; c < size; ++c) values[c] = tuple_of(c, n)[i];
    return KleeneTable{n, std::move(values)};
}

KleeneTable constant_table(int n, Kv v) {
    if (v == KVH) throw std::invalid_argument("constant 1/2 is not a free-algebra element");
    return KleeneTable{n, std::vector<Kv>(pow3(n), v)};
}

KleeneTable table_meet(const KleeneTable& f, const KleeneTable& g) {
    if (f.arity != g.arity) throw std::invalid_argument("arity mismatch");
    KleeneTable out{f.arity, f.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = kv_meet(f.values[i], g.values[i]);
    return out;
}

KleeneTable table_join(const KleeneTable& f, const KleeneTable& g) {
    if (f.arity != g.arity) throw std::invalid_argument("arity mismatch");
    KleeneTable out{f.arity, f.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = kv_join(f.values[i], g.values[i]);
    return out;
}

KleeneTable table_neg(const KleeneTable& f) {
    KleeneTable out{f.arity, f.values};
    for (Kv& v : out.values) v = kv_neg(v);
    return out;
}

std::vector<Tuple> sol_K(const std::vector<TermPair>& theta, int n) {
    long size = pow3(n);
    for (const TermPair& p : theta)
        if (p.first.arity != n || p.second.arity != n)
            throw std::invalid_argument("pair arity differs from n");
    std::vector<Tuple> out;
    for (long c = 0; c < size; ++c) {
        bool all = true;
        for (const TermPair& p : theta)
            if (p.first.values[c] != p.second.values[c]) {
                all = false;
                break;
            }
        if (all) out.push_back(tuple_of(c, n));
    }
    return out;
}

TermPair separating_pair(const Tuple& x, const std::vector<Tuple>& w) {
    int n = static_cast<int>(x.size());
    for (const Tuple& t : w) {
        if (t.size() != x.size()) throw std::invalid_argument("arity mismatch in w");
        if (t == x) throw std::invalid_argument("x must lie outside w");
    }
    long size = pow3(n);

    // above[c]: some z in w has z below the point coded c while x is below z
    std::vector<char> above(size, 0);
    for (const Tuple& z : w) {
        if (!tuple_prec(x, z)) continue;
        for (long c = 0; c < size; ++c)
            if (tuple_prec(z, tuple_of(c, n))) above[c] = 1;
    }

    std::vector<Kv> fv(size), gv(size);
    for (long c = 0; c < size; ++c) {
        Tuple y = tuple_of(c, n);
        if (above[c])
            fv[c] = KV1;
        else
            fv[c] = tuple_in_m(y) ? KV0 : KVH;
        if (tuple_prec(x, y))
            gv[c] = KV1;
        else
            gv[c] = tuple_in_m(y) ? KV0 : KVH;
    }
    return {make_kleene_table(n, std::move(fv)), make_kleene_table(n, std::move(gv))};
}

}  // namespace kleenemv
