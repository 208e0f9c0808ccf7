#include "kleenemv/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleenemv {

namespace {

struct TableBuild {
    bool ok = false;
    AlgebraOps ops;
    std::vector<LawViolation> violations;
};

// Computes meet/join tables by bounded search over the order; reports every
// structural defect it can see instead of throwing.
TableBuild build_tables(const FiniteKleeneAlgebra& a) {
    TableBuild out;
    int n = a.size();
    auto bad = [&](const std::string& law, const std::string& witness) {
        out.violations.push_back({law, witness});
    };

    if (a.leq.size() != n || static_cast<int>(a.neg.size()) != n) {
        bad("malformed", "relation or negation table size differs from the carrier");
        return out;
    }
    if (n == 0) {
        bad("malformed", "empty carrier");
        return out;
    }
    if (a.bot < 0 || a.bot >= n || a.top < 0 || a.top >= n) {
        bad("malformed", "bot/top outside the carrier");
        return out;
    }
    for (int i = 0; i < n; ++i)
        if (a.neg[i] < 0 || a.neg[i] >= n) {
            bad("malformed", "negation of " + a.elements[i] + " outside the carrier");
            return out;
        }

    if (!a.leq.is_reflexive()) bad("reflexivity", "leq is not reflexive");
    if (!a.leq.is_antisymmetric()) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a.le(i, j) && a.le(j, i)) {
                    bad("antisymmetry", a.elements[i] + " and " + a.elements[j] +
                                            " are distinct but mutually below each other");
                    return out;
                }
    }
    if (!a.leq.is_transitive()) {
        bad("transitivity", "leq is not transitively closed");
        return out;
    }
    if (!out.violations.empty()) return out;

    // down-sets as bit rows let glb search intersect candidate sets directly
    int words = a.leq.words_per_row();
    std::vector<std::vector<uint64_t>> down(n, std::vector<uint64_t>(words, 0));
    std::vector<std::vector<uint64_t>> up(n, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.le(j, i)) down[i][j / 64] |= uint64_t(1) << (j % 64);
            if (a.le(i, j)) up[i][j / 64] |= uint64_t(1) << (j % 64);
        }

    auto extreme = [&](const std::vector<uint64_t>& candidates,
                       const std::vector<std::vector<uint64_t>>& dominates) -> int {
        // element z among candidates with candidates subseteq dominates[z]
        for (int w = 0; w < words; ++w) {
            uint64_t bits = candidates[w];
            while (bits) {
                int z = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                bool all = true;
                for (int v = 0; v < words && all; ++v)
                    if (candidates[v] & ~dominates[z][v]) all = false;
                if (all) return z;
            }
        }
        return -1;
    };

    AlgebraOps ops;
    ops.n = n;
    ops.meet.assign(static_cast<size_t>(n) * n, -1);
    ops.join.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            std::vector<uint64_t> lower(words), upper(words);
            for (int w = 0; w < words; ++w) {
                lower[w] = down[x][w] & down[y][w];
                upper[w] = up[x][w] & up[y][w];
            }
            int m = extreme(lower, down);
            int j = extreme(upper, up);
            if (m < 0) {
                bad("lattice", "no meet of " + a.elements[x] + " and " + a.elements[y]);
                return out;
            }
            if (j < 0) {
                bad("lattice", "no join of " + a.elements[x] + " and " + a.elements[y]);
                return out;
            }
            ops.meet[static_cast<size_t>(x) * n + y] = m;
            ops.meet[static_cast<size_t>(y) * n + x] = m;
            ops.join[static_cast<size_t>(x) * n + y] = j;
            ops.join[static_cast<size_t>(y) * n + x] = j;
        }

    out.ok = true;
    out.ops = std::move(ops);
    return out;
}

}  // namespace

ValidationReport validate_kleene_algebra(const FiniteKleeneAlgebra& a) {
    ValidationReport rep;
    TableBuild tb = build_tables(a);
    rep.violations = tb.violations;
    if (!tb.ok) {
        rep.ok = false;
        return rep;
    }
    const AlgebraOps& ops = tb.ops;
    int n = a.size();
    auto bad = [&](const std::string& law, const std::string& witness) {
        rep.violations.push_back({law, witness});
    };
    auto el = [&](int i) { return a.elements[i]; };

    for (int x = 0; x < n; ++x) {
        if (!a.le(a.bot, x)) {
            bad("bounds", el(x) + " is not above bot");
            break;
        }
        if (!a.le(x, a.top)) {
            bad("bounds", el(x) + " is not below top");
            break;
        }
    }

    bool dist_done = false;
    for (int x = 0; x < n && !dist_done; ++x)
        for (int y = 0; y < n && !dist_done; ++y)
            for (int z = 0; z < n && !dist_done; ++z) {
                int lhs = ops.meet_of(x, ops.join_of(y, z));
                int rhs = ops.join_of(ops.meet_of(x, y), ops.meet_of(x, z));
                if (lhs != rhs) {
                    bad("distributivity",
                        el(x) + " meet (" + el(y) + " join " + el(z) + ") differs from (" +
                            el(x) + " meet " + el(y) + ") join (" + el(x) + " meet " + el(z) + ")");
                    dist_done = true;
                }
            }

    for (int x = 0; x < n; ++x)
        if (a.neg[a.neg[x]] != x) {
            bad("involution", "double negation moves " + el(x));
            break;
        }
    bool dm_done = false;
    for (int x = 0; x < n && !dm_done; ++x)
        for (int y = 0; y < n && !dm_done; ++y)
            if (a.neg[ops.meet_of(x, y)] != ops.join_of(a.neg[x], a.neg[y])) {
                bad("de_morgan",
                    "neg(" + el(x) + " meet " + el(y) + ") differs from neg " + el(x) +
                        " join neg " + el(y));
                dm_done = true;
            }

    bool kleene_done = false;
    for (int x = 0; x < n && !kleene_done; ++x)
        for (int y = 0; y < n && !kleene_done; ++y) {
            int lo = ops.meet_of(x, a.neg[x]);
            int hi = ops.join_of(y, a.neg[y]);
            if (!a.le(lo, hi)) {
                bad("kleene",
                    el(x) + " meet neg " + el(x) + " is not below " + el(y) + " join neg " + el(y));
                kleene_done = true;
            }
        }

    rep.ok = rep.violations.empty();
    return rep;
}

AlgebraOps algebra_ops(const FiniteKleeneAlgebra& a) {
    ValidationReport rep = validate_kleene_algebra(a);
    if (!rep.ok)
        throw std::invalid_argument("invalid Kleene algebra: " + rep.violations.front().law +
                                    " (" + rep.violations.front().witness + ")");
    return build_tables(a).ops;
}

FiniteKleeneAlgebra chain_kleene(int size) {
    if (size < 1) throw std::invalid_argument("chain size must be positive");
    FiniteKleeneAlgebra a;
    a.elements.resize(size);
    for (int i = 0; i < size; ++i) {
        if (i == 0)
            a.elements[i] = "0";
        else if (i == size - 1)
            a.elements[i] = "1";
        else
            a.elements[i] = std::string(1, static_cast<char>('a' + i - 1));
    }
    if (size == 1) a.elements[0] = "0=1";
    a.leq = BitMatrix(size);
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) a.leq.set(i, j);
    a.neg.resize(size);
    for (int i = 0; i < size; ++i) a.neg[i] = size - 1 - i;
    a.bot = 0;
    a.top = size - 1;
    return a;
}

FiniteKleeneAlgebra standard_K() {
    FiniteKleeneAlgebra a = chain_kleene(3);
    a.elements = {"0", "1/2", "1"};
    return a;
}

FiniteKleeneAlgebra product(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b) {
    int na = a.size(), nb = b.size();
    FiniteKleeneAlgebra p;
    p.elements.reserve(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            p.elements.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
    int n = na * nb;
    p.leq = BitMatrix(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    if (a.le(i, k) && b.le(j, l)) p.leq.set(i * nb + j, k * nb + l);
    p.neg.resize(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) p.neg[i * nb + j] = a.neg[i] * nb + b.neg[j];
    p.bot = a.bot * nb + b.bot;
    p.top = a.top * nb + b.top;
    return p;
}

FiniteKleeneAlgebra subalgebra(const FiniteKleeneAlgebra& a, std::vector<int> carrier) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    for (int x : carrier)
        if (x < 0 || x >= a.size()) throw std::invalid_argument("carrier index out of range");

    AlgebraOps ops = algebra_ops(a);
    std::vector<int> pos(a.size(), -1);
    for (size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
    auto require = [&](int x, const std::string& what) {
        if (pos[x] < 0)
            throw std::invalid_argument("carrier not closed: " + what + " = " + a.elements[x] +
                                        " is missing");
    };
    require(a.bot, "bot");
    require(a.top, "top");
    for (int x : carrier) require(a.neg[x], "neg " + a.elements[x]);
    for (int x : carrier)
        for (int y : carrier) {
            require(ops.meet_of(x, y), a.elements[x] + " meet " + a.elements[y]);
            require(ops.join_of(x, y), a.elements[x] + " join " + a.elements[y]);
        }

    FiniteKleeneAlgebra s;
    int n = static_cast<int>(carrier.size());
    s.elements.reserve(n);
    for (int x : carrier) s.elements.push_back(a.elements[x]);
    s.leq = BitMatrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.le(carrier[i], carrier[j])) s.leq.set(i, j);
    s.neg.resize(n);
    for (int i = 0; i < n; ++i) s.neg[i] = pos[a.neg[carrier[i]]];
    s.bot = pos[a.bot];
    s.top = pos[a.top];
    return s;
}

namespace {

struct HomSearch {
    const FiniteKleeneAlgebra& a;
    const FiniteKleeneAlgebra& b;
    AlgebraOps oa, ob;
    std::vector<int> order;           // linear extension of a
    std::vector<int> assigned;        // element -> value or -1
    std::vector<int> pinned;          // value forced by earlier assignments, or -1
    std::vector<std::pair<int, int>> trail;  // pins to undo, (element, previous)
    std::vector<std::vector<std::pair<int, int>>> join_pairs;  // x -> pairs with join x
    std::vector<KleeneHom> results;

    HomSearch(const FiniteKleeneAlgebra& a_, const FiniteKleeneAlgebra& b_)
        : a(a_), b(b_), oa(algebra_ops(a_)), ob(algebra_ops(b_)) {
        Poset pa{a.elements, a.leq};
        order = linear_extension(pa);
        assigned.assign(a.size(), -1);
        pinned.assign(a.size(), -1);
        join_pairs.resize(a.size());
        for (int x = 0; x < a.size(); ++x)
            for (int y = x + 1; y < a.size(); ++y) {
                int j = oa.join_of(x, y);
                if (j != x && j != y) join_pairs[j].push_back({x, y});
            }
    }

    bool pin(int x, int v, size_t trail_mark) {
        (void)trail_mark;
        if (assigned[x] >= 0) return assigned[x] == v;
        if (pinned[x] >= 0) return pinned[x] == v;
        trail.push_back({x, pinned[x]});
        pinned[x] = v;
        return true;
    }

    bool consistent(int x, int v) {
        if (x == a.bot && v != b.bot) return false;
        if (x == a.top && v != b.top) return false;
        if (pinned[x] >= 0 && pinned[x] != v) return false;
        for (int y = 0; y < a.size(); ++y) {
            if (assigned[y] < 0 || y == x) continue;
            int w = assigned[y];
            if (a.le(y, x) && !b.le(w, v)) return false;
            if (a.le(x, y) && !b.le(v, w)) return false;
            int m = oa.meet_of(x, y);
            if (assigned[m] >= 0) {
                int need = ob.meet_of(v, w);
                if (m == x ? need != v : assigned[m] != need) return false;
            }
        }
        for (auto [y, z] : join_pairs[x]) {
            if (assigned[y] >= 0 && assigned[z] >= 0 &&
                ob.join_of(assigned[y], assigned[z]) != v)
                return false;
        }
        int nx = a.neg[x];
        if (nx != x && assigned[nx] >= 0 && assigned[nx] != b.neg[v]) return false;
        if (nx == x && b.neg[v] != v) return false;
        return true;
    }

    // Pin values newly forced by assigning x = v; false on clash.
    bool propagate(int x, int v) {
        size_t mark = trail.size();
        int nx = a.neg[x];
        if (assigned[nx] < 0 && !pin(nx, b.neg[v], mark)) return false;
        for (int y = 0; y < a.size(); ++y) {
            if (assigned[y] < 0) continue;
            int j = oa.join_of(x, y);
            if (assigned[j] < 0 && !pin(j, ob.join_of(v, assigned[y]), mark)) return false;
        }
        return true;
    }

    void search(size_t depth) {
        if (depth == order.size()) {
            KleeneHom h;
            h.map = assigned;
            results.push_back(std::move(h));
            return;
        }
        int x = order[depth];
        int lo = 0, hi = b.size();
        if (pinned[x] >= 0) {
            lo = pinned[x];
            hi = lo + 1;
        }
        for (int v = lo; v < hi; ++v) {
            if (!consistent(x, v)) continue;
            size_t mark = trail.size();
            assigned[x] = v;
            if (propagate(x, v)) search(depth + 1);
            assigned[x] = -1;
            while (trail.size() > mark) {
                pinned[trail.back().first] = trail.back().second;
                trail.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<KleeneHom> hom_enumerate(const FiniteKleeneAlgebra& a, const FiniteKleeneAlgebra& b) {
    HomSearch s(a, b);
    s.search(0);
    std::sort(s.results.begin(), s.results.end(),
              [](const KleeneHom& x, const KleeneHom& y) { return x.map < y.map; });
    return s.results;
}

namespace {

struct IsoSearch {
    const FiniteKleeneAlgebra& a;
    const FiniteKleeneAlgebra& b;
    AlgebraOps oa, ob;
    std::vector<int> order;
    std::vector<int> image;  // a-element -> b-element or -1
    std::vector<char> used;
    std::vector<long> profile_a, profile_b;

    IsoSearch(const FiniteKleeneAlgebra& a_, const FiniteKleeneAlgebra& b_)
        : a(a_), b(b_), oa(algebra_ops(a_)), ob(algebra_ops(b_)) {
        Poset pa{a.elements, a.leq};
        order = linear_extension(pa);
        image.assign(a.size(), -1);
        used.assign(b.size(), 0);
        profile_a = profiles(a);
        profile_b = profiles(b);
    }

    static std::vector<long> profiles(const FiniteKleeneAlgebra& x) {
        int n = x.size();
        std::vector<long> p(n);
        for (int i = 0; i < n; ++i) {
            long down = 0, up = 0;
            for (int j = 0; j < n; ++j) {
                if (x.le(j, i)) ++down;
                if (x.le(i, j)) ++up;
            }
            p[i] = (down * (n + 1) + up) * 2 + (x.neg[i] == i ? 1 : 0);
        }
        return p;
    }

    bool consistent(int x, int v) {
        if (profile_a[x] != profile_b[v]) return false;
        if ((x == a.bot) != (v == b.bot)) return false;
        if ((x == a.top) != (v == b.top)) return false;
        for (int y = 0; y < a.size(); ++y) {
            if (image[y] < 0 || y == x) continue;
            int w = image[y];
            if (a.le(x, y) != b.le(v, w)) return false;
            if (a.le(y, x) != b.le(w, v)) return false;
            int m = oa.meet_of(x, y);
            if (image[m] >= 0 && image[m] != ob.meet_of(v, w)) return false;
            int j = oa.join_of(x, y);
            if (image[j] >= 0 && image[j] != ob.join_of(v, w)) return false;
        }
        int nx = a.neg[x];
        if (image[nx] >= 0 && image[nx] != b.neg[v]) return false;
        return true;
    }

    bool search(size_t depth) {
        if (depth == order.size()) return true;
        int x = order[depth];
        for (int v = 0; v < b.size(); ++v) {
            if (used[v] || !consistent(x, v)) continue;
            image[x] = v;
            used[v] = 1;
            if (search(depth + 1)) return true;
            image[x] = -1;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic_alg(const FiniteKleeneAlgebra& a,
                                                  const FiniteKleeneAlgebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch s(a, b);
    if (s.search(0)) return s.image;
    return std::nullopt;
}

}  // namespace kleenemv
