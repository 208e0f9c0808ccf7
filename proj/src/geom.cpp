#include "kleenemv/geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kleenemv {

Int den(const Rat& r) { return r.get_den(); }

Int den(const RatVec& v) {
    Int d = 1;
    for (const auto& c : v) d = lcm(d, c.get_den());
    return d;
}

std::vector<Int> homogeneous(const RatVec& v) {
    const Int q = den(v);
    std::vector<Int> out;
    out.reserve(v.size() + 1);
    for (const auto& c : v) {
        Rat scaled = c * Rat(q);
        out.push_back(scaled.get_num());
    }
    out.push_back(q);
    return out;
}

namespace {

// Exact elimination; solution iff the matrix has full column rank and the
// system is consistent.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_row(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;  // column without pivot: rank deficient
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rat inv = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= inv;
        b[r] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (int c = 0; c < cols; ++c)
        if (pivot_row[c] < 0) return std::nullopt;  // rank deficient
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(cols);
    for (int c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
    return x;
}

int rank_rat(std::vector<std::vector<Rat>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const Rat f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Bareiss fraction-free determinant.
Int det_int(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rat det_rat(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat out = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            out = -out;
        }
        out *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return out;
}

std::vector<std::vector<Int>> homogeneous_rows(const std::vector<RatVec>& vertices) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(vertices.size());
    for (const auto& v : vertices) rows.push_back(homogeneous(v));
    return rows;
}

bool affinely_independent(const std::vector<RatVec>& vertices) {
    auto rows = homogeneous_rows(vertices);
    std::vector<std::vector<Rat>> m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& e : rows[i]) m[i].emplace_back(e);
    return rank_rat(m) == static_cast<int>(rows.size());
}

// Barycentric coordinates of x with respect to the vertex list, or absent
// when x is outside the affine hull.
std::optional<std::vector<Rat>> barycentric(const std::vector<RatVec>& vertices, const RatVec& x) {
    const int k = static_cast<int>(vertices.size());
    const int d = static_cast<int>(x.size());
    std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(k));
    std::vector<Rat> b(d + 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = vertices[j][i];
        b[i] = x[i];
    }
    for (int j = 0; j < k; ++j) a[d][j] = 1;
    b[d] = 1;
    return solve_unique(std::move(a), std::move(b));
}

bool all_nonnegative(const std::vector<Rat>& v) {
    for (const auto& c : v)
        if (c < 0) return false;
    return true;
}

}  // namespace

RationalSimplex make_simplex(std::vector<RatVec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    const int d = static_cast<int>(vertices[0].size());
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("mixed ambient dimensions in simplex");
    if (!affinely_independent(vertices))
        throw std::invalid_argument("vertices are affinely dependent");
    return RationalSimplex{d, std::move(vertices)};
}

bool in_simplex(const RationalSimplex& s, const RatVec& x) {
    auto bc = barycentric(s.vertices, x);
    return bc && all_nonnegative(*bc);
}

bool in_relative_interior(const RationalSimplex& s, const RatVec& x) {
    auto bc = barycentric(s.vertices, x);
    if (!bc) return false;
    for (const auto& c : *bc)
        if (c <= 0) return false;
    return true;
}

bool is_regular_simplex(const RationalSimplex& s) {
    auto rows = homogeneous_rows(s.vertices);
    const int k = static_cast<int>(rows.size());
    const int w = s.ambient + 1;
    if (k > w) return false;  // affinely dependent, cannot happen for valid input
    // gcd over all k x k minors, early exit at 1
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    Int g = 0;
    while (true) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = rows[i][cols[j]];
        g = gcd(g, det_int(std::move(sub)));
        if (g == 1) return true;
        int i = k - 1;
        while (i >= 0 && cols[i] == w - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g == 1;
}

Rat simplex_volume(const RationalSimplex& s) {
    if (s.dim() != s.ambient) return Rat(0);
    const int d = s.ambient;
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = s.vertices[i + 1][j] - s.vertices[0][j];
    Rat v = det_rat(std::move(m));
    if (v < 0) v = -v;
    for (int i = 2; i <= d; ++i) v /= i;
    return v;
}

namespace {

struct BBox {
    RatVec lo, hi;
};

BBox bbox_of(const RationalTriangulation& t, const std::vector<int>& simplex) {
    BBox b;
    b.lo = b.hi = t.points[simplex[0]];
    for (size_t i = 1; i < simplex.size(); ++i) {
        const auto& p = t.points[simplex[i]];
        for (size_t c = 0; c < p.size(); ++c) {
            if (p[c] < b.lo[c]) b.lo[c] = p[c];
            if (p[c] > b.hi[c]) b.hi[c] = p[c];
        }
    }
    return b;
}

bool bboxes_meet(const BBox& a, const BBox& b) {
    for (size_t c = 0; c < a.lo.size(); ++c)
        if (a.hi[c] < b.lo[c] || b.hi[c] < a.lo[c]) return false;
    return true;
}

// Exact check that two simplices meet in the convex hull of their shared
// vertices: every basic feasible solution of { sum l_i a_i = sum m_j b_j,
// sum l = sum m = 1, l,m >= 0 } must be supported on shared vertices. The
// feasible set is the convex hull of these solutions, so support inclusion
// for all of them settles the whole intersection.
bool pair_intersection_proper(const RationalTriangulation& t, const std::vector<int>& sa,
                              const std::vector<int>& sb) {
    const int d = t.ambient;
    const int k1 = static_cast<int>(sa.size());
    const int k2 = static_cast<int>(sb.size());
    const int cols = k1 + k2;
    if (cols > 20) throw std::logic_error("simplex pair too large for intersection check");
    std::set<int> common;
    {
        std::set<int> a(sa.begin(), sa.end());
        for (int v : sb)
            if (a.count(v)) common.insert(v);
    }

    std::vector<std::vector<Rat>> m(d + 2, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> rhs(d + 2, Rat(0));
    for (int j = 0; j < k1; ++j) {
        const auto& p = t.points[sa[j]];
        for (int i = 0; i < d; ++i) m[i][j] = p[i];
        m[d][j] = 1;
    }
    for (int j = 0; j < k2; ++j) {
        const auto& p = t.points[sb[j]];
        for (int i = 0; i < d; ++i) m[i][k1 + j] = -p[i];
        m[d + 1][k1 + j] = 1;
    }
    rhs[d] = 1;
    rhs[d + 1] = 1;

    const int rk = std::min(rank_rat(m), cols);
    for (unsigned mask = 1; mask < (1u << cols); ++mask) {
        if (__builtin_popcount(mask) != rk) continue;
        std::vector<int> pick;
        for (int c = 0; c < cols; ++c)
            if (mask & (1u << c)) pick.push_back(c);
        std::vector<std::vector<Rat>> sub(d + 2, std::vector<Rat>(rk));
        for (int i = 0; i < d + 2; ++i)
            for (int c = 0; c < rk; ++c) sub[i][c] = m[i][pick[c]];
        auto z = solve_unique(std::move(sub), rhs);
        if (!z || !all_nonnegative(*z)) continue;
        for (int c = 0; c < rk; ++c) {
            if ((*z)[c] == 0) continue;
            const int col = pick[c];
            const int vertex = col < k1 ? sa[col] : sb[col - k1];
            if (!common.count(vertex)) return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate_triangulation(const RationalTriangulation& t) {
    ValidationReport rep;
    rep.ok = true;
    auto fail = [&rep](const std::string& law, const std::string& witness) {
        rep.ok = false;
        rep.violations.push_back({law, witness});
    };

    if (t.ambient < 0) {
        fail("malformed", "negative ambient dimension");
        return rep;
    }
    for (const auto& p : t.points)
        if (static_cast<int>(p.size()) != t.ambient) {
            fail("malformed", "point arity differs from ambient dimension");
            return rep;
        }
    for (size_t i = 0; i < t.points.size(); ++i)
        for (size_t j = i + 1; j < t.points.size(); ++j)
            if (ratvec_cmp(t.points[i], t.points[j]) == 0) {
                fail("malformed", "duplicate point " + ratvec_str(t.points[i]));
                return rep;
            }
    const int np = static_cast<int>(t.points.size());
    std::vector<char> used(np, 0);
    for (const auto& s : t.simplices) {
        if (s.empty()) {
            fail("malformed", "empty simplex");
            return rep;
        }
        for (int v : s) {
            if (v < 0 || v >= np) {
                fail("malformed", "simplex index out of range");
                return rep;
            }
            used[v] = 1;
        }
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] <= s[i - 1]) {
                fail("malformed", "simplex indices not strictly increasing");
                return rep;
            }
    }
    for (int v = 0; v < np; ++v)
        if (!used[v]) {
            fail("malformed", "point " + ratvec_str(t.points[v]) + " not used by any simplex");
            return rep;
        }
    for (size_t i = 0; i < t.simplices.size(); ++i)
        for (size_t j = i + 1; j < t.simplices.size(); ++j) {
            if (t.simplices[i] == t.simplices[j]) {
                fail("malformed", "duplicate simplex");
                return rep;
            }
            const auto& small = t.simplices[i].size() <= t.simplices[j].size() ? t.simplices[i]
                                                                               : t.simplices[j];
            const auto& big = t.simplices[i].size() <= t.simplices[j].size() ? t.simplices[j]
                                                                             : t.simplices[i];
            if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                fail("malformed", "simplex contained in another");
                return rep;
            }
        }

    for (size_t i = 0; i < t.simplices.size(); ++i) {
        std::vector<RatVec> verts;
        for (int v : t.simplices[i]) verts.push_back(t.points[v]);
        if (!affinely_independent(verts)) {
            fail("affine_independence", "simplex #" + std::to_string(i));
            return rep;
        }
    }

    std::vector<BBox> boxes;
    boxes.reserve(t.simplices.size());
    for (const auto& s : t.simplices) boxes.push_back(bbox_of(t, s));
    for (size_t i = 0; i < t.simplices.size(); ++i)
        for (size_t j = i + 1; j < t.simplices.size(); ++j) {
            if (!bboxes_meet(boxes[i], boxes[j])) continue;
            if (!pair_intersection_proper(t, t.simplices[i], t.simplices[j])) {
                fail("intersection",
                     "simplices #" + std::to_string(i) + " and #" + std::to_string(j));
                return rep;
            }
        }
    return rep;
}

RationalTriangulation make_triangulation(int ambient, std::vector<RatVec> points,
                                         std::vector<std::vector<int>> simplices) {
    for (auto& s : simplices) std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end());
    RationalTriangulation t{ambient, std::move(points), std::move(simplices)};
    auto rep = validate_triangulation(t);
    if (!rep.ok)
        throw std::invalid_argument(rep.violations[0].law + ": " + rep.violations[0].witness);
    return t;
}

RationalSimplex simplex_at(const RationalTriangulation& t, int i) {
    std::vector<RatVec> verts;
    for (int v : t.simplices[i]) verts.push_back(t.points[v]);
    return RationalSimplex{t.ambient, std::move(verts)};
}

bool is_regular_triangulation(const RationalTriangulation& t) {
    for (size_t i = 0; i < t.simplices.size(); ++i)
        if (!is_regular_simplex(simplex_at(t, static_cast<int>(i)))) return false;
    return true;
}

Rat support_volume(const RationalTriangulation& t) {
    Rat total(0);
    for (size_t i = 0; i < t.simplices.size(); ++i)
        total += simplex_volume(simplex_at(t, static_cast<int>(i)));
    return total;
}

RationalTriangulation realize(const WeightedComplex& wc) {
    const int d = wc.size();
    RationalTriangulation t;
    t.ambient = d;
    for (int i = 0; i < d; ++i) {
        RatVec p(d, Rat(0));
        p[i] = Rat(1, wc.weights[i]);
        t.points.push_back(std::move(p));
    }
    t.simplices = wc.facets;
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

namespace {

Rat kv_rat(Kv v) {
    switch (v) {
        case KV0: return Rat(0);
        case KV1: return Rat(1);
        default: return Rat(1, 2);
    }
}

}  // namespace

RationalTriangulation realize_grid(const std::vector<Tuple>& w, int n) {
    std::vector<Tuple> pts = w;
    for (const auto& t : pts)
        if (static_cast<int>(t.size()) != n)
            throw std::invalid_argument("tuple arity differs from ambient dimension");
    std::sort(pts.begin(), pts.end(),
              [](const Tuple& a, const Tuple& b) { return code_of(a) < code_of(b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const int m = static_cast<int>(pts.size());
    Poset p;
    p.leq = BitMatrix(m);
    for (int i = 0; i < m; ++i) {
        p.names.push_back(tuple_name(pts[i]));
        for (int j = 0; j < m; ++j)
            if (tuple_prec(pts[i], pts[j])) p.leq.set(i, j, true);
    }

    RationalTriangulation out;
    out.ambient = n;
    for (const auto& t : pts) {
        RatVec v;
        for (Kv c : t) v.push_back(kv_rat(c));
        out.points.push_back(std::move(v));
    }
    out.simplices = maximal_chains(p);
    for (auto& s : out.simplices) std::sort(s.begin(), s.end());
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

RationalTriangulation kleene_triangulation(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument(
            "kleene_triangulation: dimension exceeds the guard; raise max_n to override");
    std::vector<Tuple> all;
    for (long c = 0; c < pow3(n); ++c) all.push_back(tuple_of(c, n));
    return realize_grid(all, n);
}

RationalTriangulation sigma_theta(const std::vector<TermPair>& theta, int n, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument(
            "sigma_theta: dimension exceeds the guard; raise max_n to override");
    for (const auto& [lhs, rhs] : theta)
        if (lhs.arity != n || rhs.arity != n)
            throw std::invalid_argument("sigma_theta: term arity differs from dimension");
    return realize_grid(sol_K(theta, n), n);
}

WeightedComplex sc_of(const RationalTriangulation& t) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& p : t.points) {
        names.push_back(ratvec_str(p));
        const Int d = den(p);
        if (!d.fits_sint_p())
            throw std::invalid_argument("point denominator too large for a complex weight");
        weights.push_back(static_cast<int>(d.get_si()));
    }
    return make_complex(std::move(names), std::move(weights), t.simplices);
}

SimplexSystem simplex_system(const RationalSimplex& s) {
    const int n = s.ambient;
    std::vector<Tuple> chain;
    for (const auto& v : s.vertices) {
        Tuple t;
        for (const auto& c : v) {
            if (c == 0)
                t.push_back(KV0);
            else if (c == 1)
                t.push_back(KV1);
            else if (c == Rat(1, 2))
                t.push_back(KVH);
            else
                throw std::invalid_argument("simplex is not a grid-chain member");
        }
        chain.push_back(std::move(t));
    }
    auto halves = [](const Tuple& t) { return std::count(t.begin(), t.end(), KVH); };
    std::sort(chain.begin(), chain.end(),
              [&](const Tuple& a, const Tuple& b) { return halves(a) > halves(b); });
    for (size_t i = 1; i < chain.size(); ++i)
        if (chain[i - 1] == chain[i] || !tuple_prec(chain[i - 1], chain[i]))
            throw std::invalid_argument("simplex is not a grid-chain member");

    const int k = static_cast<int>(chain.size());
    const Tuple& top = chain.back();
    std::vector<int> resolved(n, 0);
    for (const auto& t : chain)
        for (int j = 0; j < n; ++j) resolved[j] += t[j] != KVH;

    SimplexSystem sys;
    sys.coord.resize(n);
    for (int j = 0; j < n; ++j) sys.coord[j] = j;
    std::sort(sys.coord.begin(), sys.coord.end(), [&](int a, int b) {
        if (resolved[a] != resolved[b]) return resolved[a] < resolved[b];
        return a < b;
    });
    sys.negated.resize(n);
    for (int i = 0; i < n; ++i) sys.negated[i] = top[sys.coord[i]] == KV0;
    sys.equal.resize(n + 1);
    sys.equal[0] = n > 0 && resolved[sys.coord[0]] == 0;
    for (int i = 1; i < n; ++i)
        sys.equal[i] = resolved[sys.coord[i - 1]] == resolved[sys.coord[i]];
    sys.equal[n] = n > 0 && resolved[sys.coord[n - 1]] == k;
    return sys;
}

bool system_satisfied(const SimplexSystem& sys, const RatVec& x) {
    const int n = static_cast<int>(sys.coord.size());
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("point arity differs from system arity");
    for (const auto& c : x)
        if (c < 0 || c > 1) return false;
    Rat prev(1, 2);
    for (int i = 0; i < n; ++i) {
        const Rat val = sys.negated[i] ? Rat(1) - x[sys.coord[i]] : x[sys.coord[i]];
        if (sys.equal[i] ? prev != val : prev > val) return false;
        prev = val;
    }
    return sys.equal[n] ? prev == 1 : prev <= 1;
}

std::optional<Location> locate(const RationalTriangulation& t, const RatVec& x) {
    if (static_cast<int>(x.size()) != t.ambient)
        throw std::invalid_argument("point arity differs from ambient dimension");
    for (const auto& s : t.simplices) {
        std::vector<RatVec> verts;
        for (int v : s) verts.push_back(t.points[v]);
        auto bc = barycentric(verts, x);
        if (!bc || !all_nonnegative(*bc)) continue;
        Location loc;
        for (size_t i = 0; i < s.size(); ++i)
            if ((*bc)[i] > 0) {
                loc.face.push_back(s[i]);
                loc.coords.push_back((*bc)[i]);
            }
        return loc;
    }
    return std::nullopt;
}

RationalTriangulation farey_star(const RationalTriangulation& t, int v, int w) {
    const int np = static_cast<int>(t.points.size());
    if (v < 0 || v >= np || w < 0 || w >= np || v == w)
        throw std::invalid_argument("farey_star: bad vertex pair");
    const int a = std::min(v, w), b = std::max(v, w);
    bool is_edge = false;
    for (const auto& s : t.simplices)
        if (std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b))
            is_edge = true;
    if (!is_edge) throw std::invalid_argument("farey_star: {v,w} is not an edge");

    auto ha = homogeneous(t.points[a]);
    auto hb = homogeneous(t.points[b]);
    RatVec mediant;
    const Int q = ha.back() + hb.back();
    for (int i = 0; i < t.ambient; ++i) mediant.emplace_back(Rat(ha[i] + hb[i]) / Rat(q));

    RationalTriangulation out;
    out.ambient = t.ambient;
    out.points = t.points;
    out.points.push_back(mediant);
    const int mid = np;

    for (const auto& s : t.simplices) {
        if (!(std::binary_search(s.begin(), s.end(), a) &&
              std::binary_search(s.begin(), s.end(), b))) {
            out.simplices.push_back(s);
            continue;
        }
        const bool was_regular = is_regular_simplex(RationalSimplex{
            t.ambient, [&] {
                std::vector<RatVec> vs;
                for (int i : s) vs.push_back(t.points[i]);
                return vs;
            }()});
        for (int drop : {a, b}) {
            std::vector<int> ns;
            for (int i : s)
                if (i != drop) ns.push_back(i);
            ns.push_back(mid);
            std::sort(ns.begin(), ns.end());
            if (was_regular) {
                std::vector<RatVec> vs;
                for (int i : ns) vs.push_back(out.points[i]);
                if (!is_regular_simplex(RationalSimplex{t.ambient, vs}))
                    throw std::logic_error("farey_star: split broke unimodularity");
            }
            out.simplices.push_back(std::move(ns));
        }
    }
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

}  // namespace kleenemv
