#include "kleenemv/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kleenemv {

namespace {

std::string face_names(const WeightedComplex& c, const std::vector<int>& f) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << c.vertices[f[i]];
    }
    os << '}';
    return os.str();
}

bool contains_sorted(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

WeightedComplex make_complex(std::vector<std::string> vertices, std::vector<int> weights,
                             std::vector<std::vector<int>> faces) {
    const int n = static_cast<int>(vertices.size());
    if (weights.empty()) weights.assign(n, 1);
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight count does not match vertex count");
    for (int i = 0; i < n; ++i)
        if (weights[i] <= 0) throw std::invalid_argument("nonpositive weight at " + vertices[i]);

    for (auto& f : faces) {
        for (int v : f)
            if (v < 0 || v >= n) throw std::invalid_argument("face vertex index out of range");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("repeated vertex inside a face");
    }
    {
        auto sorted = faces;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated face");
    }

    // Keep only inclusion-maximal faces, then cover stray vertices.
    std::vector<std::vector<int>> facets;
    for (size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].empty()) continue;
        bool maximal = true;
        for (size_t j = 0; j < faces.size() && maximal; ++j)
            if (i != j && faces[j].size() >= faces[i].size() && faces[i] != faces[j] &&
                contains_sorted(faces[j], faces[i]))
                maximal = false;
        if (maximal) facets.push_back(faces[i]);
    }
    std::vector<char> covered(n, 0);
    for (const auto& f : facets)
        for (int v : f) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) facets.push_back({v});
    std::sort(facets.begin(), facets.end());

    return WeightedComplex{std::move(vertices), std::move(weights), std::move(facets)};
}

bool is_face(const WeightedComplex& c, std::vector<int> s) {
    if (s.empty()) return false;
    std::sort(s.begin(), s.end());
    for (const auto& f : c.facets)
        if (contains_sorted(f, s)) return true;
    return false;
}

namespace {

bool size_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::set<std::vector<int>> face_set(const WeightedComplex& c) {
    std::set<std::vector<int>> out;
    for (const auto& f : c.facets) {
        const int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            out.insert(std::move(sub));
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> all_faces(const WeightedComplex& c) {
    auto fs = face_set(c);
    std::vector<std::vector<int>> out(fs.begin(), fs.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<std::vector<int>> missing_faces(const WeightedComplex& c) {
    const int n = c.size();
    auto faces = face_set(c);
    size_t max_facet = 0;
    for (const auto& f : c.facets) max_facet = std::max(max_facet, f.size());

    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    // A minimal non-face has all proper subsets present, so its size is at
    // most the largest facet size plus one.
    const int top = std::min<int>(n, static_cast<int>(max_facet) + 1);
    for (int k = 2; k <= top; ++k) {
        pick.assign(k, 0);
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == k) {
                if (faces.count(pick)) return;
                for (int drop = 0; drop < k; ++drop) {
                    std::vector<int> sub;
                    for (int i = 0; i < k; ++i)
                        if (i != drop) sub.push_back(pick[i]);
                    if (!faces.count(sub)) return;
                }
                out.push_back(pick);
                return;
            }
            for (int v = from; v < n; ++v) {
                pick[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

WeightedComplex skeleton(const WeightedComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("skeleton dimension must be nonnegative");
    std::vector<std::vector<int>> keep;
    for (const auto& f : all_faces(c))
        if (static_cast<int>(f.size()) <= k + 1) keep.push_back(f);
    return make_complex(c.vertices, c.weights, keep);
}

std::vector<int> f_vector(const WeightedComplex& c) {
    std::vector<int> out;
    for (const auto& f : all_faces(c)) {
        const size_t d = f.size() - 1;
        if (out.size() <= d) out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

WeightedComplex nerve(const Poset& p) {
    return make_complex(p.names, std::vector<int>(p.names.size(), 1), maximal_chains(p));
}

WeightedComplex weighted_nerve(const KleeneSpace& s) {
    Poset p{s.points, s.leq};
    std::vector<int> w(s.points.size());
    for (int i = 0; i < s.size(); ++i) w[i] = s.in_m(i) ? 1 : 2;
    return make_complex(p.names, std::move(w), maximal_chains(p));
}

namespace {

// Backtracking search for a transitive orientation. Edge states live in a
// trail so choices unwind cheaply.
struct OrientSearch {
    int n = 0;
    std::vector<std::vector<int>> edges;           // sorted pairs as {u,v}, u<v
    std::vector<std::vector<int>> edge_at;         // n*n -> edge index or -1
    std::vector<int> state;                        // 0 unset, +1 u->v, -1 v->u
    std::vector<std::vector<int>> adj;
    std::vector<int> trail;

    int idx(int a, int b) const { return edge_at[a][b]; }

    int dir(int a, int b) const {  // +1 if a->b, -1 if b->a, 0 unset; edge must exist
        const int e = idx(a, b);
        const int s = state[e];
        if (s == 0) return 0;
        const bool forward = edges[e][0] == a;
        return forward ? s : -s;
    }

    bool set_dir(int a, int b, std::vector<std::pair<int, int>>& queue) {
        const int e = idx(a, b);
        const int want = edges[e][0] == a ? 1 : -1;
        if (state[e] == want) return true;
        if (state[e] != 0) return false;
        state[e] = want;
        trail.push_back(e);
        queue.emplace_back(a, b);
        return true;
    }

    // Close the oriented relation under composition; any pair whose forced
    // edge is absent or opposed kills the branch.
    bool propagate(std::vector<std::pair<int, int>> queue) {
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (int c : adj[b]) {
                if (c == a) continue;
                if (dir(b, c) == 1) {
                    if (idx(a, c) < 0 || !set_dir(a, c, queue)) return false;
                }
            }
            for (int c : adj[a]) {
                if (c == b) continue;
                if (dir(c, a) == 1) {
                    if (idx(c, b) < 0 || !set_dir(c, b, queue)) return false;
                }
            }
        }
        return true;
    }

    bool orient(int a, int b) {
        std::vector<std::pair<int, int>> queue;
        if (!set_dir(a, b, queue)) return false;
        return propagate(std::move(queue));
    }

    bool search(size_t from) {
        while (from < edges.size() && state[from] != 0) ++from;
        if (from == edges.size()) return true;
        const int u = edges[from][0], v = edges[from][1];
        for (int first : {u, v}) {
            const int second = first == u ? v : u;
            const size_t mark = trail.size();
            if (orient(first, second) && search(from + 1)) return true;
            while (trail.size() > mark) {
                state[trail.back()] = 0;
                trail.pop_back();
            }
        }
        return false;
    }
};

OrientSearch build_orient_search(const WeightedComplex& c) {
    OrientSearch s;
    s.n = c.size();
    std::set<std::vector<int>> pairs;
    for (const auto& f : c.facets)
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) pairs.insert({f[i], f[j]});
    s.edges.assign(pairs.begin(), pairs.end());
    s.edge_at.assign(s.n, std::vector<int>(s.n, -1));
    s.adj.assign(s.n, {});
    for (size_t e = 0; e < s.edges.size(); ++e) {
        const int u = s.edges[e][0], v = s.edges[e][1];
        s.edge_at[u][v] = s.edge_at[v][u] = static_cast<int>(e);
        s.adj[u].push_back(v);
        s.adj[v].push_back(u);
    }
    s.state.assign(s.edges.size(), 0);
    return s;
}

}  // namespace

std::optional<Orientation> transitive_orientation(const WeightedComplex& c,
                                                  const std::vector<int>& required_sinks) {
    auto s = build_orient_search(c);
    for (int v : required_sinks) {
        if (v < 0 || v >= s.n) throw std::invalid_argument("sink index out of range");
        for (int u : s.adj[v])
            if (!s.orient(u, v)) return std::nullopt;
    }
    if (!s.search(0)) return std::nullopt;

    Orientation out;
    for (const auto& e : s.edges) {
        if (s.dir(e[0], e[1]) == 1)
            out.edges.emplace_back(e[0], e[1]);
        else
            out.edges.emplace_back(e[1], e[0]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

Poset poset_of_orientation(const WeightedComplex& c, const Orientation& o) {
    const int n = c.size();
    Poset p;
    p.names = c.vertices;
    p.leq = BitMatrix(n);
    for (int i = 0; i < n; ++i) p.leq.set(i, i, true);
    for (auto [u, v] : o.edges) p.leq.set(u, v, true);
    if (!is_valid_poset(p)) throw std::logic_error("orientation did not close to a poset");
    return p;
}

}  // namespace

std::optional<OrderWitness> is_order_complex(const WeightedComplex& c) {
    for (const auto& mf : missing_faces(c))
        if (mf.size() >= 3) return std::nullopt;
    auto o = transitive_orientation(c, {});
    if (!o) return std::nullopt;
    return OrderWitness{*o, poset_of_orientation(c, *o)};
}

KleeneComplexCheck is_kleene_complex(const WeightedComplex& c) {
    KleeneComplexCheck out;
    for (int v = 0; v < c.size(); ++v) {
        if (c.weights[v] != 1 && c.weights[v] != 2) {
            out.failed_condition = 'a';
            out.detail = "vertex " + c.vertices[v] + " has weight " + std::to_string(c.weights[v]);
            return out;
        }
    }
    for (const auto& mf : missing_faces(c)) {
        if (mf.size() >= 3) {
            out.failed_condition = 'b';
            out.detail = "minimal non-face " + face_names(c, mf);
            return out;
        }
    }
    std::vector<int> sinks;
    for (int v = 0; v < c.size(); ++v)
        if (c.weights[v] == 1) sinks.push_back(v);
    auto o = transitive_orientation(c, sinks);
    if (!o) {
        out.failed_condition = 'c';
        out.detail = "no transitive orientation with the weight-1 vertices as sinks";
        return out;
    }
    out.witness = OrderWitness{*o, poset_of_orientation(c, *o)};
    return out;
}

std::vector<Tuple> embed_poset(const Poset& p, const std::vector<int>& weights) {
    if (!is_valid_poset(p)) throw std::invalid_argument("not a poset");
    const int m = static_cast<int>(p.names.size());
    if (static_cast<int>(weights.size()) != m)
        throw std::invalid_argument("weight count does not match element count");
    std::vector<char> maximal(m, 0);
    for (int i : maximal_elements(p)) maximal[i] = 1;
    for (int i = 0; i < m; ++i) {
        if (weights[i] != 1 && weights[i] != 2)
            throw std::invalid_argument("weight outside {1,2} at " + p.names[i]);
        if (weights[i] == 1 && !maximal[i])
            throw std::invalid_argument("weight-1 element " + p.names[i] + " is not maximal");
    }

    std::vector<Tuple> out(m);
    for (int i = 0; i < m; ++i) {
        Tuple t(m + 1);
        t[0] = weights[i] == 1 ? KV1 : KVH;
        for (int j = 0; j < m; ++j) {
            if (p.leq.test(j, i))
                t[1 + j] = KV1;
            else
                t[1 + j] = maximal[i] ? KV0 : KVH;
        }
        out[i] = std::move(t);
    }
    return out;
}

namespace {

struct IsoComplexSearch {
    const WeightedComplex* a = nullptr;
    const WeightedComplex* b = nullptr;
    int n = 0;
    BitMatrix adj_a, adj_b;
    std::vector<std::vector<long>> prof_a, prof_b;
    std::set<std::vector<int>> faces_a, faces_b;
    std::vector<int> map;
    std::vector<char> used;

    static BitMatrix adjacency(const WeightedComplex& c) {
        BitMatrix m(c.size());
        for (const auto& f : c.facets)
            for (size_t i = 0; i < f.size(); ++i)
                for (size_t j = i + 1; j < f.size(); ++j) {
                    m.set(f[i], f[j], true);
                    m.set(f[j], f[i], true);
                }
        return m;
    }

    static std::vector<std::vector<long>> profiles(const WeightedComplex& c, const BitMatrix& adj) {
        size_t max_facet = 0;
        for (const auto& f : c.facets) max_facet = std::max(max_facet, f.size());
        std::vector<std::vector<long>> out(c.size());
        for (int v = 0; v < c.size(); ++v) {
            std::vector<long> pr;
            pr.push_back(c.weights[v]);
            long deg = 0;
            for (int u = 0; u < c.size(); ++u)
                if (adj.test(v, u)) ++deg;
            pr.push_back(deg);
            std::vector<long> by_size(max_facet + 1, 0);
            for (const auto& f : c.facets)
                if (std::binary_search(f.begin(), f.end(), v)) ++by_size[f.size()];
            pr.insert(pr.end(), by_size.begin(), by_size.end());
            out[v] = std::move(pr);
        }
        return out;
    }

    bool facets_match() const {
        for (const auto& f : a->facets) {
            std::vector<int> img;
            for (int v : f) img.push_back(map[v]);
            std::sort(img.begin(), img.end());
            if (!faces_b.count(img)) return false;
        }
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[map[v]] = v;
        for (const auto& f : b->facets) {
            std::vector<int> pre;
            for (int v : f) pre.push_back(inv[v]);
            std::sort(pre.begin(), pre.end());
            if (!faces_a.count(pre)) return false;
        }
        return true;
    }

    bool search(int v) {
        if (v == n) return facets_match();
        for (int w = 0; w < n; ++w) {
            if (used[w] || prof_a[v] != prof_b[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj_a.test(v, u) != adj_b.test(w, map[u])) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (search(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> complex_isomorphic(const WeightedComplex& a,
                                                   const WeightedComplex& b) {
    if (a.size() != b.size() || a.facets.size() != b.facets.size()) return std::nullopt;
    if (f_vector(a) != f_vector(b)) return std::nullopt;
    {
        auto wa = a.weights, wb = b.weights;
        std::sort(wa.begin(), wa.end());
        std::sort(wb.begin(), wb.end());
        if (wa != wb) return std::nullopt;
    }

    IsoComplexSearch s;
    s.a = &a;
    s.b = &b;
    s.n = a.size();
    s.adj_a = IsoComplexSearch::adjacency(a);
    s.adj_b = IsoComplexSearch::adjacency(b);
    s.prof_a = IsoComplexSearch::profiles(a, s.adj_a);
    s.prof_b = IsoComplexSearch::profiles(b, s.adj_b);
    {
        auto pa = s.prof_a;
        auto pb = s.prof_b;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }
    for (const auto& f : all_faces(a)) s.faces_a.insert(f);
    for (const auto& f : all_faces(b)) s.faces_b.insert(f);
    s.map.assign(s.n, -1);
    s.used.assign(s.n, 0);
    if (!s.search(0)) return std::nullopt;
    return s.map;
}

}  // namespace kleenemv
