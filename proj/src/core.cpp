#include "kleenemv/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleenemv {

bool is_valid_poset(const Poset& p) {
    if (p.leq.size() != p.size()) return false;
    return p.leq.is_reflexive() && p.leq.is_antisymmetric() && p.leq.is_transitive();
}

std::vector<int> maximal_elements(const Poset& p) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < p.size() && maximal; ++j)
            if (j != i && p.le(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<int> linear_extension(const Poset& p) {
    int n = p.size();
    std::vector<int> below_count(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && p.le(j, i)) ++below_count[i];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return below_count[a] < below_count[b]; });
    return order;
}

namespace {

void extend_chain(const Poset& p, std::vector<int>& chain,
                  std::vector<std::vector<int>>& out) {
    int last = chain.back();
    // covers of `last`: minimal strict upper bounds
    std::vector<int> next;
    for (int j = 0; j < p.size(); ++j) {
        if (j == last || !p.le(last, j)) continue;
        bool cover = true;
        for (int k = 0; k < p.size() && cover; ++k)
            if (k != last && k != j && p.le(last, k) && p.le(k, j)) cover = false;
        if (cover) next.push_back(j);
    }
    if (next.empty()) {
        out.push_back(chain);
        return;
    }
    for (int j : next) {
        chain.push_back(j);
        extend_chain(p, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < p.size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < p.size() && minimal; ++j)
            if (j != i && p.le(j, i)) minimal = false;
        if (!minimal) continue;
        std::vector<int> chain{i};
        extend_chain(p, chain, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string kv_string(Kv a) {
    switch (a) {
        case KV0: return "0";
        case KVH: return "1/2";
        case KV1: return "1";
        default: throw std::invalid_argument("bad scalar");
    }
}

long pow3(int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

long code_of(const Tuple& t) {
    long c = 0;
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) c = c * 3 + t[i];
    return c;
}

Tuple tuple_of(long code, int n) {
    Tuple t(n);
    for (int i = 0; i < n; ++i) {
        t[i] = static_cast<Kv>(code % 3);
        code /= 3;
    }
    return t;
}

bool tuple_prec(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) throw std::invalid_argument("arity mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (!kv_prec(a[i], b[i])) return false;
    return true;
}

bool tuple_sim(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size()) throw std::invalid_argument("arity mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (!kv_sim(a[i], b[i])) return false;
    return true;
}

bool tuple_in_m(const Tuple& t) {
    for (Kv v : t)
        if (!kv_in_m(v)) return false;
    return true;
}

std::string tuple_name(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += kv_string(t[i]);
    }
    s += ')';
    return s;
}

}  // namespace kleenemv
