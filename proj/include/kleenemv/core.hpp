#ifndef KLEENEMV_CORE_HPP
#define KLEENEMV_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kleenemv {

// Square relation matrix over row-major 64-bit blocks.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), data_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool test(int i, int j) const {
        return (data_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(int i, int j, bool v = true) {
        uint64_t& w = data_[static_cast<size_t>(i) * words_ + j / 64];
        uint64_t bit = uint64_t(1) << (j % 64);
        if (v) w |= bit; else w &= ~bit;
    }

    const uint64_t* row(int i) const { return data_.data() + static_cast<size_t>(i) * words_; }
    int words_per_row() const { return words_; }

    // row(i) & row(j) as a fresh block vector
    std::vector<uint64_t> row_and(int i, int j) const {
        std::vector<uint64_t> out(words_);
        const uint64_t* a = row(i);
        const uint64_t* b = row(j);
        for (int w = 0; w < words_; ++w) out[w] = a[w] & b[w];
        return out;
    }

    bool is_reflexive() const {
        for (int i = 0; i < n_; ++i)
            if (!test(i, i)) return false;
        return true;
    }
    bool is_antisymmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (test(i, j) && test(j, i)) return false;
        return true;
    }
    bool is_transitive() const {
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (!test(i, k)) continue;
                const uint64_t* rk = row(k);
                const uint64_t* ri = row(i);
                for (int w = 0; w < words_; ++w)
                    if (rk[w] & ~ri[w]) return false;
            }
        return true;
    }
    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (test(i, j) != test(j, i)) return false;
        return true;
    }

    // Warshall closure in place; returns number of pairs added.
    long reflexive_transitive_close() {
        long added = 0;
        for (int i = 0; i < n_; ++i)
            if (!test(i, i)) { set(i, i); ++added; }
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i) {
                if (!test(i, k)) continue;
                uint64_t* ri = data_.data() + static_cast<size_t>(i) * words_;
                const uint64_t* rk = row(k);
                for (int w = 0; w < words_; ++w) {
                    uint64_t fresh = rk[w] & ~ri[w];
                    if (fresh) {
                        added += __builtin_popcountll(fresh);
                        ri[w] |= fresh;
                    }
                }
            }
        return added;
    }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> data_;
};

// Finite poset with named elements; leq is the full (reflexive, transitive) order.
struct Poset {
    std::vector<std::string> names;
    BitMatrix leq;

    int size() const { return static_cast<int>(names.size()); }
    bool le(int a, int b) const { return leq.test(a, b); }
};

bool is_valid_poset(const Poset& p);
std::vector<int> maximal_elements(const Poset& p);
// Indices ordered so that every element appears after everything below it;
// ties broken by original index.
std::vector<int> linear_extension(const Poset& p);
// All maximal chains, each as an increasing index list, in lexicographic order.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

// Three-valued scalar: 0, 1/2, 1 encoded as 0, 1, 2. The numeric order is the
// lattice order of the algebra K; the space order of K-tilde puts 1/2 below
// both 0 and 1, which are incomparable.
using Kv = uint8_t;
inline constexpr Kv KV0 = 0, KVH = 1, KV1 = 2;

inline constexpr Kv kv_meet(Kv a, Kv b) { return a < b ? a : b; }
inline constexpr Kv kv_join(Kv a, Kv b) { return a > b ? a : b; }
inline constexpr Kv kv_neg(Kv a) { return static_cast<Kv>(2 - a); }
// order of the space K-tilde
inline constexpr bool kv_prec(Kv a, Kv b) { return a == b || a == KVH; }
// similarity of K-tilde: everything except {0,1} clashes
inline constexpr bool kv_sim(Kv a, Kv b) { return !(a != b && a + b == 2); }
// designated maximal points of K-tilde
inline constexpr bool kv_in_m(Kv a) { return a != KVH; }

inline char kv_char(Kv a) { return a == KV0 ? '0' : (a == KVH ? 'h' : '1'); }
std::string kv_string(Kv a);  // "0", "1/2", "1"

// Point of {0,1/2,1}^n as a digit vector.
using Tuple = std::vector<Kv>;

long pow3(int n);
long code_of(const Tuple& t);
Tuple tuple_of(long code, int n);

bool tuple_prec(const Tuple& a, const Tuple& b);  // componentwise space order
bool tuple_sim(const Tuple& a, const Tuple& b);
bool tuple_in_m(const Tuple& t);
std::string tuple_name(const Tuple& t);  // e.g. "(0,1/2,1)"

}  // namespace kleenemv

#endif
