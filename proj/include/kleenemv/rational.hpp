#ifndef KLEENEMV_RATIONAL_HPP
#define KLEENEMV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kleenemv {

// Exact rational scalar; always kept canonical (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with q > 0; rejects anything else.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

using RatVec = std::vector<Rat>;

int ratvec_cmp(const RatVec& a, const RatVec& b);  // lexicographic
std::string ratvec_str(const RatVec& v);           // "(p/q,...)"

}  // namespace kleenemv

#endif
