#include "kleenemv/mvalg.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kleenemv {

namespace {

void check_unit(const Rat& a) {
    if (a < 0 || a > 1) throw std::invalid_argument("scalar outside [0,1]: " + rat_str(a));
}

}  // namespace

Rat mv_oplus(const Rat& a, const Rat& b) {
    check_unit(a);
    check_unit(b);
    Rat s = a + b;
    return s > 1 ? Rat(1) : s;
}

Rat mv_neg(const Rat& a) {
    check_unit(a);
    return Rat(1) - a;
}

Rat mv_odot(const Rat& a, const Rat& b) {
    check_unit(a);
    check_unit(b);
    Rat s = a + b - 1;
    return s < 0 ? Rat(0) : s;
}

Rat mv_meet(const Rat& a, const Rat& b) {
    check_unit(a);
    check_unit(b);
    return a < b ? a : b;
}

Rat mv_join(const Rat& a, const Rat& b) {
    check_unit(a);
    check_unit(b);
    return a > b ? a : b;
}

MVTerm term_var(int i) {
    if (i < 0) throw std::invalid_argument("negative generator index");
    MVTerm t;
    t.kind = MVTerm::Var;
    t.var = i;
    return t;
}

MVTerm term_const(const Rat& c) {
    check_unit(c);
    MVTerm t;
    t.kind = MVTerm::Const;
    t.value = c;
    return t;
}

MVTerm term_neg(MVTerm a) {
    MVTerm t;
    t.kind = MVTerm::Neg;
    t.kids.push_back(std::move(a));
    return t;
}

namespace {

MVTerm binary(MVTerm::Kind k, MVTerm a, MVTerm b) {
    MVTerm t;
    t.kind = k;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

}  // namespace

MVTerm term_oplus(MVTerm a, MVTerm b) { return binary(MVTerm::Oplus, std::move(a), std::move(b)); }
MVTerm term_odot(MVTerm a, MVTerm b) { return binary(MVTerm::Odot, std::move(a), std::move(b)); }
MVTerm term_meet(MVTerm a, MVTerm b) { return binary(MVTerm::Meet, std::move(a), std::move(b)); }
MVTerm term_join(MVTerm a, MVTerm b) { return binary(MVTerm::Join, std::move(a), std::move(b)); }

int term_arity(const MVTerm& t) {
    int a = t.kind == MVTerm::Var ? t.var + 1 : 0;
    for (const auto& k : t.kids) a = std::max(a, term_arity(k));
    return a;
}

Rat eval_term(const MVTerm& t, const RatVec& point) {
    switch (t.kind) {
        case MVTerm::Var:
            if (t.var >= static_cast<int>(point.size()))
                throw std::invalid_argument("term arity exceeds the point arity");
            check_unit(point[t.var]);
            return point[t.var];
        case MVTerm::Const: return t.value;
        case MVTerm::Neg: return mv_neg(eval_term(t.kids[0], point));
        case MVTerm::Oplus: return mv_oplus(eval_term(t.kids[0], point), eval_term(t.kids[1], point));
        case MVTerm::Odot: return mv_odot(eval_term(t.kids[0], point), eval_term(t.kids[1], point));
        case MVTerm::Meet: return mv_meet(eval_term(t.kids[0], point), eval_term(t.kids[1], point));
        default: return mv_join(eval_term(t.kids[0], point), eval_term(t.kids[1], point));
    }
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == ')') {
            if (!cur.empty()) out.push_back(cur), cur.clear();
            out.push_back(std::string(1, c));
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(cur), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

MVTerm parse_atom(const std::string& tok) {
    if (tok.size() >= 2 && tok[0] == 'x') {
        const std::string idx = tok.substr(1);
        if (idx.find_first_not_of("0123456789") != std::string::npos || idx[0] == '0')
            throw std::invalid_argument("bad generator '" + tok + "'");
        return term_var(std::stoi(idx) - 1);
    }
    return term_const(rat_parse(tok));
}

MVTerm parse_expr(const std::vector<std::string>& toks, size_t& pos) {
    if (pos >= toks.size()) throw std::invalid_argument("unexpected end of term");
    const std::string tok = toks[pos++];
    if (tok == ")") throw std::invalid_argument("unexpected ')'");
    if (tok != "(") return parse_atom(tok);
    if (pos >= toks.size()) throw std::invalid_argument("unexpected end of term");
    const std::string op = toks[pos++];
    std::vector<MVTerm> args;
    while (pos < toks.size() && toks[pos] != ")") args.push_back(parse_expr(toks, pos));
    if (pos >= toks.size()) throw std::invalid_argument("missing ')'");
    ++pos;  // the ')'
    auto want = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("operator '" + op + "' expects " + std::to_string(n) +
                                        " arguments, got " + std::to_string(args.size()));
    };
    if (op == "neg") {
        want(1);
        return term_neg(std::move(args[0]));
    }
    MVTerm::Kind k;
    if (op == "oplus")
        k = MVTerm::Oplus;
    else if (op == "odot")
        k = MVTerm::Odot;
    else if (op == "meet")
        k = MVTerm::Meet;
    else if (op == "join")
        k = MVTerm::Join;
    else
        throw std::invalid_argument("unknown operator '" + op + "'");
    want(2);
    return binary(k, std::move(args[0]), std::move(args[1]));
}

}  // namespace

MVTerm parse_term(const std::string& s) {
    auto toks = tokenize(s);
    size_t pos = 0;
    MVTerm t = parse_expr(toks, pos);
    if (pos != toks.size()) throw std::invalid_argument("trailing tokens after term");
    return t;
}

std::string term_str(const MVTerm& t) {
    switch (t.kind) {
        case MVTerm::Var: return "x" + std::to_string(t.var + 1);
        case MVTerm::Const: return rat_str(t.value);
        case MVTerm::Neg: return "(neg " + term_str(t.kids[0]) + ")";
        case MVTerm::Oplus: return "(oplus " + term_str(t.kids[0]) + " " + term_str(t.kids[1]) + ")";
        case MVTerm::Odot: return "(odot " + term_str(t.kids[0]) + " " + term_str(t.kids[1]) + ")";
        case MVTerm::Meet: return "(meet " + term_str(t.kids[0]) + " " + term_str(t.kids[1]) + ")";
        default: return "(join " + term_str(t.kids[0]) + " " + term_str(t.kids[1]) + ")";
    }
}

PLFunction make_pl(std::shared_ptr<const RationalTriangulation> dom, std::vector<Rat> values) {
    if (!dom) throw std::invalid_argument("null domain");
    if (values.size() != dom->points.size())
        throw std::invalid_argument("one value per vertex required");
    for (const auto& v : values) check_unit(v);
    return PLFunction{std::move(dom), std::move(values)};
}

PLFunction make_pl(RationalTriangulation dom, std::vector<Rat> values) {
    return make_pl(std::make_shared<const RationalTriangulation>(std::move(dom)),
                   std::move(values));
}

Rat eval_pl(const PLFunction& f, const RatVec& x) {
    auto loc = locate(*f.dom, x);
    if (!loc) throw std::invalid_argument("point outside the support: " + ratvec_str(x));
    Rat out(0);
    for (size_t i = 0; i < loc->face.size(); ++i) out += loc->coords[i] * f.values[loc->face[i]];
    return out;
}

SchauderBasis schauder_basis(const RationalTriangulation& t) {
    if (!is_regular_triangulation(t))
        throw std::invalid_argument("schauder_basis: triangulation is not regular");
    auto dom = std::make_shared<const RationalTriangulation>(t);
    const int m = static_cast<int>(t.points.size());
    SchauderBasis b;
    b.dom = dom;
    for (int i = 0; i < m; ++i) {
        const Int d = den(t.points[i]);
        if (!d.fits_sint_p()) throw std::invalid_argument("vertex denominator too large");
        b.mult.push_back(static_cast<int>(d.get_si()));
        std::vector<Rat> vals(m, Rat(0));
        vals[i] = Rat(1) / Rat(d);
        b.hats.push_back(make_pl(dom, std::move(vals)));
    }
    for (int j = 0; j < m; ++j) {
        Rat sum(0);
        for (int i = 0; i < m; ++i) sum += Rat(b.mult[i]) * b.hats[i].values[j];
        if (sum != 1) throw std::logic_error("schauder_basis: partition identity failed");
    }
    return b;
}

namespace {

Kv kv_of_rat(const Rat& c) {
    if (c == 0) return KV0;
    if (c == 1) return KV1;
    if (c == Rat(1, 2)) return KVH;
    throw std::logic_error("not a grid coordinate");
}

}  // namespace

PLFunction kleene_to_pl(const KleeneTable& b, int max_n) {
    auto grid = kleene_triangulation(b.arity, max_n);
    std::vector<Rat> vals;
    vals.reserve(grid.points.size());
    for (const auto& p : grid.points) {
        Tuple t;
        for (const auto& c : p) t.push_back(kv_of_rat(c));
        vals.push_back(Rat(static_cast<int>(b.at(t)), 2));
    }
    for (auto& v : vals) v.canonicalize();
    return make_pl(std::move(grid), std::move(vals));
}

SampleReport sol_M_sampled(const std::vector<TermPair>& theta, int n, int samples, unsigned seed,
                           int max_n) {
    std::vector<std::pair<PLFunction, PLFunction>> pairs;
    for (const auto& [f, g] : theta)
        pairs.emplace_back(kleene_to_pl(f, max_n), kleene_to_pl(g, max_n));
    const auto solution = sigma_theta(theta, n, max_n);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dens(1, 8);
    SampleReport rep;
    for (int k = 0; k < samples; ++k) {
        RatVec x;
        for (int i = 0; i < n; ++i) {
            const int q = dens(rng);
            std::uniform_int_distribution<int> nums(0, q);
            x.push_back(rat(nums(rng), q));
        }
        bool all_equal = true;
        for (const auto& [uf, ug] : pairs)
            if (eval_pl(uf, x) != eval_pl(ug, x)) {
                all_equal = false;
                break;
            }
        const bool inside = locate(solution, x).has_value();
        ++rep.checked;
        if (all_equal != inside) rep.mismatches.push_back(x);
    }
    return rep;
}

namespace {

bool spans_simplex(const RationalTriangulation& t, int a, int b) {
    for (const auto& s : t.simplices)
        if (std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b))
            return true;
    return false;
}

}  // namespace

SchauderBasis stellar_subdivide(const SchauderBasis& b, int r, int s) {
    const int t = b.size();
    if (r < 0 || r >= t || s < 0 || s >= t || r == s)
        throw std::invalid_argument("stellar_subdivide: bad hat pair");
    if (!spans_simplex(*b.dom, r, s))
        throw std::invalid_argument("stellar_subdivide: the hats have zero meet");
    return schauder_basis(farey_star(*b.dom, r, s));
}

WeightedComplex bowtie(const SchauderBasis& b) { return sc_of(*b.dom); }

namespace {

// Positivity bitmask over the maximal simplices of the refined domain: bit k
// set when the function (given by its vertex values there) has a positive
// value sum over simplex k, i.e. is positive at its barycenter.
std::vector<std::uint64_t> positivity_mask(const RationalTriangulation& t,
                                           const std::vector<Rat>& vals) {
    const size_t words = (t.simplices.size() + 63) / 64;
    std::vector<std::uint64_t> mask(words, 0);
    for (size_t k = 0; k < t.simplices.size(); ++k) {
        Rat sum(0);
        for (int v : t.simplices[k]) sum += vals[v];
        if (sum > 0) mask[k / 64] |= std::uint64_t(1) << (k % 64);
    }
    return mask;
}

bool mask_empty(const std::vector<std::uint64_t>& m) {
    for (auto w : m)
        if (w) return false;
    return true;
}

void mask_and(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
}

}  // namespace

bool one_regular_check(const SchauderBasis& b, int r, int s) {
    const int t = b.size();
    if (r < 0 || r >= t || s < 0 || s >= t || r == s)
        throw std::invalid_argument("one_regular_check: bad hat pair");
    if (!spans_simplex(*b.dom, r, s))
        throw std::invalid_argument("one_regular_check: the hats have zero meet");
    if (t > 14) throw std::invalid_argument("one_regular_check: basis too large to enumerate");

    const auto refined = farey_star(*b.dom, r, s);
    const int m = static_cast<int>(refined.points.size());  // old vertices plus the mediant

    // Vertex values over the refinement: the old hats restrict, the three
    // changed elements follow the subdivision formulas pointwise.
    std::vector<std::vector<Rat>> old_vals(t, std::vector<Rat>(m));
    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < m; ++v) old_vals[i][v] = eval_pl(b.hats[i], refined.points[v]);
    }
    std::vector<Rat> sub_r(m), sub_s(m), pair_meet(m);
    for (int v = 0; v < m; ++v) {
        sub_r[v] = mv_odot(old_vals[r][v], mv_neg(old_vals[s][v]));
        sub_s[v] = mv_odot(old_vals[s][v], mv_neg(old_vals[r][v]));
        pair_meet[v] = mv_meet(old_vals[r][v], old_vals[s][v]);
    }

    std::vector<std::vector<std::uint64_t>> old_mask(t), prime_mask(t);
    for (int i = 0; i < t; ++i) {
        old_mask[i] = positivity_mask(refined, old_vals[i]);
        prime_mask[i] = i == r   ? positivity_mask(refined, sub_r)
                        : i == s ? positivity_mask(refined, sub_s)
                                 : old_mask[i];
    }
    const auto meet_mask = positivity_mask(refined, pair_meet);

    const std::uint32_t full = (std::uint32_t(1) << t) - 1;
    const std::uint32_t rs = (std::uint32_t(1) << r) | (std::uint32_t(1) << s);
    for (std::uint32_t a = 1; a <= full; ++a) {
        auto hyp = meet_mask;
        for (int i = 0; i < t; ++i)
            if (a & (std::uint32_t(1) << i)) mask_and(hyp, old_mask[i]);
        if (mask_empty(hyp)) continue;
        for (std::uint32_t j = a; j; j = (j - 1) & a) {
            if ((j & rs) == rs) continue;
            auto concl = meet_mask;
            for (int i = 0; i < t; ++i)
                if (j & (std::uint32_t(1) << i)) mask_and(concl, prime_mask[i]);
            if (mask_empty(concl)) return false;
        }
    }
    return true;
}

bool is_regular_basis(const SchauderBasis& b, int depth) {
    const int t = b.size();
    for (int r = 0; r < t; ++r)
        for (int s = r + 1; s < t; ++s) {
            if (!spans_simplex(*b.dom, r, s)) continue;
            if (!one_regular_check(b, r, s)) return false;
            if (depth >= 1 && !is_regular_basis(stellar_subdivide(b, r, s), depth - 1))
                return false;
        }
    return true;
}

}  // namespace kleenemv
