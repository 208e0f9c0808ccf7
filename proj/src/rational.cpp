#include "kleenemv/rational.hpp"

#include <stdexcept>

namespace kleenemv {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    size_t slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("bad rational literal: " + s);
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("bad rational literal: " + s);
        for (size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("bad rational literal: " + s);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d <= 0) throw std::invalid_argument("nonpositive denominator: " + s);
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int ratvec_cmp(const RatVec& a, const RatVec& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

std::string ratvec_str(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += rat_str(v[i]);
    }
    s += ')';
    return s;
}

}  // namespace kleenemv
