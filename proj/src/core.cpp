#include "okv/core.hpp"

#include <sstream>

namespace okv {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw SchemaError("zero denominator in '" + s + "'");
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = "0";
    Int ipart(head);
    Int scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Rat frac(Int(tail.empty() ? "0" : tail), scale);
    Rat r = Rat(ipart) + (neg ? -frac : frac);
    return r;
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

Rat sqrt_upper_bound(const Rat& s) {
    if (s < 0) throw Error("sqrt_upper_bound: negative input");
    if (s == 0) return Rat(0);
    const unsigned kBits = 30;
    Int shift = Int(1) << (2 * kBits);
    // ceil(2^30 * sqrt(s)) computed through integer sqrt of n*2^60/d,
    // rounded up so that the result always dominates sqrt(s).
    Int scaled = num(s) * shift;
    Int q = scaled / den(s);
    if (q * den(s) != scaled) ++q; // ceil
    Int root = boost::multiprecision::sqrt(q);
    if (root * root < q) ++root;
    return Rat(root, Int(1) << kBits);
}

} // namespace okv
