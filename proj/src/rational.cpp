#include "epsolve/rational.hpp"

#include <cassert>
#include <cctype>
#include <charconv>

namespace epsolve {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim ascii whitespace
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw constraint_error("empty rational literal");
    s = s.substr(b, e - b + 1);

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw constraint_error("malformed rational: '" + text + "'");

    Rational q;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw constraint_error("malformed rational: '" + text + "'");
        Integer n(num, 10), d(den, 10);
        if (sgn(d) == 0) throw constraint_error("zero denominator in rational: '" + text + "'");
        q = Rational(n, d);
        q.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
            throw constraint_error("malformed rational: '" + text + "'");
        Integer n(ip + fp, 10);
        Integer d(1);
        for (size_t i = 0; i < fp.size(); ++i) d *= 10;
        q = Rational(n, d);
        q.canonicalize();
    } else {
        if (!all_digits(s)) throw constraint_error("malformed rational: '" + text + "'");
        q = Rational(Integer(s, 10));
    }
    if (neg) q = -q;
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    assert(ec == std::errc());
    return std::string(buf, end);
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    assert(lo <= hi);
    if (lo == hi) return lo;
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo < hi: continued-fraction descent
    Integer fl = Integer(lo.get_num() / lo.get_den());  // floor, lo > 0
    if (Rational(fl + 1) <= hi) {
        // an integer lies inside
        return Rational(fl + (Rational(fl) < lo ? 1 : 0));
    }
    if (Rational(fl) == lo) return lo;
    Rational flo = lo - Rational(fl), fhi = hi - Rational(fl);
    // recurse on reciprocals, swapped
    Rational r = simplest_rational_in(1 / fhi, 1 / flo);
    return Rational(fl) + 1 / r;
}

} // namespace epsolve
