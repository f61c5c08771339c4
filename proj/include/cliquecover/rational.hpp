#ifndef CLIQUECOVER_RATIONAL_HPP
#define CLIQUECOVER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace cliquecover {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-7/2", "7.5", ".25" into an exact rational (decimals become
/// power-of-ten fractions; no floating point involved).
inline Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s = text;
    bool negative = false;
    size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    auto digits_only = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s.substr(pos);
    Rational r;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw std::invalid_argument("bad rational literal: " + text);
        BigInt d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        r = Rational(BigInt(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!digits_only(ip) || !digits_only(fp)) throw std::invalid_argument("bad decimal literal: " + text);
        BigInt scale = 1;
        for (size_t i = 0; i < body.size() - dot - 1; ++i) scale *= 10;
        r = Rational(BigInt(ip) * scale + BigInt(fp), scale);
    } else {
        if (!digits_only(body)) throw std::invalid_argument("bad integer literal: " + text);
        r = Rational(BigInt(body));
    }
    return negative ? -r : r;
}

/// "p/q" when the denominator is not 1, plain integer otherwise.
inline std::string format_rational(const Rational& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace cliquecover

#endif
