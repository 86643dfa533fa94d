#include "hodgecalc/scalar.hpp"

#include <ostream>

namespace hodgecalc {

std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Rational parse_rational(const std::string& in) {
    std::string s = in;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    if (s.empty()) throw parse_error("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw parse_error("decimal literals are not accepted: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal: " + s);
    }
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return Scalar(1) / pow(-e);
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string s = rational_str(re_);
    if (im_ > 0)
        s += "+" + rational_str(im_) + "*i";
    else
        s += "-" + rational_str(-im_) + "*i";
    return s;
}

Scalar Scalar::parse(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty scalar literal");

    auto star = s.find("*i");
    if (star == std::string::npos) {
        if (s == "i") return Scalar::i();
        if (s == "-i") return -Scalar::i();
        return Scalar(parse_rational(s));
    }
    if (star + 2 != s.size()) throw parse_error("bad scalar literal: " + in);
    std::string body = s.substr(0, star);
    // split off the imaginary coefficient at the last top-level +/- (not a leading sign
    // and not the sign of a denominator-free numerator after '/')
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '+' &&
            body[k - 1] != '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return Scalar(Rational(0), parse_rational(body));
    Rational re = parse_rational(body.substr(0, split));
    std::string imstr = body.substr(split);
    if (imstr == "+") imstr = "1";
    if (imstr == "-") imstr = "-1";
    return Scalar(re, parse_rational(imstr));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace hodgecalc
