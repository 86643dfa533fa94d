#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hodgecalc {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Element of Q(i): re + im*i with exact rational parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) : re_(n) {}
    Scalar(long n) : re_(n) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    /// The rational part; throws if the value is not real.
    const Rational& as_rational() const {
        if (!is_real()) throw std::domain_error("Scalar: value is not rational: " + str());
        return re_;
    }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n == 0) throw std::domain_error("Scalar: division by zero");
        return Scalar((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(long e) const;

    /// "a/b" for rationals, "a/b+c/d*i" otherwise. Never decimal.
    std::string str() const;

    /// Inverse of str(); also accepts plain integers and "-c*i" forms.
    static Scalar parse(const std::string& s);

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

} // namespace hodgecalc
