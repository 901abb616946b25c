#ifndef DEQUANT_GAUSSIAN_HPP
#define DEQUANT_GAUSSIAN_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dequant {

using Rational = mpq_class;

// Parses "p", "p/q", "-p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Element of Q(i), kept as two canonical rationals.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}
    Gaussian(const Rational& re) : re_(re) { re_.canonicalize(); }
    Gaussian(const Rational& re, const Rational& im) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Gaussian inverse() const;

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    Gaussian pow(unsigned e) const;

    // "3/2", "-1/2*i", "1/2+3/4*i"
    std::string str() const;
    // Accepts the output of str() and plain rationals.
    static Gaussian parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dequant

#endif
