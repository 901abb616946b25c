#include "dequant/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace dequant {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_text(num) || (slash != std::string_view::npos && !is_integer_text(den)))
        throw ParseError("bad rational literal '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(mpz_class(n));
    } else {
        std::string d(den);
        if (!d.empty() && d.front() == '+') d.erase(0, 1);
        mpz_class dz(d);
        if (dz == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        q = Rational(mpz_class(n), dz);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    Rational n = re_ * re_ + im_ * im_;
    return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Gaussian Gaussian::pow(unsigned e) const {
    Gaussian r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

std::string Gaussian::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = im_ == 1 ? "i" : im_ == -1 ? "-i" : im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag.front() == '-') return re_.get_str() + imag;
    return re_.get_str() + "+" + imag;
}

Gaussian Gaussian::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty number");
    // Split at the last sign that is not in front.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;)
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    auto parse_imag = [](std::string_view s) -> Rational {
        s = trim(s);
        if (s.empty() || s.back() != 'i') throw ParseError("bad imaginary part '" + std::string(s) + "'");
        s.remove_suffix(1);
        s = trim(s);
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        if (s.back() == '*') s.remove_suffix(1);
        return parse_rational(s);
    };
    if (text.back() != 'i') return Gaussian(parse_rational(text));
    if (split == std::string_view::npos) return Gaussian(Rational(0), parse_imag(text));
    return Gaussian(parse_rational(text.substr(0, split)), parse_imag(text.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

}  // namespace dequant
