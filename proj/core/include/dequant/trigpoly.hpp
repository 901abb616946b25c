#ifndef DEQUANT_TRIGPOLY_HPP
#define DEQUANT_TRIGPOLY_HPP

#include "dequant/nuseries.hpp"
#include "dequant/poly.hpp"

#include <string>

namespace dequant {

// Ring for trigonometric polynomials: variables c = cos(theta), s = sin(theta)
// come first, further polynomial variables may follow.
RingPtr make_trig_ring(std::vector<std::string> extra = {});

// Polynomial in c, s (and extra variables) reduced modulo c^2 + s^2 = 1, so
// that every stored monomial has s-degree at most one.
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(const Gaussian& c) : p_(c) {}
    TrigPoly(long c) : p_(Gaussian(c)) {}
    explicit TrigPoly(const Poly& p);

    static TrigPoly cos(const RingPtr& ring) { return TrigPoly(Poly::var(ring, 0)); }
    static TrigPoly sin(const RingPtr& ring) { return TrigPoly(Poly::var(ring, 1)); }

    const Poly& poly() const { return p_; }
    const RingPtr& ring() const { return p_.ring(); }
    bool is_zero() const { return p_.is_zero(); }

    TrigPoly operator-() const { return TrigPoly(-p_, raw_tag{}); }
    TrigPoly& operator+=(const TrigPoly& o) {
        p_ += o.p_;
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        p_ -= o.p_;
        return *this;
    }
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(a.p_ * b.p_); }
    TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

    TrigPoly pow(unsigned e) const { return TrigPoly(p_.pow(e)); }

    // d/dtheta: c -> -s, s -> c.
    TrigPoly dtheta() const;
    // Derivative in an extra polynomial variable (ring index >= 2).
    TrigPoly derivative(std::size_t var) const { return TrigPoly(p_.derivative(var), raw_tag{}); }

    TrigPoly conj() const { return TrigPoly(p_.conj(), raw_tag{}); }
    std::string str() const { return p_.str(); }

private:
    struct raw_tag {};
    TrigPoly(Poly p, raw_tag) : p_(std::move(p)) {}
    Poly p_;
};

inline TrigPoly conj_coeff(const TrigPoly& t) { return t.conj(); }
inline bool coeff_is_zero(const TrigPoly& t) { return t.is_zero(); }
inline std::string coeff_str(const TrigPoly& t) { return t.str(); }
inline bool coeff_is_single_term(const TrigPoly& t) { return coeff_is_single_term(t.poly()); }

using TrigSeries = NuSeries<TrigPoly>;

}  // namespace dequant

#endif
