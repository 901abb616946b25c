#include "dequant/nuseries.hpp"

namespace dequant {

namespace {

// sum over k in `ks` of (a x)^k / k! * sign(k) nu^k
PolySeries taylor(const Gaussian& a, const Poly& x, int order, int parity, bool alternate) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    Poly term(x.ring(), Gaussian(1));
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            term = term * x * a;
            fact *= k;
        }
        if (parity >= 0 && k % 2 != parity) continue;
        Gaussian scale(Rational(1) / fact);
        if (alternate && (k / 2) % 2) scale = -scale;
        coeffs[static_cast<std::size_t>(k)] = term * scale;
    }
    return PolySeries(std::move(coeffs), order);
}

}  // namespace

PolySeries exp_series(const Gaussian& a, const Poly& x, int order) { return taylor(a, x, order, -1, false); }
PolySeries cosh_series(const Gaussian& a, const Poly& x, int order) { return taylor(a, x, order, 0, false); }
PolySeries sinh_series(const Gaussian& a, const Poly& x, int order) { return taylor(a, x, order, 1, false); }
PolySeries cos_series(const Gaussian& a, const Poly& x, int order) { return taylor(a, x, order, 0, true); }
PolySeries sin_series(const Gaussian& a, const Poly& x, int order) { return taylor(a, x, order, 1, true); }

PolySeries series_from_nu_poly(const Poly& p, std::size_t nu_index, const RingPtr& target, Order order) {
    int d = p.degree_in(nu_index);
    std::vector<Poly> coeffs;
    for (int k = 0; k <= d; ++k)
        coeffs.push_back(p.coeff_of(nu_index, static_cast<unsigned>(k)).restrict_to(target));
    return PolySeries(std::move(coeffs), order);
}

Poly nu_poly_from_series(const PolySeries& s, const RingPtr& ring, std::size_t nu_index) {
    Poly out(ring);
    Poly nu = Poly::var(ring, nu_index);
    Poly nuk(ring, Gaussian(1));
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
        out += s.coeffs()[k].embed(ring) * nuk;
        nuk *= nu;
    }
    return out;
}

}  // namespace dequant
