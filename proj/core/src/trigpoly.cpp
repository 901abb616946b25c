#include "dequant/trigpoly.hpp"

namespace dequant {

RingPtr make_trig_ring(std::vector<std::string> extra) {
    std::vector<std::string> names{"c", "s"};
    names.insert(names.end(), extra.begin(), extra.end());
    return make_ring(std::move(names));
}

TrigPoly::TrigPoly(const Poly& p) {
    if (p.nvars() == 0) {
        p_ = p;
        return;
    }
    if (p.nvars() < 2 || p.ring()->names[0] != "c" || p.ring()->names[1] != "s")
        throw std::invalid_argument("trigonometric ring must start with c, s");
    // s^k = s^(k-2) (1 - c^2), applied until every s-degree is at most one.
    Poly out(p.ring());
    Poly one_minus_c2 = Poly(p.ring(), Gaussian(1)) - Poly::var(p.ring(), 0).pow(2);
    for (const auto& [e, coef] : p.terms()) {
        Exponent base = e;
        unsigned k = base[1];
        base[1] = k % 2;
        Poly term = Poly::monomial(p.ring(), base, coef);
        if (k >= 2) term *= one_minus_c2.pow(k / 2);
        out += term;
    }
    p_ = std::move(out);
}

TrigPoly TrigPoly::dtheta() const {
    if (p_.nvars() == 0) return TrigPoly();
    const RingPtr& r = p_.ring();
    Poly c = Poly::var(r, 0), s = Poly::var(r, 1);
    return TrigPoly(c * p_.derivative(1) - s * p_.derivative(0));
}

}  // namespace dequant
