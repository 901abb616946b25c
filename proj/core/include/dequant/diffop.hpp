#ifndef DEQUANT_DIFFOP_HPP
#define DEQUANT_DIFFOP_HPP

#include "dequant/nuseries.hpp"
#include "dequant/poly.hpp"
#include "dequant/trigpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dequant {

// How a coefficient ring exposes its coordinates and derivations.
template <class F>
struct CoeffTraits;

// Every ring variable is a coordinate.
template <>
struct CoeffTraits<Poly> {
    static std::size_t coords(const RingPtr& r) { return r->size(); }
    static Poly lift(const Poly& p, const RingPtr& r) {
        if (p.ring() == r) return p;
        if (p.nvars() == 0) return Poly(r, p.constant_term());
        if (!p.ring()->same_as(*r)) throw std::invalid_argument("coefficient ring mismatch");
        return p;
    }
    static Poly d(const Poly& p, std::size_t k) { return p.derivative(k); }
    static std::string coord_name(const RingPtr& r, std::size_t k) { return r->names[k]; }
    static bool imaginary(const RingPtr& r, std::size_t k) { return !r->imaginary.empty() && r->imaginary[k]; }
};

// Coordinate 0 is theta (acting through c, s); coordinate k >= 1 is ring
// variable k + 1.
template <>
struct CoeffTraits<TrigPoly> {
    static std::size_t coords(const RingPtr& r) { return r->size() - 1; }
    static TrigPoly lift(const TrigPoly& p, const RingPtr& r) {
        return TrigPoly(CoeffTraits<Poly>::lift(p.poly(), r));
    }
    static TrigPoly d(const TrigPoly& p, std::size_t k) { return k == 0 ? p.dtheta() : p.derivative(k + 1); }
    static std::string coord_name(const RingPtr& r, std::size_t k) { return k == 0 ? "theta" : r->names[k + 1]; }
    static bool imaginary(const RingPtr& r, std::size_t k) {
        return k > 0 && !r->imaginary.empty() && r->imaginary[k + 1];
    }
};

using MultiIndex = std::vector<std::uint32_t>;

// Finite sum of coefficient * d^alpha, coefficients written to the left.
template <class F>
class DiffOperator {
public:
    using Coeff = NuSeries<F>;
    using Traits = CoeffTraits<F>;
    using Terms = std::map<MultiIndex, Coeff>;

    DiffOperator() : ring_(empty_ring()) {}
    explicit DiffOperator(RingPtr ring) : ring_(std::move(ring)) {}
    DiffOperator(RingPtr ring, const Coeff& c) : ring_(std::move(ring)) { add_term(zero_index(), c); }

    static DiffOperator scalar(const RingPtr& ring, const Gaussian& c) { return DiffOperator(ring, Coeff(F(c))); }
    static DiffOperator multiplication(const RingPtr& ring, const Coeff& c) { return DiffOperator(ring, c); }
    static DiffOperator derivative(const RingPtr& ring, std::size_t k, unsigned power = 1) {
        DiffOperator d(ring);
        MultiIndex a = d.zero_index();
        a.at(k) = power;
        d.add_term(a, Coeff(F(Gaussian(1))));
        return d;
    }
    // d^alpha with unit coefficient.
    static DiffOperator monomial(const RingPtr& ring, const MultiIndex& alpha, const Coeff& c) {
        DiffOperator d(ring);
        d.add_term(alpha, c);
        return d;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t coords() const { return Traits::coords(ring_); }
    Order order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const MultiIndex& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Coeff(std::vector<F>{}, order_) : it->second;
    }
    // Highest total order of differentiation, -1 for zero.
    int diff_order() const {
        int m = -1;
        for (const auto& [a, c] : terms_) m = std::max(m, total(a));
        return m;
    }
    MultiIndex zero_index() const { return MultiIndex(coords(), 0); }

    void add_term(const MultiIndex& a, const Coeff& c) {
        if (a.size() != coords()) throw std::invalid_argument("derivative multi-index has wrong length");
        Coeff lc = c.map([&](const F& p) { return Traits::lift(p, ring_); });
        set_order(min_order(order_, lc.order()));
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            if (!lc.is_zero()) terms_.emplace(a, lc.truncated(order_));
        } else {
            it->second += lc;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOperator operator-() const {
        DiffOperator r = *this;
        for (auto& [a, c] : r.terms_) c = -c;
        return r;
    }
    DiffOperator& operator+=(const DiffOperator& o) {
        check_ring(o);
        set_order(min_order(order_, o.order_));
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    DiffOperator& operator-=(const DiffOperator& o) { return *this += -o; }
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }

    // Composition A o B.
    friend DiffOperator operator*(const DiffOperator& A, const DiffOperator& B) { return compose(A, B); }
    friend DiffOperator operator*(const Gaussian& c, DiffOperator A) {
        for (auto& [a, x] : A.terms_) x = x * F(c);
        A.drop_zeros();
        return A;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    static DiffOperator compose(const DiffOperator& A, const DiffOperator& B) {
        A.check_ring(B);
        DiffOperator out(A.ring_);
        out.set_order(min_order(A.order_, B.order_));
        for (const auto& [alpha, a] : A.terms_)
            for (const auto& [beta, b] : B.terms_) {
                // a d^alpha b d^beta = a sum_gamma C(alpha, gamma) (d^gamma b) d^{alpha - gamma + beta}
                MultiIndex gamma(alpha.size(), 0);
                while (true) {
                    Coeff db = b;
                    Rational binom(1);
                    for (std::size_t k = 0; k < gamma.size(); ++k) {
                        for (unsigned m = 0; m < gamma[k]; ++m) db = db.map([&](const F& p) { return Traits::d(p, k); });
                        binom *= binomial(alpha[k], gamma[k]);
                    }
                    if (!db.is_zero()) {
                        MultiIndex idx(alpha.size());
                        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = alpha[k] - gamma[k] + beta[k];
                        out.add_term(idx, (a * db) * F(Gaussian(binom)));
                    }
                    if (!next_index(gamma, alpha)) break;
                }
            }
        return out;
    }

    DiffOperator commutator(const DiffOperator& B) const { return compose(*this, B) - compose(B, *this); }

    Coeff apply(const Coeff& phi) const {
        Coeff lphi = phi.map([&](const F& p) { return Traits::lift(p, ring_); });
        Coeff out(std::vector<F>{}, min_order(order_, phi.order()));
        for (const auto& [alpha, a] : terms_) {
            Coeff d = lphi;
            for (std::size_t k = 0; k < alpha.size(); ++k)
                for (unsigned m = 0; m < alpha[k]; ++m) d = d.map([&](const F& p) { return Traits::d(p, k); });
            out += a * d;
        }
        return out;
    }
    Coeff apply(const F& phi) const { return apply(Coeff(phi)); }

    // Formal adjoint for the pairing <phi, psi> = integral of conj(phi) psi:
    // (a d^alpha)^T = (d^T)^alpha o conj(a), with d^T = -d on real coordinates
    // and d^T = d on imaginary ones.
    DiffOperator formal_adjoint() const {
        DiffOperator out(ring_);
        out.set_order(order_);
        for (const auto& [alpha, a] : terms_) {
            Gaussian sign(1);
            for (std::size_t k = 0; k < alpha.size(); ++k)
                if (!Traits::imaginary(ring_, k) && alpha[k] % 2) sign = -sign;
            DiffOperator d = monomial(ring_, alpha, Coeff(F(sign)));
            out += compose(d, multiplication(ring_, a.conj()));
        }
        return out;
    }

    DiffOperator truncated(Order o) const {
        DiffOperator r = *this;
        r.set_order(min_order(order_, o));
        return r;
    }

    // Evaluation nu = nu0; refuses truncated operators.
    DiffOperator substitute_nu(const Gaussian& nu0) const {
        if (order_) throw std::domain_error("nu_substitute refuses a truncated operator");
        DiffOperator out(ring_);
        for (const auto& [a, c] : terms_) out.add_term(a, Coeff(c.substitute(nu0)));
        return out;
    }

    template <class Fn>
    DiffOperator map_coeffs(Fn fn) const {
        DiffOperator out(ring_);
        out.set_order(order_);
        for (const auto& [a, c] : terms_) out.add_term(a, fn(c));
        return out;
    }

    std::string str(const std::string& nu = "nu") const {
        if (terms_.empty()) return order_ ? "0 + O(" + nu + "^" + std::to_string(*order_ + 1) + ")" : "0";
        std::string out;
        for (const auto& [alpha, c] : terms_) {
            std::string d = derivative_str(alpha);
            std::string cs = c.with_order(std::nullopt).str(nu);
            std::string term;
            if (d.empty()) {
                term = cs;
            } else if (cs == "1") {
                term = d;
            } else if (cs == "-1") {
                term = "-" + d;
            } else {
                bool simple = c.coeffs().size() == 1 && coeff_is_single_term(c.coeffs()[0]);
                bool monic_nu = c.coeffs().size() > 1 && cs.find(' ') == std::string::npos;
                term = (simple || monic_nu ? cs : "(" + cs + ")") + "*" + d;
            }
            if (out.empty()) out = term;
            else if (term.front() == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        if (order_) out += " + O(" + nu + "^" + std::to_string(*order_ + 1) + ")";
        return out;
    }

private:
    RingPtr ring_;
    Terms terms_;
    Order order_;

    static int total(const MultiIndex& a) {
        int t = 0;
        for (auto x : a) t += static_cast<int>(x);
        return t;
    }
    static Rational binomial(unsigned n, unsigned k) {
        Rational r(1);
        for (unsigned i = 0; i < k; ++i) r = r * Rational(static_cast<long>(n - i)) / Rational(static_cast<long>(i + 1));
        r.canonicalize();
        return r;
    }
    static bool next_index(MultiIndex& g, const MultiIndex& bound) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k] < bound[k]) {
                ++g[k];
                return true;
            }
            g[k] = 0;
        }
        return false;
    }
    void set_order(Order o) {
        order_ = o;
        if (!o) return;
        for (auto& [a, c] : terms_) c = c.truncated(o);
        drop_zeros();
    }
    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }
    void check_ring(const DiffOperator& o) const {
        if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw std::invalid_argument("operators over different coefficient rings");
    }
    std::string derivative_str(const MultiIndex& alpha) const {
        std::string s;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            if (!alpha[k]) continue;
            if (!s.empty()) s += "*";
            s += "d_" + Traits::coord_name(ring_, k);
            if (alpha[k] > 1) s += "^" + std::to_string(alpha[k]);
        }
        return s;
    }
};

using PolyOperator = DiffOperator<Poly>;
using TrigOperator = DiffOperator<TrigPoly>;

}  // namespace dequant

#endif
