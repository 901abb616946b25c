#ifndef DEQUANT_NUSERIES_HPP
#define DEQUANT_NUSERIES_HPP

#include "dequant/gaussian.hpp"
#include "dequant/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

inline Gaussian conj_coeff(const Gaussian& g) { return g.conj(); }
inline Poly conj_coeff(const Poly& p) { return p.conj(); }
inline bool coeff_is_zero(const Gaussian& g) { return g.is_zero(); }
inline bool coeff_is_zero(const Poly& p) { return p.is_zero(); }
inline std::string coeff_str(const Gaussian& g) { return g.str(); }
inline std::string coeff_str(const Poly& p) { return p.str(); }
inline bool coeff_is_single_term(const Gaussian& g) { return g.is_real() || g.is_imaginary(); }
inline bool coeff_is_single_term(const Poly& p) {
    return p.size() == 1 && coeff_is_single_term(p.terms().begin()->second);
}

// Truncation order: nullopt means an exact nu-polynomial.
using Order = std::optional<int>;

inline Order min_order(Order a, Order b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

inline std::string order_str(Order o) { return o ? std::to_string(*o) : std::string("exact"); }

// Formal series sum_k nu^k c_k. Truncated series carry the last order N they
// know; arithmetic keeps the smaller order of its operands.
template <class F>
class NuSeries {
public:
    NuSeries() = default;
    NuSeries(const F& c, Order order = std::nullopt) : coeffs_{c}, order_(order) { normalize(); }
    NuSeries(std::vector<F> coeffs, Order order) : coeffs_(std::move(coeffs)), order_(order) { normalize(); }

    static NuSeries nu_power(unsigned k, const F& c = F(Gaussian(1)), Order order = std::nullopt) {
        std::vector<F> v(k + 1);
        v[k] = c;
        return NuSeries(std::move(v), order);
    }

    const std::vector<F>& coeffs() const { return coeffs_; }
    F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Order order() const { return order_; }
    bool is_exact() const { return !order_.has_value(); }
    bool is_zero() const { return coeffs_.empty(); }

    NuSeries truncated(Order order) const { return NuSeries(coeffs_, min_order(order_, order)); }
    NuSeries with_order(Order order) const { return NuSeries(coeffs_, order); }

    NuSeries operator-() const {
        NuSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    NuSeries& operator+=(const NuSeries& o) {
        order_ = min_order(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    NuSeries& operator-=(const NuSeries& o) { return *this += -o; }
    friend NuSeries operator+(NuSeries a, const NuSeries& b) { return a += b; }
    friend NuSeries operator-(NuSeries a, const NuSeries& b) { return a -= b; }

    friend NuSeries operator*(const NuSeries& a, const NuSeries& b) {
        Order order = min_order(a.order_, b.order_);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return NuSeries(std::vector<F>{}, order);
        std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (order) n = std::min<std::size_t>(n, static_cast<std::size_t>(*order) + 1);
        std::vector<F> out(n);
        for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
            if (coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j)
                if (!coeff_is_zero(b.coeffs_[j])) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return NuSeries(std::move(out), order);
    }
    NuSeries& operator*=(const NuSeries& o) { return *this = *this * o; }
    friend NuSeries operator*(NuSeries a, const F& c) {
        for (auto& x : a.coeffs_) x = x * c;
        a.normalize();
        return a;
    }
    friend NuSeries operator*(const F& c, NuSeries a) {
        for (auto& x : a.coeffs_) x = c * x;
        a.normalize();
        return a;
    }

    // Structural equality: same coefficients and same truncation flag.
    friend bool operator==(const NuSeries& a, const NuSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const NuSeries& a, const NuSeries& b) { return !(a == b); }

    // Equality of the parts both operands know.
    bool agrees_with(const NuSeries& o) const {
        Order m = min_order(order_, o.order_);
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        if (m) n = std::min<std::size_t>(n, static_cast<std::size_t>(*m) + 1);
        for (std::size_t k = 0; k < n; ++k)
            if (!(coeff(k) == o.coeff(k))) return false;
        return true;
    }

    bool is_zero_to_order() const { return coeffs_.empty(); }

    NuSeries pow(unsigned e) const {
        NuSeries r(F(Gaussian(1)), order_), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }

    // nu -> -nu together with conjugation of every coefficient.
    NuSeries conj() const {
        NuSeries r = *this;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
            r.coeffs_[k] = conj_coeff(r.coeffs_[k]);
            if (k % 2) r.coeffs_[k] = -r.coeffs_[k];
        }
        return r;
    }

    NuSeries flip_nu() const {
        NuSeries r = *this;
        for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
        return r;
    }

    // Evaluation at a number; only defined for exact series.
    F substitute(const Gaussian& nu0) const {
        if (order_) throw std::domain_error("nu_substitute refuses a truncated series");
        F acc{};
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * F(nu0) + coeffs_[k];
        return acc;
    }

    template <class Fn>
    auto map(Fn fn) const {
        using G = decltype(fn(std::declval<const F&>()));
        std::vector<G> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return NuSeries<G>(std::move(out), order_);
    }

    std::string str(const std::string& nu = "nu") const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeff_is_zero(coeffs_[k])) continue;
            std::string c = coeff_str(coeffs_[k]);
            std::string term;
            std::string nuk = k == 0 ? "" : k == 1 ? nu : nu + "^" + std::to_string(k);
            if (k == 0) term = c;
            else if (c == "1") term = nuk;
            else if (c == "-1") term = "-" + nuk;
            else if (coeff_is_single_term(coeffs_[k])) term = c + "*" + nuk;
            else term = "(" + c + ")*" + nuk;
            if (out.empty()) out = term;
            else if (term.front() == '-' && coeff_is_single_term(coeffs_[k])) out += " - " + term.substr(1);
            else out += " + " + term;
        }
        if (out.empty()) out = "0";
        if (order_) out += " + O(" + nu + "^" + std::to_string(*order_ + 1) + ")";
        return out;
    }

private:
    std::vector<F> coeffs_;
    Order order_;

    void normalize() {
        if (order_ && static_cast<int>(coeffs_.size()) > *order_ + 1) coeffs_.resize(static_cast<std::size_t>(*order_ + 1));
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

using ScalarSeries = NuSeries<Gaussian>;
using PolySeries = NuSeries<Poly>;

// Taylor series of exp(a * nu * x) for a polynomial x, to order N.
PolySeries exp_series(const Gaussian& a, const Poly& x, int order);
// cosh / sinh of (a * nu * x).
PolySeries cosh_series(const Gaussian& a, const Poly& x, int order);
PolySeries sinh_series(const Gaussian& a, const Poly& x, int order);
// cos / sin of (a * nu * x).
PolySeries cos_series(const Gaussian& a, const Poly& x, int order);
PolySeries sin_series(const Gaussian& a, const Poly& x, int order);

// Reads a nu-polynomial stored as a Poly with a variable `nu` into a series
// whose coefficients live in `target` (the ring without nu).
PolySeries series_from_nu_poly(const Poly& p, std::size_t nu_index, const RingPtr& target, Order order);
// Inverse of the above: coefficients are embedded into `ring`, which must
// contain the nu variable at nu_index.
Poly nu_poly_from_series(const PolySeries& s, const RingPtr& ring, std::size_t nu_index);

}  // namespace dequant

#endif
