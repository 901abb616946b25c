#include "oracle.hpp"

#include "dequant/linalg.hpp"

#include <algorithm>
#include <map>

namespace dequant::oracle {

namespace {

// A term c(x) d^alpha of pi_0(X).
template <class F>
struct Term {
    MultiIndex alpha;
    F c;
};

Poly diff(const Poly& p, std::size_t k) { return p.derivative(k); }
TrigPoly diff(const TrigPoly& p, std::size_t k) { return k == 0 ? p.dtheta() : p.derivative(k + 1); }
const Poly& poly_of(const Poly& p) { return p; }
const Poly& poly_of(const TrigPoly& p) { return p.poly(); }

template <class F>
F apply_terms(const std::vector<Term<F>>& terms, const F& phi) {
    F out{};
    for (const auto& t : terms) {
        F d = phi;
        for (std::size_t k = 0; k < t.alpha.size(); ++k)
            for (unsigned m = 0; m < t.alpha[k]; ++m) d = diff(d, k);
        out += t.c * d;
    }
    return out;
}

// All exponent vectors of length n with entries summing to at most d.
std::vector<Exponent> exponents(std::size_t n, int d) {
    std::vector<Exponent> out{Exponent(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Exponent> next;
        for (const auto& e : out) {
            int used = 0;
            for (auto x : e) used += static_cast<int>(x);
            for (int a = 0; a + used <= d; ++a) {
                Exponent f = e;
                f[k] = static_cast<Exponent::value_type>(a);
                next.push_back(f);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Poly> test_functions(const PolyRep& rep, int order) {
    std::vector<Poly> out;
    for (const auto& e : exponents(rep.ring->size(), order)) out.push_back(Poly::monomial(rep.ring, e));
    return out;
}

// c^a s^b with b <= 1 span the trig polynomials of degree <= order in theta;
// remaining ring variables get monomials.
std::vector<TrigPoly> test_functions(const TrigRep& rep, int order) {
    std::vector<TrigPoly> out;
    std::size_t n = rep.ring->size();
    for (const auto& e : exponents(n, order + 1)) {
        if (e[1] > 1) continue;
        out.push_back(TrigPoly(Poly::monomial(rep.ring, e)));
    }
    return out;
}

template <class F>
BruteKernel kernel_of(const Representation<F>& rep, int D) {
    std::size_t n = rep.algebra.dim();
    std::vector<std::vector<Term<F>>> pi0(n);
    int max_order = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [alpha, series] : rep.ops[i].terms()) {
            if (series.coeffs().empty() || poly_of(series.coeff(0)).is_zero()) continue;
            pi0[i].push_back({alpha, series.coeff(0)});
            int o = 0;
            for (auto a : alpha) o += static_cast<int>(a);
            max_order = std::max(max_order, o);
        }
    auto tests = test_functions(rep, D * max_order);
    BruteKernel bk;
    bk.monomials = exponents(n, D);
    std::map<std::vector<std::int64_t>, std::size_t> row_of;
    std::vector<std::map<std::size_t, Gaussian>> columns;
    for (const auto& mono : bk.monomials) {
        std::map<std::size_t, Gaussian> col;
        for (std::size_t t = 0; t < tests.size(); ++t) {
            F phi = tests[t];
            for (std::size_t i = n; i-- > 0;)
                for (unsigned m = 0; m < mono[i]; ++m) phi = apply_terms(pi0[i], phi);
            for (const auto& [e, c] : poly_of(phi).terms()) {
                std::vector<std::int64_t> key{static_cast<std::int64_t>(t)};
                key.insert(key.end(), e.begin(), e.end());
                auto it = row_of.emplace(key, row_of.size()).first;
                col[it->second] += c;
            }
        }
        columns.push_back(std::move(col));
    }
    Matrix<Gaussian> m(row_of.size(), std::vector<Gaussian>(columns.size(), Gaussian(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, x] : columns[c]) m[r][c] = x;
    bk.basis = nullspace(m, columns.size());
    return bk;
}

}  // namespace

BruteKernel brute_force_kernel(const AnyRep& rep, int D) {
    return std::visit([&](const auto& r) { return kernel_of(r, D); }, rep);
}

Comparison compare_ann_at_zero(const AnyRep& rep, int D) {
    Comparison out;
    BruteKernel bk = brute_force_kernel(rep, D);
    AnnResult ann = ann_at_zero(rep, D);
    out.oracle_dim = bk.basis.size();
    out.module_dim = ann.kernel.size();
    Matrix<Gaussian> stacked = bk.basis;
    for (const auto& p : ann.kernel) {
        std::vector<Gaussian> v(bk.monomials.size(), Gaussian(0));
        for (std::size_t k = 0; k < bk.monomials.size(); ++k) v[k] = p.coeff(bk.monomials[k]);
        stacked.push_back(std::move(v));
    }
    std::size_t r = stacked.empty() ? 0 : rank(stacked);
    out.agree = out.oracle_dim == out.module_dim && r == out.oracle_dim;
    out.detail = "oracle dim " + std::to_string(out.oracle_dim) + ", module dim " + std::to_string(out.module_dim) +
                 ", joint rank " + std::to_string(r);
    return out;
}

}  // namespace dequant::oracle
