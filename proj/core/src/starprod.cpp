#include "dequant/starprod.hpp"

#include "dequant/poisson.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace dequant {

std::vector<Rational> log_sinhc_coefficients(std::size_t count) {
    // F(u) = sinh(z)/z with u = z^2, G = log F; F G' = F'.
    std::vector<Rational> F(count + 2);
    Rational fact(1);
    for (std::size_t m = 0; m < F.size(); ++m) {
        if (m > 0) fact *= Rational(static_cast<long>((2 * m) * (2 * m + 1)));
        F[m] = Rational(1) / fact;
    }
    std::vector<Rational> g(count);
    for (std::size_t m = 0; m < count; ++m) {
        Rational v = Rational(static_cast<long>(m + 1)) * F[m + 1];
        for (std::size_t l = 1; l <= m; ++l) v -= F[l] * g[m - l];
        g[m] = v;
    }
    std::vector<Rational> a(count);
    for (std::size_t k = 0; k < count; ++k) {
        a[k] = g[k] / Rational(static_cast<long>(k + 1));
        a[k].canonicalize();
    }
    return a;
}

namespace {

RingPtr star_ring(const LieAlgebra& L) {
    std::vector<std::string> names = L.names();
    for (const auto& n : names)
        if (n == "nu") throw std::invalid_argument("basis name 'nu' is reserved for the deformation parameter");
    names.push_back("nu");
    std::vector<bool> imag(names.size(), false);
    imag.back() = true;
    return make_ring(std::move(names), std::move(imag));
}

// Keeps the terms of total degree <= d in the first n variables.
Poly truncate_total(const Poly& p, std::size_t n, int d) {
    Poly out(p.ring());
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (std::size_t k = 0; k < n; ++k) deg += static_cast<int>(e[k]);
        if (deg <= d) out.add_term(e, c);
    }
    return out;
}

}  // namespace

StarAlgebra::StarAlgebra(LieAlgebra L) : L_(std::move(L)), ring_(star_ring(L_)) {}

Poly StarAlgebra::lift(const Poly& p) const {
    if (p.ring() == ring_ || p.ring()->same_as(*ring_)) return p;
    if (p.nvars() == 0) return Poly(ring_, p.constant_term());
    return p.embed(ring_);
}

int StarAlgebra::x_degree(const Exponent& e) const {
    int d = 0;
    for (std::size_t k = 0; k < L_.dim(); ++k) d += static_cast<int>(e[k]);
    return d;
}

const Poly& StarAlgebra::left_mul_monomial(std::size_t i, const Exponent& beta) {
    auto key = std::make_pair(i, beta);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
    std::size_t n = L_.dim();
    std::size_t j = 0;
    while (j < n && beta[j] == 0) ++j;
    Poly result(ring_);
    if (j == n || i <= j) {
        Exponent e = beta;
        ++e[i];
        result = Poly::monomial(ring_, e);
    } else {
        // X_i X_j = X_j X_i + nu [X_i, X_j]
        Exponent rest = beta;
        --rest[j];
        Poly inner = left_mul_monomial(i, rest);
        result = left_mul(j, inner);
        if (!L_.bracket_is_zero(i, j)) {
            Poly nu_part(ring_);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(L_.c(i, j, k)) != 0) nu_part += left_mul_monomial(k, rest) * Gaussian(L_.c(i, j, k));
            result += nu_part * nu();
        }
    }
    return left_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Poly StarAlgebra::left_mul(std::size_t i, const Poly& u) {
    Poly v = lift(u);
    Poly out(ring_);
    std::size_t nu_at = nu_index();
    for (const auto& [e, c] : v.terms()) {
        Exponent beta = e;
        unsigned k = beta[nu_at];
        beta[nu_at] = 0;
        const Poly& m = left_mul_monomial(i, beta);
        if (k == 0) {
            out += m * c;
            continue;
        }
        for (const auto& [f, d] : m.terms()) {
            Exponent g = f;
            g[nu_at] += k;
            out.add_term(g, d * c);
        }
    }
    return out;
}

Poly StarAlgebra::pbw_mul(const Poly& a, const Poly& b) {
    Poly A = lift(a), B = lift(b);
    Poly out(ring_);
    std::size_t n = L_.dim();
    for (const auto& [e, c] : A.terms()) {
        Poly r = B;
        for (std::size_t k = n; k-- > 0;)
            for (unsigned m = 0; m < e[k]; ++m) r = left_mul(k, r);
        Exponent nupow(ring_->size(), 0);
        nupow[nu_index()] = e[nu_index()];
        out += r * Poly::monomial(ring_, nupow, c);
    }
    return out;
}

Poly StarAlgebra::pbw_word(const std::vector<std::size_t>& word) {
    Poly r(ring_, Gaussian(1));
    for (std::size_t k = word.size(); k-- > 0;) r = left_mul(word[k], r);
    return r;
}

const Poly& StarAlgebra::symmetrize_monomial(const Exponent& alpha) {
    auto it = sym_cache_.find(alpha);
    if (it != sym_cache_.end()) return it->second;
    int d = x_degree(alpha);
    Poly result(ring_);
    if (d <= 1) {
        result = Poly::monomial(ring_, alpha);
    } else {
        // sigma(xi^a) = (1/|a|) sum_i a_i X_i sigma(xi^{a - e_i})
        for (std::size_t i = 0; i < L_.dim(); ++i) {
            if (alpha[i] == 0) continue;
            Exponent rest = alpha;
            --rest[i];
            Poly s = symmetrize_monomial(rest);
            result += left_mul(i, s) * Gaussian(Rational(static_cast<long>(alpha[i])));
        }
        result *= Gaussian(Rational(1, d));
    }
    return sym_cache_.emplace(alpha, std::move(result)).first->second;
}

Poly StarAlgebra::symmetrize(const Poly& p) {
    Poly v = lift(p);
    Poly out(ring_);
    std::size_t nu_at = nu_index();
    for (const auto& [e, c] : v.terms()) {
        Exponent alpha = e;
        unsigned k = alpha[nu_at];
        alpha[nu_at] = 0;
        Poly s = symmetrize_monomial(alpha);
        if (k) {
            Exponent nupow(ring_->size(), 0);
            nupow[nu_at] = k;
            s *= Poly::monomial(ring_, nupow);
        }
        out += s * c;
    }
    return out;
}

Poly StarAlgebra::unsymmetrize(const Poly& u) {
    Poly rest = lift(u);
    Poly out(ring_);
    while (!rest.is_zero()) {
        int d = -1;
        for (const auto& [e, c] : rest.terms()) d = std::max(d, x_degree(e));
        Poly top(ring_);
        for (const auto& [e, c] : rest.terms())
            if (x_degree(e) == d) top.add_term(e, c);
        out += top;
        rest -= symmetrize(top);
    }
    return out;
}

void StarAlgebra::ensure_j(int degree) {
    if (degree <= jdeg_) return;
    std::size_t n = L_.dim();
    auto ad = ad_matrix(L_, generic_element(ring_));
    std::size_t kmax = static_cast<std::size_t>(degree / 2);
    auto a = log_sinhc_coefficients(kmax);
    // S = (1/2) sum_k a_k 4^{-k} tr((ad x)^{2k}); the nu^{2k} weight equals the degree.
    Poly S(ring_);
    Matrix<Poly> ad2 = mat_mul(ad, ad), pw = ad2;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (k > 1) pw = mat_mul(pw, ad2);
        Poly tr(ring_);
        for (std::size_t r = 0; r < n; ++r) tr += pw[r][r];
        Rational w = a[k - 1] / Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k + 1));
        S += tr * Gaussian(w);
    }
    auto expo = [&](const Poly& s) {
        Poly result(ring_, Gaussian(1)), term(ring_, Gaussian(1));
        for (std::size_t m = 1; 2 * m <= static_cast<std::size_t>(degree); ++m) {
            term = truncate_total(term * s, n, degree) * Gaussian(Rational(1, static_cast<long>(m)));
            if (term.is_zero()) break;
            result += term;
        }
        return result;
    };
    jplus_ = expo(S);
    jminus_ = expo(-S);
    jdeg_ = degree;
}

Poly StarAlgebra::apply_jhalf(const Poly& p, int sign) {
    Poly v = lift(p);
    if (v.is_zero()) return v;
    int d = 0;
    for (const auto& [e, c] : v.terms()) d = std::max(d, x_degree(e));
    ensure_j(d);
    const Poly& J = sign > 0 ? jplus_ : jminus_;
    Poly out(ring_);
    std::size_t n = L_.dim();
    for (const auto& [e, c] : J.terms()) {
        int order = x_degree(e);
        if (order > d) continue;
        Poly q = v;
        for (std::size_t k = 0; k < n && !q.is_zero(); ++k)
            for (unsigned m = 0; m < e[k] && !q.is_zero(); ++m) q = q.derivative(k);
        if (q.is_zero()) continue;
        Exponent nupow(ring_->size(), 0);
        nupow[nu_index()] = static_cast<unsigned>(order);
        out += q * Poly::monomial(ring_, nupow, c);
    }
    return out;
}

DufloOperator StarAlgebra::duflo_jhalf(int order, int sign) {
    ensure_j(order);
    std::vector<std::string> names;
    for (const auto& n : L_.names()) names.push_back("d_" + n);
    DufloOperator op;
    op.ring = make_ring(names);
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1, Poly(op.ring));
    const Poly& J = sign > 0 ? jplus_ : jminus_;
    for (const auto& [e, c] : J.terms()) {
        int m = x_degree(e);
        if (m > order) continue;
        Exponent f(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(L_.dim()));
        coeffs[static_cast<std::size_t>(m)].add_term(f, c);
    }
    op.series = PolySeries(std::move(coeffs), order);
    return op;
}

Poly StarAlgebra::star(const Poly& f, const Poly& g) { return tau_inverse(pbw_mul(tau(f), tau(g))); }

PolySeries StarAlgebra::star_series(const Poly& f, const Poly& g, Order order) {
    return series_from_nu_poly(star(f, g), nu_index(), L_.xi_ring(), order);
}

bool StarReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string StarReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.ok) os << "  witness: " << c.witness;
        os << "\n";
    }
    return os.str();
}

namespace {

Poly random_element(std::mt19937_64& rng, const RingPtr& ring, std::size_t nvars, unsigned max_degree) {
    std::uniform_int_distribution<int> coef(-3, 3), nterms(1, 4), deg(0, static_cast<int>(max_degree)),
        pick(0, static_cast<int>(nvars) - 1), flip(0, 3);
    Poly p(ring);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Exponent e(ring->size(), 0);
        int d = deg(rng);
        for (int m = 0; m < d; ++m) ++e[static_cast<std::size_t>(pick(rng))];
        int re = coef(rng), im = flip(rng) == 0 ? coef(rng) : 0;
        p.add_term(e, Gaussian(Rational(re), Rational(im)));
    }
    return p;
}

Poly truncate_nu(const Poly& p, std::size_t nu_at, Order order) {
    if (!order) return p;
    Poly out(p.ring());
    for (const auto& [e, c] : p.terms())
        if (static_cast<int>(e[nu_at]) <= *order) out.add_term(e, c);
    return out;
}

void record(StarCheck& chk, bool ok, const std::string& witness) {
    if (chk.ok && !ok) {
        chk.ok = false;
        chk.witness = witness;
    }
}

}  // namespace

StarReport star_properties(const LieAlgebra& L, const StarPropertyOptions& opts) {
    StarAlgebra A(L);
    PoissonContext pc(L);
    const RingPtr& R = A.ring();
    std::size_t n = L.dim(), nu_at = A.nu_index();
    std::mt19937_64 rng(opts.seed);
    StarCheck assoc{"associativity", true, ""}, c0{"C0(f,g) = fg", true, ""}, c1{"C1(f,g) - C1(g,f) = {f,g}", true, ""},
        parity{"f *_{-nu} g = g *_nu f", true, ""}, invol{"(f*g)^* = g^* * f^*", true, ""},
        central{"central f*g = fg", true, ""};
    auto cut = [&](const Poly& p) { return truncate_nu(p, nu_at, opts.order); };
    Poly minus_nu = -A.nu();
    for (std::size_t s = 0; s < opts.samples; ++s) {
        Poly f = random_element(rng, R, n, opts.max_degree), g = random_element(rng, R, n, opts.max_degree),
             h = random_element(rng, R, n, opts.max_degree);
        std::string w = "f = " + f.str() + ", g = " + g.str();
        Poly fg = A.star(f, g), gf = A.star(g, f);
        Poly lhs = A.star(fg, h), rhs = A.star(f, A.star(g, h));
        record(assoc, cut(lhs) == cut(rhs), w + ", h = " + h.str());
        record(c0, fg.evaluate(nu_at, Gaussian(0)) == f * g, w);
        Poly c1_anti = (fg - gf).coeff_of(nu_at, 1);
        Poly pb = A.lift(pc.bracket(f.restrict_to(L.xi_ring()), g.restrict_to(L.xi_ring())));
        record(c1, c1_anti == pb, w);
        record(parity, fg.substitute(nu_at, minus_nu) == gf, w);
        record(invol, fg.conj() == A.star(g.conj(), f.conj()), w);
    }
    for (std::size_t a = 0; a < opts.casimirs.size(); ++a)
        for (std::size_t b = 0; b < opts.casimirs.size(); ++b) {
            Poly p = A.lift(opts.casimirs[a]), q = A.lift(opts.casimirs[b]);
            record(central, A.star(p, q) == p * q, "p = " + p.str() + ", q = " + q.str());
        }
    StarReport rep;
    rep.checks = {assoc, c0, c1, parity, invol};
    if (!opts.casimirs.empty()) rep.checks.push_back(central);
    return rep;
}

}  // namespace dequant
