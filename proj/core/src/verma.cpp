#include "dequant/verma.hpp"

#include "dequant/charvar.hpp"
#include "dequant/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dequant {

namespace {

constexpr int SLICE_EXTRA = 2;

std::size_t index_in(const std::vector<std::string>& names, const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument("unknown basis vector '" + n + "'");
    return static_cast<std::size_t>(it - names.begin());
}

// The pure-nu part of a polynomial in (basis..., nu) as a series.
ScalarSeries nu_part(const Poly& p, std::size_t nu_index) {
    std::vector<Gaussian> c;
    for (const auto& [e, x] : p.terms()) {
        std::size_t k = e[nu_index];
        if (c.size() <= k) c.resize(k + 1, Gaussian(0));
        c[k] += x;
    }
    return ScalarSeries(std::move(c), std::nullopt);
}

Exponent strip_nu(const Exponent& e, std::size_t nu_index) {
    Exponent r = e;
    r[nu_index] = 0;
    return r;
}

Gaussian determinant(Matrix<Gaussian> m) {
    std::size_t n = m.size();
    Gaussian det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Gaussian(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Gaussian inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Gaussian f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace

ChevalleyData make_chevalley(const LieAlgebra& L, const std::vector<std::string>& n_minus,
                             const std::vector<std::string>& cartan, const std::vector<std::string>& n_plus,
                             const std::vector<std::pair<std::string, std::string>>& transpose_pairs) {
    std::vector<std::string> order = n_minus;
    order.insert(order.end(), cartan.begin(), cartan.end());
    order.insert(order.end(), n_plus.begin(), n_plus.end());
    std::size_t n = L.dim();
    if (order.size() != n) throw std::invalid_argument("triangular decomposition does not cover the basis");
    std::vector<std::size_t> old_of(n), new_of(n);
    for (std::size_t k = 0; k < n; ++k) {
        old_of[k] = L.require_index(order[k]);
        new_of[old_of[k]] = k;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = k + 1; j < n; ++j)
            if (old_of[k] == old_of[j]) throw std::invalid_argument("basis vector " + order[k] + " listed twice");
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BracketEntry e{i, j, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(L.c(old_of[i], old_of[j], old_of[k])) != 0) e.terms.emplace_back(k, L.c(old_of[i], old_of[j], old_of[k]));
            if (!e.terms.empty()) entries.push_back(std::move(e));
        }
    ChevalleyData d;
    d.algebra = LieAlgebra(order, entries);
    d.n_minus = n_minus.size();
    d.rank = cartan.size();
    d.n_plus = n_plus.size();
    if (d.n_minus != d.n_plus) throw std::invalid_argument("n- and n+ have different dimensions");
    const auto& M = d.algebra;
    d.transpose.resize(n);
    for (std::size_t k = 0; k < n; ++k) d.transpose[k] = k >= d.n_minus && k < d.n_minus + d.rank ? k : n;
    for (const auto& [a, b] : transpose_pairs) {
        std::size_t ia = index_in(order, a), ib = index_in(order, b);
        d.transpose[ia] = ib;
        d.transpose[ib] = ia;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (d.transpose[k] == n) throw std::invalid_argument("transposition does not cover " + order[k]);
    // ad h eigenvalues
    auto root_of = [&](std::size_t x) {
        RVec r(d.rank);
        for (std::size_t c = 0; c < d.rank; ++c) {
            std::size_t h = d.cartan(c);
            for (std::size_t k = 0; k < n; ++k)
                if (k != x && sgn(M.c(h, x, k)) != 0)
                    throw std::invalid_argument(order[x] + " is not an ad h eigenvector");
            r[c] = M.c(h, x, x);
        }
        return r;
    };
    RVec zero(d.rank);
    d.delta = RVec(d.rank);
    for (std::size_t p = 0; p < d.n_plus; ++p) {
        RVec a = root_of(d.plus(p));
        RVec b = root_of(d.transpose[d.plus(p)]);
        if (a == zero) throw std::invalid_argument(order[d.plus(p)] + " has root zero");
        for (std::size_t c = 0; c < d.rank; ++c) {
            if (b[c] != -a[c]) throw std::invalid_argument("transpose of " + order[d.plus(p)] + " is not in the opposite root space");
            d.delta[c] += a[c] / 2;
        }
        d.roots.push_back(std::move(a));
    }
    for (std::size_t m = 0; m < d.n_minus; ++m)
        if (d.transpose[m] < d.n_minus + d.rank) throw std::invalid_argument("transpose of " + order[m] + " is not in n+");
    for (std::size_t c = 0; c < d.rank; ++c)
        for (std::size_t c2 = 0; c2 < d.rank; ++c2)
            if (!M.bracket_is_zero(d.cartan(c), d.cartan(c2))) throw std::invalid_argument("h is not abelian");
    std::string defect = chevalley_defect(d);
    if (!defect.empty()) throw std::invalid_argument(defect);
    return d;
}

ChevalleyData sl2_chevalley() { return make_chevalley(algebras::sl2(), {"F"}, {"H"}, {"E"}, {{"E", "F"}}); }

std::string chevalley_defect(const ChevalleyData& d) {
    const auto& L = d.algebra;
    std::size_t n = L.dim();
    const auto& t = d.transpose;
    for (std::size_t i = 0; i < n; ++i) {
        if (t[t[i]] != i) return "transposition is not an involution at " + L.names()[i];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                // t[X_i, X_j] = [t X_j, t X_i]
                if (L.c(i, j, k) != L.c(t[j], t[i], t[k]))
                    return "transposition is not an anti-automorphism on [" + L.names()[i] + ", " + L.names()[j] + "]";
    }
    // The conjugation is X -> -X on the basis and t permutes the basis, so
    // t(conj X) = -t(X) = conj(t X) holds for every basis vector.
    return "";
}

Poly conj_pbw(const StarAlgebra& A, const Poly& u) {
    std::size_t n = A.algebra().dim();
    Poly out(A.ring());
    for (const auto& [e, c] : u.terms()) {
        unsigned deg = 0;
        for (std::size_t k = 0; k < n; ++k) deg += e[k];
        out += Poly::monomial(A.ring(), e, deg % 2 ? -c : c);
    }
    // coefficient conjugation and nu -> -nu
    return out.conj();
}

Poly transpose_pbw(StarAlgebra& A, const ChevalleyData& d, const Poly& u) {
    std::size_t n = A.algebra().dim();
    Poly lu = A.lift(u);
    Poly out(A.ring());
    for (const auto& [e, c] : lu.terms()) {
        std::vector<std::size_t> word;
        for (std::size_t k = n; k-- > 0;)
            for (unsigned m = 0; m < e[k]; ++m) word.push_back(d.transpose[k]);
        out += A.pbw_word(word) * A.nu().pow(e[n]) * c;
    }
    return out;
}

Poly cartan_projection(const ChevalleyData& d, const Poly& u) {
    Poly out(u.ring());
    std::size_t lo = d.n_minus, hi = d.n_minus + d.rank;
    for (const auto& [e, c] : u.terms()) {
        bool keep = true;
        for (std::size_t k = 0; k < d.algebra.dim(); ++k)
            if ((k < lo || k >= hi) && e[k] > 0) keep = false;
        if (keep) out += Poly::monomial(u.ring(), e, c);
    }
    return out;
}

VermaModule::VermaModule(ChevalleyData data, RVec lambda, int D, bool shifted)
    : data_(std::move(data)), lambda_(std::move(lambda)), D_(D), shifted_(shifted),
      A_(std::make_shared<StarAlgebra>(data_.algebra)) {
    if (lambda_.size() != data_.rank) throw std::invalid_argument("weight has the wrong number of components");
    if (D_ < 0) throw std::invalid_argument("degree bound must be nonnegative");
    for (std::size_t c = 0; c < data_.rank; ++c) {
        Poly v(A_->ring(), Gaussian(lambda_[c]));
        if (!shifted_) v -= A_->nu() * Gaussian(data_.delta[c]);
        act_value_.push_back(v);
    }
}

std::vector<Poly> VermaModule::basis(int d, bool exact) const {
    if (d < 0) d = D_;
    std::vector<Poly> out;
    for (const auto& e : monomials_up_to(data_.n_minus, d)) {
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (exact && static_cast<int>(deg) != d) continue;
        Exponent full(A_->ring()->size(), 0);
        std::copy(e.begin(), e.end(), full.begin());
        out.push_back(Poly::monomial(A_->ring(), full));
    }
    return out;
}

Poly VermaModule::project(const Poly& u) const {
    std::size_t lo = data_.n_minus, hi = data_.n_minus + data_.rank, n = data_.algebra.dim();
    Poly out(A_->ring());
    for (const auto& [e, c] : u.terms()) {
        bool killed = false;
        for (std::size_t k = hi; k < n; ++k) killed = killed || e[k] > 0;
        if (killed) continue;
        Exponent rest = e;
        Poly factor(A_->ring(), c);
        for (std::size_t k = lo; k < hi; ++k) {
            if (e[k]) factor *= act_value_[k - lo].pow(e[k]);
            rest[k] = 0;
        }
        out += factor * Poly::monomial(A_->ring(), rest);
    }
    return out;
}

Poly VermaModule::act(std::size_t i, const Poly& v) { return project(A_->left_mul(i, A_->lift(v))); }

Poly VermaModule::act_u(const Poly& u, const Poly& v) {
    std::size_t n = data_.algebra.dim();
    Poly lu = A_->lift(u), lv = A_->lift(v);
    Poly out(A_->ring());
    for (const auto& [e, c] : lu.terms()) {
        Poly w = lv;
        for (std::size_t k = n; k-- > 0 && !w.is_zero();)
            for (unsigned m = 0; m < e[k] && !w.is_zero(); ++m) w = act(k, w);
        out += w * A_->nu().pow(e[n]) * c;
    }
    return out;
}

std::vector<Poly> VermaModule::weight(const Poly& monomial) const {
    if (monomial.size() != 1) throw std::invalid_argument("weight needs a single PBW monomial");
    const Exponent& e = monomial.terms().begin()->first;
    std::vector<Poly> w;
    for (std::size_t c = 0; c < data_.rank; ++c) {
        Rational beta(0);
        for (std::size_t m = 0; m < data_.n_minus; ++m) {
            // n- vector m has root -alpha, alpha the root of its transpose
            std::size_t p = data_.transpose[m] - data_.n_minus - data_.rank;
            beta += Rational(e[m]) * data_.roots[p][c];
        }
        Poly v(A_->ring(), Gaussian(lambda_[c]));
        Rational shift = shifted_ ? beta : beta + data_.delta[c];
        w.push_back(v - A_->nu() * Gaussian(shift));
    }
    return w;
}

std::vector<ScalarSeries> VermaModule::coordinates(const Poly& v, const std::vector<Poly>& on) const {
    std::size_t nu = A_->nu_index();
    std::map<Exponent, Poly> parts;
    for (const auto& [e, c] : v.terms()) parts[strip_nu(e, nu)] += Poly::monomial(A_->ring(), e, c);
    std::vector<ScalarSeries> out;
    for (const auto& m : on) {
        const Exponent& key = m.terms().begin()->first;
        auto it = parts.find(key);
        out.push_back(it == parts.end() ? ScalarSeries() : nu_part(it->second, nu));
        if (it != parts.end()) parts.erase(it);
    }
    if (!parts.empty()) throw std::logic_error("vector has components outside the given monomials");
    return out;
}

Matrix<ScalarSeries> VermaModule::matrix(std::size_t i) {
    auto cols = basis(D_), rows = basis(D_ + 1);
    Matrix<ScalarSeries> m(rows.size(), std::vector<ScalarSeries>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto c = coordinates(act(i, cols[j]), rows);
        for (std::size_t r = 0; r < rows.size(); ++r) m[r][j] = c[r];
    }
    return m;
}

VermaModule verma_action(const ChevalleyData& data, const RVec& lambda, int D) {
    if (D < 1) throw std::invalid_argument("degree bound D must be at least 1");
    return VermaModule(data, lambda, D);
}

Matrix<ScalarSeries> shapovalov_gram(const ChevalleyData& data, const RVec& lambda, int d, FormKind kind) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    VermaModule M(data, lambda, d);
    auto& A = M.algebra();
    auto slice = M.basis(d, true);
    std::vector<Poly> e{M.highest()};
    Matrix<ScalarSeries> g(slice.size(), std::vector<ScalarSeries>(slice.size()));
    for (std::size_t j = 0; j < slice.size(); ++j) {
        Poly a = kind == FormKind::hermitian ? conj_pbw(A, slice[j]) : slice[j];
        Poly at = transpose_pbw(A, data, a);
        for (std::size_t k = 0; k < slice.size(); ++k) {
            Poly w = M.act_u(at, slice[k]);
            // the coefficient of e is P(a' b)(lambda)
            Poly top(A.ring());
            for (const auto& [ex, c] : w.terms()) {
                bool pure_nu = true;
                for (std::size_t q = 0; q < A.nu_index(); ++q) pure_nu = pure_nu && ex[q] == 0;
                if (pure_nu) top += Poly::monomial(A.ring(), ex, c);
            }
            g[j][k] = nu_part(top, A.nu_index());
        }
    }
    return g;
}

bool is_hermitian(const Matrix<ScalarSeries>& g) {
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[j][k] != g[k][j].conj()) return false;
    return true;
}

Gaussian gram_determinant_at(const Matrix<ScalarSeries>& g, const Rational& nu0) {
    Matrix<Gaussian> m(g.size(), std::vector<Gaussian>(g.size()));
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k) m[j][k] = g[j][k].substitute(Gaussian(nu0));
    return determinant(std::move(m));
}

Poly killing_casimir(const LieAlgebra& L) {
    std::size_t n = L.dim();
    RingPtr r = make_ring({"a"});
    Matrix<Rational> kappa(n, std::vector<Rational>(n));
    auto ad = [&](std::size_t i) {
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m[k][j] = L.c(i, j, k);
        return m;
    };
    std::vector<Matrix<Rational>> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational tr(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) tr += ads[i][a][b] * ads[j][b][a];
            kappa[i][j] = tr;
        }
    auto inv = inverse(kappa);
    if (!inv) throw std::invalid_argument("Killing form is degenerate: the algebra is not semisimple");
    Poly c(L.xi_ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn((*inv)[i][j]) != 0)
                c += Poly::var(L.xi_ring(), i) * Poly::var(L.xi_ring(), j) * Gaussian((*inv)[i][j]);
    return c;
}

std::string VermaVarieties::str() const {
    std::ostringstream os;
    os << "V: " << V.str() << "\n";
    os << "VA: " << VA.str() << "\n";
    os << "VA candidates:";
    for (const auto& p : VA_candidates) os << " " << p.str();
    os << "\n";
    os << "Casimir acts by its value on the slice: " << (casimir_acts_by_scalar ? "yes" : "NO") << "\n";
    if (!diagnostic.empty()) os << "note: " << diagnostic << "\n";
    return os.str();
}

VermaVarieties verma_varieties(const ChevalleyData& data, const RVec& lambda, int D, int K) {
    if (D < 1) throw std::invalid_argument("degree bound D must be at least 1");
    if (K < 0) throw std::invalid_argument("nu-degree bound K must be nonnegative");
    const auto& L = data.algebra;
    std::size_t n = L.dim();
    RingPtr xi = L.xi_ring();
    VermaModule M(data, lambda, D + SLICE_EXTRA);
    auto& A = M.algebra();
    auto slice = M.basis();
    auto monos = monomials_up_to(n, D);
    VermaVarieties out;

    auto key_vec = [&](std::size_t b, const Poly& w, SparseKernel::Vec& v) {
        for (const auto& [e, c] : w.terms()) {
            SparseKernel::Key k{static_cast<std::int64_t>(b)};
            for (auto x : e) k.push_back(x);
            v[k] += c;
        }
    };
    auto at_nu_zero = [&](const Poly& w) { return w.evaluate(A.nu_index(), Gaussian(0)); };

    // V: the nu = 0 action of S(g)
    {
        SparseKernel ker;
        for (std::size_t col = 0; col < monos.size(); ++col) {
            SparseKernel::Vec v;
            for (std::size_t b = 0; b < slice.size(); ++b) {
                Poly w = slice[b];
                for (std::size_t k = n; k-- > 0 && !w.is_zero();)
                    for (unsigned m = 0; m < monos[col][k] && !w.is_zero(); ++m) w = at_nu_zero(M.act(k, w));
                key_vec(b, w, v);
            }
            for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
            if (auto comb = ker.add_column(col, std::move(v))) {
                Poly p(xi);
                for (const auto& [c, x] : *comb) p += Poly::monomial(xi, monos[c], x);
                out.V_kernel.push_back(p);
            }
        }
        out.V = Ideal(xi, minimal_generators(out.V_kernel, xi));
    }

    // VA: mod-nu kernel of phi -> tau(phi) on the slice
    {
        std::vector<std::vector<Poly>> images;
        for (const auto& a : monos) {
            Poly u = A.tau(Poly::monomial(xi, a));
            std::vector<Poly> row;
            for (const auto& b : slice) row.push_back(M.act_u(u, b));
            images.push_back(std::move(row));
        }
        SparseKernel ker;
        std::vector<Poly> proj;
        std::size_t Mn = monos.size();
        for (int k = 0; k <= K; ++k)
            for (std::size_t a = 0; a < Mn; ++a) {
                SparseKernel::Vec v;
                Poly nuk = A.nu().pow(static_cast<unsigned>(k));
                for (std::size_t b = 0; b < slice.size(); ++b) key_vec(b, images[a][b] * nuk, v);
                auto comb = ker.add_column(static_cast<std::size_t>(k) * Mn + a, std::move(v));
                if (!comb) continue;
                Poly p(xi);
                for (const auto& [c, x] : *comb)
                    if (c < Mn) p += Poly::monomial(xi, monos[c], x);
                if (!p.is_zero()) proj.push_back(p);
            }
        out.VA = Ideal(xi, minimal_generators(echelon_basis(proj, xi), xi));
    }

    // Casimir check
    Poly c = killing_casimir(L);
    Poly value(A.ring()), value0(xi);
    {
        // c evaluated at mu = lambda (+ nu delta), zero on n- and n+
        Poly cv = A.lift(c);
        for (std::size_t k = 0; k < n; ++k) {
            bool in_h = k >= data.n_minus && k < data.n_minus + data.rank;
            Poly at(A.ring());
            if (in_h) {
                std::size_t h = k - data.n_minus;
                at = Poly(A.ring(), Gaussian(lambda[h]));
                if (M.shifted()) at += A.nu() * Gaussian(data.delta[h]);
            }
            cv = cv.substitute(k, at);
        }
        value = cv;
        value0 = Poly(xi, at_nu_zero(cv).constant_term());
    }
    out.VA_candidates.push_back(c - value0);
    Poly u = A.tau(c) - value;
    out.casimir_acts_by_scalar = true;
    for (const auto& b : slice) out.casimir_acts_by_scalar = out.casimir_acts_by_scalar && M.act_u(u, b).is_zero();
    Ideal cand(xi, out.VA_candidates);
    if (!ideal_equal(cand, out.VA))
        out.diagnostic = "mod-nu kernel on the slice differs from <c - c(lambda)>; the slice bound may be too small";
    return out;
}

}  // namespace dequant
