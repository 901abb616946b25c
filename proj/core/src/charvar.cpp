#include "dequant/charvar.hpp"

#include "dequant/linalg.hpp"
#include "dequant/poisson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dequant {

namespace {

const Poly& as_poly(const Poly& p) { return p; }
const Poly& as_poly(const TrigPoly& p) { return p.poly(); }

template <class F>
SparseKernel::Vec vectorize(const DiffOperator<F>& op) {
    SparseKernel::Vec v;
    for (const auto& [alpha, series] : op.terms()) {
        const auto& cs = series.coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            for (const auto& [e, c] : as_poly(cs[k]).terms()) {
                SparseKernel::Key key;
                key.push_back(static_cast<std::int64_t>(k));
                for (auto a : alpha) key.push_back(a);
                for (auto x : e) key.push_back(x);
                v[key] += c;
            }
        }
    }
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero()) it = v.erase(it);
        else ++it;
    }
    return v;
}

template <class F>
DiffOperator<F> times_nu(const DiffOperator<F>& op, unsigned m) {
    if (m == 0) return op;
    auto nu_m = NuSeries<F>::nu_power(m);
    return op.map_coeffs([&](const NuSeries<F>& c) { return c * nu_m; });
}

// pi on ordered PBW monomials, memoized.
template <class F>
class PbwEvaluator {
public:
    explicit PbwEvaluator(const Representation<F>& rep) : rep_(rep) {}

    const DiffOperator<F>& monomial(const Exponent& beta) {
        auto it = cache_.find(beta);
        if (it != cache_.end()) return it->second;
        std::size_t i = 0;
        while (i < beta.size() && beta[i] == 0) ++i;
        DiffOperator<F> op;
        if (i == beta.size()) {
            op = DiffOperator<F>::scalar(rep_.ring, Gaussian(1));
        } else {
            Exponent rest = beta;
            --rest[i];
            op = rep_.ops[i] * monomial(rest);
        }
        return cache_.emplace(beta, std::move(op)).first->second;
    }

    // u in the PBW ring: basis names then nu.
    DiffOperator<F> apply(const Poly& u) {
        std::size_t n = rep_.algebra.dim();
        DiffOperator<F> out(rep_.ring);
        out = out.truncated(rep_.order());
        for (const auto& [e, c] : u.terms()) {
            Exponent beta(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
            unsigned m = e.size() > n ? static_cast<unsigned>(e[n]) : 0;
            out += c * times_nu(monomial(beta), m);
        }
        return out;
    }

private:
    const Representation<F>& rep_;
    std::map<Exponent, DiffOperator<F>> cache_;
};

Poly combination_poly(const SparseKernel::Combination& comb, const std::vector<Exponent>& monos,
                      const RingPtr& ring) {
    Poly p(ring);
    for (const auto& [col, c] : comb) p += Poly::monomial(ring, monos[col], c);
    return p;
}

void finish(AnnResult& r, const RingPtr& ring) {
    r.generators = minimal_generators(r.kernel, ring);
    r.ideal = Ideal(ring, r.generators);
    if (r.generators.empty())
        r.diagnostic = "no nonzero element of the annihilator found up to D=" + std::to_string(r.degree_bound) +
                       (r.nu_bound >= 0 ? ", K=" + std::to_string(r.nu_bound) : "");
}

std::string join(const std::vector<Poly>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.str();
    return s;
}

std::string gaussian_tuple(const std::vector<Gaussian>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
    return s + ")";
}

}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t n, int D) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == n) {
            out.push_back(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[k] = static_cast<Exponent::value_type>(d);
            rec(k + 1, left - d);
        }
        e[k] = 0;
    };
    rec(0, D);
    auto order = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return order.greater(b, a); });
    return out;
}

std::vector<Poly> minimal_generators(const std::vector<Poly>& kernel, const RingPtr& ring) {
    std::vector<Poly> chosen;
    for (const auto& p : kernel) {
        if (p.is_zero()) continue;
        if (!chosen.empty() && member(p, Ideal(ring, chosen))) continue;
        chosen.push_back(p);
    }
    return chosen;
}

std::vector<Poly> echelon_basis(const std::vector<Poly>& polys, const RingPtr& ring) {
    auto order = MonomialOrder::grevlex();
    std::vector<Exponent> cols;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) cols.push_back(e);
    std::sort(cols.begin(), cols.end(), [&](const Exponent& a, const Exponent& b) { return order.greater(a, b); });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    Matrix<Gaussian> m;
    for (const auto& p : polys) {
        std::vector<Gaussian> row(cols.size(), Gaussian(0));
        for (std::size_t k = 0; k < cols.size(); ++k) row[k] = p.coeff(cols[k]);
        m.push_back(std::move(row));
    }
    auto pivots = rref(m);
    std::vector<Poly> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Poly p(ring);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (!m[r][k].is_zero()) p += Poly::monomial(ring, cols[k], m[r][k]);
        out.push_back(p);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string AnnResult::str() const {
    std::ostringstream os;
    os << "ideal " << ideal.str() << " (generators found up to D=" << degree_bound;
    if (nu_bound >= 0) os << ", K=" << nu_bound;
    os << ")\n";
    os << "generators: " << (generators.empty() ? "none" : join(generators)) << "\n";
    if (verified_order) os << "verified to order " << *verified_order << "\n";
    if (!diagnostic.empty()) os << "note: " << diagnostic << "\n";
    return os.str();
}

template <class F>
AnnResult ann_at_zero(const Representation<F>& rep, int D) {
    if (D < 1) throw std::invalid_argument("degree bound D must be at least 1");
    const auto& L = rep.algebra;
    RingPtr ring = L.xi_ring();
    std::vector<DiffOperator<F>> pi0;
    for (const auto& op : rep.ops) pi0.push_back(op.truncated(0));
    auto monos = monomials_up_to(L.dim(), D);
    std::map<Exponent, DiffOperator<F>> image;
    SparseKernel ker;
    AnnResult r;
    r.degree_bound = D;
    r.verified_order = rep.order();
    for (std::size_t col = 0; col < monos.size(); ++col) {
        const Exponent& a = monos[col];
        std::size_t i = 0;
        while (i < a.size() && a[i] == 0) ++i;
        DiffOperator<F> op;
        if (i == a.size()) {
            op = DiffOperator<F>::scalar(rep.ring, Gaussian(1)).truncated(0);
        } else {
            Exponent rest = a;
            --rest[i];
            op = pi0[i] * image.at(rest);
        }
        if (auto comb = ker.add_column(col, vectorize(op))) r.kernel.push_back(combination_poly(*comb, monos, ring));
        image.emplace(a, std::move(op));
    }
    finish(r, ring);
    return r;
}

template <class F>
AnnResult ann_mod_nu(const Representation<F>& rep, int D, int K) {
    if (D < 1) throw std::invalid_argument("degree bound D must be at least 1");
    if (K < 0) throw std::invalid_argument("nu-degree bound K must be nonnegative");
    Order N = rep.order();
    if (N && *N < K + 2)
        throw BoundError("truncation order " + std::to_string(*N) + " is below K + 2 = " + std::to_string(K + 2));
    const auto& L = rep.algebra;
    RingPtr ring = L.xi_ring();
    StarAlgebra A(L);
    PbwEvaluator<F> eval(rep);
    auto monos = monomials_up_to(L.dim(), D);
    std::vector<DiffOperator<F>> images;
    for (const auto& a : monos) images.push_back(eval.apply(A.tau(Poly::monomial(ring, a))));
    // column (k, alpha) -> index k * |monos| + alpha
    SparseKernel ker;
    std::vector<Poly> projections;
    std::size_t M = monos.size();
    for (int k = 0; k <= K; ++k)
        for (std::size_t a = 0; a < M; ++a) {
            std::size_t col = static_cast<std::size_t>(k) * M + a;
            auto comb = ker.add_column(col, vectorize(times_nu(images[a], static_cast<unsigned>(k))));
            if (!comb) continue;
            Poly p(ring);
            for (const auto& [c, x] : *comb)
                if (c < M) p += Poly::monomial(ring, monos[c], x);
            if (!p.is_zero()) projections.push_back(p);
        }
    AnnResult r;
    r.degree_bound = D;
    r.nu_bound = K;
    r.verified_order = N;
    r.kernel = echelon_basis(projections, ring);
    finish(r, ring);
    return r;
}

AnnResult ann_at_zero(const AnyRep& rep, int D) {
    return std::visit([&](const auto& x) { return ann_at_zero(x, D); }, rep);
}
AnnResult ann_mod_nu(const AnyRep& rep, int D, int K) {
    return std::visit([&](const auto& x) { return ann_mod_nu(x, D, K); }, rep);
}

template <class F>
DiffOperator<F> apply_pbw(const Representation<F>& rep, const Poly& u) {
    PbwEvaluator<F> eval(rep);
    return eval.apply(u);
}

template <class F>
DiffOperator<F> apply_symbol(const Representation<F>& rep, StarAlgebra& A, const Poly& phi) {
    return apply_pbw(rep, A.tau(phi));
}

template <class F>
bool verify_annihilator(const Representation<F>& rep, const std::vector<Poly>& gens, Order N) {
    StarAlgebra A(rep.algebra);
    PbwEvaluator<F> eval(rep);
    for (const auto& g : gens) {
        auto op = eval.apply(A.tau(g));
        if (N) op = op.truncated(N);
        if (!op.is_zero()) return false;
    }
    return true;
}

bool verify_annihilator(const AnyRep& rep, const std::vector<Poly>& gens, Order N) {
    return std::visit([&](const auto& x) { return verify_annihilator(x, gens, N); }, rep);
}

bool verify_annihilator(const AnyRep& rep, const std::vector<PolySeries>& gens, Order N) {
    const auto& L = algebra_of(rep);
    StarAlgebra A(L);
    std::vector<Poly> flat;
    for (const auto& s : gens) {
        Poly p(A.ring());
        for (std::size_t k = 0; k < s.coeffs().size(); ++k) p += A.lift(s.coeff(k)) * A.nu().pow(static_cast<unsigned>(k));
        flat.push_back(p);
    }
    Order order = N;
    for (const auto& s : gens) order = min_order(order, s.order());
    return verify_annihilator(rep, flat, order);
}

template AnnResult ann_at_zero(const Representation<Poly>&, int);
template AnnResult ann_at_zero(const Representation<TrigPoly>&, int);
template AnnResult ann_mod_nu(const Representation<Poly>&, int, int);
template AnnResult ann_mod_nu(const Representation<TrigPoly>&, int, int);
template DiffOperator<Poly> apply_pbw(const Representation<Poly>&, const Poly&);
template DiffOperator<TrigPoly> apply_pbw(const Representation<TrigPoly>&, const Poly&);
template DiffOperator<Poly> apply_symbol(const Representation<Poly>&, StarAlgebra&, const Poly&);
template DiffOperator<TrigPoly> apply_symbol(const Representation<TrigPoly>&, StarAlgebra&, const Poly&);
template bool verify_annihilator(const Representation<Poly>&, const std::vector<Poly>&, Order);
template bool verify_annihilator(const Representation<TrigPoly>&, const std::vector<Poly>&, Order);

// ---------------------------------------------------------------------------
// Varieties

std::optional<AffineDescription> affine_description(const Ideal& I) {
    const auto& basis = I.groebner();
    std::size_t n = I.ring()->size();
    for (const auto& g : basis)
        if (g.total_degree() > 1 || g.is_constant()) return std::nullopt;
    Matrix<Gaussian> m;
    std::vector<Gaussian> rhs;
    for (const auto& g : basis) {
        std::vector<Gaussian> row(n, Gaussian(0));
        for (std::size_t k = 0; k < n; ++k) row[k] = g.coeff(Poly::var(I.ring(), k).terms().begin()->first);
        m.push_back(std::move(row));
        rhs.push_back(-g.constant_term());
    }
    AffineDescription a;
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    a.base = m.empty() ? std::vector<Gaussian>(n, Gaussian(0)) : *x;
    a.directions = nullspace(m, n);
    return a;
}

Ideal vanishing_ideal(const RingPtr& ring, const AffineDescription& a) {
    std::size_t n = ring->size();
    Matrix<Gaussian> dirs = a.directions;
    auto forms = nullspace(dirs, n);
    std::vector<Poly> gens;
    for (const auto& l : forms) {
        Poly g(ring);
        Gaussian at_base(0);
        for (std::size_t k = 0; k < n; ++k) {
            if (l[k].is_zero()) continue;
            g += Poly::var(ring, k) * l[k];
            at_base += l[k] * a.base[k];
        }
        gens.push_back(g - Poly(ring, at_base));
    }
    return Ideal(ring, gens);
}

std::string AffineDescription::str(const LieAlgebra& L) const {
    std::string s = "base " + gaussian_tuple(base);
    if (directions.empty()) return s + " (a point)";
    s += " + span{";
    for (std::size_t k = 0; k < directions.size(); ++k) s += (k ? ", " : "") + gaussian_tuple(directions[k]);
    s += "}";
    (void)L;
    return s;
}

std::string VarietyReport::str(const LieAlgebra& L) const {
    std::ostringstream os;
    os << kind << ": " << ann.str();
    os << "  real generators: " << (real_gens.empty() ? "none" : join(real_gens)) << "\n";
    if (affine) {
        os << "  affine: {";
        bool first = true;
        for (const auto& g : ann.ideal.groebner()) {
            Poly lin = g - Poly(g.ring(), g.constant_term());
            os << (first ? "" : ", ") << lin.str() << " = " << (-g.constant_term()).str();
            first = false;
        }
        os << "}; " << affine->str(L) << "\n";
    }
    auto flag = [](bool b) { return b ? "yes" : "NO"; };
    os << "  poisson_stable: " << flag(certs.poisson_stable) << ", star_closed: " << flag(certs.star_closed)
       << ", inclusion_in_VA: " << flag(certs.inclusion_in_VA);
    if (affine) os << ", affine_consistent: " << flag(certs.affine_consistent);
    os << "\n";
    return os.str();
}

std::string VarietyPair::str(const LieAlgebra& L) const {
    return V.str(L) + VA.str(L) +
           "module: polynomial functions in the chart coordinates; kernels are complete only up to the stated bounds\n";
}

VarietyPair variety_report(const AnyRep& rep, int D, int K) {
    const auto& L = algebra_of(rep);
    PoissonContext ctx(L);
    VarietyPair out;
    out.V.kind = "V";
    out.VA.kind = "VA";
    out.V.ann = ann_at_zero(rep, D);
    out.VA.ann = ann_mod_nu(rep, D, K);
    bool inclusion = true;
    for (const auto& g : out.VA.ann.generators) inclusion = inclusion && member(g, out.V.ann.ideal);
    for (auto* vr : {&out.V, &out.VA}) {
        const Ideal& I = vr->ann.ideal;
        vr->certs.poisson_stable = poisson_stable(ctx, I, vr == &out.V ? Stability::subalgebra : Stability::ideal);
        vr->certs.star_closed = is_star_closed(I);
        vr->certs.inclusion_in_VA = inclusion;
        try {
            vr->real_gens = real_generators(I);
        } catch (const std::domain_error&) {
            vr->certs.star_closed = false;
        }
        vr->affine = affine_description(I);
        if (vr->affine) vr->certs.affine_consistent = ideal_equal(vanishing_ideal(I.ring(), *vr->affine), I);
    }
    return out;
}

}  // namespace dequant
