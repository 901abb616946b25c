#include "dequant/coadjoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dequant {

namespace {

void require_nilpotent(const LieAlgebra& L) {
    if (!validate(L).nilpotency_class) throw std::invalid_argument("coadjoint exponential needs a nilpotent algebra");
}

// Parameter names that do not collide with the basis names.
std::vector<std::string> param_names(const LieAlgebra& L, std::size_t m) {
    std::string prefix = "s";
    auto clash = [&](const std::string& p) {
        for (std::size_t k = 1; k <= m; ++k)
            if (L.index_of(p + std::to_string(k))) return true;
        return false;
    };
    while (clash(prefix)) prefix += "_";
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= m; ++k) out.push_back(prefix + std::to_string(k));
    return out;
}

// Closure of {Ad*(exp sum s_j v_j) f} for the given directions.
OrbitIdeal orbit_of(const LieAlgebra& L, const LinearForm& f, const std::vector<RVec>& dirs) {
    std::size_t n = L.dim(), m = dirs.size();
    auto names = param_names(L, m);
    names.insert(names.end(), L.names().begin(), L.names().end());
    RingPtr ring = make_ring(names);
    PolyVec X(n, Poly(ring)), xi(n, Poly(ring));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(dirs[j][k]) != 0) X[k] += Poly::var(ring, j) * Gaussian(dirs[j][k]);
    for (std::size_t k = 0; k < n; ++k) xi[k] = Poly(ring, Gaussian(f[k]));
    OrbitIdeal out;
    out.param_ring = ring;
    out.params = m;
    out.parametrization = coad_exp(L, X, xi);
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < n; ++k) gens.push_back(Poly::var(ring, m + k) - out.parametrization[k]);
    std::vector<std::string> drop(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(m));
    Ideal elim = eliminate(Ideal(ring, gens), drop);
    std::vector<Poly> back;
    for (const auto& g : elim.groebner()) back.push_back(g.embed(L.xi_ring()));
    out.ideal = Ideal(L.xi_ring(), back);
    return out;
}

}  // namespace

PolyVec coad_exp(const LieAlgebra& L, const PolyVec& X, const PolyVec& xi) {
    require_nilpotent(L);
    std::size_t n = L.dim();
    if (X.size() != n || xi.size() != n) throw std::invalid_argument("coad_exp: vector length differs from dim g");
    PolyVec out = xi, term = xi;
    for (unsigned m = 1;; ++m) {
        PolyVec next(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (X[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || L.bracket_is_zero(i, j)) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(L.c(i, j, k)) != 0 && !term[k].is_zero()) next[j] -= X[i] * term[k] * Gaussian(L.c(i, j, k));
            }
        }
        bool zero = true;
        for (auto& p : next) {
            p *= Gaussian(Rational(1, m));
            zero = zero && p.is_zero();
        }
        if (zero) break;
        for (std::size_t k = 0; k < n; ++k) out[k] += next[k];
        term = std::move(next);
    }
    return out;
}

bool OrbitIdeal::vanishes_on_parametrization() const {
    for (const auto& g : ideal.generators()) {
        Poly p = g.embed(param_ring);
        for (std::size_t k = 0; k < parametrization.size(); ++k) p = p.substitute(params + k, parametrization[k]);
        if (!p.is_zero()) return false;
    }
    return true;
}

OrbitIdeal orbit_closure_ideal(const LieAlgebra& L, const LinearForm& f) {
    require_nilpotent(L);
    std::vector<RVec> dirs;
    for (std::size_t k = 0; k < L.dim(); ++k) dirs.push_back(L.basis_vector(k));
    return orbit_of(L, f, dirs);
}

Ideal affine_ideal(const LieAlgebra& L, const LinearForm& f, const Subspace& h) {
    std::vector<Poly> gens;
    for (const auto& v : h.basis) {
        Poly g(L.xi_ring());
        for (std::size_t k = 0; k < L.dim(); ++k)
            if (sgn(v[k]) != 0) g += Poly::var(L.xi_ring(), k) * Gaussian(v[k]);
        g -= Poly(L.xi_ring(), Gaussian(pair(f, v)));
        gens.push_back(g);
    }
    return Ideal(L.xi_ring(), gens);
}

PukanszkyReport pukanszky_affine_check(const LieAlgebra& L, const LinearForm& f, const Subspace& h) {
    require_nilpotent(L);
    if (!is_polarization(L, f, h)) throw std::invalid_argument("pukanszky check: " + polarization_defect(L, f, h));
    PukanszkyReport r;
    r.h_orbit = orbit_of(L, f, h.basis).ideal;
    r.affine = affine_ideal(L, f, h);
    r.holds = ideal_equal(r.h_orbit, r.affine);
    return r;
}

}  // namespace dequant
