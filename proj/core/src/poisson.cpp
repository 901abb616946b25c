#include "dequant/poisson.hpp"

namespace dequant {

Poly PoissonContext::bracket(const Poly& f, const Poly& g) const {
    const RingPtr& r = L_.xi_ring();
    std::size_t n = L_.dim();
    Poly fr = f.nvars() ? f.embed(r) : Poly(r, f.constant_term());
    Poly gr = g.nvars() ? g.embed(r) : Poly(r, g.constant_term());
    std::vector<Poly> df(n), dg(n);
    for (std::size_t i = 0; i < n; ++i) {
        df[i] = fr.derivative(i);
        dg[i] = gr.derivative(i);
    }
    Poly out(r);
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || dg[j].is_zero() || L_.bracket_is_zero(i, j)) continue;
            Poly lin(r);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(L_.c(i, j, k)) != 0) lin += Poly::var(r, k) * Gaussian(L_.c(i, j, k));
            out += lin * df[i] * dg[j];
        }
    }
    return out;
}

Poly PoissonContext::bracket_with(const Poly& f, std::size_t i) const {
    return bracket(f, Poly::var(L_.xi_ring(), i));
}

bool is_casimir(const PoissonContext& ctx, const Poly& p) {
    for (std::size_t i = 0; i < ctx.algebra().dim(); ++i)
        if (!ctx.bracket_with(p, i).is_zero()) return false;
    return true;
}

StabilityReport poisson_stability(const PoissonContext& ctx, const Ideal& I, Stability kind) {
    StabilityReport rep;
    const auto& gb = I.groebner();
    if (kind == Stability::ideal) {
        for (const auto& g : gb)
            for (std::size_t i = 0; i < ctx.algebra().dim(); ++i) {
                Poly r = reduce(ctx.bracket_with(g, i), I);
                if (!r.is_zero()) {
                    rep.stable = false;
                    rep.witness = std::make_pair(g, ctx.coordinate(i));
                    rep.residue = r;
                    return rep;
                }
            }
        return rep;
    }
    // {sum a_k g_k, sum b_l g_l} lies in I once every {g_k, g_l} does (Leibniz).
    for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b) {
            Poly r = reduce(ctx.bracket(gb[a], gb[b]), I);
            if (!r.is_zero()) {
                rep.stable = false;
                rep.witness = std::make_pair(gb[a], gb[b]);
                rep.residue = r;
                return rep;
            }
        }
    return rep;
}

bool poisson_stable(const PoissonContext& ctx, const Ideal& I, Stability kind) {
    return poisson_stability(ctx, I, kind).stable;
}

}  // namespace dequant
