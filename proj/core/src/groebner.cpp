#include "dequant/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dequant {

namespace {

bool grevlex_greater(const Exponent& a, const Exponent& b, std::size_t from, std::size_t to) {
    unsigned da = 0, db = 0;
    for (std::size_t k = from; k < to; ++k) {
        da += a[k];
        db += b[k];
    }
    if (da != db) return da > db;
    for (std::size_t k = to; k-- > from;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

struct Term {
    Exponent e;
    Gaussian c;
};

// Terms sorted decreasingly in the working order.
using TermList = std::vector<Term>;

struct Ctx {
    MonomialOrder order;
    RingPtr ring;
    bool gt(const Exponent& a, const Exponent& b) const { return order.greater(a, b); }
};

TermList to_list(const Poly& p, const Ctx& ctx) {
    TermList t;
    t.reserve(p.size());
    for (const auto& [e, c] : p.terms()) t.push_back({e, c});
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ctx.gt(a.e, b.e); });
    return t;
}

Poly to_poly(const TermList& t, const RingPtr& ring) {
    Poly p(ring);
    for (const auto& x : t) p.add_term(x.e, x.c);
    return p;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

Exponent diff(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) return false;
    return true;
}

// p - f * x^shift * q, merged in order. q starts at index `skip`.
TermList sub_mul(const TermList& p, std::size_t pskip, const Gaussian& f, const Exponent& shift, const TermList& q,
                 std::size_t qskip, const Ctx& ctx) {
    TermList out;
    out.reserve(p.size() + q.size());
    std::size_t i = pskip, j = qskip, n = shift.size();
    Exponent e(n);
    while (i < p.size() || j < q.size()) {
        if (j < q.size()) {
            for (std::size_t k = 0; k < n; ++k) e[k] = q[j].e[k] + shift[k];
        }
        if (j >= q.size() || (i < p.size() && ctx.gt(p[i].e, e))) {
            out.push_back(p[i++]);
        } else if (i >= p.size() || ctx.gt(e, p[i].e)) {
            out.push_back({e, -(f * q[j].c)});
            ++j;
        } else {
            Gaussian c = p[i].c - f * q[j].c;
            if (!c.is_zero()) out.push_back({e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(TermList& t) {
    if (t.empty() || t.front().c.is_one()) return;
    Gaussian inv = t.front().c.inverse();
    for (auto& x : t) x.c *= inv;
}

// Full reduction of p modulo basis (leading terms of basis assumed monic).
TermList reduce_full(TermList p, const std::vector<TermList>& basis, const Ctx& ctx, std::size_t exclude = SIZE_MAX) {
    TermList rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
        const Term& lead = p[pos];
        const TermList* div = nullptr;
        for (std::size_t g = 0; g < basis.size(); ++g) {
            if (g == exclude || basis[g].empty()) continue;
            if (divides(basis[g].front().e, lead.e)) {
                div = &basis[g];
                break;
            }
        }
        if (!div) {
            rem.push_back(lead);
            ++pos;
            continue;
        }
        Gaussian f = lead.c / div->front().c;
        Exponent shift = diff(lead.e, div->front().e);
        p = sub_mul(p, pos + 1, f, shift, *div, 1, ctx);
        pos = 0;
    }
    return rem;
}

TermList spoly(const TermList& f, const TermList& g, const Ctx& ctx) {
    Exponent l = lcm(f.front().e, g.front().e);
    // f, g monic: x^(l-lf) f - x^(l-lg) g
    TermList a;
    Exponent sf = diff(l, f.front().e);
    for (std::size_t k = 1; k < f.size(); ++k) {
        Exponent e(l.size());
        for (std::size_t m = 0; m < e.size(); ++m) e[m] = f[k].e[m] + sf[m];
        a.push_back({std::move(e), f[k].c / f.front().c});
    }
    return sub_mul(a, 0, g.front().c.inverse(), diff(l, g.front().e), g, 1, ctx);
}

std::vector<TermList> buchberger(const std::vector<Poly>& gens, const Ctx& ctx) {
    std::vector<TermList> G;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](TermList h) {
        make_monic(h);
        std::size_t idx = G.size();
        G.push_back(std::move(h));
        for (std::size_t i = 0; i < idx; ++i) pending.emplace(i, idx);
    };

    for (const auto& p : gens) {
        TermList t = reduce_full(to_list(p, ctx), G, ctx);
        if (!t.empty()) add(std::move(t));
    }

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first, ties by pair index.
        auto best = pending.begin();
        Exponent best_l = lcm(G[best->first].front().e, G[best->second].front().e);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponent l = lcm(G[it->first].front().e, G[it->second].front().e);
            if (ctx.gt(best_l, l)) {
                best = it;
                best_l = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        const Exponent& li = G[i].front().e;
        const Exponent& lj = G[j].front().e;
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (!divides(G[k].front().e, best_l)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
        }
        if (chain) continue;
        TermList r = reduce_full(spoly(G[i], G[j], ctx), G, ctx);
        if (!r.empty()) add(std::move(r));
    }

    // Minimal basis, then interreduction.
    std::vector<bool> keep(G.size(), true);
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (divides(G[b].front().e, G[a].front().e) && (G[b].front().e != G[a].front().e || b < a))
                keep[a] = false;
        }
    std::vector<TermList> M;
    for (std::size_t a = 0; a < G.size(); ++a)
        if (keep[a]) M.push_back(G[a]);
    for (std::size_t a = 0; a < M.size(); ++a) {
        TermList tail(M[a].begin() + 1, M[a].end());
        TermList red = reduce_full(tail, M, ctx, a);
        TermList full{M[a].front()};
        full.insert(full.end(), red.begin(), red.end());
        M[a] = std::move(full);
        make_monic(M[a]);
    }
    std::sort(M.begin(), M.end(), [&](const TermList& a, const TermList& b) { return ctx.gt(b.front().e, a.front().e); });
    return M;
}

}  // namespace

bool MonomialOrder::greater(const Exponent& a, const Exponent& b) const {
    switch (kind) {
        case Kind::lex:
            return a > b;
        case Kind::grevlex:
            return grevlex_greater(a, b, 0, a.size());
        case Kind::block: {
            std::size_t k = std::min(block, a.size());
            if (grevlex_greater(a, b, 0, k)) return true;
            if (grevlex_greater(b, a, 0, k)) return false;
            return grevlex_greater(a, b, k, a.size());
        }
    }
    return false;
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case Kind::lex:
            return "lex";
        case Kind::grevlex:
            return "grevlex";
        case Kind::block:
            return "block(" + std::to_string(block) + ")";
    }
    return "?";
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        Poly p = g.nvars() == ring_->size() ? g : g.embed(ring_);
        if (p.nvars() == 0 && ring_->size() > 0) p = Poly(ring_, p.constant_term());
        if (!p.is_zero()) gens_.push_back(std::move(p));
    }
}

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = order.str();
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
    auto basis = groebner_basis(gens_, ring_, order);
    return cache_->bases.emplace(key, std::move(basis)).first->second;
}

bool Ideal::is_unit_ideal() const {
    const auto& g = groebner();
    return g.size() == 1 && g[0].is_constant();
}

std::string Ideal::str() const {
    std::string out = "<";
    const auto& g = groebner();
    for (std::size_t k = 0; k < g.size(); ++k) out += (k ? ", " : "") + g[k].str();
    return out + ">";
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const RingPtr& ring, const MonomialOrder& order) {
    Ctx ctx{order, ring};
    std::vector<Poly> in;
    for (const auto& g : gens) in.push_back(g.nvars() == ring->size() ? g : g.embed(ring));
    auto basis = buchberger(in, ctx);
    std::vector<Poly> out;
    for (const auto& t : basis) out.push_back(to_poly(t, ring));
    return out;
}

Exponent leading_monomial(const Poly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no leading monomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : p.terms())
        if (!best || order.greater(e, *best)) best = &e;
    return *best;
}

Gaussian leading_coefficient(const Poly& p, const MonomialOrder& order) { return p.coeff(leading_monomial(p, order)); }

Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order) {
    RingPtr ring = p.nvars() ? p.ring() : (basis.empty() ? p.ring() : basis.front().ring());
    Ctx ctx{order, ring};
    std::vector<TermList> b;
    for (const auto& g : basis) {
        TermList t = to_list(g, ctx);
        make_monic(t);
        b.push_back(std::move(t));
    }
    Poly q = p.nvars() == ring->size() ? p : Poly(ring, p.constant_term());
    return to_poly(reduce_full(to_list(q, ctx), b, ctx), ring);
}

Poly reduce(const Poly& p, const Ideal& I, const MonomialOrder& order) {
    Poly q = p.nvars() == I.ring()->size() ? p : (p.nvars() == 0 ? Poly(I.ring(), p.constant_term()) : p.embed(I.ring()));
    return normal_form(q, I.groebner(order), order);
}

bool member(const Poly& p, const Ideal& I) { return reduce(p, I).is_zero(); }

bool contains(const Ideal& big, const Ideal& small) {
    for (const auto& g : small.generators())
        if (!member(g, big)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return contains(I, J) && contains(J, I); }

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
    const auto& names = I.ring()->names;
    std::vector<std::string> order_names, kept;
    std::vector<bool> order_imag, kept_imag;
    for (const auto& d : drop)
        if (!I.ring()->index_of(d)) throw std::invalid_argument("cannot eliminate unknown variable " + d);
    for (std::size_t k = 0; k < names.size(); ++k)
        if (std::find(drop.begin(), drop.end(), names[k]) != drop.end()) {
            order_names.push_back(names[k]);
            order_imag.push_back(I.ring()->imaginary[k]);
        }
    std::size_t block = order_names.size();
    for (std::size_t k = 0; k < names.size(); ++k)
        if (std::find(drop.begin(), drop.end(), names[k]) == drop.end()) {
            order_names.push_back(names[k]);
            order_imag.push_back(I.ring()->imaginary[k]);
            kept.push_back(names[k]);
            kept_imag.push_back(I.ring()->imaginary[k]);
        }
    RingPtr work = make_ring(order_names, order_imag);
    RingPtr target = make_ring(kept, kept_imag);
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(work));
    auto basis = groebner_basis(gens, work, MonomialOrder::elimination(block));
    std::vector<Poly> out;
    for (const auto& g : basis) {
        bool uses_dropped = false;
        for (const auto& [e, c] : g.terms())
            for (std::size_t k = 0; k < block; ++k) uses_dropped = uses_dropped || e[k] > 0;
        if (!uses_dropped) out.push_back(g.restrict_to(target));
    }
    return Ideal(target, out);
}

bool is_star_closed(const Ideal& I) {
    for (const auto& g : I.generators())
        if (!member(g.conj(), I)) return false;
    return true;
}

std::vector<Poly> real_generators(const Ideal& I) {
    if (!is_star_closed(I)) throw std::domain_error("ideal is not closed under the involution");
    std::vector<Poly> parts;
    for (const auto& g : I.groebner()) {
        Poly plus = (g + g.conj()) * Gaussian(Rational(1, 2));
        Poly minus = (g - g.conj()) * Gaussian(Rational(0), Rational(-1, 2));
        if (!plus.is_zero()) parts.push_back(plus);
        if (!minus.is_zero()) parts.push_back(minus);
    }
    return groebner_basis(parts, I.ring(), MonomialOrder::grevlex());
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
    Ctx ctx{order, f.ring()};
    TermList a = to_list(f, ctx), b = to_list(g, ctx);
    make_monic(a);
    make_monic(b);
    return to_poly(spoly(a, b, ctx), f.ring());
}

}  // namespace dequant
