#include "dequant/induce.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace dequant {

namespace {

Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned k = 2; k <= n; ++k) r *= Rational(static_cast<long>(k));
    return r;
}

int nilpotency_class_or_throw(const LieAlgebra& L) {
    auto rep = validate(L);
    if (!rep.jacobi_ok) throw std::invalid_argument("bracket table violates the Jacobi identity");
    if (!rep.nilpotency_class) throw std::invalid_argument("algebra is not nilpotent");
    return std::max(1, *rep.nilpotency_class);
}

using Trim = std::function<Poly(const Poly&)>;

PolyVec scale_vec(const PolyVec& v, const Poly& c) {
    PolyVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * c;
    return out;
}

bool is_zero_vec(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

PolyVec bch_impl(const LieAlgebra& L, int cls, const PolyVec& A, const PolyVec& B, const Poly& scale, const Trim& trim) {
    if (is_zero_vec(A)) return B;
    if (is_zero_vec(B)) return A;
    const auto& words = dynkin_coefficients(cls);
    // Right-nested brackets share suffixes; evaluate each suffix once.
    std::map<std::string, PolyVec> value;
    std::function<const PolyVec&(const std::string&)> eval = [&](const std::string& w) -> const PolyVec& {
        auto it = value.find(w);
        if (it != value.end()) return it->second;
        PolyVec v;
        if (w.size() == 1) {
            v = w[0] == 'a' ? A : B;
        } else {
            const PolyVec& head = w[0] == 'a' ? A : B;
            const PolyVec& tail = eval(w.substr(1));
            v = is_zero_vec(tail) ? tail : L.bracket_generic(head, tail);
            for (auto& p : v) p = trim(p * scale);
        }
        return value.emplace(w, std::move(v)).first->second;
    };
    PolyVec out(L.dim());
    for (const auto& [w, c] : words) {
        const PolyVec& v = eval(w);
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!v[k].is_zero()) out[k] += v[k] * Gaussian(c);
    }
    for (auto& p : out) p = trim(p);
    return out;
}

PolyVec to_poly_vec(const RVec& v, const RingPtr& r) {
    PolyVec out;
    for (const auto& x : v) out.push_back(Poly(r, Gaussian(x)));
    return out;
}

}  // namespace

const std::map<std::string, Rational>& dynkin_coefficients(int max_len) {
    static std::mutex mu;
    static std::map<int, std::map<std::string, Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_len);
    if (it != cache.end()) return it->second;
    std::map<std::string, Rational> coeffs;
    // Sequences of blocks a^r b^s (r + s >= 1); n blocks, total length m.
    std::function<void(const std::string&, int, Rational)> rec = [&](const std::string& word, int n, Rational weight) {
        if (n > 0) {
            Rational c = weight / Rational(static_cast<long>(n)) / Rational(static_cast<long>(word.size()));
            if (n % 2 == 0) c = -c;
            auto& slot = coeffs[word];
            slot += c;
            slot.canonicalize();
        }
        int left = max_len - static_cast<int>(word.size());
        for (int r = 0; r <= left; ++r)
            for (int s = 0; r + s <= left; ++s) {
                if (r + s == 0) continue;
                std::string w = word + std::string(static_cast<std::size_t>(r), 'a') + std::string(static_cast<std::size_t>(s), 'b');
                rec(w, n + 1, weight / (factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(s))));
            }
    };
    rec("", 0, Rational(1));
    for (auto i = coeffs.begin(); i != coeffs.end();) {
        if (sgn(i->second) == 0) i = coeffs.erase(i);
        else ++i;
    }
    return cache.emplace(max_len, std::move(coeffs)).first->second;
}

PolyVec bch(const LieAlgebra& L, const PolyVec& A, const PolyVec& B, const Poly& scale) {
    int cls = nilpotency_class_or_throw(L);
    return bch_impl(L, cls, A, B, scale, [](const Poly& p) { return p; });
}

std::vector<std::string> default_coordinate_names(std::size_t q) {
    if (q == 1) return {"t"};
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= q; ++k) out.push_back("t" + std::to_string(k));
    return out;
}

namespace {

Subspace flag_member(const LieAlgebra& L, const MalcevChart& chart, std::size_t j) {
    std::vector<RVec> v(chart.coexp.begin() + static_cast<std::ptrdiff_t>(j), chart.coexp.end());
    v.insert(v.end(), chart.h.basis.begin(), chart.h.basis.end());
    return span(std::move(v), L.dim());
}

bool normalizes(const LieAlgebra& L, const RVec& x, const Subspace& s) {
    for (const auto& b : s.basis)
        if (!contains(s, L.bracket(x, b))) return false;
    return true;
}

}  // namespace

std::string chart_defect(const LieAlgebra& L, const MalcevChart& chart) {
    std::size_t q = chart.coexp.size();
    if (q + chart.h.dim() != L.dim()) return "chart vectors and polarization do not span the algebra";
    if (chart.coords.size() != q) return "number of coordinate names differs from the chart length";
    if (!is_subalgebra(L, chart.h)) return "polarization is not a subalgebra";
    for (std::size_t j = 0; j < q; ++j) {
        Subspace gj = flag_member(L, chart, j), next = flag_member(L, chart, j + 1);
        if (gj.dim() != next.dim() + 1) return "chart vectors are linearly dependent modulo h";
        if (!normalizes(L, chart.coexp[j], next))
            return "flag member " + std::to_string(j + 2) + " is not an ideal in member " + std::to_string(j + 1);
    }
    return {};
}

MalcevChart auto_chart(const LieAlgebra& L, const Subspace& h) {
    MalcevChart chart;
    chart.h = h;
    Subspace current = h;
    std::vector<RVec> picked;  // innermost first
    while (current.dim() < L.dim()) {
        bool found = false;
        for (std::size_t k = L.dim(); k-- > 0;) {
            RVec x = L.basis_vector(k);
            if (contains(current, x) || !normalizes(L, x, current)) continue;
            picked.push_back(x);
            std::vector<RVec> v = current.basis;
            v.push_back(x);
            current = span(std::move(v), L.dim());
            found = true;
            break;
        }
        if (!found) throw std::invalid_argument("no basis vector extends the flag; supply a chart");
    }
    chart.coexp.assign(picked.rbegin(), picked.rend());
    chart.coords = default_coordinate_names(chart.coexp.size());
    return chart;
}

SecondKind factor_second_kind(const LieAlgebra& L, const MalcevChart& chart, const RVec& Z, bool scaled, int s_degree) {
    std::string defect = chart_defect(L, chart);
    if (!defect.empty()) throw std::invalid_argument("invalid chart: " + defect);
    int cls = nilpotency_class_or_throw(L);
    std::size_t q = chart.coexp.size(), n = L.dim();
    std::vector<std::string> names{"s"};
    names.insert(names.end(), chart.coords.begin(), chart.coords.end());
    names.push_back("hbar");
    SecondKind out;
    out.ring = make_ring(names);
    const RingPtr& R = out.ring;
    Poly s = Poly::var(R, 0);
    Poly scale = scaled ? Poly::var(R, q + 1) : Poly(R, Gaussian(1));
    Trim trim = [s_degree](const Poly& p) {
        return s_degree >= 0 ? p.truncate_degree(0, static_cast<unsigned>(s_degree)) : p;
    };
    // Coordinates in the chart basis (X_1..X_q, h basis).
    Matrix<Rational> basis(n, RVec(n));
    for (std::size_t c = 0; c < n; ++c) {
        const RVec& v = c < q ? chart.coexp[c] : chart.h.basis[c - q];
        for (std::size_t r = 0; r < n; ++r) basis[r][c] = v[r];
    }
    auto inv = inverse(basis);
    if (!inv) throw std::invalid_argument("chart basis is singular");
    auto coordinate = [&](const PolyVec& v, std::size_t j) {
        Poly a(R);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn((*inv)[j][k]) != 0) a += v[k] * Gaussian((*inv)[j][k]);
        return a;
    };

    PolyVec V = scale_vec(to_poly_vec(Z, R), -s);
    for (std::size_t j = 0; j < q; ++j)
        V = bch_impl(L, cls, V, scale_vec(to_poly_vec(chart.coexp[j], R), Poly::var(R, j + 1)), scale, trim);
    for (std::size_t j = 0; j < q; ++j) {
        Poly a = coordinate(V, j);
        out.tprime.push_back(a);
        V = bch_impl(L, cls, scale_vec(to_poly_vec(chart.coexp[j], R), -a), V, scale, trim);
    }
    for (std::size_t j = 0; j < q; ++j)
        if (!coordinate(V, j).is_zero()) throw std::logic_error("second-kind factorization left a chart component");
    out.w = V;
    return out;
}

namespace {

// Polynomial in (s, t, hbar) at s = 0 read as a nu-series with hbar = -i nu.
PolySeries hbar_to_nu(const Poly& p, const RingPtr& t_ring) {
    std::size_t q = t_ring->size();
    std::vector<Poly> coeffs;
    Gaussian minus_i(Rational(0), Rational(-1));
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) throw std::logic_error("s remains after differentiation");
        unsigned k = e[q + 1];
        if (coeffs.size() <= k) coeffs.resize(k + 1, Poly(t_ring));
        Exponent f(e.begin() + 1, e.begin() + 1 + static_cast<std::ptrdiff_t>(q));
        coeffs[k].add_term(f, c * minus_i.pow(k));
    }
    return PolySeries(std::move(coeffs), std::nullopt);
}

}  // namespace

PolyRep build_pi(const LieAlgebra& L, const LinearForm& f, const Subspace& h, const std::optional<MalcevChart>& chart_in) {
    nilpotency_class_or_throw(L);
    std::string pol = polarization_defect(L, f, h);
    if (!pol.empty()) throw std::invalid_argument("not a polarization: " + pol);
    MalcevChart chart = chart_in ? *chart_in : auto_chart(L, h);
    if (chart_in) {
        Subspace tail = span(chart.h.basis, L.dim());
        bool same = tail.dim() == h.dim();
        for (const auto& b : h.basis) same = same && contains(tail, b);
        if (!same) throw std::invalid_argument("chart tail does not span the polarization");
    }
    std::string defect = chart_defect(L, chart);
    if (!defect.empty()) throw std::invalid_argument("invalid chart: " + defect);

    std::size_t q = chart.coexp.size(), n = L.dim();
    PolyRep rep;
    rep.algebra = L;
    rep.ring = make_ring(chart.coords);
    rep.provenance = Provenance::built;
    rep.form = f;
    rep.polarization = h;
    Gaussian I = Gaussian::i();
    for (std::size_t i = 0; i < n; ++i) {
        SecondKind sk = factor_second_kind(L, chart, L.basis_vector(i), true, 1);
        PolyOperator rho(rep.ring);
        for (std::size_t u = 0; u < q; ++u) {
            Poly a = sk.tprime[u].derivative(0).evaluate(0, Gaussian(0));
            if (a.is_zero()) continue;
            MultiIndex idx(q, 0);
            idx[u] = 1;
            rho.add_term(idx, hbar_to_nu(a, rep.ring));
        }
        Poly c(sk.ring);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(f[k]) != 0) c += sk.w[k].derivative(0).evaluate(0, Gaussian(0)) * Gaussian(f[k]);
        rho.add_term(MultiIndex(q, 0), hbar_to_nu(c * I, rep.ring));
        rep.ops.push_back(I * rho);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<std::string> catalog_names() { return {"heisenberg", "filiform", "axb", "spiral", "diamond", "motion"}; }

namespace {

long as_int(const Rational& q, const std::string& what) {
    if (q.get_den() != 1 || q < 1 || q > 16) throw std::invalid_argument(what + " must be an integer between 1 and 16");
    return q.get_num().get_si();
}

std::map<std::string, Rational> defaults_for(const std::string& name, const std::map<std::string, Rational>& given) {
    auto n_or = [&](long d) {
        auto it = given.find("n");
        return it == given.end() ? d : as_int(it->second, "n");
    };
    std::map<std::string, Rational> d;
    if (name == "heisenberg") {
        long n = n_or(1);
        d["n"] = n;
        d["lambda"] = 2;
        if (n == 1) {
            d["a"] = 0;
            d["b"] = 0;
        } else {
            for (long k = 1; k <= n; ++k) {
                d["a" + std::to_string(k)] = 0;
                d["b" + std::to_string(k)] = 0;
            }
        }
    } else if (name == "filiform") {
        long n = n_or(3);
        d["n"] = n;
        for (long k = 1; k <= n; ++k) d["l" + std::to_string(k)] = 0;
        d["l1"] = 1;
        if (n >= 3) d["l3"] = 5;
    } else if (name == "axb") {
        d["sign"] = 1;
    } else if (name == "spiral") {
        d["c0"] = Rational(3, 5);
        d["s0"] = Rational(4, 5);
    } else if (name == "diamond") {
        d["lambda"] = 1;
        d["mu"] = Rational(1, 2);
    } else if (name == "motion") {
        d["r"] = 3;
    } else {
        throw std::invalid_argument("unknown catalog entry '" + name + "'");
    }
    return d;
}

PolySeries nu_series(std::vector<Poly> c) { return PolySeries(std::move(c), std::nullopt); }

}  // namespace

std::map<std::string, Rational> catalog_params(const CatalogSpec& spec) {
    auto d = defaults_for(spec.name, spec.params);
    for (const auto& [k, v] : spec.params) {
        if (!d.count(k)) throw std::invalid_argument("catalog entry '" + spec.name + "' has no parameter '" + k + "'");
        d[k] = v;
    }
    return d;
}

AnyRep catalog(const CatalogSpec& spec) {
    auto p = catalog_params(spec);
    const std::string& name = spec.name;
    int N = spec.trunc;
    if (N < 0) throw std::invalid_argument("truncation order must be nonnegative");
    Gaussian I = Gaussian::i(), mI(Rational(0), Rational(-1));
    AnyRep out;
    if (name == "heisenberg") {
        std::size_t n = static_cast<std::size_t>(p["n"].get_num().get_si());
        LieAlgebra L = algebras::heisenberg(n);
        LinearForm f(L.dim());
        f[2 * n] = p["lambda"];
        for (std::size_t k = 0; k < n; ++k) {
            std::string sfx = n == 1 ? "" : std::to_string(k + 1);
            f[k] = p["a" + sfx];
            f[n + k] = p["b" + sfx];
        }
        std::vector<std::size_t> hidx;
        if (sgn(p["lambda"]) == 0) {
            for (std::size_t k = 0; k < L.dim(); ++k) hidx.push_back(k);
        } else {
            for (std::size_t k = n; k < L.dim(); ++k) hidx.push_back(k);
        }
        PolyRep rep = build_pi(L, f, span_of_indices(L, hidx));
        rep.provenance = Provenance::catalog;
        out = std::move(rep);
    } else if (name == "filiform") {
        std::size_t n = static_cast<std::size_t>(p["n"].get_num().get_si());
        LieAlgebra L = algebras::filiform(n);
        LinearForm f(L.dim());
        std::vector<std::size_t> hidx;
        for (std::size_t k = 0; k < n; ++k) {
            f[k] = p["l" + std::to_string(k + 1)];
            hidx.push_back(k);
        }
        PolyRep rep = build_pi(L, f, span_of_indices(L, hidx));
        rep.provenance = Provenance::catalog;
        out = std::move(rep);
    } else if (name == "axb") {
        const Rational& sign = p["sign"];
        if (sign != 1 && sign != -1) throw std::invalid_argument("axb sign must be +1 or -1");
        PolyRep rep;
        rep.algebra = algebras::axb();
        rep.ring = make_ring({"x"});
        Poly x = Poly::var(rep.ring, 0);
        rep.ops.push_back(mI * PolyOperator::derivative(rep.ring, 0));
        rep.ops.push_back(PolyOperator::multiplication(rep.ring, exp_series(I, x, N) * Poly(rep.ring, Gaussian(sign))));
        rep.form = LinearForm{0, sign};
        rep.polarization = span_of_indices(rep.algebra, {1});
        rep.provenance = Provenance::catalog;
        out = std::move(rep);
    } else if (name == "spiral") {
        const Rational &c0 = p["c0"], &s0 = p["s0"];
        if (c0 * c0 + s0 * s0 != 1) throw std::invalid_argument("(c0, s0) is not a point of the unit circle");
        PolyRep rep;
        rep.algebra = algebras::spiral();
        rep.ring = make_ring({"t"});
        Poly t = Poly::var(rep.ring, 0);
        PolySeries e = exp_series(I, t, N), ch = cosh_series(Gaussian(1), t, N), sh = sinh_series(Gaussian(1), t, N);
        Poly C0(rep.ring, Gaussian(c0)), S0(rep.ring, Gaussian(s0)), iC0(rep.ring, Gaussian(c0) * I), iS0(rep.ring, Gaussian(s0) * I);
        rep.ops.push_back(mI * PolyOperator::derivative(rep.ring, 0));
        rep.ops.push_back(PolyOperator::multiplication(rep.ring, e * (ch * C0 + sh * iS0)));
        rep.ops.push_back(PolyOperator::multiplication(rep.ring, e * (ch * S0 - sh * iC0)));
        rep.form = LinearForm{0, c0, s0};
        rep.polarization = span_of_indices(rep.algebra, {1, 2});
        rep.provenance = Provenance::catalog;
        out = std::move(rep);
    } else if (name == "diamond") {
        const Rational &lam = p["lambda"], &mu = p["mu"];
        if (sgn(lam) == 0) throw std::invalid_argument("diamond requires lambda != 0");
        PolyRep rep;
        rep.algebra = algebras::diamond();
        rep.ring = make_ring({"x"});
        Poly x = Poly::var(rep.ring, 0);
        PolyOperator H = Gaussian(-Rational(1) / (2 * lam)) * PolyOperator::derivative(rep.ring, 0, 2) +
                         PolyOperator::multiplication(
                             rep.ring, nu_series({Poly(rep.ring, Gaussian(mu)), Poly(rep.ring), x * x * Gaussian(-lam / 2)}));
        rep.ops.push_back(H);
        rep.ops.push_back(mI * PolyOperator::derivative(rep.ring, 0));
        rep.ops.push_back(PolyOperator::multiplication(rep.ring, nu_series({Poly(rep.ring), x * (I * Gaussian(lam))})));
        rep.ops.push_back(PolyOperator::scalar(rep.ring, Gaussian(lam)));
        rep.provenance = Provenance::catalog;
        out = std::move(rep);
    } else if (name == "motion") {
        const Rational& r = p["r"];
        // the point -r Q* with polarization <P, Q>
        LinearForm f{0, 0, -r};
        Subspace h = span_of_indices(algebras::motion(), {1, 2});
        if (spec.model == "trig") {
            TrigRep rep;
            rep.algebra = algebras::motion();
            rep.ring = make_trig_ring();
            TrigPoly c = TrigPoly::cos(rep.ring), s = TrigPoly::sin(rep.ring);
            rep.ops.push_back(TrigOperator::monomial(rep.ring, {1}, TrigSeries(std::vector<TrigPoly>{TrigPoly(), TrigPoly(-1)}, std::nullopt)));
            rep.ops.push_back(TrigOperator::multiplication(rep.ring, TrigSeries(s * TrigPoly(Gaussian(-r)))));
            rep.ops.push_back(TrigOperator::multiplication(rep.ring, TrigSeries(c * TrigPoly(Gaussian(-r)))));
            rep.form = f;
            rep.polarization = h;
            rep.provenance = Provenance::catalog;
            out = std::move(rep);
        } else if (spec.model == "tilde") {
            PolyRep rep;
            rep.algebra = algebras::motion();
            rep.ring = make_ring({"theta"}, {true});
            Poly th = Poly::var(rep.ring, 0);
            Poly mr(rep.ring, Gaussian(-r));
            rep.ops.push_back(Gaussian(-1) * PolyOperator::derivative(rep.ring, 0));
            rep.ops.push_back(PolyOperator::multiplication(rep.ring, sin_series(Gaussian(1), th, N) * mr));
            rep.ops.push_back(PolyOperator::multiplication(rep.ring, cos_series(Gaussian(1), th, N) * mr));
            rep.form = f;
            rep.polarization = h;
            rep.provenance = Provenance::catalog;
            out = std::move(rep);
        } else {
            throw std::invalid_argument("motion model must be trig or tilde");
        }
    } else {
        throw std::invalid_argument("unknown catalog entry '" + name + "'");
    }
    std::visit([&](auto& rep) { rep.label = name; }, out);
    auto defects = check_any(out);
    if (!defects.empty()) throw std::logic_error("catalog entry " + name + " fails " + defects[0].law + ": " + defects[0].detail);
    return out;
}

}  // namespace dequant
