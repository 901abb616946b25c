#include "dequant/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace dequant {

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& brackets)
    : names_(std::move(names)) {
    std::size_t n = names_.size();
    table_.assign(n * n * n, Rational(0));
    zero_.assign(n * n, true);
    std::vector<bool> seen(n * n, false);
    for (const auto& b : brackets) {
        if (b.i >= n || b.j >= n) throw std::invalid_argument("bracket index out of range");
        if (b.i == b.j) {
            bool all_zero = true;
            for (const auto& [k, c] : b.terms) all_zero = all_zero && sgn(c) == 0;
            if (!all_zero) throw std::invalid_argument("nonzero self-bracket [" + names_[b.i] + "," + names_[b.i] + "]");
            continue;
        }
        if (seen[b.i * n + b.j]) throw std::invalid_argument("bracket [" + names_[b.i] + "," + names_[b.j] + "] given twice");
        seen[b.i * n + b.j] = seen[b.j * n + b.i] = true;
        for (const auto& [k, c] : b.terms) {
            if (k >= n) throw std::invalid_argument("bracket result index out of range");
            table_[(b.i * n + b.j) * n + k] += c;
            table_[(b.j * n + b.i) * n + k] -= c;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c(i, j, k)) != 0) zero_[i * n + j] = false;
    ring_ = make_ring(names_);
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

std::size_t LieAlgebra::require_index(const std::string& name) const {
    auto k = index_of(name);
    if (!k) throw std::invalid_argument("unknown basis label '" + name + "'");
    return *k;
}

RVec LieAlgebra::bracket(const RVec& u, const RVec& v) const {
    std::size_t n = dim();
    RVec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(v[j]) == 0 || bracket_is_zero(i, j)) continue;
            Rational uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += uv * c(i, j, k);
        }
    }
    return out;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) {
            if (bracket_is_zero(i, j)) continue;
            BracketEntry e{i, j, {}};
            for (std::size_t k = 0; k < dim(); ++k)
                if (sgn(c(i, j, k)) != 0) e.terms.emplace_back(k, c(i, j, k));
            out.push_back(std::move(e));
        }
    return out;
}

RVec LieAlgebra::basis_vector(std::size_t i) const {
    RVec v(dim(), Rational(0));
    v.at(i) = 1;
    return v;
}

LinearForm parse_form(const LieAlgebra& L, const std::map<std::string, Rational>& values) {
    LinearForm f(L.dim(), Rational(0));
    for (const auto& [name, v] : values) f[L.require_index(name)] = v;
    return f;
}

Rational pair(const LinearForm& f, const RVec& x) {
    Rational s(0);
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k] * x[k];
    return s;
}

std::string form_str(const LieAlgebra& L, const LinearForm& f) {
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (sgn(f[k]) == 0) continue;
        std::string term = (f[k] == 1 ? std::string() : f[k] == -1 ? std::string("-") : f[k].get_str() + "*") + L.names()[k] + "*";
        if (out.empty()) out = term;
        else if (term.front() == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

Subspace span(std::vector<RVec> vectors, std::size_t ambient) {
    Matrix<Rational> m;
    for (auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("vector length does not match dimension");
        m.push_back(std::move(v));
    }
    auto pivots = rref(m);
    Subspace s;
    for (std::size_t r = 0; r < pivots.size(); ++r) s.basis.push_back(m[r]);
    return s;
}

Subspace span_of_indices(const LieAlgebra& L, const std::vector<std::size_t>& idx) {
    std::vector<RVec> v;
    for (auto k : idx) v.push_back(L.basis_vector(k));
    return span(std::move(v), L.dim());
}

bool contains(const Subspace& s, const RVec& v) {
    Matrix<Rational> m = s.basis;
    std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(m) == r0;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<RVec> out;
    for (const auto& u : a.basis)
        for (const auto& v : b.basis) out.push_back(L.bracket(u, v));
    return span(std::move(out), L.dim());
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
    for (std::size_t p = 0; p < s.basis.size(); ++p)
        for (std::size_t q = p + 1; q < s.basis.size(); ++q)
            if (!contains(s, L.bracket(s.basis[p], s.basis[q]))) return false;
    return true;
}

ValidationReport validate(const LieAlgebra& L) {
    ValidationReport rep;
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n && rep.jacobi_ok; ++i)
        for (std::size_t j = i + 1; j < n && rep.jacobi_ok; ++j)
            for (std::size_t k = j + 1; k < n && rep.jacobi_ok; ++k) {
                RVec x = L.basis_vector(i), y = L.basis_vector(j), z = L.basis_vector(k);
                RVec a = L.bracket(x, L.bracket(y, z));
                RVec b = L.bracket(y, L.bracket(z, x));
                RVec c = L.bracket(z, L.bracket(x, y));
                for (std::size_t m = 0; m < n; ++m)
                    if (sgn(a[m] + b[m] + c[m]) != 0) {
                        rep.jacobi_ok = false;
                        rep.offending = std::array<std::size_t, 3>{i, j, k};
                        break;
                    }
            }
    if (!rep.jacobi_ok) return rep;

    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    Subspace g = span_of_indices(L, all);

    Subspace cur = g;
    rep.lower_central.push_back(cur.dim());
    for (std::size_t step = 0; step <= n && cur.dim() > 0; ++step) {
        Subspace next = bracket_span(L, g, cur);
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
        rep.lower_central.push_back(cur.dim());
    }
    if (cur.dim() == 0) rep.nilpotency_class = static_cast<int>(rep.lower_central.size()) - 1;

    cur = g;
    rep.derived.push_back(cur.dim());
    for (std::size_t step = 0; step <= n && cur.dim() > 0; ++step) {
        Subspace next = bracket_span(L, cur, cur);
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
        rep.derived.push_back(cur.dim());
    }
    rep.solvable = cur.dim() == 0;
    return rep;
}

std::string ValidationReport::str(const LieAlgebra& L) const {
    std::ostringstream os;
    if (!jacobi_ok) {
        const auto& t = *offending;
        os << "jacobi: FAILS on (" << L.names()[t[0]] << ", " << L.names()[t[1]] << ", " << L.names()[t[2]] << ")\n";
        return os.str();
    }
    os << "jacobi: ok\n";
    os << "lower central series dims:";
    for (auto d : lower_central) os << ' ' << d;
    os << "\nderived series dims:";
    for (auto d : derived) os << ' ' << d;
    os << "\nnilpotent: ";
    if (nilpotency_class) os << "yes, class " << *nilpotency_class;
    else os << "no";
    os << "\nsolvable: " << (solvable ? "yes" : "no") << "\n";
    return os.str();
}

BfForm bf_form(const LieAlgebra& L, const LinearForm& f) {
    std::size_t n = L.dim();
    BfForm out;
    out.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < n; ++k) s += f[k] * L.c(i, j, k);
            out.matrix[i][j] = s;
        }
    out.rank = rank(out.matrix);
    return out;
}

std::string polarization_defect(const LieAlgebra& L, const LinearForm& f, const Polarization& h) {
    if (!is_subalgebra(L, h)) return "not a subalgebra";
    for (const auto& u : h.basis)
        for (const auto& v : h.basis)
            if (sgn(pair(f, L.bracket(u, v))) != 0) return "f does not vanish on [h,h]";
    std::size_t d = bf_form(L, f).rank;
    if (h.dim() + d / 2 != L.dim())
        return "dimension " + std::to_string(h.dim()) + " but dim g - d/2 = " + std::to_string(L.dim() - d / 2);
    return {};
}

bool is_polarization(const LieAlgebra& L, const LinearForm& f, const Polarization& h) {
    return polarization_defect(L, f, h).empty();
}

Matrix<Poly> ad_matrix(const LieAlgebra& L, const std::vector<Poly>& x) {
    std::size_t n = L.dim();
    Matrix<Poly> m(n, std::vector<Poly>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero() || L.bracket_is_zero(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(L.c(i, j, k)) != 0) m[k][j] += x[i] * Gaussian(L.c(i, j, k));
        }
    return m;
}

std::vector<Poly> generic_element(const RingPtr& ring) {
    std::vector<Poly> x;
    for (std::size_t k = 0; k < ring->size(); ++k) x.push_back(Poly::var(ring, k));
    return x;
}

Matrix<Poly> mat_mul(const Matrix<Poly>& a, const Matrix<Poly>& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    Matrix<Poly> out(n, std::vector<Poly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Poly trace_power(const Matrix<Poly>& m, unsigned k) {
    if (k == 0) return Poly(Gaussian(static_cast<long>(m.size())));
    Matrix<Poly> p = m;
    for (unsigned e = 1; e < k; ++e) p = mat_mul(p, m);
    Poly t;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
    return t;
}

namespace algebras {

namespace {
BracketEntry br(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, long>> t) {
    BracketEntry e{i, j, {}};
    for (auto [k, c] : t) e.terms.emplace_back(k, Rational(c));
    return e;
}
}  // namespace

LieAlgebra heisenberg(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back(n == 1 ? "X" : "X" + std::to_string(k));
    for (std::size_t k = 1; k <= n; ++k) names.push_back(n == 1 ? "Y" : "Y" + std::to_string(k));
    names.push_back("Z");
    std::vector<BracketEntry> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(br(k, n + k, {{2 * n, 1}}));
    return LieAlgebra(names, b);
}

LieAlgebra filiform(std::size_t n) {
    if (n < 2) throw std::invalid_argument("filiform algebra needs n >= 2");
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n + 1; ++k) names.push_back("X" + std::to_string(k));
    std::vector<BracketEntry> b;
    for (std::size_t j = 2; j <= n; ++j) b.push_back(br(n, j - 1, {{j - 2, 1}}));
    return LieAlgebra(names, b);
}

LieAlgebra axb() { return LieAlgebra({"X", "Y"}, {br(0, 1, {{1, 1}})}); }

LieAlgebra spiral() {
    return LieAlgebra({"A", "X", "Y"}, {br(0, 1, {{1, 1}, {2, 1}}), br(0, 2, {{1, -1}, {2, 1}})});
}

LieAlgebra diamond() {
    return LieAlgebra({"H", "P", "Q", "E"}, {br(0, 1, {{2, -1}}), br(0, 2, {{1, 1}}), br(1, 2, {{3, 1}})});
}

LieAlgebra motion() { return LieAlgebra({"H", "P", "Q"}, {br(0, 1, {{2, -1}}), br(0, 2, {{1, 1}})}); }

LieAlgebra sl2() {
    // F = 0, H = 1, E = 2
    return LieAlgebra({"F", "H", "E"}, {br(1, 2, {{2, 2}}), br(1, 0, {{0, -2}}), br(2, 0, {{1, 1}})});
}

}  // namespace algebras

}  // namespace dequant
