#include "dequant/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dequant {

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

RingPtr make_ring(std::vector<std::string> names, std::vector<bool> imaginary) {
    auto r = std::make_shared<PolyRing>();
    if (imaginary.empty()) imaginary.assign(names.size(), false);
    if (imaginary.size() != names.size()) throw std::invalid_argument("ring flags do not match names");
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
            if (names[a] == names[b]) throw std::invalid_argument("duplicate variable " + names[a]);
    r->names = std::move(names);
    r->imaginary = std::move(imaginary);
    return r;
}

RingPtr empty_ring() {
    static const RingPtr r = std::make_shared<PolyRing>();
    return r;
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool grlex_greater(const Exponent& a, const Exponent& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b || b->size() == 0) return a;
    if (a->size() == 0) return b;
    if (a->same_as(*b)) return a;
    throw std::invalid_argument("polynomials live in different rings");
}

Poly::Poly(const Gaussian& c) : ring_(empty_ring()) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

Poly::Poly(RingPtr ring, const Gaussian& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace(Exponent(ring_->size(), 0), c);
}

Poly Poly::var(const RingPtr& ring, std::size_t index) {
    Exponent e(ring->size(), 0);
    e.at(index) = 1;
    return monomial(ring, std::move(e));
}

Poly Poly::var(const RingPtr& ring, const std::string& name) {
    auto k = ring->index_of(name);
    if (!k) throw std::invalid_argument("unknown variable " + name);
    return var(ring, *k);
}

Poly Poly::monomial(const RingPtr& ring, Exponent e, const Gaussian& c) {
    Poly p(ring);
    if (e.size() != ring->size()) throw std::invalid_argument("exponent length mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && dequant::total_degree(terms_.begin()->first) == 0);
}

Gaussian Poly::constant_term() const { return coeff(Exponent(nvars(), 0)); }

Gaussian Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Gaussian() : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(dequant::total_degree(e)));
    return d;
}

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(e[var]));
    return d;
}

void Poly::add_term(const Exponent& e, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::adopt_ring(const Poly& o) {
    RingPtr r = common_ring(ring_, o.ring_);
    if (r == ring_) return;
    Gaussian c = constant_term();
    ring_ = r;
    terms_.clear();
    if (!c.is_zero()) terms_.emplace(Exponent(ring_->size(), 0), c);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    adopt_ring(o);
    if (o.nvars() != nvars()) {
        add_term(Exponent(nvars(), 0), o.constant_term());
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    adopt_ring(o);
    if (o.nvars() != nvars()) {
        add_term(Exponent(nvars(), 0), -o.constant_term());
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Gaussian& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    RingPtr r = common_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Poly(r);
    if (a.nvars() != b.nvars()) {
        const Poly& big = a.nvars() > b.nvars() ? a : b;
        const Poly& small = a.nvars() > b.nvars() ? b : a;
        return big * small.constant_term();
    }
    Poly out(r);
    std::size_t n = r->size();
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars() == b.nvars()) return a.terms_ == b.terms_;
    // A constant in the empty ring equals the same constant elsewhere.
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
}

Poly Poly::pow(unsigned e) const {
    Poly r(ring_, Gaussian(1)), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        out.add_term(f, c * Gaussian(static_cast<long>(e[var])));
    }
    return out;
}

Poly Poly::coeff_of(std::size_t var, unsigned k) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponent f = e;
        f[var] = 0;
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Poly Poly::truncate_degree(std::size_t var, unsigned max_deg) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_)
        if (e[var] <= max_deg) out.terms_.emplace(e, c);
    return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    int d = degree_in(var);
    if (d < 0) return *this;
    std::vector<Poly> powers{Poly(ring_, Gaussian(1))};
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        unsigned k = f[var];
        f[var] = 0;
        out += monomial(ring_, f, c) * powers[k];
    }
    return out;
}

Poly Poly::evaluate(std::size_t var, const Gaussian& value) const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        unsigned k = f[var];
        f[var] = 0;
        out.add_term(f, c * value.pow(k));
    }
    return out;
}

Poly Poly::embed(const RingPtr& target) const {
    if (target == ring_) return *this;
    std::vector<std::size_t> map(nvars());
    for (std::size_t k = 0; k < nvars(); ++k) {
        auto idx = target->index_of(ring_->names[k]);
        if (!idx) throw std::invalid_argument("variable " + ring_->names[k] + " missing in target ring");
        map[k] = *idx;
    }
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Exponent f(target->size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) f[map[k]] = e[k];
        out.add_term(f, c);
    }
    return out;
}

Poly Poly::restrict_to(const RingPtr& target) const {
    if (target == ring_) return *this;
    std::vector<std::optional<std::size_t>> map(nvars());
    for (std::size_t k = 0; k < nvars(); ++k) map[k] = target->index_of(ring_->names[k]);
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Exponent f(target->size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!map[k]) throw std::invalid_argument("variable " + ring_->names[k] + " still occurs");
            f[*map[k]] = e[k];
        }
        out.add_term(f, c);
    }
    return out;
}

Poly Poly::conj() const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) {
        unsigned odd = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (ring_->imaginary[k]) odd += e[k];
        Gaussian v = c.conj();
        if (odd % 2) v = -v;
        out.terms_.emplace(e, v);
    }
    return out;
}

bool Poly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

Poly Poly::real_part() const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) out.add_term(e, Gaussian(c.re()));
    return out;
}

Poly Poly::imag_part() const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) out.add_term(e, Gaussian(c.im()));
    return out;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    const Exponent* lead = nullptr;
    for (const auto& [e, c] : terms_)
        if (!lead || grlex_greater(e, *lead)) lead = &e;
    return *this * terms_.at(*lead).inverse();
}

std::string monomial_str(const PolyRing& ring, const Exponent& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.names[k];
        if (e[k] > 1) s += '^' + std::to_string(e[k]);
    }
    return s;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return grlex_greater(a->first, b->first); });
    std::string out;
    for (auto t : order) {
        const auto& [e, c] = *t;
        std::string mono = monomial_str(*ring_, e);
        std::string cs = c.str();
        std::string term;
        if (mono.empty()) {
            term = (!c.is_real() && !c.is_imaginary()) ? "(" + cs + ")" : cs;
        } else if (c.is_one()) {
            term = mono;
        } else if (c == Gaussian(-1)) {
            term = "-" + mono;
        } else if (!c.is_real() && !c.is_imaginary()) {
            term = "(" + cs + ")*" + mono;
        } else {
            term = cs + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& s, const RingPtr& ring) : s_(s), ring_(ring) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial '" + s_ + "' at column " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc(ring_);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
                acc *= d.constant_term().inverse();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Poly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("')' expected");
            return p;
        }
        if (ch == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(ring_, Gaussian(parse_rational(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (auto k = ring_->index_of(name)) return Poly::var(ring_, *k);
            if (name == "i") return Poly(ring_, Gaussian::i());
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace dequant
