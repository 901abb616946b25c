#ifndef DEQUANT_POLY_HPP
#define DEQUANT_POLY_HPP

#include "dequant/gaussian.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

// Ordered variable list. A variable flagged imaginary satisfies conj(x) = -x
// under the involution (used for rescaled coordinates such as theta/nu).
struct PolyRing {
    std::vector<std::string> names;
    std::vector<bool> imaginary;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool same_as(const PolyRing& o) const { return names == o.names && imaginary == o.imaginary; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<bool> imaginary = {});
RingPtr empty_ring();

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);
// Graded-lex comparison: true when a sorts strictly before b in the printed
// (descending) order, i.e. a is the larger monomial.
bool grlex_greater(const Exponent& a, const Exponent& b);

// Sparse multivariate polynomial over Q(i). Constants may carry the empty
// ring and combine with polynomials of any ring.
class Poly {
public:
    using Terms = std::map<Exponent, Gaussian>;

    Poly() : ring_(empty_ring()) {}
    Poly(const Gaussian& c);
    Poly(long c) : Poly(Gaussian(c)) {}
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Gaussian& c);

    static Poly var(const RingPtr& ring, std::size_t index);
    static Poly var(const RingPtr& ring, const std::string& name);
    static Poly monomial(const RingPtr& ring, Exponent e, const Gaussian& c = Gaussian(1));

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t nvars() const { return ring_->size(); }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Gaussian constant_term() const;
    Gaussian coeff(const Exponent& e) const;
    int total_degree() const;  // -1 for zero
    int degree_in(std::size_t var) const;

    void add_term(const Exponent& e, const Gaussian& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Gaussian& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Gaussian& c) { return a *= c; }
    friend Poly operator*(const Gaussian& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    Poly derivative(std::size_t var) const;
    // Coefficient of var^k, as a polynomial in the same ring with var removed.
    Poly coeff_of(std::size_t var, unsigned k) const;
    Poly truncate_degree(std::size_t var, unsigned max_deg) const;
    Poly substitute(std::size_t var, const Poly& value) const;
    Poly evaluate(std::size_t var, const Gaussian& value) const;

    // Same polynomial written in another ring whose names include ours.
    Poly embed(const RingPtr& target) const;
    // Moves into a ring that is a subset of ours; fails if a dropped
    // variable occurs.
    Poly restrict_to(const RingPtr& target) const;

    // Involution: conjugate coefficients, imaginary variables change sign.
    Poly conj() const;
    bool is_real() const;
    Poly real_part() const;
    Poly imag_part() const;

    Poly monic() const;  // leading coefficient in grlex made 1

    std::string str() const;

private:
    RingPtr ring_;
    Terms terms_;

    void adopt_ring(const Poly& o);
};

// Resolves two rings for a binary operation; throws on incompatible rings.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

// Polynomial expression parser: + - * ^, parentheses, rationals, i, names
// from the ring. Division only by constants.
Poly parse_poly(const std::string& text, const RingPtr& ring);

std::string monomial_str(const PolyRing& ring, const Exponent& e);

}  // namespace dequant

#endif
