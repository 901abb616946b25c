#ifndef DEQUANT_STARPROD_HPP
#define DEQUANT_STARPROD_HPP

#include "dequant/liealg.hpp"
#include "dequant/nuseries.hpp"
#include "dequant/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

// Series log(sinh z / z) = sum_k a_k z^{2k}; returns a_1..a_count.
std::vector<Rational> log_sinhc_coefficients(std::size_t count);

// J(D)^{1/2} (or its inverse) as a constant-coefficient operator. Term m of
// the nu-expansion is a homogeneous polynomial of degree m in the partial
// derivatives; only even m occur.
struct DufloOperator {
    RingPtr ring;       // variables d_<name>, one per basis vector
    PolySeries series;  // coefficient of nu^m, as a polynomial in the d_i
    std::string str() const { return series.str(); }
};

// U_nu(g) in PBW normal form together with the Duflo transfer to S(g)[nu].
// Elements of both sides are polynomials in the ring (basis names..., nu);
// for U_nu the exponent vector is read as the ordered monomial
// X_1^{a_1}...X_n^{a_n}. Memo tables make an instance stateful: use one per
// thread.
class StarAlgebra {
public:
    explicit StarAlgebra(LieAlgebra L);

    const LieAlgebra& algebra() const { return L_; }
    // Basis names followed by an imaginary variable "nu".
    const RingPtr& ring() const { return ring_; }
    std::size_t nu_index() const { return L_.dim(); }
    Poly nu() const { return Poly::var(ring_, nu_index()); }
    Poly generator(std::size_t i) const { return Poly::var(ring_, i); }
    // Moves a polynomial in the basis names (with or without nu) into ring().
    Poly lift(const Poly& p) const;

    // Product of a word of generators, normalized.
    Poly pbw_word(const std::vector<std::size_t>& word);
    Poly pbw_mul(const Poly& a, const Poly& b);
    // X_i * u
    Poly left_mul(std::size_t i, const Poly& u);

    Poly symmetrize(const Poly& p);
    Poly unsymmetrize(const Poly& u);

    // J(D)^{1/2} applied to p (sign = +1) or J(D)^{-1/2} (sign = -1).
    Poly apply_jhalf(const Poly& p, int sign = 1);
    DufloOperator duflo_jhalf(int order, int sign = 1);

    Poly tau(const Poly& p) { return symmetrize(apply_jhalf(lift(p), 1)); }
    Poly tau_inverse(const Poly& u) { return apply_jhalf(unsymmetrize(u), -1); }

    // f * g, exact: the product of two polynomials is a polynomial in nu.
    Poly star(const Poly& f, const Poly& g);
    // The same as a nu-series with coefficients in the xi ring, truncated at
    // `order` when given.
    PolySeries star_series(const Poly& f, const Poly& g, Order order = std::nullopt);

private:
    LieAlgebra L_;
    RingPtr ring_;
    std::map<std::pair<std::size_t, Exponent>, Poly> left_cache_;
    std::map<Exponent, Poly> sym_cache_;
    // J^{1/2} and J^{-1/2} expanded to degree jdeg_, as polynomials in ring_
    // whose basis variables stand for the derivatives.
    int jdeg_ = -1;
    Poly jplus_, jminus_;

    const Poly& left_mul_monomial(std::size_t i, const Exponent& beta);
    const Poly& symmetrize_monomial(const Exponent& alpha);
    void ensure_j(int degree);
    int x_degree(const Exponent& e) const;
};

struct StarCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct StarReport {
    std::vector<StarCheck> checks;
    bool ok() const;
    std::string str() const;
};

struct StarPropertyOptions {
    Order order = 6;         // comparisons up to nu^order; nullopt compares exactly
    std::size_t samples = 50;
    unsigned max_degree = 3;
    std::uint64_t seed = 1;
    std::vector<Poly> casimirs;  // central elements for the f*g = fg check
};

// Associativity, C_0 = fg, antisymmetrized C_1 = {f, g}, parity
// f *_{-nu} g = g *_nu f, involution (f*g)^* = g^* * f^*, centrality of the
// supplied Casimirs.
StarReport star_properties(const LieAlgebra& L, const StarPropertyOptions& opts = {});

}  // namespace dequant

#endif
