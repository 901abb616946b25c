#ifndef DEQUANT_CHARVAR_HPP
#define DEQUANT_CHARVAR_HPP

#include "dequant/groebner.hpp"
#include "dequant/induce.hpp"
#include "dequant/starprod.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

// Kernel of a representation on a bounded slice of S(g) (or S(g)[nu]).
// A bound (truncation order, degree) too small for the requested computation.
struct BoundError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AnnResult {
    Ideal ideal;                  // in the algebra's xi ring
    std::vector<Poly> generators; // greedy minimal set, ascending degree
    std::vector<Poly> kernel;     // echelon basis of the bounded kernel (mod-nu images for ann_mod_nu)
    int degree_bound = 0;         // D
    int nu_bound = -1;            // K, -1 for the nu = 0 kernel
    Order verified_order;         // truncation order of the representation, nullopt when exact
    std::string diagnostic;
    std::string str() const;
};

// Exponents of total degree <= D in n variables, ascending in grevlex.
std::vector<Exponent> monomials_up_to(std::size_t n, int D);
// Greedy minimal generators: each polynomial (in the given order) is kept
// unless it lies in the ideal of those kept before it.
std::vector<Poly> minimal_generators(const std::vector<Poly>& polys, const RingPtr& ring);

// Row echelon basis of the span, leading grevlex coefficients 1, sorted
// by ascending leading monomial.
std::vector<Poly> echelon_basis(const std::vector<Poly>& polys, const RingPtr& ring);

// Ann of pi_0 on S(g)_{<=D}: pi_0 is extended multiplicatively.
template <class F>
AnnResult ann_at_zero(const Representation<F>& rep, int D);
AnnResult ann_at_zero(const AnyRep& rep, int D);

// Kernel of phi -> pi_nu(tau(phi)) on sum_{k<=K} nu^k S(g)_{<=D}, reduced
// mod nu. Truncated representations need N >= K + 2.
template <class F>
AnnResult ann_mod_nu(const Representation<F>& rep, int D, int K);
AnnResult ann_mod_nu(const AnyRep& rep, int D, int K);

// pi_nu(tau(phi)) for phi in S(g)[nu]: a polynomial in the xi names, with or
// without an imaginary variable "nu".
template <class F>
DiffOperator<F> apply_symbol(const Representation<F>& rep, StarAlgebra& A, const Poly& phi);

// pi_nu(u) for u in U_nu(g) written in the PBW ring of A.
template <class F>
DiffOperator<F> apply_pbw(const Representation<F>& rep, const Poly& u);

// pi_nu(tau(g)) = 0 for every g, exactly or up to nu^N.
template <class F>
bool verify_annihilator(const Representation<F>& rep, const std::vector<Poly>& gens, Order N = std::nullopt);
bool verify_annihilator(const AnyRep& rep, const std::vector<Poly>& gens, Order N = std::nullopt);
bool verify_annihilator(const AnyRep& rep, const std::vector<PolySeries>& gens, Order N = std::nullopt);

struct AffineDescription {
    std::vector<Gaussian> base;                  // a point of the variety
    std::vector<std::vector<Gaussian>> directions;  // basis of the parallel linear subspace
    std::string str(const LieAlgebra& L) const;
};

// Base point and directions when every generator is affine-linear and the
// ideal is proper.
std::optional<AffineDescription> affine_description(const Ideal& I);
Ideal vanishing_ideal(const RingPtr& ring, const AffineDescription& a);

struct Certifications {
    bool poisson_stable = false;
    bool star_closed = false;
    bool inclusion_in_VA = false;
    bool affine_consistent = true;  // vanishing ideal of the description equals the ideal
};

struct VarietyReport {
    std::string kind;  // "V" or "VA"
    AnnResult ann;
    std::vector<Poly> real_gens;
    std::optional<AffineDescription> affine;
    Certifications certs;
    std::string str(const LieAlgebra& L) const;
};

struct VarietyPair {
    VarietyReport V, VA;
    std::string str(const LieAlgebra& L) const;
};

VarietyPair variety_report(const AnyRep& rep, int D = 3, int K = 3);

}  // namespace dequant

#endif
