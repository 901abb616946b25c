#ifndef DEQUANT_VERMA_HPP
#define DEQUANT_VERMA_HPP

#include "dequant/groebner.hpp"
#include "dequant/liealg.hpp"
#include "dequant/starprod.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dequant {

// Triangular decomposition n- + h + n+ of a split semisimple algebra. The
// algebra is stored with its basis reordered as (n-, h, n+) so that PBW
// monomials read n- h n+.
struct ChevalleyData {
    LieAlgebra algebra;
    std::size_t n_minus = 0, rank = 0, n_plus = 0;
    std::vector<std::size_t> transpose;  // X_a <-> X_-a, H_a fixed
    std::vector<RVec> roots;             // root of each n+ vector, as values on the h basis
    RVec delta;                          // half sum of the positive roots

    std::size_t cartan(std::size_t c) const { return n_minus + c; }
    std::size_t plus(std::size_t p) const { return n_minus + rank + p; }
};

// Reorders L to (n-, h, n+), reads the roots off ad h and validates the
// transposition as an anti-automorphism; throws std::invalid_argument.
ChevalleyData make_chevalley(const LieAlgebra& L, const std::vector<std::string>& n_minus,
                             const std::vector<std::string>& cartan, const std::vector<std::string>& n_plus,
                             const std::vector<std::pair<std::string, std::string>>& transpose_pairs);
// F, H, E with t(E) = F.
ChevalleyData sl2_chevalley();
// Empty when the transposition is an anti-automorphism commuting with the
// conjugation X -> -X of the Chevalley basis.
std::string chevalley_defect(const ChevalleyData& d);

// Conjugation of U_nu: X -> -X on the basis, coefficients conjugated, nu -> -nu.
Poly conj_pbw(const StarAlgebra& A, const Poly& u);
// Transposition of a PBW element (anti-automorphism), result normalized.
Poly transpose_pbw(StarAlgebra& A, const ChevalleyData& d, const Poly& u);
// The U(h) part of a PBW element along n- U + U n+.
Poly cartan_projection(const ChevalleyData& d, const Poly& u);

// Degree-D slice of M_mu = U_nu(g) (x)_{U(b+)} C. With `shifted` (default)
// mu = lambda + nu delta and b+ acts on the highest weight vector by
// lambda; otherwise by lambda - nu delta. Vectors are PBW polynomials in the
// n- variables and nu.
class VermaModule {
public:
    VermaModule(ChevalleyData data, RVec lambda, int D, bool shifted = true);

    const ChevalleyData& data() const { return data_; }
    StarAlgebra& algebra() { return *A_; }
    const RVec& lambda() const { return lambda_; }
    int degree() const { return D_; }
    bool shifted() const { return shifted_; }

    // PBW monomials of U(n-) of degree <= D (degree exactly d with `exact`).
    std::vector<Poly> basis(int d = -1, bool exact = false) const;
    Poly highest() const { return Poly(A_->ring(), Gaussian(1)); }

    Poly act(std::size_t i, const Poly& v);
    // u in U_nu(g), PBW form.
    Poly act_u(const Poly& u, const Poly& v);
    // Weight lambda - nu beta of a basis monomial, as nu-polynomials per h basis vector.
    std::vector<Poly> weight(const Poly& monomial) const;

    // Matrix of X_i from basis(D) into basis(D + 1); entries are nu-polynomials.
    Matrix<ScalarSeries> matrix(std::size_t i);
    std::vector<Poly> row_basis() const { return basis(D_ + 1); }

    // Coordinates of v on a list of monomials (entries in nu).
    std::vector<ScalarSeries> coordinates(const Poly& v, const std::vector<Poly>& on) const;

private:
    ChevalleyData data_;
    RVec lambda_;
    int D_;
    bool shifted_;
    std::shared_ptr<StarAlgebra> A_;
    std::vector<Poly> act_value_;  // value of each h basis vector on the highest weight vector

    Poly project(const Poly& u) const;
};

// VermaModule(data, lambda, D) in one call.
VermaModule verma_action(const ChevalleyData& data, const RVec& lambda, int D);

enum class FormKind { bilinear, hermitian };

// <a e, b e> = P(a' b)(lambda) on the degree-d slice, a' = t(a) (bilinear)
// or a* = t(conj a) (hermitian), for the shifted module.
Matrix<ScalarSeries> shapovalov_gram(const ChevalleyData& data, const RVec& lambda, int d,
                                     FormKind kind = FormKind::bilinear);
// G_{jk} = conj(G_{kj}) with nu -> -nu.
bool is_hermitian(const Matrix<ScalarSeries>& g);
// Determinant of G at a rational nu.
Gaussian gram_determinant_at(const Matrix<ScalarSeries>& g, const Rational& nu0);

// Symmetric invariant built from the inverse Killing form.
Poly killing_casimir(const LieAlgebra& L);

struct VermaVarieties {
    Ideal V;                        // kernel of the nu = 0 action
    Ideal VA;                       // mod-nu kernel of phi -> tau(phi) on the slice
    std::vector<Poly> V_kernel;
    std::vector<Poly> VA_candidates;  // c - c(lambda) for the Killing Casimir
    // tau(c) - c(lambda + nu delta) kills the slice of the shifted module
    bool casimir_acts_by_scalar = false;
    std::string diagnostic;
    std::string str() const;
};

// Kernels are taken on the module slice of degree D + 2: a slice of degree D
// alone is killed by spurious elements such as E^2 at lambda = 0.
VermaVarieties verma_varieties(const ChevalleyData& data, const RVec& lambda, int D, int K);

}  // namespace dequant

#endif
