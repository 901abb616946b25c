#ifndef DEQUANT_LIEALG_HPP
#define DEQUANT_LIEALG_HPP

#include "dequant/linalg.hpp"
#include "dequant/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

using RVec = std::vector<Rational>;

struct BracketEntry {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Rational>> terms;  // [X_i, X_j] = sum c X_k
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    // Entries may be given for i < j or i > j; antisymmetry fills the rest.
    LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& brackets);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require_index(const std::string& name) const;

    // Coefficient of X_k in [X_i, X_j].
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }
    bool bracket_is_zero(std::size_t i, std::size_t j) const { return zero_[i * dim() + j]; }

    RVec bracket(const RVec& u, const RVec& v) const;

    // Bracket over any coefficient type with ring operations (Poly, Gaussian).
    template <class K>
    std::vector<K> bracket_generic(const std::vector<K>& u, const std::vector<K>& v) const {
        std::size_t n = dim();
        std::vector<K> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (coeff_zero(u[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || bracket_is_zero(i, j) || coeff_zero(v[j])) continue;
                K uv = u[i] * v[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(c(i, j, k)) != 0) out[k] += uv * Gaussian(c(i, j, k));
            }
        }
        return out;
    }

    // Sparse bracket table, i < j, in canonical order.
    std::vector<BracketEntry> entries() const;
    // Ring of linear coordinates xi_k on g*, named after the basis.
    RingPtr xi_ring() const { return ring_; }

    RVec basis_vector(std::size_t i) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Rational> table_;
    std::vector<bool> zero_;
    RingPtr ring_;

    static bool coeff_zero(const Poly& p) { return p.is_zero(); }
    static bool coeff_zero(const Gaussian& g) { return g.is_zero(); }
};

using LinearForm = RVec;

LinearForm parse_form(const LieAlgebra& L, const std::map<std::string, Rational>& values);
Rational pair(const LinearForm& f, const RVec& x);
std::string form_str(const LieAlgebra& L, const LinearForm& f);

// Subspace given by spanning vectors; stored in reduced echelon form.
struct Subspace {
    std::vector<RVec> basis;
    std::size_t dim() const { return basis.size(); }
};

Subspace span(std::vector<RVec> vectors, std::size_t ambient);
Subspace span_of_indices(const LieAlgebra& L, const std::vector<std::size_t>& idx);
bool contains(const Subspace& s, const RVec& v);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

using Polarization = Subspace;

struct ValidationReport {
    bool jacobi_ok = true;
    std::optional<std::array<std::size_t, 3>> offending;
    std::vector<std::size_t> lower_central;  // dims of g^1, g^2, ...
    std::vector<std::size_t> derived;        // dims of g^(0), g^(1), ...
    std::optional<int> nilpotency_class;
    bool solvable = false;
    std::string str(const LieAlgebra& L) const;
};

ValidationReport validate(const LieAlgebra& L);

struct BfForm {
    Matrix<Rational> matrix;
    std::size_t rank = 0;
};

BfForm bf_form(const LieAlgebra& L, const LinearForm& f);
bool is_polarization(const LieAlgebra& L, const LinearForm& f, const Polarization& h);
// Human-readable reason when is_polarization fails, empty when it holds.
std::string polarization_defect(const LieAlgebra& L, const LinearForm& f, const Polarization& h);

// Matrix of ad X; entry (k, j) is the X_k coordinate of [X, X_j].
Matrix<Poly> ad_matrix(const LieAlgebra& L, const std::vector<Poly>& x);
// Generic element sum a_i X_i with a_i the variables of `ring` (size dim).
std::vector<Poly> generic_element(const RingPtr& ring);
Poly trace_power(const Matrix<Poly>& m, unsigned k);
Matrix<Poly> mat_mul(const Matrix<Poly>& a, const Matrix<Poly>& b);

namespace algebras {

// [X_i, Y_i] = Z; basis X1..Xn, Y1..Yn, Z.
LieAlgebra heisenberg(std::size_t n);
// Basis X1..X_{n+1}; [X_{n+1}, X_j] = X_{j-1} for 2 <= j <= n.
LieAlgebra filiform(std::size_t n);
// [X, Y] = Y.
LieAlgebra axb();
// [A, X] = X + Y, [A, Y] = -X + Y.
LieAlgebra spiral();
// Basis H, P, Q, E; [H,P] = -Q, [H,Q] = P, [P,Q] = E.
LieAlgebra diamond();
// Basis H, P, Q; [H,P] = -Q, [H,Q] = P.
LieAlgebra motion();
// Basis F, H, E; [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra sl2();

}  // namespace algebras

}  // namespace dequant

#endif
