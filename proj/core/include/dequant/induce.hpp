#ifndef DEQUANT_INDUCE_HPP
#define DEQUANT_INDUCE_HPP

#include "dequant/diffop.hpp"
#include "dequant/liealg.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dequant {

enum class Provenance { built, catalog };

// pi(X_i) for every basis vector, as differential operators on the module
// coordinates.
template <class F>
struct Representation {
    LieAlgebra algebra;
    RingPtr ring;
    std::vector<DiffOperator<F>> ops;
    Provenance provenance = Provenance::built;
    std::string label;
    std::optional<LinearForm> form;
    std::optional<Subspace> polarization;

    const DiffOperator<F>& operator[](std::size_t i) const { return ops.at(i); }
    Order order() const {
        Order o;
        for (const auto& op : ops) o = min_order(o, op.order());
        return o;
    }
    bool is_exact() const { return !order().has_value(); }
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < ops.size(); ++i) out += "pi(" + algebra.names()[i] + ") = " + ops[i].str() + "\n";
        return out;
    }
};

using PolyRep = Representation<Poly>;
using TrigRep = Representation<TrigPoly>;
using AnyRep = std::variant<PolyRep, TrigRep>;

inline const LieAlgebra& algebra_of(const AnyRep& r) {
    return std::visit([](const auto& x) -> const LieAlgebra& { return x.algebra; }, r);
}
inline std::string label_of(const AnyRep& r) {
    return std::visit([](const auto& x) { return x.label; }, r);
}
inline std::string rep_str(const AnyRep& r) {
    return std::visit([](const auto& x) { return x.str(); }, r);
}

struct RepDefect {
    std::string law;     // "homomorphism" or "self-adjoint"
    std::string detail;  // offending pair or generator and the residue
};

// pi(X)pi(Y) - pi(Y)pi(X) = nu pi([X,Y]) for all basis pairs, and
// formal_adjoint(pi(X)) = pi(X); empty when both hold.
template <class F>
std::vector<RepDefect> check_representation(const Representation<F>& rep) {
    std::vector<RepDefect> out;
    const auto& L = rep.algebra;
    std::size_t n = L.dim();
    using Op = DiffOperator<F>;
    auto nu_op = Op::multiplication(rep.ring, NuSeries<F>(std::vector<F>{F(), F(Gaussian(1))}, std::nullopt));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Op rhs(rep.ring);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(L.c(i, j, k)) != 0) rhs += Gaussian(L.c(i, j, k)) * rep.ops[k];
            Op diff = rep.ops[i].commutator(rep.ops[j]) - nu_op * rhs;
            if (!diff.is_zero())
                out.push_back({"homomorphism", "[" + L.names()[i] + ", " + L.names()[j] + "]: residue " + diff.str()});
        }
    for (std::size_t i = 0; i < n; ++i) {
        Op diff = rep.ops[i].formal_adjoint() - rep.ops[i];
        if (!diff.is_zero()) out.push_back({"self-adjoint", L.names()[i] + ": residue " + diff.str()});
    }
    return out;
}

inline std::vector<RepDefect> check_any(const AnyRep& r) {
    return std::visit([](const auto& x) { return check_representation(x); }, r);
}

// rho_hbar(X) = -i pi_{i hbar}(X), a representation of g with bracket
// scaled by hbar.
template <class F>
std::vector<DiffOperator<F>> rho_at(const Representation<F>& rep, const Rational& hbar) {
    std::vector<DiffOperator<F>> out;
    for (const auto& op : rep.ops)
        out.push_back(Gaussian(Rational(0), Rational(-1)) * op.substitute_nu(Gaussian(Rational(0), hbar)));
    return out;
}

using PolyVec = std::vector<Poly>;

// log(exp A exp B) for a nilpotent algebra whose bracket is multiplied by
// `scale`; the Dynkin series stops at the nilpotency class.
PolyVec bch(const LieAlgebra& L, const PolyVec& A, const PolyVec& B, const Poly& scale = Poly(1));

// Rational coefficient of each right-nested bracket [w1,[w2,...,wm]] over
// the letters a, b in the Dynkin series, words up to length max_len.
const std::map<std::string, Rational>& dynkin_coefficients(int max_len);

// Ordered coexponential basis X_1..X_q to the polarization h.
struct MalcevChart {
    std::vector<RVec> coexp;
    Subspace h;
    std::vector<std::string> coords;  // module coordinate names t_1..t_q
};

// Empty when every g_j = span(X_j..X_q) + h is a subalgebra with g_{j+1}
// an ideal of codimension one.
std::string chart_defect(const LieAlgebra& L, const MalcevChart& chart);
// Chooses basis vectors greedily, innermost first; throws when no basis
// vector normalizes the current flag member.
MalcevChart auto_chart(const LieAlgebra& L, const Subspace& h);
std::vector<std::string> default_coordinate_names(std::size_t q);

struct SecondKind {
    RingPtr ring;      // s, coordinate names, hbar
    PolyVec tprime;    // new chart coordinates
    PolyVec w;         // component in h, as a vector in the ambient basis
};

// exp(-sZ) exp(t_1 X_1)...exp(t_q X_q) = exp(t'_1 X_1)...exp(t'_q X_q) exp(W)
// with W in h. The bracket is scaled by the ring variable hbar when
// `scaled`; `s_degree` >= 0 drops higher powers of s along the way.
SecondKind factor_second_kind(const LieAlgebra& L, const MalcevChart& chart, const RVec& Z, bool scaled = false,
                              int s_degree = -1);

// pi_nu from (g, f, h) for nilpotent g.
PolyRep build_pi(const LieAlgebra& L, const LinearForm& f, const Subspace& h,
                 const std::optional<MalcevChart>& chart = std::nullopt);

struct CatalogSpec {
    std::string name;
    std::map<std::string, Rational> params;
    std::string model = "trig";  // motion: trig | tilde
    int trunc = 12;              // truncation order for transcendental coefficients
};

std::vector<std::string> catalog_names();
// Parameter defaults of a catalog entry, merged with the given values.
std::map<std::string, Rational> catalog_params(const CatalogSpec& spec);
// The operators of the worked examples; nilpotent entries are built.
AnyRep catalog(const CatalogSpec& spec);

}  // namespace dequant

#endif
