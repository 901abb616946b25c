#ifndef DEQUANT_POISSON_HPP
#define DEQUANT_POISSON_HPP

#include "dequant/groebner.hpp"
#include "dequant/liealg.hpp"

#include <optional>
#include <utility>

namespace dequant {

// Linear (Kirillov-Kostant-Souriau) Poisson structure on S(g):
// {f, g}(xi) = <xi, [df, dg]>.
class PoissonContext {
public:
    explicit PoissonContext(LieAlgebra L) : L_(std::move(L)) {}

    const LieAlgebra& algebra() const { return L_; }
    RingPtr ring() const { return L_.xi_ring(); }
    Poly coordinate(std::size_t i) const { return Poly::var(L_.xi_ring(), i); }

    Poly bracket(const Poly& f, const Poly& g) const;
    // {f, xi_i}
    Poly bracket_with(const Poly& f, std::size_t i) const;

private:
    LieAlgebra L_;
};

bool is_casimir(const PoissonContext& ctx, const Poly& p);

// ideal: {I, S(g)} in I (a Poisson ideal).
// subalgebra: {I, I} in I (closed under the bracket, i.e. involutive).
enum class Stability { ideal, subalgebra };

struct StabilityReport {
    bool stable = true;
    // Offending pair (generator, coordinate or second generator) and the
    // bracket's normal form.
    std::optional<std::pair<Poly, Poly>> witness;
    Poly residue;
};

StabilityReport poisson_stability(const PoissonContext& ctx, const Ideal& I, Stability kind);
bool poisson_stable(const PoissonContext& ctx, const Ideal& I, Stability kind = Stability::ideal);

}  // namespace dequant

#endif
