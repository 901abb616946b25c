#ifndef DEQUANT_GROEBNER_HPP
#define DEQUANT_GROEBNER_HPP

#include "dequant/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace dequant {

struct MonomialOrder {
    enum class Kind { grevlex, lex, block };
    Kind kind = Kind::grevlex;
    // For block orders: the first `block` variables form the eliminated block,
    // compared by grevlex before the remaining ones (also grevlex).
    std::size_t block = 0;

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {Kind::block, k}; }

    // a > b in this order.
    bool greater(const Exponent& a, const Exponent& b) const;
    std::string str() const;
};

// Generators plus a per-order cache of the reduced basis. The cache is
// filled at most once per order and is safe to share between threads.
class Ideal {
public:
    Ideal() : ring_(empty_ring()), cache_(std::make_shared<Cache>()) {}
    Ideal(RingPtr ring, std::vector<Poly> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<Poly>& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_unit_ideal() const;
    std::string str() const;  // reduced grevlex basis, "<g1, g2>"

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Poly>> bases;
    };
    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

// Reduced, monic basis sorted by increasing leading monomial.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const RingPtr& ring, const MonomialOrder& order);

// Leading monomial / coefficient in the given order.
Exponent leading_monomial(const Poly& p, const MonomialOrder& order);
Gaussian leading_coefficient(const Poly& p, const MonomialOrder& order);

Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order);
Poly reduce(const Poly& p, const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex());
bool member(const Poly& p, const Ideal& I);
bool contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& I, const Ideal& J);

// I intersected with the subring of variables not in `drop`; the result
// lives in the smaller ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

bool is_star_closed(const Ideal& I);
// Real generators f+, f- of a star-closed ideal (reduced grevlex basis of
// them). Throws std::domain_error when I is not closed under the involution.
std::vector<Poly> real_generators(const Ideal& I);

// S-polynomial, exposed for the Buchberger-criterion property test.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

}  // namespace dequant

#endif
