#ifndef DEQUANT_COADJOINT_HPP
#define DEQUANT_COADJOINT_HPP

#include "dequant/groebner.hpp"
#include "dequant/induce.hpp"
#include "dequant/liealg.hpp"

#include <string>
#include <vector>

namespace dequant {

// Ad*(exp X) xi, with (ad* X xi)(Y) = -xi([X, Y]). X and xi are coordinate
// vectors over a common polynomial ring (constants allowed).
PolyVec coad_exp(const LieAlgebra& L, const PolyVec& X, const PolyVec& xi);

struct OrbitIdeal {
    Ideal ideal;               // in L.xi_ring()
    RingPtr param_ring;        // group parameters followed by the xi names
    PolyVec parametrization;   // Ad*(exp sum s_i X_i) f
    std::size_t params = 0;

    // Every generator vanishes after substituting the parametrization.
    bool vanishes_on_parametrization() const;
};

// Zariski closure of the coadjoint orbit of f; nilpotent orbits are closed,
// so this is the orbit itself.
OrbitIdeal orbit_closure_ideal(const LieAlgebra& L, const LinearForm& f);

// Vanishing ideal of the affine space f + h^perp.
Ideal affine_ideal(const LieAlgebra& L, const LinearForm& f, const Subspace& h);

struct PukanszkyReport {
    bool holds = false;
    Ideal h_orbit;  // closure of H.f
    Ideal affine;   // f + h^perp
};

PukanszkyReport pukanszky_affine_check(const LieAlgebra& L, const LinearForm& f, const Subspace& h);

}  // namespace dequant

#endif
