#ifndef DEQUANT_ACCEPTANCE_ORACLE_HPP
#define DEQUANT_ACCEPTANCE_ORACLE_HPP

#include "dequant/charvar.hpp"
#include "dequant/induce.hpp"

#include <string>
#include <vector>

namespace dequant::oracle {

// Kernel of pi_0 on S(g)_{<=D} found by applying pi_0 (nu = 0 parts of the
// operators, one factor at a time) to enough test functions and solving the
// dense linear system. Vectors are indexed by `monomials`.
struct BruteKernel {
    std::vector<Exponent> monomials;
    Matrix<Gaussian> basis;
};

BruteKernel brute_force_kernel(const AnyRep& rep, int D);

struct Comparison {
    bool agree = false;
    std::size_t oracle_dim = 0, module_dim = 0;
    std::string detail;
};

// Same subspace of S(g)_{<=D} as the kernel reported by ann_at_zero.
Comparison compare_ann_at_zero(const AnyRep& rep, int D);

}  // namespace dequant::oracle

#endif
