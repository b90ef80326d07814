#pragma once

#include "ffe/quad.hpp"
#include "ffe/upoly.hpp"

namespace ffe {

// L_v(s, chi_K) as a function of u: 1/(1 - chi(pi_v) u^{deg v}), or 1 if ramified.
URat euler_factor(const QuadExt& K, const Place& v);
// zeta_A(s) = 1/(1 - q u) and zeta_v(s) = 1/(1 - u^{deg v}).
URat zeta_A(int q);
URat zeta_v(const Place& v);
// F(s + k) for F given in u: substitutes u -> u q^{-k}.
URat shift_s(const URat& F, int q, int k);

struct LData {
  QuadExt K;
  UPoly L;         // L(s, chi_K) over all places, a polynomial of degree 2 g_K
  UPoly L_finite;  // product over the finite places only
  int checked_degree = 0;  // divisor sums enumerated through this degree

  mpq_class value0() const { return L.eval(1); }
  // (d/ds) log L at s = 0
  LnQ logderiv0() const;
};

// Divisor-sum expansion sum_{f monic} (D/f) u^{deg f}, with vanishing of the
// coefficients above deg D - 1 checked as far as the cost allows.
LData dirichlet_L(const QuadExt& K);

// L(u) == q^g u^{2g} L(1/(q u)) as polynomials.
bool functional_equation_holds(const LData& LD);
// Compares L with the product of Euler factors over places of degree <= B, to u-order B.
bool euler_product_matches(const LData& LD, int B);

}  // namespace ffe
