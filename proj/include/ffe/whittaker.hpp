#pragma once

#include "ffe/cyclo.hpp"
#include "ffe/quad.hpp"
#include "ffe/upoly.hpp"

namespace ffe {

// q_v^{k/2} as an exact positive real.
Cyclo qv_half_power(const Place& v, long k);
// psi_v(x) as a p-th root of unity.
Cyclo psi_value(const ConductorProfile& prof, const Place& v, const RatFunc& x);

// gamma_v(lambda) = |lambda|^{1/2} * lim_j int_{pi^{-j} O_v} psi_v(lambda a^2) da, with the
// self-dual measure vol(O_v) = q_v^{-delta_v/2}; evaluated through a residue-field sum.
Cyclo weil_gamma(const ConductorProfile& prof, const Place& v, const RatFunc& lambda);
// The same limit by summing the truncated integrals until they stabilize. Refuses
// when the sums get large.
Cyclo weil_gamma_integral(const ConductorProfile& prof, const Place& v, const RatFunc& lambda);
// Weil index of the binary space (K_v, c N_{K/k}) = <c, -c D>.
Cyclo weil_index(const QuadExt& K, const ConductorProfile& prof, const Place& v, const RatFunc& c);

// Local data at v for the coefficient (y, beta).
struct LocalCase {
  Place v;
  Splitting split = Splitting::Split;
  int delta = 0;
  int m = 0;        // ord_v(y_v^2 beta) + delta_v
  int e = 0;        // -delta_v - ord_v(alpha eps_v)
  int e_prime = 0;  // -delta_v - ord_v(beta)
  bool in_diff = false;
};
LocalCase local_case(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
                     const RatFunc& beta);

// scalar * f(u_v), u_v = q_v^{-s}.
struct UvForm {
  Cyclo scalar;
  URat f;
  Cyclo at(const mpq_class& uv) const { return scalar * f.eval(uv); }
};

// 1 - chi(pi_v) u_v / q_v at a place with no local data.
UvForm w_good(const QuadExt& K, const Place& v);
// Closed forms of the local Whittaker function of the new vector of C (alpha) and of
// the lattice of V_beta = (K, beta N) (tilde), at the coefficient y_v^2 beta.
UvForm w_alpha(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
               const RatFunc& beta);
UvForm w_tilde(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
               const RatFunc& beta);

enum class Lattice { Alpha, Tilde };
// Boundary term plus the sum over r of unit-integral character sums, computed over
// residue rings at the given u_v. Refuses when q_v > 9.
Cyclo whittaker_oracle(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
                       const RatFunc& beta, Lattice which, const mpq_class& uv);

}  // namespace ffe
