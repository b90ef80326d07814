#pragma once

#include "ffe/eisenstein.hpp"

namespace ffe {

// Contribution of the point at infinity per unit of multiplicity: 1 when infinity
// ramifies in K, 2/(1+q) when it is inert.
mpq_class lambda_inf(const QuadExt& K);

// Degree of the special cycle Z(beta, I) of CM points, as deg_coeff * ln q.
struct CycleDegree {
  std::optional<Place> v0;  // the place where the cycle is supported
  int mult = 0;             // local length at each point
  std::uint64_t count = 0;  // number of points up to the class group action
  mpq_class deg_coeff = 0;
  LnQ degree() const { return LnQ(deg_coeff); }
};

// Z(beta, I) for beta and I integral (throws MathError otherwise), on the space with norm form alpha N.
CycleDegree deg_Z(const FieldData& fd, const IncoherentSpace& C, const ConductorProfile& prof, const RatFunc& beta,
                  const FracIdeal& I);

// The ideal I_y = y^{-1} conj(D_alpha)^{-1} attached to the coefficient.
FracIdeal cycle_ideal(const Request& req);

// -chi(y)|y| / f_inf * deg Z, with the cycle at infinity when Diff = {infinity}.
EtaValue eta_coeff_cycle(const FieldData& fd, const Request& req);

struct MainReport {
  std::set<Place> diff;
  bool support = false;
  EtaValue closed, whittaker, cycle;
  mpq_class theta = 0;
  bool closed_eq_whittaker() const { return closed.total() == whittaker.total(); }
  bool whittaker_eq_cycle() const { return whittaker.total() == cycle.total(); }
  bool closed_eq_cycle() const { return closed.total() == cycle.total(); }
  bool agree() const { return closed_eq_whittaker() && whittaker_eq_cycle() && closed_eq_cycle(); }
};
// All three computations of one coefficient.
MainReport verify_main(const FieldData& fd, const Request& req);

}  // namespace ffe
