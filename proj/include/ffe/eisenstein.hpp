#pragma once

#include <set>
#include <vector>

#include "ffe/ideal.hpp"
#include "ffe/whittaker.hpp"

namespace ffe {

// K with its L-function and class group, computed once.
struct FieldData {
  QuadExt K;
  LData L;
  ClassGroup G;
  explicit FieldData(const QuadExt& K_);
};

// One Fourier coefficient: the space C, the additive character, y and beta.
// Requires ord_v(alpha) + delta_v even at every place v inert in K.
struct Request {
  IncoherentSpace C;
  ConductorProfile prof;
  Idele y;
  RatFunc beta;  // zero for the constant term
  Request(IncoherentSpace C_, ConductorProfile prof_, Idele y_, RatFunc beta_);

  const QuadExt& K() const { return C.K(); }
  // d with |y| = q^{-d}
  int d() const { return y.norm_exponent(); }
  // chi(y)|y|
  mpq_class chi_abs() const;
  // ord_v(y_v^2 beta) + delta_v
  int m(const Place& v) const;
  // m(v) >= 0 at every place.
  bool support_ok() const;
  // Places outside which every local factor is good.
  std::set<Place> bad_places() const;
};

// prefactor * lnq_part
struct EtaValue {
  mpq_class prefactor = 0;
  LnQ lnq_part;
  LnQ total() const { return lnq_part * prefactor; }
};

// q_v^{-s} L_v(1+s)/L_v(1-s) over inert v with e_v odd, in u.
URat inert_odd_factor(const Request& req);
// The constant term as a function of u: chi(y)|y| (|y|^s Lt(-s) - |y|^{-s} Lt(s) * inert_odd_factor).
URat E0_series(const FieldData& fd, const Request& req);
// s-derivative of E0_series at 0.
EtaValue eta_constant(const FieldData& fd, const Request& req);
// 2 chi(y)|y| L(0) [ln|y| - g_K ln q - L'(0)/L(0) + (1/2) sum_{inert, e odd} (q_v-1)/(q_v+1) ln q_v].
EtaValue eta_constant_closed(const FieldData& fd, const Request& req);

// sum over class representatives A of rep_count(A conj(A)^{-1} J, target)
std::uint64_t class_sum(const FieldData& fd, const FracIdeal& J, const RatFunc& target);
// y^{-1} D_beta^{-1}
FracIdeal theta_ideal(const Request& req);

// Closed formula through the unique place of Diff.
EtaValue eta_coeff_closed(const FieldData& fd, const Request& req);
// chi(y)|y| / #Pic(O_K) * class_sum(theta_ideal, 1); zero when the support fails.
mpq_class theta_coeff(const FieldData& fd, const Request& req);

// The modified coefficient as scalar * F(u).
struct WhittakerProduct {
  mpq_class scalar = 0;
  URat F;
  std::vector<Place> vanishing;  // places whose local factor vanishes at s = 0
};
WhittakerProduct whittaker_product(const FieldData& fd, const Request& req);
// Derivative at s = 0 of the product of local Whittaker functions.
EtaValue eta_coeff_whittaker(const FieldData& fd, const Request& req);
// Coefficients c_k with the coefficient equal to sum c_k (s ln q)^k, k <= order.
std::vector<mpq_class> coeff_series(const FieldData& fd, const Request& req, int order);
// Index of the first nonzero series coefficient, or order + 1.
int vanishing_order(const FieldData& fd, const Request& req, int order);

}  // namespace ffe
