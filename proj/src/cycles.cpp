#include "ffe/cycles.hpp"

namespace ffe {

mpq_class lambda_inf(const QuadExt& K) {
  int f = K.f_inf();
  int sgn = f % 2 == 0 ? 1 : -1;
  mpq_class q(K.field()->q());
  return (3 + sgn + q * (1 - sgn)) / (2 * (1 + q));
}

CycleDegree deg_Z(const FieldData& fd, const IncoherentSpace& C, const ConductorProfile& prof, const RatFunc& beta,
                  const FracIdeal& I) {
  if (!I.is_integral()) throw MathError("deg_Z needs an integral ideal, got " + I.str());
  if (beta.is_zero()) throw MathError("deg_Z needs beta != 0");
  const QuadExt& K = fd.K;
  RatFunc ratio = beta / RatFunc(C.alpha());
  std::set<Place> cand = support(ratio);
  for (auto& v : K.ramified_places()) cand.insert(v);
  std::vector<Place> bad;
  for (auto& v : cand)
    if (!v.is_inf() && hilbert_symbol(ratio, RatFunc(K.D()), v) == -1) bad.push_back(v);

  CycleDegree out;
  if (bad.size() != 1) return out;
  const Place& v0 = bad.front();
  FFE_CHECK(K.splitting(v0) != Splitting::Split, "norm obstruction at split place " + v0.str());
  out.v0 = v0;
  int mult = ord_at(v0, ratio / I.norm()) + 1;
  if (mult <= 0) return out;
  int f = K.splitting(v0) == Splitting::Inert ? 2 : 1;
  FFE_CHECK(mult % f == 0, "odd length at inert place " + v0.str());
  out.mult = mult;
  FracIdeal J = I * local_data_ideal(K, prof, RatFunc(C.alpha())).conj() * local_data_ideal(K, prof, beta).inverse();
  out.count = class_sum(fd, J, RatFunc::one(K.field()));
  out.deg_coeff = mpq_class(v0.deg()) * mult * mpq_class(static_cast<long>(out.count));
  return out;
}

FracIdeal cycle_ideal(const Request& req) {
  return idele_ideal(req.K(), req.y).inverse() *
         local_data_ideal(req.K(), req.prof, RatFunc(req.C.alpha())).conj().inverse();
}

EtaValue eta_coeff_cycle(const FieldData& fd, const Request& req) {
  if (req.beta.is_zero()) throw MathError("cycle degree needs beta != 0");
  if (!req.support_ok()) return {};
  std::set<Place> diff = diff_set(req.C, req.beta);
  if (diff.size() != 1) return {};
  const QuadExt& K = req.K();
  mpq_class pre = -req.chi_abs() / K.f_inf();
  FracIdeal Iy = cycle_ideal(req);
  const Place& v0 = *diff.begin();
  if (v0.is_inf()) {
    // points in the fiber at infinity
    std::uint64_t n = class_sum(fd, Iy.conj(), req.beta / RatFunc(req.C.alpha()));
    return {pre, LnQ((req.m(v0) + lambda_inf(K)) * mpq_class(static_cast<long>(n)))};
  }
  RatFunc a(req.beta.den() * Iy.content().den());
  CycleDegree z = deg_Z(fd, req.C, req.prof, a * a * req.beta, Iy.scaled(a));
  return {pre, z.degree()};
}

MainReport verify_main(const FieldData& fd, const Request& req) {
  MainReport r;
  r.diff = diff_set(req.C, req.beta);
  r.support = req.support_ok();
  r.closed = eta_coeff_closed(fd, req);
  r.whittaker = eta_coeff_whittaker(fd, req);
  r.cycle = eta_coeff_cycle(fd, req);
  r.theta = theta_coeff(fd, req);
  return r;
}

}  // namespace ffe
