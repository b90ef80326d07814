#include "ffe/eisenstein.hpp"

namespace ffe {

namespace {

mpq_class q_power(int q, int e) {
  mpz_class b = 1;
  for (int i = 0; i < std::abs(e); ++i) b *= q;
  return e >= 0 ? mpq_class(b) : mpq_class(1) / mpq_class(b);
}

// Places where alpha or the conductor is nontrivial, and infinity.
std::set<Place> alpha_places(const Request& req) {
  std::set<Place> out = support(RatFunc(req.C.alpha()));
  for (auto& [v, d] : req.prof.nonzero()) out.insert(v);
  out.insert(Place::infinity(req.K().field()));
  return out;
}

}  // namespace

FieldData::FieldData(const QuadExt& K_) : K(K_), L(dirichlet_L(K_)), G(class_group(K_, L)) {}

Request::Request(IncoherentSpace C_, ConductorProfile prof_, Idele y_, RatFunc beta_)
    : C(std::move(C_)), prof(std::move(prof_)), y(std::move(y_)), beta(std::move(beta_)) {
  for (auto& v : alpha_places(*this)) {
    if (K().splitting(v) != Splitting::Inert) continue;
    int par = ord_at(v, RatFunc(C.alpha())) + prof.delta(v);
    if (par % 2 != 0)
      throw MathError("ord_v(alpha) + delta_v is odd at the inert place " + v.str() +
                      "; choose a twist of psi that makes it even");
  }
}

mpq_class Request::chi_abs() const { return chi_global(K(), y) * q_power(K().field()->q(), -d()); }

int Request::m(const Place& v) const { return 2 * ord_at(v, y.component(v)) + ord_at(v, beta) + prof.delta(v); }

bool Request::support_ok() const {
  std::set<Place> P = y.places();
  for (auto& v : support(beta)) P.insert(v);
  for (auto& [v, d] : prof.nonzero()) P.insert(v);
  P.insert(Place::infinity(K().field()));
  for (auto& v : P)
    if (m(v) < 0) return false;
  return true;
}

std::set<Place> Request::bad_places() const {
  std::set<Place> S = alpha_places(*this);
  for (auto& v : y.places()) S.insert(v);
  for (auto& v : support(beta)) S.insert(v);
  for (auto& v : K().ramified_places()) S.insert(v);
  return S;
}

URat inert_odd_factor(const Request& req) {
  URat out = URat::constant(1);
  for (auto& v : alpha_places(req)) {
    if (req.K().splitting(v) != Splitting::Inert) continue;
    int e = -req.prof.delta(v) - ord_at(v, req.C.scale(v));
    if (e % 2 == 0) continue;
    mpq_class qinv(1, static_cast<long>(v.qv()));
    int dv = v.deg();
    out *= URat(UPoly::monomial(1, dv) + UPoly::constant(qinv), UPoly::constant(1) + UPoly::monomial(qinv, dv));
  }
  return out;
}

URat E0_series(const FieldData& fd, const Request& req) {
  const QuadExt& K = req.K();
  int g = K.genus(), d = req.d();
  int q = K.field()->q();
  URat L(fd.L.L);
  mpq_class pre = chi_global(K, req.y) * q_power(q, -d);
  URat A = URat::monomial(1, d + g) * L.invert_var();
  URat B = URat::monomial(1, -d - g) * L * inert_odd_factor(req);
  return (A - B) * pre;
}

EtaValue eta_constant(const FieldData& fd, const Request& req) {
  return {1, s_derivative_at_zero(E0_series(fd, req))};
}

EtaValue eta_constant_closed(const FieldData& fd, const Request& req) {
  const QuadExt& K = req.K();
  int q = K.field()->q();
  mpq_class pre = 2 * chi_global(K, req.y) * q_power(q, -req.d()) * fd.L.value0();
  mpq_class br = -req.d() - K.genus() - fd.L.logderiv0().c;
  for (auto& v : alpha_places(req)) {
    if (K.splitting(v) != Splitting::Inert) continue;
    int e = -req.prof.delta(v) - ord_at(v, req.C.scale(v));
    if (e % 2 == 0) continue;
    mpq_class qv(static_cast<long>(v.qv()));
    br += mpq_class(v.deg(), 2) * (qv - 1) / (qv + 1);
  }
  return {pre, LnQ(br)};
}

std::uint64_t class_sum(const FieldData& fd, const FracIdeal& J, const RatFunc& target) {
  std::uint64_t n = 0;
  for (auto& A : fd.G.reps) n += rep_count(A * A.conj().inverse() * J, target);
  return n;
}

FracIdeal theta_ideal(const Request& req) {
  return idele_ideal(req.K(), req.y).inverse() * local_data_ideal(req.K(), req.prof, req.beta).inverse();
}

EtaValue eta_coeff_closed(const FieldData& fd, const Request& req) {
  if (req.beta.is_zero()) throw MathError("closed formula needs beta != 0");
  if (!req.support_ok()) return {};
  std::set<Place> diff = diff_set(req.C, req.beta);
  if (diff.size() != 1) return {};
  const Place& v0 = *diff.begin();
  const QuadExt& K = req.K();
  int q = K.field()->q();
  int m0 = req.m(v0);
  std::uint64_t count = class_sum(fd, theta_ideal(req), RatFunc::one(K.field()));
  mpq_class pre = -chi_global(K, req.y) * q_power(q, -req.d()) / K.f_inf();
  mpq_class c = mpq_class(static_cast<long>(count)) * v0.deg();
  switch (K.splitting(v0)) {
    case Splitting::Ramified:
      return {pre, LnQ(c * (m0 + 1))};
    case Splitting::Inert: {
      int ep = -req.prof.delta(v0) - ord_at(v0, req.beta);
      int eps = ep % 2 == 0 ? 1 : 0;
      mpq_class qv(static_cast<long>(v0.qv()));
      mpq_class br = qv * (m0 + 1 - eps) + (m0 + 1 + eps);
      return {pre, LnQ(c * br / (1 + qv))};
    }
    case Splitting::Split:
      break;
  }
  throw ConsistencyError("Diff place " + v0.str() + " splits in K");
}

mpq_class theta_coeff(const FieldData& fd, const Request& req) {
  if (req.beta.is_zero()) throw MathError("theta coefficient needs beta != 0");
  if (!req.support_ok()) return 0;
  const QuadExt& K = req.K();
  std::uint64_t count = class_sum(fd, theta_ideal(req), RatFunc::one(K.field()));
  return chi_global(K, req.y) * q_power(K.field()->q(), -req.d()) * mpq_class(static_cast<long>(count)) /
         mpq_class(static_cast<long>(fd.G.h()));
}

WhittakerProduct whittaker_product(const FieldData& fd, const Request& req) {
  if (req.beta.is_zero()) throw MathError("Whittaker product needs beta != 0");
  const QuadExt& K = fd.K;
  int q = K.field()->q(), p = K.field()->p();
  int g = K.genus(), d = req.d();
  Cyclo s = Cyclo::rational(p, chi_global(K, req.y) * q_power(q, g - d));
  URat F = URat::monomial(1, -g - d);
  WhittakerProduct out;
  for (auto& v : req.bad_places()) {
    UvForm w = w_alpha(req.C, req.prof, v, req.y.component(v), req.beta);
    URat Wv = w.f.subst_pow(v.deg());
    if (Wv.is_zero()) return out;
    s *= w.scalar;
    F *= shift_s(euler_factor(K, v), q, 1) * Wv;
    if (Wv.eval(1) == 0) out.vanishing.push_back(v);
  }
  FFE_CHECK(s.is_rational(), "local Weil indices did not cancel: " + s.str());
  out.scalar = s.to_rational();
  out.F = F;
  return out;
}

EtaValue eta_coeff_whittaker(const FieldData& fd, const Request& req) {
  WhittakerProduct wp = whittaker_product(fd, req);
  if (wp.F.is_zero()) return {};
  std::size_t ndiff = diff_set(req.C, req.beta).size();
  FFE_CHECK(wp.vanishing.size() >= ndiff,
            "fewer vanishing local factors than places in Diff for beta = " + req.beta.str());
  if (ndiff == 1)
    FFE_CHECK(wp.vanishing.size() == 1, "more than one vanishing local factor for beta = " + req.beta.str());
  return {wp.scalar, s_derivative_at_zero(wp.F)};
}

std::vector<mpq_class> coeff_series(const FieldData& fd, const Request& req, int order) {
  WhittakerProduct wp = whittaker_product(fd, req);
  std::vector<mpq_class> out(static_cast<std::size_t>(order + 1), 0);
  if (wp.F.is_zero()) return out;
  std::vector<mpq_class> s = series_in_s(wp.F.series_at_one(order));
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = wp.scalar * s[static_cast<std::size_t>(k)];
  return out;
}

int vanishing_order(const FieldData& fd, const Request& req, int order) {
  std::vector<mpq_class> s = coeff_series(fd, req, order);
  for (int k = 0; k <= order; ++k)
    if (s[static_cast<std::size_t>(k)] != 0) return k;
  return order + 1;
}

}  // namespace ffe
