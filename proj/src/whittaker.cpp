#include "ffe/whittaker.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace ffe {

namespace {

constexpr std::uint64_t kOracleQv = 9;
constexpr std::uint64_t kIntegralTerms = 400000;

int p_of(const Place& v) { return v.field()->p(); }
long log_p_qv(const Place& v) { return static_cast<long>(v.field()->r()) * v.deg(); }

Cyclo rat(const Place& v, const mpq_class& x) { return Cyclo::rational(p_of(v), x); }

// pi^k as a global element.
RatFunc pi_pow(const Place& v, int k) { return uniformizer(v).pow(k); }

// Representatives of O_v / P_v^M as global elements, index < q_v^M.
RatFunc residue_rep(const Place& v, int M, std::uint64_t index) {
  const Fq* F = v.field();
  Poly w = Poly::from_index(F, index);
  if (!v.is_inf()) return RatFunc(w);
  if (M <= 1) return RatFunc(w);
  return RatFunc(w, Poly::monomial(F, 1, M - 1));
}

Cyclo from_counts(int p, const std::vector<long>& counts) {
  Cyclo s = Cyclo::rational(p, 0);
  for (int k = 0; k < p; ++k)
    if (counts[k]) s += Cyclo::zeta_p(p, k) * mpq_class(counts[k]);
  return s;
}

// sum over the residue field of psi(mu w^2), with psi(mu z) linear in z.
Cyclo residue_gauss_sum(const ConductorProfile& prof, const Place& v, const RatFunc& mu) {
  const Fq* F = v.field();
  int p = F->p(), r = F->r();
  int d = v.is_inf() ? 1 : v.deg();
  std::vector<int> ell(static_cast<std::size_t>(d * r));
  for (int i = 0; i < d; ++i) {
    int pk = 1;
    for (int k = 0; k < r; ++k, pk *= p)
      ell[static_cast<std::size_t>(i * r + k)] = psi_exponent(prof, v, mu * RatFunc(Poly::monomial(F, pk, i)));
  }
  std::vector<long> counts(static_cast<std::size_t>(p), 0);
  std::uint64_t qv = v.qv();
  for (std::uint64_t idx = 0; idx < qv; ++idx) {
    Poly w = Poly::from_index(F, idx);
    Poly z = v.is_inf() ? w * w : mulmod(w, w, v.poly());
    long acc = 0;
    for (int i = 0; i <= z.deg(); ++i) {
      int c = z[i];
      for (int k = 0; k < r; ++k, c /= p) acc += static_cast<long>(c % p) * ell[static_cast<std::size_t>(i * r + k)];
    }
    ++counts[static_cast<std::size_t>(acc % p)];
  }
  return from_counts(p, counts);
}

std::mutex gamma_mu;
std::map<std::tuple<const Fq*, Place, RatFunc, int>, Cyclo> gamma_cache;

int floor_div2(int n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace

Cyclo qv_half_power(const Place& v, long k) { return Cyclo::p_half_power(p_of(v), k * log_p_qv(v)); }

Cyclo psi_value(const ConductorProfile& prof, const Place& v, const RatFunc& x) {
  return Cyclo::zeta_p(p_of(v), psi_exponent(prof, v, x));
}

Cyclo weil_gamma(const ConductorProfile& prof, const Place& v, const RatFunc& lambda) {
  if (lambda.is_zero()) throw MathError("Weil index of zero");
  int N = ord_at(v, lambda);
  int n = N + prof.delta(v);
  if (n % 2 == 0) return rat(v, 1);
  // unit part modulo squares
  int cls = residue_legendre(v, unit_residue(v, lambda));
  auto key = std::make_tuple(v.field(), v, prof.twist(), cls);
  {
    std::lock_guard<std::mutex> lk(gamma_mu);
    auto it = gamma_cache.find(key);
    if (it != gamma_cache.end()) return it->second;
  }
  int j = (n + 1) / 2;
  Cyclo g = qv_half_power(v, -1) * residue_gauss_sum(prof, v, lambda * pi_pow(v, -2 * j));
  std::lock_guard<std::mutex> lk(gamma_mu);
  gamma_cache.emplace(key, g);
  return g;
}

Cyclo weil_gamma_integral(const ConductorProfile& prof, const Place& v, const RatFunc& lambda) {
  if (lambda.is_zero()) throw MathError("Weil index of zero");
  const Fq* F = v.field();
  int N = ord_at(v, lambda);
  int n = N + prof.delta(v);
  std::uint64_t qv = v.qv();
  auto truncated = [&](int j) {
    int L = std::max({j - n, -floor_div2(n), -j});
    std::uint64_t count = 1;
    for (int i = 0; i < j + L; ++i) {
      count *= qv;
      if (count > kIntegralTerms) throw MathError("Weil index integral too large at " + v.str());
    }
    std::vector<long> counts(static_cast<std::size_t>(F->p()), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly w = Poly::from_index(F, idx);
      RatFunc a;
      if (v.is_inf()) {
        a = 1 - L >= 0 ? RatFunc(w * Poly::monomial(F, 1, 1 - L)) : RatFunc(w, Poly::monomial(F, 1, L - 1));
      } else {
        a = RatFunc(w) * pi_pow(v, -j);
      }
      ++counts[static_cast<std::size_t>(psi_exponent(prof, v, lambda * a * a))];
    }
    // |lambda|^{1/2} vol(pi^L O) = q_v^{-n/2 - L}
    return qv_half_power(v, -n - 2 * L) * from_counts(F->p(), counts);
  };
  int j0 = -floor_div2(-n);
  Cyclo a = truncated(j0), b = truncated(j0 + 1);
  FFE_CHECK(a == b, "truncated Weil integrals did not stabilize at " + v.str());
  return a;
}

Cyclo weil_index(const QuadExt& K, const ConductorProfile& prof, const Place& v, const RatFunc& c) {
  return weil_gamma(prof, v, c) * weil_gamma(prof, v, -c * RatFunc(K.D()));
}

LocalCase local_case(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
                     const RatFunc& beta) {
  LocalCase lc;
  lc.v = v;
  lc.split = C.K().splitting(v);
  lc.delta = prof.delta(v);
  lc.m = 2 * ord_at(v, y_v) + ord_at(v, beta) + lc.delta;
  lc.e = -lc.delta - ord_at(v, C.scale(v));
  lc.e_prime = -lc.delta - ord_at(v, beta);
  lc.in_diff = C.hasse(v) != hilbert_symbol(beta, RatFunc(C.K().D()), v);
  return lc;
}

UvForm w_good(const QuadExt& K, const Place& v) {
  int chi = K.splitting(v) == Splitting::Split ? 1 : -1;
  FFE_CHECK(!K.ramified(v), "no good local factor at a ramified place");
  mpq_class qv(static_cast<long>(v.qv()));
  return {rat(v, 1), URat(UPoly({1, mpq_class(-chi) / qv}))};
}

namespace {

UvForm closed_form(const IncoherentSpace& C, const ConductorProfile& prof, const LocalCase& lc,
                   const RatFunc& beta, Lattice which) {
  const Place& v = lc.v;
  mpq_class qinv(1, static_cast<long>(v.qv()));
  Cyclo vol = qv_half_power(v, -lc.delta);
  int m = lc.m;
  if (m < 0) return {rat(v, 0), URat()};
  auto X = [](int k, const mpq_class& c) { return UPoly::monomial(c, k); };
  auto sgn = [](int k) { return k % 2 == 0 ? mpq_class(1) : mpq_class(-1); };
  switch (lc.split) {
    case Splitting::Split:
      return {vol, URat((UPoly::constant(1) - X(m + 1, 1)) * UPoly({1, -qinv}), UPoly({1, -1}))};
    case Splitting::Inert: {
      int e = which == Lattice::Alpha ? lc.e : lc.e_prime;
      UPoly one_plus({1, 1});
      if (e % 2 == 0)
        return {vol, URat((UPoly::constant(1) - X(m + 1, sgn(m + 1))) * UPoly({1, qinv}), one_plus)};
      UPoly br = X(1, 1) * (UPoly::constant(1) - X(m, sgn(m))) + (UPoly::constant(1) - X(m + 2, sgn(m + 2))) * qinv;
      return {vol, URat(-br, one_plus)};
    }
    case Splitting::Ramified: {
      Cyclo eps = weil_index(C.K(), prof, v, beta);
      int sigma = which == Lattice::Alpha && lc.in_diff ? -1 : 1;
      return {eps * vol * qv_half_power(v, -1), URat(UPoly::constant(sigma) + X(m + 1, 1))};
    }
  }
  return {};
}

}  // namespace

UvForm w_alpha(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
               const RatFunc& beta) {
  return closed_form(C, prof, local_case(C, prof, v, y_v, beta), beta, Lattice::Alpha);
}

UvForm w_tilde(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
               const RatFunc& beta) {
  return closed_form(C, prof, local_case(C, prof, v, y_v, beta), beta, Lattice::Tilde);
}

Cyclo whittaker_oracle(const IncoherentSpace& C, const ConductorProfile& prof, const Place& v, const RatFunc& y_v,
                       const RatFunc& beta, Lattice which, const mpq_class& uv) {
  if (v.qv() > kOracleQv) throw MathError("Whittaker oracle limited to q_v <= 9");
  const QuadExt& K = C.K();
  LocalCase lc = local_case(C, prof, v, y_v, beta);
  const Fq* F = v.field();
  int p = F->p();
  std::uint64_t qv = v.qv();
  mpq_class qinv(1, static_cast<long>(qv));
  Cyclo vol = qv_half_power(v, -lc.delta);
  RatFunc bp = y_v * y_v * beta;

  // epsilon(space) * phi^(0) * int_O psi(-beta' b) db
  RatFunc c = which == Lattice::Alpha ? C.scale(v) : beta;
  int e = which == Lattice::Alpha ? lc.e : lc.e_prime;
  Cyclo phihat0 = rat(v, 1);
  if (lc.split == Splitting::Ramified) phihat0 = qv_half_power(v, -1);
  if (lc.split == Splitting::Inert && e % 2 != 0) phihat0 = rat(v, qinv);
  int Mb = std::max(1, -lc.m);
  std::uint64_t nb = ipow(qv, Mb);
  std::vector<long> cb(static_cast<std::size_t>(p), 0);
  for (std::uint64_t i = 0; i < nb; ++i) ++cb[static_cast<std::size_t>(psi_exponent(prof, v, -bp * residue_rep(v, Mb, i)))];
  Cyclo total = weil_index(K, prof, v, c) * phihat0 * vol * from_counts(p, cb) * rat(v, mpq_class(1) / mpq_class(static_cast<long>(nb)));

  // sum_r chi(pi)^r u_v^r int_{O^x} chi(u) psi(beta' pi^{-r} u) du
  int chi_pi = chi_v(K, v, uniformizer(v));
  int rmax = std::max(1, lc.m + 3);
  mpq_class Xr = 1;
  for (int r = 1; r <= rmax; ++r) {
    Xr *= uv * chi_pi;
    int M = std::max(1, r - lc.m);
    std::uint64_t nu = ipow(qv, M);
    RatFunc scale = bp * pi_pow(v, -r);
    std::vector<long> cnt(static_cast<std::size_t>(p), 0), neg(static_cast<std::size_t>(p), 0);
    for (std::uint64_t i = 0; i < nu; ++i) {
      if (v.is_inf() ? (M > 1 ? Poly::from_index(F, i).deg() != M - 1 : i == 0) : false) continue;
      RatFunc u = residue_rep(v, M, i);
      if (!v.is_inf() && u.num().divisible_by(v.poly())) continue;
      int ch = lc.split == Splitting::Ramified ? chi_v(K, v, u) : 1;
      int k = psi_exponent(prof, v, scale * u);
      ++(ch > 0 ? cnt : neg)[static_cast<std::size_t>(k)];
    }
    Cyclo js = (from_counts(p, cnt) - from_counts(p, neg)) * rat(v, mpq_class(1) / mpq_class(static_cast<long>(nu)));
    total += vol * js * rat(v, Xr);
  }
  return total;
}

}  // namespace ffe
