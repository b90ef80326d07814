#include "ffe/lfunc.hpp"

#include <future>
#include <thread>

namespace ffe {

URat euler_factor(const QuadExt& K, const Place& v) {
  Splitting s = K.splitting(v);
  if (s == Splitting::Ramified) return URat::constant(1);
  mpq_class chi = s == Splitting::Split ? 1 : -1;
  return URat(UPoly::constant(1), UPoly::constant(1) - UPoly::monomial(chi, v.deg()));
}

URat zeta_A(int q) { return URat(UPoly::constant(1), UPoly({1, -q})); }

URat zeta_v(const Place& v) { return URat(UPoly::constant(1), UPoly::constant(1) - UPoly::monomial(1, v.deg())); }

URat shift_s(const URat& F, int q, int k) {
  mpq_class c = 1;
  for (int i = 0; i < std::abs(k); ++i) c *= q;
  return F.scale_var(k >= 0 ? mpq_class(1) / c : c);
}

LnQ LData::logderiv0() const {
  mpq_class v = value0();
  if (v == 0) throw MathError("L(0, chi_K) vanishes");
  return LnQ(-L.derivative().eval(1) / v);
}

namespace {

long long character_sum(const Poly& D, int d) {
  const Fq* F = D.field();
  std::uint64_t n = ipow(static_cast<std::uint64_t>(F->q()), d);
  unsigned nt = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (n < 4096) nt = 1;
  std::vector<std::future<long long>> parts;
  for (unsigned t = 0; t < nt; ++t)
    parts.push_back(std::async(std::launch::async, [&, t] {
      long long s = 0;
      for (std::uint64_t i = t; i < n; i += nt) s += jacobi(D, Poly::monic_from_index(F, d, i));
      return s;
    }));
  long long s = 0;
  for (auto& p : parts) s += p.get();
  return s;
}

}  // namespace

LData dirichlet_L(const QuadExt& K) {
  const Poly& D = K.D();
  int q = K.field()->q();
  int top = D.deg() - 1;
  // Vanishing beyond deg D - 1 is checked through deg D + 1 when affordable.
  int check = D.deg();
  std::uint64_t budget = 600000, cost = 0;
  for (int d = 0; d <= D.deg() + 1; ++d) {
    cost += ipow(static_cast<std::uint64_t>(q), d);
    if (d > top && cost <= budget) check = d;
  }
  std::vector<mpq_class> c;
  for (int d = 0; d <= check; ++d) {
    long long s = character_sum(D, d);
    if (d > top) {
      if (s != 0) throw ConsistencyError("divisor sum does not stabilize at degree " + std::to_string(d));
    } else {
      c.push_back(mpq_class(static_cast<long>(s)));
    }
  }
  LData LD;
  LD.K = K;
  LD.L_finite = UPoly(c);
  LD.checked_degree = check;
  if (K.f_inf() == 2) {
    UPoly quo, rem;
    LD.L_finite.divmod(UPoly({1, 1}), quo, rem);
    FFE_CHECK(rem.is_zero(), "finite L-series not divisible by the inert factor at infinity");
    LD.L = quo;
  } else {
    LD.L = LD.L_finite;
  }
  FFE_CHECK(LD.L[0] == 1, "L must have constant coefficient 1");
  FFE_CHECK(LD.L.deg() == 2 * K.genus(), "deg L must equal 2 g_K");
  FFE_CHECK(functional_equation_holds(LD), "functional equation fails");
  return LD;
}

bool functional_equation_holds(const LData& LD) {
  int g = LD.K.genus();
  mpq_class q = LD.K.field()->q();
  if (LD.L.deg() != 2 * g) return false;
  // coefficient of u^{2g-i} on the right is c_i q^{g-i}
  for (int i = 0; i <= 2 * g; ++i) {
    mpq_class qp = 1;
    for (int k = 0; k < std::abs(g - i); ++k) qp *= q;
    mpq_class rhs = g - i >= 0 ? mpq_class(LD.L[i] * qp) : mpq_class(LD.L[i] / qp);
    if (LD.L[2 * g - i] != rhs) return false;
  }
  return true;
}

bool euler_product_matches(const LData& LD, int B) {
  const Fq* F = LD.K.field();
  std::vector<mpq_class> prod(B + 1, 0);
  prod[0] = 1;
  auto mul_factor = [&](int chi, int d) {
    // multiply by 1/(1 - chi u^d) = sum chi^j u^{jd}
    std::vector<mpq_class> r = prod;
    for (int i = B; i >= 0; --i) {
      mpq_class s = 0;
      long sign = 1;
      for (int j = 1; j * d <= i; ++j) {
        sign *= chi;
        s += prod[i - j * d] * sign;
      }
      r[i] += s;
    }
    prod = r;
  };
  for (int d = 1; d <= B; ++d)
    for (auto& P : irreducibles_of_degree(F, d)) {
      int l = legendre(LD.K.D(), P);
      if (l) mul_factor(l, d);
    }
  if (LD.K.f_inf() == 2) mul_factor(-1, 1);
  for (int i = 0; i <= B; ++i)
    if (prod[i] != LD.L[i]) return false;
  return true;
}

}  // namespace ffe
