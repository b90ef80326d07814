#include <doctest.h>

#include "ffe/lfunc.hpp"
#include "gen.hpp"

using namespace ffe;

TEST_CASE("rational functions in u") {
  UPoly p({1, 1});
  URat r(UPoly::constant(1), p);
  CHECK(r.eval(1) == mpq_class(1, 2));
  CHECK((r * URat(p)).eval(5) == 1);
  CHECK(URat(p * p, p) == URat(p));
  CHECK(r.invert_var() == URat(UPoly({0, 1}), p));
  CHECK(s_derivative_at_zero(URat(p)) == LnQ(-1));
  // u = q^{-s} = e^{-sigma}: coefficients (-1)^k / k!
  auto s = series_in_s(URat(UPoly({0, 1})).series_at_one(4));
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s[2] == mpq_class(1, 2));
  CHECK(s[3] == mpq_class(-1, 6));
  CHECK(s[4] == mpq_class(1, 24));
  // u^2 = e^{-2 sigma}
  auto s2 = series_in_s(URat(UPoly::monomial(1, 2)).series_at_one(3));
  CHECK(s2[3] == mpq_class(-4, 3));
  CHECK(URat::monomial(3, -2).eval(2) == mpq_class(3, 4));
}

TEST_CASE("Euler factors and zeta functions") {
  const Fq* F = Fq::get(3);
  QuadExt K(parse_poly(F, "t"));
  CHECK(euler_factor(K, parse_place(F, "t-1")) == URat(UPoly::constant(1), UPoly({1, -1})));
  CHECK(euler_factor(K, parse_place(F, "t")) == URat::constant(1));
  Place inert2 = Place::finite(parse_poly(F, "t^2+t+2"));
  REQUIRE(K.splitting(inert2) == Splitting::Inert);
  CHECK(euler_factor(K, inert2) == URat(UPoly::constant(1), UPoly({1, 0, 1})));
  CHECK(zeta_A(3).eval(0) == 1);
  // coefficients of zeta_A are q^d: count monics
  URat zA = zeta_A(3);
  UPoly trunc;
  for (int d = 0; d <= 10; ++d) trunc += UPoly::monomial(mpq_class(static_cast<long>(ipow(3, d))), d);
  URat diff = zA - URat(trunc);
  // zeta_A - truncation = (3u)^{11} / (1 - 3u)
  CHECK(diff == URat(UPoly::monomial(mpq_class(static_cast<long>(ipow(3, 11))), 11), UPoly({1, -3})));
  CHECK(zeta_v(parse_place(F, "t")) == URat(UPoly::constant(1), UPoly({1, -1})));
}

TEST_CASE("L-function examples") {
  const Fq* F = Fq::get(3);
  LData L1 = dirichlet_L(QuadExt(parse_poly(F, "t")));
  CHECK(L1.L == UPoly::constant(1));
  CHECK(L1.value0() == 1);
  CHECK(L1.logderiv0().is_zero());
  LData L3 = dirichlet_L(QuadExt(parse_poly(F, "t^3-t-1")));
  CHECK(L3.L.deg() == 2);
  CHECK(L3.L[2] == 3);
  CHECK(L3.L[0] == 1);
  CHECK(functional_equation_holds(L3));
  CHECK(euler_product_matches(L3, 5));
  LData toy;
  toy.K = L1.K;
  toy.L = UPoly({1, 1});
  CHECK(toy.value0() == 2);
  CHECK(toy.logderiv0() == LnQ(mpq_class(-1, 2)));
}

TEST_CASE("functional equation and Euler product over random K") {
  Gen g(53);
  for (int q : {3, 5}) {
    const Fq* F = Fq::get(q);
    int made = 0;
    for (int it = 0; made < 12 && it < 500; ++it) {
      Poly D = g.nonzero(F, 1 + static_cast<int>(g.below(q == 3 ? 5 : 4)));
      if (D.deg() < 1) continue;
      std::optional<QuadExt> K;
      try {
        K.emplace(D);
      } catch (const MathError&) {
        continue;
      }
      ++made;
      LData LD = dirichlet_L(*K);
      CHECK(functional_equation_holds(LD));
      int B = std::min(D.deg() + 2, q == 3 ? 8 : 6);
      CHECK(euler_product_matches(LD, B));
      CHECK(LD.value0() > 0);
    }
    CHECK(made == 12);
  }
}
