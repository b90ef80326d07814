#include <doctest.h>

#include <random>

#include "ffe/cyclo.hpp"
#include "ffe/field.hpp"
#include "gen.hpp"

using namespace ffe;

TEST_CASE("finite field tables satisfy the field axioms") {
  for (int q : {3, 5, 7, 9, 25, 27}) {
    const Fq* F = Fq::get(q);
    for (int x = 0; x < q; ++x) {
      CHECK(F->add(x, F->neg(x)) == 0);
      if (x) CHECK(F->mul(x, F->inv(x)) == 1);
      for (int y = 0; y < q; ++y) {
        CHECK(F->mul(x, y) == F->mul(y, x));
        for (int z = 0; z < q; z += 2)
          CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
      }
    }
    int squares = 0;
    for (int x = 1; x < q; ++x) squares += F->legendre(x) > 0;
    CHECK(squares == (q - 1) / 2);
  }
  CHECK_THROWS(Fq::get(4));
  CHECK_THROWS(Fq::get(15));
  CHECK(Fq::get(9)->modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("irreducibility examples") {
  const Fq* F = Fq::get(3);
  CHECK(is_irreducible(parse_poly(F, "t^2+1")));
  CHECK_FALSE(is_irreducible(parse_poly(F, "t^2")));
  CHECK(is_irreducible(parse_poly(F, "t")));
  CHECK_THROWS(is_irreducible(Poly(F)));
  // Count of monic irreducibles of degree d matches the necklace formula.
  CHECK(irreducibles_of_degree(F, 1).size() == 3);
  CHECK(irreducibles_of_degree(F, 2).size() == 3);
  CHECK(irreducibles_of_degree(F, 3).size() == 8);
  CHECK(irreducibles_of_degree(Fq::get(9), 2).size() == 36);
}

TEST_CASE("factorization reproduces the polynomial") {
  Gen g(11);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (int it = 0; it < 60; ++it) {
      Poly f = g.poly(F, 1 + static_cast<int>(g.below(8)));
      if (f.is_zero()) continue;
      Poly prod = Poly::constant(F, f.lc());
      for (auto& [P, m] : factor(f)) {
        CHECK(is_irreducible(P));
        prod = prod * pow(P, m);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("legendre symbol examples and multiplicativity") {
  const Fq* F = Fq::get(3);
  CHECK(legendre(parse_poly(F, "t"), parse_poly(F, "t^2+1")) == 1);
  CHECK(legendre(parse_poly(F, "t^2"), parse_poly(F, "t-1")) == 1);
  CHECK(legendre(parse_poly(F, "t"), parse_poly(F, "t")) == 0);
  Gen g(5);
  for (int q : {3, 5, 9}) {
    const Fq* Fp = Fq::get(q);
    for (int it = 0; it < 80; ++it) {
      Poly P = g.irreducible(Fp, 1 + static_cast<int>(g.below(3)));
      Poly a = g.poly(Fp, 5), b = g.poly(Fp, 5);
      CHECK(legendre(a * b, P) == legendre(a, P) * legendre(b, P));
      // Euler criterion against the set of squares mod P.
      Poly r = a % P;
      bool sq = false;
      std::uint64_t n = ipow(static_cast<std::uint64_t>(q), P.deg());
      for (std::uint64_t i = 0; i < n && !sq; ++i) {
        Poly x = Poly::from_index(Fp, i);
        sq = mulmod(x, x, P) == r;
      }
      int expect = r.is_zero() ? 0 : (sq ? 1 : -1);
      CHECK(legendre(a, P) == expect);
      Poly b1 = g.monic(Fp, 1 + static_cast<int>(g.below(5)));
      int jac = 1;
      for (auto& [Q, m] : factor(b1))
        for (int i = 0; i < m; ++i) jac *= legendre(a, Q);
      CHECK(jacobi(a, b1) == jac);
    }
  }
}

TEST_CASE("valuations and the product formula") {
  const Fq* F = Fq::get(3);
  Place t = parse_place(F, "(t)");
  CHECK(ord_at(t, parse_ratfunc(F, "t^2/(t+1)")) == 2);
  CHECK(ord_at(Place::infinity(F), parse_ratfunc(F, "t^3")) == -3);
  CHECK(ord_at(parse_place(F, "t+1"), parse_ratfunc(F, "5")) == 0);
  CHECK_THROWS(ord_at(t, RatFunc(F)));
  Gen g(7);
  for (int q : {3, 5, 9}) {
    const Fq* Fp = Fq::get(q);
    for (int it = 0; it < 100; ++it) {
      RatFunc f = g.ratfunc(Fp, 4);
      int total = 0;
      for (auto& v : support(f)) total += v.deg() * ord_at(v, f);
      CHECK(total == 0);
    }
  }
}

TEST_CASE("square roots of polynomials") {
  const Fq* F3 = Fq::get(3);
  CHECK(*poly_sqrt(parse_poly(F3, "t^2+2*t+1")) == parse_poly(F3, "t+1"));
  CHECK_FALSE(poly_sqrt(parse_poly(F3, "t")).has_value());
  const Fq* F5 = Fq::get(5);
  CHECK(*poly_sqrt(parse_poly(F5, "4*t^2")) == parse_poly(F5, "2*t"));
  Gen g(3);
  for (int it = 0; it < 500; ++it) {
    const Fq* F = Fq::get(it % 3 == 0 ? 3 : (it % 3 == 1 ? 5 : 9));
    Poly b = g.poly(F, static_cast<int>(g.below(7)));
    auto r = poly_sqrt(b * b);
    REQUIRE(r.has_value());
    CHECK((*r == b || *r == -b));
    CHECK(*r * *r == b * b);
    if (!b.is_zero()) CHECK(r->lc() == F->sqrt(r->lc() * 0 + F->mul(b.lc(), b.lc())));
  }
}

TEST_CASE("square roots modulo an irreducible") {
  Gen g(13);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (int it = 0; it < 40; ++it) {
      Poly P = g.irreducible(F, 1 + static_cast<int>(g.below(4)));
      Poly a = g.poly(F, P.deg() + 2);
      auto r = sqrt_mod(a, P);
      CHECK(r.has_value() == (legendre(a, P) >= 0));
      if (r) CHECK(mulmod(*r, *r, P) == a % P);
    }
  }
}

TEST_CASE("conductor profiles") {
  const Fq* F = Fq::get(3);
  Place inf = Place::infinity(F), t = parse_place(F, "t"), t1 = parse_place(F, "t+1");
  ConductorProfile c1(RatFunc::one(F));
  CHECK(c1.delta(inf) == -2);
  CHECK(c1.delta(t) == 0);
  ConductorProfile ct(parse_ratfunc(F, "t"));
  CHECK(ct.delta(t) == 1);
  CHECK(ct.delta(inf) == -3);
  CHECK(ct.delta(t1) == 0);
  ConductorProfile cinv(parse_ratfunc(F, "1/t"));
  CHECK(cinv.delta(t) == -1);
  CHECK(cinv.delta(inf) == -1);
  CHECK_THROWS(ConductorProfile(RatFunc(F)));
}

TEST_CASE("residue theorem and triviality of psi on k") {
  Gen g(17);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (int it = 0; it < 60; ++it) {
      RatFunc f = g.ratfunc(F, 5);
      if (f.is_zero()) continue;
      // dt has a double pole at infinity, so infinity always counts.
      std::set<Place> poles = finite_support(f.den());
      poles.insert(Place::infinity(F));
      Fq::Elem sum = 0;
      for (auto& v : poles) sum = F->add(sum, residue(v, f));
      CHECK(sum == 0);
      ConductorProfile prof(g.ratfunc(F, 2));
      std::set<Place> places = support(f);
      for (auto& v : support(prof.twist())) places.insert(v);
      places.insert(Place::infinity(F));
      int e = 0;
      for (auto& v : places) e += psi_exponent(prof, v, f);
      CHECK(e % F->p() == 0);
    }
  }
}

TEST_CASE("conductor matches the definition by residues") {
  // psi_v is trivial on pi^{-delta} O_v and not on pi^{-delta-1} O_v.
  Gen g(23);
  const Fq* F = Fq::get(3);
  for (int it = 0; it < 20; ++it) {
    ConductorProfile prof(g.ratfunc(F, 2));
    std::set<Place> places = support(prof.twist());
    places.insert(Place::infinity(F));
    places.insert(parse_place(F, "t^2+1"));
    for (auto& v : places) {
      int d = prof.delta(v);
      RatFunc pi = uniformizer(v);
      bool trivial = true, nontrivial = false;
      for (int i = 0; i < 27; ++i) {
        RatFunc unit = RatFunc(Poly::from_index(F, i + 1));
        if (v.is_inf()) unit = RatFunc(Poly::from_index(F, i + 1), Poly::monomial(F, 1, Poly::from_index(F, i + 1).deg()));
        if (psi_exponent(prof, v, unit * pi.pow(-d)) != 0) trivial = false;
        if (psi_exponent(prof, v, unit * pi.pow(-d - 1)) != 0) nontrivial = true;
      }
      CHECK(trivial);
      CHECK(nontrivial);
    }
  }
}

TEST_CASE("text forms round trip") {
  const Fq* F = Fq::get(3);
  for (std::string s : {"2*t^3+t+1", "t^2+1", "t", "2", "0", "t^5+2*t^2"}) CHECK(parse_poly(F, s).str() == s);
  CHECK(parse_poly(F, "t^3+2t+2").str() == "t^3+2*t+2");
  CHECK(parse_place(F, "(t^2+1)").str() == "(t^2+1)");
  CHECK(parse_place(F, "inf").str() == "inf");
  const Fq* F9 = Fq::get(9);
  Poly p9 = parse_poly(F9, "(a+1)*t^2+2*a*t+a");
  CHECK(parse_poly(F9, p9.str()) == p9);
  Idele y = parse_idele(F, "(t)=t^2,inf=1/t");
  CHECK(y.norm_exponent() == 2 * 1 + 1);
  Gen g(2);
  for (int it = 0; it < 100; ++it) {
    RatFunc f = g.ratfunc(F9, 4);
    CHECK(parse_ratfunc(F9, f.str()) == f);
  }
}

TEST_CASE("cyclotomic arithmetic") {
  for (int p : {3, 5, 7}) {
    Cyclo s = Cyclo::sqrt_p(p);
    CHECK((s * s).is_rational());
    CHECK((s * s).to_rational() == p);
    Cyclo z = Cyclo::zeta_p(p, 1), acc = Cyclo::rational(p, 0);
    for (int k = 0; k < p; ++k) acc += Cyclo::zeta_p(p, k);
    CHECK(acc.is_zero());
    Cyclo w = z;
    for (int k = 1; k < p; ++k) w = w * z;
    CHECK(w == Cyclo::rational(p, 1));
    CHECK(Cyclo::p_half_power(p, 3) == s * mpq_class(p));
    CHECK(Cyclo::p_half_power(p, -1) * s == Cyclo::rational(p, 1));
    CHECK(Cyclo::zeta(p, p).root_index() == p);
  }
}
