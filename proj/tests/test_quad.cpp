#include <doctest.h>

#include "ffe/quad.hpp"
#include "gen.hpp"

using namespace ffe;

namespace {

RatFunc R(const Fq* F, const char* s) { return parse_ratfunc(F, s); }

std::set<Place> symbol_places(const RatFunc& a, const RatFunc& b) {
  std::set<Place> out = support(a);
  for (auto& v : support(b)) out.insert(v);
  out.insert(Place::infinity(a.field()));
  return out;
}

}  // namespace

TEST_CASE("splitting types") {
  const Fq* F = Fq::get(3);
  QuadExt K(parse_poly(F, "t"));
  CHECK(K.splitting(parse_place(F, "t-1")) == Splitting::Split);
  CHECK(K.splitting(parse_place(F, "t")) == Splitting::Ramified);
  CHECK(K.splitting(Place::infinity(F)) == Splitting::Ramified);
  CHECK(K.genus() == 0);
  CHECK(K.splitting(parse_place(F, "t+1")) == Splitting::Inert);
  QuadExt K2(parse_poly(F, "2*t^2+1"));
  CHECK(K2.f_inf() == 2);
  CHECK(K2.genus() == 0);
  CHECK(QuadExt(parse_poly(F, "t^3+2*t+2")).genus() == 1);
  CHECK_THROWS(QuadExt(parse_poly(F, "t^2+1")));  // real
  CHECK_THROWS(QuadExt(parse_poly(F, "t^2")));
  CHECK_THROWS(QuadExt(parse_poly(F, "2")));
}

TEST_CASE("Hilbert symbol examples") {
  const Fq* F3 = Fq::get(3);
  Place t3 = parse_place(F3, "t");
  CHECK(hilbert_symbol(R(F3, "t"), R(F3, "t"), t3) == -1);
  CHECK(hilbert_symbol(R(F3, "t"), R(F3, "-1"), t3) == -1);
  const Fq* F5 = Fq::get(5);
  CHECK(hilbert_symbol(R(F5, "t"), R(F5, "t"), parse_place(F5, "t")) == 1);
  CHECK(hilbert_symbol_search(R(F3, "t"), R(F3, "t"), t3) == -1);
  CHECK(hilbert_symbol_search(R(F5, "t"), R(F5, "t"), parse_place(F5, "t")) == 1);
  CHECK_THROWS(hilbert_symbol(RatFunc(F3), R(F3, "t"), t3));
}

TEST_CASE("tame formula agrees with the solvability search") {
  Gen g(31);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    int budget = q == 9 ? 6 : 40;
    for (int it = 0; it < budget; ++it) {
      RatFunc a = g.ratfunc(F, 3), b = g.ratfunc(F, 3);
      std::vector<Place> vs = {Place::infinity(F), Place::finite(g.irreducible(F, 1))};
      if (q == 3) vs.push_back(Place::finite(g.irreducible(F, 2)));
      // Force interesting valuations at the chosen place.
      for (auto& v : vs) {
        RatFunc pi = uniformizer(v);
        RatFunc a1 = a * pi.pow(static_cast<int>(g.below(3))), b1 = b * pi.pow(static_cast<int>(g.below(3)));
        CHECK(hilbert_symbol(a1, b1, v) == hilbert_symbol_search(a1, b1, v));
      }
    }
  }
}

TEST_CASE("Hilbert reciprocity, symmetry and bimultiplicativity") {
  Gen g(37);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (int it = 0; it < 60; ++it) {
      RatFunc a = g.nonzero(F, 4), b = g.nonzero(F, 4), c = g.nonzero(F, 3);
      int prod = 1;
      for (auto& v : symbol_places(a, b)) prod *= hilbert_symbol(a, b, v);
      CHECK(prod == 1);
      std::set<Place> vs = symbol_places(a * c, b);
      for (auto& v : vs) {
        CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        CHECK(hilbert_symbol(a * c, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v));
        CHECK(hilbert_symbol(a, -a, v) == 1);
        CHECK(hilbert_symbol(a * a, b, v) == 1);
      }
    }
  }
}

TEST_CASE("characters and Hasse invariants") {
  const Fq* F = Fq::get(3);
  QuadExt K(parse_poly(F, "t"));
  CHECK(chi_global(K, Idele(F)) == 1);
  CHECK(chi_v(K, parse_place(F, "t-1"), R(F, "t-1")) == 1);
  CHECK(hasse_invariant({R(F, "t")}, parse_place(F, "t")) == 1);
  CHECK(hasse_invariant({R(F, "t"), R(F, "-t")}, parse_place(F, "t")) == 1);
  CHECK(hasse_invariant({R(F, "1"), R(F, "-t")}, parse_place(F, "t")) == 1);
  Gen g(41);
  for (int it = 0; it < 30; ++it) {
    RatFunc c = g.ratfunc(F, 3);
    for (auto& v : symbol_places(c, RatFunc(K.D()))) CHECK(chi_v(K, v, c * c) == 1);
    // chi of a principal idele is trivial
    CHECK(chi_global(K, Idele(c, {})) == 1);
  }
}

TEST_CASE("incoherent spaces and Diff") {
  Gen g(43);
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    int made = 0;
    for (int it = 0; made < 12 && it < 200; ++it) {
      Poly D = g.nonzero(F, 1 + static_cast<int>(g.below(4)));
      if (D.deg() < 1) continue;
      std::optional<QuadExt> K;
      try {
        K.emplace(D);
      } catch (const MathError&) {
        continue;
      }
      ++made;
      Poly alpha = g.nonzero(F, 2);
      IncoherentSpace C(*K, alpha);
      int prod = 1;
      for (auto& v : C.relevant_places()) prod *= C.hasse(v);
      CHECK(prod == -1);
      CHECK(diff_set(C, RatFunc(alpha)) == std::set<Place>{Place::infinity(F)});
      for (int j = 0; j < 20; ++j) {
        RatFunc beta = g.ratfunc(F, 4), c = g.ratfunc(F, 2);
        auto d = diff_set(C, beta);
        CHECK(d.size() % 2 == 1);
        CHECK(diff_set(C, c * c * beta) == d);
      }
    }
    CHECK(made == 12);
  }
  const Fq* F = Fq::get(3);
  IncoherentSpace C(QuadExt(parse_poly(F, "t")), parse_poly(F, "1"));
  auto d = diff_set(C, R(F, "t-1"));
  for (auto& v : d) CHECK((v.is_inf() || v == parse_place(F, "t")));
  CHECK_THROWS(IncoherentSpace(QuadExt(parse_poly(F, "t")), parse_poly(F, "1"), R(F, "1")));
}
