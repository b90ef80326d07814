#include "ffe/quad.hpp"

#include <unordered_set>

namespace ffe {

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

QuadExt::QuadExt(const Poly& D) : D_(D) {
  if (D.is_zero() || D.deg() < 1) throw MathError("D must have positive degree");
  if (gcd(D, D.derivative()).deg() > 0) throw MathError("D must be squarefree: " + D.str());
  const Fq* F = D.field();
  if (D.deg() % 2) {
    genus_ = (D.deg() - 1) / 2;
    f_inf_ = 1;
  } else {
    if (F->legendre(D.lc()) > 0)
      throw MathError("D = " + D.str() + " splits at infinity; K must be imaginary");
    genus_ = D.deg() / 2 - 1;
    f_inf_ = 2;
  }
  for (auto& [P, m] : factor(D)) ram_finite_.push_back(Place::finite(P));
}

Splitting QuadExt::splitting(const Place& v) const {
  if (v.is_inf()) return f_inf_ == 1 ? Splitting::Ramified : Splitting::Inert;
  int l = legendre(D_, v.poly());
  if (l == 0) return Splitting::Ramified;
  return l > 0 ? Splitting::Split : Splitting::Inert;
}

std::vector<Place> QuadExt::ramified_places() const {
  std::vector<Place> out = ram_finite_;
  if (f_inf_ == 1) out.push_back(Place::infinity(field()));
  return out;
}

namespace {

// Quadratic character of -1 in the residue field at v.
int minus_one_char(const Place& v) { return (v.qv() % 4 == 1) ? 1 : -1; }

}  // namespace

int hilbert_symbol(const RatFunc& a, const RatFunc& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw MathError("Hilbert symbol of zero");
  int m = ord_at(v, a), n = ord_at(v, b);
  // Residue of (-1)^{mn} a^n b^{-m}; the character only sees parities.
  int s = 1;
  if ((m & 1) && (n & 1)) s *= minus_one_char(v);
  if (n & 1) s *= residue_legendre(v, unit_residue(v, a));
  if (m & 1) s *= residue_legendre(v, unit_residue(v, b));
  return s;
}

namespace {

// f(1/s) as an element of F_q(s), reusing the polynomial variable for s.
RatFunc at_infinity_chart(const RatFunc& f) {
  const Fq* F = f.field();
  int dn = f.num().deg(), dd = f.den().deg();
  Poly n = f.num().reversed(dn), d = f.den().reversed(dd);
  if (dd >= dn) return RatFunc(n * Poly::monomial(F, 1, dd - dn), d);
  return RatFunc(n, d * Poly::monomial(F, 1, dn - dd));
}

// a * P^{-2 floor(ord/2)} reduced into A / P^3.
Poly normalized_mod(const RatFunc& a, const Poly& P, const Poly& P3) {
  int o = ord_at(Place::finite(P), a);
  RatFunc b = a * RatFunc(P).pow(-2 * (o >= 0 ? o / 2 : -((-o + 1) / 2)));
  auto di = inverse_mod(b.den(), P3);
  FFE_CHECK(di.has_value(), "normalized entry must be integral");
  return mulmod(b.num(), *di, P3);
}

int search_finite(const RatFunc& a, const RatFunc& b, const Poly& P) {
  const Fq* F = P.field();
  Poly P3 = pow(P, 3);
  Poly A = normalized_mod(a, P, P3), B = normalized_mod(b, P, P3);
  std::uint64_t n = ipow(static_cast<std::uint64_t>(F->q()), P3.deg());
  std::vector<Poly> elems;
  std::vector<Poly> sq;
  std::vector<char> unit;
  elems.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    elems.push_back(Poly::from_index(F, i));
    sq.push_back(mulmod(elems.back(), elems.back(), P3));
    unit.push_back(!elems.back().divisible_by(P));
  }
  std::unordered_set<std::uint64_t> all_sq, unit_sq;
  for (std::uint64_t i = 0; i < n; ++i) {
    all_sq.insert(sq[i].index());
    if (unit[i]) unit_sq.insert(sq[i].index());
  }
  std::vector<Poly> ax(n), by(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    ax[i] = mulmod(A, sq[i], P3);
    by[i] = mulmod(B, sq[i], P3);
  }
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      std::uint64_t w = ((ax[i] + by[j]) % P3).index();
      if (unit[i] || unit[j] ? all_sq.count(w) : unit_sq.count(w)) return 1;
    }
  return -1;
}

}  // namespace

int hilbert_symbol_search(const RatFunc& a, const RatFunc& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw MathError("Hilbert symbol of zero");
  if (v.qv() > 9) throw MathError("solvability search limited to residue fields of size <= 9");
  if (v.is_inf()) return search_finite(at_infinity_chart(a), at_infinity_chart(b), Poly::t(v.field()));
  return search_finite(a, b, v.poly());
}

int chi_v(const QuadExt& K, const Place& v, const RatFunc& a) { return hilbert_symbol(a, RatFunc(K.D()), v); }

int chi_global(const QuadExt& K, const Idele& y) {
  std::set<Place> places = y.places();
  for (auto& v : K.ramified_places()) places.insert(v);
  places.insert(Place::infinity(K.field()));
  int s = 1;
  for (auto& v : places) s *= chi_v(K, v, y.component(v));
  return s;
}

int hasse_invariant(const std::vector<RatFunc>& coeffs, const Place& v) {
  int s = 1;
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = i + 1; j < coeffs.size(); ++j) s *= hilbert_symbol(coeffs[i], coeffs[j], v);
  return s;
}

IncoherentSpace::IncoherentSpace(const QuadExt& K, const Poly& alpha, std::optional<RatFunc> eps_inf)
    : K_(K), alpha_(alpha) {
  if (alpha.is_zero()) throw MathError("alpha must be nonzero");
  const Fq* F = K.field();
  Place inf = Place::infinity(F);
  RatFunc D(K.D());
  if (eps_inf) {
    if (eps_inf->is_zero()) throw MathError("eps_inf must be nonzero");
    if (hilbert_symbol(*eps_inf, D, inf) != -1)
      throw MathError("eps_inf = " + eps_inf->str() + " does not satisfy (eps_inf, D)_inf = -1");
    eps_inf_ = *eps_inf;
  } else {
    RatFunc ns = RatFunc::constant(F, F->nonsquare());
    RatFunc it = RatFunc(Poly::constant(F, 1), Poly::t(F));
    std::vector<RatFunc> candidates = {ns, it, ns * it, RatFunc(Poly::t(F)), ns * RatFunc(Poly::t(F))};
    bool found = false;
    for (auto& c : candidates)
      if (hilbert_symbol(c, D, inf) == -1) {
        eps_inf_ = c;
        found = true;
        break;
      }
    if (!found) throw ConsistencyError("no eps_inf candidate with (eps_inf, D)_inf = -1");
  }
  int prod = 1;
  for (auto& v : relevant_places()) prod *= hasse(v);
  FFE_CHECK(prod == -1, "Hasse invariants of an incoherent collection must multiply to -1");
}

RatFunc IncoherentSpace::eps(const Place& v) const {
  return v.is_inf() ? eps_inf_ : RatFunc::one(K_.field());
}

RatFunc IncoherentSpace::scale(const Place& v) const { return RatFunc(alpha_) * eps(v); }

int IncoherentSpace::hasse(const Place& v) const {
  RatFunc a = scale(v);
  return hasse_invariant({a, -(a * RatFunc(K_.D()))}, v);
}

std::set<Place> IncoherentSpace::relevant_places() const {
  std::set<Place> out = finite_support(alpha_);
  for (auto& v : K_.ramified_places()) out.insert(v);
  out.insert(Place::infinity(K_.field()));
  return out;
}

std::set<Place> diff_set(const IncoherentSpace& C, const RatFunc& beta) {
  if (beta.is_zero()) throw MathError("Diff is defined for nonzero beta");
  std::set<Place> places = C.relevant_places();
  for (auto& v : support(beta)) places.insert(v);
  std::set<Place> out;
  for (auto& v : places) {
    bool by_hasse = C.hasse(v) != chi_v(C.K(), v, beta);
    bool by_norm = chi_v(C.K(), v, beta / C.scale(v)) == -1;
    FFE_CHECK(by_hasse == by_norm, "Diff characterizations disagree at " + v.str());
    if (by_hasse) out.insert(v);
  }
  FFE_CHECK(out.size() % 2 == 1, "Diff must have odd cardinality");
  return out;
}

}  // namespace ffe
