#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ffe/poly.hpp"

namespace ffe {

// Element of k = F_q(t): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Fq* F) : num_(F), den_(Poly::constant(F, 1)) {}
  RatFunc(const Poly& n);  // NOLINT: implicit from polynomials is intended
  RatFunc(const Poly& n, const Poly& d);
  static RatFunc constant(const Fq* F, Fq::Elem c) { return RatFunc(Poly::constant(F, c)); }
  static RatFunc one(const Fq* F) { return constant(F, 1); }

  const Fq* field() const { return den_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  // deg num - deg den
  int degree() const { return num_.deg() - den_.deg(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(int e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
  }

  std::string str() const;

 private:
  Poly num_, den_;
};

// A place of k: a monic irreducible P, or the place at infinity (pole of t).
class Place {
 public:
  Place() = default;
  static Place infinity(const Fq* F);
  static Place finite(const Poly& P);  // verifies irreducibility

  bool is_inf() const { return inf_; }
  const Poly& poly() const { return P_; }
  const Fq* field() const { return F_; }
  int deg() const { return inf_ ? 1 : P_.deg(); }
  std::uint64_t qv() const { return ipow(static_cast<std::uint64_t>(F_->q()), deg()); }

  bool operator==(const Place& o) const { return inf_ == o.inf_ && P_ == o.P_; }
  bool operator!=(const Place& o) const { return !(*this == o); }
  bool operator<(const Place& o) const {
    if (inf_ != o.inf_) return o.inf_;
    return P_ < o.P_;
  }
  std::string str() const { return inf_ ? "inf" : "(" + P_.str() + ")"; }

 private:
  const Fq* F_ = nullptr;
  bool inf_ = false;
  Poly P_;
};

int ord_at(const Place& v, const Poly& f);
int ord_at(const Place& v, const RatFunc& f);
// Places where f has a zero or a pole, infinity included when ord != 0 there.
std::set<Place> support(const RatFunc& f);
std::set<Place> finite_support(const Poly& f);

// Residue of f * pi^{-ord f} in the residue field; for finite P the result is a
// polynomial reduced mod P, at infinity a constant (pi = 1/t).
Poly unit_residue(const Place& v, const RatFunc& f);
// Quadratic character of the residue field applied to r.
int residue_legendre(const Place& v, const Poly& r);
// The uniformizer used throughout: P at finite places, 1/t at infinity.
RatFunc uniformizer(const Place& v);

// Sum over places of residues of a differential: Res_v(f dt), traced to F_q.
Fq::Elem residue(const Place& v, const RatFunc& f);

// Local conductors of the additive character x -> psi_std(c x).
class ConductorProfile {
 public:
  ConductorProfile() = default;
  explicit ConductorProfile(const RatFunc& c);
  const RatFunc& twist() const { return c_; }
  int delta(const Place& v) const;
  const std::map<Place, int>& nonzero() const { return nz_; }

 private:
  RatFunc c_;
  std::map<Place, int> nz_;
};

// Exponent k in [0, p) with psi_v(x) = zeta_p^k, where
// psi_v(x) = exp(2 pi i Tr_{F_q/F_p} Res_v(c x dt) / p).
int psi_exponent(const ConductorProfile& prof, const Place& v, const RatFunc& x);

// Idele with componentwise global entries: the component at v is g * local[v].
class Idele {
 public:
  Idele() = default;
  explicit Idele(const Fq* F) : g_(RatFunc::one(F)) {}
  Idele(const RatFunc& g, std::map<Place, RatFunc> local);

  RatFunc component(const Place& v) const;
  // Places where some component may be a non-unit.
  std::set<Place> places() const;
  // d with |y| = q^{-d}.
  int norm_exponent() const;
  // Multiply by the principal idele of c.
  Idele scaled(const RatFunc& c) const;
  const RatFunc& global() const { return g_; }
  const std::map<Place, RatFunc>& local() const { return local_; }
  std::string str() const;

 private:
  RatFunc g_;
  std::map<Place, RatFunc> local_;
};

// Parsing of the canonical text forms.
RatFunc parse_ratfunc(const Fq* F, const std::string& s);
Poly parse_poly(const Fq* F, const std::string& s);
Place parse_place(const Fq* F, const std::string& s);
// "v1=f1,v2=f2"; an empty string is the trivial idele.
Idele parse_idele(const Fq* F, const std::string& s);

}  // namespace ffe
