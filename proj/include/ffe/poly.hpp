#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffe/fq.hpp"

namespace ffe {

// Polynomial in t over F_q, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  using Elem = Fq::Elem;

  Poly() = default;
  explicit Poly(const Fq* F) : F_(F) {}
  Poly(const Fq* F, std::vector<Elem> coeffs);

  static Poly constant(const Fq* F, Elem c);
  static Poly monomial(const Fq* F, Elem c, int n);
  static Poly t(const Fq* F) { return monomial(F, 1, 1); }
  // The n-th polynomial of degree < ... in base-q digit order.
  static Poly from_index(const Fq* F, std::uint64_t index);
  // Monic polynomial of degree d whose lower coefficients are the digits of index.
  static Poly monic_from_index(const Fq* F, int d, std::uint64_t index);

  const Fq* field() const { return F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lc() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem s) const;
  Poly shift(int n) const;  // multiply by t^n, n >= 0
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  void divmod(const Poly& d, Poly& quo, Poly& rem) const;
  Poly operator/(const Poly& d) const;  // exact quotient; throws if remainder
  Poly operator%(const Poly& d) const;
  bool divisible_by(const Poly& d) const { return (*this % d).is_zero(); }

  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  Poly reversed(int n) const;  // t^n * f(1/t), requires n >= deg

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Degree first, then coefficients from the top.
  bool operator<(const Poly& o) const;

  std::string str() const;
  std::uint64_t index() const;

 private:
  void trim();
  const Fq* F_ = nullptr;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
// Returns g = gcd(a,b) monic with s*a + t*b = g.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly a, std::uint64_t e, const Poly& m);
// a^(q^k) mod m
Poly frobenius_pow(const Poly& a, int k, const Poly& m);
Poly pow(const Poly& a, int e);

std::uint64_t ipow(std::uint64_t b, int e);  // throws on overflow

bool is_irreducible(const Poly& P);
// Monic irreducible factors with multiplicity, sorted; the leading coefficient is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
// All monic irreducible polynomials of degree d (cached).
const std::vector<Poly>& irreducibles_of_degree(const Fq* F, int d);

// Quadratic residue symbol of a modulo the monic irreducible P, by Euler's criterion.
int legendre(const Poly& a, const Poly& P);
// Jacobi symbol (a/b) for monic b, via reciprocity; multiplicative in b.
int jacobi(Poly a, Poly b);

// b with b^2 = a, leading coefficient the canonical square root, if one exists.
std::optional<Poly> poly_sqrt(const Poly& a);
// Square root of a modulo the monic irreducible P, smaller of the two roots.
std::optional<Poly> sqrt_mod(const Poly& a, const Poly& P);

}  // namespace ffe
