#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ffe {

// Polynomial in u = q^{-s} with rational coefficients, low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> c);
  static UPoly constant(const mpq_class& c) { return UPoly({c}); }
  static UPoly monomial(const mpq_class& c, int n);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const mpq_class& s) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  mpq_class eval(const mpq_class& u) const;
  UPoly derivative() const;
  // f(u^k)
  UPoly subst_pow(int k) const;
  // f(u * c)
  UPoly scale_var(const mpq_class& c) const;
  // f(1 + x) as a polynomial in x.
  UPoly taylor_shift_one() const;
  UPoly pow(int e) const;
  mpq_class lc() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic

// N(u) / D(u) in lowest terms with D monic.
class URat {
 public:
  URat() : num_(), den_(UPoly::constant(1)) {}
  URat(const UPoly& n);  // NOLINT
  URat(const UPoly& n, const UPoly& d);
  static URat constant(const mpq_class& c) { return URat(UPoly::constant(c)); }
  // c * u^n for any integer n.
  static URat monomial(const mpq_class& c, int n);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }

  URat operator+(const URat& o) const;
  URat operator-(const URat& o) const;
  URat operator-() const { return URat(-num_, den_); }
  URat operator*(const URat& o) const;
  URat operator*(const mpq_class& s) const { return URat(num_ * s, den_); }
  URat operator/(const URat& o) const;
  URat& operator*=(const URat& o) { return *this = *this * o; }
  URat& operator+=(const URat& o) { return *this = *this + o; }
  bool operator==(const URat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const URat& o) const { return !(*this == o); }

  mpq_class eval(const mpq_class& u) const;  // throws at a pole
  URat derivative() const;
  URat subst_pow(int k) const;
  // f(1/u)
  URat invert_var() const;
  // f(c u)
  URat scale_var(const mpq_class& c) const;
  // Coefficients of f(1 + x) up to x^order; requires no pole at u = 1.
  std::vector<mpq_class> series_at_one(int order) const;

  std::string str() const;

 private:
  UPoly num_, den_;
};

// The real number c * ln q.
struct LnQ {
  mpq_class c = 0;
  LnQ() = default;
  explicit LnQ(const mpq_class& x) : c(x) {}
  LnQ operator+(const LnQ& o) const { return LnQ(c + o.c); }
  LnQ operator-(const LnQ& o) const { return LnQ(c - o.c); }
  LnQ operator-() const { return LnQ(-c); }
  LnQ operator*(const mpq_class& s) const { return LnQ(c * s); }
  bool operator==(const LnQ& o) const { return c == o.c; }
  bool operator!=(const LnQ& o) const { return c != o.c; }
  bool is_zero() const { return c == 0; }
  std::string str() const { return c.get_str() + "*ln(q)"; }
};

// d/ds F at s = 0 for F a function of u = q^{-s}.
LnQ s_derivative_at_zero(const URat& F);

// Given the expansion of F(1 + x), coefficients a_k with F = sum a_k (s ln q)^k.
std::vector<mpq_class> series_in_s(const std::vector<mpq_class>& at_one);

std::string rational_str(const mpq_class& x);

}  // namespace ffe
