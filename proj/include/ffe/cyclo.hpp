#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ffe {

// Exact element of Q(zeta_N), N = 4p, as a polynomial in zeta_N reduced modulo
// the N-th cyclotomic polynomial. zeta_p = zeta_N^4 and i = zeta_N^p, under the
// embedding zeta_N -> exp(2 pi i / N).
class Cyclo {
 public:
  Cyclo() = default;
  static Cyclo rational(int p, const mpq_class& x);
  static Cyclo zeta(int p, long k);  // zeta_N^k
  static Cyclo zeta_p(int p, long k) { return zeta(p, 4 * k); }
  // Positive real square root of p.
  static Cyclo sqrt_p(int p);
  // p^{e/2} as a positive real.
  static Cyclo p_half_power(int p, long e);

  int prime() const { return p_; }
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const mpq_class& s) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class to_rational() const;  // throws unless rational
  // k with *this = zeta_N^k, if it is an N-th root of unity.
  std::optional<long> root_index() const;
  std::string str() const;

 private:
  int p_ = 0;
  std::vector<mpq_class> c_;
};

}  // namespace ffe
