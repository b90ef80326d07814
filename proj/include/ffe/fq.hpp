#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffe {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when two independently computed quantities disagree.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define FFE_CHECK(cond, msg)                                                \
  do {                                                                      \
    if (!(cond)) throw ::ffe::ConsistencyError(std::string(msg));           \
  } while (0)

// F_q for odd q = p^r. An element is an int in [0, q) holding the base-p digits
// of its coordinates c_0 + c_1 a + ... + c_{r-1} a^{r-1}, where a is a root of
// the defining modulus.
class Fq {
 public:
  using Elem = int;

  // Interned instance; the pointer stays valid for the life of the process.
  // An empty modulus selects the smallest irreducible monic one.
  static const Fq* get(int q, const std::vector<int>& modulus = {});

  int q() const { return q_; }
  int p() const { return p_; }
  int r() const { return r_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem x, Elem y) const { return add_[x * q_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;
  Elem from_int(long long n) const;

  // Quadratic character on F_q: 0, +1 or -1.
  int legendre(Elem x) const { return chi_[x]; }
  // Smallest-encoded y with y^2 = x, or -1.
  Elem sqrt(Elem x) const { return sqrt_[x]; }
  // Absolute trace to F_p, in [0, p).
  int trace(Elem x) const { return trace_[x]; }
  Elem nonsquare() const { return nonsquare_; }
  // The generator a (equals 1 coordinate-wise when r = 1 is not meaningful).
  Elem gen() const { return r_ == 1 ? 1 % q_ : p_; }

  std::string format(Elem x) const;
  bool needs_parens(Elem x) const;

 private:
  Fq(int p, int r, std::vector<int> modulus);
  int p_, r_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, sqrt_;
  std::vector<int> chi_, trace_;
  Elem nonsquare_ = 0;
};

// Splits q into p^r; throws for even q or non prime powers.
void prime_power(int q, int& p, int& r);

}  // namespace ffe
