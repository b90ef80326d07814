#pragma once

#include <optional>
#include <vector>

#include "ffe/lfunc.hpp"
#include "ffe/quad.hpp"

namespace ffe {

// Element (u + v sqrt D) of K with u, v in k.
struct QuadElem {
  RatFunc u, v;
  RatFunc norm(const Poly& D) const { return u * u - v * v * RatFunc(D); }
};
QuadElem mul(const Poly& D, const QuadElem& x, const QuadElem& y);

// Fractional O_K-ideal content * [a, b + sqrt D], with content in k^x normalized
// to monic numerator and denominator, a monic, deg b < deg a and a | b^2 - D.
class FracIdeal {
 public:
  FracIdeal() = default;
  static FracIdeal unit(const QuadExt& K);
  // A-module generated by the given elements, which must span an O_K-ideal.
  static FracIdeal generated(const QuadExt& K, const std::vector<QuadElem>& gens);
  static FracIdeal principal(const QuadExt& K, const QuadElem& x);
  static FracIdeal scalar(const QuadExt& K, const RatFunc& c);
  // Prime above the finite place v: [P, r + sqrt D] with r the smaller square
  // root of D mod P if split, [P, sqrt D] if ramified, P O_K if inert.
  static FracIdeal prime_above(const QuadExt& K, const Place& v);

  const Poly& D() const { return D_; }
  const RatFunc& content() const { return content_; }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }

  FracIdeal operator*(const FracIdeal& o) const;
  FracIdeal conj() const;
  FracIdeal inverse() const;
  FracIdeal pow(int e) const;
  FracIdeal scaled(const RatFunc& c) const;
  // Monic generator of the norm ideal, in k.
  RatFunc norm() const;
  bool is_integral() const { return content_.is_poly(); }
  bool contains(const QuadElem& x) const;

  bool operator==(const FracIdeal& o) const {
    return content_ == o.content_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const FracIdeal& o) const { return !(*this == o); }
  bool operator<(const FracIdeal& o) const;

  // (1/den) [a_full, b_full + c sqrt D]
  struct Basis {
    Poly den, a, b, c;
  };
  Basis basis() const;
  std::string str() const;

 private:
  static FracIdeal unit_of(const Poly& D);
  static FracIdeal from_gens(const Poly& D, const std::vector<QuadElem>& gens);
  Poly D_;
  RatFunc content_;
  Poly a_, b_;
};

// #{x in I : N(x) = c}; c must be nonzero.
std::uint64_t rep_count(const FracIdeal& I, const RatFunc& c);
// Same count by direct enumeration of both coordinates under the degree bound.
std::uint64_t rep_count_search(const FracIdeal& I, const RatFunc& c);
// Some x in I with N(x) = c, if any.
std::optional<QuadElem> find_norm_element(const FracIdeal& I, const RatFunc& c);

// Generator of I if principal.
std::optional<QuadElem> is_principal(const FracIdeal& I);
bool same_class(const FracIdeal& I, const FracIdeal& J);

struct ClassGroup {
  std::vector<FracIdeal> reps;  // primitive integral ideals of minimal norm degree first
  int bound = 0;                // norm-degree bound of the enumeration
  std::size_t h() const { return reps.size(); }
  // Index of the class of I.
  std::size_t class_of(const FracIdeal& I) const;
};

// Enumerates primitive integral ideals by norm degree and sorts them into
// classes; the count is certified against f_inf * L(0, chi_K).
ClassGroup class_group(const QuadExt& K, const LData& LD);

// Ideal attached to x and the conductor profile: the prime above each finite v
// raised to delta_v + ord_v(x) at ramified or split v, and P^{floor((delta_v + ord_v x)/2)}
// at inert v.
FracIdeal local_data_ideal(const QuadExt& K, const ConductorProfile& prof, const RatFunc& x);
// The ideal of the finite part of y.
FracIdeal idele_ideal(const QuadExt& K, const Idele& y);

}  // namespace ffe
