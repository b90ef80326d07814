#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ffe/field.hpp"

namespace ffe {

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

// K = k(sqrt D) with D squarefree of positive degree and infinity non-split.
class QuadExt {
 public:
  QuadExt() = default;
  explicit QuadExt(const Poly& D);

  const Fq* field() const { return D_.field(); }
  const Poly& D() const { return D_; }
  int genus() const { return genus_; }
  // Residue degree of infinity: 1 ramified, 2 inert.
  int f_inf() const { return f_inf_; }
  Splitting splitting(const Place& v) const;
  bool ramified(const Place& v) const { return splitting(v) == Splitting::Ramified; }
  // Finite ramified places and infinity when ramified.
  std::vector<Place> ramified_places() const;
  std::string str() const { return "k(sqrt(" + D_.str() + "))"; }

 private:
  Poly D_;
  int genus_ = 0, f_inf_ = 1;
  std::vector<Place> ram_finite_;
};

// Quadratic Hilbert symbol (a, b)_v by the tame formula.
int hilbert_symbol(const RatFunc& a, const RatFunc& b, const Place& v);
// Solvability of a x^2 + b y^2 = z^2 decided by primitive solutions mod pi^3.
// Refuses when q_v > 9.
int hilbert_symbol_search(const RatFunc& a, const RatFunc& b, const Place& v);

// chi_{K,v}(a) = (a, D)_v.
int chi_v(const QuadExt& K, const Place& v, const RatFunc& a);
int chi_global(const QuadExt& K, const Idele& y);
// Product of pairwise Hilbert symbols of a diagonal form.
int hasse_invariant(const std::vector<RatFunc>& coeffs, const Place& v);

// The incoherent collection C^{(alpha)}: alpha * eps_v * N_{K_v/k_v} on K_v, with
// eps_v = 1 at finite v and (eps_inf, D)_inf = -1.
class IncoherentSpace {
 public:
  IncoherentSpace() = default;
  IncoherentSpace(const QuadExt& K, const Poly& alpha, std::optional<RatFunc> eps_inf = std::nullopt);

  const QuadExt& K() const { return K_; }
  const Poly& alpha() const { return alpha_; }
  const RatFunc& eps_inf() const { return eps_inf_; }
  RatFunc eps(const Place& v) const;
  // alpha * eps_v
  RatFunc scale(const Place& v) const;
  int hasse(const Place& v) const;
  // Places where some local invariant can be nontrivial.
  std::set<Place> relevant_places() const;

 private:
  QuadExt K_;
  Poly alpha_;
  RatFunc eps_inf_;
};

std::set<Place> diff_set(const IncoherentSpace& C, const RatFunc& beta);

}  // namespace ffe
