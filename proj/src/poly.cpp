#include "ffe/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace ffe {

Poly::Poly(const Fq* F, std::vector<Elem> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Fq* F, Elem c) { return Poly(F, {c}); }

Poly Poly::monomial(const Fq* F, Elem c, int n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = c;
  return Poly(F, std::move(v));
}

Poly Poly::from_index(const Fq* F, std::uint64_t index) {
  std::vector<Elem> v;
  while (index) {
    v.push_back(static_cast<Elem>(index % F->q()));
    index /= F->q();
  }
  return Poly(F, std::move(v));
}

Poly Poly::monic_from_index(const Fq* F, int d, std::uint64_t index) {
  std::vector<Elem> v(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    v[i] = static_cast<Elem>(index % F->q());
    index /= F->q();
  }
  v[d] = 1;
  return Poly(F, std::move(v));
}

std::uint64_t Poly::index() const {
  std::uint64_t x = 0;
  for (int i = deg(); i >= 0; --i) x = x * F_->q() + c_[i];
  return x;
}

Poly Poly::operator+(const Poly& o) const {
  const Fq* F = F_ ? F_ : o.F_;
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = F->add((*this)[i], o[i]);
  return Poly(F, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  const Fq* F = F_ ? F_ : o.F_;
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = F->sub((*this)[i], o[i]);
  return Poly(F, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_);
  for (auto& x : v) x = F_->neg(x);
  return Poly(F_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  const Fq* F = F_ ? F_ : o.F_;
  if (is_zero() || o.is_zero()) return Poly(F);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = F->add(v[i + j], F->mul(c_[i], o.c_[j]));
  }
  return Poly(F, std::move(v));
}

Poly Poly::scale(Elem s) const {
  std::vector<Elem> v(c_);
  for (auto& x : v) x = F_->mul(x, s);
  return Poly(F_, std::move(v));
}

Poly Poly::shift(int n) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(n, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(v));
}

void Poly::divmod(const Poly& d, Poly& quo, Poly& rem) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  const Fq* F = F_ ? F_ : d.F_;
  std::vector<Elem> r(c_);
  int dd = d.deg();
  if (deg() < dd) {
    quo = Poly(F);
    rem = *this;
    return;
  }
  std::vector<Elem> qv(deg() - dd + 1, 0);
  Elem li = F->inv(d.lc());
  for (int i = deg(); i >= dd; --i) {
    Elem f = F->mul(r[i], li);
    if (!f) continue;
    qv[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = F->sub(r[i - dd + j], F->mul(f, d.c_[j]));
  }
  quo = Poly(F, std::move(qv));
  rem = Poly(F, std::move(r));
}

Poly Poly::operator/(const Poly& d) const {
  Poly q, r;
  divmod(d, q, r);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

Poly Poly::operator%(const Poly& d) const {
  Poly q, r;
  divmod(d, q, r);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(F_->inv(lc()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<Elem> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
  return Poly(F_, std::move(v));
}

Poly::Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (int i = deg(); i >= 0; --i) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::reversed(int n) const {
  if (n < deg()) throw MathError("reversal length below degree");
  std::vector<Elem> v(n + 1, 0);
  for (int i = 0; i <= deg(); ++i) v[n - i] = c_[i];
  return Poly(F_, std::move(v));
}

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    Elem c = c_[i];
    if (!c) continue;
    if (!out.empty()) out += "+";
    std::string cs = F_->format(c);
    if (F_->needs_parens(c)) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const Fq* F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    Poly q, r;
    r0.divmod(r1, q, r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  Fq::Elem li = F->inv(r0.lc());
  s = s0.scale(li);
  t = t0.scale(li);
  return r0.scale(li);
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
  Poly s, t;
  Poly g = xgcd(a % m, m, s, t);
  if (!g.is_one()) return std::nullopt;
  return s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly a, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  a = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    e >>= 1;
    if (e) a = mulmod(a, a, m);
  }
  return r;
}

Poly frobenius_pow(const Poly& a, int k, const Poly& m) {
  Poly r = a % m;
  for (int i = 0; i < k; ++i) r = powmod(r, static_cast<std::uint64_t>(m.field()->q()), m);
  return r;
}

Poly pow(const Poly& a, int e) {
  if (e < 0) throw MathError("negative polynomial power");
  Poly r = Poly::constant(a.field(), 1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (b && r > UINT64_MAX / b) throw MathError("integer power overflow");
    r *= b;
  }
  return r;
}

namespace {

// Norm from F_q[t]/P down to F_q: a^(1 + q + ... + q^{d-1}) mod P.
Fq::Elem residue_norm(const Poly& a, const Poly& P) {
  Poly x = a % P, acc = Poly::constant(P.field(), 1);
  for (int i = 0; i < P.deg(); ++i) {
    acc = mulmod(acc, x, P);
    x = powmod(x, static_cast<std::uint64_t>(P.field()->q()), P);
  }
  if (acc.deg() > 0) throw ConsistencyError("residue norm not in F_q");
  return acc[0];
}

Poly pth_root(const Poly& f) {
  const Fq* F = f.field();
  int p = F->p();
  std::vector<Fq::Elem> v(f.deg() / p + 1, 0);
  std::uint64_t e = static_cast<std::uint64_t>(F->q() / p);
  for (int i = 0; i <= f.deg(); i += p) v[i / p] = F->pow(f[i], e);
  return Poly(F, std::move(v));
}

void squarefree_parts(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.deg() > 0) out.emplace_back(z, i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.deg() > 0) squarefree_parts(pth_root(c), mult * f.field()->p(), out);
}

std::mt19937_64& factor_rng() {
  thread_local std::mt19937_64 rng(0x5eed);
  return rng;
}

void equal_degree(const Poly& f, int d, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const Fq* F = f.field();
  auto& rng = factor_rng();
  while (true) {
    std::vector<Fq::Elem> v(f.deg());
    for (auto& x : v) x = static_cast<Fq::Elem>(rng() % F->q());
    Poly a(F, v);
    if (a.deg() < 1) continue;
    Poly x = a % f, acc = Poly::constant(F, 1);
    for (int i = 0; i < d; ++i) {
      acc = mulmod(acc, x, f);
      x = powmod(x, static_cast<std::uint64_t>(F->q()), f);
    }
    Poly b = powmod(acc, static_cast<std::uint64_t>((F->q() - 1) / 2), f);
    Poly g = gcd(b - Poly::constant(F, 1), f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, out);
      equal_degree(f / g, d, out);
      return;
    }
  }
}

void distinct_degree(Poly g, std::vector<Poly>& out) {
  const Fq* F = g.field();
  Poly tt = Poly::t(F);
  Poly h = tt % g;
  for (int d = 1; 2 * d <= g.deg(); ++d) {
    h = powmod(h, static_cast<std::uint64_t>(F->q()), g);
    Poly fac = gcd(g, h - tt);
    if (fac.deg() > 0) {
      equal_degree(fac, d, out);
      g = g / fac;
      h = h % g;
    }
  }
  if (g.deg() > 0) out.push_back(g);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f0) {
  if (f0.is_zero()) throw MathError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> sqf, out;
  Poly f = f0.monic();
  if (f.deg() == 0) return out;
  squarefree_parts(f, 1, sqf);
  std::map<Poly, int> acc;
  for (auto& [g, m] : sqf) {
    std::vector<Poly> irr;
    distinct_degree(g, irr);
    for (auto& P : irr) acc[P.monic()] += m;
  }
  for (auto& [P, m] : acc) out.emplace_back(P, m);
  return out;
}

bool is_irreducible(const Poly& P) {
  if (P.is_zero()) throw MathError("irreducibility of the zero polynomial");
  if (P.deg() < 1) return false;
  Poly f = P.monic();
  if (!gcd(f, f.derivative()).is_one()) return false;
  // Rabin: f | t^{q^n} - t and gcd(t^{q^{n/r}} - t, f) = 1 for primes r | n.
  int n = f.deg();
  Poly tt = Poly::t(f.field());
  if (frobenius_pow(tt, n, f) != tt % f) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    if (!gcd(f, frobenius_pow(tt, n / r, f) - tt).is_one()) return false;
  }
  return true;
}

const std::vector<Poly>& irreducibles_of_degree(const Fq* F, int d) {
  static std::mutex mu;
  static std::map<std::pair<const Fq*, int>, std::vector<Poly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({F, d});
    if (it != cache.end()) return it->second;
  }
  std::vector<Poly> out;
  std::uint64_t n = ipow(static_cast<std::uint64_t>(F->q()), d);
  for (std::uint64_t i = 0; i < n; ++i) {
    Poly P = Poly::monic_from_index(F, d, i);
    if (is_irreducible(P)) out.push_back(P);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(F, d), std::move(out)).first->second;
}

int legendre(const Poly& a, const Poly& P) {
  Poly x = a % P;
  if (x.is_zero()) return 0;
  return P.field()->legendre(residue_norm(x, P));
}

int jacobi(Poly a, Poly b) {
  const Fq* F = b.field();
  if (!b.is_monic()) throw MathError("jacobi symbol needs a monic modulus");
  bool odd_half = ((F->q() - 1) / 2) % 2 == 1;
  int res = 1;
  while (true) {
    if (b.deg() == 0) return res;
    a = a % b;
    if (a.is_zero()) return 0;
    if (F->legendre(a.lc()) < 0 && b.deg() % 2 == 1) res = -res;
    a = a.monic();
    if (a.deg() == 0) return res;
    if (odd_half && a.deg() % 2 == 1 && b.deg() % 2 == 1) res = -res;
    std::swap(a, b);
  }
}

std::optional<Poly> poly_sqrt(const Poly& a) {
  const Fq* F = a.field();
  if (a.is_zero()) return a;
  if (a.deg() % 2) return std::nullopt;
  Fq::Elem s = F->sqrt(a.lc());
  if (s < 0) return std::nullopt;
  int n = a.deg() / 2;
  std::vector<Fq::Elem> b(n + 1, 0);
  b[n] = s;
  Fq::Elem inv2s = F->inv(F->add(s, s));
  for (int k = n - 1; k >= 0; --k) {
    Fq::Elem acc = a[n + k];
    for (int i = k + 1; i <= n - 1; ++i) acc = F->sub(acc, F->mul(b[i], b[n + k - i]));
    b[k] = F->mul(acc, inv2s);
  }
  Poly r(F, b);
  if (r * r != a) return std::nullopt;
  return r;
}

std::optional<Poly> sqrt_mod(const Poly& a0, const Poly& P) {
  const Fq* F = P.field();
  Poly a = a0 % P;
  if (a.is_zero()) return a;
  if (legendre(a, P) < 0) return std::nullopt;
  std::uint64_t Q = ipow(static_cast<std::uint64_t>(F->q()), P.deg()) - 1;
  int S = 0;
  while (Q % 2 == 0) { Q /= 2; ++S; }
  Poly z;
  for (std::uint64_t i = 1;; ++i) {
    z = Poly::from_index(F, i) % P;
    if (!z.is_zero() && legendre(z, P) < 0) break;
  }
  Poly c = powmod(z, Q, P);
  Poly t = powmod(a, Q, P);
  Poly r = powmod(a, (Q + 1) / 2, P);
  int M = S;
  Poly one = Poly::constant(F, 1);
  while (t != one) {
    int i = 0;
    Poly tt = t;
    while (tt != one) {
      tt = mulmod(tt, tt, P);
      ++i;
    }
    Poly b = c;
    for (int j = 0; j < M - i - 1; ++j) b = mulmod(b, b, P);
    M = i;
    c = mulmod(b, b, P);
    t = mulmod(t, c, P);
    r = mulmod(r, b, P);
  }
  Poly other = (-r) % P;
  return other < r ? other : r;
}

}  // namespace ffe
