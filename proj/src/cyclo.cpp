#include "ffe/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ffe/fq.hpp"

namespace ffe {

namespace {

using IPoly = std::vector<long long>;

IPoly ipoly_div(IPoly a, const IPoly& b) {
  // b monic
  int db = static_cast<int>(b.size()) - 1;
  IPoly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    long long f = a[i];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (a[i]) throw ConsistencyError("cyclotomic division not exact");
  return q;
}

IPoly cyclotomic(int n) {
  IPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = ipoly_div(f, cyclotomic(d));
  return f;
}

struct Ctx {
  int p, N, phi;
  // powers[k] = zeta_N^k reduced, for 0 <= k < 2N.
  std::vector<std::vector<long long>> powers;
};

const Ctx& ctx(int p) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Ctx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return *it->second;
  auto c = std::make_unique<Ctx>();
  c->p = p;
  c->N = 4 * p;
  IPoly phi = cyclotomic(c->N);
  c->phi = static_cast<int>(phi.size()) - 1;
  std::vector<long long> cur(c->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < 2 * c->N; ++k) {
    c->powers.push_back(cur);
    // multiply by zeta
    std::vector<long long> nxt(c->phi, 0);
    long long top = cur[c->phi - 1];
    for (int i = c->phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    for (int i = 0; i < c->phi; ++i) nxt[i] -= top * phi[i];
    cur = nxt;
  }
  const Ctx& ref = *c;
  cache.emplace(p, std::move(c));
  return ref;
}

}  // namespace

Cyclo Cyclo::rational(int p, const mpq_class& x) {
  Cyclo r;
  r.p_ = p;
  r.c_.assign(ctx(p).phi, 0);
  r.c_[0] = x;
  return r;
}

Cyclo Cyclo::zeta(int p, long k) {
  const Ctx& C = ctx(p);
  long m = ((k % C.N) + C.N) % C.N;
  Cyclo r;
  r.p_ = p;
  r.c_.resize(C.phi);
  for (int i = 0; i < C.phi; ++i) r.c_[i] = static_cast<long>(C.powers[m][i]);
  return r;
}

Cyclo Cyclo::sqrt_p(int p) {
  // Quadratic Gauss sum g: g = sqrt(p) if p = 1 mod 4, g = i sqrt(p) otherwise.
  Cyclo g = rational(p, 0);
  for (int x = 1; x < p; ++x) {
    int leg = 1;
    long long y = 1;
    for (int e = 0; e < (p - 1) / 2; ++e) y = y * x % p;
    leg = (y == 1) ? 1 : -1;
    g += zeta_p(p, x) * mpq_class(leg);
  }
  if (p % 4 == 1) return g;
  return -(zeta(p, p) * g);
}

Cyclo Cyclo::p_half_power(int p, long e) {
  mpq_class base = 1;
  long whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
  mpz_class pp = p;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(whole >= 0 ? whole : -whole));
  base = whole >= 0 ? mpq_class(pw) : mpq_class(1) / mpq_class(pw);
  Cyclo r = rational(p, base);
  if (e - 2 * whole == 1) r = r * sqrt_p(p);
  return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  Cyclo r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (c_.empty() || o.c_.empty()) throw MathError("uninitialised cyclotomic element");
  const Ctx& C = ctx(p_);
  std::vector<mpq_class> prod(2 * C.phi - 1, 0);
  for (int i = 0; i < C.phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < C.phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  Cyclo r = rational(p_, 0);
  for (int k = 0; k < 2 * C.phi - 1; ++k) {
    if (prod[k] == 0) continue;
    if (k < C.phi) {
      r.c_[k] += prod[k];
    } else {
      for (int i = 0; i < C.phi; ++i)
        if (C.powers[k][i]) r.c_[i] += prod[k] * static_cast<long>(C.powers[k][i]);
    }
  }
  return r;
}

Cyclo Cyclo::operator*(const mpq_class& s) const {
  Cyclo r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

bool Cyclo::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclo::to_rational() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic value is not rational: " + str());
  return c_.empty() ? mpq_class(0) : c_[0];
}

std::optional<long> Cyclo::root_index() const {
  const Ctx& C = ctx(p_);
  for (long k = 0; k < C.N; ++k)
    if (*this == zeta(p_, k)) return k;
  return std::nullopt;
}

std::string Cyclo::str() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].get_str() + ")";
    if (i) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ffe
