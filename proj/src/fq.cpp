#include "ffe/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ffe {

void prime_power(int q, int& p, int& r) {
  if (q < 3) throw MathError("q must be an odd prime power, got " + std::to_string(q));
  if (q % 2 == 0) throw MathError("q must be odd, got " + std::to_string(q));
  if (q > 255) throw MathError("q too large for table arithmetic: " + std::to_string(q));
  p = 0;
  for (int d = 3; d <= q; d += 2)
    if (q % d == 0) { p = d; break; }
  r = 0;
  int n = q;
  while (n % p == 0) { n /= p; ++r; }
  if (n != 1) throw MathError(std::to_string(q) + " is not a prime power");
}

namespace {

// Dense polynomials over F_p, low degree first, used only to build tables.
using Vec = std::vector<int>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec polmod(Vec a, const Vec& m, int p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  int lead_inv = 1;
  while (lead_inv * m.back() % p != 1) ++lead_inv;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int s = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[s + i] = ((a[s + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool irreducible_over_fp(const Vec& m, int p) {
  int r = static_cast<int>(m.size()) - 1;
  if (r == 1) return true;
  // Trial division by every monic polynomial of degree 1..r/2.
  for (int d = 1; d <= r / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Vec f(d + 1);
      int c = code;
      for (int i = 0; i < d; ++i) { f[i] = c % p; c /= p; }
      f[d] = 1;
      if (polmod(m, f, p).empty()) return false;
    }
  }
  return true;
}

Vec default_modulus(int p, int r) {
  if (r == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Vec m(r + 1);
    int c = code;
    for (int i = 0; i < r; ++i) { m[i] = c % p; c /= p; }
    m[r] = 1;
    if (irreducible_over_fp(m, p)) return m;
  }
  throw MathError("no irreducible modulus found");
}

}  // namespace

const Fq* Fq::get(int q, const std::vector<int>& modulus) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Fq>> cache;
  int p, r;
  prime_power(q, p, r);
  std::vector<int> m = modulus;
  if (m.empty()) {
    m = default_modulus(p, r);
  } else {
    for (int& c : m) c = ((c % p) + p) % p;
    trim(m);
    if (static_cast<int>(m.size()) != r + 1 || m.back() != 1)
      throw MathError("modulus must be monic of degree " + std::to_string(r));
    if (!irreducible_over_fp(m, p)) throw MathError("modulus is reducible over F_p");
  }
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.get();
  std::unique_ptr<Fq> f(new Fq(p, r, m));
  const Fq* out = f.get();
  cache.emplace(key, std::move(f));
  return out;
}

Fq::Fq(int p, int r, std::vector<int> modulus) : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < r; ++i) q_ *= p;
  auto digits = [&](int x) {
    Vec v(r);
    for (int i = 0; i < r; ++i) { v[i] = x % p; x /= p; }
    return v;
  };
  auto encode = [&](const Vec& v) {
    int x = 0;
    for (int i = r - 1; i >= 0; --i) x = x * p + (i < static_cast<int>(v.size()) ? v[i] : 0);
    return x;
  };
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  for (int x = 0; x < q_; ++x) {
    Vec dx = digits(x);
    Vec nx(r);
    for (int i = 0; i < r; ++i) nx[i] = (p - dx[i]) % p;
    neg_[x] = encode(nx);
    for (int y = 0; y < q_; ++y) {
      Vec dy = digits(y);
      Vec s(r);
      for (int i = 0; i < r; ++i) s[i] = (dx[i] + dy[i]) % p;
      add_[x * q_ + y] = encode(s);
      Vec prod(2 * r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
      mul_[x * q_ + y] = encode(polmod(prod, modulus_, p));
    }
  }
  inv_.assign(q_, 0);
  for (int x = 1; x < q_; ++x)
    for (int y = 1; y < q_; ++y)
      if (mul(x, y) == 1) { inv_[x] = y; break; }
  sqrt_.assign(q_, -1);
  for (int y = q_ - 1; y >= 0; --y) sqrt_[mul(y, y)] = y;
  chi_.assign(q_, 0);
  for (int x = 1; x < q_; ++x) chi_[x] = sqrt_[x] >= 0 ? 1 : -1;
  for (int x = 1; x < q_; ++x)
    if (chi_[x] < 0) { nonsquare_ = x; break; }
  trace_.assign(q_, 0);
  for (int x = 0; x < q_; ++x) {
    // Tr(x) = x + x^p + ... + x^{p^{r-1}}, which lands in the prime field.
    int acc = 0, y = x;
    for (int i = 0; i < r; ++i) {
      acc = add(acc, y);
      y = pow(y, p);
    }
    trace_[x] = digits(acc)[0];
  }
}

Fq::Elem Fq::inv(Elem x) const {
  if (x == 0) throw MathError("division by zero in F_q");
  return inv_[x];
}

Fq::Elem Fq::pow(Elem x, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fq::Elem Fq::from_int(long long n) const {
  long long m = ((n % p_) + p_) % p_;
  return static_cast<Elem>(m);
}

bool Fq::needs_parens(Elem x) const {
  if (r_ == 1) return false;
  int terms = 0;
  for (int i = 0, y = x; i < r_; ++i, y /= p_)
    if (y % p_) ++terms;
  return terms > 1;
}

std::string Fq::format(Elem x) const {
  if (r_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  std::string out;
  std::vector<int> d(r_);
  for (int i = 0, y = x; i < r_; ++i, y /= p_) d[i] = y % p_;
  for (int i = r_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ffe
