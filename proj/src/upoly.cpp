#include "ffe/upoly.hpp"

#include "ffe/fq.hpp"

namespace ffe {

UPoly::UPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const mpq_class& c, int n) {
  if (n < 0) throw MathError("negative exponent in UPoly::monomial");
  std::vector<mpq_class> v(n + 1, 0);
  v[n] = c;
  return UPoly(v);
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(r);
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(r);
}

UPoly UPoly::operator*(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return UPoly(r);
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw MathError("UPoly division by zero");
  std::vector<mpq_class> rem = c_;
  int dd = d.deg();
  std::vector<mpq_class> quo(std::max(0, deg() - dd + 1), 0);
  for (int i = deg(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    mpq_class f = rem[i] / d.lc();
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  q = UPoly(quo);
  r = UPoly(rem);
}

mpq_class UPoly::eval(const mpq_class& u) const {
  mpq_class r = 0;
  for (int i = deg(); i >= 0; --i) r = r * u + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(r);
}

UPoly UPoly::subst_pow(int k) const {
  if (k <= 0) throw MathError("subst_pow needs a positive exponent");
  if (is_zero()) return *this;
  std::vector<mpq_class> r(static_cast<size_t>(deg()) * k + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return UPoly(r);
}

UPoly UPoly::scale_var(const mpq_class& c) const {
  std::vector<mpq_class> r = c_;
  mpq_class p = 1;
  for (auto& x : r) {
    x *= p;
    p *= c;
  }
  return UPoly(r);
}

UPoly UPoly::taylor_shift_one() const {
  // Horner in the shifted variable.
  UPoly r;
  UPoly xp1({1, 1});
  for (int i = deg(); i >= 0; --i) r = r * xp1 + UPoly::constant(c_[i]);
  return r;
}

UPoly UPoly::pow(int e) const {
  if (e < 0) throw MathError("negative power of UPoly");
  UPoly r = UPoly::constant(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string rational_str(const mpq_class& x) { return x.get_str(); }

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= deg(); ++i) {
    if (c_[i] == 0) continue;
    std::string c = c_[i].get_str();
    if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
    if (c[0] == '-' && !out.empty()) c = c.substr(1);
    if (i == 0) out += c;
    else out += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + std::string("u") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    a.divmod(b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a * (mpq_class(1) / a.lc());
}

URat::URat(const UPoly& n) : num_(n), den_(UPoly::constant(1)) {}

URat::URat(const UPoly& n, const UPoly& d) {
  if (d.is_zero()) throw MathError("URat with zero denominator");
  if (n.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = gcd(n, d), q, r;
  n.divmod(g, num_, r);
  d.divmod(g, den_, r);
  mpq_class l = den_.lc();
  num_ = num_ * (mpq_class(1) / l);
  den_ = den_ * (mpq_class(1) / l);
}

URat URat::monomial(const mpq_class& c, int n) {
  if (n >= 0) return URat(UPoly::monomial(c, n));
  return URat(UPoly::constant(c), UPoly::monomial(1, -n));
}

URat URat::operator+(const URat& o) const {
  if (den_ == o.den_) return URat(num_ + o.num_, den_);
  return URat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

URat URat::operator-(const URat& o) const { return *this + (-o); }

URat URat::operator*(const URat& o) const { return URat(num_ * o.num_, den_ * o.den_); }

URat URat::operator/(const URat& o) const {
  if (o.is_zero()) throw MathError("URat division by zero");
  return URat(num_ * o.den_, den_ * o.num_);
}

mpq_class URat::eval(const mpq_class& u) const {
  mpq_class d = den_.eval(u);
  if (d == 0) throw MathError("URat evaluated at a pole");
  return num_.eval(u) / d;
}

URat URat::derivative() const {
  return URat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

URat URat::subst_pow(int k) const { return URat(num_.subst_pow(k), den_.subst_pow(k)); }

URat URat::invert_var() const {
  // n(1/u)/d(1/u) = u^{dd-dn} rev(n)/rev(d)
  auto rev = [](const UPoly& p) {
    std::vector<mpq_class> c = p.coeffs();
    std::reverse(c.begin(), c.end());
    return UPoly(c);
  };
  int shift = den_.deg() - num_.deg();
  if (num_.is_zero()) return *this;
  URat r(rev(num_), rev(den_));
  return r * URat::monomial(1, shift);
}

URat URat::scale_var(const mpq_class& c) const { return URat(num_.scale_var(c), den_.scale_var(c)); }

std::vector<mpq_class> URat::series_at_one(int order) const {
  UPoly n = num_.taylor_shift_one(), d = den_.taylor_shift_one();
  if (d[0] == 0) throw MathError("series at u = 1 of a function with a pole there");
  std::vector<mpq_class> out(order + 1, 0);
  for (int k = 0; k <= order; ++k) {
    mpq_class acc = n[k];
    for (int j = 1; j <= k; ++j) acc -= d[j] * out[k - j];
    out[k] = acc / d[0];
  }
  return out;
}

std::string URat::str() const {
  if (den_.deg() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LnQ s_derivative_at_zero(const URat& F) {
  // d/ds = -ln q * u d/du, at u = 1.
  return LnQ(-F.derivative().eval(1));
}

std::vector<mpq_class> series_in_s(const std::vector<mpq_class>& at_one) {
  int order = static_cast<int>(at_one.size()) - 1;
  // x = e^{-sigma} - 1
  std::vector<mpq_class> x(order + 1, 0);
  mpq_class fact = 1;
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    x[k] = mpq_class((k % 2) ? -1 : 1) / fact;
  }
  std::vector<mpq_class> out(order + 1, 0), xp(order + 1, 0);
  xp[0] = 1;
  for (int j = 0; j <= order; ++j) {
    for (int k = 0; k <= order; ++k) out[k] += at_one[j] * xp[k];
    std::vector<mpq_class> nx(order + 1, 0);
    for (int a = 0; a <= order; ++a)
      if (xp[a] != 0)
        for (int b = 1; a + b <= order; ++b) nx[a + b] += xp[a] * x[b];
    xp = nx;
  }
  return out;
}

}  // namespace ffe
