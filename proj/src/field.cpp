#include "ffe/field.hpp"

#include <cctype>

namespace ffe {

RatFunc::RatFunc(const Poly& n) : num_(n), den_(Poly::constant(n.field(), 1)) {}

RatFunc::RatFunc(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw MathError("zero denominator");
  const Fq* F = d.field();
  if (n.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::constant(F, 1);
    return;
  }
  Poly g = gcd(n, d);
  Poly nn = n / g, dd = d / g;
  Fq::Elem l = F->inv(dd.lc());
  num_ = nn.scale(l);
  den_ = dd.scale(l);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw MathError("inverse of zero in k");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(ffe::pow(num_, e), ffe::pow(den_, e));
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.deg() > 0 && (num_.coeffs().size() > 1 && n.find('+') != std::string::npos)) n = "(" + n + ")";
  if (den_.deg() > 0 && d.find_first_of("+*") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

Place Place::infinity(const Fq* F) {
  Place v;
  v.F_ = F;
  v.inf_ = true;
  return v;
}

Place Place::finite(const Poly& P) {
  if (!P.is_monic()) throw MathError("finite place needs a monic polynomial: " + P.str());
  if (!is_irreducible(P)) throw MathError("finite place needs an irreducible polynomial: " + P.str());
  Place v;
  v.F_ = P.field();
  v.P_ = P;
  return v;
}

int ord_at(const Place& v, const Poly& f) {
  if (f.is_zero()) throw MathError("valuation of zero");
  if (v.is_inf()) return -f.deg();
  int n = 0;
  Poly g = f, q, r;
  while (true) {
    g.divmod(v.poly(), q, r);
    if (!r.is_zero()) return n;
    g = q;
    ++n;
  }
}

int ord_at(const Place& v, const RatFunc& f) {
  if (f.is_zero()) throw MathError("valuation of zero");
  return ord_at(v, f.num()) - ord_at(v, f.den());
}

std::set<Place> finite_support(const Poly& f) {
  std::set<Place> out;
  if (f.is_zero()) throw MathError("support of zero");
  for (auto& [P, m] : factor(f)) {
    Place v;
    v = Place::finite(P);
    out.insert(v);
  }
  return out;
}

std::set<Place> support(const RatFunc& f) {
  std::set<Place> out = finite_support(f.num());
  for (auto& v : finite_support(f.den())) out.insert(v);
  if (f.degree() != 0) out.insert(Place::infinity(f.field()));
  return out;
}

RatFunc uniformizer(const Place& v) {
  if (v.is_inf()) return RatFunc(Poly::constant(v.field(), 1), Poly::t(v.field()));
  return RatFunc(v.poly());
}

Poly unit_residue(const Place& v, const RatFunc& f) {
  if (f.is_zero()) throw MathError("residue of zero");
  const Fq* F = f.field();
  if (v.is_inf()) return Poly::constant(F, F->div(f.num().lc(), f.den().lc()));
  Poly n = f.num(), d = f.den();
  while (n.divisible_by(v.poly())) n = n / v.poly();
  while (d.divisible_by(v.poly())) d = d / v.poly();
  auto di = inverse_mod(d, v.poly());
  return mulmod(n, *di, v.poly());
}

int residue_legendre(const Place& v, const Poly& r) {
  if (v.is_inf()) return r.field()->legendre(r[0]);
  return legendre(r, v.poly());
}

Fq::Elem residue(const Place& v, const RatFunc& f) {
  const Fq* F = f.field();
  if (f.is_zero()) return 0;
  if (v.is_inf()) {
    Poly q, r;
    f.num().divmod(f.den(), q, r);
    if (r.is_zero() || r.deg() != f.den().deg() - 1) return 0;
    return F->neg(F->div(r.lc(), f.den().lc()));
  }
  const Poly& P = v.poly();
  int r = 0;
  Poly h = f.den();
  while (h.divisible_by(P)) {
    h = h / P;
    ++r;
  }
  if (r == 0) return 0;
  Poly Pr = pow(P, r);
  auto hi = inverse_mod(h, Pr);
  Poly g = mulmod(f.num(), *hi, Pr);
  return g[r * P.deg() - 1];
}

ConductorProfile::ConductorProfile(const RatFunc& c) : c_(c) {
  if (c.is_zero()) throw MathError("conductor twist must be nonzero");
  const Fq* F = c.field();
  Place inf = Place::infinity(F);
  long total = 0;
  for (auto& v : support(c)) {
    int d = ord_at(v, c) + (v.is_inf() ? -2 : 0);
    if (d) nz_[v] = d;
  }
  if (!nz_.count(inf) && ord_at(inf, c) - 2 != 0) nz_[inf] = ord_at(inf, c) - 2;
  for (auto& [v, d] : nz_) total += static_cast<long>(d) * v.deg();
  FFE_CHECK(total == -2, "conductor degrees must sum to -2");
}

int ConductorProfile::delta(const Place& v) const {
  auto it = nz_.find(v);
  return it == nz_.end() ? 0 : it->second;
}

int psi_exponent(const ConductorProfile& prof, const Place& v, const RatFunc& x) {
  Fq::Elem r = residue(v, prof.twist() * x);
  return x.field()->trace(r);
}

Idele::Idele(const RatFunc& g, std::map<Place, RatFunc> local) : g_(g), local_(std::move(local)) {
  if (g_.is_zero()) throw MathError("idele component must be nonzero");
  for (auto& [v, f] : local_)
    if (f.is_zero()) throw MathError("idele component at " + v.str() + " is zero");
}

RatFunc Idele::component(const Place& v) const {
  auto it = local_.find(v);
  return it == local_.end() ? g_ : g_ * it->second;
}

std::set<Place> Idele::places() const {
  std::set<Place> out = support(g_);
  for (auto& [v, f] : local_) out.insert(v);
  return out;
}

int Idele::norm_exponent() const {
  int d = 0;
  for (auto& v : places()) d += v.deg() * ord_at(v, component(v));
  return d;
}

Idele Idele::scaled(const RatFunc& c) const { return Idele(g_ * c, local_); }

std::string Idele::str() const {
  std::string out;
  for (auto& v : places()) {
    RatFunc c = component(v);
    if (c.is_one()) continue;
    if (!out.empty()) out += ",";
    out += v.str() + "=" + c.str();
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const Fq* F, const std::string& s) : F_(F), s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw MathError("cannot parse \"" + s_ + "\": " + m);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'a' || c == '('; }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      char c = peek();
      if (c == '+') { ++i_; r = r + term(); }
      else if (c == '-') { ++i_; r = r - term(); }
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      char c = peek();
      if (c == '*') { ++i_; r = r * unary(); }
      else if (c == '/') { ++i_; RatFunc d = unary(); if (d.is_zero()) fail("division by zero"); r = r / d; }
      else if (starts_factor(c)) r = r * power();
      else return r;
    }
  }
  RatFunc unary() {
    if (peek() == '-') { ++i_; return -unary(); }
    if (peek() == '+') { ++i_; return unary(); }
    return power();
  }
  RatFunc power() {
    RatFunc b = atom();
    if (peek() == '^') {
      ++i_;
      bool neg = false;
      if (peek() == '-') { neg = true; ++i_; }
      long long e = integer();
      b = b.pow(static_cast<int>(neg ? -e : e));
    }
    return b;
  }
  long long integer() {
    skip();
    size_t j = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (j == i_) fail("expected an integer");
    return std::stoll(s_.substr(j, i_ - j));
  }
  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (peek() != ')') fail("missing ')'");
      ++i_;
      return r;
    }
    if (c == 't') { ++i_; return RatFunc(Poly::t(F_)); }
    if (c == 'a') {
      if (F_->r() == 1) fail("'a' only names the generator of a non-prime field");
      ++i_;
      return RatFunc::constant(F_, F_->gen());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::constant(F_, F_->from_int(integer()));
    fail("unexpected end of input");
  }

  const Fq* F_;
  std::string s_;
  size_t i_ = 0;
};

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

RatFunc parse_ratfunc(const Fq* F, const std::string& s) { return Parser(F, s).parse(); }

Poly parse_poly(const Fq* F, const std::string& s) {
  RatFunc r = parse_ratfunc(F, s);
  if (!r.is_poly()) throw MathError("expected a polynomial, got \"" + s + "\"");
  return r.num();
}

Place parse_place(const Fq* F, const std::string& s0) {
  std::string s = trimmed(s0);
  if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity(F);
  return Place::finite(parse_poly(F, s));
}

Idele parse_idele(const Fq* F, const std::string& s) {
  std::map<Place, RatFunc> local;
  size_t start = 0;
  std::string body = trimmed(s);
  if (body.empty()) return Idele(F);
  // Split on commas outside parentheses.
  int depth = 0;
  std::vector<std::string> parts;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
    }
  }
  for (auto& part : parts) {
    size_t eq = part.find('=');
    if (eq == std::string::npos) throw MathError("idele entry needs place=value: " + part);
    Place v = parse_place(F, part.substr(0, eq));
    RatFunc f = parse_ratfunc(F, part.substr(eq + 1));
    if (local.count(v)) throw MathError("duplicate idele place " + v.str());
    local.emplace(v, f);
  }
  return Idele(RatFunc::one(F), std::move(local));
}

}  // namespace ffe
