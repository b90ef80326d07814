#include "ffe/ideal.hpp"

#include <algorithm>

namespace ffe {

QuadElem mul(const Poly& D, const QuadElem& x, const QuadElem& y) {
  RatFunc d(D);
  return {x.u * y.u + x.v * y.v * d, x.u * y.v + x.v * y.u};
}

namespace {

int floor_div2(int e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

struct Hnf {
  Poly a, b, c;  // lattice A(a, 0) + A(b, c)
};

Hnf hnf(const Fq* F, const std::vector<std::pair<Poly, Poly>>& vecs) {
  Poly pa(F), pb(F), pc(F);
  for (auto [x, y] : vecs) {
    if (y.is_zero()) {
      pa = gcd(pa, x);
      continue;
    }
    if (pc.is_zero()) {
      pb = x;
      pc = y;
      continue;
    }
    Poly s, t;
    Poly g = xgcd(pc, y, s, t);
    Poly zx = (y / g) * pb - (pc / g) * x;
    pa = gcd(pa, zx);
    pb = s * pb + t * x;
    pc = g;
  }
  if (pa.is_zero() || pc.is_zero()) throw MathError("elements do not span a lattice of full rank");
  Fq::Elem l = F->inv(pc.lc());
  pb = pb.scale(l);
  pc = pc.scale(l);
  pb = pb % pa;
  return {pa, pb, pc};
}

Poly lcm(const Poly& a, const Poly& b) { return (a / gcd(a, b)) * b; }

// All b with deg b < deg a and b^2 = D mod a, for monic a.
std::vector<Poly> sqrt_roots(const Poly& D, const Poly& a) {
  const Fq* F = a.field();
  std::vector<Poly> roots = {Poly(F)}, next;
  Poly mod = Poly::constant(F, 1);
  for (auto& [P, e] : factor(a)) {
    Poly Pe = pow(P, e);
    std::vector<Poly> local;
    if (D.divisible_by(P)) {
      if (e == 1) local.push_back(Poly(F));
    } else if (auto r = sqrt_mod(D, P)) {
      for (Poly x : {*r, (-*r) % P}) {
        Poly Pk = P;
        for (int k = 1; k < e; ++k) {
          Pk = Pk * P;
          Poly fx = (x * x - D) % Pk;
          auto inv = inverse_mod(x + x, Pk);
          x = (x - mulmod(fx, *inv, Pk)) % Pk;
        }
        local.push_back(x);
      }
    }
    next.clear();
    Poly m1inv = *inverse_mod(mod, Pe);
    for (auto& r1 : roots)
      for (auto& r2 : local) next.push_back((r1 + mod * mulmod(r2 - r1, m1inv, Pe)) % (mod * Pe));
    roots = next;
    mod = mod * Pe;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

FracIdeal FracIdeal::unit(const QuadExt& K) { return unit_of(K.D()); }

FracIdeal FracIdeal::unit_of(const Poly& D) {
  FracIdeal I;
  I.D_ = D;
  const Fq* F = D.field();
  I.content_ = RatFunc::one(F);
  I.a_ = Poly::constant(F, 1);
  I.b_ = Poly(F);
  return I;
}

FracIdeal FracIdeal::generated(const QuadExt& K, const std::vector<QuadElem>& gens) {
  return from_gens(K.D(), gens);
}

FracIdeal FracIdeal::from_gens(const Poly& D, const std::vector<QuadElem>& gens) {
  const Fq* F = D.field();
  Poly d = Poly::constant(F, 1);
  for (auto& g : gens) d = lcm(lcm(d, g.u.den()), g.v.den());
  std::vector<std::pair<Poly, Poly>> vecs;
  for (auto& g : gens) {
    RatFunc u = g.u * RatFunc(d), v = g.v * RatFunc(d);
    vecs.emplace_back(u.num(), v.num());
  }
  Hnf h = hnf(F, vecs);
  if (!h.a.divisible_by(h.c) || !h.b.divisible_by(h.c))
    throw ConsistencyError("lattice is not an O_K-module");
  FracIdeal I;
  I.D_ = D;
  I.a_ = h.a / h.c;
  I.b_ = (h.b / h.c) % I.a_;
  if (!(I.b_ * I.b_ - D).divisible_by(I.a_)) throw ConsistencyError("lattice is not an O_K-module");
  I.content_ = RatFunc(h.c, d);
  return I;
}

FracIdeal FracIdeal::principal(const QuadExt& K, const QuadElem& x) {
  if (x.u.is_zero() && x.v.is_zero()) throw MathError("principal ideal of zero");
  QuadElem w{RatFunc(Poly(K.field())), RatFunc::one(K.field())};
  return generated(K, {x, mul(K.D(), x, w)});
}

FracIdeal FracIdeal::scalar(const QuadExt& K, const RatFunc& c) {
  if (c.is_zero()) throw MathError("zero ideal");
  FracIdeal I = unit(K);
  return I.scaled(c);
}

FracIdeal FracIdeal::prime_above(const QuadExt& K, const Place& v) {
  if (v.is_inf()) throw MathError("prime_above needs a finite place");
  const Poly& P = v.poly();
  const Fq* F = K.field();
  switch (K.splitting(v)) {
    case Splitting::Inert:
      return scalar(K, RatFunc(P));
    case Splitting::Ramified: {
      FracIdeal I = unit(K);
      I.a_ = P;
      I.b_ = Poly(F);
      return I;
    }
    case Splitting::Split: {
      auto r = sqrt_mod(K.D(), P);
      FFE_CHECK(r.has_value(), "split place without a square root of D");
      FracIdeal I = unit(K);
      I.a_ = P;
      I.b_ = *r % P;
      return I;
    }
  }
  throw MathError("unreachable");
}

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
  const Fq* F = D_.field();
  RatFunc zero{F};
  QuadElem x1{RatFunc(a_), zero}, y1{RatFunc(b_), RatFunc::one(F)};
  QuadElem x2{RatFunc(o.a_), zero}, y2{RatFunc(o.b_), RatFunc::one(F)};
  FracIdeal r = from_gens(D_, {mul(D_, x1, x2), mul(D_, x1, y2), mul(D_, y1, x2), mul(D_, y1, y2)});
  return r.scaled(content_ * o.content_);
}

FracIdeal FracIdeal::conj() const {
  FracIdeal r = *this;
  r.b_ = (-b_) % a_;
  return r;
}

FracIdeal FracIdeal::scaled(const RatFunc& c) const {
  if (c.is_zero()) throw MathError("zero ideal");
  FracIdeal r = *this;
  RatFunc x = content_ * c;
  r.content_ = RatFunc(x.num().monic(), x.den());
  return r;
}

RatFunc FracIdeal::norm() const { return content_ * content_ * RatFunc(a_); }

FracIdeal FracIdeal::inverse() const { return conj().scaled(norm().inv()); }

FracIdeal FracIdeal::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FracIdeal r = unit_of(D_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool FracIdeal::contains(const QuadElem& x) const {
  RatFunc u = x.u / content_, v = x.v / content_;
  if (!u.is_poly() || !v.is_poly()) return false;
  return (u.num() - v.num() * b_).divisible_by(a_);
}

bool FracIdeal::operator<(const FracIdeal& o) const {
  int d1 = norm().degree(), d2 = o.norm().degree();
  if (d1 != d2) return d1 < d2;
  if (a_ != o.a_) return a_ < o.a_;
  if (b_ != o.b_) return b_ < o.b_;
  return content_ < o.content_;
}

FracIdeal::Basis FracIdeal::basis() const {
  const Poly& n = content_.num();
  return {content_.den(), n * a_, n * b_, n};
}

std::string FracIdeal::str() const {
  Basis B = basis();
  std::string s = "[" + B.a.str() + ", " + B.b.str() + " + (" + B.c.str() + ")*sqrt(D)]";
  if (!B.den.is_one()) s += "/(" + B.den.str() + ")";
  return s;
}

namespace {

// Visits solutions (X, k) of X^2 - D k^2 = T with X = k b mod a; stops when f returns true.
// The lattice {(X, k)} carries the form a x^2 + 2b xy + ((b^2 - D)/a) y^2; after Gauss
// reduction its degree is max(deg A + 2 deg x, deg C + 2 deg y), so y ranges over a small box.
template <class Fn>
void norm_solutions(const FracIdeal& I, const RatFunc& c, Fn f) {
  if (c.is_zero()) throw MathError("norm target must be nonzero");
  RatFunc Tr = c / (I.content() * I.content());
  if (!Tr.is_poly()) return;
  const Poly& T = Tr.num();
  const Poly& D = I.D();
  const Fq* F = D.field();
  Poly quo, rem;
  T.divmod(I.a(), quo, rem);
  if (!rem.is_zero()) return;
  const Poly Tp = quo;
  const Fq::Elem two = F->from_int(2), four = F->from_int(4);

  Poly A = I.a(), B = I.b().scale(two), C = (I.b() * I.b() - D) / I.a();
  // basis vectors in (X, k) coordinates
  Poly X1 = I.a(), k1 = Poly::constant(F, 0), X2 = I.b(), k2 = Poly::constant(F, 1);
  while (true) {
    if (C.deg() < A.deg()) {
      std::swap(A, C);
      B = -B;
      Poly nX = -X1, nk = -k1;
      X1 = X2;
      k1 = k2;
      X2 = nX;
      k2 = nk;
      continue;
    }
    if (B.deg() < A.deg()) break;
    Poly sq, sr;
    B.divmod(A.scale(two), sq, sr);
    C = C - sq * B + sq * sq * A;
    B = B - (sq * A).scale(two);
    X2 = X2 - sq * X1;
    k2 = k2 - sq * k1;
  }

  int bound = Tp.deg() >= C.deg() ? (Tp.deg() - C.deg()) / 2 : -1;
  std::uint64_t n = bound < 0 ? 1 : ipow(static_cast<std::uint64_t>(F->q()), bound + 1);
  Poly twoA = A.scale(two);
  for (std::uint64_t i = 0; i < n; ++i) {
    Poly y = Poly::from_index(F, i);
    // A x^2 + B y x + (C y^2 - T') = 0
    Poly disc = (D * y * y + A * Tp).scale(four);
    std::vector<Poly> roots;
    if (disc.is_zero()) {
      roots.push_back(disc);
    } else if (auto r = poly_sqrt(disc)) {
      roots.push_back(*r);
      roots.push_back(-*r);
    }
    for (auto& r : roots) {
      Poly num = r - B * y;
      Poly xq, xr;
      num.divmod(twoA, xq, xr);
      if (!xr.is_zero()) continue;
      if (f(xq * X1 + y * X2, xq * k1 + y * k2)) return;
    }
  }
}

}  // namespace

std::uint64_t rep_count(const FracIdeal& I, const RatFunc& c) {
  std::uint64_t n = 0;
  norm_solutions(I, c, [&](const Poly&, const Poly&) {
    ++n;
    return false;
  });
  return n;
}

std::optional<QuadElem> find_norm_element(const FracIdeal& I, const RatFunc& c) {
  std::optional<QuadElem> out;
  norm_solutions(I, c, [&](const Poly& X, const Poly& k) {
    out = QuadElem{I.content() * RatFunc(X), I.content() * RatFunc(k)};
    return true;
  });
  return out;
}

std::uint64_t rep_count_search(const FracIdeal& I, const RatFunc& c) {
  if (c.is_zero()) throw MathError("norm target must be nonzero");
  RatFunc Tr = c / (I.content() * I.content());
  if (!Tr.is_poly()) return 0;
  const Poly& T = Tr.num();
  const Poly& D = I.D();
  const Fq* F = D.field();
  int kb = T.deg() >= D.deg() ? (T.deg() - D.deg()) / 2 : -1;
  std::uint64_t nk = kb < 0 ? 1 : ipow(static_cast<std::uint64_t>(F->q()), kb + 1);
  std::uint64_t nx = ipow(static_cast<std::uint64_t>(F->q()), T.deg() / 2 + 1);
  if (nk * nx > 20000000ULL) throw MathError("direct norm search too large");
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < nk; ++j) {
    Poly k = Poly::from_index(F, j), Dk2 = D * k * k;
    for (std::uint64_t i = 0; i < nx; ++i) {
      Poly X = Poly::from_index(F, i);
      if (X * X - Dk2 == T && (X - k * I.b()).divisible_by(I.a())) ++count;
    }
  }
  return count;
}

std::optional<QuadElem> is_principal(const FracIdeal& I) {
  const Fq* F = I.D().field();
  RatFunc N = I.norm();
  for (Fq::Elem lam : {Fq::Elem(1), F->nonsquare()})
    if (auto x = find_norm_element(I, N * RatFunc::constant(F, lam))) return x;
  return std::nullopt;
}

bool same_class(const FracIdeal& I, const FracIdeal& J) { return is_principal(I * J.conj()).has_value(); }

std::size_t ClassGroup::class_of(const FracIdeal& I) const {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (same_class(I, reps[i])) return i;
  throw ConsistencyError("ideal " + I.str() + " lies in no enumerated class");
}

ClassGroup class_group(const QuadExt& K, const LData& LD) {
  mpq_class target = LD.value0() * K.f_inf();
  FFE_CHECK(target.get_den() == 1, "f_inf * L(0) must be an integer");
  const Fq* F = K.field();
  ClassGroup G;
  std::vector<FracIdeal> ideals;
  int done = -1;
  for (int B = K.genus(); B <= K.genus() + 2; ++B) {
    for (int d = done + 1; d <= B; ++d) {
      std::uint64_t n = ipow(static_cast<std::uint64_t>(F->q()), d);
      for (std::uint64_t i = 0; i < n; ++i) {
        Poly a = Poly::monic_from_index(F, d, i);
        for (auto& b : sqrt_roots(K.D(), a)) {
          QuadElem ga{RatFunc(a), RatFunc(Poly(F))}, gb{RatFunc(b), RatFunc::one(F)};
          FracIdeal I = FracIdeal::generated(K, {ga, gb});
          bool fresh = true;
          for (auto& r : G.reps)
            if (same_class(I, r)) {
              fresh = false;
              break;
            }
          if (fresh) G.reps.push_back(I);
        }
      }
    }
    done = B;
    G.bound = B;
    if (mpq_class(static_cast<long>(G.reps.size())) == target) return G;
  }
  throw ConsistencyError("class enumeration found " + std::to_string(G.reps.size()) +
                         " classes up to norm degree " + std::to_string(G.bound) + ", expected " +
                         target.get_str());
}

FracIdeal local_data_ideal(const QuadExt& K, const ConductorProfile& prof, const RatFunc& x) {
  if (x.is_zero()) throw MathError("local data ideal of zero");
  std::set<Place> places = finite_support(x.num());
  for (auto& v : finite_support(x.den())) places.insert(v);
  for (auto& [v, d] : prof.nonzero())
    if (!v.is_inf()) places.insert(v);
  FracIdeal I = FracIdeal::unit(K);
  for (auto& v : places) {
    int e = prof.delta(v) + ord_at(v, x);
    if (e == 0) continue;
    if (K.splitting(v) == Splitting::Inert)
      I = I.scaled(RatFunc(v.poly()).pow(floor_div2(e)));
    else
      I = I * FracIdeal::prime_above(K, v).pow(e);
  }
  return I;
}

FracIdeal idele_ideal(const QuadExt& K, const Idele& y) {
  RatFunc c = RatFunc::one(K.field());
  for (auto& v : y.places())
    if (!v.is_inf()) c = c * RatFunc(v.poly()).pow(ord_at(v, y.component(v)));
  return FracIdeal::scalar(K, c);
}

}  // namespace ffe
