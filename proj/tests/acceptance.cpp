// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ffe/cycles.hpp"
#include "instances.hpp"

using namespace ffe;
using namespace inst;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c && ok) note << "first failure: " << what << "; ";
    ok = ok && c;
  }
};

// Fields with deg D = 1..5, two per degree where they exist.
std::vector<QuadExt> field_matrix(const Fq* F) {
  Gen g(static_cast<unsigned>(1000 + F->q()));
  std::vector<QuadExt> out;
  for (int deg = 1; deg <= 5; ++deg) {
    int got = 0;
    for (int it = 0; it < 400 && got < 2; ++it) {
      Poly D = g.nonzero(F, deg);
      if (D.deg() != deg) continue;
      try {
        QuadExt K(D);
        bool dup = false;
        for (auto& L : out) dup = dup || L.D() == K.D();
        if (dup) continue;
        out.push_back(K);
        ++got;
      } catch (const MathError&) {
      }
    }
  }
  return out;
}

Result crit1() {
  Result r;
  Gen g(1);
  int pairs = 0;
  for (int q : {3, 5}) {
    const Fq* F = Fq::get(q);
    for (int i = 0; i < 100; ++i) {
      RatFunc a = g.ratfunc(F, 4), b = g.ratfunc(F, 4);
      std::set<Place> S = support(a);
      for (auto& v : support(b)) S.insert(v);
      S.insert(Place::infinity(F));
      int prod = 1;
      for (auto& v : S) prod *= hilbert_symbol(a, b, v);
      r.require(prod == 1, "reciprocity for (" + a.str() + ", " + b.str() + ")");
      ++pairs;
    }
  }
  r.note << pairs << " pairs";
  return r;
}

Result crit2() {
  Result r;
  int spaces = 0;
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    Gen g(static_cast<unsigned>(q));
    for (auto& K : field_matrix(F))
      for (int i = 0; i < 5; ++i) {
        IncoherentSpace C(K, g.nonzero(F, 3));
        int prod = 1;
        for (auto& v : C.relevant_places()) prod *= C.hasse(v);
        r.require(prod == -1, "incoherence for alpha = " + C.alpha().str() + " over " + K.str());
        ++spaces;
      }
  }
  r.note << spaces << " spaces";
  return r;
}

Result crit3() {
  Result r;
  for (int q : {3, 5}) {
    auto Ks = field_matrix(Fq::get(q));
    r.require(Ks.size() >= 10, "at least 10 fields for q = " + std::to_string(q));
    for (auto& K : Ks) r.require(functional_equation_holds(dirichlet_L(K)), "functional equation for " + K.str());
    r.note << "q=" << q << ": " << Ks.size() << " fields; ";
  }
  return r;
}

Result crit4() {
  Result r;
  int n = 0;
  for (int q : {3, 5}) {
    for (auto& K : field_matrix(Fq::get(q))) {
      FieldData fd(K);
      r.require(mpq_class(static_cast<long>(fd.G.h())) == fd.L.value0() * K.f_inf(), "class number of " + K.str());
      ++n;
    }
  }
  FieldData pinned(QuadExt(parse_poly(Fq::get(3), "t")));
  r.require(pinned.G.h() == 1, "h = 1 for q = 3, D = t");
  r.note << n << " fields, pinned h(t) = " << pinned.G.h();
  return r;
}

Result crit5() {
  Result r;
  Gen g(5);
  // (splitting, lattice, parity of e or e', m)
  std::set<std::string> cells;
  int compared = 0;
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    auto Ks = field_matrix(F);
    for (int rep = 0; rep < 120; ++rep) {
      const QuadExt& K = Ks[g.below(Ks.size())];
      IncoherentSpace C(K, g.nonzero(F, 2));
      ConductorProfile prof = pick_profile(g, F);
      RatFunc beta = g.ratfunc(F, 2), y = g.ratfunc(F, 1);
      std::set<Place> S{Place::infinity(F)};
      for (auto& x : {beta, y, RatFunc(K.D()), RatFunc(C.alpha()), prof.twist()})
        for (auto& v : support(x)) S.insert(v);
      for (auto& v : S) {
        if (v.qv() > 9) continue;
        LocalCase lc = local_case(C, prof, v, y, beta);
        if (lc.m < 0 || lc.m > 3) continue;
        for (Lattice which : {Lattice::Alpha, Lattice::Tilde}) {
          UvForm w = which == Lattice::Alpha ? w_alpha(C, prof, v, y, beta) : w_tilde(C, prof, v, y, beta);
          mpq_class qv(static_cast<long>(v.qv()));
          for (const mpq_class& uv : std::vector<mpq_class>{1, mpq_class(1) / qv}) {
            Cyclo o = whittaker_oracle(C, prof, v, y, beta, which, uv);
            r.require(o == w.at(uv), "closed form at " + v.str() + " beta=" + beta.str());
            ++compared;
          }
          int par = lc.split == Splitting::Inert ? ((which == Lattice::Alpha ? lc.e : lc.e_prime) % 2 + 2) % 2 : 0;
          std::string lat = lc.split == Splitting::Inert ? (which == Lattice::Alpha ? "alpha" : "tilde") : "-";
          cells.insert(to_string(lc.split) + "/" + lat + "/" + std::to_string(par) + "/" + std::to_string(lc.m));
        }
      }
    }
  }
  // split and ramified x m; inert alpha x parity x m; inert tilde with parity forced by m
  std::size_t need = 4 + 4 + 8 + 4;
  r.require(cells.size() >= need, "case matrix coverage " + std::to_string(cells.size()) + "/" + std::to_string(need));
  r.note << compared << " comparisons, " << cells.size() << "/" << need << " cells";
  return r;
}

Result crit6() {
  Result r;
  Gen g(6);
  int by[4] = {0, 0, 0, 0};
  for (int q : {3, 5}) {
    const Fq* F = Fq::get(q);
    for (auto& K : test_fields(F)) {
      FieldData fd(K);
      for (int rep = 0; rep < 150; ++rep) {
        RatFunc beta = g.below(2) ? pick_beta(g, F) : RatFunc(g.nonzero(F, 4));
        auto req = random_request(g, fd, beta);
        if (!req) continue;
        std::size_t n = diff_set(req->C, beta).size();
        if (n != 1 && n != 3) continue;
        if (whittaker_product(fd, *req).F.is_zero()) continue;
        int ord = vanishing_order(fd, *req, 3);
        r.require(ord >= static_cast<int>(n), "vanishing order for beta = " + beta.str());
        ++by[n];
      }
    }
  }
  r.require(by[1] >= 20 && by[3] >= 20, "instances with #Diff = 1 and 3");
  r.note << by[1] << " with #Diff=1, " << by[3] << " with #Diff=3";
  return r;
}

// y_inf = t^{-j} with j <= 4 lets polynomial beta of degree <= 6 satisfy the support condition.
std::optional<Request> wide_request(Gen& g, const FieldData& fd) {
  const Fq* F = fd.K.field();
  int j = static_cast<int>(g.below(5));
  RatFunc beta(g.nonzero(F, std::min(6, 2 * j)));
  std::map<Place, RatFunc> loc;
  Place inf = Place::infinity(F);
  loc[inf] = uniformizer(inf).pow(j);
  if (g.below(3) == 0) {
    Place v = Place::finite(g.irreducible(F, 1));
    loc[v] = uniformizer(v).pow(static_cast<int>(g.below(2)));
  }
  for (int it = 0; it < 40; ++it) {
    try {
      return Request(IncoherentSpace(fd.K, g.nonzero(F, 2)), pick_profile(g, F), Idele(RatFunc::one(F), loc), beta);
    } catch (const MathError&) {
    }
  }
  return std::nullopt;
}

Result crit7() {
  Result r;
  Gen g(7);
  int used = 0, nonzero = 0, inf = 0, maxdegD = 0, maxdegb = 0;
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (auto& K : field_matrix(F)) {
      FieldData fd(K);
      int here = 0;
      for (int rep = 0; rep < 600 && here < 12; ++rep) {
        auto req = g.below(2) ? wide_request(g, fd) : random_request(g, fd, pick_beta(g, F));
        if (!req || !req->support_ok() || diff_set(req->C, req->beta).size() != 1) continue;
        MainReport m = verify_main(fd, *req);
        r.require(m.agree(), "three values for D=" + K.D().str() + " alpha=" + req->C.alpha().str() +
                                 " beta=" + req->beta.str() + " y=" + req->y.str());
        ++used;
        ++here;
        if (!m.cycle.total().is_zero()) ++nonzero;
        if (m.diff.begin()->is_inf()) ++inf;
        maxdegD = std::max(maxdegD, K.D().deg());
        maxdegb = std::max(maxdegb, req->beta.num().deg());
      }
    }
  }
  r.require(used >= 200, "at least 200 instances");
  r.note << used << " instances, " << nonzero << " nonzero, " << inf << " with Diff at infinity, deg D <= " << maxdegD
         << ", deg beta <= " << maxdegb << " ";
  return r;
}

Result crit8() {
  Result r;
  Gen g(8);
  int n = 0;
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (auto& K : test_fields(F)) {
      FieldData fd(K);
      for (int rep = 0; rep < 10; ++rep) {
        auto req = random_request(g, fd, RatFunc());
        if (!req) continue;
        URat E = E0_series(fd, *req);
        r.require((E + E.invert_var() * inert_odd_factor(*req)).is_zero(), "antisymmetry over " + K.str());
        r.require(eta_constant(fd, *req).total() == eta_constant_closed(fd, *req).total(), "closed eta_0");
        ++n;
      }
    }
  }
  const Fq* F = Fq::get(3);
  FieldData fd(QuadExt(parse_poly(F, "t")));
  Request req(IncoherentSpace(fd.K, Poly::constant(F, 1)), ConductorProfile(RatFunc::one(F)), Idele(F), RatFunc());
  r.require(eta_constant(fd, req).total().is_zero(), "eta_0 = 0 for q = 3, D = t");
  r.note << n << " constant terms, pinned eta_0 = " << eta_constant(fd, req).total().str();
  return r;
}

Result crit9() {
  Result r;
  Gen g(9);
  std::map<std::string, int> classes;
  int checks = 0;
  for (int q : {3, 5, 9}) {
    const Fq* F = Fq::get(q);
    for (auto& K : test_fields(F)) {
      FieldData fd(K);
      for (int rep = 0; rep < 200; ++rep) {
        RatFunc beta = pick_beta(g, F);
        auto req = random_request(g, fd, beta);
        if (!req || !req->support_ok()) continue;
        std::set<Place> diff = diff_set(req->C, beta);
        std::string cls = std::to_string(q) + "/" + std::to_string(diff.size()) + "/";
        if (diff.size() == 1) cls += diff.begin()->is_inf() ? "inf" : to_string(K.splitting(*diff.begin()));
        if (classes[cls] >= 1) continue;
        ++classes[cls];
        EtaValue e0 = eta_coeff_closed(fd, *req), z0 = eta_coeff_cycle(fd, *req);
        LnQ w0 = eta_coeff_whittaker(fd, *req).total();
        for (int i = 0; i < 50; ++i) {
          RatFunc c = g.ratfunc(F, 2);
          Request moved(req->C, req->prof, req->y.scaled(c.inv()), c * c * beta);
          r.require(eta_coeff_closed(fd, moved).total() == e0.total(), "closed covariance " + cls);
          r.require(eta_coeff_whittaker(fd, moved).total() == w0, "Whittaker covariance " + cls);
          EtaValue z1 = eta_coeff_cycle(fd, moved);
          r.require(z1.lnq_part == z0.lnq_part && z1.prefactor == z0.prefactor, "cycle rescaling " + cls);
          ++checks;
        }
      }
    }
  }
  r.require(classes.size() >= 8, "instance classes");
  r.note << classes.size() << " classes x 50 scalings = " << checks << " checks";
  return r;
}

}  // namespace

int main() {
  struct Crit {
    const char* name;
    std::function<Result()> run;
    double limit;  // seconds
  };
  const double none = 1e9;
  const std::vector<Crit> crits{
      {"Hilbert reciprocity", crit1, 5},
      {"incoherence", crit2, none},
      {"functional equation", crit3, 10},
      {"class number formula", crit4, 60},
      {"local Whittaker closed forms vs oracle", crit5, 60},
      {"central vanishing order", crit6, none},
      {"main identity, three computations", crit7, 600},
      {"constant term antisymmetry", crit8, none},
      {"covariance and rescaling", crit9, none},
  };
  bool all = true;
  for (std::size_t i = 0; i < crits.size(); ++i) {
    auto t0 = Clock::now();
    Result r;
    try {
      r = crits[i].run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.note << "exception: " << e.what();
    }
    double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    if (sec > crits[i].limit) {
      r.ok = false;
      r.note << "over the " << crits[i].limit << " s budget ";
    }
    std::printf("%s %zu %s: %s(%.2f s)\n", r.ok ? "PASS" : "FAIL", i + 1, crits[i].name, r.note.str().c_str(), sec);
    std::fflush(stdout);
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
