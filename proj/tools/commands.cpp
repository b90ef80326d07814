#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ffe/cycles.hpp"

namespace ffe::cli {

using nlohmann::json;

namespace {

const Fq* field_of(const Config& c) { return Fq::get(c.q, c.modulus); }

QuadExt quad_of(const Config& c, const Fq* F) {
  if (c.D.empty()) throw MathError("--D is required for this command");
  return QuadExt(parse_poly(F, c.D));
}

IncoherentSpace space_of(const Config& c, const QuadExt& K) {
  std::optional<RatFunc> eps;
  if (!c.eps_inf.empty()) eps = parse_ratfunc(K.field(), c.eps_inf);
  return IncoherentSpace(K, parse_poly(K.field(), c.alpha), eps);
}

json lnq(const LnQ& x) { return {{"lnq_coeff", rational_str(x.c)}}; }

json eta_json(const EtaValue& e) {
  return {{"prefactor", rational_str(e.prefactor)}, {"lnq_part", lnq(e.lnq_part)}, {"value", lnq(e.total())}};
}

json places_json(const std::set<Place>& S) {
  json a = json::array();
  for (auto& v : S) a.push_back(v.str());
  return a;
}

json upoly_json(const UPoly& f) {
  json a = json::array();
  for (auto& x : f.coeffs()) a.push_back(rational_str(x));
  return a;
}

json config_json(const Config& c, const Fq* F, const QuadExt* K, const IncoherentSpace* C) {
  json j = {{"q", F->q()}, {"modulus", F->modulus()}, {"twist", ConductorProfile(parse_ratfunc(F, c.twist)).twist().str()}};
  if (K) j["D"] = K->D().str();
  if (C) {
    j["alpha"] = C->alpha().str();
    j["eps_inf"] = C->eps_inf().str();
  }
  return j;
}

// Runs f(i) for i < n on worker threads; results land at their index.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  unsigned t = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
}

// "k1=v1,k2=v2" with integer values.
std::map<std::string, long> parse_sweep(const std::string& s) {
  static const std::set<std::string> known{"degbeta", "degD", "yinf", "samples"};
  std::map<std::string, long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw MathError("sweep entry needs key=value: " + item);
    std::string k = item.substr(0, eq);
    if (!known.count(k)) throw MathError("unknown sweep key " + k);
    try {
      out[k] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw MathError("sweep value for " + k + " is not an integer");
    }
  }
  return out;
}

// All admissible D (squarefree, infinity non-split) with 1 <= deg D <= n.
std::vector<QuadExt> fields_up_to(const Fq* F, int n) {
  std::vector<QuadExt> out;
  std::uint64_t qq = static_cast<std::uint64_t>(F->q());
  std::uint64_t lim = 1;
  for (int i = 0; i <= n; ++i) lim *= qq;
  for (std::uint64_t idx = qq; idx < lim; ++idx) {
    try {
      out.emplace_back(Poly::from_index(F, idx));
    } catch (const MathError&) {
    }
  }
  return out;
}

std::vector<RatFunc> betas_up_to(const Fq* F, int n) {
  std::vector<RatFunc> out;
  std::uint64_t lim = 1;
  for (int i = 0; i <= n; ++i) lim *= static_cast<std::uint64_t>(F->q());
  for (std::uint64_t idx = 1; idx < lim; ++idx) out.emplace_back(Poly::from_index(F, idx));
  return out;
}

Idele y_at_inf(const Fq* F, int j) {
  Place inf = Place::infinity(F);
  return Idele(RatFunc::one(F), {{inf, uniformizer(inf).pow(j)}});
}

struct Outcome {
  json row;
  bool mismatch = false;
  bool internal = false;
};

Outcome run_instance(const FieldData& fd, const Request& req) {
  Outcome o;
  o.row = {{"D", fd.K.D().str()}, {"beta", req.beta.str()}, {"y", req.y.str()}};
  try {
    MainReport r = verify_main(fd, req);
    o.row["diff"] = places_json(r.diff);
    o.row["support"] = r.support;
    o.row["closed"] = lnq(r.closed.total());
    o.row["whittaker"] = lnq(r.whittaker.total());
    o.row["cycle"] = lnq(r.cycle.total());
    o.row["closed_eq_whittaker"] = r.closed_eq_whittaker();
    o.row["whittaker_eq_cycle"] = r.whittaker_eq_cycle();
    o.row["closed_eq_cycle"] = r.closed_eq_cycle();
    o.mismatch = !r.agree();
  } catch (const ConsistencyError& e) {
    o.row["error"] = e.what();
    o.internal = true;
  }
  return o;
}

}  // namespace

int cmd_places(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  json rows = json::array();
  Place inf = Place::infinity(F);
  rows.push_back({{"place", inf.str()}, {"deg", 1}, {"splitting", to_string(K.splitting(inf))}});
  for (int d = 1; d <= c.bound; ++d)
    for (auto& P : irreducibles_of_degree(F, d)) {
      Place v = Place::finite(P);
      rows.push_back({{"place", v.str()}, {"deg", d}, {"splitting", to_string(K.splitting(v))}});
    }
  out = {{"config", config_json(c, F, &K, nullptr)}, {"genus", K.genus()}, {"f_inf", K.f_inf()}, {"rows", rows}};
  return kOk;
}

int cmd_lfunc(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  LData L = dirichlet_L(K);
  bool fe = functional_equation_holds(L);
  out = {{"config", config_json(c, F, &K, nullptr)},
         {"genus", K.genus()},
         {"L", upoly_json(L.L)},
         {"L_finite", upoly_json(L.L_finite)},
         {"L0", rational_str(L.value0())},
         {"logderiv0", lnq(L.logderiv0())},
         {"checked_degree", L.checked_degree},
         {"functional_equation", fe}};
  return fe ? kOk : kInternal;
}

int cmd_classgroup(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  FieldData fd(K);
  json reps = json::array();
  for (auto& A : fd.G.reps) reps.push_back(A.str());
  mpq_class expect = fd.L.value0() * K.f_inf();
  bool ok = expect == mpq_class(static_cast<long>(fd.G.h()));
  out = {{"config", config_json(c, F, &K, nullptr)},
         {"h", fd.G.h()},
         {"f_inf_times_L0", rational_str(expect)},
         {"class_number_formula", ok},
         {"reps", reps}};
  return ok ? kOk : kInternal;
}

int cmd_whittaker(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  IncoherentSpace C = space_of(c, K);
  ConductorProfile prof(parse_ratfunc(F, c.twist));
  Request req(C, prof, parse_idele(F, c.y), parse_ratfunc(F, c.beta));
  if (req.beta.is_zero()) throw MathError("--beta must be nonzero");
  json rows = json::array();
  bool bad = false;
  for (auto& v : req.bad_places()) {
    RatFunc yv = req.y.component(v);
    LocalCase lc = local_case(C, prof, v, yv, req.beta);
    mpq_class qv(static_cast<long>(v.qv()));
    for (Lattice which : {Lattice::Alpha, Lattice::Tilde}) {
      UvForm w = which == Lattice::Alpha ? w_alpha(C, prof, v, yv, req.beta) : w_tilde(C, prof, v, yv, req.beta);
      for (const mpq_class& uv : std::vector<mpq_class>{1, mpq_class(1) / qv}) {
        json r = {{"place", v.str()},         {"splitting", to_string(lc.split)},
                  {"m", lc.m},                {"e", lc.e},
                  {"e_prime", lc.e_prime},    {"in_diff", lc.in_diff},
                  {"lattice", which == Lattice::Alpha ? "alpha" : "tilde"},
                  {"u_v", rational_str(uv)},  {"closed", w.at(uv).str()}};
        if (v.qv() <= 9) {
          Cyclo o = whittaker_oracle(C, prof, v, yv, req.beta, which, uv);
          r["oracle"] = o.str();
          r["equal"] = o == w.at(uv);
          bad = bad || o != w.at(uv);
        } else {
          r["oracle"] = "skipped";
        }
        rows.push_back(r);
      }
    }
  }
  out = {{"config", config_json(c, F, &K, &C)}, {"beta", req.beta.str()}, {"y", req.y.str()}, {"rows", rows}};
  return bad ? kMismatch : kOk;
}

int cmd_eta(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  FieldData fd(K);
  IncoherentSpace C = space_of(c, K);
  Request req(C, ConductorProfile(parse_ratfunc(F, c.twist)), parse_idele(F, c.y), parse_ratfunc(F, c.beta));
  out = {{"config", config_json(c, F, &K, &C)}, {"beta", req.beta.str()}, {"y", req.y.str()}};
  if (req.beta.is_zero()) {
    EtaValue a = eta_constant(fd, req), b = eta_constant_closed(fd, req);
    out["series"] = eta_json(a);
    out["closed"] = eta_json(b);
    out["agree"] = a.total() == b.total();
    return a.total() == b.total() ? kOk : kMismatch;
  }
  MainReport r = verify_main(fd, req);
  json series = json::array();
  for (auto& x : coeff_series(fd, req, c.order)) series.push_back(rational_str(x));
  out["diff"] = places_json(r.diff);
  out["support"] = r.support;
  out["closed"] = eta_json(r.closed);
  out["whittaker"] = eta_json(r.whittaker);
  out["cycle"] = eta_json(r.cycle);
  out["theta"] = rational_str(r.theta);
  out["series_in_s_lnq"] = series;
  out["vanishing_order"] = vanishing_order(fd, req, c.order);
  out["closed_eq_whittaker"] = r.closed_eq_whittaker();
  out["whittaker_eq_cycle"] = r.whittaker_eq_cycle();
  out["closed_eq_cycle"] = r.closed_eq_cycle();
  return r.agree() ? kOk : kMismatch;
}

int cmd_verify(const Config& c, json& out) {
  const Fq* F = field_of(c);
  auto sw = parse_sweep(c.sweep);
  int degbeta = static_cast<int>(sw.count("degbeta") ? sw["degbeta"] : c.degbeta);
  int yinf = static_cast<int>(sw.count("yinf") ? sw["yinf"] : (degbeta + 3) / 2);
  std::vector<QuadExt> Ks;
  if (sw.count("degD"))
    Ks = fields_up_to(F, static_cast<int>(sw["degD"]));
  else
    Ks.push_back(quad_of(c, F));
  ConductorProfile prof(parse_ratfunc(F, c.twist));

  std::vector<std::unique_ptr<FieldData>> fds;
  std::vector<std::pair<std::size_t, Request>> inst;
  json skipped = json::array();
  for (auto& K : Ks) {
    IncoherentSpace C = space_of(c, K);
    try {
      Request probe(C, prof, Idele(F), RatFunc::one(F));
    } catch (const MathError& e) {
      skipped.push_back({{"D", K.D().str()}, {"reason", e.what()}});
      continue;
    }
    fds.push_back(std::make_unique<FieldData>(K));
    for (auto& b : betas_up_to(F, degbeta))
      for (int j = 0; j <= yinf; ++j) inst.emplace_back(fds.size() - 1, Request(C, prof, y_at_inf(F, j), b));
  }
  if (sw.count("samples") && sw["samples"] > 0 && static_cast<std::size_t>(sw["samples"]) < inst.size()) {
    std::mt19937_64 rng(c.seed);
    std::shuffle(inst.begin(), inst.end(), rng);
    inst.erase(inst.begin() + sw["samples"], inst.end());
    std::stable_sort(inst.begin(), inst.end(), [](auto& a, auto& b) { return a.first < b.first; });
  }

  std::vector<Outcome> res(inst.size());
  parallel_for(inst.size(), c.threads, [&](std::size_t i) { res[i] = run_instance(*fds[inst[i].first], inst[i].second); });

  std::size_t mism = 0, internal = 0, diff1 = 0, nonzero = 0;
  json rows = json::array();
  for (auto& o : res) {
    mism += o.mismatch;
    internal += o.internal;
    if (!o.internal && o.row["diff"].size() == 1 && o.row["support"].get<bool>()) {
      ++diff1;
      if (o.row["closed"]["lnq_coeff"] != "0") ++nonzero;
    }
    rows.push_back(o.row);
  }
  out = {{"config", config_json(c, F, nullptr, nullptr)},
         {"alpha", c.alpha},
         {"sweep", {{"degbeta", degbeta}, {"yinf", yinf}, {"fields", fds.size()}}},
         {"summary",
          {{"instances", res.size()},
           {"diff_one_with_support", diff1},
           {"nonzero", nonzero},
           {"mismatches", mism},
           {"internal_errors", internal}}},
         {"skipped_fields", skipped},
         {"rows", rows}};
  if (internal) return kInternal;
  return mism ? kMismatch : kOk;
}

int cmd_table(const Config& c, json& out) {
  const Fq* F = field_of(c);
  QuadExt K = quad_of(c, F);
  FieldData fd(K);
  IncoherentSpace C = space_of(c, K);
  ConductorProfile prof(parse_ratfunc(F, c.twist));
  Idele y = parse_idele(F, c.y);
  std::vector<RatFunc> betas = betas_up_to(F, c.degbeta);
  std::vector<Outcome> res(betas.size());
  std::vector<Request> reqs;
  for (auto& b : betas) reqs.emplace_back(C, prof, y, b);
  parallel_for(betas.size(), c.threads, [&](std::size_t i) { res[i] = run_instance(fd, reqs[i]); });
  json rows = json::array();
  bool mism = false, internal = false;
  for (auto& o : res) {
    mism = mism || o.mismatch;
    internal = internal || o.internal;
    json r = {{"beta", o.row["beta"]}, {"diff", o.row.value("diff", json::array())}};
    r["eta"] = o.row.value("closed", json());
    r["verified"] = !o.mismatch && !o.internal;
    rows.push_back(r);
  }
  out = {{"config", config_json(c, F, &K, &C)}, {"y", y.str()}, {"rows", rows}};
  if (internal) return kInternal;
  return mism ? kMismatch : kOk;
}

namespace {

std::string scalar_str(const json& v, int q) {
  if (v.is_object() && v.contains("lnq_coeff")) {
    mpq_class x(v["lnq_coeff"].get<std::string>());
    std::ostringstream os;
    os << v["lnq_coeff"].get<std::string>() << " * ln q";
    if (x != 0) os << "  (approx " << x.get_d() * std::log(static_cast<double>(q)) << ")";
    return os.str();
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_structured() || (v.is_object() && v.contains("lnq_coeff")); }

void human(std::ostream& os, const json& v, int q, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto& [k, x] : v.items()) {
      if (is_scalar(x)) {
        os << pad << k << ": " << scalar_str(x, q) << "\n";
      } else {
        os << pad << k << ":\n";
        human(os, x, q, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (auto& x : v) {
      if (is_scalar(x)) {
        os << pad << "- " << scalar_str(x, q) << "\n";
      } else if (x.is_object()) {
        os << pad << "-";
        for (auto& [k, y] : x.items()) os << " " << k << "=" << (is_scalar(y) ? scalar_str(y, q) : y.dump());
        os << "\n";
      } else {
        human(os, x, q, indent + 2);
      }
    }
  }
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_object() && v.contains("lnq_coeff")) {
    s = v["lnq_coeff"].get<std::string>();
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (auto& x : v) s += (s.empty() ? "" : ";") + (x.is_string() ? x.get<std::string>() : x.dump());
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string e = "\"";
  for (char ch : s) e += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return e + "\"";
}

}  // namespace

std::string render(const json& doc, const std::string& format, int q) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") {
    if (doc.contains("rows") && !doc["rows"].empty()) {
      std::vector<std::string> keys;
      for (auto& [k, x] : doc["rows"][0].items()) keys.push_back(k);
      for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
      os << "\n";
      for (auto& r : doc["rows"]) {
        for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(r.value(keys[i], json()));
        os << "\n";
      }
    } else {
      os << "key,value\n";
      for (auto& [k, x] : doc.items()) os << k << "," << csv_cell(x) << "\n";
    }
    return os.str();
  }
  human(os, doc, q, 0);
  return os.str();
}

}  // namespace ffe::cli
