#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ffe/fq.hpp"

using namespace ffe::cli;

namespace {

std::vector<int> parse_modulus(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier coefficients of central derivatives of incoherent Eisenstein series over F_q(t)"};
  app.set_config("--config", "", "key=value file with any of the long options");
  app.require_subcommand(1);
  app.fallthrough();

  Config c;
  std::string modulus;
  app.add_option("--q", c.q, "size of the constant field")->required();
  app.add_option("--modulus", modulus, "coefficients of the F_q modulus over F_p, constant first, comma separated");
  app.add_option("--D", c.D, "squarefree D with K = k(sqrt D) imaginary");
  app.add_option("--alpha", c.alpha, "polynomial alpha of the incoherent space")->capture_default_str();
  app.add_option("--eps-inf", c.eps_inf, "override of the twist at infinity");
  app.add_option("--twist", c.twist, "c in psi(x) = psi_0(c x dt)")->capture_default_str();
  app.add_option("--y", c.y, "idele as place=value,... (empty: trivial)");
  app.add_option("--beta", c.beta, "coefficient index beta (0: constant term)")->capture_default_str();
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--threads", c.threads, "worker threads for sweeps (0: all cores)");
  app.add_option("--seed", c.seed, "seed for --sweep samples=N")->capture_default_str();

  auto* places = app.add_subcommand("places", "splitting of places of degree <= bound");
  places->add_option("--bound", c.bound)->capture_default_str();
  app.add_subcommand("lfunc", "L-function, L(0) and L'(0)/L(0)");
  app.add_subcommand("classgroup", "class group representatives and the class number formula");
  app.add_subcommand("whittaker", "local Whittaker closed forms against the character-sum oracle");
  auto* eta = app.add_subcommand("eta", "one coefficient by the three computations");
  eta->add_option("--order", c.order, "order of the s-expansion")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "sweep of the main identity");
  verify->add_option("--sweep", c.sweep, "degbeta=N,degD=N,yinf=N,samples=N");
  verify->add_option("--degbeta", c.degbeta)->capture_default_str();
  auto* table = app.add_subcommand("table", "coefficients over beta of bounded degree for fixed y");
  table->add_option("--degbeta", c.degbeta)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::map<std::string, int (*)(const Config&, nlohmann::json&)> cmds{
      {"places", cmd_places}, {"lfunc", cmd_lfunc}, {"classgroup", cmd_classgroup}, {"whittaker", cmd_whittaker},
      {"eta", cmd_eta},       {"verify", cmd_verify}, {"table", cmd_table}};
  std::string name = app.get_subcommands().front()->get_name();
  nlohmann::json out;
  try {
    if (!modulus.empty()) c.modulus = parse_modulus(modulus);
    int rc = cmds.at(name)(c, out);
    std::cout << render(out, c.format, c.q);
    if (rc == kMismatch) std::cerr << "verification mismatch\n";
    return rc;
  } catch (const ffe::ConsistencyError& e) {
    std::cout << nlohmann::json{{"error", "internal consistency"}, {"command", name}, {"message", e.what()}}.dump(2)
              << "\n";
    return kInternal;
  } catch (const ffe::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  }
}
