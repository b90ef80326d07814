#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ffe::cli {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kInternal = 3 };

struct Config {
  int q = 0;
  std::vector<int> modulus;  // coefficients, constant term first
  std::string D;
  std::string alpha = "1";
  std::string eps_inf;  // empty: the default choice
  std::string twist = "1";
  std::string y;
  std::string beta = "1";
  std::string format = "human";
  std::string sweep;
  int bound = 3;
  int degbeta = 3;
  int order = 3;
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
};

// Each command fills a JSON document and returns an exit code.
int cmd_places(const Config& c, nlohmann::json& out);
int cmd_lfunc(const Config& c, nlohmann::json& out);
int cmd_classgroup(const Config& c, nlohmann::json& out);
int cmd_whittaker(const Config& c, nlohmann::json& out);
int cmd_eta(const Config& c, nlohmann::json& out);
int cmd_verify(const Config& c, nlohmann::json& out);
int cmd_table(const Config& c, nlohmann::json& out);

// Renders a command result in the requested format.
std::string render(const nlohmann::json& doc, const std::string& format, int q);

}  // namespace ffe::cli
