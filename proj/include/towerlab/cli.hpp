#pragma once

// Jobs behind the towerlab command line. run() never throws: errors become
// exit code 2 with an "error" object in the report.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "towerlab/omfactor.hpp"

namespace towerlab {

inline constexpr const char* kSchemaVersion = "1.0";

enum class Command { Analyze, CheckTheorem, Climb, Family, Genus };

std::string to_string(Command c);
std::optional<Command> command_from_string(const std::string& s);

enum class OutputFormat { Json, Human };

struct JobSpec {
  Command command = Command::Analyze;
  std::uint32_t p = 0;  // 0 with `family`: taken from q
  std::uint32_t k = 1;
  std::string F;  // analyze, check-theorem, genus; climb when deriving hypotheses
  std::string f = "x";
  // family
  std::uint64_t q = 0;
  std::string a = "0";
  std::string b = "1";
  std::string g = "x+1";
  // climb with explicit hypotheses
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> d_prime;

  int max_depth = kDefaultMaxDepth;
  int levels = 6;
  std::optional<int> g_cap;  // genus: defaults to the Riemann-Hurwitz upper bound
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = kDefaultSeed;
};

/// Range and consistency problems; empty when the job can run.
std::vector<std::string> job_problems(const JobSpec& job);

struct JobResult {
  int exit_code = 2;
  nlohmann::json report;
  std::string human;
};

JobResult run(const JobSpec& job);

/// Report text for the chosen format, newline-terminated.
std::string render(const JobResult& r, OutputFormat format);

nlohmann::json place_json(const PlaceExt& pl);

}  // namespace towerlab
