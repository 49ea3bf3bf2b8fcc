#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "towerlab/cli.hpp"

using namespace towerlab;

namespace {

std::uint64_t seed_from_env() {
  const char* s = std::getenv("TOWERLAB_SEED");
  if (!s || !*s) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 0);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "towerlab: ignoring malformed TOWERLAB_SEED=" << s << "\n";
  return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramification, genus and infinite-genus checks for recursive towers over finite fields"};
  app.require_subcommand(1);
  JobSpec job;
  std::string format = "json";
  std::optional<int> g_cap;
  std::optional<std::int64_t> d_prime;

  auto field_opts = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", job.p, "characteristic");
    if (required) p->required();
    sub->add_option("--k", job.k, "extension degree, GF(p^k)")->capture_default_str();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-depth", job.max_depth, "refinement depth limit")->capture_default_str();
    sub->add_option("--format", format, "json or human")->check(CLI::IsMember({"json", "human"}))->capture_default_str();
  };

  std::map<CLI::App*, Command> commands;
  auto* analyze = app.add_subcommand("analyze", "ramification table and Riemann-Hurwitz genus");
  field_opts(analyze, true);
  analyze->add_option("--F", job.F, "F(x, y)")->required();
  common(analyze);
  commands[analyze] = Command::Analyze;

  auto* check = app.add_subcommand("check-theorem", "verify the infinite-genus conditions for (F, f)");
  field_opts(check, true);
  check->add_option("--F", job.F, "F(x, y)")->required();
  check->add_option("--f", job.f, "monic irreducible f, written in x")->capture_default_str();
  common(check);
  commands[check] = Command::CheckTheorem;

  auto* climb = app.add_subcommand("climb", "per-level different bounds through the tower");
  field_opts(climb, true);
  climb->add_option("--F", job.F, "derive m, n, r from F and f");
  climb->add_option("--f", job.f, "f for --F")->capture_default_str();
  climb->add_option("--m", job.m, "deg F");
  climb->add_option("--n", job.n, "e(Q|P_f(x))");
  climb->add_option("--r", job.r, "e(Q'|P_f(x))");
  climb->add_option("--d-prime", d_prime, "lower bound for d(Q'|P_f(x)), default r");
  climb->add_option("--levels", job.levels, "highest level i")->capture_default_str();
  common(climb);
  commands[climb] = Command::Climb;

  auto* family = app.add_subcommand("family", "build (y-a)^m + b(y-a) = (x-a)^m / g(x), m = q+1, and verify it");
  family->add_option("--q", job.q, "prime power")->required();
  family->add_option("--p", job.p, "characteristic (optional check)");
  family->add_option("--a", job.a, "element a")->capture_default_str();
  family->add_option("--b", job.b, "element b != 0; w is the field generator")->capture_default_str();
  family->add_option("--g", job.g, "g(x)")->capture_default_str();
  common(family);
  commands[family] = Command::Family;

  auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus cross-checked by place counts");
  field_opts(genus, true);
  genus->add_option("--F", job.F, "F(x, y)")->required();
  genus->add_option("--g-cap", g_cap, "largest genus tried by place counting");
  common(genus);
  commands[genus] = Command::Genus;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) job.command = cmd;
  job.g_cap = g_cap;
  job.d_prime = d_prime;
  job.format = format == "human" ? OutputFormat::Human : OutputFormat::Json;
  job.seed = seed_from_env();

  const JobResult r = run(job);
  std::cout << render(r, job.format);
  return r.exit_code;
}
