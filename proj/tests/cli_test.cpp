#include <doctest.h>

#include "support.hpp"
#include "towerlab/cli.hpp"

using namespace towerlab;
using namespace towerlab::test;
using nlohmann::json;

namespace {

JobSpec job(Command c, std::uint32_t p, const std::string& F) {
  JobSpec j;
  j.command = c;
  j.p = p;
  j.F = F;
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse_poly") {
    const auto K2 = FiniteField::make(2, 1);
    const auto F = P(K2, "(x+1)*(y^3+y)-x^3");
    CHECK(F.deg_y() == 3);
    CHECK(F.deg_x() == 3);
    CHECK(F.to_string() == "x*y^3 + y^3 + x*y + y + x^3");
    CHECK(P(K2, F.to_string()) == F);

    const auto K5 = FiniteField::make(5, 1);
    CHECK(P(K5, "y-x").deg_y() == 1);
    CHECK(P(K5, "7*x") == P(K5, "2*x"));
    CHECK(P(K5, "2^3") == P(K5, "3"));
    CHECK(P(K5, "-x^2") == P(K5, "4*x^2"));
    CHECK(P(K5, "x-y-x") == P(K5, "-y"));

    const auto K4 = FiniteField::make(2, 2);
    CHECK(P(K4, "w^2") == P(K4, "w+1"));
  }

  TEST_CASE("parse errors carry position and expected tokens") {
    const auto K = FiniteField::make(2, 1);
    try {
      P(K, "x+*y");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::find(e.expected().begin(), e.expected().end(), "x") != e.expected().end());
    }
    CHECK(error_code([&] { P(K, "(x+1"); }) == ErrorCode::ParseError);
    CHECK(error_code([&] { P(K, "x y"); }) == ErrorCode::ParseError);
    CHECK(error_code([&] { P(K, "z"); }) == ErrorCode::ParseError);
    CHECK(error_code([&] { P(K, ""); }) == ErrorCode::ParseError);
    CHECK(error_code([&] { U(K, "y+1"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("run: documented commands") {
    JobSpec j = job(Command::CheckTheorem, 2, "(x+1)*(y^3+y)-x^3");
    auto r = run(j);
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"] == "holds");
    CHECK(r.report["witnesses"]["Q_prime"]["e"] == 2);
    CHECK(r.report["witnesses"]["Q_prime"]["different"] == json::array({2, 6}));

    j = JobSpec{};
    j.command = Command::Family;
    j.q = 3;
    r = run(j);
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"] == "all_passed");

    r = run(job(Command::Genus, 5, "y^2-x^3-x"));
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["genus"] == 1);

    r = run(job(Command::Genus, 2, "(x+1)*(y^3+y)-x^3"));
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["genus"] == 2);
    CHECK(r.report["result"]["reconciled"] == true);

    r = run(job(Command::Analyze, 5, "y^2-x^3-x"));
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["ramification"].size() == 4);

    j = job(Command::Climb, 2, "");
    j.m = 3;
    j.n = 1;
    j.r = 2;
    j.levels = 20;
    r = run(j);
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"] == "InfiniteGenus");
    CHECK(r.report["result"]["levels"][20]["bound"] == 3486784402LL);  // 3^20 + 1
    CHECK(r.report["result"]["walks"].size() == 5);
  }

  TEST_CASE("run: verdicts and errors map to exit codes") {
    auto r = run(job(Command::CheckTheorem, 5, "y^2-x^3-x"));
    CHECK(r.exit_code == 1);
    CHECK(r.report["verdict"] == "fails");
    CHECK_FALSE(r.report["result"]["failed_conditions"].empty());

    r = run(job(Command::Analyze, 2, "x+*y"));
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["code"] == "ParseError");
    CHECK(r.report["error"]["offset"] == 2);

    r = run(job(Command::Analyze, 4, "y-x"));
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["code"] == "NotPrime");

    r = run(job(Command::Analyze, 5, "y^2-x^2"));
    CHECK(r.exit_code == 2);

    JobSpec j = job(Command::Climb, 2, "");
    j.m = 4;
    j.n = 1;
    j.r = 2;
    r = run(j);
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["code"] == "InvalidHypotheses");

    j = JobSpec{};
    j.command = Command::Family;
    j.q = 2;
    j.g = "x";
    r = run(j);
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["code"] == "InvalidParams");

    j = job(Command::Analyze, 5, "y-x");
    j.max_depth = 0;
    CHECK(run(j).exit_code == 2);
  }

  TEST_CASE("reports round-trip and are deterministic") {
    JobSpec j = job(Command::Genus, 2, "(x+1)*(y^3+y)-x^3");
    const auto a = run(j);
    const std::string text = render(a, OutputFormat::Json);
    CHECK(json::parse(text) == a.report);
    CHECK(json::parse(text).dump(2) + "\n" == text);
    CHECK(render(run(j), OutputFormat::Json) == text);

    // the seed changes only running time
    j.seed = 12345;
    auto b = run(j).report;
    b["job"]["seed"] = a.report["job"]["seed"];
    CHECK(b == a.report);
  }

  TEST_CASE("human output") {
    JobSpec j = job(Command::Climb, 2, "");
    j.m = 3;
    j.n = 1;
    j.r = 2;
    j.levels = 3;
    const auto r = run(j);
    const std::string h = render(r, OutputFormat::Human);
    CHECK(h.find("T_4") != std::string::npos);
    CHECK(h.find("c_i = 1/2") != std::string::npos);
    j.levels = 5;
    CHECK(render(run(j), OutputFormat::Human).find("T_4") == std::string::npos);
  }
}
