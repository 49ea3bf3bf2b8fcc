// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "towerlab/basicfield.hpp"
#include "towerlab/checker.hpp"
#include "towerlab/pyramid.hpp"

using namespace towerlab;
using namespace towerlab::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string ef(const std::vector<PlaceExt>& pls) {
  std::string s;
  for (const auto& pl : pls) s += "(" + std::to_string(pl.e) + "," + std::to_string(pl.f) + ")";
  return s;
}

// Places above P_(x-a) are {(1,1), (q,1)}; the e = 1 place has nu(y-a) = m and
// is the unique place above P_(y-a), with e = m there.
void family_shape(Outcome& o, const FamilyParams& fp) {
  Workspace ws;
  const auto K = fp.field;
  const BivarPoly F = build_family(fp).F;
  const int q = static_cast<int>(fp.q), m = q + 1;
  const FFPoly xa = FFPoly::linear(K, fp.a);
  const auto xs = places_above(F, RatPlace::finite(xa), Side::X, kDefaultMaxDepth, ws);
  const std::string tag = "q=" + std::to_string(q) + ": ";
  o.expect(xs.size() == 2, tag + "places above P_(x-a) " + ef(xs));
  const PlaceExt* Q = nullptr;
  const PlaceExt* Qp = nullptr;
  for (const auto& pl : xs) (pl.e == 1 ? Q : Qp) = &pl;
  o.expect(Q && Q->f == 1, tag + "no (1,1) place");
  o.expect(Qp && Qp->e == q && Qp->f == 1, tag + "no (q,1) place");
  const BivarPoly ya = BivarPoly::y(K) - BivarPoly::constant(K, fp.a);
  if (Q) o.expect(valuation_at(*Q, ya) == m, tag + "nu_Q(y-a) = " + std::to_string(valuation_at(*Q, ya)));
  const auto ys = places_above(F, RatPlace::finite(xa), Side::Y, kDefaultMaxDepth, ws);
  o.expect(ys.size() == 1 && ys[0].e == m, tag + "places above P_(y-a) " + ef(ys));
  if (Q && ys.size() == 1)
    o.expect(valuation_at(ys[0], ya) == valuation_at(*Q, ya) &&
                 valuation_at(ys[0], BivarPoly::from_x(xa)) == valuation_at(*Q, BivarPoly::from_x(xa)),
             tag + "Q not matched across sides");
  o.expect(eisenstein_at(F, RatPlace::infinity(K)), tag + "not Eisenstein at P_inf");
}

FamilyParams family(std::uint32_t p, std::uint32_t k, std::uint64_t q, Elem b) {
  const auto K = FiniteField::make(p, k);
  return FamilyParams{K, q, 0, b, U(K, "x+1")};
}

Outcome c1() {
  Outcome o;
  family_shape(o, family(2, 1, 2, 1));
  return o;
}

Outcome c2() {
  Outcome o;
  family_shape(o, family(3, 1, 3, 1));
  family_shape(o, family(2, 2, 4, FiniteField::make(2, 2)->generator()));
  return o;
}

Outcome c3() {
  Outcome o;
  for (const auto& fp : {family(2, 1, 2, 1), family(3, 1, 3, 1), family(2, 2, 4, 2)}) {
    const auto v = check_theorem(build_family(fp).F, FFPoly::linear(fp.field, fp.a));
    o.expect(v.holds && v.conclusion == "InfiniteGenus", "family q=" + std::to_string(fp.q) + " does not hold");
  }
  const auto K5 = FiniteField::make(5, 1);
  for (const char* s : {"y^2-x^3-x", "y^3-x*(x+1)^2"}) {
    const auto v = check_theorem(P(K5, s), U(K5, "x"));
    bool named_wild = false;
    for (const auto& c : v.conditions) named_wild = named_wild || (!c.passed && c.name.rfind("(3)", 0) == 0);
    o.expect(!v.holds && !v.failed_conditions.empty() && named_wild, std::string(s) + " not rejected by (3)");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  Gen g(2024);
  Workspace ws;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  int accepted = 0, failures = 0;
  while (accepted < 200) {
    const auto pk = fields[g.below(fields.size())];
    const auto K = ws.fields.get(pk.first, pk.second);
    const auto F = random_irreducible(g, K, ws);
    if (!F) continue;
    ++accepted;
    for (const auto& Pl : ramification_locus(*F)) {
      int sum = 0;
      try {
        for (const auto& pl : places_above(*F, Pl, Side::X, 16, ws)) sum += pl.e * pl.f;
      } catch (const Error& e) {
        sum = -1;
      }
      if (sum != F->deg_y()) {
        ++failures;
        if (failures <= 3) o.expect(false, F->to_string() + " at " + Pl.to_string());
      }
    }
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  if (o.ok) o.detail = std::to_string(accepted) + " polynomials";
  return o;
}

Outcome c5() {
  Outcome o;
  Workspace ws;
  const auto K5 = FiniteField::make(5, 1);
  const std::vector<std::pair<std::string, int>> curves = {
      {"y^2-x^3-x", 1}, {"y-x", 0}, {"y^3-x*(x+1)^2", 0}, {"y^2-x^5-x", 2}, {"y^3-x^2-1", 1}};
  for (const auto& [s, expected] : curves) {
    const BivarPoly F = P(K5, s);
    const GenusResult g = genus_basic(F, kDefaultMaxDepth, ws);
    const int z = zeta_genus(F, std::max(g.genus_hi, 1), ws);
    bool tame = true;
    for (const auto& row : ramification_table(F, kDefaultMaxDepth, ws).rows)
      for (const auto& pl : row.places) tame = tame && !pl.is_wild();
    o.expect(tame && g.exact && g.genus == z && z == expected,
             s + ": basic " + std::to_string(g.genus) + ", zeta " + std::to_string(z));
  }
  const auto K2 = FiniteField::make(2, 1);
  const BivarPoly F = P(K2, "(x+1)*(y^3+y)-x^3");
  const RamTable rt = ramification_table(F, kDefaultMaxDepth, ws);
  const GenusResult g = genus_from_table(rt);
  const int z = zeta_genus(F, 4, ws);
  o.expect(z >= g.genus_lo && z <= g.genus_hi, "zeta genus outside the Riemann-Hurwitz interval");
  try {
    const RamTable filled = reconcile_different(rt, z);
    o.expect(genus_from_table(filled).exact && genus_from_table(filled).genus == z, "reconciled table inexact");
  } catch (const Error& e) {
    o.expect(false, std::string("reconcile: ") + e.what());
  }
  if (o.ok) o.detail = "q=2 family genus " + std::to_string(z) + " in [" + std::to_string(g.genus_lo) + ", " +
                       std::to_string(g.genus_hi) + "]";
  return o;
}

Outcome c6() {
  Outcome o;
  const RamHypotheses h{3, 1, 2, 2, std::nullopt};
  const auto rep = climb(h, 20);
  for (const auto& lb : rep.levels) {
    const BigInt mi = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(lb.i));
    o.expect(lb.degree == mi && lb.bound == mi - 1 + 2 && 2 * lb.bound >= mi, "level " + std::to_string(lb.i));
  }
  for (int i = 0; i <= 4; ++i)
    o.expect(pyramid_walk(h, i).bound == rep.levels[static_cast<std::size_t>(i)].bound,
             "walk differs at level " + std::to_string(i));
  const auto s = series_divergence(SequenceSpec::constant(rep.c), SequenceSpec::constant(3), 20);
  o.expect(s.verdict == SeriesVerdict::Diverges && rep.verdict == ClimbVerdict::InfiniteGenus, "series verdict");
  return o;
}

Outcome c7() {
  Outcome o;
  Workspace ws;
  std::vector<BivarPoly> curves;
  for (const auto& fp : {family(2, 1, 2, 1), family(3, 1, 3, 1), family(2, 2, 4, 2)}) curves.push_back(build_family(fp).F);
  const auto K5 = FiniteField::make(5, 1);
  for (const char* s : {"y^2-x^3-x", "y^3-x*(x+1)^2", "y^2-x^5-x"}) curves.push_back(P(K5, s));
  const auto K3 = FiniteField::make(3, 1);
  curves.push_back(P(K3, "y^3-y-x^2"));
  int tame = 0, wild = 0;
  for (const auto& F : curves) {
    const int p = static_cast<int>(F.field()->characteristic());
    for (const auto& row : ramification_table(F, kDefaultMaxDepth, ws).rows)
      for (const auto& pl : row.places) {
        if (pl.e % p != 0) {
          ++tame;
          o.expect(pl.d_exact && *pl.d_exact == pl.e - 1 && pl.dmin == pl.dmax, "tame place with d != e - 1");
        } else {
          ++wild;
          o.expect(pl.dmin >= pl.e && pl.dmin <= pl.dmax, "wild place bounds");
        }
      }
  }
  const auto K2 = FiniteField::make(2, 1);
  const BivarPoly F = P(K2, "(x+1)*(y^3+y)-x^3");
  bool found = false;
  for (const auto& pl : places_above(F, RatPlace::finite(U(K2, "x")), Side::X, kDefaultMaxDepth, ws))
    if (pl.e == 2) {
      found = true;
      o.expect(pl.dmin == 2 && pl.dmax == 6 && valuation_at(pl, F.derivative_y()) == 6,
               "q=2 wild bounds (" + std::to_string(pl.dmin) + ", " + std::to_string(pl.dmax) + ")");
    }
  o.expect(found, "q=2 wild place missing");
  if (o.ok) o.detail = std::to_string(tame) + " tame, " + std::to_string(wild) + " wild places";
  return o;
}

std::string capture(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

Outcome c8() {
  Outcome o;
  const std::string cli = TOWERLAB_CLI;
  const std::vector<std::string> jobs = {
      "check-theorem --p 2 --F '(x+1)*(y^3+y)-x^3' --f x",
      "check-theorem --p 5 --F 'y^2-x^3-x' --f x",
      "check-theorem --p 5 --F 'y^3-x*(x+1)^2' --f x",
      "family --q 2 --a 0 --b 1 --g 'x+1'",
      "family --q 3 --a 0 --b 1 --g 'x+1'",
      "family --q 4 --a 0 --b w --g 'x+1'",
      "genus --p 5 --F 'y^2-x^3-x'",
      "genus --p 2 --F '(x+1)*(y^3+y)-x^3' --g-cap 4",
      "analyze --p 2 --F '(x+1)*(y^3+y)-x^3'",
      "climb --p 2 --m 3 --n 1 --r 2 --levels 20",
      "climb --p 2 --F '(x+1)*(y^3+y)-x^3' --f x --levels 4",
  };
  for (const auto& j : jobs) {
    const std::string a = capture(cli + " " + j + " 2>&1");
    const std::string b = capture(cli + " " + j + " 2>&1");
    o.expect(a == b, "differs: " + j);
    o.expect(a.find("\"schema_version\"") != std::string::npos, "no report: " + j);
  }
  if (o.ok) o.detail = std::to_string(jobs.size()) + " commands";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "q=2 family places above P_x and P_y, Eisenstein at P_inf", 1.0, c1},
      {2, "q=3 and q=4 family ramification", 5.0, c2},
      {3, "check_theorem verdicts", 60.0, c3},
      {4, "fundamental equality on 200 random irreducible F", 120.0, c4},
      {5, "genus: Riemann-Hurwitz against place counting", 60.0, c5},
      {6, "pyramid bounds, explicit walk and series divergence", 60.0, c6},
      {7, "different exponent bounds", 60.0, c7},
      {8, "CLI determinism", 120.0, c8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) o.expect(false, "took longer than " + std::to_string(c.limit_s) + " s");
    all = all && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << dt << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
