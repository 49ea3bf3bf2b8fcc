#include "towerlab/cli.hpp"

#include <algorithm>
#include <sstream>

#include "towerlab/basicfield.hpp"
#include "towerlab/checker.hpp"
#include "towerlab/irreducible.hpp"
#include "towerlab/parse.hpp"
#include "towerlab/pyramid.hpp"

namespace towerlab {

using nlohmann::json;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::Analyze, "analyze"}, {Command::CheckTheorem, "check-theorem"}, {Command::Climb, "climb"},
    {Command::Family, "family"},   {Command::Genus, "genus"},
};

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json rational_json(const Rational& r) {
  return json::array({big_json(boost::multiprecision::numerator(r)), big_json(boost::multiprecision::denominator(r))});
}

std::string pair_text(std::int64_t lo, std::int64_t hi) {
  return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string different_text(const PlaceExt& pl) {
  if (pl.d_exact) return std::to_string(*pl.d_exact);
  return pair_text(pl.dmin, pl.dmax);
}

// Left-aligned columns, two spaces apart.
std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows,
                  const std::string& indent = "  ") {
  std::vector<std::size_t> w(head.size(), 0);
  for (std::size_t c = 0; c < head.size(); ++c) w[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s = indent;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(w[c] - r[c].size() + 2, ' ');
    }
    s.erase(s.find_last_not_of(' ') + 1);
    return s + "\n";
  };
  std::string out = line(head);
  std::vector<std::string> rule;
  for (auto x : w) rule.emplace_back(x, '-');
  out += line(rule);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::vector<std::vector<std::string>> place_rows(const std::vector<PlaceExt>& pls) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& pl : pls)
    rows.push_back({pl.base.to_string(pl.side == Side::X ? "x" : "y"), std::to_string(pl.e), std::to_string(pl.f),
                    different_text(pl), pl.is_wild() ? "wild" : (pl.e > 1 ? "tame" : "unramified")});
  return rows;
}

const std::vector<std::string> kPlaceHead = {"below", "e", "f", "d", "kind"};

json error_json(const std::exception& ex) {
  json e;
  e["message"] = ex.what();
  if (const auto* te = dynamic_cast<const Error*>(&ex)) {
    e["code"] = std::string(to_string(te->code()));
    if (const auto* pe = dynamic_cast<const ParseError*>(&ex)) {
      e["offset"] = pe->offset();
      e["expected"] = pe->expected();
    }
  } else {
    e["code"] = "Internal";
  }
  return e;
}

FieldPtr field_for(const JobSpec& job, Workspace& ws) {
  if (job.command == Command::Family) {
    std::uint64_t p = 2;
    while (job.q % p != 0) ++p;
    std::uint64_t k = 0;
    for (std::uint64_t t = job.q; t > 1; t /= p) {
      require(t % p == 0, ErrorCode::InvalidParams, "q = " + std::to_string(job.q) + " is not a prime power");
      ++k;
    }
    require(job.p == 0 || job.p == p, ErrorCode::InvalidParams,
            "q = " + std::to_string(job.q) + " is not a power of p = " + std::to_string(job.p));
    return ws.fields.get(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  }
  return ws.fields.get(job.p, job.k);
}

Elem parse_elem(const FieldPtr& K, const std::string& text, const std::string& what) {
  const FFPoly c = parse_univariate(K, text);
  require(c.degree() <= 0, ErrorCode::InvalidArgument, what + " must be a field element, got " + text);
  return c.coeff(0);
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> command_from_string(const std::string& s) {
  for (const auto& [cmd, name] : kCommands)
    if (s == name) return cmd;
  return std::nullopt;
}

json place_json(const PlaceExt& pl) {
  json j;
  j["below"] = pl.base.to_string(pl.side == Side::X ? "x" : "y");
  j["side"] = to_string(pl.side);
  j["e"] = pl.e;
  j["f"] = pl.f;
  j["different"] = json::array({pl.dmin, pl.dmax});
  j["different_exact"] = pl.d_exact ? json(*pl.d_exact) : json(nullptr);
  j["wild"] = pl.is_wild();
  json chain = json::array();
  for (const auto& lv : pl.refinement)
    chain.push_back({{"shift", lv.shift},
                     {"root_valuation", json::array({lv.root_valuation.num, lv.root_valuation.den})},
                     {"residual", lv.residual},
                     {"multiplicity", lv.multiplicity}});
  j["refinement"] = chain;
  return j;
}

namespace {

struct Ctx {
  const JobSpec& job;
  Workspace& ws;
  JobResult& out;
  json& result;
  json& witnesses;
  json& notes;
  std::string& human;
};

BivarPoly parse_F(const FieldPtr& K, const std::string& text) {
  const BivarPoly F = parse_poly(K, text);
  require(F.deg_y() >= 1, ErrorCode::InvalidArgument, "F must involve y: " + text);
  return F;
}

void require_irreducible(const BivarPoly& F, Workspace& ws) {
  const auto r = irreducibility(F, ws);
  require(r.irreducible, ErrorCode::InvalidArgument,
          "F is reducible over K(x) (" + r.method + (r.factor ? ", factor " + r.factor->to_string() : "") + ")");
}

json table_json(const RamTable& rt) {
  json rows = json::array();
  for (const auto& row : rt.rows) {
    json pls = json::array();
    int sum = 0;
    for (const auto& pl : row.places) {
      pls.push_back(place_json(pl));
      sum += pl.e * pl.f;
    }
    rows.push_back({{"below", row.base.to_string()}, {"degree", row.base.degree()}, {"places", pls}, {"sum_ef", sum}});
  }
  return rows;
}

std::string table_text(const RamTable& rt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rt.rows)
    for (auto& r : place_rows(row.places)) rows.push_back(std::move(r));
  return table(kPlaceHead, rows);
}

json genus_json(const GenusResult& g) {
  return {{"exact", g.exact},
          {"genus", json::array({g.genus_lo, g.genus_hi})},
          {"different_degree", json::array({g.diff_lo, g.diff_hi})}};
}

void analyze(Ctx& c) {
  const FieldPtr K = field_for(c.job, c.ws);
  const BivarPoly F = parse_F(K, c.job.F);
  require_irreducible(F, c.ws);
  const RamTable rt = ramification_table(F, c.job.max_depth, c.ws);
  c.result["F"] = F.to_string();
  c.result["m"] = rt.m;
  c.result["ramification"] = table_json(rt);
  const bool absolute = is_absolutely_irreducible(F, c.ws);
  c.result["absolutely_irreducible"] = absolute;
  c.human += "F = " + F.to_string() + " over GF(" + std::to_string(K->size()) + "), m = " + std::to_string(rt.m) + "\n\n";
  c.human += table_text(rt);
  if (absolute) {
    const GenusResult g = genus_from_table(rt);
    c.result["riemann_hurwitz"] = genus_json(g);
    c.human += "\ngenus " + pair_text(g.genus_lo, g.genus_hi) + (g.exact ? "" : " (wild different bounds)") + "\n";
  } else {
    c.notes.push_back("F is not absolutely irreducible; the constant field grows and no genus is reported");
  }
  c.out.exit_code = 0;
  c.out.report["verdict"] = "ok";
}

std::string verdict_text(const TheoremVerdict& v) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& cd : v.conditions) rows.push_back({cd.passed ? "pass" : "FAIL", cd.name, cd.detail});
  return table({"", "condition", "detail"}, rows);
}

json theorem_json(const TheoremVerdict& v, json& witnesses) {
  json conds = json::array();
  for (const auto& cd : v.conditions) conds.push_back({{"name", cd.name}, {"passed", cd.passed}, {"detail", cd.detail}});
  if (v.q_over_fy) witnesses["Q_over_fy"] = place_json(*v.q_over_fy);
  if (v.q_over_fx) witnesses["Q_over_fx"] = place_json(*v.q_over_fx);
  if (v.q_prime) witnesses["Q_prime"] = place_json(*v.q_prime);
  json j{{"conditions", conds}, {"failed_conditions", v.failed_conditions}, {"conclusion", v.conclusion}};
  if (v.hypotheses) {
    const auto& h = *v.hypotheses;
    j["hypotheses"] = {{"m", h.m}, {"n", h.n}, {"r", h.r}, {"p", h.p}, {"d_prime", h.d_prime()}};
  } else {
    j["hypotheses"] = nullptr;
  }
  return j;
}

void check(Ctx& c) {
  const FieldPtr K = field_for(c.job, c.ws);
  const BivarPoly F = parse_F(K, c.job.F);
  const FFPoly f = parse_univariate(K, c.job.f);
  const TheoremVerdict v = check_theorem(F, f, c.job.max_depth, c.ws);
  c.result = theorem_json(v, c.witnesses);
  for (const auto& n : v.notes) c.notes.push_back(n);
  c.human += "F = " + F.to_string() + ", f = " + f.to_string("X") + "\n\n" + verdict_text(v);
  c.human += "\n" + std::string(v.holds ? "holds: InfiniteGenus" : "does not hold") + "\n";
  c.out.exit_code = v.holds ? 0 : 1;
  c.out.report["verdict"] = v.holds ? "holds" : "fails";
}

void climb_cmd(Ctx& c) {
  RamHypotheses h;
  if (!c.job.F.empty()) {
    const FieldPtr K = field_for(c.job, c.ws);
    const BivarPoly F = parse_F(K, c.job.F);
    const TheoremVerdict v = check_theorem(F, parse_univariate(K, c.job.f), c.job.max_depth, c.ws);
    c.result["theorem"] = theorem_json(v, c.witnesses);
    if (!v.holds) {
      c.human += verdict_text(v) + "\nhypotheses not established; nothing to climb\n";
      c.out.exit_code = 1;
      c.out.report["verdict"] = to_string(ClimbVerdict::Inconclusive);
      return;
    }
    h = *v.hypotheses;
  } else {
    h = RamHypotheses{c.job.m, c.job.n, c.job.r, static_cast<std::int64_t>(c.job.p), c.job.d_prime};
  }
  const PyramidReport rep = climb(h, c.job.levels);
  c.result["hypotheses"] = {{"m", h.m}, {"n", h.n}, {"r", h.r}, {"p", h.p}, {"d_prime", h.d_prime()}};
  json levels = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& lb : rep.levels) {
    levels.push_back({{"i", lb.i},
                      {"degree", big_json(lb.degree)},
                      {"bound", big_json(lb.bound)},
                      {"ratio", rational_json(lb.ratio)},
                      {"meets_half", lb.meets_half}});
    rows.push_back({std::to_string(lb.i), lb.degree.str(), lb.bound.str(), format_rational(lb.ratio),
                    lb.meets_half ? "yes" : "no"});
  }
  c.result["levels"] = levels;
  c.result["c"] = rational_json(rep.c);
  json sums = json::array();
  for (const auto& s : rep.partial_sums) sums.push_back(rational_json(s));
  c.result["partial_sums"] = sums;

  json walks = json::array();
  bool agree = true;
  for (int i = 0; i <= std::min(c.job.levels, 4); ++i) {
    const PyramidWalk w = pyramid_walk(h, i);
    const bool same = w.bound == rep.levels[static_cast<std::size_t>(i)].bound;
    agree = agree && same;
    json nodes = json::array();
    for (const auto& nd : w.nodes)
      nodes.push_back({{"j", nd.j}, {"k", nd.k}, {"name", nd.name}, {"e_left", nd.e_left}, {"e_right", nd.e_right}});
    walks.push_back({{"i", i},
                     {"bound", big_json(w.bound)},
                     {"d_top_over_Pi", big_json(w.d_top_over_Pi)},
                     {"d_P_over_Pi", big_json(w.d_P_over_Pi)},
                     {"e_top_over_P", w.e_top_over_P},
                     {"matches_closed_form", same},
                     {"nodes", nodes}});
  }
  c.result["walks"] = walks;
  for (const auto& n : rep.notes) c.notes.push_back(n);

  c.human += "m = " + std::to_string(h.m) + ", n = " + std::to_string(h.n) + ", r = " + std::to_string(h.r) +
             ", p = " + std::to_string(h.p) + ", d' = " + std::to_string(h.d_prime()) + "\n\n";
  c.human += table({"i", "[T_i:T_0]", "d(P'|P) >=", "ratio", ">= 1/2"}, rows);
  if (c.job.levels <= 4) c.human += "\n" + render_pyramid(pyramid_walk(h, c.job.levels));
  c.human += "\nexplicit walks " + std::string(agree ? "agree" : "DISAGREE") + " with the closed form\n";
  c.human += "verdict: " + to_string(rep.verdict) + "\n";
  const bool ok = rep.verdict == ClimbVerdict::InfiniteGenus && agree;
  c.out.exit_code = ok ? 0 : 1;
  c.out.report["verdict"] = ok ? to_string(rep.verdict) : to_string(ClimbVerdict::Inconclusive);
}

void family(Ctx& c) {
  const FieldPtr K = field_for(c.job, c.ws);
  FamilyParams fp{K, c.job.q, parse_elem(K, c.job.a, "a"), parse_elem(K, c.job.b, "b"),
                  parse_univariate(K, c.job.g)};
  const FamilyReport rep = verify_family_facts(fp, c.job.max_depth, c.ws);
  c.result["F"] = rep.tower.F.to_string();
  c.result["m"] = rep.tower.m;
  c.result["c"] = K->format(rep.c);
  json facts = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : rep.facts) {
    facts.push_back({{"id", f.id},
                     {"description", f.description},
                     {"passed", f.passed},
                     {"detail", f.detail},
                     {"consumed", f.consumed}});
    rows.push_back({f.id, f.passed ? "pass" : "FAIL", f.description, f.detail});
  }
  c.result["facts"] = facts;
  c.result["all_passed"] = rep.all_passed;
  for (const auto& n : rep.notes) c.notes.push_back(n);
  c.human += "F = " + rep.tower.F.to_string() + " over GF(" + std::to_string(K->size()) + "), m = " +
             std::to_string(rep.tower.m) + ", c = " + K->format(rep.c) + "\n\n";
  c.human += table({"", "", "fact", "detail"}, rows);
  c.out.exit_code = rep.all_passed ? 0 : 1;
  c.out.report["verdict"] = rep.all_passed ? "all_passed" : "failed";
}

void genus(Ctx& c) {
  const FieldPtr K = field_for(c.job, c.ws);
  const BivarPoly F = parse_F(K, c.job.F);
  require_irreducible(F, c.ws);
  RamTable rt = ramification_table(F, c.job.max_depth, c.ws);
  const GenusResult g = genus_from_table(rt);
  const int cap = c.job.g_cap.value_or(g.genus_hi);
  const int z = zeta_genus(F, cap, c.ws);
  c.result["F"] = F.to_string();
  c.result["riemann_hurwitz"] = genus_json(g);
  c.result["zeta"] = {{"genus", z}, {"g_cap", cap}};

  bool consistent = z >= g.genus_lo && z <= g.genus_hi;
  bool reconciled = g.exact;
  if (consistent && !g.exact) {
    try {
      rt = reconcile_different(rt, z);
      reconciled = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InconsistentOracle) consistent = false;
      c.notes.push_back(std::string("different not reconciled: ") + e.what());
    }
  }
  c.result["reconciled"] = reconciled;
  c.result["ramification"] = table_json(rt);
  c.result["genus"] = consistent ? json(z) : json(nullptr);
  c.result["consistent"] = consistent;

  c.human += "F = " + F.to_string() + " over GF(" + std::to_string(K->size()) + ")\n\n" + table_text(rt);
  c.human += "\nRiemann-Hurwitz " + pair_text(g.genus_lo, g.genus_hi) + ", place counts " + std::to_string(z) +
             (consistent ? " (consistent)" : " (INCONSISTENT)") + "\n";
  c.out.exit_code = consistent ? 0 : 1;
  c.out.report["verdict"] = consistent ? "consistent" : "inconsistent";
}

json job_json(const JobSpec& job) {
  json j;
  j["command"] = to_string(job.command);
  j["max_depth"] = job.max_depth;
  j["seed"] = job.seed;
  if (job.command != Command::Family && (job.command != Command::Climb || !job.F.empty()))
    j["field"] = {{"p", job.p}, {"k", job.k}};
  switch (job.command) {
    case Command::Analyze:
      j["F"] = job.F;
      break;
    case Command::Genus:
      j["F"] = job.F;
      j["g_cap"] = job.g_cap ? json(*job.g_cap) : json(nullptr);
      break;
    case Command::CheckTheorem:
      j["F"] = job.F;
      j["f"] = job.f;
      break;
    case Command::Climb:
      j["levels"] = job.levels;
      if (!job.F.empty()) {
        j["F"] = job.F;
        j["f"] = job.f;
      } else {
        j["hypotheses"] = {{"m", job.m}, {"n", job.n}, {"r", job.r}, {"p", job.p},
                           {"d_prime", job.d_prime ? json(*job.d_prime) : json(nullptr)}};
      }
      break;
    case Command::Family:
      j["family"] = {{"q", job.q}, {"a", job.a}, {"b", job.b}, {"g", job.g}};
      if (job.p) j["field"] = {{"p", job.p}};
      break;
  }
  return j;
}

}  // namespace

std::vector<std::string> job_problems(const JobSpec& job) {
  std::vector<std::string> out;
  const bool hyp = job.m || job.n || job.r || job.d_prime;
  if (job.max_depth < 1 || job.max_depth > 64) out.push_back("--max-depth must be in 1..64");
  if (job.levels < 0 || job.levels > 200) out.push_back("--levels must be in 0..200");
  if (job.g_cap && (*job.g_cap < 0 || *job.g_cap > 50)) out.push_back("--g-cap must be in 0..50");
  switch (job.command) {
    case Command::Family:
      if (!job.F.empty()) out.push_back("family builds F itself; drop --F");
      if (job.q < 2) out.push_back("family needs --q >= 2");
      break;
    case Command::Climb:
      if (!job.F.empty() && hyp) out.push_back("climb takes either --F or --m/--n/--r, not both");
      if (job.F.empty() && !hyp) out.push_back("climb needs --F or --m/--n/--r");
      if (job.p < 2) out.push_back("--p is required");
      break;
    default:
      if (job.F.empty()) out.push_back("--F is required");
      if (job.p < 2) out.push_back("--p is required");
      if (job.k < 1) out.push_back("--k must be >= 1");
      break;
  }
  return out;
}

JobResult run(const JobSpec& job) {
  JobResult out;
  out.report["schema_version"] = kSchemaVersion;
  out.report["job"] = job_json(job);
  json result = json::object(), witnesses = json::object(), notes = json::array();
  std::string human;
  try {
    const auto problems = job_problems(job);
    if (!problems.empty()) {
      std::string msg;
      for (const auto& s : problems) msg += (msg.empty() ? "" : "; ") + s;
      fail(ErrorCode::InvalidArgument, msg);
    }
    Workspace ws;
    ws.seed = job.seed;
    Ctx c{job, ws, out, result, witnesses, notes, human};
    switch (job.command) {
      case Command::Analyze: analyze(c); break;
      case Command::CheckTheorem: check(c); break;
      case Command::Climb: climb_cmd(c); break;
      case Command::Family: family(c); break;
      case Command::Genus: genus(c); break;
    }
    out.report["result"] = result;
  } catch (const std::exception& ex) {
    out.exit_code = 2;
    out.report["verdict"] = "error";
    out.report["error"] = error_json(ex);
    human = "error: " + out.report["error"]["code"].get<std::string>() + ": " + ex.what() + "\n";
  }
  out.report["witnesses"] = witnesses;
  out.report["notes"] = notes;
  if (!notes.empty()) {
    human += "\nnotes:\n";
    for (const auto& n : notes) human += "  - " + n.get<std::string>() + "\n";
  }
  out.human = human;
  return out;
}

std::string render(const JobResult& r, OutputFormat format) {
  if (format == OutputFormat::Human) return r.human;
  return r.report.dump(2) + "\n";
}

}  // namespace towerlab
