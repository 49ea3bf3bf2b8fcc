#include "towerlab/pyramid.hpp"

#include <algorithm>
#include <numeric>

#include "towerlab/error.hpp"

namespace towerlab {

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::vector<std::string> hypothesis_violations(const RamHypotheses& h) {
  std::vector<std::string> out;
  const auto g = [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); };
  if (h.m < 2) out.push_back("m = " + std::to_string(h.m) + " < 2");
  if (h.p < 2) out.push_back("characteristic p = " + std::to_string(h.p) + " < 2");
  if (h.n < 1) out.push_back("n = " + std::to_string(h.n) + " < 1");
  if (h.r < 1) out.push_back("r = " + std::to_string(h.r) + " < 1");
  if (!out.empty()) return out;
  if (g(h.m, h.p) != 1) out.push_back("gcd(m, p) = " + std::to_string(g(h.m, h.p)) + " (P_f(y) not tame)");
  if (g(h.n, h.m) != 1) out.push_back("gcd(n, m) = " + std::to_string(g(h.n, h.m)));
  if (h.r % h.p != 0) out.push_back("p does not divide r (Q' not wild)");
  if (g(h.r, h.m) != 1) out.push_back("gcd(r, m) = " + std::to_string(g(h.r, h.m)));
  if (h.d_prime() < 0) out.push_back("negative different bound d' = " + std::to_string(h.d_prime()));
  return out;
}

namespace {

void check_hypotheses(const RamHypotheses& h) {
  const auto v = hypothesis_violations(h);
  if (v.empty()) return;
  std::string msg = "invalid hypotheses:";
  for (const auto& s : v) msg += " " + s + ";";
  msg.pop_back();
  fail(ErrorCode::InvalidHypotheses, msg);
}

BigInt power(std::int64_t b, int e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

}  // namespace

std::int64_t abhyankar_e(std::int64_t e1, std::int64_t e2, std::int64_t p) {
  require(e1 >= 1 && e2 >= 1 && p >= 2, ErrorCode::InvalidArgument, "ramification indices must be positive");
  require(e1 % p != 0 || e2 % p != 0, ErrorCode::BothWild,
          "both indices " + std::to_string(e1) + " and " + std::to_string(e2) + " divisible by p = " +
              std::to_string(p));
  return std::lcm(e1, e2);
}

BigInt different_transitivity(const BigInt& d_upper, const BigInt& e_upper, const BigInt& d_lower) {
  require(d_upper >= 0 && d_lower >= 0 && e_upper >= 1, ErrorCode::InvalidArgument,
          "different exponents must be >= 0 and e >= 1");
  return e_upper * d_lower + d_upper;
}

std::string to_string(ClimbVerdict v) { return v == ClimbVerdict::InfiniteGenus ? "InfiniteGenus" : "Inconclusive"; }
std::string to_string(SeriesVerdict v) { return v == SeriesVerdict::Diverges ? "Diverges" : "Inconclusive"; }

PyramidReport climb(const RamHypotheses& h, int levels) {
  check_hypotheses(h);
  require(levels >= 0, ErrorCode::InvalidArgument, "levels must be non-negative");
  PyramidReport rep;
  rep.hypotheses = h;
  rep.c = Rational(1, 2);
  bool all_half = true;
  for (int i = 0; i <= levels; ++i) {
    LevelBound lb;
    lb.i = i;
    lb.degree = power(h.m, i);
    lb.bound = lb.degree * h.d_prime() + (lb.degree - 1) * (1 - h.r);
    lb.ratio = Rational(lb.bound, lb.degree);
    lb.meets_half = 2 * lb.bound >= lb.degree;
    all_half = all_half && lb.meets_half;
    rep.levels.push_back(std::move(lb));
  }
  const SeriesReport s =
      series_divergence(SequenceSpec::constant(rep.c), SequenceSpec::constant(Rational(h.m)), levels);
  rep.partial_sums = s.partial_sums;
  rep.verdict = (all_half && s.verdict == SeriesVerdict::Diverges) ? ClimbVerdict::InfiniteGenus
                                                                    : ClimbVerdict::Inconclusive;
  rep.notes.push_back("d(P'|P) >= m^i d' + (m^i - 1)(1 - r) >= [T_i:T_0] / 2 gives c_i = 1/2, not the "
                      "c_i = 2 sometimes quoted with this bound; the series diverges either way");
  return rep;
}

const PyramidNode& PyramidWalk::node(int j, int k) const {
  for (const auto& nd : nodes)
    if (nd.j == j && nd.k == k) return nd;
  fail(ErrorCode::InvalidArgument, "no node (" + std::to_string(j) + ", " + std::to_string(k) + ")");
}

PyramidWalk pyramid_walk(const RamHypotheses& h, int i) {
  check_hypotheses(h);
  require(i >= 0, ErrorCode::InvalidArgument, "level must be non-negative");
  PyramidWalk w;
  w.level = i;
  auto name_of = [i](int j, int k) -> std::string {
    if (j == 0 && k == i + 1) return "P'";
    if (j == 0 && k == i && i > 0) return "P";
    if (k == 1 && j == i) return "Q'";
    if (k == 1) return "Q" + std::to_string(j + 1);
    if (k == 0) return "P" + std::to_string(j);
    return "*";
  };
  // rows bottom-up so that children exist when a node is labelled
  for (int k = 0; k <= i + 1; ++k) {
    for (int j = 0; j + k <= i + 1; ++j) {
      PyramidNode nd{j, k, name_of(j, k), 0, 0};
      if (k == 1) {
        nd.e_left = j < i ? h.n : h.r;
        nd.e_right = j < i ? h.m : 0;
      } else if (k >= 2) {
        const std::int64_t a = w.node(j + 1, k - 1).e_left;  // right child over the common subfield
        const std::int64_t b = w.node(j, k - 1).e_right;     // left child over the common subfield
        const std::int64_t l = abhyankar_e(a, b, h.p);
        nd.e_left = l / b;
        nd.e_right = l / a;
      }
      w.nodes.push_back(std::move(nd));
    }
  }

  struct DE {
    BigInt d, e;
  };
  // d and e over P_i, descending along tame edges
  std::function<DE(int, int)> down = [&](int j, int k) -> DE {
    if (k == 0) return {0, 1};
    if (j == i && k == 1) return {h.d_prime(), h.r};
    const auto& nd = w.node(j, k);
    if (j + 1 <= i && nd.e_right % h.p != 0) {
      const DE c = down(j + 1, k - 1);
      return {different_transitivity(nd.e_right - 1, nd.e_right, c.d), c.e * nd.e_right};
    }
    if (i <= j + k - 1 && nd.e_left % h.p != 0) {
      const DE c = down(j, k - 1);
      return {different_transitivity(nd.e_left - 1, nd.e_left, c.d), c.e * nd.e_left};
    }
    fail(ErrorCode::Internal, "no tame path down to P_i");
  };
  const DE top = down(0, i + 1);
  const DE mid = down(0, i);
  w.d_top_over_Pi = top.d;
  w.d_P_over_Pi = mid.d;
  w.e_top_over_P = w.node(0, i + 1).e_left;
  require(top.e == mid.e * w.e_top_over_P, ErrorCode::Internal, "ramification indices disagree along the two paths");
  w.bound = top.d - w.e_top_over_P * mid.d;
  return w;
}

std::string render_pyramid(const PyramidWalk& w) {
  constexpr int W = 6;
  const int i = w.level;
  const int width = (2 * (i + 1) + 2) * W + 4;
  auto label = [](std::int64_t e) { return e == 0 ? std::string("?") : std::to_string(e); };
  auto put = [](std::string& line, int x, const std::string& s) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      const int pos = x + static_cast<int>(c);
      if (pos >= 0 && pos < static_cast<int>(line.size())) line[static_cast<std::size_t>(pos)] = s[c];
    }
  };
  std::string out;
  for (int k = i + 1; k >= 0; --k) {
    std::string nodes(static_cast<std::size_t>(width), ' ');
    std::string edges(static_cast<std::size_t>(width), ' ');
    for (const auto& nd : w.nodes) {
      if (nd.k != k) continue;
      const int x = (2 * nd.j + k + 1) * W;
      put(nodes, x - static_cast<int>(nd.name.size() / 2), nd.name);
      if (k == 0) continue;
      const std::string l = label(nd.e_left);
      put(edges, x - W / 2, "/");
      put(edges, x - W / 2 - static_cast<int>(l.size()), l);
      put(edges, x + W / 2, "\\");
      put(edges, x + W / 2 + 1, label(nd.e_right));
    }
    auto trim = [](std::string s) {
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    const std::string tag = "T_" + std::to_string(k);
    out += tag + std::string(6 - tag.size(), ' ') + trim(nodes) + "\n";
    if (k > 0) out += std::string(6, ' ') + trim(edges) + "\n";
  }
  return out;
}

SequenceSpec SequenceSpec::constant(Rational v) {
  SequenceSpec s;
  s.kind = Kind::Constant;
  s.values = {std::move(v)};
  return s;
}

SequenceSpec SequenceSpec::periodic(std::vector<Rational> period) {
  require(!period.empty(), ErrorCode::InvalidArgument, "empty period");
  SequenceSpec s;
  s.kind = Kind::Periodic;
  s.values = std::move(period);
  return s;
}

SequenceSpec SequenceSpec::explicit_terms(std::function<Rational(int)> f, std::optional<Rational> lower,
                                          std::optional<Rational> upper) {
  SequenceSpec s;
  s.kind = Kind::Explicit;
  s.term = std::move(f);
  s.lower_bound = std::move(lower);
  s.upper_bound = std::move(upper);
  return s;
}

Rational SequenceSpec::at(int i) const {
  switch (kind) {
    case Kind::Constant:
      return values.front();
    case Kind::Periodic:
      return values[static_cast<std::size_t>(i - 1) % values.size()];
    case Kind::Explicit:
      return term(i);
  }
  return 0;
}

std::optional<Rational> SequenceSpec::certified_min() const {
  if (kind == Kind::Explicit) return lower_bound;
  return *std::min_element(values.begin(), values.end());
}

std::optional<Rational> SequenceSpec::certified_max() const {
  if (kind == Kind::Explicit) return upper_bound;
  return *std::max_element(values.begin(), values.end());
}

SeriesReport series_divergence(const SequenceSpec& c, const SequenceSpec& degrees, int horizon) {
  require(horizon >= 0, ErrorCode::InvalidArgument, "horizon must be non-negative");
  const auto cmin = c.certified_min();
  require(!cmin || *cmin >= 0, ErrorCode::InvalidArgument, "negative lower bound for c_i");
  const auto dmin = degrees.certified_min();
  require(!dmin || *dmin > 0, ErrorCode::InvalidArgument, "step degrees must be positive");

  SeriesReport rep;
  Rational sum = 0;
  for (int i = 1; i <= horizon; ++i) {
    const Rational ci = c.at(i);
    const Rational di = degrees.at(i);
    require(ci >= 0, ErrorCode::InvalidArgument, "negative term c_" + std::to_string(i));
    require(di > 0, ErrorCode::InvalidArgument, "non-positive step degree at " + std::to_string(i));
    sum += ci / di;
    rep.partial_sums.push_back(sum);
  }
  const auto dmax = degrees.certified_max();
  if (cmin && dmax && *cmin > 0) {
    rep.verdict = SeriesVerdict::Diverges;
    rep.reason = "terms bounded below by " + format_rational(*cmin / *dmax);
  } else {
    rep.verdict = SeriesVerdict::Inconclusive;
    rep.reason = "no positive lower bound certified for the terms";
  }
  return rep;
}

}  // namespace towerlab
