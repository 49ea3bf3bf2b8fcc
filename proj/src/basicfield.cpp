#include "towerlab/basicfield.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "towerlab/irreducible.hpp"

namespace towerlab {

using boost::multiprecision::cpp_int;

std::vector<RatPlace> ramification_locus(const BivarPoly& F) {
  require(F.deg_y() >= 1, ErrorCode::InvalidArgument, "polynomial has degree 0 in y");
  std::vector<RatPlace> out{RatPlace::infinity(F.field())};
  auto add_zeros = [&](const FFPoly& a) {
    if (a.degree() < 1) return;
    for (const auto& fc : poly_factor(a)) {
      const RatPlace P = RatPlace::finite(fc.poly);
      if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
    }
  };
  const FFPoly disc = discriminant_y(F);
  require(!disc.is_zero(), ErrorCode::InvalidArgument, "F has a repeated factor in y");
  add_zeros(disc);
  add_zeros(F.ycoeff(static_cast<std::size_t>(F.deg_y())));
  std::sort(out.begin(), out.end());
  return out;
}

RamTable ramification_table(const BivarPoly& F, int max_depth, Workspace& ws) {
  RamTable rt{F.deg_y(), {}};
  for (const auto& P : ramification_locus(F)) rt.rows.push_back({P, places_above(F, P, Side::X, max_depth, ws)});
  return rt;
}

namespace {

int genus_of(std::int64_t diff_degree, int m) {
  return static_cast<int>((diff_degree - 2 * static_cast<std::int64_t>(m) + 2) / 2);
}

}  // namespace

GenusResult genus_from_table(const RamTable& rt) {
  GenusResult g;
  bool exact = true;
  for (const auto& row : rt.rows) {
    for (const auto& pl : row.places) {
      const std::int64_t w = static_cast<std::int64_t>(pl.f) * row.base.degree();
      const int lo = pl.d_exact.value_or(pl.dmin);
      const int hi = pl.d_exact.value_or(pl.dmax);
      g.diff_lo += lo * w;
      g.diff_hi += hi * w;
      exact = exact && pl.d_exact.has_value();
    }
  }
  // the degree of the different is even
  std::int64_t lo = g.diff_lo + (g.diff_lo & 1);
  std::int64_t hi = g.diff_hi - (g.diff_hi & 1);
  lo = std::max<std::int64_t>(lo, 2 * rt.m - 2);
  require(lo <= hi, ErrorCode::InconsistentOracle, "no even different degree within the bounds");
  g.exact = exact;
  g.genus_lo = genus_of(lo, rt.m);
  g.genus_hi = genus_of(hi, rt.m);
  g.genus = g.genus_lo;
  if (exact) require(g.diff_lo % 2 == 0, ErrorCode::Internal, "odd different degree");
  return g;
}

GenusResult genus_basic(const BivarPoly& F, int max_depth) {
  Workspace ws;
  return genus_basic(F, max_depth, ws);
}

GenusResult genus_basic(const BivarPoly& F, int max_depth, Workspace& ws) {
  return genus_from_table(ramification_table(F, max_depth, ws));
}

std::vector<std::int64_t> place_counts(const BivarPoly& F, int max_degree, Workspace& ws) {
  std::vector<std::int64_t> B(static_cast<std::size_t>(max_degree), 0);
  auto count_above = [&](const RatPlace& P) {
    for (const auto& pl : places_above(F, P, Side::X, kDefaultMaxDepth, ws)) {
      const int deg = pl.f * P.degree();
      if (deg <= max_degree) ++B[static_cast<std::size_t>(deg - 1)];
    }
  };
  count_above(RatPlace::infinity(F.field()));
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& f : monic_irreducibles(F.field(), d)) count_above(RatPlace::finite(f));
  return B;
}

int zeta_genus(const BivarPoly& F, int g_cap) {
  Workspace ws;
  return zeta_genus(F, g_cap, ws);
}

int zeta_genus(const BivarPoly& F, int g_cap, Workspace& ws) {
  require(g_cap >= 0, ErrorCode::InvalidArgument, "g_cap must be non-negative");
  require(is_absolutely_irreducible(F, ws), ErrorCode::InvalidArgument,
          "F is not absolutely irreducible: " + F.to_string());
  const int n = std::max(2 * g_cap, 1);
  const auto B = place_counts(F, n, ws);
  const cpp_int q = F.field()->size();

  // N_k = sum over d | k of d * B_d; S_k = N_k - 1 - q^k
  std::vector<cpp_int> S(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    cpp_int N = 0;
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) N += cpp_int(d) * B[static_cast<std::size_t>(d - 1)];
    S[static_cast<std::size_t>(k)] = N - 1 - boost::multiprecision::pow(q, static_cast<unsigned>(k));
  }
  // t L'(t) = L(t) * sum S_k t^k
  std::vector<cpp_int> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int i = 1; i <= n; ++i) {
    cpp_int acc = 0;
    for (int j = 1; j <= i; ++j) acc += S[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i - j)];
    require(acc % i == 0, ErrorCode::Internal, "non-integral L-polynomial coefficient");
    a[static_cast<std::size_t>(i)] = acc / i;
  }
  for (int g = 0; g <= g_cap; ++g) {
    bool ok = true;
    for (int i = 2 * g + 1; i <= n && ok; ++i) ok = a[static_cast<std::size_t>(i)] == 0;
    for (int i = 0; i <= g && ok; ++i)
      ok = a[static_cast<std::size_t>(2 * g - i)] ==
           boost::multiprecision::pow(q, static_cast<unsigned>(g - i)) * a[static_cast<std::size_t>(i)];
    if (ok) return g;
  }
  fail(ErrorCode::CapTooSmall, "no genus <= " + std::to_string(g_cap) + " fits the place counts");
}

RamTable reconcile_different(RamTable rt, int oracle_genus) {
  const std::int64_t target = 2 * static_cast<std::int64_t>(oracle_genus) - 2 + 2 * static_cast<std::int64_t>(rt.m);
  std::int64_t known = 0;
  PlaceExt* missing = nullptr;
  std::int64_t weight = 0;
  for (auto& row : rt.rows) {
    for (auto& pl : row.places) {
      const std::int64_t w = static_cast<std::int64_t>(pl.f) * row.base.degree();
      if (pl.d_exact) {
        known += *pl.d_exact * w;
        continue;
      }
      require(missing == nullptr, ErrorCode::InvalidArgument, "more than one different exponent is unknown");
      missing = &pl;
      weight = w;
    }
  }
  if (!missing) {
    require(known == target, ErrorCode::InconsistentOracle,
            "different degree " + std::to_string(known) + " disagrees with oracle genus " +
                std::to_string(oracle_genus));
    return rt;
  }
  const std::int64_t rest = target - known;
  require(rest % weight == 0, ErrorCode::InconsistentOracle, "oracle genus leaves a non-integral different exponent");
  const std::int64_t d = rest / weight;
  require(d >= missing->dmin && d <= missing->dmax, ErrorCode::InconsistentOracle,
          "oracle genus requires d = " + std::to_string(d) + " outside [" + std::to_string(missing->dmin) + ", " +
              std::to_string(missing->dmax) + "]");
  missing->d_exact = static_cast<int>(d);
  return rt;
}

}  // namespace towerlab
