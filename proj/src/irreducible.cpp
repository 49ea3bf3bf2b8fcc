#include "towerlab/irreducible.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "towerlab/omfactor.hpp"

namespace towerlab {

namespace {

// Power series in u with coefficients in R[y]: s[k] is the u^k coefficient.
using Series = std::vector<FFPoly>;

struct XGcd {
  FFPoly g, s, t;
};

XGcd xgcd(const FFPoly& a, const FFPoly& b) {
  const FieldPtr& K = a.field();
  FFPoly r0 = a, r1 = b;
  FFPoly s0 = FFPoly::constant(K, 1), s1(K);
  FFPoly t0(K), t1 = FFPoly::constant(K, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Elem il = K->inv(r0.lead());
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

Series series_mul(const Series& a, const Series& b, std::size_t N, const FieldPtr& R) {
  Series r(N, FFPoly(R));
  for (std::size_t i = 0; i < a.size() && i < N; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < N; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

// f = G * H mod u^N with G = g0, H = h0 mod u; f monic in y.
std::pair<Series, Series> lift_pair(const Series& f, const FFPoly& g0, const FFPoly& h0, std::size_t N) {
  const FieldPtr& R = g0.field();
  const XGcd x = xgcd(g0, h0);
  require(x.g.degree() == 0, ErrorCode::Internal, "local factors are not coprime");
  Series G(N, FFPoly(R)), H(N, FFPoly(R));
  G[0] = g0;
  H[0] = h0;
  for (std::size_t k = 1; k < N; ++k) {
    FFPoly e = k < f.size() ? f[k] : FFPoly(R);
    for (std::size_t i = 1; i < k; ++i) e = e - G[i] * H[k - i];
    auto [q, gk] = divmod(e * x.t, g0);
    H[k] = e * x.s + q * h0;
    G[k] = std::move(gk);
  }
  return {std::move(G), std::move(H)};
}

std::vector<Series> lift_all(Series f, const std::vector<FFPoly>& g, std::size_t N) {
  std::vector<Series> out;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    FFPoly rest = FFPoly::constant(g[i].field(), 1);
    for (std::size_t j = i + 1; j < g.size(); ++j) rest = rest * g[j];
    auto [G, H] = lift_pair(f, g[i], rest, N);
    out.push_back(std::move(G));
    f = std::move(H);
  }
  out.push_back(std::move(f));
  return out;
}

std::optional<BivarPoly> divide_exact(const BivarPoly& F, const BivarPoly& H) {
  const FieldPtr& K = F.field();
  const int dh = H.deg_y();
  const FFPoly lh = H.ycoeff(static_cast<std::size_t>(dh));
  BivarPoly rem = F, quo(K);
  while (!rem.is_zero() && rem.deg_y() >= dh) {
    auto [q, r] = divmod(rem.ycoeff(static_cast<std::size_t>(rem.deg_y())), lh);
    if (!r.is_zero()) return std::nullopt;
    const BivarPoly term = BivarPoly::from_x(q) * BivarPoly::y(K).pow(static_cast<unsigned>(rem.deg_y() - dh));
    quo = quo + term;
    rem = rem - term * H;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

std::vector<RatPlace> candidate_places(const BivarPoly& F, bool with_discriminant) {
  std::vector<RatPlace> out{RatPlace::infinity(F.field())};
  auto add_zeros = [&](const FFPoly& a) {
    if (a.degree() < 1) return;
    for (const auto& fc : poly_factor(a)) {
      const RatPlace P = RatPlace::finite(fc.poly);
      if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
    }
  };
  add_zeros(F.ycoeff(0));
  add_zeros(F.ycoeff(static_cast<std::size_t>(F.deg_y())));
  if (with_discriminant) add_zeros(discriminant_y(F));
  return out;
}

bool local_degree_certificate(const BivarPoly& F, const std::vector<RatPlace>& places, Workspace& ws) {
  const int m = F.deg_y();
  std::vector<bool> possible(static_cast<std::size_t>(m) + 1, true);
  for (const auto& P : places) {
    std::vector<PlaceExt> pls;
    try {
      pls = places_above(F, P, Side::X, kDefaultMaxDepth, ws);
    } catch (const Error&) {
      continue;
    }
    std::vector<bool> sums(static_cast<std::size_t>(m) + 1, false);
    sums[0] = true;
    for (const auto& pl : pls) {
      const int w = pl.e * pl.f;
      for (int s = m; s >= w; --s)
        if (sums[static_cast<std::size_t>(s - w)]) sums[static_cast<std::size_t>(s)] = true;
    }
    bool proper = false;
    for (int s = 1; s < m; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
      proper = proper || possible[static_cast<std::size_t>(s)];
    }
    if (!proper) return true;
  }
  return false;
}

BivarPoly primitive_over(const BivarPoly& H) {
  const FFPoly c = H.content_x();
  if (c.degree() <= 0) return H;
  std::vector<FFPoly> ys;
  for (const auto& a : H.ycoeffs()) ys.push_back(a / c);
  return BivarPoly(H.field(), std::move(ys));
}

// Pseudo-remainder of A by B in K[x][y].
BivarPoly prem(BivarPoly A, const BivarPoly& B) {
  const FieldPtr& K = A.field();
  const int db = B.deg_y();
  const BivarPoly lb = BivarPoly::from_x(B.ycoeff(static_cast<std::size_t>(db)));
  while (!A.is_zero() && A.deg_y() >= db) {
    const BivarPoly la = BivarPoly::from_x(A.ycoeff(static_cast<std::size_t>(A.deg_y())));
    A = lb * A - la * BivarPoly::y(K).pow(static_cast<unsigned>(A.deg_y() - db)) * B;
  }
  return A;
}

// gcd in K(x)[y], primitive over K[x] (primitive PRS).
BivarPoly gcd_y(BivarPoly A, BivarPoly B) {
  A = primitive_over(A);
  B = primitive_over(B);
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    BivarPoly R = prem(A, B);
    A = std::move(B);
    B = R.is_zero() ? R : primitive_over(R);
  }
  return A;
}

// G with G^p = F when every exponent of F is divisible by p.
BivarPoly pth_root(const BivarPoly& F) {
  const FiniteField& K = *F.field();
  const std::size_t p = K.characteristic();
  std::vector<FFPoly> ys;
  for (std::size_t j = 0; j < F.ycoeffs().size(); j += p) {
    const FFPoly a = F.ycoeff(j);
    const auto& c = a.coeffs();
    std::vector<Elem> r;
    for (std::size_t i = 0; i < c.size(); i += p) r.push_back(K.frobenius_root(c[i], 1));
    ys.push_back(FFPoly(F.field(), std::move(r)));
  }
  return BivarPoly(F.field(), std::move(ys));
}

constexpr std::size_t kMaxLocalFactors = 12;

IrreducibilityResult hensel(const BivarPoly& F, Workspace& ws) {
  const FieldPtr& K = F.field();
  const std::uint32_t p = K->characteristic();
  const int m = F.deg_y();
  const std::size_t N = static_cast<std::size_t>(F.deg_x()) + 1;

  // good specialization x0 with the fewest local factors
  FieldPtr R;
  Embedding emb = Embedding::identity(K);
  BivarPoly FR = F;
  Elem x0 = 0;
  std::vector<FFPoly> local;
  for (std::uint32_t d = 1; d <= 8 && local.empty(); ++d) {
    R = d == 1 ? K : ws.fields.get(p, K->degree() * d);
    emb = d == 1 ? Embedding::identity(K) : make_embedding(K, R);
    FR = F.mapped(emb);
    int tried = 0;
    for (Elem v = 0; v < R->size() && tried < 16; ++v) {
      if (FR.ycoeff(static_cast<std::size_t>(m)).eval(v) == 0) continue;
      const FFPoly f0 = FR.eval_x(v);
      if (poly_gcd(f0, f0.derivative()).degree() > 0) continue;
      ++tried;
      const auto facs = poly_factor(f0, ws.seed);
      if (facs.size() == 1) return {true, "hensel", std::nullopt};
      if (local.empty() || facs.size() < local.size()) {
        x0 = v;
        local.clear();
        for (const auto& fc : facs) local.push_back(fc.poly);
      }
    }
  }
  require(!local.empty(), ErrorCode::Inconclusive, "no squarefree specialization found");
  require(local.size() <= kMaxLocalFactors, ErrorCode::Inconclusive,
          "too many local factors for recombination: " + std::to_string(local.size()));

  const FiniteField& RF = *R;
  std::vector<FFPoly> A;  // coefficients of y^j as polynomials in u = x - x0
  for (int j = 0; j <= m; ++j) A.push_back(FR.ycoeff(static_cast<std::size_t>(j)).taylor_shift(x0));
  const FFPoly& lcu = A.back();
  std::vector<Elem> inv(N, 0);
  inv[0] = RF.inv(lcu.coeff(0));
  for (std::size_t k = 1; k < N; ++k) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc = RF.add(acc, RF.mul(lcu.coeff(i), inv[k - i]));
    inv[k] = RF.neg(RF.mul(inv[0], acc));
  }
  Series f(N, FFPoly(R));
  for (std::size_t k = 0; k < N; ++k) {
    std::vector<Elem> cy(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 0; j <= m; ++j) {
      Elem acc = 0;
      for (std::size_t i = 0; i <= k; ++i)
        acc = RF.add(acc, RF.mul(inv[i], A[static_cast<std::size_t>(j)].coeff(k - i)));
      cy[static_cast<std::size_t>(j)] = acc;
    }
    f[k] = FFPoly(R, std::move(cy));
  }
  const std::vector<Series> lifted = lift_all(f, local, N);

  Series lc_series(N, FFPoly(R));
  for (std::size_t k = 0; k < N; ++k) lc_series[k] = FFPoly::constant(R, lcu.coeff(k));

  const std::size_t r = local.size();
  for (std::size_t size = 1; size <= r / 2; ++size) {
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      Series prod = lc_series;
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) prod = series_mul(prod, lifted[i], N, R);
      int dy = 0;
      for (const auto& c : prod) dy = std::max(dy, c.degree());
      std::vector<FFPoly> ys;
      for (int j = 0; j <= dy; ++j) {
        std::vector<Elem> cu(N, 0);
        for (std::size_t k = 0; k < N; ++k) cu[k] = prod[k].coeff(static_cast<std::size_t>(j));
        ys.push_back(FFPoly(R, std::move(cu)).taylor_shift(RF.neg(x0)));
      }
      BivarPoly H = primitive_over(BivarPoly(R, std::move(ys)));
      if (H.deg_y() < 1) continue;
      H = H.scaled(RF.inv(H.ycoeff(static_cast<std::size_t>(H.deg_y())).lead()));
      std::vector<FFPoly> back;
      bool in_base = true;
      for (const auto& a : H.ycoeffs()) {
        std::vector<Elem> cs;
        for (Elem c : a.coeffs()) {
          const auto pre = emb.preimage(c);
          if (!pre) {
            in_base = false;
            break;
          }
          cs.push_back(*pre);
        }
        if (!in_base) break;
        back.push_back(FFPoly(K, std::move(cs)));
      }
      if (!in_base) continue;
      BivarPoly HK(K, std::move(back));
      if (divide_exact(F, HK)) return {false, "hensel", HK};
    }
  }
  return {true, "hensel", std::nullopt};
}

}  // namespace

BivarPoly primitive_part_x(const BivarPoly& F) { return primitive_over(F); }

IrreducibilityResult irreducibility(const BivarPoly& Fin, Workspace& ws) {
  require(Fin.deg_y() >= 1, ErrorCode::InvalidArgument, "polynomial has degree 0 in y");
  const BivarPoly F = primitive_part_x(Fin);
  if (F.deg_y() == 1) return {true, "degree one", std::nullopt};

  const bool separable = !F.derivative_y().is_zero();
  const auto places = candidate_places(F, separable);
  for (const auto& P : places)
    if (eisenstein_at(F, P)) return {true, "eisenstein at " + P.to_string(), std::nullopt};
  if (!separable) {
    if (F.derivative_x().is_zero()) return {false, "p-th power", pth_root(F)};
    // irreducible in K[x, y] iff no factor in K[y] and irreducible over K(y)
    const BivarPoly T = F.transposed();
    const FFPoly cy = T.content_x();
    if (cy.degree() > 0) return {false, "content in y", BivarPoly::from_y(cy)};
    IrreducibilityResult r = irreducibility(T, ws);
    r.method += " (in x over K(y))";
    if (r.factor) r.factor = r.factor->transposed();
    return r;
  }
  const BivarPoly g = gcd_y(F, F.derivative_y());
  if (g.deg_y() > 0) return {false, "inseparable factor", g};
  if (local_degree_certificate(F, places, ws)) return {true, "local degrees", std::nullopt};
  return hensel(F, ws);
}

bool is_irreducible_over_ratfield(const BivarPoly& F, Workspace& ws) { return irreducibility(F, ws).irreducible; }

bool is_irreducible_over_ratfield(const BivarPoly& F) {
  Workspace ws;
  return is_irreducible_over_ratfield(F, ws);
}

bool is_absolutely_irreducible(const BivarPoly& F, Workspace& ws) {
  if (!is_irreducible_over_ratfield(F, ws)) return false;
  const FieldPtr& K = F.field();
  int m = F.deg_y();
  for (int l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    const FieldPtr L = ws.fields.get(K->characteristic(), K->degree() * static_cast<std::uint32_t>(l));
    if (!is_irreducible_over_ratfield(F.mapped(make_embedding(K, L)), ws)) return false;
  }
  return true;
}

}  // namespace towerlab
