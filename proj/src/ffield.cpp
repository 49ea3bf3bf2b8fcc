#include "towerlab/ffield.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "towerlab/poly.hpp"

namespace towerlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::PoleAtPlace: return "PoleAtPlace";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::Inseparable: return "Inseparable";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::InconsistentOracle: return "InconsistentOracle";
    case ErrorCode::BothWild: return "BothWild";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidHypotheses: return "InvalidHypotheses";
    case ErrorCode::IdentificationFailed: return "IdentificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 62;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldPtr FiniteField::make(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(k >= 1, ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    require(size < kSizeLimit / p, ErrorCode::InvalidArgument,
            "field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") too large");
    size *= p;
  }
  if (k == 1) return FieldPtr(new FiniteField(p, {0, 1}));

  FieldPtr base = make(p, 1);
  std::vector<std::uint32_t> mod(k + 1, 0);
  mod[k] = 1;
  for (std::uint64_t n = 0; n < size; ++n) {
    std::uint64_t rest = n;
    std::vector<Elem> c(k + 1, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[k] = 1;
    if (c[0] == 0) continue;
    if (is_irreducible(FFPoly(base, c))) {
      for (std::uint32_t i = 0; i < k; ++i) mod[i] = static_cast<std::uint32_t>(c[i]);
      return FieldPtr(new FiniteField(p, mod));
    }
  }
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  size_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i) size_ *= p_;
  if (size_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t n = size_ - 1;
  if (n == 0) return;
  const auto qs = prime_factors(n);
  Elem prim = 0;
  for (Elem g = 1; g < size_; ++g) {
    bool ok = true;
    for (auto q : qs) {
      Elem r = 1, b = g;
      for (std::uint64_t e = n / q; e; e >>= 1) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
      }
      if (r == 1) { ok = false; break; }
    }
    if (ok) { prim = g; break; }
  }
  exp_.resize(2 * n);
  log_.assign(size_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    exp_[i + n] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, prim);
  }
}

Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FiniteField::generator() const { return k_ == 1 ? 0 : p_; }

Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem r = 0, mult = 1;
  while (a || b) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, mult = 1;
  while (a) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  if (!exp_.empty()) return exp_[std::size_t{log_[a]} + log_[b]];
  return mul_slow(a, b);
}

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (std::size_t top = prod.size() - 1; top >= k_; --top) {
    const std::uint64_t c = prod[top];
    if (!c) continue;
    prod[top] = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const std::size_t pos = top - k_ + i;
      prod[pos] = (prod[pos] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  Elem r = 0;
  for (std::size_t i = k_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Elem FiniteField::inv(Elem a) const {
  require(a != 0, ErrorCode::Internal, "inverse of zero in " + name());
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FiniteField::pow_signed(Elem a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

Elem FiniteField::frobenius_root(Elem a, std::uint32_t s) const {
  const std::uint32_t j = (k_ - s % k_) % k_;
  for (std::uint32_t i = 0; i < j; ++i) a = pow(a, p_);
  return a;
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Elem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem r = 0;
  for (std::size_t i = std::min<std::size_t>(d.size(), k_); i-- > 0;) r = r * p_ + d[i] % p_;
  return r;
}

std::string FiniteField::format(Elem a) const {
  if (k_ == 1 || a < p_) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = k_; i-- > 0;) {
    if (!d[i]) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) { os << d[i]; continue; }
    if (d[i] != 1) os << d[i] << '*';
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string FiniteField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

void FFElem::check_same(const FFElem& o) const {
  require(field_->same_as(*o.field_), ErrorCode::InvalidArgument,
          "mixing elements of " + field_->name() + " and " + o.field_->name());
}

FFElem FFElem::operator+(const FFElem& o) const { check_same(o); return {field_, field_->add(v_, o.v_)}; }
FFElem FFElem::operator-(const FFElem& o) const { check_same(o); return {field_, field_->sub(v_, o.v_)}; }
FFElem FFElem::operator*(const FFElem& o) const { check_same(o); return {field_, field_->mul(v_, o.v_)}; }
FFElem FFElem::operator/(const FFElem& o) const { check_same(o); return {field_, field_->div(v_, o.v_)}; }

Elem Embedding::apply(Elem a) const {
  const auto d = src->digits(a);
  Elem r = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    r = dst->add(dst->mul(r, generator_image), dst->from_int(d[i]));
  return r;
}

std::optional<Elem> Embedding::preimage(Elem a) const {
  const std::uint32_t p = src->characteristic();
  const std::uint32_t ks = src->degree();
  const std::uint32_t kd = dst->degree();
  // Solve sum_i c_i * g^i = a over GF(p): kd equations, ks unknowns.
  std::vector<std::vector<std::int64_t>> m(kd, std::vector<std::int64_t>(ks + 1, 0));
  Elem pw = 1;
  for (std::uint32_t i = 0; i < ks; ++i) {
    const auto d = dst->digits(pw);
    for (std::uint32_t r = 0; r < kd; ++r) m[r][i] = d[r];
    pw = dst->mul(pw, generator_image);
  }
  const auto target = dst->digits(a);
  for (std::uint32_t r = 0; r < kd; ++r) m[r][ks] = target[r];

  auto inv_mod = [p](std::int64_t x) {
    std::int64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivot_col;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < ks && row < kd; ++col) {
    std::uint32_t piv = row;
    while (piv < kd && m[piv][col] == 0) ++piv;
    if (piv == kd) continue;
    std::swap(m[piv], m[row]);
    const std::int64_t iv = inv_mod(m[row][col]);
    for (auto& v : m[row]) v = v * iv % p;
    for (std::uint32_t r = 0; r < kd; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::int64_t f = m[r][col];
      for (std::uint32_t c = 0; c <= ks; ++c) m[r][c] = ((m[r][c] - f * m[row][c]) % p + p) % p;
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::uint32_t r = row; r < kd; ++r)
    if (m[r][ks] != 0) return std::nullopt;
  std::vector<std::uint32_t> sol(ks, 0);
  for (std::uint32_t r = 0; r < row; ++r) sol[pivot_col[r]] = static_cast<std::uint32_t>(m[r][ks]);
  return src->from_digits(sol);
}

Embedding Embedding::then(const Embedding& next) const {
  require(dst->same_as(*next.src), ErrorCode::Internal, "embedding composition mismatch");
  return {src, next.dst, next.apply(generator_image)};
}

Embedding Embedding::identity(const FieldPtr& f) { return {f, f, f->generator()}; }

Embedding make_embedding(const FieldPtr& src, const FieldPtr& dst) {
  require(src->characteristic() == dst->characteristic() && dst->degree() % src->degree() == 0,
          ErrorCode::NoEmbedding, "no embedding of " + src->name() + " into " + dst->name());
  if (src->same_as(*dst)) return {src, dst, dst->generator()};
  if (src->degree() == 1) return {src, dst, 0};
  std::vector<Elem> c;
  for (auto m : src->modulus()) c.push_back(dst->from_int(m));
  const auto roots = roots_in_field(FFPoly(dst, c));
  require(!roots.empty(), ErrorCode::Internal, "modulus has no root in " + dst->name());
  return {src, dst, roots.front()};
}

FFElem embed(const FFElem& e, const FieldPtr& target) {
  return {target, make_embedding(e.field(), target).apply(e.value())};
}

FFElem qth_root(const FFElem& b, std::uint64_t q) {
  const std::uint32_t p = b.field()->characteristic();
  std::uint32_t s = 0;
  std::uint64_t rest = q;
  while (rest > 1 && rest % p == 0) {
    rest /= p;
    ++s;
  }
  require(rest == 1 && s >= 1, ErrorCode::InvalidArgument,
          std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
  return {b.field(), b.field()->frobenius_root(b.value(), s)};
}

FieldPtr FieldCache::get(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t key = (std::uint64_t{p} << 32) | k;
  for (const auto& [kk, f] : fields_)
    if (kk == key) return f;
  auto f = FiniteField::make(p, k);
  fields_.emplace_back(key, f);
  return f;
}

}  // namespace towerlab
