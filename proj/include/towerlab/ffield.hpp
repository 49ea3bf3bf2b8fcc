#pragma once

// Finite fields GF(p^k) and their elements.
//
// An element is stored packed: the base-p digits of its coefficient vector
// over GF(p) (constant digit first), so that GF(p^k) is {0, ..., p^k - 1}.
// The integer order on packed values is the deterministic order used
// whenever a "smallest" root or element has to be chosen.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/error.hpp"

namespace towerlab {

using Elem = std::uint64_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(std::uint64_t n);

class FiniteField {
 public:
  /// GF(p^k) defined by the smallest monic irreducible of degree k over
  /// GF(p), where candidates are ordered by the base-p integer formed by
  /// their non-leading coefficients. GF(p) itself uses the modulus x.
  static FieldPtr make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  /// Monic, low-to-high, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_as(const FiniteField& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  /// Class of X modulo the defining polynomial.
  Elem generator() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Signed exponent; negative exponents invert first.
  Elem pow_signed(Elem a, std::int64_t e) const;
  /// The unique c with c^(p^s) = a.
  Elem frobenius_root(Elem a, std::uint32_t s) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  /// "0", "3", or a polynomial in the generator w such as "w^2+w+1".
  std::string format(Elem a) const;
  /// "GF(p)" or "GF(p^k)".
  std::string name() const;

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Elem> exp_;           // exp_[i] = prim^i, length 2*(size-1)
};

/// Value type pairing a field with one of its elements.
class FFElem {
 public:
  FFElem(FieldPtr field, Elem v) : field_(std::move(field)), v_(v) {}

  const FieldPtr& field() const { return field_; }
  Elem value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem operator-() const { return {field_, field_->neg(v_)}; }
  FFElem pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }
  FFElem inverse() const { return {field_, field_->inv(v_)}; }

  bool operator==(const FFElem& o) const {
    return v_ == o.v_ && field_->same_as(*o.field_);
  }

  std::string to_string() const { return field_->format(v_); }

 private:
  void check_same(const FFElem& o) const;

  FieldPtr field_;
  Elem v_;
};

/// Field embedding src -> dst fixing GF(p), determined by the image of the
/// generator of src (a root of src's modulus in dst).
struct Embedding {
  FieldPtr src;
  FieldPtr dst;
  Elem generator_image = 0;

  Elem apply(Elem a) const;
  /// Inverse image when a lies in the image of src.
  std::optional<Elem> preimage(Elem a) const;
  /// this followed by next (src -> next.dst).
  Embedding then(const Embedding& next) const;

  static Embedding identity(const FieldPtr& f);
};

/// Embedding sending the generator of src to the smallest root of src's
/// modulus in dst. Throws NoEmbedding unless src.degree() | dst.degree().
Embedding make_embedding(const FieldPtr& src, const FieldPtr& dst);

FFElem embed(const FFElem& e, const FieldPtr& target);

/// c with c^q = b, q a power of the characteristic.
FFElem qth_root(const FFElem& b, std::uint64_t q);

/// Cache of fields GF(p^k) keyed by k for one characteristic. Not
/// thread-safe; each analysis owns one.
class FieldCache {
 public:
  FieldPtr get(std::uint32_t p, std::uint32_t k);

 private:
  std::vector<std::pair<std::uint64_t, FieldPtr>> fields_;
};

}  // namespace towerlab
