#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace dualbent {

/// Integer encoding of a field element: sum c_j p^j where c_j is the
/// coefficient of the degree-j basis monomial.
using Code = std::uint32_t;

/// Largest field order for which discrete-log tables are built.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

/// GF(p^k) in a polynomial basis.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial,
/// ordering candidates by the coefficient tuple (c_0, ..., c_{k-1}) with c_0 as
/// the leading key. The primitive element is the smallest code whose
/// multiplicative order is p^k - 1. Both choices are deterministic, so two
/// constructions of the same (p, k) yield identical tables.
///
/// Immutable after construction; all members are safe for concurrent reads.
class ExtField {
 public:
  ExtField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  /// p^k.
  std::uint32_t size() const { return q_; }
  /// Low-order coefficients c_0..c_{k-1} of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code primitive() const { return alpha_; }

  bool contains(Code x) const { return x < q_; }
  std::uint32_t digit(Code x, std::uint32_t j) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  /// Multiplication by the prime-field scalar c.
  Code scale(std::uint32_t c, Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// x^(p^times).
  Code frobenius(Code x, std::uint32_t times = 1) const;

  /// Discrete log base primitive(); x must be nonzero.
  std::uint32_t log(Code x) const;
  /// primitive()^i.
  Code exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  /// Absolute trace Tr_{p^k/p}(x), an integer in [0, p).
  std::uint32_t trace(Code x) const { return trace_[x]; }
  /// Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
  int eta(Code x) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Code x) const;

  bool same_as(const ExtField& other) const {
    return this == &other || (p_ == other.p_ && k_ == other.k_);
  }

 private:
  Code poly_mul(Code a, Code b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  Code alpha_ = 0;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

/// Process-wide cache of fields; repeated calls return the same instance.
FieldPtr get_field(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);
/// Distinct prime factors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// An element bound to its field; arithmetic between different fields throws.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Code code);

  const ExtField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& o) const;

 private:
  const ExtField& checked(const FieldElem& o) const;

  FieldPtr field_;
  Code code_;
};

/// The field homomorphism GF(p^t) -> GF(p^k) for t | k sending the class of X
/// to the smallest-code root of the subfield modulus. restrict() is its inverse
/// on the image {y : y^(p^t) = y}.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr sub, FieldPtr big);

  const ExtField& sub() const { return *sub_; }
  const ExtField& big() const { return *big_; }
  Code root() const { return root_; }

  Code embed(Code x) const { return forward_.at(x); }
  bool in_image(Code y) const { return inverse_.count(y) != 0; }
  /// Throws OutsideDomain if y is not in the subfield image.
  Code restrict(Code y) const;

 private:
  FieldPtr sub_;
  FieldPtr big_;
  Code root_ = 0;
  std::vector<Code> forward_;
  std::unordered_map<Code, Code> inverse_;
};

using EmbeddingPtr = std::shared_ptr<const SubfieldEmbedding>;

/// Cached embedding GF(p^t) -> GF(p^k); throws InvalidArgument unless t | k.
EmbeddingPtr get_embedding(std::uint32_t p, std::uint32_t t, std::uint32_t k);

/// Tr_{p^k/p^t}(x) computed inside `big`; the result lies in the subfield image.
Code rel_trace_in_big(const ExtField& big, std::uint32_t t, Code x);

/// Tr_{p^k/p^t}(x) returned as an element of the standalone GF(p^t).
FieldElem rel_trace(const FieldElem& x, std::uint32_t t);

/// Canonical enumeration of a field: codes 0, 1, ..., q - 1.
std::vector<FieldElem> enumerate(const FieldPtr& field);

}  // namespace dualbent
