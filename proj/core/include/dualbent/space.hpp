#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dualbent/field.hpp"

namespace dualbent {

/// An element of a product space, one field element per component.
struct VecElem {
  std::vector<FieldElem> parts;
};

/// V = GF(p^{n_1}) x ... x GF(p^{n_s}) with the trace inner product
/// <a, b> = sum_j Tr_{p^{n_j}/p}(a_j b_j).
///
/// Elements are encoded as a single integer whose base-p digits are the
/// concatenated part codes, first part most significant. Ascending codes are
/// therefore the lexicographic order across parts, and addition is digit-wise.
class VectorSpace {
 public:
  VectorSpace(std::uint32_t p, std::vector<std::uint32_t> degrees);

  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::size_t components() const { return degrees_.size(); }
  /// n = sum of component degrees.
  std::uint32_t dimension() const { return n_; }
  /// p^n.
  std::uint32_t size() const { return size_; }
  const ExtField& field(std::size_t j) const { return *fields_[j]; }
  const FieldPtr& field_ptr(std::size_t j) const { return fields_[j]; }

  bool same_as(const VectorSpace& o) const { return p_ == o.p_ && degrees_ == o.degrees_; }

  Code part(Code x, std::size_t j) const { return (x / offset_pow_[j]) % fields_[j]->size(); }
  Code encode(std::span<const Code> parts) const;
  std::vector<Code> decode(Code x) const;

  VecElem element(Code x) const;
  /// Throws DomainMismatch when the parts do not match the component fields.
  Code code(const VecElem& x) const;

  Code add(Code a, Code b) const;
  Code neg(Code a) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  /// b * x with b in GF(p^t) embedded into every component; t must divide each n_j.
  Code scale(const FieldElem& b, Code x) const;

  /// <a, b> as a residue in [0, p).
  std::uint32_t inner_product(Code a, Code b) const;
  std::uint32_t inner_product(const VecElem& a, const VecElem& b) const;
  /// <a, e_i> for each digit basis vector e_i = p^i.
  std::vector<std::uint32_t> functional(Code a) const;
  /// <a, x> for every x in code order, built in O(p^n).
  std::vector<std::uint8_t> inner_product_row(Code a) const;
  /// Fills `out` (size p^n) with sum_i digit_i(x) * weights[i] mod p.
  void fill_linear_row(std::span<const std::uint32_t> weights, std::span<std::uint8_t> out) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> degrees_;
  std::uint32_t n_ = 0;
  std::uint32_t size_ = 1;
  std::vector<FieldPtr> fields_;
  std::vector<std::uint32_t> offset_;      // lowest digit index of each part
  std::vector<std::uint32_t> offset_pow_;  // p^offset_
  std::vector<std::uint32_t> pow_p_;
};

using SpacePtr = std::shared_ptr<const VectorSpace>;

/// Canonical enumeration: ascending codes, lexicographic across parts.
std::vector<VecElem> enumerate(const VectorSpace& space);

}  // namespace dualbent
