#include "dualbent/space.hpp"

#include <string>

#include "dualbent/error.hpp"

namespace dualbent {

VectorSpace::VectorSpace(std::uint32_t p, std::vector<std::uint32_t> degrees)
    : p_(p), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InvalidArgument("a vector space needs at least one component");
  std::uint64_t size = 1;
  for (auto d : degrees_) {
    if (d == 0) throw InvalidArgument("component degrees must be at least 1");
    n_ += d;
    for (std::uint32_t i = 0; i < d; ++i) size *= p;
    if (size > kMaxTableSize)
      throw InvalidArgument("vector space of size " + std::to_string(p) + "^" +
                            std::to_string(n_) + "+ exceeds the table-size limit 2^24");
    fields_.push_back(get_field(p, d));
  }
  size_ = static_cast<std::uint32_t>(size);
  pow_p_.resize(n_ + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= n_; ++i) pow_p_[i] = pow_p_[i - 1] * p;
  offset_.resize(degrees_.size());
  offset_pow_.resize(degrees_.size());
  std::uint32_t off = 0;
  for (std::size_t j = degrees_.size(); j-- > 0;) {
    offset_[j] = off;
    offset_pow_[j] = pow_p_[off];
    off += degrees_[j];
  }
}

Code VectorSpace::encode(std::span<const Code> parts) const {
  if (parts.size() != degrees_.size()) throw DomainMismatch("wrong number of components");
  Code x = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!fields_[j]->contains(parts[j])) throw DomainMismatch("component code out of range");
    x += parts[j] * offset_pow_[j];
  }
  return x;
}

std::vector<Code> VectorSpace::decode(Code x) const {
  std::vector<Code> parts(degrees_.size());
  for (std::size_t j = 0; j < parts.size(); ++j) parts[j] = part(x, j);
  return parts;
}

VecElem VectorSpace::element(Code x) const {
  if (x >= size_) throw DomainMismatch("code outside the vector space");
  VecElem v;
  v.parts.reserve(degrees_.size());
  for (std::size_t j = 0; j < degrees_.size(); ++j) v.parts.emplace_back(fields_[j], part(x, j));
  return v;
}

Code VectorSpace::code(const VecElem& x) const {
  if (x.parts.size() != degrees_.size()) throw DomainMismatch("element has the wrong number of parts");
  std::vector<Code> parts(degrees_.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!x.parts[j].field().same_as(*fields_[j]))
      throw DomainMismatch("element part " + std::to_string(j) + " is in the wrong field");
    parts[j] = x.parts[j].code();
  }
  return encode(parts);
}

Code VectorSpace::add(Code a, Code b) const {
  Code r = 0;
  for (std::uint32_t i = 0; a || b; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Code VectorSpace::neg(Code a) const {
  Code r = 0;
  for (std::uint32_t i = 0; a; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

Code VectorSpace::scale(const FieldElem& b, Code x) const {
  const auto t = b.field().degree();
  if (b.field().characteristic() != p_) throw DomainMismatch("scalar has the wrong characteristic");
  std::vector<Code> parts = decode(x);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto emb = get_embedding(p_, t, degrees_[j]);
    parts[j] = fields_[j]->mul(emb->embed(b.code()), parts[j]);
  }
  return encode(parts);
}

std::uint32_t VectorSpace::inner_product(Code a, Code b) const {
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    const auto& f = *fields_[j];
    acc += f.trace(f.mul(part(a, j), part(b, j)));
  }
  return acc % p_;
}

std::uint32_t VectorSpace::inner_product(const VecElem& a, const VecElem& b) const {
  return inner_product(code(a), code(b));
}

std::vector<std::uint32_t> VectorSpace::functional(Code a) const {
  std::vector<std::uint32_t> w(n_);
  for (std::uint32_t i = 0; i < n_; ++i) w[i] = inner_product(a, pow_p_[i]);
  return w;
}

void VectorSpace::fill_linear_row(std::span<const std::uint32_t> weights,
                                  std::span<std::uint8_t> out) const {
  out[0] = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t block = pow_p_[i];
    for (std::uint32_t d = 1; d < p_; ++d) {
      const std::uint32_t shift = d * weights[i] % p_;
      std::uint8_t* dst = out.data() + d * block;
      for (std::uint32_t r = 0; r < block; ++r) {
        const std::uint32_t v = out[r] + shift;
        dst[r] = static_cast<std::uint8_t>(v >= p_ ? v - p_ : v);
      }
    }
  }
}

std::vector<std::uint8_t> VectorSpace::inner_product_row(Code a) const {
  std::vector<std::uint8_t> row(size_);
  const auto w = functional(a);
  fill_linear_row(w, row);
  return row;
}

std::vector<VecElem> enumerate(const VectorSpace& space) {
  std::vector<VecElem> out;
  out.reserve(space.size());
  for (Code x = 0; x < space.size(); ++x) out.push_back(space.element(x));
  return out;
}

}  // namespace dualbent
