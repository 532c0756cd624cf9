#include "dualbent/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "dualbent/error.hpp"
#include "polynomial.hpp"

namespace dualbent {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

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

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

ExtField::ExtField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported: p must be an odd prime");
  if (p > 255) throw InvalidArgument("characteristic above 255 is not supported: residues are stored as bytes");
  if (k == 0) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxTableSize)
      throw InvalidArgument("field " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds the table-size limit 2^24");
  }
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  // Smallest monic irreducible, with c_0 as the most significant key.
  bool found = false;
  for (std::uint32_t idx = 0; idx < q_ && !found; ++idx) {
    detail::Poly f(k + 1);
    for (std::uint32_t j = 0; j < k; ++j) f[j] = (idx / pow_p_[k - 1 - j]) % p;
    f[k] = 1;
    if (detail::is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.begin() + k);
      found = true;
    }
  }
  if (!found) throw Error("no irreducible polynomial found");  // unreachable for prime p

  const std::uint32_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Code a, std::uint64_t e) {
    Code r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Code g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      alpha_ = g;
      break;
    }
  }

  exp_.resize(group);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = poly_mul(x, alpha_);
  }

  // Trace of each basis monomial, then extend linearly over the digits.
  std::vector<std::uint32_t> basis_trace(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    Code acc = 0, y = pow_p_[j];
    for (std::uint32_t i = 0; i < k; ++i) {
      acc = add(acc, y);
      y = frobenius(y);
    }
    basis_trace[j] = acc;  // lies in F_p, so the code is the residue
  }
  trace_.assign(q_, 0);
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint32_t block = pow_p_[j];
    for (std::uint32_t d = 1; d < p; ++d)
      for (std::uint32_t r = 0; r < block; ++r)
        trace_[d * block + r] = static_cast<std::uint8_t>((trace_[r] + d * basis_trace[j]) % p);
  }
}

std::uint32_t ExtField::digit(Code x, std::uint32_t j) const { return (x / pow_p_[j]) % p_; }

Code ExtField::add(Code a, Code b) const {
  Code r = 0;
  for (std::uint32_t j = 0; a || b; ++j) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[j];
    a /= p_;
    b /= p_;
  }
  return r;
}

Code ExtField::neg(Code a) const {
  Code r = 0;
  for (std::uint32_t j = 0; a; ++j) {
    r += ((p_ - a % p_) % p_) * pow_p_[j];
    a /= p_;
  }
  return r;
}

Code ExtField::sub(Code a, Code b) const { return add(a, neg(b)); }

Code ExtField::scale(std::uint32_t c, Code a) const {
  c %= p_;
  Code r = 0;
  for (std::uint32_t j = 0; a; ++j) {
    r += ((a % p_) * c % p_) * pow_p_[j];
    a /= p_;
  }
  return r;
}

Code ExtField::poly_mul(Code a, Code b) const {
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t ai = digit(a, i);
    if (!ai) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += std::uint64_t{ai} * digit(b, j);
  }
  // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
  for (std::uint32_t deg = 2 * k_ - 2; deg >= k_; --deg) {
    const std::uint64_t top = prod[deg] % p_;
    prod[deg] = 0;
    if (top)
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[deg - k_ + j] += top * (p_ - modulus_[j]) % p_;
  }
  Code r = 0;
  for (std::uint32_t j = 0; j < k_; ++j) r += static_cast<Code>(prod[j] % p_) * pow_p_[j];
  return r;
}

Code ExtField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t s = log_[a] + log_[b];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

Code ExtField::inv(Code a) const {
  if (a == 0) throw OutsideDomain("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Code ExtField::pow(Code a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

Code ExtField::frobenius(Code x, std::uint32_t times) const {
  if (x == 0) return 0;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < times % k_; ++i) e = e * p_ % (q_ - 1);
  return exp_[(std::uint64_t{log_[x]} * e) % (q_ - 1)];
}

std::uint32_t ExtField::log(Code x) const {
  if (x == 0) throw OutsideDomain("discrete log of zero");
  return log_[x];
}

int ExtField::eta(Code x) const {
  if (x == 0) return 0;
  return (log_[x] % 2 == 0) ? 1 : -1;
}

std::uint64_t ExtField::order(Code x) const {
  const std::uint64_t group = q_ - 1;
  return group / std::gcd(std::uint64_t{log(x)}, group);
}

FieldPtr get_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const ExtField>(p, k);
  return slot;
}

FieldElem::FieldElem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw InvalidArgument("field element without a field");
  if (!field_->contains(code_))
    throw InvalidArgument("code " + std::to_string(code_) + " outside GF(" +
                          std::to_string(field_->characteristic()) + "^" +
                          std::to_string(field_->degree()) + ")");
}

const ExtField& FieldElem::checked(const FieldElem& o) const {
  if (!field_->same_as(*o.field_)) throw DomainMismatch("operands belong to different fields");
  return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return {field_, checked(o).add(code_, o.code_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  return {field_, checked(o).sub(code_, o.code_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return {field_, checked(o).mul(code_, o.code_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  return {field_, checked(o).div(code_, o.code_)};
}
FieldElem FieldElem::operator-() const { return {field_, field_->neg(code_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(code_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
bool FieldElem::operator==(const FieldElem& o) const {
  return field_->same_as(*o.field_) && code_ == o.code_;
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr big)
    : sub_(std::move(sub)), big_(std::move(big)) {
  const auto p = big_->characteristic();
  const auto t = sub_->degree();
  const auto k = big_->degree();
  if (sub_->characteristic() != p) throw DomainMismatch("fields of different characteristic");
  if (k % t != 0)
    throw InvalidArgument("subfield degree " + std::to_string(t) + " does not divide " +
                          std::to_string(k));

  auto eval_modulus = [&](Code r) {
    // Horner on the monic subfield modulus, evaluated in big.
    Code acc = 1;
    for (std::uint32_t j = t; j-- > 0;) acc = big_->add(big_->mul(acc, r), sub_->modulus()[j]);
    return acc;
  };
  // Roots all lie in the subfield image {0} U <alpha^s>.
  const std::uint64_t step = (std::uint64_t{big_->size()} - 1) / (sub_->size() - 1);
  bool found = false;
  if (t == k && k > 1) {
    root_ = p;  // X itself: embedding into the same field is the identity
    found = true;
  } else if (eval_modulus(0) == 0) {
    root_ = 0;
    found = true;
  }
  for (std::uint64_t i = 0; i + 1 < sub_->size() && !(t == k && k > 1); ++i) {
    const Code r = big_->exp(step * i);
    if ((!found || r < root_) && eval_modulus(r) == 0) {
      root_ = r;
      found = true;
    }
  }
  if (!found) throw Error("subfield modulus has no root in the extension");

  std::vector<Code> powers(t);
  powers[0] = 1;
  for (std::uint32_t j = 1; j < t; ++j) powers[j] = big_->mul(powers[j - 1], root_);
  forward_.resize(sub_->size());
  for (Code x = 0; x < sub_->size(); ++x) {
    Code y = 0;
    for (std::uint32_t j = 0; j < t; ++j) y = big_->add(y, big_->scale(sub_->digit(x, j), powers[j]));
    forward_[x] = y;
    inverse_.emplace(y, x);
  }
}

Code SubfieldEmbedding::restrict(Code y) const {
  const auto it = inverse_.find(y);
  if (it == inverse_.end()) throw OutsideDomain("element is not in the subfield");
  return it->second;
}

EmbeddingPtr get_embedding(std::uint32_t p, std::uint32_t t, std::uint32_t k) {
  if (t == 0 || k % t != 0)
    throw InvalidArgument("subfield degree " + std::to_string(t) + " does not divide " +
                          std::to_string(k));
  auto sub = get_field(p, t);
  auto big = get_field(p, k);
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, EmbeddingPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, t, k}];
  if (!slot) slot = std::make_shared<const SubfieldEmbedding>(std::move(sub), std::move(big));
  return slot;
}

Code rel_trace_in_big(const ExtField& big, std::uint32_t t, Code x) {
  if (t == 0 || big.degree() % t != 0)
    throw InvalidArgument("trace target degree " + std::to_string(t) + " does not divide " +
                          std::to_string(big.degree()));
  Code acc = 0;
  for (std::uint32_t i = 0; i < big.degree() / t; ++i) acc = big.add(acc, big.frobenius(x, t * i));
  return acc;
}

FieldElem rel_trace(const FieldElem& x, std::uint32_t t) {
  const auto& big = x.field();
  const Code y = rel_trace_in_big(big, t, x.code());
  const auto emb = get_embedding(big.characteristic(), t, big.degree());
  return {get_field(big.characteristic(), t), emb->restrict(y)};
}

std::vector<FieldElem> enumerate(const FieldPtr& field) {
  std::vector<FieldElem> out;
  out.reserve(field->size());
  for (Code x = 0; x < field->size(); ++x) out.emplace_back(field, x);
  return out;
}

}  // namespace dualbent
