#pragma once

#include <cstdint>

#include "dualbent/cyclotomic.hpp"
#include "dualbent/field.hpp"
#include "dualbent/space.hpp"

namespace dualbent {

/// lambda_a(x) = zeta_p^{Tr(a x)}.
Complex additive_character(const FieldElem& a, const FieldElem& x);
/// chi_a(x) = zeta_p^{<a, x>} on a product space (codes).
Complex additive_character(const VectorSpace& space, Code a, Code x);
Complex additive_character(const VectorSpace& space, const VecElem& a, const VecElem& x);

/// psi_j(alpha^s) = zeta_{q-1}^{s j}, with psi_j(0) = 1 for j = 0 and 0 otherwise.
class MultChar {
 public:
  MultChar(FieldPtr field, std::int64_t j);

  const ExtField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t index() const { return j_; }
  std::uint64_t order() const;
  bool is_trivial() const { return j_ == 0; }

  MultChar conj() const { return {field_, -static_cast<std::int64_t>(j_)}; }
  MultChar operator*(const MultChar& o) const;
  bool operator==(const MultChar& o) const { return field_->same_as(*o.field_) && j_ == o.j_; }

  Complex operator()(Code x) const;
  Complex operator()(const FieldElem& x) const;

 private:
  FieldPtr field_;
  std::uint32_t j_;
};

MultChar quadratic_character(FieldPtr field);

/// Quadratic character as an integer in {-1, 0, 1}.
int eta(const ExtField& field, Code x);
inline int eta(const FieldElem& x) { return x.field().eta(x.code()); }

/// G(psi, lambda_a) = sum_{x != 0} psi(x) lambda_a(x), summed term by term.
Complex gauss_sum(const MultChar& psi, Code a);

/// (-1)^{m-1} (sqrt(-1))^{((p-1)/2)^2 m} sqrt(q), the value of G(eta, lambda_1).
Complex gauss_sum_quadratic_closed(const ExtField& field);

enum class FourierKind {
  mult_via_add,  // psi(x) = (1/q) sum_b G(psi, conj(lambda_b)) lambda_b(x)
  add_via_mult,  // lambda(x) = (1/(q-1)) sum_psi G(conj(psi), lambda) psi(x), x != 0
};

/// |lhs - rhs| of the expansion of a single character at x. `index` is the
/// multiplicative index j for mult_via_add and the additive parameter code a
/// for add_via_mult. Throws OutsideDomain for x = 0 with add_via_mult.
double fourier_residual(FourierKind kind, const FieldPtr& field, std::uint32_t index, Code x);

}  // namespace dualbent
