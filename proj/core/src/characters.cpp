#include "dualbent/characters.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "dualbent/error.hpp"

namespace dualbent {

Complex additive_character(const FieldElem& a, const FieldElem& x) {
  const auto& f = a.field();
  if (!f.same_as(x.field())) throw DomainMismatch("additive character: argument in a different field");
  return roots_of_unity(f.characteristic())(f.trace(f.mul(a.code(), x.code())));
}

Complex additive_character(const VectorSpace& space, Code a, Code x) {
  if (a >= space.size() || x >= space.size()) throw DomainMismatch("additive character: code outside the space");
  return roots_of_unity(space.characteristic())(space.inner_product(a, x));
}

Complex additive_character(const VectorSpace& space, const VecElem& a, const VecElem& x) {
  return additive_character(space, space.code(a), space.code(x));
}

MultChar::MultChar(FieldPtr field, std::int64_t j) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("multiplicative character without a field");
  const auto g = static_cast<std::int64_t>(field_->size() - 1);
  const std::int64_t r = j % g;
  j_ = static_cast<std::uint32_t>(r < 0 ? r + g : r);
}

std::uint64_t MultChar::order() const {
  const std::uint64_t g = field_->size() - 1;
  return g / std::gcd<std::uint64_t>(j_, g);
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (!field_->same_as(*o.field_)) throw DomainMismatch("characters of different fields");
  return {field_, std::int64_t{j_} + o.j_};
}

Complex MultChar::operator()(Code x) const {
  if (x == 0) return j_ == 0 ? Complex{1, 0} : Complex{0, 0};
  const std::uint64_t g = field_->size() - 1;
  return roots_of_unity(g)(static_cast<std::int64_t>(std::uint64_t{field_->log(x)} * j_ % g));
}

Complex MultChar::operator()(const FieldElem& x) const {
  if (!x.field().same_as(*field_)) throw DomainMismatch("multiplicative character: argument in a different field");
  return (*this)(x.code());
}

MultChar quadratic_character(FieldPtr field) {
  const auto half = (field->size() - 1) / 2;
  return {std::move(field), half};
}

int eta(const ExtField& field, Code x) { return field.eta(x); }

Complex gauss_sum(const MultChar& psi, Code a) {
  const auto& f = psi.field();
  const auto& zp = roots_of_unity(f.characteristic());
  Complex acc{0, 0};
  for (Code x = 1; x < f.size(); ++x) acc += psi(x) * zp(f.trace(f.mul(a, x)));
  return acc;
}

Complex gauss_sum_quadratic_closed(const ExtField& field) {
  const std::uint64_t p = field.characteristic();
  const std::uint64_t m = field.degree();
  if (p % 2 == 0) throw InvalidArgument("quadratic Gauss sum needs odd q");
  const std::uint64_t h = (p - 1) / 2;
  const Complex unit = unit_pow(Complex{0, 1}, static_cast<std::int64_t>(h * h * m));
  const double sign = (m - 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * unit * std::sqrt(static_cast<double>(field.size()));
}

double fourier_residual(FourierKind kind, const FieldPtr& field, std::uint32_t index, Code x) {
  const auto& f = *field;
  const std::uint32_t q = f.size();
  const auto& zp = roots_of_unity(f.characteristic());
  if (x >= q) throw DomainMismatch("fourier check: x outside the field");
  if (kind == FourierKind::mult_via_add) {
    const MultChar psi(field, index);
    Complex rhs{0, 0};
    for (Code b = 0; b < q; ++b) {
      // G(psi, conj(lambda_b)) = G(psi, lambda_{-b})
      const Complex g = gauss_sum(psi, f.neg(b));
      rhs += g * zp(f.trace(f.mul(b, x)));
    }
    rhs /= static_cast<double>(q);
    return std::abs(psi(x) - rhs);
  }
  if (x == 0) throw OutsideDomain("additive-via-multiplicative expansion requires x != 0");
  if (index >= q) throw DomainMismatch("fourier check: additive parameter outside the field");
  Complex rhs{0, 0};
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    const MultChar psi(field, j);
    rhs += gauss_sum(psi.conj(), index) * psi(x);
  }
  rhs /= static_cast<double>(q - 1);
  return std::abs(zp(f.trace(f.mul(index, x))) - rhs);
}

}  // namespace dualbent
