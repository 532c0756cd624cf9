#include "dualbent/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "dualbent/error.hpp"

namespace dualbent {

RootTable::RootTable(std::uint64_t order) : roots_(order) {
  if (order == 0) throw InvalidArgument("root of unity of order 0");
  for (std::uint64_t k = 0; k < order; ++k) {
    // Reduce to the first octant-free form: exact values at quarter turns.
    const std::uint64_t num = 4 * k;
    if (num % order == 0) {
      static constexpr Complex quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots_[k] = quarter[(num / order) % 4];
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    roots_[k] = {std::cos(angle), std::sin(angle)};
  }
}

const RootTable& roots_of_unity(std::uint64_t order) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<RootTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<RootTable>(order);
  return *slot;
}

CycloSum CycloSum::normalized() const {
  CycloSum out(*this);
  const auto lo = *std::min_element(counts_.begin(), counts_.end());
  for (auto& c : out.counts_) c -= lo;
  return out;
}

Complex CycloSum::value() const {
  const auto& zeta = roots_of_unity(counts_.size());
  // Normalizing first keeps the coefficients small, which keeps rounding low.
  const auto lo = *std::min_element(counts_.begin(), counts_.end());
  Complex acc{0, 0};
  for (std::size_t r = 0; r < counts_.size(); ++r)
    acc += static_cast<double>(counts_[r] - lo) * zeta(static_cast<std::int64_t>(r));
  return acc;
}

CycloSum& CycloSum::operator+=(const CycloSum& o) {
  if (o.counts_.size() != counts_.size()) throw DomainMismatch("cyclotomic sums of different order");
  for (std::size_t r = 0; r < counts_.size(); ++r) counts_[r] += o.counts_[r];
  return *this;
}

Complex epsilon_const(std::uint32_t p) {
  if (p % 2 == 0) throw InvalidArgument("epsilon is defined for odd p only");
  return p % 4 == 1 ? Complex{1, 0} : Complex{0, 1};
}

Complex unit_pow(const Complex& u, std::int64_t e) {
  Complex base = u;
  if (e < 0) {
    base = 1.0 / u;
    e = -e;
  }
  Complex r{1, 0};
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  // Snap to the nearest of +-1, +-i when within rounding.
  for (const Complex s : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}})
    if (std::abs(r - s) < 1e-12) return s;
  return r;
}

}  // namespace dualbent
