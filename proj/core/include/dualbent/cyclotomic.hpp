#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace dualbent {

using Complex = std::complex<double>;

/// Precomputed zeta_N^k = exp(2 pi i k / N) for k in [0, N).
class RootTable {
 public:
  explicit RootTable(std::uint64_t order);

  std::uint64_t order() const { return roots_.size(); }
  const Complex& operator()(std::int64_t k) const {
    const auto n = static_cast<std::int64_t>(roots_.size());
    const std::int64_t r = k % n;
    return roots_[static_cast<std::size_t>(r < 0 ? r + n : r)];
  }

 private:
  std::vector<Complex> roots_;
};

/// Shared, cached table for a given order.
const RootTable& roots_of_unity(std::uint64_t order);

/// An element sum_r counts[r] zeta_p^r of Z[zeta_p], kept as integer
/// coefficients so that character sums over p-th roots accumulate exactly.
class CycloSum {
 public:
  explicit CycloSum(std::uint32_t p) : counts_(p, 0) {}

  std::uint32_t p() const { return static_cast<std::uint32_t>(counts_.size()); }
  void add(std::uint32_t r, std::int64_t weight = 1) { counts_[r] += weight; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  /// Canonical representative: 1 + zeta + ... + zeta^{p-1} = 0 is the only
  /// integer relation, so subtracting the minimum makes equal values equal.
  CycloSum normalized() const;
  bool is_zero() const { return normalized().counts_ == std::vector<std::int64_t>(counts_.size(), 0); }
  Complex value() const;

  CycloSum& operator+=(const CycloSum& o);
  bool operator==(const CycloSum& o) const { return normalized().counts_ == o.normalized().counts_; }
  bool operator<(const CycloSum& o) const { return counts_ < o.counts_; }

 private:
  std::vector<std::int64_t> counts_;
};

/// Absolute tolerance for comparing a sum of `terms` unit-modulus terms.
inline double sum_tolerance(double terms) { return terms * 1e-9 > 1e-7 ? terms * 1e-9 : 1e-7; }

inline bool approx_equal(const Complex& a, const Complex& b, double tol) {
  return std::abs(a - b) < tol;
}

/// sqrt((-1)^((p-1)/2)): 1 for p = 1 mod 4 and i for p = 3 mod 4.
Complex epsilon_const(std::uint32_t p);

/// Integer power of a complex unit without accumulated rounding for the
/// values +-1, +-i that all signs in this library take.
Complex unit_pow(const Complex& u, std::int64_t e);

}  // namespace dualbent
