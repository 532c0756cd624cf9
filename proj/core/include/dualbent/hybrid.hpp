#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualbent/bent.hpp"
#include "dualbent/characters.hpp"

namespace dualbent {

enum class SumKind { s1, s_hat1, s2, s_hat2, t };
enum class Method { direct, closed };

/// zero / plus_main / minus_main follow the branch of the closed form:
///   s1: 0, +eps p^{n/2}, -eps p^{n/2}
///   t (Condition I): plus_main is the F*(a) = 0 branch, minus_main the other
///   t (Condition II): zero, then the eta(F*(a)) = +1 / -1 branches
/// s2 and the nonzero hat sums are gauss_product. `trivial` marks a = 0.
enum class Classification { zero, plus_main, minus_main, gauss_product, trivial, unclassified };

std::string to_string(SumKind k);
SumKind parse_sum_kind(const std::string& name);
std::string to_string(Classification c);

struct HybridValue {
  Complex value{0, 0};
  Classification classification = Classification::unclassified;
  double main_scale = 0;  // p^{n/2}
};

/// A catalog instance together with its value and dual tables.
struct BentContext {
  BentSpec spec;
  BentTables tables;

  static BentContext prepare(BentSpec spec, unsigned threads = 1);
};

HybridValue s1(const BentContext& ctx, Code a, Method method);
HybridValue s_hat1(const BentContext& ctx, const MultChar& psi, Code a, Method method);
HybridValue s2(const BentContext& ctx, Code a, Method method);
HybridValue s_hat2(const BentContext& ctx, const MultChar& psi, Code a, Method method);
HybridValue t_sum(const BentContext& ctx, Code a, Method method);

/// Dispatch on kind; psi is required for the hat sums and ignored otherwise.
HybridValue hybrid_sum(const BentContext& ctx, SumKind kind, const std::optional<MultChar>& psi, Code a,
                       Method method);

/// The a = 0 value the closed forms exclude: sum of psi(F(x)) (N1 - N-1 for eta)
/// or N0 for t. Always tagged `trivial`.
HybridValue trivial_at_zero(const BentContext& ctx, SumKind kind, const std::optional<MultChar>& psi);

/// The character mu' with mu'^{d-1} = psi^{-1} (twist = false) or
/// psi^{-1} eta (twist = true).
MultChar mu_prime(const BentContext& ctx, const MultChar& psi, bool twist);

struct CountTriple {
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n_minus1 = 0;

  std::uint64_t total() const { return n0 + n1 + n_minus1; }
  bool operator==(const CountTriple&) const = default;
};

enum class CountTarget { function, dual };
enum class CountMethod { enumerate, closed };

CountTriple counts(const BentContext& ctx, CountTarget target, CountMethod method);

}  // namespace dualbent
