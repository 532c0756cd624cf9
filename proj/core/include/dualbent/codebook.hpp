#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dualbent/hybrid.hpp"

namespace dualbent {

enum class Construction { cd, cd1, hadamard };

std::string to_string(Construction c);
Construction parse_construction(const std::string& name);

/// N codewords of length K, each entry an exponent j standing for
/// zeta_p^j / sqrt(K).
struct Codebook {
  std::uint32_t p = 0;
  std::uint32_t N = 0;
  std::uint32_t K = 0;
  Construction construction = Construction::cd;
  std::vector<Code> labels;           // b for cd/cd1, column index for hadamard
  std::vector<std::uint8_t> entries;  // row-major N x K

  std::span<const std::uint8_t> row(std::size_t i) const { return {entries.data() + i * K, K}; }
  /// Exact comparison of all rows.
  bool rows_distinct() const;
};

/// D = {x : eta_m(F(x)) = -1}; row b is (<b, x>)_{x in D}.
Codebook build_cd(const BentContext& ctx);
/// D_1 = {x != 0 : F(x) = 0}.
Codebook build_cd1(const BentContext& ctx);

/// p^n x p^n exponents: 0 in row/column 0, Tr(alpha^{i+j-2}) elsewhere.
std::vector<std::uint8_t> hadamard_matrix(std::uint32_t p, std::uint32_t n);
/// r_0 = 1, r_k = q_m(F(alpha^{k-1})) where q_m(x) = 1 iff eta_m(x) = -1.
std::vector<std::uint8_t> row_selection(const BentContext& ctx);
/// Columns of the rows of H selected by r_m.
Codebook build_partial_hadamard(const BentContext& ctx);

double welch_bound(std::uint64_t N, std::uint64_t K);

struct SpectrumEntry {
  double magnitude;
  std::uint64_t count;
};

struct Spectrum {
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  std::vector<SpectrumEntry> entries;  // ascending magnitude
  double imax = 0;
  double welch = 0;
  double ratio = 0;  // imax / welch

  std::uint64_t total() const;
};

enum class SpectrumMode { pairwise, translate };
SpectrumMode parse_spectrum_mode(const std::string& name);

/// Magnitude multiset of all N(N-1) ordered pairs. Translate mode needs rows
/// labelled by every b of the space (cd, cd1): one sum per nonzero difference,
/// each counted N times.
Spectrum spectrum(const Codebook& C, SpectrumMode mode, unsigned threads = 1);

/// The distribution predicted by the closed formulas.
Spectrum closed_spectrum(Construction c, const BentContext& ctx);
/// Same from bare parameters (sign = eps for cd/hadamard, upsilon for cd1).
/// A count that does not fit in 64 bits is reported as 0.
Spectrum closed_spectrum(Construction c, std::uint32_t p, std::uint32_t n, std::uint32_t m, Complex sign);

/// sqrt(1/(1 - k/q)) with k = 2, 1, 4 for cd, cd1, hadamard.
double ratio_bound(Construction c, std::uint32_t q);

/// (1/2K)|r_hat_l| for l = 1..N-1, r_hat_l = sum_k (-1)^{r_k} h_{k,l}.
std::vector<double> hadamard_transform_magnitudes(const BentContext& ctx);

struct CorrelationValue {
  double value;
  std::uint64_t count;
};
/// Distribution of C(tau), tau in [0, p^n - 2], summed from the sequences.
std::vector<CorrelationValue> seq_crosscorr(const BentContext& ctx);
std::vector<CorrelationValue> seq_crosscorr_closed(const BentContext& ctx);

/// 12 significant digits, used for grouping and for files.
double round_sig12(double v);

nlohmann::json to_json(const Codebook& C);
Codebook codebook_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Spectrum& s);

}  // namespace dualbent
