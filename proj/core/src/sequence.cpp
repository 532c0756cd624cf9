#include <algorithm>
#include <cmath>
#include <map>

#include "dualbent/codebook.hpp"
#include "dualbent/error.hpp"

namespace dualbent {

namespace {

void require_sequence_setting(const BentContext& ctx) {
  if (ctx.spec.space->components() != 1)
    throw InvalidArgument("the sequence pair is defined over the single field GF(p^n)");
  if (ctx.spec.condition != Condition::I) throw InvalidArgument("the sequence pair needs a Condition I function");
}

}  // namespace

std::vector<CorrelationValue> seq_crosscorr(const BentContext& ctx) {
  require_sequence_setting(ctx);
  const auto& f = ctx.spec.space->field(0);
  const auto& cod = *ctx.spec.codomain;
  const std::uint32_t p = f.characteristic();
  const std::uint32_t L = f.size() - 1;
  // s1: p-ary m-sequence, s2: quadratic-residue image of F along the same powers
  std::vector<std::uint8_t> s1(L), s2(L);
  for (std::uint32_t t = 0; t < L; ++t) {
    const Code x = f.exp(t);
    s1[t] = static_cast<std::uint8_t>(f.trace(x));
    s2[t] = cod.eta(ctx.tables.values[x]) == -1 ? 1 : 0;
  }
  std::map<std::vector<std::int64_t>, std::uint64_t> grouped;
  for (std::uint32_t tau = 0; tau < L; ++tau) {
    CycloSum c(p);
    for (std::uint32_t t = 0; t < L; ++t) c.add(s1[(t + tau) % L], s2[t] ? -1 : 1);
    grouped[c.normalized().counts()] += 1;
  }
  std::map<double, std::uint64_t> values;
  for (const auto& [key, count] : grouped) {
    CycloSum c(p);
    for (std::uint32_t r = 0; r < p; ++r) c.add(r, key[r]);
    const Complex v = c.value();
    if (std::abs(v.imag()) > sum_tolerance(L)) throw Error("cross-correlation value is not real");
    values[round_sig12(v.real() + 0.0)] += count;
  }
  std::vector<CorrelationValue> out;
  for (const auto& [v, c] : values) out.push_back({v, c});
  return out;
}

std::vector<CorrelationValue> seq_crosscorr_closed(const BentContext& ctx) {
  require_sequence_setting(ctx);
  const auto& spec = ctx.spec;
  const std::int64_t q = spec.q();
  const std::int64_t pn = static_cast<std::int64_t>(ipow(spec.p(), spec.n()));
  const std::int64_t half = static_cast<std::int64_t>(ipow(spec.p(), spec.n() / 2));
  const std::int64_t eps = spec.sign.real() > 0 ? 1 : -1;
  const double qd = static_cast<double>(q);
  const double v1 = static_cast<double>(eps * half) * (qd - 1) / qd - 1;
  const double v2 = -static_cast<double>(eps * half) * (qd + 1) / qd - 1;
  const std::int64_t c2 = (pn - eps * half) * (q - 1) / (2 * q);
  const std::int64_t c1 = pn - 1 - c2;
  std::vector<CorrelationValue> out;
  if (c1 > 0) out.push_back({round_sig12(v1), static_cast<std::uint64_t>(c1)});
  if (c2 > 0) out.push_back({round_sig12(v2), static_cast<std::uint64_t>(c2)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<double> hadamard_transform_magnitudes(const BentContext& ctx) {
  const auto r = row_selection(ctx);
  const std::uint32_t p = ctx.spec.p(), n = ctx.spec.n();
  const auto H = hadamard_matrix(p, n);
  const std::size_t N = r.size();
  std::size_t K = 0;
  for (auto v : r) K += v;
  std::vector<double> out;
  out.reserve(N - 1);
  for (std::size_t l = 1; l < N; ++l) {
    CycloSum acc(p);
    for (std::size_t k = 0; k < N; ++k) acc.add(H[k * N + l], r[k] ? -1 : 1);
    out.push_back(std::abs(acc.value()) / (2.0 * static_cast<double>(K)));
  }
  return out;
}

}  // namespace dualbent
