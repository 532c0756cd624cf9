#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dualbent/codebook.hpp"
#include "dualbent/error.hpp"
#include "dualbent/parallel.hpp"

namespace dualbent {

namespace {

using CountKey = std::vector<std::int64_t>;
using KeyCounts = std::map<CountKey, std::uint64_t>;

void finish(Spectrum& s) {
  std::map<double, std::uint64_t> grouped;
  for (const auto& e : s.entries) grouped[round_sig12(e.magnitude)] += e.count;
  s.entries.clear();
  s.imax = 0;
  for (const auto& [mag, count] : grouped) {
    s.entries.push_back({mag, count});
    s.imax = std::max(s.imax, mag);
  }
  s.welch = welch_bound(s.N, s.K);
  s.ratio = s.welch > 0 ? s.imax / s.welch : std::numeric_limits<double>::infinity();
}

Spectrum from_keys(const Codebook& C, const KeyCounts& keys) {
  Spectrum s;
  s.N = C.N;
  s.K = C.K;
  for (const auto& [key, count] : keys) {
    CycloSum sum(C.p);
    for (std::uint32_t r = 0; r < C.p; ++r) sum.add(r, key[r]);
    s.entries.push_back({std::abs(sum.value()) / C.K, count});
  }
  finish(s);
  return s;
}

CountKey normalized_key(const std::vector<std::int64_t>& counts) {
  const auto lo = *std::min_element(counts.begin(), counts.end());
  CountKey k(counts);
  for (auto& v : k) v -= lo;
  return k;
}

void merge(KeyCounts& into, const KeyCounts& from) {
  for (const auto& [k, c] : from) into[k] += c;
}

}  // namespace

std::uint64_t Spectrum::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.count;
  return t;
}

SpectrumMode parse_spectrum_mode(const std::string& name) {
  if (name == "pairwise") return SpectrumMode::pairwise;
  if (name == "translate") return SpectrumMode::translate;
  throw InvalidArgument("unknown spectrum mode '" + name + "' (expected pairwise or translate)");
}

Spectrum spectrum(const Codebook& C, SpectrumMode mode, unsigned threads) {
  if (C.N < 2 || C.K == 0) throw InvalidArgument("a spectrum needs N >= 2 and K >= 1");
  const std::uint32_t p = C.p;
  const unsigned chunks = parallel_chunks(C.N, threads);
  std::vector<KeyCounts> partial(chunks);

  if (mode == SpectrumMode::translate) {
    if (C.construction == Construction::hadamard)
      throw InvalidArgument("translate mode applies to C_D and C_D1 only; use pairwise for partial Hadamard");
    for (std::uint32_t i = 0; i < C.N; ++i)
      if (C.labels[i] != i) throw InvalidArgument("translate mode needs rows labelled by every b in code order");
    const auto zero = C.row(0);
    if (std::any_of(zero.begin(), zero.end(), [](std::uint8_t e) { return e != 0; }))
      throw InvalidArgument("translate mode: row of b = 0 is not all-zero");
    parallel_for(C.N - 1, threads, [&](std::size_t b, std::size_t e, unsigned chunk) {
      std::vector<std::int64_t> counts(p);
      for (std::size_t i = b; i < e; ++i) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto v : C.row(i + 1)) ++counts[v];
        partial[chunk][normalized_key(counts)] += C.N;
      }
    });
  } else {
    // Pairs i < k, each counted twice; rows are split so chunk work is uneven
    // but the merged result does not depend on the split.
    parallel_for(C.N, threads, [&](std::size_t b, std::size_t e, unsigned chunk) {
      std::vector<std::int64_t> counts(p);
      for (std::size_t i = b; i < e; ++i) {
        const auto ri = C.row(i);
        for (std::size_t k = i + 1; k < C.N; ++k) {
          const auto rk = C.row(k);
          std::fill(counts.begin(), counts.end(), 0);
          for (std::uint32_t t = 0; t < C.K; ++t) {
            const std::uint32_t d = ri[t] + p - rk[t];
            ++counts[d >= p ? d - p : d];
          }
          partial[chunk][normalized_key(counts)] += 2;
        }
      }
    });
  }
  KeyCounts all;
  for (const auto& part : partial) merge(all, part);
  return from_keys(C, all);
}

Spectrum closed_spectrum(Construction c, std::uint32_t p, std::uint32_t n, std::uint32_t m, Complex sign) {
  __extension__ typedef __int128 I128;
  auto pw = [&](std::uint32_t e) {
    I128 r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= p;
    return r;
  };
  const I128 q = pw(m), pn = pw(n);
  const double qd = static_cast<double>(q);
  Spectrum s;
  std::vector<std::pair<double, I128>> raw;

  if (c == Construction::cd || c == Construction::hadamard) {
    if (n % 2 != 0) throw InvalidArgument("Condition I requires 2 | n");
    const I128 eps = sign.real() > 0 ? 1 : -1;
    const I128 half = pw(n / 2);
    const I128 base = (pn - eps * half) * (q - 1) / (2 * q);
    const double halfd = static_cast<double>(half);
    if (c == Construction::cd) {
      const I128 K = base;
      const double Kd = static_cast<double>(K);
      raw.push_back({(qd - 1) * halfd / (2 * qd * Kd),
                     (pn * pn * (q + 1) + eps * pn * half * (q - 1)) / (2 * q) - pn});
      raw.push_back({(qd + 1) * halfd / (2 * qd * Kd), (pn * pn - eps * pn * half) * (q - 1) / (2 * q)});
      s.K = static_cast<std::uint64_t>(K);
    } else {
      const I128 K = base + 1;
      const double Kd = static_cast<double>(K);
      const double e = static_cast<double>(eps);
      raw.push_back({std::abs((qd - 1) / qd * e * halfd - 2) / (2 * Kd),
                     -pn + ((q + 1) * pn * pn + eps * pn * half * (q - 1)) / (2 * q)});
      raw.push_back({std::abs(-(qd + 1) / qd * e * halfd - 2) / (2 * Kd), pn * (pn - eps * half) * (q - 1) / (2 * q)});
      s.K = static_cast<std::uint64_t>(K);
    }
  } else {
    if (n < 3 * m || (n - m) % 2 != 0) throw InvalidArgument("Condition II requires 2 | (n - m) and n >= 3m");
    const I128 K = pw(n - m) - 1;
    const double Kd = static_cast<double>(K);
    const Complex em = unit_pow(epsilon_const(p), m);
    const double mfac = (m - 1) % 2 == 0 ? 1.0 : -1.0;
    const I128 root = pw((n - m) / 2);
    const double A = mfac * (sign * em).real() * static_cast<double>(root);
    // eta_m(-1) = 1 iff q = 1 mod 4
    const double eta_m1 = (q % 4 == 1) ? 1.0 : -1.0;
    const I128 sgn = (mfac * (em / sign).real() * eta_m1) > 0 ? 1 : -1;
    const I128 n1 = (pw(n - m) + sgn * root) * (q - 1) / 2;
    const I128 nm1 = (pw(n - m) - sgn * root) * (q - 1) / 2;
    raw.push_back({1.0 / Kd, pw(2 * n - m) - pn});
    raw.push_back({std::abs(A - 1) / Kd, pn * n1});
    raw.push_back({std::abs(A + 1) / Kd, pn * nm1});
    s.K = static_cast<std::uint64_t>(K);
  }
  s.N = static_cast<std::uint64_t>(pn);
  const I128 limit = static_cast<I128>(std::numeric_limits<std::uint64_t>::max());
  for (const auto& [mag, count] : raw) {
    if (count < 0) throw Error("negative count in closed spectrum");
    if (count == 0) continue;
    s.entries.push_back({mag, count > limit ? 0 : static_cast<std::uint64_t>(count)});
  }
  finish(s);
  return s;
}

Spectrum closed_spectrum(Construction c, const BentContext& ctx) {
  const auto& spec = ctx.spec;
  const bool need_one = c != Construction::cd1;
  if (need_one && spec.condition != Condition::I)
    throw InvalidArgument(to_string(c) + " requires a Condition I function");
  if (!need_one && spec.condition != Condition::II)
    throw InvalidArgument("cd1 requires a Condition II function");
  if (c == Construction::hadamard && spec.space->components() != 1)
    throw InvalidArgument("hadamard needs the single-field domain GF(p^n)");
  return closed_spectrum(c, spec.p(), spec.n(), spec.m, spec.sign);
}

}  // namespace dualbent
