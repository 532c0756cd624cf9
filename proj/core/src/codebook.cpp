#include "dualbent/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <string_view>

#include "dualbent/error.hpp"

namespace dualbent {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::cd: return "cd";
    case Construction::cd1: return "cd1";
    case Construction::hadamard: return "hadamard";
  }
  return "?";
}

Construction parse_construction(const std::string& name) {
  if (name == "cd") return Construction::cd;
  if (name == "cd1") return Construction::cd1;
  if (name == "hadamard") return Construction::hadamard;
  throw InvalidArgument("unknown construction '" + name + "' (expected cd, cd1 or hadamard)");
}

bool Codebook::rows_distinct() const {
  std::set<std::basic_string_view<std::uint8_t>> seen;
  for (std::size_t i = 0; i < N; ++i)
    if (!seen.emplace(entries.data() + i * K, K).second) return false;
  return true;
}

namespace {

Codebook character_codebook(const BentContext& ctx, Construction which, const std::vector<Code>& support) {
  const auto& V = *ctx.spec.space;
  Codebook C;
  C.p = V.characteristic();
  C.N = V.size();
  C.K = static_cast<std::uint32_t>(support.size());
  C.construction = which;
  if (C.K == 0) throw InvalidArgument("empty support: the codebook has length 0");
  C.labels.resize(C.N);
  C.entries.resize(std::size_t{C.N} * C.K);
  for (Code b = 0; b < C.N; ++b) {
    C.labels[b] = b;
    const auto row = V.inner_product_row(b);
    std::uint8_t* dst = C.entries.data() + std::size_t{b} * C.K;
    for (std::uint32_t t = 0; t < C.K; ++t) dst[t] = row[support[t]];
  }
  return C;
}

void require_single_field(const BentContext& ctx) {
  if (ctx.spec.space->components() != 1)
    throw InvalidArgument("this construction needs the single-field domain GF(p^n)");
}

}  // namespace

Codebook build_cd(const BentContext& ctx) {
  if (ctx.spec.condition != Condition::I) throw InvalidArgument("C_D requires a Condition I function");
  const auto& cod = *ctx.spec.codomain;
  std::vector<Code> support;
  for (Code x = 0; x < ctx.tables.values.size(); ++x)
    if (cod.eta(ctx.tables.values[x]) == -1) support.push_back(x);
  return character_codebook(ctx, Construction::cd, support);
}

Codebook build_cd1(const BentContext& ctx) {
  if (ctx.spec.condition != Condition::II) throw InvalidArgument("C_D1 requires a Condition II function");
  std::vector<Code> support;
  for (Code x = 1; x < ctx.tables.values.size(); ++x)
    if (ctx.tables.values[x] == 0) support.push_back(x);
  return character_codebook(ctx, Construction::cd1, support);
}

std::vector<std::uint8_t> hadamard_matrix(std::uint32_t p, std::uint32_t n) {
  const auto f = get_field(p, n);
  const std::uint32_t N = f->size();
  std::vector<std::uint8_t> H(std::size_t{N} * N, 0);
  for (std::uint32_t i = 1; i < N; ++i)
    for (std::uint32_t j = 1; j < N; ++j)
      H[std::size_t{i} * N + j] = static_cast<std::uint8_t>(f->trace(f->exp(i + j - 2)));
  return H;
}

std::vector<std::uint8_t> row_selection(const BentContext& ctx) {
  require_single_field(ctx);
  if (ctx.spec.condition != Condition::I) throw InvalidArgument("the row selection needs a Condition I function");
  const auto& f = ctx.spec.space->field(0);
  const auto& cod = *ctx.spec.codomain;
  std::vector<std::uint8_t> r(f.size());
  r[0] = 1;
  for (std::uint32_t k = 1; k < f.size(); ++k) r[k] = cod.eta(ctx.tables.values[f.exp(k - 1)]) == -1 ? 1 : 0;
  return r;
}

Codebook build_partial_hadamard(const BentContext& ctx) {
  const auto r = row_selection(ctx);
  const std::uint32_t p = ctx.spec.p(), n = ctx.spec.n();
  const auto H = hadamard_matrix(p, n);
  std::vector<std::uint32_t> rows;
  for (std::uint32_t k = 0; k < r.size(); ++k)
    if (r[k]) rows.push_back(k);
  Codebook C;
  C.p = p;
  C.N = static_cast<std::uint32_t>(r.size());
  C.K = static_cast<std::uint32_t>(rows.size());
  C.construction = Construction::hadamard;
  C.labels.resize(C.N);
  C.entries.resize(std::size_t{C.N} * C.K);
  for (std::uint32_t j = 0; j < C.N; ++j) {
    C.labels[j] = j;
    for (std::uint32_t t = 0; t < C.K; ++t) C.entries[std::size_t{j} * C.K + t] = H[std::size_t{rows[t]} * C.N + j];
  }
  return C;
}

double welch_bound(std::uint64_t N, std::uint64_t K) {
  if (K == 0) throw InvalidArgument("Welch bound needs K >= 1");
  if (N < K) throw InvalidArgument("Welch bound needs N >= K");
  if (N == 1) return 0;
  const long double num = static_cast<long double>(N - K);
  const long double den = static_cast<long double>(K) * static_cast<long double>(N - 1);
  return static_cast<double>(std::sqrt(num / den));
}

double ratio_bound(Construction c, std::uint32_t q) {
  const double k = c == Construction::cd ? 2.0 : (c == Construction::cd1 ? 1.0 : 4.0);
  if (k >= q) return std::numeric_limits<double>::infinity();
  return std::sqrt(1.0 / (1.0 - k / q));
}

double round_sig12(double v) {
  if (v == 0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const Codebook& C) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < C.N; ++i) {
    const auto r = C.row(i);
    rows.push_back(std::vector<int>(r.begin(), r.end()));
  }
  return {{"p", C.p},           {"N", C.N},         {"K", C.K},
          {"scale", "1/sqrt(K)"}, {"labels", C.labels}, {"rows", rows},
          {"construction", to_string(C.construction)}};
}

Codebook codebook_from_json(const nlohmann::json& j) {
  Codebook C;
  try {
    C.p = j.at("p").get<std::uint32_t>();
    C.N = j.at("N").get<std::uint32_t>();
    C.K = j.at("K").get<std::uint32_t>();
    C.labels = j.at("labels").get<std::vector<Code>>();
    C.construction = j.contains("construction") ? parse_construction(j.at("construction").get<std::string>())
                                                : Construction::hadamard;
    const auto& rows = j.at("rows");
    if (rows.size() != C.N || C.labels.size() != C.N) throw InvalidArgument("codebook file: N does not match rows/labels");
    C.entries.reserve(std::size_t{C.N} * C.K);
    for (const auto& r : rows) {
      if (r.size() != C.K) throw InvalidArgument("codebook file: a row does not have K entries");
      for (const auto& e : r) {
        const auto v = e.get<std::uint32_t>();
        if (v >= C.p) throw InvalidArgument("codebook file: exponent outside [0, p)");
        C.entries.push_back(static_cast<std::uint8_t>(v));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("codebook file: ") + e.what());
  }
  return C;
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries) entries.push_back({{"magnitude", round_sig12(e.magnitude)}, {"count", e.count}});
  return {{"N", s.N},
          {"K", s.K},
          {"imax", round_sig12(s.imax)},
          {"welch", round_sig12(s.welch)},
          {"ratio", round_sig12(s.ratio)},
          {"entries", entries}};
}

}  // namespace dualbent
