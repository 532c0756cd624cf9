#include "config.hpp"

#include <charconv>

#include "dualbent/error.hpp"

namespace dualbent::cli {

namespace {

std::uint32_t total(const std::vector<std::uint32_t>& d) {
  std::uint32_t s = 0;
  for (auto v : d) s += v;
  return s;
}

std::uint32_t require_m(const RunConfig& cfg) {
  if (!cfg.m) throw InvalidArgument("--m (codomain degree) is required");
  return *cfg.m;
}

}  // namespace

std::vector<std::uint32_t> resolve_degrees(const RunConfig& cfg) {
  if (!cfg.degrees.empty()) {
    if (cfg.n && *cfg.n != total(cfg.degrees))
      throw InvalidArgument("--n does not equal the sum of --degrees");
    return cfg.degrees;
  }
  if (!cfg.n) throw InvalidArgument("the domain needs --n or --degrees");
  const std::uint32_t n = *cfg.n;
  switch (parse_family(cfg.family)) {
    case Family::pair_monomial:
      if (n % 2 != 0) throw InvalidArgument("pair_monomial lives on GF(p^n')^2, so n must be even");
      return {n / 2, n / 2};
    case Family::diag_quadratic: {
      const auto m = require_m(cfg);
      if (m == 0 || n % m != 0) throw InvalidArgument("diag_quadratic lives on GF(p^m)^s, so m must divide n");
      return std::vector<std::uint32_t>(n / m, m);
    }
    case Family::composite_maiorana:
      throw InvalidArgument("composite_maiorana needs explicit --degrees n',n'',n''");
    default: return {n};
  }
}

Code parse_element(const std::string& text, std::uint32_t p, std::uint32_t k, const std::string& what) {
  const auto f = get_field(p, k);
  if (text == "primitive") return f->primitive();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidArgument(what + " = '" + text + "' is neither an element code nor 'primitive'");
  if (v >= f->size())
    throw InvalidArgument(what + " = " + text + " is not an element of GF(" + std::to_string(p) + "^" +
                          std::to_string(k) + ")");
  return static_cast<Code>(v);
}

BentSpec build_spec(const RunConfig& cfg) {
  if (!is_prime(cfg.p) || cfg.p == 2) throw InvalidArgument("--p must be an odd prime");
  const auto family = parse_family(cfg.family);
  const auto degrees = resolve_degrees(cfg);
  const auto m = require_m(cfg);
  const std::uint32_t n = total(degrees);
  FamilyParams P;
  P.u = cfg.u;
  auto elements = [&](const std::vector<std::string>& texts, std::uint32_t k, const std::string& what) {
    std::vector<Code> out;
    for (const auto& s : texts) out.push_back(parse_element(s, cfg.p, k, what));
    return out;
  };
  switch (family) {
    case Family::ext_square: P.e = parse_element(cfg.e, cfg.p, n, "e"); break;
    case Family::pair_monomial: P.e = parse_element(cfg.e, cfg.p, degrees[0], "e"); break;
    case Family::unitary_form:
      if (n % 2 != 0) throw InvalidArgument("unitary_form needs n even");
      P.e = parse_element(cfg.e, cfg.p, n / 2, "e");
      break;
    case Family::diag_quadratic:
      P.alphas = cfg.alphas.empty() ? std::vector<Code>(degrees.size(), 1) : elements(cfg.alphas, m, "alpha");
      break;
    case Family::composite_maiorana:
      if (degrees.size() != 3) throw InvalidArgument("composite_maiorana needs --degrees n',n'',n''");
      P.alphas = cfg.alphas.empty() ? std::vector<Code>(3, 1) : elements(cfg.alphas, degrees[0], "alpha");
      P.beta = parse_element(cfg.beta, cfg.p, degrees[1], "beta");
      P.gamma = parse_element(cfg.gamma, cfg.p, degrees[1], "gamma");
      P.l_coeffs = elements(cfg.l_coeffs, degrees[1], "L coefficient");
      break;
  }
  return make_bent(family, cfg.p, degrees, m, cfg.t, P);
}

}  // namespace dualbent::cli
