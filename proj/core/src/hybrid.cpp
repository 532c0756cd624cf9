#include "dualbent/hybrid.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "dualbent/error.hpp"

namespace dualbent {

namespace {

double main_scale(const BentSpec& spec) { return std::sqrt(static_cast<double>(spec.space->size())); }

void require_nonzero_a(const BentContext& ctx, Code a) {
  if (a >= ctx.spec.space->size()) throw DomainMismatch("a is outside the domain space");
  if (a == 0) throw OutsideDomain("hybrid sums are only defined here for a != 0");
}

void require_condition(const BentContext& ctx, Condition c, const char* what) {
  if (ctx.spec.condition != c)
    throw InvalidArgument(std::string(what) + " requires a Condition " + to_string(c) + " function");
}

void require_high_order(const MultChar& psi, const BentContext& ctx) {
  if (!psi.field().same_as(*ctx.spec.codomain)) throw DomainMismatch("psi must be a character of GF(p^m)");
  if (psi.order() <= 2) throw InvalidArgument("hat sums require ord(psi) > 2; use s1/s2 for eta");
}

// sum_x psi(F(x)) chi_1(a x) from an exact histogram over (log class, residue).
Complex direct_sum(const BentContext& ctx, const MultChar& psi, Code a) {
  const auto& V = *ctx.spec.space;
  const auto& cod = *ctx.spec.codomain;
  const std::uint32_t p = V.characteristic();
  const std::uint64_t group = cod.size() - 1;
  const auto row = V.inner_product_row(a);
  std::vector<std::int64_t> hist(group * p, 0);
  std::vector<std::int64_t> at_zero(p, 0);
  const auto& values = ctx.tables.values;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] == 0) {
      at_zero[row[x]] += 1;
      continue;
    }
    const std::uint64_t e = std::uint64_t{cod.log(values[x])} * psi.index() % group;
    hist[e * p + row[x]] += 1;
  }
  const auto& zg = roots_of_unity(group);
  const auto& zp = roots_of_unity(p);
  Complex acc{0, 0};
  for (std::uint64_t e = 0; e < group; ++e) {
    CycloSum part(p);
    for (std::uint32_t r = 0; r < p; ++r) part.add(r, hist[e * p + r]);
    acc += zg(static_cast<std::int64_t>(e)) * part.value();
  }
  if (psi.is_trivial()) {
    CycloSum part(p);
    for (std::uint32_t r = 0; r < p; ++r) part.add(r, at_zero[r]);
    acc += part.value();
  }
  (void)zp;
  return acc;
}

Complex direct_zero_set(const BentContext& ctx, Code a) {
  const auto& V = *ctx.spec.space;
  const auto row = V.inner_product_row(a);
  CycloSum acc(V.characteristic());
  for (std::size_t x = 0; x < ctx.tables.values.size(); ++x)
    if (ctx.tables.values[x] == 0) acc.add(row[x]);
  return acc.value();
}

Classification nearest(const Complex& v, const std::vector<std::pair<Complex, Classification>>& candidates) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      gap = std::min(gap, std::abs(candidates[i].first - candidates[j].first));
  double best = std::numeric_limits<double>::infinity();
  Classification cls = Classification::unclassified;
  for (const auto& [c, k] : candidates) {
    const double r = std::abs(v - c);
    if (r < best) {
      best = r;
      cls = k;
    }
  }
  return best < gap / 2 ? cls : Classification::unclassified;
}

Classification by_modulus(const Complex& v, double scale) {
  const double mod = std::abs(v);
  if (mod < scale / 2) return Classification::zero;
  if (std::abs(mod - scale) < scale / 2) return Classification::gauss_product;
  return Classification::unclassified;
}

// (-1)^{m-1} eps^m sqrt(q), which is G(eta, lambda_1).
Complex g_eta(const BentContext& ctx) { return gauss_sum_quadratic_closed(*ctx.spec.codomain); }

double eta_minus_one(const BentContext& ctx) {
  const auto& cod = *ctx.spec.codomain;
  return cod.eta(cod.neg(1));
}

std::vector<std::pair<Complex, Classification>> s1_candidates(const BentContext& ctx) {
  const Complex main = ctx.spec.sign * main_scale(ctx.spec);
  return {{0, Classification::zero}, {main, Classification::plus_main}, {-main, Classification::minus_main}};
}

std::vector<std::pair<Complex, Classification>> s2_candidates(const BentContext& ctx) {
  const double q = ctx.spec.q();
  const Complex base = ctx.spec.sign * main_scale(ctx.spec) * g_eta(ctx) * eta_minus_one(ctx);
  return {{(q - 1) / q * base, Classification::gauss_product}, {-base / q, Classification::gauss_product}};
}

std::vector<std::pair<Complex, Classification>> t_candidates(const BentContext& ctx) {
  const double q = ctx.spec.q();
  if (ctx.spec.condition == Condition::I) {
    const Complex main = ctx.spec.sign * main_scale(ctx.spec);
    return {{(q - 1) / q * main, Classification::plus_main}, {-main / q, Classification::minus_main}};
  }
  const Complex main = ctx.spec.sign * main_scale(ctx.spec) * g_eta(ctx) / q;
  return {{0, Classification::zero}, {main, Classification::plus_main}, {-main, Classification::minus_main}};
}

HybridValue make(const BentContext& ctx, Complex v, Classification c) {
  return {v, c, main_scale(ctx.spec)};
}

HybridValue hat_closed(const BentContext& ctx, const MultChar& psi, Code a, bool twist) {
  const auto& cod = *ctx.spec.codomain;
  const Code z = ctx.tables.dual_values[a];
  if (z == 0) return make(ctx, 0, Classification::zero);
  const MultChar mu = mu_prime(ctx, psi, twist);
  const double q = ctx.spec.q();
  const Complex v = ctx.spec.sign * main_scale(ctx.spec) / q * gauss_sum(psi, 1) * psi(cod.neg(1)) *
                    gauss_sum(mu.conj(), 1) * mu(z);
  return make(ctx, v, Classification::gauss_product);
}

}  // namespace

std::string to_string(SumKind k) {
  switch (k) {
    case SumKind::s1: return "s1";
    case SumKind::s_hat1: return "s_hat1";
    case SumKind::s2: return "s2";
    case SumKind::s_hat2: return "s_hat2";
    case SumKind::t: return "t";
  }
  return "?";
}

SumKind parse_sum_kind(const std::string& name) {
  std::string s = name;
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  for (auto k : {SumKind::s1, SumKind::s_hat1, SumKind::s2, SumKind::s_hat2, SumKind::t})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown sum kind '" + name + "' (expected s1, s_hat1, s2, s_hat2 or t)");
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::zero: return "zero";
    case Classification::plus_main: return "plus_main";
    case Classification::minus_main: return "minus_main";
    case Classification::gauss_product: return "gauss_product";
    case Classification::trivial: return "trivial";
    case Classification::unclassified: return "unclassified";
  }
  return "?";
}

BentContext BentContext::prepare(BentSpec spec, unsigned threads) {
  BentTables tables = vectorial_dual(spec, threads);
  return {std::move(spec), std::move(tables)};
}

MultChar mu_prime(const BentContext& ctx, const MultChar& psi, bool twist) {
  const std::int64_t group = ctx.spec.q() - 1;
  const std::int64_t dm1 = static_cast<std::int64_t>((ctx.spec.d - 1) % group);
  // inverse of d - 1 modulo q - 1
  std::int64_t t = 0, nt = 1, r = group, nr = dm1;
  while (nr) {
    const auto qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (r != 1) throw InvalidArgument("gcd(d - 1, p^m - 1) = 1 is required");
  std::int64_t target = -static_cast<std::int64_t>(psi.index());
  if (twist) target += group / 2;
  const std::int64_t idx = ((target % group) * (t % group)) % group;
  return {ctx.spec.codomain, idx};
}

HybridValue s1(const BentContext& ctx, Code a, Method method) {
  require_condition(ctx, Condition::I, "s1");
  require_nonzero_a(ctx, a);
  if (method == Method::direct) {
    const Complex v = direct_sum(ctx, quadratic_character(ctx.spec.codomain), a);
    return make(ctx, v, nearest(v, s1_candidates(ctx)));
  }
  const int e = ctx.spec.codomain->eta(ctx.tables.dual_values[a]);
  const auto cls = e == 0 ? Classification::zero : (e > 0 ? Classification::plus_main : Classification::minus_main);
  return make(ctx, static_cast<double>(e) * ctx.spec.sign * main_scale(ctx.spec), cls);
}

HybridValue s_hat1(const BentContext& ctx, const MultChar& psi, Code a, Method method) {
  require_condition(ctx, Condition::I, "s_hat1");
  require_high_order(psi, ctx);
  require_nonzero_a(ctx, a);
  if (method == Method::direct) {
    const Complex v = direct_sum(ctx, psi, a);
    return make(ctx, v, by_modulus(v, main_scale(ctx.spec)));
  }
  return hat_closed(ctx, psi, a, false);
}

HybridValue s2(const BentContext& ctx, Code a, Method method) {
  require_condition(ctx, Condition::II, "s2");
  require_nonzero_a(ctx, a);
  if (method == Method::direct) {
    const Complex v = direct_sum(ctx, quadratic_character(ctx.spec.codomain), a);
    return make(ctx, v, nearest(v, s2_candidates(ctx)));
  }
  const auto cands = s2_candidates(ctx);
  return make(ctx, ctx.tables.dual_values[a] == 0 ? cands[0].first : cands[1].first,
              Classification::gauss_product);
}

HybridValue s_hat2(const BentContext& ctx, const MultChar& psi, Code a, Method method) {
  require_condition(ctx, Condition::II, "s_hat2");
  require_high_order(psi, ctx);
  require_nonzero_a(ctx, a);
  if (method == Method::direct) {
    const Complex v = direct_sum(ctx, psi, a);
    return make(ctx, v, by_modulus(v, main_scale(ctx.spec)));
  }
  return hat_closed(ctx, psi, a, true);
}

HybridValue t_sum(const BentContext& ctx, Code a, Method method) {
  require_nonzero_a(ctx, a);
  const auto cands = t_candidates(ctx);
  if (method == Method::direct) {
    const Complex v = direct_zero_set(ctx, a);
    return make(ctx, v, nearest(v, cands));
  }
  const Code z = ctx.tables.dual_values[a];
  if (ctx.spec.condition == Condition::I) return make(ctx, z == 0 ? cands[0].first : cands[1].first,
                                                      z == 0 ? cands[0].second : cands[1].second);
  const int e = ctx.spec.codomain->eta(z);
  const auto& pick = e == 0 ? cands[0] : (e > 0 ? cands[1] : cands[2]);
  return make(ctx, pick.first, pick.second);
}

HybridValue hybrid_sum(const BentContext& ctx, SumKind kind, const std::optional<MultChar>& psi, Code a,
                       Method method) {
  auto need_psi = [&]() -> const MultChar& {
    if (!psi) throw InvalidArgument(to_string(kind) + " needs a multiplicative character psi");
    return *psi;
  };
  switch (kind) {
    case SumKind::s1: return s1(ctx, a, method);
    case SumKind::s_hat1: return s_hat1(ctx, need_psi(), a, method);
    case SumKind::s2: return s2(ctx, a, method);
    case SumKind::s_hat2: return s_hat2(ctx, need_psi(), a, method);
    case SumKind::t: return t_sum(ctx, a, method);
  }
  throw InvalidArgument("unknown sum kind");
}

HybridValue trivial_at_zero(const BentContext& ctx, SumKind kind, const std::optional<MultChar>& psi) {
  switch (kind) {
    case SumKind::t: {
      const auto c = counts(ctx, CountTarget::function, CountMethod::enumerate);
      return make(ctx, static_cast<double>(c.n0), Classification::trivial);
    }
    case SumKind::s1:
    case SumKind::s2: {
      const auto c = counts(ctx, CountTarget::function, CountMethod::enumerate);
      return make(ctx, static_cast<double>(c.n1) - static_cast<double>(c.n_minus1), Classification::trivial);
    }
    case SumKind::s_hat1:
    case SumKind::s_hat2:
      if (!psi) throw InvalidArgument(to_string(kind) + " needs a multiplicative character psi");
      return make(ctx, direct_sum(ctx, *psi, 0), Classification::trivial);
  }
  throw InvalidArgument("unknown sum kind");
}

CountTriple counts(const BentContext& ctx, CountTarget target, CountMethod method) {
  const auto& spec = ctx.spec;
  const auto& cod = *spec.codomain;
  if (method == CountMethod::enumerate) {
    const auto& table = target == CountTarget::function ? ctx.tables.values : ctx.tables.dual_values;
    CountTriple c;
    for (Code v : table) {
      const int e = cod.eta(v);
      if (e == 0) ++c.n0;
      else if (e > 0) ++c.n1;
      else ++c.n_minus1;
    }
    return c;
  }

  const std::uint32_t p = spec.p(), n = spec.n(), m = spec.m;
  const std::int64_t q = spec.q();
  const std::int64_t pn = static_cast<std::int64_t>(ipow(p, n));
  CountTriple c;
  if (spec.condition == Condition::I) {
    // eps is +-1 for both F and F*
    const std::int64_t eps = spec.sign.real() > 0 ? 1 : -1;
    const std::int64_t half = static_cast<std::int64_t>(ipow(p, n / 2));
    const std::int64_t n0 = static_cast<std::int64_t>(ipow(p, n - m)) + eps * (half / static_cast<std::int64_t>(ipow(p, m))) * (q - 1);
    const std::int64_t n1 = (pn - eps * half) * (q - 1) / (2 * q);
    c = {static_cast<std::uint64_t>(n0), static_cast<std::uint64_t>(n1), static_cast<std::uint64_t>(n1)};
    return c;
  }
  const Complex ups = target == CountTarget::function ? spec.sign : 1.0 / spec.sign;
  const Complex lead = ((m - 1) % 2 == 0 ? 1.0 : -1.0) * unit_pow(epsilon_const(p), m) * eta_minus_one(ctx) * ups;
  const std::int64_t sgn = lead.real() > 0 ? 1 : -1;
  const std::int64_t base = static_cast<std::int64_t>(ipow(p, n - m));
  const std::int64_t root = static_cast<std::int64_t>(ipow(p, (n - m) / 2));
  c.n0 = static_cast<std::uint64_t>(base);
  c.n1 = static_cast<std::uint64_t>((base + sgn * root) * (q - 1) / 2);
  c.n_minus1 = static_cast<std::uint64_t>((base - sgn * root) * (q - 1) / 2);
  return c;
}

}  // namespace dualbent
