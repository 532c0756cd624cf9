// One PASS/FAIL line per acceptance criterion, with runtime against its limit.
// Exit status is 0 when criteria 1-9 pass and every ratio-bound violation in
// criterion 10 is one of the known counterexamples listed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dualbent/codebook.hpp"
#include "dualbent/hybrid.hpp"
#include "verify.hpp"

using namespace dualbent;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail.clear();
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : "; ") + s;
  }
};

struct RatioRecord {
  std::string label;
  Construction kind;
  std::uint32_t p, n, m;
  double sign;
  double ratio, bound;
  bool holds() const { return ratio < bound; }
};

std::vector<RatioRecord> g_ratios;

Code prim(std::uint32_t p, std::uint32_t k) { return get_field(p, k)->primitive(); }

BentContext ext(std::uint32_t p, std::uint32_t n, std::uint32_t m, Code e) {
  FamilyParams P;
  P.e = e;
  return BentContext::prepare(make_bent(Family::ext_square, p, {n}, m, 0, P));
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string label(const char* what, std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  std::ostringstream s;
  s << what << "(" << p << "," << n << "," << m << ")";
  return s.str();
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.N != b.N || a.K != b.K || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (std::abs(a.entries[i].magnitude - b.entries[i].magnitude) > 1e-9 || a.entries[i].count != b.entries[i].count)
      return false;
  return true;
}

void record_ratio(const std::string& name, Construction c, const BentContext& ctx, const Spectrum& s) {
  g_ratios.push_back({name, c, ctx.spec.p(), ctx.spec.n(), ctx.spec.m, ctx.spec.sign.real(), s.ratio,
                      ratio_bound(c, ctx.spec.q())});
}

// Shared checks for a built codebook against its closed distribution.
void check_book(Outcome& o, const std::string& name, Construction c, const BentContext& ctx, const Codebook& C,
                SpectrumMode mode, std::uint64_t N, std::uint64_t K, double imax, std::size_t values) {
  const auto s = spectrum(C, mode);
  record_ratio(name, c, ctx, s);
  if (s.N != N || s.K != K) o.fail(name + ": (N,K) = (" + std::to_string(s.N) + "," + std::to_string(s.K) + ")");
  if (std::abs(s.imax - imax) > 1e-9) o.fail(name + ": I_max = " + fmt(s.imax, 12));
  if (s.entries.size() != values) o.fail(name + ": " + std::to_string(s.entries.size()) + " distinct magnitudes");
  if (s.total() != N * (N - 1)) o.fail(name + ": counts sum to " + std::to_string(s.total()));
  if (!same_spectrum(s, closed_spectrum(c, ctx))) o.fail(name + ": spectrum differs from closed form");
  if (!C.rows_distinct()) o.fail(name + ": repeated codewords");
  o.note(name + " (" + std::to_string(N) + "," + std::to_string(K) + ") I_max " + fmt(s.imax) + " I_W " +
         fmt(s.welch, 5));
}

// ---------------------------------------------------------------- criteria

Outcome c1() {
  Outcome o;
  const auto ctx = ext(3, 2, 1, prim(3, 2));
  const auto C = build_cd(ctx);
  check_book(o, label("C_D", 3, 2, 1), Construction::cd, ctx, C, SpectrumMode::pairwise, 9, 4, 0.5, 2);
  const auto s = spectrum(C, SpectrumMode::pairwise);
  if (std::abs(s.welch - 0.3953) > 5e-4 || std::abs(s.welch - 0.3954) > 5e-4) o.fail("I_W = " + fmt(s.welch));
  return o;
}

Outcome c2() {
  Outcome o;
  const auto ctx = ext(3, 8, 2, prim(3, 8));
  check_book(o, label("C_D", 3, 8, 2), Construction::cd, ctx, build_cd(ctx), SpectrumMode::translate, 6561, 2880,
             1.0 / 64, 2);
  return o;
}

Outcome c3(std::uint32_t n, std::uint32_t m, Code e) {
  Outcome o;
  const auto ctx = ext(3, n, m, e);
  check_book(o, label("C_D1", 3, n, m), Construction::cd1, ctx, build_cd1(ctx), SpectrumMode::translate,
             ipow(3, n), 80, 0.125, 3);
  return o;
}

Outcome c4() {
  Outcome o;
  for (auto [m, e] : std::vector<std::pair<std::uint32_t, Code>>{{1, 1}, {2, prim(3, 4)}}) {
    const auto ctx = ext(3, 4, m, e);
    const double scale = 9.0, main = ctx.spec.sign.real() * scale;
    std::uint64_t zero = 0, plus = 0, minus = 0;
    double worst = 0;
    for (Code a = 1; a < 81; ++a) {
      const auto d = s1(ctx, a, Method::direct).value;
      worst = std::max(worst, std::abs(d - s1(ctx, a, Method::closed).value));
      if (std::abs(d) < 1e-6 * scale) ++zero;
      else if (std::abs(d - main) < 1e-6 * scale) ++plus;
      else if (std::abs(d + main) < 1e-6 * scale) ++minus;
    }
    const auto name = label("S1", 3, 4, m);
    if (worst >= 1e-6 * scale) o.fail(name + ": residual " + fmt(worst));
    const auto dual = counts(ctx, CountTarget::dual, CountMethod::enumerate);
    if (zero != dual.n0 - 1 || plus != dual.n1 || minus != dual.n_minus1)
      o.fail(name + ": multiset (" + std::to_string(zero) + "," + std::to_string(plus) + "," + std::to_string(minus) +
             ")");
    o.note(name + " {0:" + std::to_string(zero) + ", " + fmt(main) + ":" + std::to_string(plus) + ", " + fmt(-main) +
           ":" + std::to_string(minus) + "} residual " + fmt(worst, 2));
  }
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t checked = 0;
  for (Code e : {Code{1}, prim(3, 4)}) {
    const auto ctx = ext(3, 4, 2, e);
    const double tol = sum_tolerance(81);
    int chars = 0;
    for (std::uint32_t j = 1; j < 8; ++j) {
      const MultChar psi(ctx.spec.codomain, j);
      if (psi.order() <= 2) continue;
      ++chars;
      for (Code a = 1; a < 81; ++a) {
        const auto d = s_hat1(ctx, psi, a, Method::direct).value;
        const auto c = s_hat1(ctx, psi, a, Method::closed).value;
        const double mod = std::abs(d);
        if (std::abs(d - c) >= tol) o.fail("j=" + std::to_string(j) + " a=" + std::to_string(a) + ": direct != closed");
        if (mod >= tol && std::abs(mod - 9) >= tol) o.fail("|S_hat1| = " + fmt(mod));
        ++checked;
      }
    }
    if (chars != 6) o.fail(std::to_string(chars) + " characters of order > 2");
  }
  o.note(std::to_string(checked) + " (psi, a) pairs over two choices of e");
  return o;
}

Outcome c6() {
  Outcome o;
  {
    const auto ctx = ext(3, 5, 1, 1);
    const double tol = sum_tolerance(243);
    double worst = 0;
    for (Code a = 1; a < 243; ++a)
      for (auto k : {SumKind::s2, SumKind::t})
        worst = std::max(worst, std::abs(hybrid_sum(ctx, k, std::nullopt, a, Method::direct).value -
                                         hybrid_sum(ctx, k, std::nullopt, a, Method::closed).value));
    if (worst >= tol) o.fail("S2/T' residual " + fmt(worst));
    o.note("S2, T' on (3,5,1) residual " + fmt(worst, 2));
  }
  {
    const auto ctx = ext(5, 3, 1, 1);
    const double tol = sum_tolerance(125);
    double worst = 0;
    for (std::uint32_t j : {1u, 3u}) {
      const MultChar psi(ctx.spec.codomain, j);
      if (psi.order() != 4) o.fail("psi_" + std::to_string(j) + " has order " + std::to_string(psi.order()));
      for (Code a = 1; a < 125; ++a)
        worst = std::max(worst, std::abs(s_hat2(ctx, psi, a, Method::direct).value -
                                         s_hat2(ctx, psi, a, Method::closed).value));
    }
    if (worst >= tol) o.fail("S_hat2 residual " + fmt(worst));
    o.note("S_hat2 on (5,3,1) residual " + fmt(worst, 2));
  }
  return o;
}

Outcome c7() {
  Outcome o;
  for (auto [n, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {4, 1}, {4, 2}})
    for (Code e : {Code{1}, prim(3, n)}) {
      const auto ctx = ext(3, n, m, e);
      const auto d = seq_crosscorr(ctx);
      const auto c = seq_crosscorr_closed(ctx);
      bool same = d.size() == 2 && c.size() == 2;
      std::uint64_t total = 0;
      for (std::size_t i = 0; same && i < 2; ++i) {
        same = std::abs(d[i].value - c[i].value) < 1e-9 && d[i].count == c[i].count;
        total += d[i].count;
      }
      const auto name = label("C(tau)", 3, n, m) + (e == 1 ? " e=1" : " e=prim");
      if (!same || total != ipow(3, n) - 1) o.fail(name + ": distribution differs");
      else
        o.note(name + " {" + fmt(d[0].value) + ":" + std::to_string(d[0].count) + ", " + fmt(d[1].value) + ":" +
               std::to_string(d[1].count) + "}");
    }
  return o;
}

Outcome c8() {
  Outcome o;
  for (std::uint32_t m : {1u, 2u})
    for (Code e : {Code{1}, prim(3, 4)}) {
      const auto ctx = ext(3, 4, m, e);
      const auto C = build_partial_hadamard(ctx);
      const auto s = spectrum(C, SpectrumMode::pairwise);
      const auto name = label("H", 3, 4, m) + (ctx.spec.sign.real() > 0 ? " eps=+1" : " eps=-1");
      record_ratio(name, Construction::hadamard, ctx, s);
      if (!same_spectrum(s, closed_spectrum(Construction::hadamard, ctx))) o.fail(name + ": spectrum != closed form");
      std::map<long long, std::uint64_t> from_r, from_s;
      for (double v : hadamard_transform_magnitudes(ctx)) from_r[std::llround(v * 1e9)] += C.N;
      for (const auto& en : s.entries) from_s[std::llround(en.magnitude * 1e9)] += en.count;
      if (from_r != from_s) o.fail(name + ": spectrum != N x {(1/2K)|r_hat_l|}");
      o.note(name + " K=" + std::to_string(C.K) + " I_max " + fmt(s.imax));
    }
  return o;
}

Outcome c9() {
  Outcome o;
  cli::RunConfig cfg;
  for (const auto& rep : {cli::verify_characters(cfg), cli::verify_bent(cfg), cli::verify_sums(cfg)}) {
    std::size_t bad = 0;
    for (const auto& r : rep.records)
      if (!r.ok) {
        ++bad;
        o.fail(rep.suite + ": " + r.name);
      }
    o.note(rep.suite + " " + std::to_string(rep.records.size() - bad) + "/" + std::to_string(rep.records.size()));
  }
  // sampled Walsh identities at p^n = 3^8
  const auto ctx = ext(3, 8, 2, prim(3, 8));
  const auto& V = *ctx.spec.space;
  const auto& zp = roots_of_unity(3);
  const double pn = V.size(), half = std::sqrt(pn);
  double worst = 0;
  for (Code c : {Code{1}, ctx.spec.codomain->primitive()}) {
    const auto f = component_table(*ctx.spec.codomain, ctx.tables.values, c);
    const auto w = walsh_spectrum(V, f);
    double parseval = 0;
    for (Code a = 0; a < V.size(); ++a) {
      worst = std::max(worst, std::abs(std::abs(w[a]) - half) / half);
      parseval += std::norm(w[a]);
    }
    worst = std::max(worst, std::abs(parseval - pn * pn) / (pn * pn));
    for (Code x = 0; x < V.size(); x += 331) {
      const auto row = V.inner_product_row(x);
      Complex inv{0, 0};
      for (Code a = 0; a < V.size(); ++a) inv += w[a] * zp(row[a]);
      worst = std::max(worst, std::abs(inv / pn - zp(f[x])));
    }
  }
  if (worst > 1e-9) o.fail("Walsh identities at 3^8: residual " + fmt(worst));
  o.note("3^8 sampled Walsh residual " + fmt(worst, 2));
  return o;
}

// Known counterexamples: the C_D1 bound fails on every instance (the ratio
// tends to r/(r-1) with r = p^{(n-m)/2}, above sqrt(1/(1-1/p^m))), and the
// partial Hadamard bound fails at p^m = 9, n = 4 with eps = +1.
bool expected_violation(const RatioRecord& r) {
  if (r.kind == Construction::cd1) return true;
  return r.kind == Construction::hadamard && r.p == 3 && r.n == 4 && r.m == 2 && r.sign > 0;
}

Outcome c10(bool& only_known) {
  Outcome o;
  only_known = true;
  std::size_t held = 0;
  for (const auto& r : g_ratios) {
    if (r.holds()) {
      ++held;
      continue;
    }
    const bool known = expected_violation(r);
    only_known = only_known && known;
    o.fail(r.label + " " + to_string(r.kind) + ": ratio " + fmt(r.ratio) + " >= bound " + fmt(r.bound) +
           (known ? " [known]" : " [unexpected]"));
  }
  o.note(std::to_string(held) + "/" + std::to_string(g_ratios.size()) + " instances within bound");
  if (!o.ok) o.detail = std::to_string(held) + "/" + std::to_string(g_ratios.size()) + " within bound; " + o.detail;
  return o;
}

}  // namespace

int main() {
  bool all_ok = true;
  auto run = [&](const std::string& id, const std::string& what, double limit, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) o.fail("runtime " + fmt(secs, 3) + " s over limit " + fmt(limit) + " s");
    all_ok = all_ok && o.ok;
    std::printf("%s  %-4s %-44s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", id.c_str(), what.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  };

  run("1", "C_D (9,4) pairwise", 0.1, c1);
  run("2", "C_D (6561,2880) translate", 30, c2);
  run("3a", "C_D1 (243,80)", 5, [] { return c3(5, 1, 1); });
  run("3b", "C_D1 (729,80)", 5, [] { return c3(6, 2, prim(3, 6)); });
  run("4", "S1 direct = closed, multiset = dual counts", 1, c4);
  run("5", "S_hat1 at p=3 n=4 m=2, six characters", 5, c5);
  run("6", "S2, T' at (3,5,1); S_hat2 at (5,3,1)", 5, c6);
  run("7", "sequence cross-correlation distribution", 1, c7);
  run("8", "partial Hadamard n=4, m in {1,2}", 10, c8);
  run("9", "property suites", 60, c9);

  bool only_known = true;
  const bool before = all_ok;
  run("10", "ratio bounds on every built instance", 0, [&] { return c10(only_known); });

  // criterion 10 is reported as measured; only unexpected violations fail the run
  const bool ok = before && only_known;
  std::printf("acceptance: %s%s\n", ok ? "OK" : "FAILED",
              ok && !all_ok ? " (criterion 10 fails only on the known counterexamples)" : "");
  return ok ? 0 : 1;
}
