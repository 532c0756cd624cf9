#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "dualbent/codebook.hpp"
#include "dualbent/error.hpp"

namespace dualbent::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cnum(const Complex& v) { return "(" + num(v.real()) + ", " + num(v.imag()) + ")"; }

/// Accumulates the worst residual and the first counterexample of one check.
class Check {
 public:
  Check(std::string name, std::string anchor) { rec_.name = std::move(name), rec_.anchor = std::move(anchor); }

  void residual(double r, double tol, const std::string& where) {
    rec_.max_residual = std::max(rec_.max_residual, r);
    if (!(r < tol)) fail(where + " residual " + num(r));
  }
  void expect(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }
  void fail(const std::string& where) {
    if (rec_.ok) rec_.counterexample = where;
    rec_.ok = false;
  }
  VerifyRecord done() { return std::move(rec_); }

 private:
  VerifyRecord rec_;
};

std::string describe(const BentSpec& s) {
  std::ostringstream o;
  o << to_string(s.family) << " p=" << s.p() << " degrees=(";
  for (std::size_t i = 0; i < s.space->degrees().size(); ++i) o << (i ? "," : "") << s.space->degrees()[i];
  o << ") m=" << s.m;
  if (s.family == Family::ext_square || s.family == Family::unitary_form || s.family == Family::pair_monomial)
    o << " e=" << s.params.e;
  if (s.family == Family::pair_monomial) o << " u=" << s.params.u;
  return o.str();
}

FamilyParams with_e(Code e, std::uint64_t u = 1) {
  FamilyParams P;
  P.e = e;
  P.u = u;
  return P;
}

Code prim(std::uint32_t p, std::uint32_t k) { return get_field(p, k)->primitive(); }

/// Small instances of every family, both conditions.
std::vector<BentSpec> default_catalog() {
  std::vector<BentSpec> out;
  auto add = [&](Family f, std::uint32_t p, std::vector<std::uint32_t> deg, std::uint32_t m, FamilyParams P) {
    out.push_back(make_bent(f, p, deg, m, 0, P));
  };
  add(Family::ext_square, 3, {2}, 1, with_e(1));
  add(Family::ext_square, 3, {2}, 1, with_e(prim(3, 2)));
  add(Family::ext_square, 3, {4}, 1, with_e(1));
  add(Family::ext_square, 3, {4}, 2, with_e(prim(3, 4)));
  add(Family::ext_square, 3, {6}, 2, with_e(1));
  add(Family::ext_square, 3, {3}, 1, with_e(1));
  add(Family::ext_square, 3, {5}, 1, with_e(1));
  add(Family::ext_square, 5, {2}, 1, with_e(prim(5, 2)));
  add(Family::ext_square, 5, {3}, 1, with_e(1));
  add(Family::ext_square, 7, {2}, 1, with_e(1));
  add(Family::pair_monomial, 3, {2, 2}, 1, with_e(1, 1));
  add(Family::pair_monomial, 3, {2, 2}, 1, with_e(prim(3, 2), 3));
  add(Family::pair_monomial, 5, {2, 2}, 1, with_e(1, 1));
  {
    FamilyParams P;
    P.alphas = {1, 1};
    add(Family::diag_quadratic, 3, {1, 1}, 1, P);
    P.alphas = {1, 2, 1};
    add(Family::diag_quadratic, 3, {1, 1, 1}, 1, P);
    P.alphas = {1, prim(3, 2)};
    add(Family::diag_quadratic, 3, {2, 2}, 2, P);
    P.alphas = {1, 2, 3};
    add(Family::diag_quadratic, 5, {1, 1, 1}, 1, P);
  }
  add(Family::unitary_form, 3, {2}, 1, with_e(1));
  add(Family::unitary_form, 3, {4}, 1, with_e(prim(3, 2)));
  add(Family::unitary_form, 3, {4}, 2, with_e(1));
  add(Family::unitary_form, 5, {2}, 1, with_e(2));
  {
    FamilyParams P;
    P.alphas = {1, 1, 1};
    add(Family::composite_maiorana, 3, {1, 1, 1}, 1, P);
    P.alphas = {2, 2, 2};
    add(Family::composite_maiorana, 3, {3, 1, 1}, 1, P);
    P.alphas = {1, 1, 1};
    P.l_coeffs = {0, 1};
    P.beta = prim(3, 2);
    P.gamma = prim(3, 2);
    add(Family::composite_maiorana, 3, {1, 2, 2}, 1, P);
  }
  return out;
}

std::vector<BentSpec> instances_or(const RunConfig& cfg, std::vector<BentSpec> fallback) {
  if (cfg.has_instance()) return {build_spec(cfg)};
  return fallback;
}

// ---------------------------------------------------------------- characters

struct FieldCase {
  std::uint32_t p, k;
};

void gauss_properties(const FieldPtr& F, std::vector<VerifyRecord>& out) {
  const auto& f = *F;
  const std::uint32_t q = f.size();
  const std::string tag = "GF(" + std::to_string(q) + ")";
  const double tol = sum_tolerance(q);
  std::vector<std::vector<Complex>> G(q - 1, std::vector<Complex>(q));
  for (std::uint32_t j = 0; j + 1 < q; ++j)
    for (Code b = 0; b < q; ++b) G[j][b] = gauss_sum(MultChar(F, j), b);

  Check orth_add(tag + " additive orthogonality", "sum_x lambda_a(x) = q [a = 0]");
  for (Code a = 0; a < q; ++a) {
    Complex s{0, 0};
    for (Code x = 0; x < q; ++x) s += additive_character(FieldElem(F, a), FieldElem(F, x));
    orth_add.residual(std::abs(s - Complex(a == 0 ? q : 0, 0)), tol, "a = " + std::to_string(a));
  }
  out.push_back(orth_add.done());

  Check orth_mul(tag + " multiplicative orthogonality", "sum_{x != 0} psi_j(x) = (q - 1) [j = 0]");
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    const MultChar psi(F, j);
    Complex s{0, 0};
    for (Code x = 1; x < q; ++x) s += psi(x);
    orth_mul.residual(std::abs(s - Complex(j == 0 ? q - 1 : 0, 0)), tol, "j = " + std::to_string(j));
  }
  out.push_back(orth_mul.done());

  Check values(tag + " Gauss sum values", "G = q-1, -1, 0, or |G| = sqrt(q)");
  for (std::uint32_t j = 0; j + 1 < q; ++j)
    for (Code b = 0; b < q; ++b) {
      const auto where = "j = " + std::to_string(j) + ", b = " + std::to_string(b);
      if (j == 0) values.residual(std::abs(G[j][b] - Complex(b == 0 ? q - 1.0 : -1.0, 0)), tol, where);
      else if (b == 0) values.residual(std::abs(G[j][b]), tol, where);
      else values.residual(std::abs(std::abs(G[j][b]) - std::sqrt(double(q))), tol, where);
    }
  out.push_back(values.done());

  Check props(tag + " Gauss sum properties", "G(psi, lambda_ab) = conj(psi(a)) G(psi, lambda_b); G(psi, conj(lambda)) = "
                                              "psi(-1) G; G(conj(psi), lambda) = psi(-1) conj(G)");
  const Code minus_one = f.neg(1);
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    const MultChar psi(F, j);
    const Complex pm1 = psi(minus_one);
    const std::uint32_t jc = (q - 1 - j) % (q - 1);
    for (Code b = 0; b < q; ++b) {
      const auto where = "j = " + std::to_string(j) + ", b = " + std::to_string(b);
      for (Code a = 1; a < q; ++a)
        props.residual(std::abs(G[j][f.mul(a, b)] - std::conj(psi(a)) * G[j][b]), tol, where + ", a = " + std::to_string(a));
      props.residual(std::abs(G[j][f.neg(b)] - pm1 * G[j][b]), tol, where);
      props.residual(std::abs(G[jc][b] - pm1 * std::conj(G[j][b])), tol, where);
    }
  }
  out.push_back(props.done());

  Check sq(tag + " quadratic Gauss sum squared", "G(eta, lambda_1)^2 = eta(-1) q");
  const Complex g = G[(q - 1) / 2][1];
  sq.residual(std::abs(g * g - Complex(f.eta(minus_one) * double(q), 0)), tol * std::sqrt(double(q)), "");
  out.push_back(sq.done());
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& r : records)
    if (!r.ok) return false;
  return !records.empty();
}

void VerifyReport::print(std::ostream& out) const {
  std::size_t passed = 0;
  for (const auto& r : records) {
    out << (r.ok ? "PASS " : "FAIL ") << r.name << "  [" << r.anchor << "]";
    if (r.max_residual > 0) out << "  max residual " << num(r.max_residual);
    if (!r.counterexample.empty()) out << "  (counterexample: " << r.counterexample << ")";
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
    passed += r.ok;
  }
  out << suite << ": " << passed << "/" << records.size() << " checks passed, overall " << (ok() ? "PASS" : "FAIL")
      << "\n";
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records)
    recs.push_back({{"name", r.name},
                    {"anchor", r.anchor},
                    {"status", r.ok ? "pass" : "fail"},
                    {"max_residual", r.max_residual},
                    {"counterexample", r.counterexample},
                    {"note", r.note}});
  return {{"suite", suite}, {"pass", ok()}, {"records", recs}};
}

VerifyReport verify_characters(const RunConfig& cfg) {
  VerifyReport rep{"characters", {}};
  std::vector<FieldCase> props, fourier, closed;
  if (cfg.n) {
    props = fourier = closed = {{cfg.p, *cfg.n}};
  } else {
    props = {{3, 1}, {3, 2}, {3, 3}, {5, 2}};
    fourier = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
    for (std::uint32_t p : {3u, 5u, 7u})
      for (std::uint32_t k = 1; ipow(p, k) <= 343; ++k) closed.push_back({p, k});
  }
  for (const auto& c : props) gauss_properties(get_field(c.p, c.k), rep.records);

  Check cl("quadratic Gauss sum closed form", "G(eta, lambda_1) = (-1)^{m-1} sqrt(-1)^{((p-1)/2)^2 m} sqrt(q)");
  for (const auto& c : closed) {
    const auto F = get_field(c.p, c.k);
    const Complex brute = gauss_sum(quadratic_character(F), 1);
    cl.residual(std::abs(brute - gauss_sum_quadratic_closed(*F)), sum_tolerance(F->size()),
                "q = " + std::to_string(F->size()));
  }
  rep.records.push_back(cl.done());

  Check mva("multiplicative via additive expansion", "psi(x) = (1/q) sum_b G(psi, conj(lambda_b)) lambda_b(x)");
  Check avm("additive via multiplicative expansion", "lambda(x) = (1/(q-1)) sum_psi G(conj(psi), lambda) psi(x), x != 0");
  std::size_t skipped = 0;
  for (const auto& c : fourier) {
    const auto F = get_field(c.p, c.k);
    const std::uint32_t q = F->size();
    const double tol = sum_tolerance(double(q) * q);
    for (std::uint32_t j = 0; j + 1 < q; ++j)
      for (Code x = 0; x < q; ++x) {
        // psi_0(0) = 1 by convention while the expansion gives 0 there
        if (j == 0 && x == 0) {
          ++skipped;
          continue;
        }
        mva.residual(fourier_residual(FourierKind::mult_via_add, F, j, x), tol,
                     "q = " + std::to_string(q) + ", j = " + std::to_string(j) + ", x = " + std::to_string(x));
      }
    for (Code a = 0; a < q; ++a)
      for (Code x = 1; x < q; ++x)
        avm.residual(fourier_residual(FourierKind::add_via_mult, F, a, x), tol,
                     "q = " + std::to_string(q) + ", a = " + std::to_string(a) + ", x = " + std::to_string(x));
  }
  auto r = mva.done();
  if (r.ok && skipped) r.note = "trivial psi at x = 0 excluded in " + std::to_string(skipped) + " fields";
  rep.records.push_back(r);
  rep.records.push_back(avm.done());
  return rep;
}

// ---------------------------------------------------------------- bent

VerifyReport verify_bent(const RunConfig& cfg) {
  VerifyReport rep{"bent", {}};
  for (const auto& spec : instances_or(cfg, default_catalog())) {
    const auto name = describe(spec);
    const auto& V = *spec.space;
    const auto& cod = *spec.codomain;
    const auto report = verify_condition(spec, cfg.threads);
    for (const auto& c : report.checks) {
      VerifyRecord r;
      r.name = name + ": " + c.name;
      r.anchor = "Condition " + to_string(spec.condition);
      r.ok = c.ok;
      r.counterexample = c.ok ? "" : c.detail;
      rep.records.push_back(std::move(r));
    }
    if (!report.tables) continue;
    const auto& T = *report.tables;
    const double pn = double(V.size());
    const double half = std::sqrt(pn);

    Check bent(name + ": bentness and Parseval", "|W_{F_c}(a)| = p^{n/2}, sum_a |W|^2 = p^{2n}");
    Check inverse(name + ": inverse Walsh transform", "(1/p^n) sum_a W(a) zeta^{<a,x>} = zeta^{f(x)}");
    const auto& zp = roots_of_unity(V.characteristic());
    for (Code c = 1; c < cod.size(); ++c) {
      const auto fc = component_table(cod, T.values, c);
      const auto w = walsh_spectrum(V, fc);
      double parseval = 0;
      for (Code a = 0; a < V.size(); ++a) {
        bent.residual(std::abs(std::abs(w[a]) - half), sum_tolerance(pn), "c = " + std::to_string(c) + ", a = " + std::to_string(a));
        parseval += std::norm(w[a]);
      }
      bent.residual(std::abs(parseval - pn * pn) / pn, sum_tolerance(pn), "Parseval, c = " + std::to_string(c));
      if (c == 1 && V.size() <= 729) {
        for (Code x = 0; x < V.size(); ++x) {
          Complex s{0, 0};
          for (Code a = 0; a < V.size(); ++a) s += w[a] * zp(V.inner_product(a, x));
          inverse.residual(std::abs(s / pn - zp(fc[x])), sum_tolerance(pn), "x = " + std::to_string(x));
        }
      }
    }
    rep.records.push_back(bent.done());
    if (V.size() <= 729) rep.records.push_back(inverse.done());

    Check sym(name + ": dual symmetry", "F*(0) = 0, F*(-a) = F*(a) for even d");
    sym.expect(T.dual_values[0] == 0, "F*(0) != 0");
    for (Code a = 0; a < V.size(); ++a)
      sym.expect(T.dual_values[V.neg(a)] == T.dual_values[a], "a = " + std::to_string(a));
    rep.records.push_back(sym.done());

    if (V.size() * std::uint64_t(cod.size()) * cod.size() <= 2'000'000) {
      Check search(name + ": dual by exhaustive search", "unique z with Tr(c^{1-d} z) = (F_c)*(a) for all c");
      const auto found = vectorial_dual_search(spec, T.values);
      for (Code a = 0; a < V.size(); ++a)
        search.expect(found[a] == T.dual_values[a], "a = " + std::to_string(a));
      rep.records.push_back(search.done());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- sums

namespace {

std::vector<BentSpec> default_sum_instances() {
  return {make_bent(Family::ext_square, 3, {2}, 1, 0, with_e(1)),
          make_bent(Family::ext_square, 3, {4}, 1, 0, with_e(1)),
          make_bent(Family::ext_square, 3, {4}, 2, 0, with_e(prim(3, 4))),
          make_bent(Family::ext_square, 3, {5}, 1, 0, with_e(1)),
          make_bent(Family::ext_square, 5, {3}, 1, 0, with_e(1)),
          make_bent(Family::ext_square, 3, {6}, 2, 0, with_e(prim(3, 6))),
          make_bent(Family::pair_monomial, 3, {2, 2}, 1, 0, with_e(1, 3))};
}

void sweep(const BentContext& ctx, SumKind kind, const std::optional<MultChar>& psi, const std::string& name,
           const std::string& anchor, std::vector<VerifyRecord>& out) {
  Check c(name, anchor);
  const double tol = sum_tolerance(ctx.spec.space->size());
  std::map<std::string, std::size_t> classes;
  for (Code a = 1; a < ctx.spec.space->size(); ++a) {
    const auto d = hybrid_sum(ctx, kind, psi, a, Method::direct);
    const auto k = hybrid_sum(ctx, kind, psi, a, Method::closed);
    c.residual(std::abs(d.value - k.value), tol, "a = " + std::to_string(a) + " direct " + cnum(d.value) + " closed " + cnum(k.value));
    c.expect(d.classification == k.classification, "a = " + std::to_string(a) + " classification");
    c.expect(d.classification != Classification::unclassified, "a = " + std::to_string(a) + " unclassified");
    ++classes[to_string(d.classification)];
  }
  auto r = c.done();
  if (r.ok) {
    std::string s;
    for (const auto& [k, v] : classes) s += (s.empty() ? "" : ", ") + k + ": " + std::to_string(v);
    r.note = s;
  }
  out.push_back(std::move(r));
}

}  // namespace

VerifyReport verify_sums(const RunConfig& cfg) {
  VerifyReport rep{"sums", {}};
  for (const auto& spec : instances_or(cfg, default_sum_instances())) {
    const auto name = describe(spec);
    const auto ctx = BentContext::prepare(spec, cfg.threads);
    const auto& cod = ctx.spec.codomain;
    const std::uint32_t q = cod->size();
    if (spec.condition == Condition::I) {
      sweep(ctx, SumKind::s1, std::nullopt, name + ": S1 direct = closed", "S1 in {0, +-eps p^{n/2}} by eta(F*(a))",
            rep.records);
      for (std::uint32_t j = 1; j + 1 < q; ++j) {
        const MultChar psi(cod, j);
        if (psi.order() <= 2) continue;
        sweep(ctx, SumKind::s_hat1, psi, name + ": S^1 direct = closed, psi_" + std::to_string(j),
              "S^1 = (1/q) eps p^{n/2} G(psi) psi(-1) G(conj mu') mu'(F*(a))", rep.records);
      }
      sweep(ctx, SumKind::t, std::nullopt, name + ": T direct = closed", "T over F(x) = 0", rep.records);

      Check ms(name + ": S1 value multiset", "zeros N0(F*) - 1, +eps p^{n/2} N1(F*), -eps p^{n/2} N-1(F*)");
      const auto dual = counts(ctx, CountTarget::dual, CountMethod::enumerate);
      std::uint64_t z = 0, plus = 0, minus = 0;
      for (Code a = 1; a < spec.space->size(); ++a) {
        const auto v = s1(ctx, a, Method::direct).classification;
        z += v == Classification::zero;
        plus += v == Classification::plus_main;
        minus += v == Classification::minus_main;
      }
      ms.expect(z == dual.n0 - 1 && plus == dual.n1 && minus == dual.n_minus1,
                "got (" + std::to_string(z) + ", " + std::to_string(plus) + ", " + std::to_string(minus) + ")");
      rep.records.push_back(ms.done());
    } else {
      sweep(ctx, SumKind::s2, std::nullopt, name + ": S2 direct = closed",
            "S2 two-valued by F*(a) = 0, scaled by upsilon G(eta) eta(-1)", rep.records);
      for (std::uint32_t j = 1; j + 1 < q; ++j) {
        const MultChar psi(cod, j);
        if (psi.order() <= 2) continue;
        sweep(ctx, SumKind::s_hat2, psi, name + ": S^2 direct = closed, psi_" + std::to_string(j),
              "S^2 with mu'^{d-1} = psi^{-1} eta", rep.records);
      }
      sweep(ctx, SumKind::t, std::nullopt, name + ": T' direct = closed", "T' three branches by eta(F*(a))",
            rep.records);
    }
    for (auto target : {CountTarget::function, CountTarget::dual}) {
      const std::string who = target == CountTarget::function ? "F" : "F*";
      Check cc(name + ": counts of " + who, "N0, N1, N-1 closed forms");
      const auto e = counts(ctx, target, CountMethod::enumerate);
      const auto c = counts(ctx, target, CountMethod::closed);
      cc.expect(e == c, "enumerated (" + std::to_string(e.n0) + ", " + std::to_string(e.n1) + ", " +
                            std::to_string(e.n_minus1) + ") vs closed (" + std::to_string(c.n0) + ", " +
                            std::to_string(c.n1) + ", " + std::to_string(c.n_minus1) + ")");
      cc.expect(e.total() == spec.space->size(), "counts do not sum to p^n");
      rep.records.push_back(cc.done());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- codebooks

namespace {

bool same_spectrum(const Spectrum& a, const Spectrum& b, std::string& why) {
  if (a.N != b.N || a.K != b.K) {
    why = "(N, K) differ";
    return false;
  }
  if (a.entries.size() != b.entries.size()) {
    why = std::to_string(a.entries.size()) + " vs " + std::to_string(b.entries.size()) + " distinct magnitudes";
    return false;
  }
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (std::abs(a.entries[i].magnitude - b.entries[i].magnitude) > 1e-9 || a.entries[i].count != b.entries[i].count) {
      why = "entry " + num(a.entries[i].magnitude) + " x " + std::to_string(a.entries[i].count) + " vs " +
            num(b.entries[i].magnitude) + " x " + std::to_string(b.entries[i].count);
      return false;
    }
  }
  return true;
}

std::string spectrum_text(const Spectrum& s) {
  std::string t;
  for (const auto& e : s.entries) t += (t.empty() ? "" : ", ") + num(e.magnitude) + " x " + std::to_string(e.count);
  return t;
}

void codebook_checks(const BentContext& ctx, Construction which, unsigned threads, std::vector<VerifyRecord>& out) {
  const auto name = describe(ctx.spec) + ": " + to_string(which);
  const Codebook C = which == Construction::cd    ? build_cd(ctx)
                     : which == Construction::cd1 ? build_cd1(ctx)
                                                  : build_partial_hadamard(ctx);
  const bool pairwise_ok = std::uint64_t(C.N) * C.N * C.K <= 200'000'000;
  const auto mode = which == Construction::hadamard || C.N <= 81 ? SpectrumMode::pairwise : SpectrumMode::translate;
  const auto s = spectrum(C, mode, threads);
  const auto closed = closed_spectrum(which, ctx);

  Check shape(name + " shape", "N = p^n > K, distinct unit-norm codewords");
  shape.expect(C.N > C.K, "N <= K");
  shape.expect(C.rows_distinct(), "two codewords coincide");
  shape.expect(s.total() == std::uint64_t(C.N) * (C.N - 1), "counts do not sum to N(N-1)");
  shape.expect(s.imax + 1e-12 >= s.welch, "I_max below the Welch bound");
  out.push_back(shape.done());

  Check eq(name + " spectrum = closed form", "value distribution of the construction");
  std::string why;
  eq.expect(same_spectrum(s, closed, why), why);
  auto r = eq.done();
  if (r.ok) r.note = spectrum_text(s);
  out.push_back(std::move(r));

  if (which != Construction::hadamard && pairwise_ok && mode == SpectrumMode::translate) {
    Check pt(name + " pairwise = translate", "p^n pairs per difference");
    pt.expect(same_spectrum(spectrum(C, SpectrumMode::pairwise, threads), s, why), why);
    out.push_back(pt.done());
  }
  if (which == Construction::hadamard) {
    Check ht(name + " pairwise = transform of row selection", "I = (1/2K)|r^_l|, each l N times");
    std::map<double, std::uint64_t> m;
    for (double v : hadamard_transform_magnitudes(ctx)) m[round_sig12(v)] += C.N;
    std::vector<SpectrumEntry> e;
    for (const auto& [k, v] : m) e.push_back({k, v});
    Spectrum t = s;
    t.entries = e;
    ht.expect(same_spectrum(s, t, why), why);
    out.push_back(ht.done());
  }
  Check rb(name + " ratio bound", "I_max / I_W < sqrt(1/(1 - k/p^m))");
  const double bound = ratio_bound(which, ctx.spec.q());
  rb.expect(s.ratio < bound, "ratio " + num(s.ratio) + " vs bound " + num(bound));
  auto rr = rb.done();
  if (rr.ok) rr.note = "ratio " + num(s.ratio) + " < " + num(bound);
  out.push_back(std::move(rr));
}

}  // namespace

VerifyReport verify_codebooks(const RunConfig& cfg) {
  VerifyReport rep{"codebooks", {}};
  const auto instances = instances_or(
      cfg, {make_bent(Family::ext_square, 3, {2}, 1, 0, with_e(prim(3, 2))),
            make_bent(Family::ext_square, 3, {4}, 1, 0, with_e(1)),
            make_bent(Family::ext_square, 3, {4}, 2, 0, with_e(prim(3, 4))),
            make_bent(Family::ext_square, 5, {2}, 1, 0, with_e(1)),
            make_bent(Family::diag_quadratic, 3, {2, 2}, 2, 0, [] { FamilyParams P; P.alphas = {1, 1}; return P; }()),
            make_bent(Family::ext_square, 3, {3}, 1, 0, with_e(1)),
            make_bent(Family::ext_square, 3, {5}, 1, 0, with_e(1)),
            make_bent(Family::ext_square, 3, {6}, 2, 0, with_e(prim(3, 6)))});
  for (const auto& spec : instances) {
    const auto ctx = BentContext::prepare(spec, cfg.threads);
    if (spec.condition == Condition::I) {
      codebook_checks(ctx, Construction::cd, cfg.threads, rep.records);
      if (spec.space->components() == 1) {
        codebook_checks(ctx, Construction::hadamard, cfg.threads, rep.records);
        Check sx(describe(spec) + ": sequence cross-correlation", "two values with the stated frequencies");
        const auto d = seq_crosscorr(ctx);
        const auto c = seq_crosscorr_closed(ctx);
        bool same = d.size() == c.size();
        for (std::size_t i = 0; same && i < d.size(); ++i)
          same = std::abs(d[i].value - c[i].value) < 1e-9 && d[i].count == c[i].count;
        std::string t;
        for (const auto& v : d) t += (t.empty() ? "" : ", ") + num(v.value) + " x " + std::to_string(v.count);
        sx.expect(same, "direct " + t);
        auto r = sx.done();
        if (r.ok) r.note = t;
        rep.records.push_back(std::move(r));
      }
    } else {
      codebook_checks(ctx, Construction::cd1, cfg.threads, rep.records);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- tables

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"tab1-row1", 3, 2, 1, 1, "9", "4", "0.5000", "0.3954", "0.7908"},
      {"tab1-row2", 3, 8, 2, 1, "6561", "2880", "0.015625", "0.0140", "0.8960"},
      {"tab1-row3", 3, 12, 3, 1, "531441", "255528", "0.00147928", "0.00142541", "0.9635"},
      {"tab1-row4", 3, 16, 4, 1, "43046721", "21254400", "0.00015625", "0.00015433", "0.9877"},
      {"tab1-row5", 3, 20, 5, 1, "3486784401", "1736188344", "0.000017075", "0.000017005", "0.9959"},
      {"tab2-row1", 3, 5, 1, 2, "243", "80", "0.125", "0.09176", "0.73406"},
      {"tab2-row2", 3, 6, 2, 2, "729", "80", "0.125", "0.10556", "0.8445"},
      {"tab2-row3", 3, 9, 3, 2, "19683", "728", "0.03846", "0.036337", "0.94476"},
      {"tab2-row4", 3, 12, 4, 2, "531441", "6560", "0.01250", "0.012269", "0.981615"},
      {"tab2-row5", 3, 15, 5, 2, "14348907", "59048", "0.00413223", "0.0041068", "0.99384234"},
  };
  return rows;
}

namespace {

double unit_in_last_place(const std::string& printed) {
  const auto dot = printed.find('.');
  if (dot == std::string::npos) return 1;
  return std::pow(10.0, -double(printed.size() - dot - 1));
}

/// Sign of the Tr(e x^2) instance behind each row: primitive e for the tab1
/// rows (epsilon = -1 on the first, +1 after), e = 1 for tab2 except (729, 80).
Complex row_sign(const TableRow& r) {
  const Complex eps = epsilon_const(r.p);
  if (r.table == 1) return r.n == 2 ? Complex{-1, 0} : Complex{1, 0};
  const Complex en = unit_pow(eps, r.n);
  const double lead = r.n % 2 == 1 ? 1.0 : -1.0;  // (-1)^{n-1}
  const double eta_e = r.n == 6 ? -1.0 : 1.0;
  return lead * eta_e * en;
}

}  // namespace

VerifyReport verify_tables(const std::string& which, unsigned threads) {
  VerifyReport rep{"tables", {}};
  bool matched = false;
  for (const auto& row : table_rows()) {
    if (!which.empty() && which != row.id) continue;
    matched = true;
    const auto c = row.table == 1 ? Construction::cd : Construction::cd1;
    Spectrum s;
    bool built = false;
    if (ipow(row.p, row.n) <= 20000) {
      const Code e = (row.table == 1 || row.n == 6) ? prim(row.p, row.n) : 1;
      const auto ctx = BentContext::prepare(make_bent(Family::ext_square, row.p, {row.n}, row.m, 0, with_e(e)), threads);
      const auto C = c == Construction::cd ? build_cd(ctx) : build_cd1(ctx);
      s = spectrum(C, SpectrumMode::translate, threads);
      Check agree(row.id + " built spectrum = closed form", "value distribution of the construction");
      std::string why;
      agree.expect(same_spectrum(s, closed_spectrum(c, ctx), why), why);
      rep.records.push_back(agree.done());
      built = true;
    } else {
      s = closed_spectrum(c, row.p, row.n, row.m, row_sign(row));
    }
    Check cell(row.id + (built ? " (built)" : " (closed form)"), "printed N, K, I_max, I_W, I_W/I_max");
    cell.expect(std::to_string(s.N) == row.N, "N " + std::to_string(s.N) + " vs " + row.N);
    cell.expect(std::to_string(s.K) == row.K, "K " + std::to_string(s.K) + " vs " + row.K);
    auto close = [&](double v, const std::string& printed, const char* what) {
      const double diff = std::abs(v - std::stod(printed));
      const double ulp = unit_in_last_place(printed);
      cell.residual(diff / ulp, 2.0, std::string(what) + " " + num(v) + " vs " + printed + " (units in last place)");
    };
    close(s.imax, row.imax, "I_max");
    close(s.welch, row.welch, "I_W");
    const double printed_ratio = std::stod(row.ratio);
    const double exact = s.welch / s.imax;
    const double of_printed = std::stod(row.welch) / std::stod(row.imax);
    const double rdiff = std::min(std::abs(exact - printed_ratio), std::abs(of_printed - printed_ratio));
    cell.expect(rdiff <= 2e-4, "ratio " + num(exact) + " (or " + num(of_printed) + " from printed values) vs " + row.ratio);
    auto r = cell.done();
    if (r.ok)
      r.note = "N " + std::to_string(s.N) + ", K " + std::to_string(s.K) + ", I_max " + num(s.imax) +
                         ", I_W " + num(s.welch) + ", ratio " + num(exact);
    rep.records.push_back(std::move(r));
  }
  if (!matched) throw InvalidArgument("unknown table row '" + which + "' (expected tab1-row1..5 or tab2-row1..5)");
  return rep;
}

}  // namespace dualbent::cli
