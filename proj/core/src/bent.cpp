#include "dualbent/bent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "dualbent/error.hpp"
#include "dualbent/parallel.hpp"

namespace dualbent {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

// Tr_{p^k/p^m}(y) for y in `big`, returned as a code of the standalone GF(p^m).
Code trace_down(const ExtField& big, std::uint32_t m, Code y) {
  const Code tr = rel_trace_in_big(big, m, y);
  if (m == big.degree()) return tr;
  return get_embedding(big.characteristic(), m, big.degree())->restrict(tr);
}

Code apply_l(const ExtField& f, std::uint32_t m, const std::vector<Code>& coeffs, Code y) {
  Code acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc = f.add(acc, f.mul(coeffs[i], f.frobenius(y, static_cast<std::uint32_t>(m * i))));
  return acc;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void require_nonzero_in(const ExtField& f, Code x, const std::string& name) {
  require(f.contains(x), name + " = " + str(x) + " is not an element of GF(" + str(f.characteristic()) +
                             "^" + str(f.degree()) + ")");
  require(x != 0, name + " must be nonzero");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
  while (nr) {
    const auto qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (r != 1) throw InvalidArgument(str(a) + " is not invertible modulo " + str(mod));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(mod) : t);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::pair_monomial: return "pair_monomial";
    case Family::ext_square: return "ext_square";
    case Family::diag_quadratic: return "diag_quadratic";
    case Family::unitary_form: return "unitary_form";
    case Family::composite_maiorana: return "composite_maiorana";
  }
  return "?";
}

std::string to_string(Condition c) { return c == Condition::I ? "I" : "II"; }

Family parse_family(const std::string& name) {
  std::string s = name;
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  for (auto f : {Family::pair_monomial, Family::ext_square, Family::diag_quadratic, Family::unitary_form,
                 Family::composite_maiorana})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown family '" + name +
                        "' (expected pair-monomial, ext-square, diag-quadratic, unitary-form or composite-maiorana)");
}

BentSpec make_bent(Family family, std::uint32_t p, const std::vector<std::uint32_t>& degrees,
                   std::uint32_t m, std::uint32_t t, const FamilyParams& params) {
  require(m >= 1, "codomain degree m must be at least 1");
  if (t == 0) t = m;
  require(m % t == 0, "t | m is required (t = " + str(t) + ", m = " + str(m) + ")");
  require(!degrees.empty(), "the domain needs at least one component");
  for (auto nj : degrees)
    require(nj % t == 0, "t | n_j is required for every component (t = " + str(t) + ", n_j = " + str(nj) + ")");

  BentSpec spec{family, Condition::I, std::make_shared<const VectorSpace>(p, degrees), get_field(p, m),
                m, t, 2, 2, params, Complex{1, 0}};
  const std::uint32_t n = spec.space->dimension();
  const Complex eps = epsilon_const(p);
  const auto& cod = *spec.codomain;

  switch (family) {
    case Family::ext_square: {
      require(degrees.size() == 1, "ext_square is defined on a single field GF(p^n)");
      require(n % m == 0, "ext_square needs m | n (m = " + str(m) + ", n = " + str(n) + ")");
      const auto& big = spec.space->field(0);
      require_nonzero_in(big, params.e, "e");
      const auto k = n / m;
      const double eta_e = big.eta(params.e);
      if (k % 2 == 0) {
        spec.condition = Condition::I;
        spec.sign = -unit_pow(eps, n) * eta_e;
      } else {
        require(k >= 3, "ext_square with n/m odd needs n/m >= 3 (n = " + str(n) + ", m = " + str(m) + ")");
        spec.condition = Condition::II;
        spec.sign = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * unit_pow(eps, n) * eta_e;
      }
      break;
    }
    case Family::pair_monomial: {
      require(degrees.size() == 2 && degrees[0] == degrees[1],
              "pair_monomial is defined on GF(p^n') x GF(p^n')");
      const auto np = degrees[0];
      require(np % m == 0, "pair_monomial needs m | n' (m = " + str(m) + ", n' = " + str(np) + ")");
      require(np != m, "pair_monomial needs m != n'");
      const auto& f = spec.space->field(0);
      require_nonzero_in(f, params.e, "e");
      const std::uint64_t group = f.size() - 1;
      require(params.u >= 1 && std::gcd(params.u, group) == 1,
              "pair_monomial needs gcd(u, p^n' - 1) = 1 (u = " + str(params.u) + ")");
      const std::uint64_t uinv = inverse_mod(params.u, group);
      spec.l = 1 + params.u;
      spec.d = 1 + uinv;
      spec.condition = Condition::I;
      spec.sign = 1;
      break;
    }
    case Family::diag_quadratic: {
      const auto s = degrees.size();
      for (auto nj : degrees)
        require(nj == m, "diag_quadratic is defined on GF(p^m)^s: every component degree must equal m");
      require(params.alphas.size() == s,
              "diag_quadratic needs one alpha per component (" + str(s) + " expected, " +
                  str(params.alphas.size()) + " given)");
      Code prod = 1;
      for (std::size_t i = 0; i < s; ++i) {
        require_nonzero_in(cod, params.alphas[i], "alpha_" + str(i + 1));
        prod = cod.mul(prod, params.alphas[i]);
      }
      const Complex em = unit_pow(eps, static_cast<std::int64_t>(m) * s);
      if (s % 2 == 0) {
        spec.condition = Condition::I;
        spec.sign = em * static_cast<double>(cod.eta(prod));
      } else {
        require(s >= 3, "diag_quadratic with s odd needs s >= 3");
        spec.condition = Condition::II;
        spec.sign = ((m - 1) % 2 == 0 ? 1.0 : -1.0) * em * static_cast<double>(cod.eta(prod));
      }
      break;
    }
    case Family::unitary_form: {
      require(degrees.size() == 1, "unitary_form is defined on a single field GF(p^n)");
      require(n % (2 * m) == 0, "unitary_form needs n/m even (n = " + str(n) + ", m = " + str(m) + ")");
      require_nonzero_in(*get_field(p, n / 2), params.e, "e (an element of GF(p^{n/2}))");
      spec.condition = Condition::I;
      spec.sign = -1;
      break;
    }
    case Family::composite_maiorana: {
      require(degrees.size() == 3 && degrees[1] == degrees[2],
              "composite_maiorana is defined on GF(p^n') x GF(p^n'') x GF(p^n'')");
      const auto n1 = degrees[0], n2 = degrees[1];
      require(n1 % m == 0 && n2 % m == 0, "composite_maiorana needs m | n' and m | n''");
      require((n1 / m) % 2 == 1, "composite_maiorana needs n'/m odd");
      const auto& fx = spec.space->field(0);
      const auto& fy = spec.space->field(1);
      require(params.alphas.size() == 3, "composite_maiorana needs exactly three alphas");
      for (std::size_t i = 0; i < 3; ++i) require_nonzero_in(fx, params.alphas[i], "alpha_" + str(i + 1));
      require(fx.eta(params.alphas[0]) == fx.eta(params.alphas[1]) &&
                  fx.eta(params.alphas[1]) == fx.eta(params.alphas[2]),
              "alpha_1, alpha_2, alpha_3 must be all squares or all non-squares in GF(p^n')");
      require_nonzero_in(fy, params.beta, "beta");
      require_nonzero_in(fy, params.gamma, "gamma");
      require(!params.l_coeffs.empty(), "L needs at least one coefficient");
      for (auto a : params.l_coeffs)
        require(fy.contains(a), "L coefficient " + str(a) + " is not an element of GF(p^n'')");
      std::vector<bool> hit(fy.size(), false);
      for (Code y = 0; y < fy.size(); ++y) hit[apply_l(fy, m, params.l_coeffs, y)] = true;
      require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
              "L must induce a permutation of GF(p^n'')");
      spec.condition = Condition::II;
      spec.sign = ((n1 - 1) % 2 == 0 ? 1.0 : -1.0) * unit_pow(eps, n1) *
                  static_cast<double>(fx.eta(params.alphas[0]));
      break;
    }
  }

  if (spec.condition == Condition::I) {
    require(n % 2 == 0, "Condition I requires 2 | n (n = " + str(n) + ")");
    require(2 * m <= n, "Condition I requires m <= n/2 (m = " + str(m) + ", n = " + str(n) + ")");
  } else {
    require(n >= m && (n - m) % 2 == 0, "Condition II requires 2 | (n - m) (n = " + str(n) + ", m = " + str(m) + ")");
    require(n >= 3 * m, "Condition II requires n >= 3m (n = " + str(n) + ", m = " + str(m) + ")");
  }
  const std::uint64_t group = spec.q() - 1;
  if (group > 1) {
    require(std::gcd((spec.d - 1) % group, group) == 1, "gcd(d - 1, p^m - 1) = 1 is required");
    require((spec.l - 1) % group * ((spec.d - 1) % group) % group == 1,
            "(l - 1)(d - 1) = 1 mod (p^m - 1) is required");
  }
  require(spec.d % 2 == 0, "d must be even (d = " + str(spec.d) + ")");
  return spec;
}

Code eval(const BentSpec& spec, Code x) {
  const auto& V = *spec.space;
  if (x >= V.size()) throw DomainMismatch("point outside the domain of F");
  const auto& cod = *spec.codomain;
  const auto m = spec.m;
  const auto& P = spec.params;
  switch (spec.family) {
    case Family::ext_square: {
      const auto& f = V.field(0);
      return trace_down(f, m, f.mul(P.e, f.mul(x, x)));
    }
    case Family::pair_monomial: {
      const auto& f = V.field(0);
      const Code x1 = V.part(x, 0), x2 = V.part(x, 1);
      return trace_down(f, m, f.mul(P.e, f.mul(x1, f.pow(x2, P.u))));
    }
    case Family::diag_quadratic: {
      Code acc = 0;
      for (std::size_t i = 0; i < V.components(); ++i) {
        const Code xi = V.part(x, i);
        acc = cod.add(acc, cod.mul(P.alphas[i], cod.mul(xi, xi)));
      }
      return acc;
    }
    case Family::unitary_form: {
      const auto& f = V.field(0);
      const auto h = f.degree() / 2;
      const auto emb = get_embedding(V.characteristic(), h, f.degree());
      const Code norm = f.mul(x, f.frobenius(x, h));
      const Code z = emb->restrict(f.mul(emb->embed(P.e), norm));
      return trace_down(emb->sub(), m, z);
    }
    case Family::composite_maiorana: {
      const auto& fx = V.field(0);
      const auto& fy = V.field(1);
      const Code x0 = V.part(x, 0), y1 = V.part(x, 1), y2 = V.part(x, 2);
      const Code i = trace_down(fy, m, fy.mul(P.gamma, fy.mul(y2, y2)));
      const int cls = cod.eta(i);
      const Code alpha = cls == 0 ? P.alphas[0] : (cls > 0 ? P.alphas[1] : P.alphas[2]);
      const Code h = trace_down(fx, m, fx.mul(alpha, fx.mul(x0, x0)));
      const Code g = trace_down(fy, m, fy.mul(P.beta, fy.mul(y1, apply_l(fy, m, P.l_coeffs, y2))));
      return cod.add(h, g);
    }
  }
  return 0;
}

FieldElem eval(const BentSpec& spec, const VecElem& x) {
  return {spec.codomain, eval(spec, spec.space->code(x))};
}

std::vector<Code> tabulate(const BentSpec& spec, unsigned threads) {
  std::vector<Code> out(spec.space->size());
  parallel_for(out.size(), threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t x = b; x < e; ++x) out[x] = eval(spec, static_cast<Code>(x));
  });
  return out;
}

std::uint32_t component(const BentSpec& spec, Code c, Code x) {
  const auto& cod = *spec.codomain;
  if (!cod.contains(c)) throw DomainMismatch("component index outside GF(p^m)");
  return cod.trace(cod.mul(c, eval(spec, x)));
}

std::vector<std::uint8_t> component_table(const ExtField& codomain, const std::vector<Code>& values, Code c) {
  std::vector<std::uint8_t> out(values.size());
  for (std::size_t x = 0; x < values.size(); ++x)
    out[x] = static_cast<std::uint8_t>(codomain.trace(codomain.mul(c, values[x])));
  return out;
}

std::string sign_text(const Complex& s) {
  if (std::abs(s - Complex{1, 0}) < 1e-9) return "1";
  if (std::abs(s - Complex{-1, 0}) < 1e-9) return "-1";
  if (std::abs(s - Complex{0, 1}) < 1e-9) return "i";
  if (std::abs(s - Complex{0, -1}) < 1e-9) return "-i";
  return "(" + std::to_string(s.real()) + "," + std::to_string(s.imag()) + ")";
}

nlohmann::json to_json(const BentSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  const auto& P = spec.params;
  switch (spec.family) {
    case Family::ext_square:
    case Family::unitary_form: params["e"] = P.e; break;
    case Family::pair_monomial:
      params["e"] = P.e;
      params["u"] = P.u;
      break;
    case Family::diag_quadratic: params["alphas"] = P.alphas; break;
    case Family::composite_maiorana:
      params["alphas"] = P.alphas;
      params["beta"] = P.beta;
      params["gamma"] = P.gamma;
      params["l_coeffs"] = P.l_coeffs;
      break;
  }
  return {{"family", to_string(spec.family)},
          {"p", spec.p()},
          {"degrees", spec.space->degrees()},
          {"m", spec.m},
          {"t", spec.t},
          {"params", params},
          {"l", spec.l},
          {"d", spec.d},
          {"condition", to_string(spec.condition)},
          {"sign", sign_text(spec.sign)}};
}

}  // namespace dualbent
