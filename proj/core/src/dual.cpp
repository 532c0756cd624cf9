#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dualbent/bent.hpp"
#include "dualbent/error.hpp"
#include "dualbent/parallel.hpp"

namespace dualbent {

namespace {

std::uint64_t exponent_mod(std::int64_t e, std::uint64_t group) {
  const auto g = static_cast<std::int64_t>(group);
  const std::int64_t r = e % g;
  return static_cast<std::uint64_t>(r < 0 ? r + g : r);
}

std::uint64_t inverse_exponent(std::int64_t e, std::uint64_t group) {
  if (group == 1) return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(group), nr = static_cast<std::int64_t>(exponent_mod(e, group));
  while (nr) {
    const auto qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (r != 1) throw InvalidArgument("exponent not invertible modulo p^m - 1");
  return exponent_mod(t, group);
}

struct ComponentDuals {
  std::vector<std::vector<std::uint8_t>> dual;  // per c, entry 0 empty
  std::vector<Complex> sign;
};

ComponentDuals component_duals(const VectorSpace& V, const ExtField& cod, const std::vector<Code>& values,
                               unsigned threads, const char* what) {
  const std::uint32_t q = cod.size();
  ComponentDuals out{std::vector<std::vector<std::uint8_t>>(q), std::vector<Complex>(q, Complex{0, 0})};
  parallel_for(q - 1, threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      const Code c = static_cast<Code>(i + 1);
      auto cls = classify_weakly_regular(V, component_table(cod, values, c));
      if (!cls.bent)
        throw NotBent(std::string(what) + " component c = " + std::to_string(c) + " is not bent");
      if (!cls.weakly_regular)
        throw NotBent(std::string(what) + " component c = " + std::to_string(c) + " is not weakly regular");
      out.dual[c] = std::move(cls.dual);
      out.sign[c] = cls.sign;
    }
  });
  return out;
}

}  // namespace

BentTables vectorial_dual(const BentSpec& spec, unsigned threads) {
  const auto& V = *spec.space;
  const auto& cod = *spec.codomain;
  const std::uint32_t q = cod.size();
  const std::uint32_t m = spec.m;
  const std::uint32_t p = spec.p();
  const std::uint64_t group = q - 1;

  BentTables tables;
  tables.values = tabulate(spec, threads);
  auto comps = component_duals(V, cod, tables.values, threads, "F");
  tables.component_signs = comps.sign;

  // c_i with c_i^{1-d} = x^i; then (F_{c_i})*(a) = Tr(x^i z) pins z down.
  const std::int64_t one_minus_d = 1 - static_cast<std::int64_t>(spec.d % group);
  const std::uint64_t root = inverse_exponent(one_minus_d, group);
  std::vector<Code> basis_c(m), c_power(q, 0);
  for (std::uint32_t i = 0; i < m; ++i) basis_c[i] = cod.pow(static_cast<Code>(ipow(p, i)), root);
  for (Code c = 1; c < q; ++c) c_power[c] = cod.pow(c, exponent_mod(one_minus_d, group));

  std::vector<Code> lookup(q, 0);
  std::vector<bool> seen(q, false);
  for (Code z = 0; z < q; ++z) {
    std::uint32_t key = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      key += cod.trace(cod.mul(static_cast<Code>(ipow(p, i)), z)) * static_cast<std::uint32_t>(ipow(p, i));
    if (seen[key]) throw Error("trace coordinates are not a bijection");
    seen[key] = true;
    lookup[key] = z;
  }

  tables.dual_values.assign(V.size(), 0);
  parallel_for(V.size(), threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t a = b; a < e; ++a) {
      std::uint32_t key = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        key += comps.dual[basis_c[i]][a] * static_cast<std::uint32_t>(ipow(p, i));
      const Code z = lookup[key];
      for (Code c = 1; c < q; ++c)
        if (cod.trace(cod.mul(c_power[c], z)) != comps.dual[c][a])
          throw NotBent("no vectorial dual: component duals disagree at a = " + std::to_string(a) +
                        ", c = " + std::to_string(c));
      tables.dual_values[a] = z;
    }
  });
  return tables;
}

std::vector<Code> vectorial_dual_search(const BentSpec& spec, const std::vector<Code>& values) {
  const auto& V = *spec.space;
  const auto& cod = *spec.codomain;
  const std::uint32_t q = cod.size();
  const std::uint32_t p = spec.p();
  const std::uint64_t group = q - 1;
  const double scale = std::sqrt(static_cast<double>(V.size()));
  const auto& zeta = roots_of_unity(p);
  const std::int64_t one_minus_d = 1 - static_cast<std::int64_t>(spec.d % group);

  std::vector<std::vector<std::uint8_t>> comp(q);
  for (Code c = 1; c < q; ++c) comp[c] = component_table(cod, values, c);

  std::vector<Code> out(V.size(), 0);
  for (Code a = 0; a < V.size(); ++a) {
    std::vector<Complex> w(q);
    for (Code c = 1; c < q; ++c) w[c] = walsh(V, comp[c], a);
    double best = 1e300;
    for (Code z = 0; z < q; ++z) {
      double err = 0;
      for (Code c = 1; c < q; ++c) {
        const Code cz = cod.mul(cod.pow(c, exponent_mod(one_minus_d, group)), z);
        // the unit sign is unknown here; the phase must match up to {1, i, -1, -i}
        const Complex r = w[c] / (scale * zeta(cod.trace(cz)));
        double d = 1e300;
        for (const Complex s : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}})
          d = std::min(d, std::abs(r - s));
        err += d;
      }
      if (err < best) {
        best = err;
        out[a] = z;
      }
    }
  }
  return out;
}

ConditionReport verify_condition(const BentSpec& spec, unsigned threads) {
  ConditionReport report;
  const auto& V = *spec.space;
  const auto& cod = *spec.codomain;
  const std::uint32_t q = cod.size();
  const std::uint32_t p = spec.p();
  const std::uint64_t group = q - 1;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto sub = get_field(p, spec.t);
  const auto emb = get_embedding(p, spec.t, spec.m);
  auto scaling_ok = [&](const std::vector<Code>& table, std::uint64_t power, std::string& detail) {
    if (table[0] != 0) {
      detail = "value at 0 is " + std::to_string(table[0]);
      return false;
    }
    for (Code b = 1; b < sub->size(); ++b) {
      const FieldElem bb(sub, b);
      const Code factor = cod.pow(emb->embed(b), power);
      for (Code x = 0; x < V.size(); ++x) {
        if (table[V.scale(bb, x)] != cod.mul(factor, table[x])) {
          detail = "b = " + std::to_string(b) + ", x = " + std::to_string(x);
          return false;
        }
      }
    }
    return true;
  };

  BentTables tables;
  try {
    tables = vectorial_dual(spec, threads);
  } catch (const NotBent& e) {
    std::string detail;
    const auto values = tabulate(spec, threads);
    add("scaling F(bx) = b^l F(x), F(0) = 0", scaling_ok(values, spec.l, detail), detail);
    add("components weakly regular bent", false, e.what());
    return report;
  }

  std::string detail;
  add("scaling F(bx) = b^l F(x), F(0) = 0", scaling_ok(tables.values, spec.l, detail), detail);
  add("components weakly regular bent", true);

  auto expected_sign = [&](Code c, bool of_dual) {
    if (spec.condition == Condition::I) return spec.sign;
    const Complex base = of_dual ? 1.0 / spec.sign : spec.sign;
    return base * static_cast<double>(cod.eta(c));
  };
  {
    bool ok = true;
    std::string d;
    for (Code c = 1; c < q && ok; ++c)
      if (std::abs(tables.component_signs[c] - expected_sign(c, false)) > 1e-9) {
        ok = false;
        d = "c = " + std::to_string(c) + ": sign " + sign_text(tables.component_signs[c]) + ", expected " +
            sign_text(expected_sign(c, false));
      }
    add(spec.condition == Condition::I ? "component signs equal epsilon" : "component signs equal upsilon eta(c)",
        ok, d);
  }
  add("dual relation (F_c)* = (F*)_{c^{1-d}}", true);

  detail.clear();
  add("dual scaling F*(bx) = b^d F*(x), F*(0) = 0", scaling_ok(tables.dual_values, spec.d, detail), detail);

  {
    bool signs_ok = true, inv_ok = true;
    std::string ds, di;
    const std::int64_t one_minus_l = 1 - static_cast<std::int64_t>(spec.l % group);
    for (Code c = 1; c < q; ++c) {
      const auto cls = classify_weakly_regular(V, component_table(cod, tables.dual_values, c));
      if (!cls.bent || !cls.weakly_regular) {
        signs_ok = inv_ok = false;
        ds = di = "dual component c = " + std::to_string(c) + " is not weakly regular bent";
        break;
      }
      if (signs_ok && std::abs(cls.sign - expected_sign(c, true)) > 1e-9) {
        signs_ok = false;
        ds = "c = " + std::to_string(c) + ": sign " + sign_text(cls.sign);
      }
      const Code target = cod.pow(c, exponent_mod(one_minus_l, group));
      if (inv_ok && cls.dual != component_table(cod, tables.values, target)) {
        inv_ok = false;
        di = "c = " + std::to_string(c);
      }
    }
    add(spec.condition == Condition::I ? "dual component signs equal epsilon"
                                       : "dual component signs equal upsilon^-1 eta(c)",
        signs_ok, ds);
    add("involution ((F*)_c)* = F_{c^{1-l}}", inv_ok, di);
  }
  report.tables = std::move(tables);
  return report;
}

}  // namespace dualbent
