#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dualbent/cyclotomic.hpp"
#include "dualbent/field.hpp"
#include "dualbent/space.hpp"

namespace dualbent {

enum class Family { pair_monomial, ext_square, diag_quadratic, unitary_form, composite_maiorana };
enum class Condition { I, II };

std::string to_string(Family f);
std::string to_string(Condition c);
/// Accepts both "ext_square" and "ext-square" spellings.
Family parse_family(const std::string& name);

/// Family parameters as element codes. Which fields they live in depends on
/// the family:
///   ext_square, pair_monomial: e in GF(p^n) / GF(p^{n'})
///   unitary_form: e in GF(p^{n/2})
///   diag_quadratic: alphas in GF(p^m), one per component
///   composite_maiorana: alphas = (a1, a2, a3) in GF(p^{n'}); beta, gamma and
///     the L coefficients in GF(p^{n''}), L(y) = sum_i l_coeffs[i] y^{p^{m i}}
struct FamilyParams {
  Code e = 1;
  std::uint64_t u = 1;
  std::vector<Code> alphas;
  Code beta = 1;
  Code gamma = 1;
  std::vector<Code> l_coeffs{1};
};

struct BentSpec {
  Family family;
  Condition condition;
  std::shared_ptr<const VectorSpace> space;
  FieldPtr codomain;  // GF(p^m)
  std::uint32_t m;
  std::uint32_t t;
  std::uint64_t l;
  std::uint64_t d;
  FamilyParams params;
  /// epsilon (+-1) under Condition I, upsilon (+-eps^m) under Condition II.
  Complex sign;

  std::uint32_t p() const { return space->characteristic(); }
  std::uint32_t n() const { return space->dimension(); }
  /// p^m.
  std::uint32_t q() const { return codomain->size(); }
};

/// Builds and validates a catalog instance; t = 0 means t = m. Each violated
/// constraint raises InvalidArgument naming it.
BentSpec make_bent(Family family, std::uint32_t p, const std::vector<std::uint32_t>& degrees,
                   std::uint32_t m, std::uint32_t t, const FamilyParams& params);

/// F(x) as a code in GF(p^m).
Code eval(const BentSpec& spec, Code x);
FieldElem eval(const BentSpec& spec, const VecElem& x);
/// F on every x in code order.
std::vector<Code> tabulate(const BentSpec& spec, unsigned threads = 1);

/// F_c(x) = Tr_{p^m/p}(c F(x)).
std::uint32_t component(const BentSpec& spec, Code c, Code x);
/// Component table from a value table over GF(p^m).
std::vector<std::uint8_t> component_table(const ExtField& codomain, const std::vector<Code>& values, Code c);

/// W_f(a) = sum_x zeta_p^{f(x) - <a,x>}, summed term by term.
CycloSum walsh_exact(const VectorSpace& space, const std::vector<std::uint8_t>& f, Code a);
Complex walsh(const VectorSpace& space, const std::vector<std::uint8_t>& f, Code a);
/// W_f(a) for all a, via a p-ary fast transform over digit coordinates.
std::vector<Complex> walsh_spectrum(const VectorSpace& space, const std::vector<std::uint8_t>& f);

struct WeaklyRegular {
  bool bent = false;
  bool weakly_regular = false;
  Complex sign{0, 0};             // meaningful when weakly_regular
  std::vector<std::uint8_t> dual;  // f*(a), meaningful when bent
  double max_residual = 0;
};

/// Fits W_f(a) = s p^{n/2} zeta_p^j for s in {1, i, -1, -i}.
WeaklyRegular classify_weakly_regular(const VectorSpace& space, const std::vector<std::uint8_t>& f);
WeaklyRegular classify_spectrum(const VectorSpace& space, const std::vector<Complex>& w);

struct BentTables {
  std::vector<Code> values;          // F(x)
  std::vector<Code> dual_values;     // F*(a)
  std::vector<Complex> component_signs;  // indexed by c; entry 0 unused
};

/// Recovers F* from the component duals through (F_c)* = (F*)_{c^{1-d}}.
/// Throws NotBent when a component is not weakly regular bent or no
/// consistent z exists.
BentTables vectorial_dual(const BentSpec& spec, unsigned threads = 1);

/// Dual by exhaustive z search per a; slow, for cross-checking.
std::vector<Code> vectorial_dual_search(const BentSpec& spec, const std::vector<Code>& values);

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

struct ConditionReport {
  std::vector<CheckResult> checks;
  std::optional<BentTables> tables;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
};

ConditionReport verify_condition(const BentSpec& spec, unsigned threads = 1);

/// +-1, +-i as text ("1", "-1", "i", "-i"); other values in (re, im) form.
std::string sign_text(const Complex& s);

nlohmann::json to_json(const BentSpec& spec);

}  // namespace dualbent
