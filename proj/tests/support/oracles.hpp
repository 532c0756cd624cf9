#pragma once

// Slow, independent reimplementations used only as test oracles. Nothing here
// touches the library's tables: arithmetic is schoolbook polynomial algebra,
// characters come straight from std::polar.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Poly = std::vector<int>;  // low degree first, no trailing zeros required

inline const double kPi = std::acos(-1.0);

inline Complex zeta(std::uint64_t order, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(order);
  const std::int64_t r = ((k % n) + n) % n;
  return std::polar(1.0, 2 * kPi * double(r) / double(order));
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m monic
  while (a.size() > dm) {
    const int c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree k with low coefficients taken from `code`'s
/// base-p digits.
inline Poly monic_from(std::uint64_t code, int p, unsigned k) {
  Poly f(k + 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = int(code % p);
    code /= p;
  }
  f[k] = 1;
  return f;
}

/// Trial division by every monic polynomial of degree 1..k/2.
inline bool irreducible(const Poly& f, int p) {
  const unsigned k = unsigned(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d)
    for (std::uint64_t c = 0; c < ipow(p, d); ++c)
      if (poly_mod(f, monic_from(c, p, d), p).empty()) return false;
  return true;
}

/// GF(p^k) by plain polynomial arithmetic. The modulus is found by scanning
/// candidates with c_0 as the most significant key, matching the library's
/// documented ordering but not its code.
class Field {
 public:
  Field(int p, unsigned k) : p_(p), k_(k), q_(ipow(p, k)) {
    if (k == 1) {
      mod_ = {0, 1};
    } else {
      // tuple (c0, ..., c_{k-1}) ascending, c0 most significant
      for (std::uint64_t t = 0; t < q_; ++t) {
        Poly f(k + 1, 0);
        std::uint64_t r = t;
        for (int i = int(k) - 1; i >= 0; --i) {
          f[i] = int(r % p);
          r /= p;
        }
        f[k] = 1;
        if (irreducible(f, p)) {
          mod_ = f;
          break;
        }
      }
    }
    for (std::uint64_t g = 1; g < q_; ++g)
      if (order(g) == q_ - 1) {
        alpha_ = g;
        break;
      }
    log_.assign(q_, 0);
    std::uint64_t y = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i, y = mul(y, alpha_)) log_[y] = i;
  }

  int p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const Poly& modulus() const { return mod_; }
  std::uint64_t alpha() const { return alpha_; }

  Poly poly(std::uint64_t c) const {
    Poly a(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      a[i] = int(c % p_);
      c /= p_;
    }
    return a;
  }
  std::uint64_t code(Poly a) const {
    a = k_ == 1 ? Poly{a.empty() ? 0 : ((a[0] % p_) + p_) % p_} : poly_mod(a, mod_, p_);
    std::uint64_t c = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) c = c * p_ + std::uint64_t(a[i]);
    return c;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = poly(a), y = poly(b);
    for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return code(x);
  }
  std::uint64_t neg(std::uint64_t a) const {
    auto x = poly(a);
    for (auto& v : x) v = (p_ - v) % p_;
    return code(x);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const auto x = poly(a), y = poly(b);
    Poly r(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    return code(r);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t order(std::uint64_t a) const {
    std::uint64_t x = a, n = 1;
    while (x != 1) {
      x = mul(x, a);
      if (++n > q_) return 0;
    }
    return n;
  }
  /// Tr_{p^k/p^t}(x) as a code of this field (lies in the subfield).
  std::uint64_t rel_trace(std::uint64_t x, unsigned t) const {
    std::uint64_t s = 0, y = x;
    for (unsigned i = 0; i < k_ / t; ++i) {
      s = add(s, y);
      y = pow(y, ipow(p_, t));
    }
    return s;
  }
  /// Absolute trace; the sum lies in F_p, whose codes are the residues.
  int trace(std::uint64_t x) const { return int(rel_trace(x, 1)); }
  /// Discrete log from successive naive multiplications by alpha.
  std::uint64_t log(std::uint64_t x) const {
    if (x == 0) throw std::logic_error("log of zero");
    return log_[x];
  }
  int eta(std::uint64_t x) const {
    if (x == 0) return 0;
    return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
  }

 private:
  int p_;
  unsigned k_;
  std::uint64_t q_;
  Poly mod_;
  std::uint64_t alpha_ = 0;
  std::vector<std::uint64_t> log_;
};

/// psi_j(x) = zeta_{q-1}^{j log x}, psi_0(0) = 1.
inline Complex mult_char(const Field& f, std::uint64_t j, std::uint64_t x) {
  if (x == 0) return j % (f.q() - 1) == 0 ? Complex{1, 0} : Complex{0, 0};
  return zeta(f.q() - 1, std::int64_t(j * f.log(x)));
}

inline Complex add_char(const Field& f, std::uint64_t a, std::uint64_t x) {
  return zeta(f.p(), f.trace(f.mul(a, x)));
}

inline Complex gauss(const Field& f, std::uint64_t j, std::uint64_t a) {
  Complex s{0, 0};
  for (std::uint64_t x = 1; x < f.q(); ++x) s += mult_char(f, j, x) * add_char(f, a, x);
  return s;
}

/// W_f(a) term by term for f given over codes of a single field.
inline Complex walsh(const Field& F, const std::vector<int>& f, std::uint64_t a) {
  Complex s{0, 0};
  for (std::uint64_t x = 0; x < F.q(); ++x) s += zeta(F.p(), f[x] - F.trace(F.mul(a, x)));
  return s;
}

/// |<c_i, c_k>| for exponent rows scaled by 1/sqrt(K), summed with std::polar.
inline double correlation(int p, const std::uint8_t* a, const std::uint8_t* b, std::size_t K) {
  Complex s{0, 0};
  for (std::size_t t = 0; t < K; ++t) s += zeta(p, int(a[t]) - int(b[t]));
  return std::abs(s) / double(K);
}

/// Groups magnitudes at 1e-9 resolution.
inline std::map<long long, std::uint64_t> bucket(const std::vector<double>& v) {
  std::map<long long, std::uint64_t> m;
  for (double x : v) ++m[std::llround(x * 1e9)];
  return m;
}

}  // namespace oracle
