#include <algorithm>
#include <cmath>

#include "dualbent/bent.hpp"
#include "dualbent/error.hpp"

namespace dualbent {

CycloSum walsh_exact(const VectorSpace& space, const std::vector<std::uint8_t>& f, Code a) {
  if (f.size() != space.size()) throw DomainMismatch("function table does not match the space");
  const auto p = space.characteristic();
  const auto row = space.inner_product_row(a);
  CycloSum acc(p);
  for (std::size_t x = 0; x < f.size(); ++x) acc.add((f[x] + p - row[x]) % p);
  return acc;
}

Complex walsh(const VectorSpace& space, const std::vector<std::uint8_t>& f, Code a) {
  return walsh_exact(space, f, a).value();
}

std::vector<Complex> walsh_spectrum(const VectorSpace& space, const std::vector<std::uint8_t>& f) {
  if (f.size() != space.size()) throw DomainMismatch("function table does not match the space");
  const std::uint32_t p = space.characteristic();
  const std::uint32_t n = space.dimension();
  const std::size_t size = space.size();

  // cnt[y * p + r]: coefficient of zeta^r at digit vector y. Each pass along
  // digit i replaces the digit value d by the dual coordinate s with weight
  // zeta^{-d s}, i.e. a rotation of the coefficient vector.
  std::vector<std::int32_t> cnt(size * p, 0), tmp(p * p);
  for (std::size_t x = 0; x < size; ++x) cnt[x * p + f[x]] = 1;
  std::size_t block = 1;
  for (std::uint32_t i = 0; i < n; ++i, block *= p) {
    for (std::size_t hi = 0; hi < size; hi += block * p) {
      for (std::size_t lo = 0; lo < block; ++lo) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (std::uint32_t d = 0; d < p; ++d) {
          const std::int32_t* src = &cnt[(hi + d * block + lo) * p];
          for (std::uint32_t s = 0; s < p; ++s) {
            const std::uint32_t shift = (d * s) % p;
            std::int32_t* dst = &tmp[s * p];
            for (std::uint32_t r = 0; r < p; ++r) {
              const std::uint32_t k = r >= shift ? r - shift : r + p - shift;
              dst[k] += src[r];
            }
          }
        }
        for (std::uint32_t s = 0; s < p; ++s)
          std::copy_n(&tmp[s * p], p, &cnt[(hi + s * block + lo) * p]);
      }
    }
  }

  const auto& zeta = roots_of_unity(p);
  std::vector<Complex> out(size);
  std::vector<std::uint32_t> pow_p(n);
  for (std::uint32_t i = 0, v = 1; i < n; ++i, v *= p) pow_p[i] = v;
  for (Code a = 0; a < size; ++a) {
    const auto w = space.functional(a);
    std::size_t v = 0;
    for (std::uint32_t i = 0; i < n; ++i) v += w[i] * pow_p[i];
    const std::int32_t* c = &cnt[v * p];
    const std::int32_t lo = *std::min_element(c, c + p);
    Complex acc{0, 0};
    for (std::uint32_t r = 0; r < p; ++r) acc += static_cast<double>(c[r] - lo) * zeta(r);
    out[a] = acc;
  }
  return out;
}

WeaklyRegular classify_spectrum(const VectorSpace& space, const std::vector<Complex>& w) {
  const std::uint32_t p = space.characteristic();
  const double scale = std::sqrt(static_cast<double>(space.size()));
  const auto& zeta = roots_of_unity(p);
  static const Complex units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  // Candidates s zeta^j form the 4p-th roots of unity, so the nearest one is
  // unique; accept only well inside half the gap.
  const double gap = 2.0 * std::sin(M_PI / (4.0 * p)) * scale;
  const double accept = std::min(0.1 * scale, 0.45 * gap);

  WeaklyRegular out;
  out.bent = true;
  out.weakly_regular = true;
  out.dual.assign(w.size(), 0);
  int first_unit = -1;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (std::abs(std::abs(w[a]) - scale) > accept) {
      out.bent = out.weakly_regular = false;
      out.dual.clear();
      out.max_residual = std::max(out.max_residual, std::abs(std::abs(w[a]) - scale));
      return out;
    }
    double best = 1e300;
    int bu = 0;
    std::uint32_t bj = 0;
    for (int u = 0; u < 4; ++u)
      for (std::uint32_t j = 0; j < p; ++j) {
        const double r = std::abs(w[a] - units[u] * scale * zeta(j));
        if (r < best) {
          best = r;
          bu = u;
          bj = j;
        }
      }
    out.max_residual = std::max(out.max_residual, best);
    if (best >= accept) {
      out.bent = out.weakly_regular = false;
      out.dual.clear();
      return out;
    }
    out.dual[a] = static_cast<std::uint8_t>(bj);
    if (first_unit < 0) first_unit = bu;
    else if (bu != first_unit) out.weakly_regular = false;
  }
  out.sign = out.weakly_regular ? units[first_unit] : Complex{0, 0};
  return out;
}

WeaklyRegular classify_weakly_regular(const VectorSpace& space, const std::vector<std::uint8_t>& f) {
  return classify_spectrum(space, walsh_spectrum(space, f));
}

}  // namespace dualbent
