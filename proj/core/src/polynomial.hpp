#pragma once

// Dense polynomials over F_p used while searching for field moduli.
// Coefficients are stored low degree first with no trailing zeros.

#include <cstdint>
#include <vector>

namespace dualbent::detail {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);
Poly poly_gcd(Poly a, Poly b, std::uint32_t p);

/// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace dualbent::detail
