#pragma once

// Word-packed polynomials over GF(2), used for fast irreducibility testing
// when scanning for field moduli. Bit i of word k is the coefficient of
// x^(64k + i).

#include <cstdint>
#include <vector>

namespace addpoly::gf2 {

using Poly = std::vector<uint64_t>;

long degree(const Poly& a);
Poly from_coeffs(const std::vector<int64_t>& c);
Poly x_poly();

void trim(Poly& a);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mod(Poly a, const Poly& f);
Poly sq_mod(const Poly& a, const Poly& f);
Poly gcd(Poly a, Poly b);

bool is_irreducible(const Poly& f);

}  // namespace addpoly::gf2
