#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "addpoly/error.hpp"

namespace addpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

bool is_prime_u64(uint64_t n);
bool is_prime_big(const BigInt& n);

BigInt pow_big(const BigInt& base, long exp);

/// Smallest i >= 0 with base^i * den >= num (exact integer arithmetic).
long ceil_log(long base, const BigInt& num, const BigInt& den);

BigInt lcm_big(const BigInt& a, const BigInt& b);

/// Prime factorization by trial division up to 10^6 followed by Pollard rho.
std::map<BigInt, int> factor_big(const BigInt& n);

std::vector<long> divisors_of(long n);
int mobius(long n);

}  // namespace addpoly
