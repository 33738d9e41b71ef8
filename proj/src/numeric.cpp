#include "addpoly/numeric.hpp"

#include <algorithm>
#include <random>

namespace addpoly {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin base set for n < 3.3 * 10^24.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime_big(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<uint64_t>::max()) return is_prime_u64(n.convert_to<uint64_t>());
  if (n % 2 == 0) return false;
  BigInt d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Fixed witness set; plenty for the sizes reached here.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                     41ull, 43ull, 47ull, 53ull, 59ull, 61ull}) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt pow_big(const BigInt& base, long exp) {
  require(exp >= 0, Errc::Internal, "pow_big: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  long e = exp;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

long ceil_log(long base, const BigInt& num, const BigInt& den) {
  require(base >= 2, Errc::Internal, "ceil_log: base < 2");
  require(num > 0 && den > 0, Errc::Internal, "ceil_log: nonpositive argument");
  long i = 0;
  BigInt cur = den;
  while (cur < num) {
    cur *= base;
    ++i;
  }
  return i;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

namespace {

BigInt pollard_rho(const BigInt& n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    BigInt c = BigInt(rng() % 1000003 + 1);
    BigInt x = BigInt(rng() % 1000003 + 2);
    BigInt y = x;
    BigInt d = 1;
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      BigInt diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = boost::multiprecision::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(BigInt n, std::map<BigInt, int>& out, uint64_t seed) {
  if (n == 1) return;
  if (is_prime_big(n)) {
    out[n] += 1;
    return;
  }
  BigInt d = pollard_rho(n, seed);
  factor_rec(d, out, seed + 1);
  factor_rec(n / d, out, seed + 1);
}

}  // namespace

std::map<BigInt, int> factor_big(const BigInt& n) {
  require(n >= 1, Errc::Internal, "factor_big: n < 1");
  std::map<BigInt, int> out;
  BigInt m = n;
  for (uint64_t p = 2; p <= 1000000 && BigInt(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
    while (m % p == 0) {
      out[BigInt(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) {
    if (m <= BigInt(1000000) * 1000000 || is_prime_big(m)) {
      // Remaining cofactor below the trial bound squared is prime.
      if (is_prime_big(m)) {
        out[m] += 1;
      } else {
        factor_rec(m, out, 0x5eed);
      }
    } else {
      factor_rec(m, out, 0x5eed);
    }
  }
  return out;
}

std::vector<long> divisors_of(long n) {
  require(n >= 1, Errc::Internal, "divisors_of: n < 1");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(long n) {
  require(n >= 1, Errc::Internal, "mobius: n < 1");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace addpoly
