#include "gf2poly.hpp"

#include <algorithm>

namespace addpoly::gf2 {

long degree(const Poly& a) {
  for (long k = static_cast<long>(a.size()) - 1; k >= 0; --k) {
    if (a[k]) return k * 64 + (63 - __builtin_clzll(a[k]));
  }
  return -1;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_coeffs(const std::vector<int64_t>& c) {
  Poly out((c.size() + 63) / 64, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] & 1) out[i / 64] |= uint64_t(1) << (i % 64);
  }
  trim(out);
  return out;
}

Poly x_poly() { return Poly{2}; }

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t w = 0;
    if (i < a.size()) w ^= a[i];
    if (i < b.size()) w ^= b[i];
    out[i] = w;
  }
  trim(out);
  return out;
}

namespace {

// out ^= a << sh
void xor_shifted(Poly& out, const Poly& a, long sh) {
  long wq = sh / 64;
  int wr = static_cast<int>(sh % 64);
  size_t need = a.size() + wq + 1;
  if (out.size() < need) out.resize(need, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i + wq] ^= a[i] << wr;
    if (wr) out[i + wq + 1] ^= a[i] >> (64 - wr);
  }
}

}  // namespace

Poly mul(const Poly& a, const Poly& b) {
  long da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return {};
  Poly out((da + db) / 64 + 2, 0);
  for (long i = 0; i <= db; ++i) {
    if (b[i / 64] >> (i % 64) & 1) xor_shifted(out, a, i);
  }
  trim(out);
  return out;
}

Poly mod(Poly a, const Poly& f) {
  long df = degree(f);
  for (long da = degree(a); da >= df; da = degree(a)) {
    xor_shifted(a, f, da - df);
    trim(a);
  }
  trim(a);
  return a;
}

Poly sq_mod(const Poly& a, const Poly& f) {
  long da = degree(a);
  if (da < 0) return {};
  Poly sq(da / 32 + 2, 0);
  for (long i = 0; i <= da; ++i) {
    if (a[i / 64] >> (i % 64) & 1) sq[(2 * i) / 64] |= uint64_t(1) << ((2 * i) % 64);
  }
  trim(sq);
  return mod(std::move(sq), f);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    a = mod(std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f) {
  long n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // Rabin: x^(2^n) == x mod f, and gcd(x^(2^(n/l)) - x, f) == 1 for prime l | n.
  std::vector<long> checkpoints;
  long m = n;
  for (long l = 2; l <= m; ++l) {
    if (m % l == 0) {
      checkpoints.push_back(n / l);
      while (m % l == 0) m /= l;
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());

  Poly g = x_poly();
  const Poly x = x_poly();
  size_t ci = 0;
  for (long step = 1; step <= n; ++step) {
    g = sq_mod(g, f);
    while (ci < checkpoints.size() && checkpoints[ci] == step) {
      Poly d = gcd(add(g, x), f);
      if (degree(d) != 0) return false;
      ++ci;
    }
  }
  return degree(add(g, x)) < 0;
}

}  // namespace addpoly::gf2
