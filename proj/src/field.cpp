#include "addpoly/field.hpp"

#include <algorithm>

#include "gf2poly.hpp"

namespace addpoly {

namespace {

int64_t invm(int64_t a, int64_t p) {
  // extended Euclid
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t qq = r / newr;
    t -= qq * newt;
    std::swap(t, newt);
    r -= qq * newr;
    std::swap(r, newr);
  }
  require(r == 1, Errc::DivisionByZero, "inverse of zero residue");
  return ((t % p) + p) % p;
}

// --- dense F_p[x] helpers (coefficients low-to-high, reduced mod p) ---

long fp_deg(const std::vector<int64_t>& a) {
  for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i) {
    if (a[i]) return i;
  }
  return -1;
}

void fp_trim(std::vector<int64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
std::vector<int64_t> fp_mod(std::vector<int64_t> a, const std::vector<int64_t>& f, int64_t p) {
  long df = fp_deg(f);
  for (long da = fp_deg(a); da >= df; da = fp_deg(a)) {
    int64_t c = a[da];
    for (long j = 0; j < df; ++j) {
      a[da - df + j] = ((a[da - df + j] - c * f[j]) % p + p) % p;
    }
    a[da] = 0;
  }
  fp_trim(a);
  return a;
}

// g(x)^p mod f == g(x^p) mod f over F_p
std::vector<int64_t> fp_powp_mod(const std::vector<int64_t>& g, const std::vector<int64_t>& f,
                                 int64_t p) {
  long dg = fp_deg(g);
  if (dg < 0) return {};
  std::vector<int64_t> spread(static_cast<size_t>(dg) * p + 1, 0);
  for (long i = 0; i <= dg; ++i) spread[static_cast<size_t>(i) * p] = g[i];
  return fp_mod(std::move(spread), f, p);
}

std::vector<int64_t> fp_gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (fp_deg(b) >= 0) {
    // make b monic for the division step
    int64_t lc = b[fp_deg(b)];
    if (lc != 1) {
      int64_t il = invm(lc, p);
      for (auto& c : b) c = c * il % p;
    }
    a = fp_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool fp_irreducible_odd(int64_t p, const std::vector<int64_t>& f) {
  long n = fp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<long> checkpoints;
  long m = n;
  for (long l = 2; l <= m; ++l) {
    if (m % l == 0) {
      checkpoints.push_back(n / l);
      while (m % l == 0) m /= l;
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());

  std::vector<int64_t> g{0, 1};  // x
  size_t ci = 0;
  for (long step = 1; step <= n; ++step) {
    g = fp_powp_mod(g, f, p);
    while (ci < checkpoints.size() && checkpoints[ci] == step) {
      std::vector<int64_t> diff = g;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = ((diff[1] - 1) % p + p) % p;
      fp_trim(diff);
      auto d = fp_gcd(diff, f, p);
      if (fp_deg(d) != 0) return false;
      ++ci;
    }
  }
  std::vector<int64_t> diff = g;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  fp_trim(diff);
  return fp_deg(diff) < 0;
}

}  // namespace

bool fp_poly_irreducible(int64_t p, const std::vector<int64_t>& f) {
  if (p == 2) return gf2::is_irreducible(gf2::from_coeffs(f));
  return fp_irreducible_odd(p, f);
}

namespace {

// Lexicographically least monic irreducible of degree r over F_p, coefficients
// compared low-degree-first (c0 most significant in the scan order).
std::vector<int64_t> least_irreducible(int64_t p, int r) {
  if (r == 1) return {0, 1};  // x
  std::vector<int64_t> c(r, 0);
  c[0] = 1;  // constant term 0 would be divisible by x
  while (true) {
    bool has_root = false;
    if (p <= 4096) {
      for (int64_t a = 0; a < p && !has_root; ++a) {
        int64_t val = 1;  // leading coefficient
        for (int i = r - 1; i >= 0; --i) val = (val * a + c[i]) % p;
        if (val == 0) has_root = true;
      }
    }
    if (!has_root) {
      std::vector<int64_t> f(c);
      f.push_back(1);
      if (fp_poly_irreducible(p, f)) return f;
    }
    // increment (c0 most significant)
    int i = r - 1;
    while (i >= 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      --i;
    }
    require(i >= 0, Errc::Internal, "no irreducible polynomial found");
  }
}

}  // namespace

FieldCtx::FieldCtx(int64_t p, int r) : p_(p), r_(r) {
  require(p >= 2 && p < (int64_t(1) << 31) && is_prime_u64(static_cast<uint64_t>(p)),
          Errc::NotPrime, "p must be a machine-word prime");
  require(r >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");
  mod_ = least_irreducible(p, r);
  q_ = pow_big(BigInt(p), r);
}

FieldCtx::FieldCtx(int64_t p, int r, std::vector<int64_t> modulus) : p_(p), r_(r) {
  require(p >= 2 && p < (int64_t(1) << 31) && is_prime_u64(static_cast<uint64_t>(p)),
          Errc::NotPrime, "p must be a machine-word prime");
  require(r >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");
  for (auto& c : modulus) c = ((c % p) + p) % p;
  fp_trim(modulus);
  require(fp_deg(modulus) == r && modulus[r] == 1, Errc::DegreeMismatch,
          "modulus must be monic of degree r");
  require(fp_poly_irreducible(p, modulus), Errc::NotIrreducible, "modulus is reducible");
  mod_ = std::move(modulus);
  q_ = pow_big(BigInt(p), r);
}

FqElem FieldCtx::zero() const { return FqElem{std::vector<int64_t>(r_, 0)}; }

FqElem FieldCtx::one() const { return from_int(1); }

FqElem FieldCtx::gen() const {
  FqElem e = zero();
  if (r_ >= 2) {
    e.v[1] = 1;
  }
  // For R == 1 the modulus is x, whose root is 0: the generator image is 0.
  return e;
}

FqElem FieldCtx::from_int(int64_t n) const {
  FqElem e = zero();
  e.v[0] = ((n % p_) + p_) % p_;
  return e;
}

FqElem FieldCtx::from_coeffs(std::vector<int64_t> c) const {
  require(static_cast<int>(c.size()) <= r_, Errc::DegreeMismatch, "too many coordinates");
  c.resize(r_, 0);
  for (auto& x : c) x = ((x % p_) + p_) % p_;
  return FqElem{std::move(c)};
}

bool FieldCtx::is_zero(const FqElem& a) const {
  return std::all_of(a.v.begin(), a.v.end(), [](int64_t c) { return c == 0; });
}

bool FieldCtx::is_one(const FqElem& a) const { return a == one(); }

FqElem FieldCtx::add(const FqElem& a, const FqElem& b) const {
  FqElem out = a;
  for (int i = 0; i < r_; ++i) out.v[i] = (out.v[i] + b.v[i]) % p_;
  return out;
}

FqElem FieldCtx::sub(const FqElem& a, const FqElem& b) const {
  FqElem out = a;
  for (int i = 0; i < r_; ++i) out.v[i] = ((out.v[i] - b.v[i]) % p_ + p_) % p_;
  return out;
}

FqElem FieldCtx::neg(const FqElem& a) const {
  FqElem out = a;
  for (int i = 0; i < r_; ++i) out.v[i] = (p_ - out.v[i]) % p_;
  return out;
}

FqElem FieldCtx::mul(const FqElem& a, const FqElem& b) const {
  std::vector<int64_t> prod(2 * r_ - 1, 0);
  for (int i = 0; i < r_; ++i) {
    if (a.v[i] == 0) continue;
    for (int j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + a.v[i] * b.v[j]) % p_;
    }
  }
  for (int k = 2 * r_ - 2; k >= r_; --k) {
    int64_t c = prod[k];
    if (c == 0) continue;
    for (int j = 0; j < r_; ++j) {
      prod[k - r_ + j] = ((prod[k - r_ + j] - c * mod_[j]) % p_ + p_) % p_;
    }
    prod[k] = 0;
  }
  prod.resize(r_);
  return FqElem{std::move(prod)};
}

FqElem FieldCtx::inv(const FqElem& a) const {
  require(!is_zero(a), Errc::DivisionByZero, "inverse of zero");
  // extended Euclid in F_p[x] against the modulus
  std::vector<int64_t> r0 = mod_, r1 = a.v;
  fp_trim(r1);
  std::vector<int64_t> t0, t1{1};
  while (fp_deg(r1) >= 0) {
    long d0 = fp_deg(r0), d1 = fp_deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
      continue;
    }
    int64_t c = r0[d0] * invm(r1[d1], p_) % p_;
    long sh = d0 - d1;
    for (long j = 0; j <= d1; ++j) {
      r0[j + sh] = ((r0[j + sh] - c * r1[j]) % p_ + p_) % p_;
    }
    if (t0.size() < t1.size() + sh) t0.resize(t1.size() + sh, 0);
    for (size_t j = 0; j < t1.size(); ++j) {
      t0[j + sh] = ((t0[j + sh] - c * t1[j]) % p_ + p_) % p_;
    }
    fp_trim(r0);
  }
  long d = fp_deg(r0);
  require(d == 0, Errc::Internal, "inv: gcd with modulus not constant");
  int64_t scale = invm(r0[0], p_);
  for (auto& c : t0) c = c * scale % p_;
  t0.resize(r_, 0);
  return FqElem{std::move(t0)};
}

FqElem FieldCtx::div(const FqElem& a, const FqElem& b) const { return mul(a, inv(b)); }

FqElem FieldCtx::pow(const FqElem& a, BigInt e) const {
  if (e < 0) {
    return pow(inv(a), -e);
  }
  FqElem r = one();
  FqElem b = a;
  while (e > 0) {
    if ((e & 1) != 0) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqElem FieldCtx::frobenius(const FqElem& a, long k) const {
  k %= r_;
  if (k < 0) k += r_;
  FqElem out = a;
  for (long i = 0; i < k; ++i) out = pow(out, BigInt(p_));
  return out;
}

FqElem FieldCtx::pth_root(const FqElem& a) const { return frobenius(a, r_ - 1); }

FqElem FieldCtx::mul_by_gen(const FqElem& a) const {
  FqElem out = zero();
  int64_t top = a.v[r_ - 1];
  for (int i = r_ - 1; i >= 1; --i) out.v[i] = a.v[i - 1];
  out.v[0] = 0;
  if (top != 0) {
    for (int i = 0; i < r_; ++i) {
      out.v[i] = ((out.v[i] - top * mod_[i]) % p_ + p_) % p_;
    }
  }
  return out;
}

std::vector<FqElem> FieldCtx::all_elements(long cap) const {
  require(q_ <= cap, Errc::Unsupported, "field too large to enumerate");
  long n = q_.convert_to<long>();
  std::vector<FqElem> out;
  out.reserve(n);
  FqElem cur = zero();
  for (long k = 0; k < n; ++k) {
    out.push_back(cur);
    int i = r_ - 1;
    while (i >= 0) {
      if (++cur.v[i] < p_) break;
      cur.v[i] = 0;
      --i;
    }
  }
  return out;
}

FqElem ExtCtx::embed(const FqElem& a) const {
  FqElem acc = big.zero();
  for (int i = base.degree() - 1; i >= 0; --i) {
    acc = big.mul(acc, embed_gen);
    acc = big.add(acc, big.from_int(a.v[i]));
  }
  return acc;
}

}  // namespace addpoly
