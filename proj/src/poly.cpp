#include "addpoly/poly.hpp"

#include <algorithm>
#include <random>

namespace addpoly {

namespace {

void trim(std::vector<FqElem>& c, const FieldCtx& F) {
  while (!c.empty() && F.is_zero(c.back())) c.pop_back();
}

const FieldCtx& same_ctx(const DensePoly& a, const DensePoly& b) {
  require(a.ctx && b.ctx && a.ctx->same_field(*b.ctx), Errc::ContextMismatch,
          "polynomials over different fields");
  return *a.ctx;
}

// ---- flat coefficient arrays (len coefficients, stride R) ----
//
// The hot loops (multiplication, remainder, Frobenius steps) run on flat
// int64 arrays to avoid per-coefficient allocation.

struct FlatPoly {
  std::vector<int64_t> d;
  long len = 0;
};

struct FF {
  int64_t p;
  long R;
  const int64_t* mod;
};

FF ff_of(const FieldCtx& F) { return FF{F.p(), F.degree(), F.modulus().data()}; }

bool el_is_zero(const FF& f, const int64_t* a) {
  for (long i = 0; i < f.R; ++i) {
    if (a[i]) return false;
  }
  return true;
}

template <bool kP2>
inline int64_t norm_mod(int64_t x, int64_t p) {
  if constexpr (kP2) {
    return x & 1;
  } else {
    return ((x % p) + p) % p;
  }
}

// sc (size 2R-1) := a*b reduced to the power basis; result in sc[0..R-1].
template <bool kP2>
void el_mul_sc(const FF& f, const int64_t* a, const int64_t* b, int64_t* sc) {
  const long R = f.R;
  std::fill(sc, sc + 2 * R - 1, 0);
  for (long i = 0; i < R; ++i) {
    const int64_t ai = a[i];
    if (!ai) continue;
    for (long j = 0; j < R; ++j) {
      sc[i + j] = norm_mod<kP2>(sc[i + j] + ai * b[j], f.p);
    }
  }
  for (long k = 2 * R - 2; k >= R; --k) {
    const int64_t c = sc[k];
    if (!c) continue;
    for (long j = 0; j < R; ++j) {
      sc[k - R + j] = norm_mod<kP2>(sc[k - R + j] - c * f.mod[j], f.p);
    }
    sc[k] = 0;
  }
}

void flat_trim(const FF& f, FlatPoly& a) {
  while (a.len > 0 && el_is_zero(f, &a.d[(a.len - 1) * f.R])) --a.len;
  a.d.resize(a.len * f.R);
}

template <bool kP2>
FlatPoly flat_mul_impl(const FF& f, const FlatPoly& a, const FlatPoly& b) {
  if (a.len == 0 || b.len == 0) return {};
  const long R = f.R;
  FlatPoly out;
  out.len = a.len + b.len - 1;
  out.d.assign(out.len * R, 0);
  std::vector<int64_t> sc(2 * R - 1);
  for (long i = 0; i < a.len; ++i) {
    const int64_t* ai = &a.d[i * R];
    if (el_is_zero(f, ai)) continue;
    for (long j = 0; j < b.len; ++j) {
      const int64_t* bj = &b.d[j * R];
      if (el_is_zero(f, bj)) continue;
      el_mul_sc<kP2>(f, ai, bj, sc.data());
      int64_t* o = &out.d[(i + j) * R];
      for (long k = 0; k < R; ++k) o[k] = norm_mod<kP2>(o[k] + sc[k], f.p);
    }
  }
  flat_trim(f, out);
  return out;
}

FlatPoly flat_mul(const FF& f, const FlatPoly& a, const FlatPoly& b) {
  return f.p == 2 ? flat_mul_impl<true>(f, a, b) : flat_mul_impl<false>(f, a, b);
}

// a mod b in place; b monic with b.len >= 1.
template <bool kP2>
void flat_rem_impl(const FF& f, FlatPoly& a, const FlatPoly& b) {
  const long R = f.R;
  const long db = b.len - 1;
  std::vector<int64_t> sc(2 * R - 1);
  for (long da = a.len - 1; da >= db; --da) {
    int64_t* lead = &a.d[da * R];
    if (el_is_zero(f, lead)) continue;
    for (long j = 0; j < db; ++j) {
      const int64_t* bj = &b.d[j * R];
      if (el_is_zero(f, bj)) continue;
      el_mul_sc<kP2>(f, lead, bj, sc.data());
      int64_t* o = &a.d[(da - db + j) * R];
      for (long k = 0; k < R; ++k) o[k] = norm_mod<kP2>(o[k] - sc[k], f.p);
    }
    std::fill(lead, lead + R, 0);
  }
  a.len = std::min(a.len, db);
  flat_trim(f, a);
}

void flat_rem(const FF& f, FlatPoly& a, const FlatPoly& b_monic) {
  if (f.p == 2) {
    flat_rem_impl<true>(f, a, b_monic);
  } else {
    flat_rem_impl<false>(f, a, b_monic);
  }
}

FlatPoly to_flat(const DensePoly& a) {
  const long R = a.ctx->degree();
  FlatPoly out;
  out.len = a.c.size();
  out.d.resize(out.len * R);
  for (long i = 0; i < out.len; ++i) {
    std::copy(a.c[i].v.begin(), a.c[i].v.end(), &out.d[i * R]);
  }
  return out;
}

DensePoly from_flat(const FieldCtx& F, const FlatPoly& a) {
  const long R = F.degree();
  DensePoly out{&F, {}};
  out.c.resize(a.len);
  for (long i = 0; i < a.len; ++i) {
    out.c[i].v.assign(&a.d[i * R], &a.d[i * R] + R);
  }
  return out;
}

// g^p mod f (f monic): coefficient p-th powers spread to p-multiple exponents.
FlatPoly flat_frobp_mod(const FieldCtx& F, const FlatPoly& g, const FlatPoly& f_monic) {
  if (g.len == 0) return {};
  const FF f = ff_of(F);
  const long R = f.R;
  FlatPoly out;
  out.len = (g.len - 1) * f.p + 1;
  out.d.assign(out.len * R, 0);
  FqElem tmp = F.zero();
  for (long i = 0; i < g.len; ++i) {
    if (el_is_zero(f, &g.d[i * R])) continue;
    tmp.v.assign(&g.d[i * R], &g.d[i * R] + R);
    FqElem powed = F.pow(tmp, BigInt(f.p));
    std::copy(powed.v.begin(), powed.v.end(), &out.d[i * f.p * R]);
  }
  flat_rem(f, out, f_monic);
  return out;
}

}  // namespace

DensePoly dp_zero(const FieldCtx& F) { return DensePoly{&F, {}}; }

DensePoly dp_const(const FieldCtx& F, const FqElem& a) {
  DensePoly out{&F, {a}};
  trim(out.c, F);
  return out;
}

DensePoly dp_x(const FieldCtx& F) { return DensePoly{&F, {F.zero(), F.one()}}; }

DensePoly dp_from_coeffs(const FieldCtx& F, std::vector<FqElem> coeffs) {
  DensePoly out{&F, std::move(coeffs)};
  trim(out.c, F);
  return out;
}

DensePoly dp_from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs) {
  std::vector<FqElem> c;
  c.reserve(coeffs.size());
  for (int64_t x : coeffs) c.push_back(F.from_int(x));
  return dp_from_coeffs(F, std::move(c));
}

bool dp_eq(const DensePoly& a, const DensePoly& b) {
  same_ctx(a, b);
  return a.c == b.c;
}

bool dp_less(const DensePoly& a, const DensePoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  return a.c < b.c;
}

DensePoly dp_add(const DensePoly& a, const DensePoly& b) {
  const FieldCtx& F = same_ctx(a, b);
  DensePoly out{&F, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < out.c.size(); ++i) {
    FqElem s = i < a.c.size() ? a.c[i] : F.zero();
    if (i < b.c.size()) s = F.add(s, b.c[i]);
    out.c[i] = std::move(s);
  }
  trim(out.c, F);
  return out;
}

DensePoly dp_neg(const DensePoly& a) {
  DensePoly out = a;
  for (auto& e : out.c) e = a.ctx->neg(e);
  return out;
}

DensePoly dp_sub(const DensePoly& a, const DensePoly& b) { return dp_add(a, dp_neg(b)); }

DensePoly dp_mul(const DensePoly& a, const DensePoly& b) {
  const FieldCtx& F = same_ctx(a, b);
  return from_flat(F, flat_mul(ff_of(F), to_flat(a), to_flat(b)));
}

DensePoly dp_scale(const DensePoly& a, const FqElem& s) {
  DensePoly out = a;
  for (auto& e : out.c) e = a.ctx->mul(e, s);
  trim(out.c, *a.ctx);
  return out;
}

std::pair<DensePoly, DensePoly> dp_divmod(const DensePoly& a, const DensePoly& b) {
  const FieldCtx& F = same_ctx(a, b);
  require(!b.is_zero(), Errc::DivisionByZero, "division by the zero polynomial");
  if (a.deg() < b.deg()) return {dp_zero(F), a};
  FqElem lc = b.c.back();
  FqElem ilc = F.inv(lc);
  DensePoly bm = dp_scale(b, ilc);
  // long division against the monic divisor; scale the quotient back at the end
  std::vector<FqElem> rem = a.c;
  long db = bm.deg();
  std::vector<FqElem> quot(a.deg() - db + 1, F.zero());
  for (long da = a.deg(); da >= db; --da) {
    FqElem c = rem[da];
    if (F.is_zero(c)) continue;
    quot[da - db] = c;
    for (long j = 0; j <= db; ++j) {
      rem[da - db + j] = F.sub(rem[da - db + j], F.mul(c, bm.c[j]));
    }
  }
  rem.resize(db >= 0 ? db : 0, F.zero());
  trim(rem, F);
  DensePoly q = dp_from_coeffs(F, std::move(quot));
  q = dp_scale(q, ilc);
  return {std::move(q), dp_from_coeffs(F, std::move(rem))};
}

DensePoly dp_mod(const DensePoly& a, const DensePoly& b) {
  const FieldCtx& F = same_ctx(a, b);
  require(!b.is_zero(), Errc::DivisionByZero, "division by the zero polynomial");
  if (a.deg() < b.deg()) return a;
  FqElem lc = b.c.back();
  DensePoly bm = F.is_one(lc) ? b : dp_scale(b, F.inv(lc));
  FlatPoly fa = to_flat(a);
  flat_rem(ff_of(F), fa, to_flat(bm));
  return from_flat(F, fa);
}

DensePoly dp_monic(const DensePoly& a) {
  if (a.is_zero()) return a;
  const FieldCtx& F = *a.ctx;
  if (F.is_one(a.c.back())) return a;
  return dp_scale(a, F.inv(a.c.back()));
}

DensePoly dp_gcd(const DensePoly& a, const DensePoly& b) {
  same_ctx(a, b);
  DensePoly x = a, y = b;
  while (!y.is_zero()) {
    DensePoly r = dp_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return dp_monic(x);
}

DensePoly dp_pow(const DensePoly& a, long n) {
  require(n >= 0, Errc::Internal, "dp_pow: negative exponent");
  const FieldCtx& F = *a.ctx;
  DensePoly r = dp_const(F, F.one());
  DensePoly b = a;
  while (n) {
    if (n & 1) r = dp_mul(r, b);
    b = dp_mul(b, b);
    n >>= 1;
  }
  return r;
}

DensePoly dp_powmod(const DensePoly& base, BigInt e, const DensePoly& mod) {
  const FieldCtx& F = same_ctx(base, mod);
  require(mod.deg() >= 1, Errc::ConstantModulus, "powmod by constant modulus");
  require(e >= 0, Errc::Internal, "dp_powmod: negative exponent");
  DensePoly bm = dp_monic(mod);
  const FF f = ff_of(F);
  FlatPoly fmod = to_flat(bm);
  FlatPoly r = to_flat(dp_const(F, F.one()));
  FlatPoly b = to_flat(dp_mod(base, bm));
  while (e > 0) {
    if ((e & 1) != 0) {
      r = flat_mul(f, r, b);
      flat_rem(f, r, fmod);
    }
    b = flat_mul(f, b, b);
    flat_rem(f, b, fmod);
    e >>= 1;
  }
  return from_flat(F, r);
}

DensePoly dp_derivative(const DensePoly& a) {
  const FieldCtx& F = *a.ctx;
  if (a.deg() <= 0) return dp_zero(F);
  std::vector<FqElem> out(a.deg(), F.zero());
  for (long i = 1; i <= a.deg(); ++i) {
    FqElem k = F.from_int(i % F.p());
    out[i - 1] = F.mul(k, a.c[i]);
  }
  return dp_from_coeffs(F, std::move(out));
}

FqElem dp_eval(const DensePoly& a, const FqElem& x) {
  const FieldCtx& F = *a.ctx;
  FqElem acc = F.zero();
  for (long i = a.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

DensePoly dp_compose(const DensePoly& f, const DensePoly& g) {
  const FieldCtx& F = same_ctx(f, g);
  DensePoly acc = dp_zero(F);
  for (long i = f.deg(); i >= 0; --i) {
    acc = dp_mul(acc, g);
    acc = dp_add(acc, dp_const(F, f.c[i]));
  }
  return acc;
}

FrobeniusLadder::FrobeniusLadder(DensePoly f) : f_(dp_monic(std::move(f))) {
  require(f_.deg() >= 1, Errc::ConstantModulus, "Frobenius ladder needs a nonconstant modulus");
  g_ = dp_mod(dp_x(*f_.ctx), f_);
}

const DensePoly& FrobeniusLadder::advance() {
  const FieldCtx& F = *f_.ctx;
  FlatPoly g = to_flat(g_);
  FlatPoly fm = to_flat(f_);
  for (int i = 0; i < F.degree(); ++i) g = flat_frobp_mod(F, g, fm);
  g_ = from_flat(F, g);
  ++j_;
  return g_;
}

DensePoly modexp_frobenius(const DensePoly& f, long s) {
  require(f.deg() >= 1, Errc::ConstantModulus, "modexp by constant modulus");
  require(s >= 1, Errc::Internal, "modexp_frobenius: s < 1");
  FrobeniusLadder ladder(f);
  for (long j = 0; j < s; ++j) ladder.advance();
  return ladder.current();
}

namespace {

// f = sum c_i X^(p*i) -> sum c_i^(1/p) X^i
DensePoly dp_pth_root_poly(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  const int64_t p = F.p();
  std::vector<FqElem> out(f.deg() / p + 1, F.zero());
  for (long i = 0; i <= f.deg(); ++i) {
    if (F.is_zero(f.c[i])) continue;
    require(i % p == 0, Errc::Internal, "pth root of a non-p-power polynomial");
    out[i / p] = F.pth_root(f.c[i]);
  }
  return dp_from_coeffs(F, std::move(out));
}

void sqf_rec(const DensePoly& f, long outer_mult, std::vector<std::pair<DensePoly, long>>& out) {
  const FieldCtx& F = *f.ctx;
  const int64_t p = F.p();
  if (f.deg() == 0) return;
  DensePoly d = dp_derivative(f);
  if (d.is_zero()) {
    sqf_rec(dp_pth_root_poly(f), outer_mult * p, out);
    return;
  }
  DensePoly c = dp_gcd(f, d);
  DensePoly w = dp_divmod(f, c).first;
  long i = 1;
  while (w.deg() > 0) {
    DensePoly y = dp_gcd(w, c);
    DensePoly z = dp_divmod(w, y).first;
    if (z.deg() > 0) out.emplace_back(dp_monic(z), i * outer_mult);
    c = dp_divmod(c, y).first;
    w = std::move(y);
    ++i;
  }
  if (c.deg() > 0) sqf_rec(dp_pth_root_poly(c), outer_mult * p, out);
}

}  // namespace

SquarefreePart squarefree_decompose(const DensePoly& f) {
  require(f.deg() >= 1, Errc::ConstantInput, "squarefree decomposition of a constant");
  const FieldCtx& F = *f.ctx;
  SquarefreePart out;
  sqf_rec(dp_monic(f), 1, out.profile);
  out.f0 = dp_const(F, F.one());
  out.e = 1;
  for (const auto& [g, m] : out.profile) {
    out.f0 = dp_mul(out.f0, g);
    out.e = std::max(out.e, m);
  }
  // sanity: f | f0^e and f0 | f
  DensePoly fm = dp_monic(f);
  require(dp_mod(dp_pow(out.f0, out.e), fm).is_zero(), Errc::Internal, "squarefree: f does not divide f0^e");
  require(dp_mod(fm, out.f0).is_zero(), Errc::Internal, "squarefree: f0 does not divide f");
  return out;
}

namespace {

// distinct-degree split of a squarefree monic polynomial
std::vector<std::pair<DensePoly, long>> ddf_split(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  std::vector<std::pair<DensePoly, long>> out;
  DensePoly rem = f;
  DensePoly h = dp_mod(dp_x(F), rem);
  long d = 0;
  while (rem.deg() > 0) {
    ++d;
    if (2 * d > rem.deg()) {
      out.emplace_back(rem, rem.deg());
      break;
    }
    // h <- h^q mod rem
    {
      FlatPoly hh = to_flat(h);
      FlatPoly fm = to_flat(rem);
      for (int i = 0; i < F.degree(); ++i) hh = flat_frobp_mod(F, hh, fm);
      h = from_flat(F, hh);
    }
    DensePoly g = dp_gcd(dp_sub(h, dp_x(F)), rem);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      rem = dp_divmod(rem, g).first;
      if (rem.deg() > 0) h = dp_mod(h, rem);
    }
  }
  return out;
}

// equal-degree split: h is squarefree monic, all factors of degree d
void edf(const DensePoly& h, long d, std::mt19937_64& rng, std::vector<DensePoly>& out) {
  const FieldCtx& F = *h.ctx;
  if (h.deg() == d) {
    out.push_back(dp_monic(h));
    return;
  }
  const int64_t p = F.p();
  while (true) {
    std::vector<FqElem> rc(h.deg());
    for (auto& e : rc) {
      std::vector<int64_t> v(F.degree());
      for (auto& x : v) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
      e = F.from_coeffs(std::move(v));
    }
    DensePoly a = dp_from_coeffs(F, std::move(rc));
    if (a.is_zero()) continue;
    DensePoly t;
    if (p == 2) {
      // trace map over F_2: sum of a^(2^i) for i < R*d
      DensePoly acc = dp_mod(a, h);
      DensePoly cur = acc;
      FlatPoly fm = to_flat(dp_monic(h));
      for (long i = 1; i < F.degree() * d; ++i) {
        FlatPoly cc = to_flat(cur);
        cc = flat_frobp_mod(F, cc, fm);
        cur = from_flat(F, cc);
        acc = dp_add(acc, cur);
      }
      t = acc;
    } else {
      BigInt e = (pow_big(F.q(), d) - 1) / 2;
      t = dp_sub(dp_powmod(a, e, h), dp_const(F, F.one()));
    }
    DensePoly g = dp_gcd(t, h);
    if (g.deg() > 0 && g.deg() < h.deg()) {
      edf(g, d, rng, out);
      edf(dp_divmod(h, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::map<long, long> ddf_counts(const DensePoly& f) {
  require(f.deg() >= 1, Errc::ConstantInput, "distinct-degree split of a constant");
  std::map<long, long> out;
  for (const auto& [g, d] : ddf_split(dp_monic(f))) {
    out[d] += g.deg() / d;
  }
  return out;
}

Factorization factorize(const DensePoly& f, uint64_t seed) {
  require(f.deg() >= 1, Errc::ConstantInput, "factorization of a constant");
  const FieldCtx& F = *f.ctx;
  Factorization out;
  out.unit = f.c.back();
  std::mt19937_64 rng(seed);
  for (const auto& [g, m] : squarefree_decompose(f).profile) {
    for (const auto& [prod, d] : ddf_split(g)) {
      std::vector<DensePoly> irr;
      edf(prod, d, rng, irr);
      for (auto& h : irr) out.factors.emplace_back(std::move(h), m);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return dp_less(a.first, b.first); });
  // verify by re-multiplication
  DensePoly check = dp_const(F, out.unit);
  for (const auto& [h, m] : out.factors) check = dp_mul(check, dp_pow(h, m));
  require(dp_eq(check, f), Errc::Internal, "factorization does not re-multiply to the input");
  return out;
}

BigInt poly_order(const DensePoly& g, int degree_cap) {
  require(g.deg() >= 1, Errc::ConstantInput, "order of a constant");
  const FieldCtx& F = *g.ctx;
  require(!F.is_zero(g.c[0]), Errc::RootAtZero, "order undefined when X divides g");
  Factorization fac = factorize(g);
  BigInt ord = 1;
  long max_mult = 1;
  for (const auto& [h, m] : fac.factors) {
    max_mult = std::max(max_mult, m);
    require(h.deg() <= degree_cap, Errc::Unsupported,
            "irreducible factor degree exceeds the order cap");
    BigInt group = pow_big(F.q(), h.deg()) - 1;
    BigInt e = group;
    for (const auto& [l, k] : factor_big(group)) {
      (void)k;
      while (e % l == 0) {
        DensePoly t = dp_powmod(dp_x(F), e / l, h);
        if (!dp_eq(t, dp_const(F, F.one()))) break;
        e /= l;
      }
    }
    ord = lcm_big(ord, e);
  }
  ord *= pow_big(BigInt(F.p()), ceil_log(F.p(), BigInt(max_mult), 1));
  // certify: g | X^ord - 1
  DensePoly gm = dp_monic(g);
  DensePoly t = dp_powmod(dp_x(F), ord, gm);
  require(dp_eq(t, dp_const(F, F.one())), Errc::Internal, "computed order fails divisibility");
  return ord;
}

}  // namespace addpoly
