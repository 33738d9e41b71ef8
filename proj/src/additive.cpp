#include "addpoly/additive.hpp"

#include <algorithm>

namespace addpoly {

namespace {

void trim(std::vector<FqElem>& a, const FieldCtx& F) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

const FieldCtx& same_ctx(const AdditivePoly& x, const AdditivePoly& y) {
  require(x.ctx && y.ctx && x.ctx->same_field(*y.ctx), Errc::ContextMismatch,
          "additive polynomials over different fields");
  return *x.ctx;
}

}  // namespace

long AdditivePoly::bottom() const {
  for (long i = 0; i <= top(); ++i) {
    if (!ctx->is_zero(a[i])) return i;
  }
  return -1;
}

AdditivePoly ap_zero(const FieldCtx& F) { return AdditivePoly{&F, {}}; }

AdditivePoly ap_identity(const FieldCtx& F) { return AdditivePoly{&F, {F.one()}}; }

AdditivePoly ap_from_coeffs(const FieldCtx& F, std::vector<FqElem> acoeffs) {
  AdditivePoly out{&F, std::move(acoeffs)};
  trim(out.a, F);
  return out;
}

AdditivePoly ap_from_sparse(const FieldCtx& F,
                            const std::vector<std::pair<long, FqElem>>& terms) {
  std::vector<FqElem> a;
  for (const auto& [i, c] : terms) {
    require(i >= 0, Errc::ParseError, "negative p-power index");
    if (static_cast<long>(a.size()) <= i) a.resize(i + 1, F.zero());
    a[i] = F.add(a[i], c);
  }
  return ap_from_coeffs(F, std::move(a));
}

bool ap_eq(const AdditivePoly& x, const AdditivePoly& y) {
  same_ctx(x, y);
  return x.a == y.a;
}

AdditivePoly from_dense(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  const int64_t p = F.p();
  std::vector<FqElem> a;
  for (long e = 0; e <= f.deg(); ++e) {
    if (F.is_zero(f.c[e])) continue;
    // e must be a power of p
    long i = 0;
    int64_t pw = 1;
    while (pw < e) {
      pw *= p;
      ++i;
    }
    require(pw == e && e >= 1, Errc::NotAdditive,
            "nonzero coefficient at a non-p-power exponent");
    if (static_cast<long>(a.size()) <= i) a.resize(i + 1, F.zero());
    a[i] = f.c[e];
  }
  return ap_from_coeffs(F, std::move(a));
}

DensePoly to_dense(const AdditivePoly& A, long dense_cap) {
  const FieldCtx& F = *A.ctx;
  if (A.is_zero()) return dp_zero(F);
  BigInt deg = pow_big(BigInt(F.p()), A.top());
  require(deg <= dense_cap, Errc::Unsupported, "dense expansion exceeds the degree cap");
  std::vector<FqElem> c(deg.convert_to<long>() + 1, F.zero());
  int64_t pw = 1;
  for (long i = 0; i <= A.top(); ++i) {
    c[pw] = A.a[i];
    pw *= F.p();
  }
  return dp_from_coeffs(F, std::move(c));
}

DensePoly to_dense_affine(const AffinePoly& B, long dense_cap) {
  DensePoly d = to_dense(B.A, dense_cap);
  return dp_add(d, dp_const(*B.A.ctx, B.b));
}

AffinePoly affine_from_dense(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  if (f.is_zero()) return AffinePoly{ap_zero(F), F.zero()};
  FqElem b = f.c[0];
  DensePoly g = dp_sub(f, dp_const(F, b));
  return AffinePoly{from_dense(g), b};
}

AdditivePoly lin_associate(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  const long R = F.degree();
  std::vector<FqElem> a;
  for (long i = 0; i <= f.deg(); ++i) {
    if (F.is_zero(f.c[i])) continue;
    if (static_cast<long>(a.size()) <= R * i) a.resize(R * i + 1, F.zero());
    a[R * i] = f.c[i];
  }
  return ap_from_coeffs(F, std::move(a));
}

bool q_linearized(const AdditivePoly& A, DensePoly* f_out) {
  const FieldCtx& F = *A.ctx;
  const long R = F.degree();
  std::vector<FqElem> f;
  for (long i = 0; i <= A.top(); ++i) {
    if (F.is_zero(A.a[i])) continue;
    if (i % R != 0) return false;
    if (static_cast<long>(f.size()) <= i / R) f.resize(i / R + 1, F.zero());
    f[i / R] = A.a[i];
  }
  if (f_out) *f_out = dp_from_coeffs(F, std::move(f));
  return true;
}

AdditivePoly ap_add(const AdditivePoly& x, const AdditivePoly& y) {
  const FieldCtx& F = same_ctx(x, y);
  std::vector<FqElem> a(std::max(x.a.size(), y.a.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (i < x.a.size()) a[i] = x.a[i];
    if (i < y.a.size()) a[i] = F.add(a[i], y.a[i]);
  }
  return ap_from_coeffs(F, std::move(a));
}

AdditivePoly ap_sub(const AdditivePoly& x, const AdditivePoly& y) {
  const FieldCtx& F = same_ctx(x, y);
  std::vector<FqElem> a(std::max(x.a.size(), y.a.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (i < x.a.size()) a[i] = x.a[i];
    if (i < y.a.size()) a[i] = F.sub(a[i], y.a[i]);
  }
  return ap_from_coeffs(F, std::move(a));
}

AdditivePoly compose(const AdditivePoly& A, const AdditivePoly& B) {
  const FieldCtx& F = same_ctx(A, B);
  if (A.is_zero() || B.is_zero()) return ap_zero(F);
  std::vector<FqElem> out(A.a.size() + B.a.size() - 1, F.zero());
  for (long i = 0; i <= A.top(); ++i) {
    if (F.is_zero(A.a[i])) continue;
    for (long j = 0; j <= B.top(); ++j) {
      if (F.is_zero(B.a[j])) continue;
      out[i + j] = F.add(out[i + j], F.mul(A.a[i], F.frobenius(B.a[j], i)));
    }
  }
  return ap_from_coeffs(F, std::move(out));
}

AdditivePoly iterate(const AdditivePoly& A, long n) {
  require(n >= 0, Errc::Internal, "iterate: negative count");
  const FieldCtx& F = *A.ctx;
  AdditivePoly r = ap_identity(F);
  AdditivePoly b = A;
  while (n) {
    if (n & 1) r = compose(r, b);
    b = compose(b, b);
    n >>= 1;
  }
  return r;
}

std::pair<AdditivePoly, FqElem> iterate_affine(const AffinePoly& B, long n) {
  require(n >= 1, Errc::Internal, "iterate_affine: n < 1");
  const FieldCtx& F = *B.A.ctx;
  FqElem beta = B.b;
  for (long l = 1; l < n; ++l) beta = F.add(ap_eval(B.A, beta), B.b);
  return {iterate(B.A, n), beta};
}

std::pair<AdditivePoly, AdditivePoly> right_div(const AdditivePoly& B,
                                                const AdditivePoly& A) {
  const FieldCtx& F = same_ctx(B, A);
  require(!A.is_zero(), Errc::ZeroDivisor, "right division by the zero polynomial");
  const long ta = A.top();
  const FqElem alpha = A.a[ta];
  AdditivePoly rem = B;
  std::vector<FqElem> c;
  while (rem.top() >= ta) {
    long k = rem.top() - ta;
    // leading cancellation: coefficient of X^(p^(k+ta)) in (cX^(p^k)) o A is c*alpha^(p^k)
    FqElem coef = F.div(rem.a.back(), F.frobenius(alpha, k));
    if (static_cast<long>(c.size()) <= k) c.resize(k + 1, F.zero());
    c[k] = coef;
    std::vector<FqElem> r = rem.a;
    for (long i = 0; i <= ta; ++i) {
      if (F.is_zero(A.a[i])) continue;
      r[k + i] = F.sub(r[k + i], F.mul(coef, F.frobenius(A.a[i], k)));
    }
    rem = ap_from_coeffs(F, std::move(r));
  }
  return {ap_from_coeffs(F, std::move(c)), rem};
}

std::pair<AdditivePoly, long> separable_part(const AdditivePoly& A) {
  const FieldCtx& F = *A.ctx;
  require(!A.is_zero(), Errc::ZeroInput, "separable part of the zero polynomial");
  long m = A.bottom();
  std::vector<FqElem> a(A.a.begin() + m, A.a.end());
  for (auto& c : a) {
    for (long k = 0; k < m; ++k) c = F.pth_root(c);
  }
  return {ap_from_coeffs(F, std::move(a)), m};
}

ExceptionalForm is_exceptional(const AffinePoly& Fp) {
  const FieldCtx& F = *Fp.A.ctx;
  ExceptionalForm out;
  out.b = Fp.b;
  long nonzero = 0, h = 0;
  for (long i = 0; i <= Fp.A.top(); ++i) {
    if (!F.is_zero(Fp.A.a[i])) {
      ++nonzero;
      h = i;
    }
  }
  if (nonzero <= 1) {
    out.exceptional = true;
    out.h = h;
    out.a = nonzero ? Fp.A.a[h] : F.zero();
    out.additive_single_term = nonzero == 1 && F.is_zero(Fp.b);
  }
  return out;
}

AdditivePoly build_S(const FieldCtx& F, long s, long r) {
  require(s >= 1 && r >= 0, Errc::Internal, "build_S: bad indices");
  const long R = F.degree();
  return ap_from_sparse(
      F, {{R * r, F.neg(F.one())}, {R * (s + r), F.one()}});
}

FqElem ap_eval(const AdditivePoly& A, const FqElem& x) {
  const FieldCtx& F = *A.ctx;
  FqElem acc = F.zero();
  FqElem pw = x;
  for (long i = 0; i <= A.top(); ++i) {
    if (i > 0) pw = F.pow(pw, BigInt(F.p()));
    if (!F.is_zero(A.a[i])) acc = F.add(acc, F.mul(A.a[i], pw));
  }
  return acc;
}

FqElem affine_eval(const AffinePoly& B, const FqElem& x) {
  return B.A.ctx->add(ap_eval(B.A, x), B.b);
}

FqElem ap_eval_ext(const AdditivePoly& A, const ExtCtx& E, const FqElem& x) {
  require(E.base.same_field(*A.ctx), Errc::ContextMismatch,
          "extension of a different base field");
  const FieldCtx& G = E.big;
  FqElem acc = G.zero();
  FqElem pw = x;
  for (long i = 0; i <= A.top(); ++i) {
    if (i > 0) pw = G.pow(pw, BigInt(G.p()));
    if (!A.ctx->is_zero(A.a[i])) acc = G.add(acc, G.mul(E.embed(A.a[i]), pw));
  }
  return acc;
}

FqElem affine_eval_ext(const AffinePoly& B, const ExtCtx& E, const FqElem& x) {
  return E.big.add(ap_eval_ext(B.A, E, x), E.embed(B.b));
}

}  // namespace addpoly
