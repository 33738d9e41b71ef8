#include "addpoly/splitting.hpp"

#include <algorithm>

namespace addpoly {

namespace {

// Least j such that all roots of the separable monic-izable g lie in F_{q^j}:
// first j with X^(q^j) == X mod g.
long ladder_search(const DensePoly& g, const Caps& caps) {
  const FieldCtx& F = *g.ctx;
  if (g.deg() == 1) return 1;
  DensePoly gm = dp_monic(g);
  DensePoly xmod = dp_mod(dp_x(F), gm);
  FrobeniusLadder lad(gm);
  while (lad.j() < caps.search_cap) {
    if (dp_eq(lad.advance(), xmod)) return lad.j();
  }
  fail(Errc::Unsupported, "splitting-degree search cap exceeded");
}

}  // namespace

// Atilde_n(X) - c with c the p^(m*n)-th root of -beta_n.
DensePoly distinct_root_poly(const AffinePoly& Fp, long n, const Caps& caps) {
  const FieldCtx& F = *Fp.A.ctx;
  AdditivePoly An;
  FqElem beta = F.zero();
  if (F.is_zero(Fp.b)) {
    An = iterate(Fp.A, n);
  } else {
    std::tie(An, beta) = iterate_affine(Fp, n);
  }
  auto [At, mn] = separable_part(An);
  DensePoly g = to_dense(At, caps.dense_cap);
  if (!F.is_zero(beta)) {
    FqElem c = beta;
    for (long k = 0; k < mn; ++k) c = F.pth_root(c);
    g = dp_add(g, dp_const(F, c));
  }
  return g;
}

namespace {

long split_modexp(const AffinePoly& Fp, long n, const Caps& caps) {
  return ladder_search(distinct_root_poly(Fp, n, caps), caps);
}

// Matrix-route primitive: number of F_p-dimensions of roots of A^(n) in F_{q^s}.
long kernel_dim(const AdditivePoly& A, long s, long n, const Caps& caps,
                FpMatrix* tn_out) {
  const FieldCtx& F = *A.ctx;
  require(F.degree() * s <= caps.matrix_dim_cap, Errc::Unsupported,
          "matrix dimension cap exceeded");
  auto ext = make_extension_cached(F, s);
  FpMatrix t = matrix_of_map(A, *ext);
  FpMatrix tn = mat_pow(t, n);
  long dim = tn.cols - rank_kernel(tn).rank;
  if (tn_out) *tn_out = std::move(tn);
  return dim;
}

long split_matrix(const AffinePoly& Fp, long n, const Caps& caps) {
  const FieldCtx& F = *Fp.A.ctx;
  const int64_t p = F.p();
  auto [At, m] = separable_part(Fp.A);
  const long d = At.top();
  // s_A(1) by incremental kernel search
  long s1 = 0;
  for (long j = 1; j <= caps.search_cap; ++j) {
    if (kernel_dim(Fp.A, j, 1, caps, nullptr) == d) {
      s1 = j;
      break;
    }
  }
  require(s1 > 0, Errc::Unsupported, "splitting-degree search cap exceeded");
  // candidates on the ladder s1 * p^i
  bool affine = !F.is_zero(Fp.b);
  FqElem beta = F.zero();
  if (affine) beta = iterate_affine(Fp, n).second;
  long s = s1;
  for (int i = 0; i < 64; ++i) {
    FpMatrix tn;
    if (kernel_dim(Fp.A, s, n, caps, &tn) == d * n) {
      if (!affine) return s;
      auto ext = make_extension_cached(F, s);
      FqElem target = ext->embed(F.neg(beta));
      if (affine_solve(tn, coords_of(target)).consistent) return s;
    }
    require(s <= caps.search_cap, Errc::Unsupported,
            "splitting-degree search cap exceeded");
    s *= p;
  }
  fail(Errc::Internal, "candidate ladder exhausted");
}

// q-linearized additive fast route: s_A(n) = ord(f^n) after stripping
// X-factors from f.
long split_order(const DensePoly& f, long n, const Caps& caps) {
  const FieldCtx& F = *f.ctx;
  DensePoly g = f;
  while (!g.is_zero() && F.is_zero(g.c[0])) {
    g.c.erase(g.c.begin());
  }
  require(g.deg() >= 1, Errc::Internal, "order route on an exceptional input");
  BigInt ord = poly_order(dp_pow(g, n), caps.order_degree_cap);
  require(ord <= caps.search_cap * BigInt(1) << 20, Errc::Unsupported,
          "order exceeds representable search range");
  return ord.convert_to<long>();
}

}  // namespace

bool splits_in(const AdditivePoly& A, long j, const Caps& caps) {
  require(!A.is_zero(), Errc::ZeroInput, "splitting test on the zero polynomial");
  require(j >= 1, Errc::Internal, "splits_in: j < 1");
  auto [At, m] = separable_part(A);
  DensePoly g = dp_monic(to_dense(At, caps.dense_cap));
  if (g.deg() == 1) return true;
  return dp_eq(modexp_frobenius(g, j), dp_mod(dp_x(*A.ctx), g));
}

long split_degree(const AffinePoly& Fp, long n, Method method, const Caps& caps) {
  const FieldCtx& F = *Fp.A.ctx;
  require(n >= 1, Errc::Internal, "split_degree: n < 1");
  require(!Fp.A.is_zero(), Errc::ConstantInput,
          "splitting degree of a constant polynomial");
  if (is_exceptional(Fp).exceptional) return 1;
  if (method == Method::Auto) {
    DensePoly f;
    if (F.is_zero(Fp.b) && q_linearized(Fp.A, &f)) {
      return split_order(f, n, caps);
    }
    long d = separable_part(Fp.A).first.top();
    method = pow_big(BigInt(F.p()), d * n) <= caps.dense_cap ? Method::Modexp
                                                             : Method::Matrix;
  }
  return method == Method::Modexp ? split_modexp(Fp, n, caps)
                                  : split_matrix(Fp, n, caps);
}

long split_degree(const AdditivePoly& A, long n, Method method, const Caps& caps) {
  return split_degree(AffinePoly{A, A.ctx->zero()}, n, method, caps);
}

long find_s0(const AdditivePoly& A, const Caps& caps) {
  require(!is_exceptional(AffinePoly{A, A.ctx->zero()}).exceptional,
          Errc::ExceptionalForm, "s0 undefined for a single-term polynomial");
  long s1 = split_degree(A, 1, Method::Auto, caps);
  long d = separable_part(A).first.top();
  long cap = (A.ctx->degree() * s1) / std::max(1L, d) + 1;
  for (long j = 2; j <= cap + 1; ++j) {
    if (split_degree(A, j, Method::Auto, caps) != s1) return j - 1;
  }
  fail(Errc::Internal, "s0 exceeds its theoretical bound");
}

CompanionCertificate companion(const AdditivePoly& A, const Caps& caps) {
  const FieldCtx& F = *A.ctx;
  require(!is_exceptional(AffinePoly{A, F.zero()}).exceptional,
          Errc::ExceptionalForm, "no companion for a single-term polynomial");
  const long R = F.degree();
  CompanionCertificate cert;
  cert.M = split_degree(A, 1, Method::Auto, caps);
  cert.s0 = find_s0(A, caps);
  auto [At, m] = separable_part(A);
  cert.r = std::max(1L, (m * cert.s0 + R - 1) / R);
  AdditivePoly As0 = iterate(A, cert.s0);
  for (int attempt = 0;; ++attempt) {
    auto [C, Rm] = right_div(build_S(F, cert.M, cert.r), As0);
    require(Rm.is_zero(), Errc::Internal, "companion division left a remainder");
    if (C.bottom() >= R) {
      cert.A_star = std::move(C);
      break;
    }
    require(attempt == 0, Errc::Internal, "companion support bump did not settle");
    ++cert.r;
  }
  // A_star = W^q with W obtained by shifting indices down by R (q-th roots of
  // base-field coefficients are themselves)
  cert.Rq_witness = ap_from_coeffs(
      F, std::vector<FqElem>(cert.A_star.a.begin() + R, cert.A_star.a.end()));
  {
    // reconstruct: raise indices by R, coefficients to the q
    std::vector<FqElem> back(R, F.zero());
    for (const auto& c : cert.Rq_witness.a) back.push_back(F.frobenius(c, R));
    require(ap_eq(ap_from_coeffs(F, std::move(back)), cert.A_star), Errc::Internal,
            "q-power witness does not reconstruct the companion");
  }
  require(ap_eq(compose(cert.A_star, As0), build_S(F, cert.M, cert.r)),
          Errc::Internal, "companion identity fails");
  require(R * cert.M <= caps.matrix_dim_cap, Errc::Unsupported,
          "companion nilpotency test exceeds the matrix dimension cap");
  auto ext = make_extension_cached(F, cert.M);
  cert.nilpotent = is_nilpotent(matrix_of_map(cert.A_star, *ext));
  if (!cert.nilpotent) {
    cert.formula_valid = true;
    cert.c_A = Rational(BigInt(cert.M), BigInt(cert.s0));
  } else {
    // empirical bracket from the recursion s_{i+1} = s_A(s_i)
    cert.estimated = true;
    long t = cert.s0;
    Rational gamma;
    for (int i = 0; i < 5; ++i) {
      long s_next;
      try {
        s_next = split_degree(A, t, Method::Auto, caps);
      } catch (const Error& e) {
        if (e.code() == Errc::Unsupported) break;
        throw;
      }
      gamma = Rational(BigInt(s_next), BigInt(t));
      cert.gamma_seq_n.push_back(t);
      if (s_next == t) break;  // gamma has hit 1 and stays
      t = s_next;
    }
    require(!cert.gamma_seq_n.empty(), Errc::Unsupported,
            "no feasible scan point for the nilpotent-case bracket");
    cert.c_upper = gamma;
    cert.c_lower = gamma / Rational(BigInt(F.p()), BigInt(1));
  }
  return cert;
}

long closed_formula(const CompanionCertificate& cert, long n) {
  require(cert.formula_valid, Errc::FormulaNotValid,
          "closed formula unavailable in the nilpotent case");
  require(n >= 1, Errc::Internal, "closed_formula: n < 1");
  if (n <= cert.s0) return cert.M;
  const int64_t p = cert.A_star.ctx->p();
  BigInt s = cert.M * pow_big(BigInt(p), ceil_log(p, BigInt(n), BigInt(cert.s0)));
  return s.convert_to<long>();
}

BigInt LinearizedFormula::predict(long n) const {
  const FieldCtx& F = *f.ctx;
  return E * pow_big(BigInt(F.p()), ceil_log(F.p(), BigInt(n) * e, BigInt(1)));
}

LinearizedFormula linearized_formula(const DensePoly& fin, const Caps& caps) {
  const FieldCtx& F = *fin.ctx;
  require(fin.deg() >= 1, Errc::ConstantInput, "constant has no linearized associate data");
  LinearizedFormula out;
  out.f = fin;
  while (!out.f.is_zero() && F.is_zero(out.f.c[0])) {
    out.f.c.erase(out.f.c.begin());
    ++out.stripped;
  }
  require(out.f.deg() >= 1, Errc::ExceptionalForm,
          "input is a power of X: the associate is a single term");
  SquarefreePart sq = squarefree_decompose(out.f);
  out.f0 = sq.f0;
  out.e = sq.e;
  out.E = poly_order(out.f0, caps.order_degree_cap);
  out.c_A = out.E * out.e;
  return out;
}

SplittingReport ratio_scan(const AffinePoly& Fp, long n_max, Method method,
                           const Caps& caps) {
  const FieldCtx& F = *Fp.A.ctx;
  require(!is_exceptional(Fp).exceptional, Errc::ExceptionalForm,
          "single-term input: every splitting degree is 1");
  const int64_t p = F.p();
  SplittingReport rep;
  rep.poly = Fp;
  rep.s_base = split_degree(Fp.A, 1, method, caps);
  const bool additive = F.is_zero(Fp.b);
  for (long n = 1; n <= n_max; ++n) {
    SplitEntry e;
    e.n = n;
    e.s = split_degree(Fp, n, method, caps);
    e.ratio = Rational(BigInt(e.s), BigInt(n));
    long s = e.s;
    while (s > rep.s_base && s % p == 0) {
      s /= p;
      ++e.ladder_i;
    }
    require(s == rep.s_base, Errc::Internal, "splitting degree off the ladder");
    switch (method) {
      case Method::Modexp: e.method = "modexp"; break;
      case Method::Matrix: e.method = "matrix"; break;
      default: e.method = "auto"; break;
    }
    rep.entries.push_back(std::move(e));
  }
  for (const auto& e : rep.entries) {
    if (rep.min_ratio == Rational() || e.ratio < rep.min_ratio) rep.min_ratio = e.ratio;
    if (e.ratio > rep.max_ratio) rep.max_ratio = e.ratio;
  }
  if (additive) {
    for (const auto& e : rep.entries) {
      // divisibility monotonicity and the doubling alternative
      for (const auto& f : rep.entries) {
        if (f.n <= e.n) {
          require(e.s % f.s == 0, Errc::Internal, "divisibility monotonicity fails");
        }
      }
      if (e.n * p <= n_max) {
        long snp = rep.entries[e.n * p - 1].s;
        require(snp == e.s || snp == p * e.s, Errc::Internal,
                "s(np) leaves {s(n), p*s(n)}");
      }
    }
  }
  return rep;
}

}  // namespace addpoly
