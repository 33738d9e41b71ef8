#include "addpoly/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace addpoly {

namespace {

long nullity(const FpMatrix& m) { return m.cols - rank_kernel(m).rank; }

// All F_p-linear combinations of the given coordinate vectors.
std::set<std::vector<int64_t>> span_of(const std::vector<std::vector<int64_t>>& basis,
                                       int64_t p, long dim) {
  std::set<std::vector<int64_t>> out;
  std::vector<int64_t> sel(basis.size(), 0);
  while (true) {
    std::vector<int64_t> v(dim, 0);
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!sel[k]) continue;
      for (long j = 0; j < dim; ++j) v[j] = (v[j] + sel[k] * basis[k][j]) % p;
    }
    out.insert(std::move(v));
    size_t i = 0;
    while (i < sel.size() && ++sel[i] == p) sel[i++] = 0;
    if (i == sel.size()) break;
  }
  return out;
}

}  // namespace

PeriodicEntry periodic_count(const AdditivePoly& A, long n, const Caps& caps) {
  const FieldCtx& F = *A.ctx;
  require(n >= 1, Errc::Internal, "periodic_count: n < 1");
  require(F.degree() * n <= caps.matrix_dim_cap, Errc::Unsupported,
          "matrix dimension cap exceeded");
  auto ext = make_extension_cached(F, n);
  FpMatrix t = matrix_of_map(A, *ext);
  FittingPair fit = fitting(t);
  PeriodicEntry e;
  e.n = n;
  e.delta = fit.delta0;
  BigInt qn = pow_big(F.q(), n);
  BigInt pd = pow_big(BigInt(F.p()), fit.delta0);
  e.pi = qn / pd;
  require(e.pi * pd == qn, Errc::Internal, "periodic count identity fails");
  e.proportion = Rational(e.pi, qn);
  if (qn <= caps.orbit_cap) {
    // eventual image of the map is exactly the set of periodic points
    std::set<std::vector<int64_t>> cur;
    for (const auto& x : ext->big.all_elements(caps.orbit_cap)) cur.insert(x.v);
    while (true) {
      std::set<std::vector<int64_t>> next;
      for (const auto& v : cur) {
        next.insert(ap_eval_ext(A, *ext, ext->big.from_coeffs(v)).v);
      }
      if (next.size() == cur.size()) break;
      cur = std::move(next);
    }
    require(BigInt(cur.size()) == e.pi, Errc::Internal,
            "orbit enumeration disagrees with the Fitting count");
    auto w1 = span_of(fit.W1, F.p(), ext->big.degree());
    require(w1 == cur, Errc::Internal,
            "stable image span is not the periodic-point set");
    for (const auto& v : fit.W0) {
      FqElem x = ext->big.from_coeffs(v);
      for (long k = 0; k < fit.delta0; ++k) x = ap_eval_ext(A, *ext, x);
      require(ext->big.is_zero(x), Errc::Internal,
              "stable kernel vector does not iterate to zero");
    }
    e.verified = true;
  }
  return e;
}

PeriodicReport proportion_scan(const AdditivePoly& A, long n_max, const Caps& caps) {
  const FieldCtx& F = *A.ctx;
  const int64_t p = F.p();
  PeriodicReport rep;
  rep.poly = A;
  bool exceptional =
      A.is_zero() || is_exceptional(AffinePoly{A, F.zero()}).exceptional;
  long d = 0;
  if (!exceptional) {
    rep.M = split_degree(A, 1, Method::Auto, caps);
    d = separable_part(A).first.top();
    // kernel-chain depth over the splitting field of A
    auto ext = make_extension_cached(F, rep.M);
    FpMatrix t = matrix_of_map(A, *ext);
    FpMatrix tk = mat_identity(t.p, t.rows);
    long prev = 0;
    for (long k = 1;; ++k) {
      tk = mat_mul(tk, t);
      long nl = nullity(tk);
      if (nl == prev) {
        rep.N_depth = k - 1;
        break;
      }
      prev = nl;
    }
    rep.lower_bound =
        Rational(BigInt(1), pow_big(BigInt(p), d * rep.N_depth));
  }
  for (long n = 1; n <= n_max; ++n) {
    PeriodicEntry e = periodic_count(A, n, caps);
    if (!exceptional && n % rep.M == 0) {
      long t = n / rep.M;
      if (t % p != 0) e.flag_coprime = true;
      while (t % p == 0) t /= p;
      if (t == 1) e.flag_ppower = true;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

FactorStatsReport stats_kernel(const AffinePoly& B, long n, const Caps& caps) {
  const FieldCtx& F = *B.A.ctx;
  const int64_t p = F.p();
  FactorStatsReport rep;
  rep.n = n;
  rep.method = "kernel";
  rep.s = split_degree(B, n, Method::Auto, caps);
  const long d = separable_part(B.A).first.top();
  BigInt total = pow_big(BigInt(p), d * n);
  FqElem beta = F.zero();
  const bool affine = !F.is_zero(B.b);
  if (affine) beta = iterate_affine(B, n).second;
  std::map<long, BigInt> in_field;  // e -> roots of B^(n) in F_{q^e}
  for (long e : divisors_of(rep.s)) {
    require(F.degree() * e <= caps.matrix_dim_cap, Errc::Unsupported,
            "matrix dimension cap exceeded");
    auto ext = make_extension_cached(F, e);
    FpMatrix tn = mat_pow(matrix_of_map(B.A, *ext), n);
    if (affine) {
      AffineSolve sol = affine_solve(tn, coords_of(ext->embed(F.neg(beta))));
      in_field[e] = sol.count;
    } else {
      in_field[e] = pow_big(BigInt(p), tn.cols - rank_kernel(tn).rank);
    }
  }
  BigInt sum = 0;
  for (long dd : divisors_of(rep.s)) {
    BigInt cnt = 0;
    for (long e : divisors_of(dd)) cnt += mobius(dd / e) * in_field[e];
    require(cnt >= 0, Errc::Internal, "negative count after inversion");
    require(cnt % dd == 0, Errc::Internal, "degree does not divide its root count");
    sum += cnt;
    if (cnt > 0) {
      rep.exact_counts[dd] = cnt;
      rep.factor_counts[dd] = cnt / dd;
      rep.N += cnt / dd;
    }
  }
  require(sum == total, Errc::Internal, "root counts do not sum to the root total");
  rep.rho = Rational(total, rep.N);
  rep.rho_over_n = rep.rho / Rational(BigInt(n), BigInt(1));
  return rep;
}

FactorStatsReport stats_oracle(const AffinePoly& B, long n, const Caps& caps) {
  const FieldCtx& F = *B.A.ctx;
  const long d = separable_part(B.A).first.top();
  require(pow_big(BigInt(F.p()), d * n) <= caps.dense_cap, Errc::OracleTooLarge,
          "dense factorization oracle exceeds the degree cap");
  FactorStatsReport rep;
  rep.n = n;
  rep.method = "oracle";
  DensePoly g = distinct_root_poly(B, n, caps);
  long lcm_deg = 1;
  for (const auto& [deg, cnt] : ddf_counts(g)) {
    rep.factor_counts[deg] = cnt;
    rep.exact_counts[deg] = BigInt(deg) * cnt;
    rep.N += cnt;
    lcm_deg = std::lcm(lcm_deg, deg);
  }
  rep.s = lcm_deg;
  rep.rho = Rational(BigInt(g.deg()), rep.N);
  rep.rho_over_n = rep.rho / Rational(BigInt(n), BigInt(1));
  return rep;
}

}  // namespace

FactorStatsReport factor_stats(const AffinePoly& B, long n, StatsMethod method,
                               const Caps& caps) {
  require(n >= 1, Errc::Internal, "factor_stats: n < 1");
  require(!B.A.is_zero(), Errc::ConstantInput, "factor statistics of a constant");
  require(!is_exceptional(B).exceptional, Errc::ExceptionalForm,
          "single-term input: one irreducible factor pattern, statistics trivial");
  switch (method) {
    case StatsMethod::Kernel:
      return stats_kernel(B, n, caps);
    case StatsMethod::Oracle:
      return stats_oracle(B, n, caps);
    case StatsMethod::Both: {
      FactorStatsReport k = stats_kernel(B, n, caps);
      FactorStatsReport o = stats_oracle(B, n, caps);
      require(k.s == o.s && k.N == o.N && k.rho == o.rho &&
                  k.exact_counts == o.exact_counts &&
                  k.factor_counts == o.factor_counts,
              Errc::Internal, "kernel and oracle statistics disagree");
      k.method = "both";
      return k;
    }
  }
  fail(Errc::Internal, "unreachable");
}

std::vector<FactorStatsReport> rho_scan(const AffinePoly& B, long n_max,
                                        StatsMethod method, const Caps& caps) {
  std::vector<FactorStatsReport> out;
  for (long n = 1; n <= n_max; ++n) out.push_back(factor_stats(B, n, method, caps));
  return out;
}

}  // namespace addpoly
