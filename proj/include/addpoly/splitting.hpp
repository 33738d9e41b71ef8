#pragma once

#include <string>

#include "addpoly/linalg.hpp"

namespace addpoly {

/// Resource limits for the search/expansion routines. All overrunable limits
/// raise Unsupported rather than degrade to approximation.
struct Caps {
  long search_cap = 10000;      // splitting-degree linear search
  long dense_cap = 1L << 14;    // dense expansion degree
  long orbit_cap = 1L << 12;    // exhaustive orbit enumeration (field size)
  int order_degree_cap = 64;    // irreducible degree in polynomial-order computation
  long matrix_dim_cap = 512;    // F_p matrix dimension R*s
};

enum class Method { Auto, Modexp, Matrix };

/// The separable polynomial whose roots are exactly the distinct roots of
/// F^(n): dense separable part of the iterate, shifted for the affine case.
DensePoly distinct_root_poly(const AffinePoly& F, long n, const Caps& caps = {});

/// True iff all roots of A lie in F_{q^j} (tested on the separable part via
/// X^(q^j) mod A-tilde).
bool splits_in(const AdditivePoly& A, long j, const Caps& caps = {});

/// s_F(n): least s with F^(n) split over F_{q^s}.
/// Modexp: dense separable part of the iterate plus a Frobenius-ladder search.
/// Matrix: kernel dimensions of powers of the F_p-matrix of the map, on the
/// candidate ladder s(1)*p^i. Auto picks modexp for small dense degree, the
/// polynomial-order route for q-linearized additive input, matrix otherwise.
long split_degree(const AffinePoly& F, long n, Method method = Method::Auto,
                  const Caps& caps = {});
long split_degree(const AdditivePoly& A, long n, Method method = Method::Auto,
                  const Caps& caps = {});

/// Largest j with s_A(j) = s_A(1).
long find_s0(const AdditivePoly& A, const Caps& caps = {});

struct CompanionCertificate {
  long M = 0;   // s_A(1)
  long s0 = 0;  // largest j with s_A(j) = s_A(1)
  long r = 1;
  AdditivePoly A_star;      // A_star(A^(s0)(X)) = X^(q^(M+r)) - X^(q^r)
  AdditivePoly Rq_witness;  // the W with A_star = W^q
  bool nilpotent = false;
  bool formula_valid = false;
  Rational c_A;  // exact M/s0 when formula_valid
  bool estimated = false;
  Rational c_lower;  // empirical bracket in the nilpotent case
  Rational c_upper;
  std::vector<long> gamma_seq_n;  // the scanned arguments s_i
};
CompanionCertificate companion(const AdditivePoly& A, const Caps& caps = {});

/// s_A(n) = M * p^(ceil log_p(n/s0)); n <= s0 gives M. Integer-exact ceiling.
long closed_formula(const CompanionCertificate& cert, long n);

struct LinearizedFormula {
  DensePoly f;   // after stripping X-factors
  DensePoly f0;  // product of distinct irreducible factors
  long e = 1;    // maximal multiplicity
  BigInt E;      // order of f0
  BigInt c_A;    // E*e
  long stripped = 0;

  /// Predicted s(n) = E * p^(ceil log_p(n*e)).
  BigInt predict(long n) const;
};
LinearizedFormula linearized_formula(const DensePoly& f, const Caps& caps = {});

struct SplitEntry {
  long n = 0;
  long s = 0;
  Rational ratio;   // s/n
  long ladder_i = 0;  // s = s_base * p^i
  std::string method;
};

struct SplittingReport {
  AffinePoly poly;
  long s_base = 0;  // s(1) of the additive part
  std::vector<SplitEntry> entries;
  Rational min_ratio;
  Rational max_ratio;
};
SplittingReport ratio_scan(const AffinePoly& F, long n_max,
                           Method method = Method::Auto, const Caps& caps = {});

}  // namespace addpoly
