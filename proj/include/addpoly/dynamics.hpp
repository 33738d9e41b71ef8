#pragma once

#include "addpoly/splitting.hpp"

namespace addpoly {

struct PeriodicEntry {
  long n = 0;
  long delta = 0;         // log_p of the stable-kernel size
  BigInt pi;              // number of periodic points = q^n / p^delta
  Rational proportion;    // pi / q^n
  bool verified = false;  // exhaustive orbit check ran
  bool flag_coprime = false;  // n = M*t with gcd(t, p) = 1
  bool flag_ppower = false;   // n = M*p^i
};

struct PeriodicReport {
  AdditivePoly poly;
  long M = 0;       // s_A(1), 0 when the input is a single term or zero
  long N_depth = 0; // kernel-chain stabilization depth over F_{q^M}
  Rational lower_bound;  // p^(-d*N_depth), the designed lower bound on the
                         // coprime subsequence
  std::vector<PeriodicEntry> entries;
};

PeriodicEntry periodic_count(const AdditivePoly& A, long n, const Caps& caps = {});
PeriodicReport proportion_scan(const AdditivePoly& A, long n_max,
                               const Caps& caps = {});

enum class StatsMethod { Kernel, Oracle, Both };

struct FactorStatsReport {
  long n = 0;
  long s = 0;                        // splitting degree of the iterate
  std::map<long, BigInt> exact_counts;  // degree -> distinct roots of that degree
  std::map<long, BigInt> factor_counts; // degree -> irreducible factors
  BigInt N;       // distinct irreducible factors of F^(n)
  Rational rho;   // average factor degree = p^(dn) / N
  Rational rho_over_n;
  std::string method;
};

FactorStatsReport factor_stats(const AffinePoly& B, long n,
                               StatsMethod method = StatsMethod::Kernel,
                               const Caps& caps = {});
std::vector<FactorStatsReport> rho_scan(const AffinePoly& B, long n_max,
                                        StatsMethod method = StatsMethod::Kernel,
                                        const Caps& caps = {});

}  // namespace addpoly
