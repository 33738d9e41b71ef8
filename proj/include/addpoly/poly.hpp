#pragma once

#include <map>
#include <utility>
#include <vector>

#include "addpoly/field.hpp"

namespace addpoly {

constexpr uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

/// Dense univariate polynomial over F_q, coefficients low-to-high with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
struct DensePoly {
  const FieldCtx* ctx = nullptr;
  std::vector<FqElem> c;

  long deg() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

DensePoly dp_zero(const FieldCtx& F);
DensePoly dp_const(const FieldCtx& F, const FqElem& a);
DensePoly dp_x(const FieldCtx& F);
DensePoly dp_from_coeffs(const FieldCtx& F, std::vector<FqElem> coeffs);
/// Convenience: coefficients given as integers.
DensePoly dp_from_ints(const FieldCtx& F, const std::vector<int64_t>& coeffs);

bool dp_eq(const DensePoly& a, const DensePoly& b);
bool dp_less(const DensePoly& a, const DensePoly& b);  // by degree, then coeff lex

DensePoly dp_add(const DensePoly& a, const DensePoly& b);
DensePoly dp_sub(const DensePoly& a, const DensePoly& b);
DensePoly dp_neg(const DensePoly& a);
DensePoly dp_mul(const DensePoly& a, const DensePoly& b);
DensePoly dp_scale(const DensePoly& a, const FqElem& s);
std::pair<DensePoly, DensePoly> dp_divmod(const DensePoly& a, const DensePoly& b);
DensePoly dp_mod(const DensePoly& a, const DensePoly& b);
DensePoly dp_gcd(const DensePoly& a, const DensePoly& b);  // monic
DensePoly dp_monic(const DensePoly& a);
DensePoly dp_pow(const DensePoly& a, long n);
DensePoly dp_powmod(const DensePoly& base, BigInt e, const DensePoly& mod);
DensePoly dp_derivative(const DensePoly& a);
FqElem dp_eval(const DensePoly& a, const FqElem& x);
DensePoly dp_compose(const DensePoly& f, const DensePoly& g);  // f(g(X))

/// X^(q^s) mod f, by R*s Frobenius p-power steps (never a floating exponent).
DensePoly modexp_frobenius(const DensePoly& f, long s);

/// Incremental X^(q^j) mod f for j = 1, 2, ...
class FrobeniusLadder {
 public:
  explicit FrobeniusLadder(DensePoly f);
  /// Advance from X^(q^j) to X^(q^(j+1)) and return the new power.
  const DensePoly& advance();
  const DensePoly& current() const { return g_; }
  long j() const { return j_; }

 private:
  DensePoly f_;
  DensePoly g_;
  long j_ = 0;
};

struct SquarefreePart {
  DensePoly f0;  ///< product of the distinct monic irreducible divisors
  long e = 1;    ///< maximal multiplicity (least e with f | f0^e)
  std::vector<std::pair<DensePoly, long>> profile;  ///< pairwise-coprime squarefree parts
};
SquarefreePart squarefree_decompose(const DensePoly& f);

struct Factorization {
  FqElem unit;
  std::vector<std::pair<DensePoly, long>> factors;  ///< monic irreducible, multiplicity
};
Factorization factorize(const DensePoly& f, uint64_t seed = kDefaultSeed);

/// Number of monic irreducible factors per degree of a squarefree monic
/// polynomial, by distinct-degree splitting alone (no equal-degree stage).
std::map<long, long> ddf_counts(const DensePoly& f);

/// Least i >= 1 with g | X^i - 1. Requires g(0) != 0 and g nonconstant.
/// degree_cap bounds the degree of any irreducible factor (the q^d - 1
/// factoring step); exceeding it raises Unsupported.
BigInt poly_order(const DensePoly& g, int degree_cap = 64);

}  // namespace addpoly
