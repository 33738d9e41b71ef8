#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "addpoly/numeric.hpp"

namespace addpoly {

/// Element of F_q = F_p[x]/(g), as coordinates in the power basis of the
/// generator (length R, entries in [0, p)).
struct FqElem {
  std::vector<int64_t> v;
  auto operator<=>(const FqElem&) const = default;
};

/// A finite field F_q, q = p^R, with a fixed monic irreducible modulus over F_p.
/// Immutable after construction; all operations are pure.
class FieldCtx {
 public:
  /// Chooses the lexicographically least monic irreducible modulus
  /// (coefficients compared low-degree-first).
  FieldCtx(int64_t p, int r);
  FieldCtx(int64_t p, int r, std::vector<int64_t> modulus);

  int64_t p() const { return p_; }
  int degree() const { return r_; }
  const std::vector<int64_t>& modulus() const { return mod_; }
  const BigInt& q() const { return q_; }
  bool same_field(const FieldCtx& o) const { return p_ == o.p_ && mod_ == o.mod_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem gen() const;
  FqElem from_int(int64_t n) const;
  /// Coefficients low-to-high; shorter vectors are zero-padded, entries reduced mod p.
  FqElem from_coeffs(std::vector<int64_t> c) const;

  bool is_zero(const FqElem& a) const;
  bool is_one(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem div(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, BigInt e) const;

  /// a^(p^k); k is reduced mod R since a^q = a.
  FqElem frobenius(const FqElem& a, long k) const;
  /// The unique b with b^p = a (equals a^(p^(R-1))).
  FqElem pth_root(const FqElem& a) const;

  /// a * x (generator) -- cheap shift-and-reduce.
  FqElem mul_by_gen(const FqElem& a) const;

  /// All q elements in lexicographic coordinate order. Throws Unsupported if q > cap.
  std::vector<FqElem> all_elements(long cap = 1 << 16) const;

 private:
  int64_t p_;
  int r_;
  std::vector<int64_t> mod_;
  BigInt q_;
};

/// F_{q^s} realized as a degree R*s extension of F_p, with an embedding of the
/// base field determined by the lexicographically least root of the base
/// modulus in the big field.
struct ExtCtx {
  FieldCtx base;
  long s;
  FieldCtx big;
  FqElem embed_gen;

  FqElem embed(const FqElem& a) const;
};

ExtCtx make_extension(const FieldCtx& base, long s);

/// Process-wide cache; extensions are immutable and shared freely.
std::shared_ptr<const ExtCtx> make_extension_cached(const FieldCtx& base, long s);

/// Irreducibility of a monic polynomial over F_p (coefficients low-to-high).
bool fp_poly_irreducible(int64_t p, const std::vector<int64_t>& f);

}  // namespace addpoly
