#pragma once

#include "addpoly/poly.hpp"

namespace addpoly {

/// Additive polynomial sum a_i X^(p^i); acoeffs indexed by i, no trailing
/// zeros. The zero map has an empty coefficient list.
struct AdditivePoly {
  const FieldCtx* ctx = nullptr;
  std::vector<FqElem> a;

  long top() const { return static_cast<long>(a.size()) - 1; }
  bool is_zero() const { return a.empty(); }
  /// Least index with nonzero coefficient (the inseparability exponent).
  long bottom() const;
};

/// A(X) + b.
struct AffinePoly {
  AdditivePoly A;
  FqElem b;
};

AdditivePoly ap_zero(const FieldCtx& F);
AdditivePoly ap_identity(const FieldCtx& F);  // X
AdditivePoly ap_from_coeffs(const FieldCtx& F, std::vector<FqElem> acoeffs);
/// Sparse constructor: (index, coefficient) pairs.
AdditivePoly ap_from_sparse(const FieldCtx& F,
                            const std::vector<std::pair<long, FqElem>>& terms);
bool ap_eq(const AdditivePoly& x, const AdditivePoly& y);

AdditivePoly from_dense(const DensePoly& f);  // throws NotAdditive
/// Dense expansion of degree p^top; throws Unsupported beyond dense_cap.
DensePoly to_dense(const AdditivePoly& A, long dense_cap = 1L << 14);
DensePoly to_dense_affine(const AffinePoly& B, long dense_cap = 1L << 14);
AffinePoly affine_from_dense(const DensePoly& f);

/// L_f: sum f_i X^(q^i) for f = sum f_i Y^i (acoeff index R*i).
AdditivePoly lin_associate(const DensePoly& f);
/// True iff acoeffs are supported on multiples of R; then fills f with L_f = A.
bool q_linearized(const AdditivePoly& A, DensePoly* f_out = nullptr);

AdditivePoly ap_add(const AdditivePoly& x, const AdditivePoly& y);
AdditivePoly ap_sub(const AdditivePoly& x, const AdditivePoly& y);
AdditivePoly compose(const AdditivePoly& A, const AdditivePoly& B);  // A(B(X))
AdditivePoly iterate(const AdditivePoly& A, long n);                 // n >= 0
/// (A^(n), beta_n) with beta_1 = b, beta_(l+1) = A(beta_l) + b.
std::pair<AdditivePoly, FqElem> iterate_affine(const AffinePoly& B, long n);

/// Twisted right division: B = C o A + Rm with top(Rm) < top(A).
/// Rm = 0 iff A divides B as ordinary polynomials.
std::pair<AdditivePoly, AdditivePoly> right_div(const AdditivePoly& B,
                                                const AdditivePoly& A);

/// A = Atilde^(p^m) with Atilde separable (a_0 != 0).
std::pair<AdditivePoly, long> separable_part(const AdditivePoly& A);

struct ExceptionalForm {
  bool exceptional = false;
  bool additive_single_term = false;  // no shift: a X^(p^h) exactly
  long h = 0;
  FqElem a;
  FqElem b;
};
ExceptionalForm is_exceptional(const AffinePoly& F);

/// X^(q^(s+r)) - X^(q^r).
AdditivePoly build_S(const FieldCtx& F, long s, long r);

FqElem ap_eval(const AdditivePoly& A, const FqElem& x);
FqElem affine_eval(const AffinePoly& B, const FqElem& x);
/// Evaluation at an element of the extension: embedded coefficients plus
/// iterated Frobenius of the argument (no dense expansion).
FqElem ap_eval_ext(const AdditivePoly& A, const ExtCtx& E, const FqElem& x);
FqElem affine_eval_ext(const AffinePoly& B, const ExtCtx& E, const FqElem& x);

}  // namespace addpoly
