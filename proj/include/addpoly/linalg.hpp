#pragma once

#include "addpoly/additive.hpp"

namespace addpoly {

/// Dense matrix over F_p, row-major. Multiplication uses a word-packed XOR
/// path when p = 2.
struct FpMatrix {
  int64_t p = 2;
  long rows = 0;
  long cols = 0;
  std::vector<int64_t> e;  // rows*cols entries in [0, p)

  int64_t at(long i, long j) const { return e[i * cols + j]; }
  int64_t& at(long i, long j) { return e[i * cols + j]; }
};

FpMatrix mat_zero(int64_t p, long rows, long cols);
FpMatrix mat_identity(int64_t p, long n);
bool mat_eq(const FpMatrix& a, const FpMatrix& b);
bool mat_is_zero(const FpMatrix& a);
FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_pow(const FpMatrix& m, long k);
std::vector<int64_t> mat_apply(const FpMatrix& m, const std::vector<int64_t>& v);

struct RankKernel {
  long rank = 0;
  std::vector<std::vector<int64_t>> kernel;  // basis vectors, length cols
};
RankKernel rank_kernel(const FpMatrix& m);

bool is_nilpotent(const FpMatrix& m);

struct FittingPair {
  std::vector<std::vector<int64_t>> W0;  // stable kernel basis
  std::vector<std::vector<int64_t>> W1;  // stable image basis
  long delta0 = 0;
  long delta1 = 0;
};
/// W0 = ker m^n, W1 = im m^n (n = dimension); checks the direct-sum and
/// invariance properties before returning.
FittingPair fitting(const FpMatrix& m);

struct AffineSolve {
  bool consistent = false;
  BigInt count = 0;                // p^(dim ker) when consistent
  std::vector<int64_t> witness;    // one solution when consistent
};
AffineSolve affine_solve(const FpMatrix& m, const std::vector<int64_t>& v);

/// Matrix of z -> A(z) on F_{q^s} as an F_p-linear map (dimension R*s),
/// assembled as sum of multiplication-by-coefficient matrices times powers of
/// the Frobenius matrix.
FpMatrix matrix_of_map(const AdditivePoly& A, const ExtCtx& ext);
/// Coordinates of an embedded field element, and back.
std::vector<int64_t> coords_of(const FqElem& x);
FqElem elem_of(const FieldCtx& F, const std::vector<int64_t>& v);

}  // namespace addpoly
