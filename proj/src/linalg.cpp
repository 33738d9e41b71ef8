#include "addpoly/linalg.hpp"

#include <algorithm>

namespace addpoly {

namespace {

int64_t invm(int64_t a, int64_t p) {
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  require(r == 1, Errc::DivisionByZero, "inverse of zero residue");
  return ((t % p) + p) % p;
}

void check_same(const FpMatrix& a, const FpMatrix& b) {
  require(a.p == b.p, Errc::DimensionMismatch, "matrices over different primes");
}

}  // namespace

FpMatrix mat_zero(int64_t p, long rows, long cols) {
  return FpMatrix{p, rows, cols, std::vector<int64_t>(rows * cols, 0)};
}

FpMatrix mat_identity(int64_t p, long n) {
  FpMatrix m = mat_zero(p, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool mat_eq(const FpMatrix& a, const FpMatrix& b) {
  return a.p == b.p && a.rows == b.rows && a.cols == b.cols && a.e == b.e;
}

bool mat_is_zero(const FpMatrix& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](int64_t x) { return x == 0; });
}

FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  require(a.rows == b.rows && a.cols == b.cols, Errc::DimensionMismatch, "shape mismatch");
  FpMatrix out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = (out.e[i] + b.e[i]) % a.p;
  return out;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  require(a.cols == b.rows, Errc::DimensionMismatch, "inner dimension mismatch");
  FpMatrix out = mat_zero(a.p, a.rows, b.cols);
  if (a.p == 2) {
    // pack rows of b, then out_row_i = xor of b rows selected by a's row i
    const long words = (b.cols + 63) / 64;
    std::vector<uint64_t> bp(b.rows * words, 0);
    for (long k = 0; k < b.rows; ++k) {
      for (long j = 0; j < b.cols; ++j) {
        if (b.at(k, j)) bp[k * words + j / 64] |= uint64_t(1) << (j % 64);
      }
    }
    std::vector<uint64_t> row(words);
    for (long i = 0; i < a.rows; ++i) {
      std::fill(row.begin(), row.end(), 0);
      for (long k = 0; k < a.cols; ++k) {
        if (a.at(i, k)) {
          const uint64_t* src = &bp[k * words];
          for (long w = 0; w < words; ++w) row[w] ^= src[w];
        }
      }
      for (long j = 0; j < b.cols; ++j) {
        out.at(i, j) = (row[j / 64] >> (j % 64)) & 1;
      }
    }
    return out;
  }
  for (long i = 0; i < a.rows; ++i) {
    for (long k = 0; k < a.cols; ++k) {
      int64_t c = a.at(i, k);
      if (!c) continue;
      for (long j = 0; j < b.cols; ++j) {
        out.at(i, j) = (out.at(i, j) + c * b.at(k, j)) % a.p;
      }
    }
  }
  return out;
}

FpMatrix mat_pow(const FpMatrix& m, long k) {
  require(m.rows == m.cols, Errc::NonSquare, "power of a non-square matrix");
  require(k >= 0, Errc::Internal, "mat_pow: negative exponent");
  FpMatrix r = mat_identity(m.p, m.rows);
  FpMatrix b = m;
  while (k) {
    if (k & 1) r = mat_mul(r, b);
    b = mat_mul(b, b);
    k >>= 1;
  }
  return r;
}

std::vector<int64_t> mat_apply(const FpMatrix& m, const std::vector<int64_t>& v) {
  require(static_cast<long>(v.size()) == m.cols, Errc::DimensionMismatch,
          "vector length mismatch");
  std::vector<int64_t> out(m.rows, 0);
  for (long i = 0; i < m.rows; ++i) {
    int64_t s = 0;
    for (long j = 0; j < m.cols; ++j) s = (s + m.at(i, j) * v[j]) % m.p;
    out[i] = s;
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<long> rref(FpMatrix& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long pr = -1;
    for (long i = row; i < m.rows; ++i) {
      if (m.at(i, col)) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) {
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    }
    int64_t il = invm(m.at(row, col), m.p);
    if (il != 1) {
      for (long j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * il % m.p;
    }
    for (long i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      int64_t c = m.at(i, col);
      if (!c) continue;
      for (long j = 0; j < m.cols; ++j) {
        m.at(i, j) = ((m.at(i, j) - c * m.at(row, j)) % m.p + m.p) % m.p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RankKernel rank_kernel(const FpMatrix& m) {
  FpMatrix r = m;
  std::vector<long> pivots = rref(r);
  RankKernel out;
  out.rank = static_cast<long>(pivots.size());
  std::vector<long> pivot_of_col(m.cols, -1);
  for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = static_cast<long>(k);
  for (long col = 0; col < m.cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<int64_t> v(m.cols, 0);
    v[col] = 1;
    for (long c = 0; c < m.cols; ++c) {
      long pr = pivot_of_col[c];
      if (pr >= 0) v[c] = ((-r.at(pr, col)) % m.p + m.p) % m.p;
    }
    out.kernel.push_back(std::move(v));
  }
  require(out.rank + static_cast<long>(out.kernel.size()) == m.cols, Errc::Internal,
          "rank-nullity violated");
  return out;
}

bool is_nilpotent(const FpMatrix& m) {
  require(m.rows == m.cols, Errc::NonSquare, "nilpotency of a non-square matrix");
  return mat_is_zero(mat_pow(m, m.rows));
}

FittingPair fitting(const FpMatrix& m) {
  require(m.rows == m.cols, Errc::NonSquare, "Fitting decomposition of a non-square matrix");
  const long n = m.rows;
  FpMatrix k = mat_pow(m, n);
  FittingPair out;
  out.W0 = rank_kernel(k).kernel;
  // image basis: pivot columns of the rref of k^T (i.e. row space of k^T = column space of k)
  {
    FpMatrix kt = mat_zero(m.p, n, n);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) kt.at(i, j) = k.at(j, i);
    }
    FpMatrix r = kt;
    std::vector<long> pivots = rref(r);
    for (size_t t = 0; t < pivots.size(); ++t) {
      std::vector<int64_t> v(n);
      for (long j = 0; j < n; ++j) v[j] = r.at(static_cast<long>(t), j);
      out.W1.push_back(std::move(v));
    }
  }
  out.delta0 = static_cast<long>(out.W0.size());
  out.delta1 = static_cast<long>(out.W1.size());
  require(out.delta0 + out.delta1 == n, Errc::Internal, "Fitting dimensions do not add up");
  // direct sum: stacked basis has full rank
  {
    FpMatrix s = mat_zero(m.p, n, n);
    long row = 0;
    for (const auto& v : out.W0) {
      for (long j = 0; j < n; ++j) s.at(row, j) = v[j];
      ++row;
    }
    for (const auto& v : out.W1) {
      for (long j = 0; j < n; ++j) s.at(row, j) = v[j];
      ++row;
    }
    require(rank_kernel(s).rank == n, Errc::Internal, "Fitting subspaces intersect");
  }
  // W0 is killed by m^n; m restricted to W1 is a bijection of W1
  for (const auto& v : out.W0) {
    auto img = mat_apply(k, v);
    require(std::all_of(img.begin(), img.end(), [](int64_t x) { return x == 0; }),
            Errc::Internal, "stable kernel vector not annihilated");
  }
  {
    FpMatrix s = mat_zero(m.p, out.delta1 + 1, n);
    for (long t = 0; t < out.delta1; ++t) {
      for (long j = 0; j < n; ++j) s.at(t, j) = out.W1[t][j];
    }
    for (const auto& v : out.W1) {
      auto img = mat_apply(m, v);
      FpMatrix s2 = s;
      for (long j = 0; j < n; ++j) s2.at(out.delta1, j) = img[j];
      require(rank_kernel(s2).rank == out.delta1, Errc::Internal,
              "stable image not invariant");
    }
    // injectivity on W1: images of the basis stay independent
    FpMatrix im = mat_zero(m.p, out.delta1, n);
    for (long t = 0; t < out.delta1; ++t) {
      auto img = mat_apply(m, out.W1[t]);
      for (long j = 0; j < n; ++j) im.at(t, j) = img[j];
    }
    require(rank_kernel(im).rank == out.delta1, Errc::Internal,
            "map not invertible on the stable image");
  }
  return out;
}

AffineSolve affine_solve(const FpMatrix& m, const std::vector<int64_t>& v) {
  require(static_cast<long>(v.size()) == m.rows, Errc::DimensionMismatch,
          "right-hand side length mismatch");
  FpMatrix aug = mat_zero(m.p, m.rows, m.cols + 1);
  for (long i = 0; i < m.rows; ++i) {
    for (long j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = ((v[i] % m.p) + m.p) % m.p;
  }
  std::vector<long> pivots = rref(aug);
  AffineSolve out;
  if (!pivots.empty() && pivots.back() == m.cols) return out;  // 0 = nonzero row
  out.consistent = true;
  long rank = static_cast<long>(pivots.size());
  out.count = pow_big(BigInt(m.p), m.cols - rank);
  out.witness.assign(m.cols, 0);
  for (long t = 0; t < rank; ++t) out.witness[pivots[t]] = aug.at(t, m.cols);
  // check the witness
  auto img = mat_apply(m, out.witness);
  for (long i = 0; i < m.rows; ++i) {
    require(img[i] == ((v[i] % m.p) + m.p) % m.p, Errc::Internal, "solve witness fails");
  }
  return out;
}

std::vector<int64_t> coords_of(const FqElem& x) { return x.v; }

FqElem elem_of(const FieldCtx& F, const std::vector<int64_t>& v) {
  return F.from_coeffs(v);
}

FpMatrix matrix_of_map(const AdditivePoly& A, const ExtCtx& ext) {
  require(ext.base.same_field(*A.ctx), Errc::ContextMismatch,
          "additive polynomial over a different base field");
  const FieldCtx& G = ext.big;
  const long n = G.degree();
  const int64_t p = G.p();
  // Frobenius matrix: column j = coordinates of (x^j)^p = (x^p)^j
  FpMatrix frob = mat_zero(p, n, n);
  {
    FqElem xp = G.pow(G.gen(), BigInt(p));
    FqElem cur = G.one();
    for (long j = 0; j < n; ++j) {
      for (long i = 0; i < n; ++i) frob.at(i, j) = cur.v[i];
      cur = G.mul(cur, xp);
    }
  }
  FpMatrix acc = mat_zero(p, n, n);
  FpMatrix phi_i = mat_identity(p, n);
  for (long i = 0; i <= A.top(); ++i) {
    if (i > 0) phi_i = mat_mul(frob, phi_i);
    if (A.ctx->is_zero(A.a[i])) continue;
    // multiplication-by-c matrix, columns built incrementally: c * x^j
    FqElem c = ext.embed(A.a[i]);
    FpMatrix mc = mat_zero(p, n, n);
    FqElem cur = c;
    for (long j = 0; j < n; ++j) {
      for (long k = 0; k < n; ++k) mc.at(k, j) = cur.v[k];
      cur = G.mul_by_gen(cur);
    }
    acc = mat_add(acc, mat_mul(mc, phi_i));
  }
  return acc;
}

}  // namespace addpoly
