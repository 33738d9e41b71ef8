#include <map>
#include <mutex>
#include <tuple>

#include "addpoly/poly.hpp"

namespace addpoly {

ExtCtx make_extension(const FieldCtx& base, long s) {
  require(s >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");
  const long R = base.degree();
  if (s == 1) {
    return ExtCtx{base, 1, base, base.gen()};
  }
  FieldCtx big(base.p(), static_cast<int>(R * s));
  FqElem root;
  if (R == 1) {
    root = big.zero();  // base modulus is x
  } else {
    // embed via the lexicographically least root of the base modulus
    std::vector<FqElem> coeffs;
    coeffs.reserve(R + 1);
    for (int64_t c : base.modulus()) coeffs.push_back(big.from_int(c));
    DensePoly f_big = dp_from_coeffs(big, std::move(coeffs));
    bool found = false;
    for (const auto& [h, m] : factorize(f_big).factors) {
      (void)m;
      require(h.deg() == 1, Errc::Internal, "base modulus has a nonlinear factor upstairs");
      FqElem r = big.neg(h.c[0]);
      if (!found || r < root) {
        root = r;
        found = true;
      }
    }
    require(found, Errc::Internal, "base modulus has no root upstairs");
  }
  ExtCtx ext{base, s, std::move(big), std::move(root)};
  // the embedding must kill the base modulus
  FqElem acc = ext.big.zero();
  for (long i = R; i >= 0; --i) {
    acc = ext.big.mul(acc, ext.embed_gen);
    acc = ext.big.add(acc, ext.big.from_int(base.modulus()[i]));
  }
  require(ext.big.is_zero(acc), Errc::Internal, "embedding generator is not a root");
  return ext;
}

std::shared_ptr<const ExtCtx> make_extension_cached(const FieldCtx& base, long s) {
  using Key = std::tuple<int64_t, std::vector<int64_t>, long>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ExtCtx>> cache;
  Key key{base.p(), base.modulus(), s};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ext = std::make_shared<const ExtCtx>(make_extension(base, s));
  cache.emplace(std::move(key), ext);
  return ext;
}

}  // namespace addpoly
