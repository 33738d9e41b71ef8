#include "addpoly/parse.hpp"

#include <cctype>
#include <sstream>

namespace addpoly {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    require(eat(c), Errc::ParseError,
            std::string("expected '") + c + "' in \"" + s + "\"");
  }
  long number() {
    skip();
    require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])),
            Errc::ParseError, "expected a number in \"" + s + "\"");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      require(v <= (1L << 40), Errc::ParseError, "number too large");
      ++i;
    }
    return v;
  }
};

constexpr long kDegreeLimit = 1L << 20;

DensePoly parse_expr(const FieldCtx& F, Lexer& lx);

DensePoly parse_primary(const FieldCtx& F, Lexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    lx.expect('(');
    DensePoly e = parse_expr(F, lx);
    lx.expect(')');
    return e;
  }
  if (c == 'x' || c == 'X') {
    ++lx.i;
    return dp_x(F);
  }
  if (c == 'a') {
    ++lx.i;
    return dp_const(F, F.gen());
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    return dp_const(F, F.from_int(lx.number()));
  }
  fail(Errc::ParseError, std::string("unexpected character '") + c + "' in \"" + lx.s + "\"");
}

DensePoly parse_unary(const FieldCtx& F, Lexer& lx) {
  if (lx.eat('-')) return dp_neg(parse_unary(F, lx));
  if (lx.eat('+')) return parse_unary(F, lx);
  DensePoly base = parse_primary(F, lx);
  if (lx.eat('^')) {
    long e = lx.number();
    require(base.deg() * e <= kDegreeLimit, Errc::ParseError, "exponent too large");
    return dp_pow(base, e);
  }
  return base;
}

DensePoly parse_term(const FieldCtx& F, Lexer& lx) {
  DensePoly t = parse_unary(F, lx);
  while (true) {
    if (lx.eat('*')) {
      DensePoly u = parse_unary(F, lx);
      require(t.deg() + u.deg() <= kDegreeLimit, Errc::ParseError, "degree too large");
      t = dp_mul(t, u);
      continue;
    }
    // implicit multiplication: "2x", "a x", "3(x+1)"
    char c = lx.peek();
    if (c == 'x' || c == 'X' || c == 'a' || c == '(' ||
        std::isdigit(static_cast<unsigned char>(c))) {
      DensePoly u = parse_unary(F, lx);
      require(t.deg() + u.deg() <= kDegreeLimit, Errc::ParseError, "degree too large");
      t = dp_mul(t, u);
      continue;
    }
    return t;
  }
}

DensePoly parse_expr(const FieldCtx& F, Lexer& lx) {
  DensePoly e = parse_term(F, lx);
  while (true) {
    if (lx.eat('+')) {
      e = dp_add(e, parse_term(F, lx));
    } else if (lx.eat('-')) {
      e = dp_sub(e, parse_term(F, lx));
    } else {
      return e;
    }
  }
}

}  // namespace

DensePoly parse_poly(const FieldCtx& F, const std::string& text) {
  Lexer lx{text};
  DensePoly e = parse_expr(F, lx);
  require(lx.done(), Errc::ParseError, "trailing input in \"" + text + "\"");
  return e;
}

FqElem parse_element(const FieldCtx& F, const std::string& text) {
  DensePoly e = parse_poly(F, text);
  require(e.deg() <= 0, Errc::ParseError, "element expression contains x: \"" + text + "\"");
  return e.is_zero() ? F.zero() : e.c[0];
}

FieldCtx parse_field(const std::string& spec) {
  std::istringstream in(spec);
  std::string tok;
  long p = -1, r = -1;
  std::vector<int64_t> mod;
  bool has_mod = false;
  while (in >> tok) {
    size_t eq = tok.find('=');
    require(eq != std::string::npos, Errc::ParseError,
            "field spec entries must be key=value: \"" + tok + "\"");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "p") {
        p = std::stol(val);
      } else if (key == "r") {
        r = std::stol(val);
      } else if (key == "mod") {
        has_mod = true;
        std::istringstream vs(val);
        std::string c;
        while (std::getline(vs, c, ',')) mod.push_back(std::stoll(c));
      } else {
        fail(Errc::ParseError, "unknown field spec key \"" + key + "\"");
      }
    } catch (const std::logic_error&) {
      fail(Errc::ParseError, "bad number in field spec: \"" + tok + "\"");
    }
  }
  require(p >= 2 && r >= 1, Errc::ParseError, "field spec needs p=<prime> r=<degree>");
  if (has_mod) return FieldCtx(p, static_cast<int>(r), std::move(mod));
  return FieldCtx(p, static_cast<int>(r));
}

AdditivePoly parse_sparse_additive(const FieldCtx& F, const std::string& text) {
  Lexer lx{text};
  lx.expect('{');
  std::vector<std::pair<long, FqElem>> terms;
  if (!lx.eat('}')) {
    do {
      lx.expect('(');
      long idx = lx.number();
      lx.expect(',');
      lx.skip();
      std::string coeff;
      if (lx.eat('\'')) {
        while (lx.i < text.size() && text[lx.i] != '\'') coeff += text[lx.i++];
        lx.expect('\'');
      } else {
        while (lx.i < text.size() && text[lx.i] != ')') coeff += text[lx.i++];
      }
      lx.expect(')');
      terms.emplace_back(idx, parse_element(F, coeff));
    } while (lx.eat(','));
    lx.expect('}');
  }
  require(lx.done(), Errc::ParseError, "trailing input in \"" + text + "\"");
  return ap_from_sparse(F, terms);
}

namespace {

// one monomial c * sym^k
void append_term(std::string& out, const std::string& c_str, bool c_is_one,
                 const std::string& sym, const BigInt& k) {
  if (!out.empty()) out += " + ";
  if (k == 0) {
    out += c_str;
    return;
  }
  if (!c_is_one) out += c_str + "*";
  out += sym;
  if (k > 1) out += "^" + k.str();
}

}  // namespace

std::string format_element(const FieldCtx& F, const FqElem& e) {
  std::string out;
  for (long i = F.degree() - 1; i >= 0; --i) {
    if (e.v[i] == 0) continue;
    append_term(out, std::to_string(e.v[i]), e.v[i] == 1, "a", BigInt(i));
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const DensePoly& f) {
  const FieldCtx& F = *f.ctx;
  std::string out;
  for (long i = f.deg(); i >= 0; --i) {
    if (F.is_zero(f.c[i])) continue;
    std::string c = format_element(F, f.c[i]);
    bool one = F.is_one(f.c[i]);
    if (!one && c.find('+') != std::string::npos) c = "(" + c + ")";
    append_term(out, c, one, "x", BigInt(i));
  }
  return out.empty() ? "0" : out;
}

std::string format_additive(const AdditivePoly& A) {
  const FieldCtx& F = *A.ctx;
  std::string out;
  for (long i = A.top(); i >= 0; --i) {
    if (F.is_zero(A.a[i])) continue;
    std::string c = format_element(F, A.a[i]);
    bool one = F.is_one(A.a[i]);
    if (!one && c.find('+') != std::string::npos) c = "(" + c + ")";
    append_term(out, c, one, "x", pow_big(BigInt(F.p()), i));
  }
  return out.empty() ? "0" : out;
}

std::string format_additive_sparse(const AdditivePoly& A) {
  const FieldCtx& F = *A.ctx;
  std::string out = "{";
  bool first = true;
  for (long i = 0; i <= A.top(); ++i) {
    if (F.is_zero(A.a[i])) continue;
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(i) + ",'" + format_element(F, A.a[i]) + "')";
  }
  return out + "}";
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace addpoly
