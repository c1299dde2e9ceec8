#include "witt/parse.hpp"

#include <cctype>
#include <optional>

namespace witt {

namespace {

struct Lexer {
  std::string text;
  size_t pos = 0;

  explicit Lexer(std::string t) : text(std::move(t)) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos) +
                       " in \"" + text + "\"");
  }

  bool accept_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      size_t end = pos + w.size();
      if (end < text.size() &&
          (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        return false;
      pos = end;
      return true;
    }
    return false;
  }

  std::optional<std::string> ident() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_')
      return std::nullopt;
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  std::optional<Integer> number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return Integer(text.substr(start, pos - start));
  }

  long integer_exponent() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    bool paren = false;
    if (!neg && accept('(')) {
      paren = true;
      neg = accept('-');
      if (!neg) accept('+');
    }
    auto n = number();
    if (!n) throw ParseError("expected integer exponent in \"" + text + "\"");
    if (paren) expect(')');
    long v = static_cast<long>(n->get_si());
    return neg ? -v : v;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }
};

// Expression parser shared between field and algebra elements through a
// small value interface.
template <typename Value, typename Ops>
struct ExprParser {
  Lexer& lx;
  const Ops& ops;

  Value parse() {
    Value v = sum();
    if (!lx.eof()) lx.fail("trailing input");
    return v;
  }

  Value sum() {
    Value acc = term();
    while (true) {
      if (lx.accept('+'))
        acc = ops.add(acc, term());
      else if (lx.accept('-'))
        acc = ops.sub(acc, term());
      else
        return acc;
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (lx.accept('*'))
        acc = ops.mul(acc, unary());
      else if (lx.accept('/'))
        acc = ops.div(acc, unary());
      else
        return acc;
    }
  }

  Value unary() {
    if (lx.accept('-')) return ops.neg(unary());
    lx.accept('+');
    return power();
  }

  Value power() {
    Value base = atom();
    if (lx.accept('^')) {
      long e = lx.integer_exponent();
      return ops.pow(base, e);
    }
    return base;
  }

  Value atom() {
    if (lx.accept('(')) {
      Value v = sum();
      lx.expect(')');
      return v;
    }
    if (auto n = lx.number()) return ops.constant(*n);
    if (auto id = lx.ident()) return ops.symbol(*id, lx);
    lx.fail("expected a value");
  }
};

int variable_index(const FieldTower& tower, const std::string& name) {
  const auto& vars = tower.variables();
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

struct FieldOps {
  const FieldTower& tower;

  FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return a - b; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
  FieldElement div(const FieldElement& a, const FieldElement& b) const {
    if (b.is_zero()) throw ParseError("division by zero in element literal");
    return a / b;
  }
  FieldElement neg(const FieldElement& a) const { return -a; }
  FieldElement pow(const FieldElement& a, long e) const {
    if (a.is_zero() && e < 0) throw ParseError("division by zero in element literal");
    return a.pow(e);
  }
  FieldElement constant(const Integer& n) const {
    return FieldElement::from_rational(tower.height(), Rational(n));
  }
  FieldElement symbol(const std::string& name, Lexer& lx) const {
    int idx = variable_index(tower, name);
    if (idx < 0) lx.fail("unknown variable '" + name + "'");
    return FieldElement::variable(tower.height(), idx);
  }
};

struct AlgebraOps {
  const Algebra& A;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const { return A.add(a, b); }
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const { return A.sub(a, b); }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const { return A.mul(a, b); }
  AlgebraElement div(const AlgebraElement& a, const AlgebraElement& b) const {
    if (A.nrd(b).is_zero()) throw ParseError("division by a non-invertible element");
    return A.mul(a, A.inverse(b));
  }
  AlgebraElement neg(const AlgebraElement& a) const { return A.neg(a); }
  AlgebraElement pow(const AlgebraElement& a, long e) const {
    AlgebraElement base = a;
    if (e < 0) {
      if (A.nrd(a).is_zero()) throw ParseError("division by a non-invertible element");
      base = A.inverse(a);
      e = -e;
    }
    AlgebraElement acc = A.one();
    for (long i = 0; i < e; ++i) acc = A.mul(acc, base);
    return acc;
  }
  AlgebraElement constant(const Integer& n) const { return A.from_rational(Rational(n)); }
  AlgebraElement symbol(const std::string& name, Lexer& lx) const {
    if (A.kind() == AlgebraKind::Quaternion) {
      if (name == "i") return A.basis_element(1);
      if (name == "j") return A.basis_element(2);
      if (name == "k") return A.basis_element(3);
    }
    if (A.kind() == AlgebraKind::QuadraticEtale && name == "w") return A.basis_element(1);
    int idx = variable_index(A.field(), name);
    if (idx < 0) lx.fail("unknown variable '" + name + "'");
    return A.from_field(FieldElement::variable(A.field().height(), idx));
  }
};

}  // namespace

FieldTower parse_field(const std::string& text) {
  Lexer lx(text);
  BaseField base;
  if (lx.accept_word("Q"))
    base = BaseField::Rationals;
  else if (lx.accept_word("R"))
    base = BaseField::RealClosedSurrogate;
  else
    lx.fail("expected field base 'Q' or 'R'");
  std::vector<std::string> vars;
  if (lx.accept('[')) {
    lx.expect('[');
    while (true) {
      auto id = lx.ident();
      if (!id) lx.fail("expected a variable name");
      vars.push_back(*id);
      if (!lx.accept(',')) break;
    }
    lx.expect(']');
    lx.expect(']');
  }
  if (!lx.eof()) lx.fail("trailing input");
  return FieldTower(base, std::move(vars));
}

FieldElement parse_element(const FieldTower& tower, const std::string& text) {
  Lexer lx(text);
  FieldOps ops{tower};
  ExprParser<FieldElement, FieldOps> p{lx, ops};
  return p.parse();
}

QuadraticForm parse_quadratic_form(const FieldTower& tower, const std::string& text) {
  Lexer lx(text);
  lx.expect('<');
  std::vector<FieldElement> entries;
  if (!lx.accept('>')) {
    FieldOps ops{tower};
    while (true) {
      ExprParser<FieldElement, FieldOps> p{lx, ops};
      entries.push_back(p.sum());
      if (lx.accept(',')) continue;
      lx.expect('>');
      break;
    }
  }
  if (!lx.eof()) lx.fail("trailing input");
  return QuadraticForm(tower, std::move(entries));
}

Algebra parse_algebra(const FieldTower& tower, const std::string& text) {
  Lexer lx(text);
  if (lx.accept_word("base")) {
    if (!lx.eof()) lx.fail("trailing input");
    return Algebra::base(tower);
  }
  if (lx.accept_word("etale")) {
    lx.expect('(');
    if (!lx.accept_word("d")) lx.fail("expected 'd='");
    lx.expect('=');
    size_t depth = 1;
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() && depth > 0) {
      char c = lx.text[lx.pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth > 0) ++lx.pos;
    }
    if (depth != 0) lx.fail("unbalanced parentheses");
    FieldElement d = parse_element(tower, lx.text.substr(start, lx.pos - start));
    lx.expect(')');
    if (!lx.eof()) lx.fail("trailing input");
    return Algebra::quadratic_etale(tower, std::move(d));
  }
  if (lx.accept_word("quat")) {
    for (const auto& v : tower.variables())
      if (v == "i" || v == "j" || v == "k")
        throw ParseError("tower variables i, j, k collide with the quaternion units");
    lx.expect('(');
    auto read_until = [&](const char* stops) {
      size_t depth = 0;
      size_t start = lx.pos;
      while (lx.pos < lx.text.size()) {
        char c = lx.text[lx.pos];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0 && std::string(stops).find(c) != std::string::npos) break;
        ++lx.pos;
      }
      return lx.text.substr(start, lx.pos - start);
    };
    if (!lx.accept_word("a")) lx.fail("expected 'a='");
    lx.expect('=');
    FieldElement a = parse_element(tower, read_until(","));
    lx.expect(',');
    if (!lx.accept_word("b")) lx.fail("expected 'b='");
    lx.expect('=');
    FieldElement b = parse_element(tower, read_until(";"));
    lx.expect(';');
    if (!lx.accept_word("inv")) lx.fail("expected 'inv='");
    lx.expect('=');
    if (lx.accept_word("symp")) {
      lx.expect(')');
      if (!lx.eof()) lx.fail("trailing input");
      return Algebra::quaternion_symplectic(tower, std::move(a), std::move(b));
    }
    if (lx.accept_word("orth")) {
      lx.expect('(');
      std::string s_text = read_until(")");
      lx.expect(')');
      lx.expect(')');
      if (!lx.eof()) lx.fail("trailing input");
      Algebra tmp = Algebra::quaternion_symplectic(tower, a, b);
      AlgebraElement s = parse_algebra_element(tmp, s_text);
      return Algebra::quaternion_orthogonal(tower, std::move(a), std::move(b), std::move(s));
    }
    lx.fail("expected 'symp' or 'orth(...)'");
  }
  lx.fail("expected 'base', 'etale(...)' or 'quat(...)'");
}

AlgebraElement parse_algebra_element(const Algebra& algebra, const std::string& text) {
  Lexer lx(text);
  AlgebraOps ops{algebra};
  ExprParser<AlgebraElement, AlgebraOps> p{lx, ops};
  return p.parse();
}

HermitianForm parse_hermitian_form(const Algebra& algebra, const std::string& text) {
  Lexer lx(text);
  lx.expect('<');
  std::vector<AlgebraElement> entries;
  if (!lx.accept('>')) {
    AlgebraOps ops{algebra};
    while (true) {
      ExprParser<AlgebraElement, AlgebraOps> p{lx, ops};
      entries.push_back(p.sum());
      if (lx.accept(',')) continue;
      lx.expect('>');
      break;
    }
  }
  if (!lx.eof()) lx.fail("trailing input");
  return HermitianForm(algebra, std::move(entries));
}

Ordering parse_ordering(const FieldTower& tower, const std::string& text) {
  Lexer lx(text);
  Ordering P;
  for (int i = 0; i < tower.height(); ++i) {
    if (lx.accept('+'))
      P.signs.push_back(1);
    else if (lx.accept('-'))
      P.signs.push_back(-1);
    else
      lx.fail("expected '+' or '-'");
  }
  if (!lx.eof()) lx.fail("trailing input");
  return P;
}

}  // namespace witt
