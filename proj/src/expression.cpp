#include "tama/expression.hpp"

#include <cctype>
#include <functional>

#include "tama/ama.hpp"
#include "tama/tama.hpp"

namespace tama {

ExprPtr Expression::number(const Rational& v) {
  auto e = std::make_shared<Expression>();
  e->kind = Kind::number;
  e->value = v;
  return e;
}

ExprPtr Expression::atom(Kind kind, std::vector<int> indices) {
  auto e = std::make_shared<Expression>();
  e->kind = kind;
  e->indices = std::move(indices);
  return e;
}

ExprPtr Expression::unary(ExprPtr operand) {
  auto e = std::make_shared<Expression>();
  e->kind = Kind::neg;
  e->children = {std::move(operand)};
  return e;
}

ExprPtr Expression::binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expression>();
  e->kind = kind;
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr Expression::power(ExprPtr base, unsigned exponent) {
  auto e = std::make_shared<Expression>();
  e->kind = Kind::pow;
  e->exponent = exponent;
  e->children = {std::move(base)};
  return e;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.kind != b.kind || a.value != b.value || a.indices != b.indices || a.exponent != b.exponent ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  int index() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("index too large", at);
    return std::stoi(d);
  }

  ExprPtr located(ExprPtr e, std::size_t at) {
    std::const_pointer_cast<Expression>(e)->position = at;
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = located(Expression::binary(Expression::Kind::add, lhs, product()), at);
      } else if (accept('-')) {
        lhs = located(Expression::binary(Expression::Kind::sub, lhs, product()), at);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr product() {
    ExprPtr lhs = signed_factor();
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = located(Expression::binary(Expression::Kind::mul, lhs, signed_factor()), at);
    }
  }

  ExprPtr signed_factor() {
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) return located(Expression::unary(signed_factor()), at);
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    std::size_t exp_at = pos_;
    std::string d = digits();
    if (d.size() > 4) throw ParseError("exponent too large", exp_at);
    ExprPtr e = located(Expression::power(base, static_cast<unsigned>(std::stoul(d))), at);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponents need parentheses");
    return e;
  }

  std::vector<int> index_list(std::size_t min_count, std::size_t max_count) {
    expect('(');
    std::vector<int> out{index()};
    while (accept(',')) out.push_back(index());
    expect(')');
    if (out.size() < min_count || out.size() > max_count) {
      fail("wrong number of indices (" + std::to_string(out.size()) + ")");
    }
    return out;
  }

  ExprPtr primary() {
    skip_space();
    std::size_t at = pos_;
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den(1);
      if (accept('/')) {
        std::size_t den_at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", den_at);
      }
      return located(Expression::number(make_rational(num, den)), at);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      using K = Expression::Kind;
      if (name == "Dirac") return located(Expression::atom(K::dirac, {}), at);
      if (name == "Coord") return located(Expression::atom(K::coord, {}), at);
      if (name == "x" || name == "y" || name == "e") {
        K kind = name == "x" ? K::x : name == "y" ? K::y : K::e;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          return located(Expression::atom(kind, {index()}), at);
        }
        return located(Expression::atom(kind, index_list(1, 1)), at);
      }
      if (name == "L") return located(Expression::atom(K::L, index_list(2, 2)), at);
      if (name == "O") return located(Expression::atom(K::O, index_list(2, 64)), at);
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int precedence(Expression::Kind k) {
  using K = Expression::Kind;
  switch (k) {
    case K::add:
    case K::sub:
      return 1;
    case K::mul:
      return 2;
    case K::neg:
      return 3;
    case K::pow:
      return 4;
    default:
      return 5;
  }
}

std::string render_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string join_indices(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string wrap(const Expression& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

void check_indices(const Expression& e, int n) {
  for (int i : e.indices) {
    if (i < 1 || i > n) {
      throw ParseError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n), e.position);
    }
  }
  if (e.kind == Expression::Kind::O) {
    if (static_cast<int>(e.indices.size()) > n) throw ParseError("O arity exceeds n", e.position);
    std::vector<int> sorted = e.indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("repeated index in O", e.position);
    }
  }
}

template <class Value, class Leaf, class Mul, class Pow>
Value fold(const Expression& e, Leaf&& leaf, Mul&& mul, Pow&& pow) {
  using K = Expression::Kind;
  std::function<Value(const Expression&)> go = [&](const Expression& x) -> Value {
    switch (x.kind) {
      case K::neg:
        return -go(*x.children[0]);
      case K::add:
        return go(*x.children[0]) + go(*x.children[1]);
      case K::sub:
        return go(*x.children[0]) - go(*x.children[1]);
      case K::mul:
        return mul(go(*x.children[0]), go(*x.children[1]));
      case K::pow:
        return pow(go(*x.children[0]), x.exponent);
      default:
        return leaf(x);
    }
  };
  return go(e);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string render(const Expression& e) {
  using K = Expression::Kind;
  switch (e.kind) {
    case K::number:
      return render_rational(e.value);
    case K::x:
      return "x(" + join_indices(e.indices) + ")";
    case K::y:
      return "y(" + join_indices(e.indices) + ")";
    case K::e:
      return "e(" + join_indices(e.indices) + ")";
    case K::L:
      return "L(" + join_indices(e.indices) + ")";
    case K::O:
      return "O(" + join_indices(e.indices) + ")";
    case K::dirac:
      return "Dirac";
    case K::coord:
      return "Coord";
    case K::neg:
      return "-" + wrap(*e.children[0], precedence(e.children[0]->kind) < precedence(K::neg));
    case K::pow: {
      const Expression& base = *e.children[0];
      bool parens = precedence(base.kind) <= precedence(K::pow) ||
                    (base.kind == K::number && base.value.get_den() != 1);
      return wrap(base, parens) + "^" + std::to_string(e.exponent);
    }
    case K::add:
    case K::sub:
    case K::mul: {
      const int p = precedence(e.kind);
      const Expression& lhs = *e.children[0];
      const Expression& rhs = *e.children[1];
      std::string op = e.kind == K::add ? " + " : e.kind == K::sub ? " - " : "*";
      return wrap(lhs, precedence(lhs.kind) < p) + op + wrap(rhs, precedence(rhs.kind) <= p);
    }
  }
  return {};
}

WCElement evaluate_wc(const Expression& e, const AlgebraContext& ctx) {
  using K = Expression::Kind;
  auto leaf = [&](const Expression& x) -> WCElement {
    check_indices(x, ctx.n());
    switch (x.kind) {
      case K::number:
        return constant(ctx, x.value);
      case K::x:
        return gen_x(ctx, x.indices[0]);
      case K::y:
        return gen_y(ctx, x.indices[0]);
      case K::e:
        return gen_e(ctx, x.indices[0]);
      case K::L:
        return L_of_chord(ctx, {x.indices[0], x.indices[1]});
      case K::O:
        return o_signed(ctx, x.indices);
      case K::dirac:
        return osp_generators(ctx).dirac;
      case K::coord:
        return osp_generators(ctx).coord;
      default:
        throw AlgebraError("not an atom");
    }
  };
  return fold<WCElement>(e, leaf, [](const WCElement& a, const WCElement& b) { return multiply(a, b); },
                         [](const WCElement& a, unsigned k) { return tama::power(a, k); });
}

GrElement evaluate_gr(const Expression& e, const AlgebraContext& ctx) {
  using K = Expression::Kind;
  auto leaf = [&](const Expression& x) -> GrElement {
    check_indices(x, ctx.n());
    switch (x.kind) {
      case K::number:
        return gr_constant(ctx, x.value);
      case K::x:
        return gr_x(ctx, x.indices[0]);
      case K::y:
        return gr_y(ctx, x.indices[0]);
      case K::e:
        return gr_e(ctx, x.indices[0]);
      case K::L:
        return gr_L(ctx, x.indices[0], x.indices[1]);
      case K::O:
        return x.indices.size() == 2 ? gr_O(ctx, x.indices[0], x.indices[1]) : leading_part(o_signed(ctx, x.indices));
      case K::dirac:
        return leading_part(osp_generators(ctx).dirac);
      case K::coord:
        return leading_part(osp_generators(ctx).coord);
      default:
        throw AlgebraError("not an atom");
    }
  };
  return fold<GrElement>(e, leaf, [](const GrElement& a, const GrElement& b) { return gr_multiply(a, b); },
                         [](const GrElement& a, unsigned k) { return gr_power(a, k); });
}

OPolynomial evaluate_opolynomial(const Expression& e, int n) {
  using K = Expression::Kind;
  // thin wrapper so the shared fold can use + and - on polynomials
  struct Poly {
    OPolynomial p;
    Poly operator-() const { return {add(OPolynomial{}, p, -1)}; }
    Poly operator+(const Poly& o) const { return {add(p, o.p)}; }
    Poly operator-(const Poly& o) const { return {add(p, o.p, -1)}; }
  };
  auto leaf = [&](const Expression& x) -> Poly {
    check_indices(x, n);
    if (x.kind == K::number) {
      OPolynomial out;
      add_term(out, TamaDiagram(n), x.value);
      return {out};
    }
    if (x.kind == K::O && x.indices.size() == 2) return {x_symbol(n, x.indices[0], x.indices[1])};
    throw ParseError("only O(i,j) atoms and numbers are allowed here", x.position);
  };
  auto mul = [](const Poly& a, const Poly& b) { return Poly{multiply(a.p, b.p)}; };
  auto pow = [n](const Poly& a, unsigned k) {
    Poly out;
    add_term(out.p, TamaDiagram(n), 1);
    for (unsigned i = 0; i < k; ++i) out.p = multiply(out.p, a.p);
    return out;
  };
  return fold<Poly>(e, leaf, mul, pow).p;
}

}  // namespace tama

namespace tama {

ExprPtr random_expression(std::mt19937_64& rng, int n, int depth) {
  using K = Expression::Kind;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth <= 1 || pick(0, 3) == 0) {
    switch (pick(0, 7)) {
      case 0:
        return Expression::number(make_rational(pick(0, 20), pick(1, 6)));
      case 1:
        return Expression::atom(K::x, {pick(1, n)});
      case 2:
        return Expression::atom(K::y, {pick(1, n)});
      case 3:
        return Expression::atom(K::e, {pick(1, n)});
      case 4:
        return Expression::atom(K::L, {pick(1, n), pick(1, n)});
      case 5: {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(pick(2, n));
        return Expression::atom(K::O, all);
      }
      case 6:
        return Expression::atom(K::dirac, {});
      default:
        return Expression::atom(K::coord, {});
    }
  }
  switch (pick(0, 4)) {
    case 0:
      return Expression::unary(random_expression(rng, n, depth - 1));
    case 1:
      return Expression::binary(K::add, random_expression(rng, n, depth - 1), random_expression(rng, n, depth - 1));
    case 2:
      return Expression::binary(K::sub, random_expression(rng, n, depth - 1), random_expression(rng, n, depth - 1));
    case 3:
      return Expression::binary(K::mul, random_expression(rng, n, depth - 1), random_expression(rng, n, depth - 1));
    default:
      return Expression::power(random_expression(rng, n, depth - 1), static_cast<unsigned>(pick(0, 3)));
  }
}

}  // namespace tama
