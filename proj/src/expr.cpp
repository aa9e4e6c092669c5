#include "nullpar/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "nullpar/errors.hpp"

namespace nullpar::expr {

// ---------------------------------------------------------------------------
// Construction

NodePtr make_constant(double v) {
  if (!std::isfinite(v)) throw Error(Errc::invariant, "non-finite constant");
  if (v < 0.0) return make_unary(Op::neg, make_constant(-v));
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = (v == 0.0) ? 0.0 : v;  // folds -0.0
  return n;
}

NodePtr make_variable(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::variable;
  n->index = index;
  return n;
}

NodePtr make_binary(Op op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_unary(Op op, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(arg);
  return n;
}

NodePtr make_pow(NodePtr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::pow;
  n->index = exponent;
  n->lhs = std::move(base);
  return n;
}

bool equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::constant: return a.value == b.value;
    case Op::variable: return a.index == b.index;
    case Op::pow: return a.index == b.index && equal(*a.lhs, *b.lhs);
    case Op::neg:
    case Op::sin:
    case Op::cos:
    case Op::exp: return equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

int max_index(const Node& node) {
  int m = node.op == Op::variable ? node.index : 0;
  if (node.lhs) m = std::max(m, max_index(*node.lhs));
  if (node.rhs) m = std::max(m, max_index(*node.rhs));
  return m;
}

bool mentions_any(const Node& node, int first, int last) {
  if (node.op == Op::variable) return node.index >= first && node.index <= last;
  return (node.lhs && mentions_any(*node.lhs, first, last)) ||
         (node.rhs && mentions_any(*node.rhs, first, last));
}

ScalarField::ScalarField(NodePtr root, int nvars) : root_(std::move(root)), nvars_(nvars) {
  if (nvars_ < 1) throw Error(Errc::range, "a scalar field needs at least one variable");
  const int m = max_index(*root_);
  if (m > nvars_) {
    throw Error(Errc::index_range,
                "coordinate x" + std::to_string(m) + " out of range 1.." + std::to_string(nvars_));
  }
}

bool ScalarField::is_constant(double v) const noexcept {
  if (v < 0.0) {
    return root_->op == Op::neg && root_->lhs->op == Op::constant && root_->lhs->value == -v;
  }
  return root_->op == Op::constant && root_->value == v;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return {make_binary(Op::add, a.root_, b.root_), std::max(a.nvars_, b.nvars_)};
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return {make_binary(Op::sub, a.root_, b.root_), std::max(a.nvars_, b.nvars_)};
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return {make_binary(Op::mul, a.root_, b.root_), std::max(a.nvars_, b.nvars_)};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Grammar levels: 0 expr, 1 term, 2 factor, 3 atom.
int level(const Node& n) {
  switch (n.op) {
    case Op::add:
    case Op::sub: return 0;
    case Op::mul:
    case Op::div: return 1;
    case Op::neg:
    case Op::pow: return 2;
    default: return 3;
  }
}

void print_to(const Node& n, int required, std::string& out);

void print_inner(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::constant: {
      std::array<char, 32> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
      out.append(buf.data(), end);
      break;
    }
    case Op::variable:
      out += 'x';
      out += std::to_string(n.index);
      break;
    case Op::add:
    case Op::sub:
      print_to(*n.lhs, 0, out);
      out += n.op == Op::add ? " + " : " - ";
      print_to(*n.rhs, 1, out);
      break;
    case Op::mul:
    case Op::div:
      print_to(*n.lhs, 1, out);
      out += n.op == Op::mul ? '*' : '/';
      print_to(*n.rhs, 2, out);
      break;
    case Op::neg:
      out += '-';
      print_to(*n.lhs, 2, out);
      break;
    case Op::pow:
      print_to(*n.lhs, 3, out);
      out += '^';
      out += std::to_string(n.index);
      break;
    case Op::sin:
    case Op::cos:
    case Op::exp:
      out += n.op == Op::sin ? "sin(" : n.op == Op::cos ? "cos(" : "exp(";
      print_to(*n.lhs, 0, out);
      out += ')';
      break;
  }
}

void print_to(const Node& n, int required, std::string& out) {
  if (level(n) < required) {
    out += '(';
    print_inner(n, out);
    out += ')';
  } else {
    print_inner(n, out);
  }
}

}  // namespace

std::string print(const Node& node) {
  std::string out;
  print_to(node, 0, out);
  return out;
}

std::string ScalarField::to_string() const { return print(*root_); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool is_digit(std::size_t at) const {
    return at < text_.size() && text_[at] >= '0' && text_[at] <= '9';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        lhs = make_binary(Op::add, lhs, term());
      } else if (peek('-')) {
        ++pos_;
        lhs = make_binary(Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        lhs = make_binary(Op::mul, lhs, factor());
      } else if (peek('/')) {
        ++pos_;
        lhs = make_binary(Op::div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (peek('-')) {
      ++pos_;
      return make_unary(Op::neg, factor());
    }
    NodePtr base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      return make_pow(base, integer(true));
    }
    return base;
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (!is_digit(pos_)) {
      pos_ = start;
      fail("expected integer");
    }
    long v = 0;
    while (is_digit(pos_)) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return static_cast<int>(negative ? -v : v);
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if (c == 'x' && is_digit(pos_ + 1)) {
      const std::size_t start = pos_;
      ++pos_;
      const int idx = integer(false);
      if (idx < 1 || idx > nvars_) {
        throw Error(Errc::index_range, "coordinate x" + std::to_string(idx) + " at byte offset " +
                                           std::to_string(start) + " out of range 1.." +
                                           std::to_string(nvars_));
      }
      return make_variable(idx);
    }
    for (auto [name, op] : {std::pair{"sin", Op::sin}, std::pair{"cos", Op::cos},
                            std::pair{"exp", Op::exp}}) {
      if (text_.substr(pos_, 3) == name) {
        pos_ += 3;
        if (!peek('(')) fail("expected '(' after function name");
        ++pos_;
        NodePtr arg = expr();
        if (!peek(')')) fail("expected ')'");
        ++pos_;
        return make_unary(op, arg);
      }
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec != std::errc() || !std::isfinite(v)) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return make_constant(v);
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField parse(std::string_view text, int nvars) {
  if (nvars < 1) throw Error(Errc::range, "parse: need at least one variable");
  Parser p(text, nvars);
  return {p.run(), nvars};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void eval_fail(const Node& n, const std::string& why) {
  throw Error(Errc::evaluation, why + " in '" + print(n) + "'");
}

double eval_value(const Node& n, std::span<const double> x) {
  double v = 0.0;
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable: return x[static_cast<std::size_t>(n.index - 1)];
    case Op::add: v = eval_value(*n.lhs, x) + eval_value(*n.rhs, x); break;
    case Op::sub: v = eval_value(*n.lhs, x) - eval_value(*n.rhs, x); break;
    case Op::mul: v = eval_value(*n.lhs, x) * eval_value(*n.rhs, x); break;
    case Op::div: {
      const double d = eval_value(*n.rhs, x);
      if (d == 0.0) eval_fail(*n.rhs, "division by zero");
      v = eval_value(*n.lhs, x) / d;
      break;
    }
    case Op::neg: return -eval_value(*n.lhs, x);
    case Op::pow: {
      const double b = eval_value(*n.lhs, x);
      if (n.index < 0 && b == 0.0) eval_fail(*n.lhs, "division by zero");
      v = std::pow(b, n.index);
      break;
    }
    case Op::sin: return std::sin(eval_value(*n.lhs, x));
    case Op::cos: return std::cos(eval_value(*n.lhs, x));
    case Op::exp: v = std::exp(eval_value(*n.lhs, x)); break;
  }
  if (!std::isfinite(v)) eval_fail(n, "non-finite value");
  return v;
}

Jet2 eval_jet(const Node& n, std::span<const double> x) {
  const std::size_t nv = x.size();
  Jet2 r;
  switch (n.op) {
    case Op::constant: return Jet2::constant(nv, n.value);
    case Op::variable: {
      const auto i = static_cast<std::size_t>(n.index - 1);
      return Jet2::variable(nv, i, x[i]);
    }
    case Op::add: r = eval_jet(*n.lhs, x) + eval_jet(*n.rhs, x); break;
    case Op::sub: r = eval_jet(*n.lhs, x) - eval_jet(*n.rhs, x); break;
    case Op::mul: r = eval_jet(*n.lhs, x) * eval_jet(*n.rhs, x); break;
    case Op::div: {
      Jet2 d = eval_jet(*n.rhs, x);
      if (d.value() == 0.0) eval_fail(*n.rhs, "division by zero");
      r = eval_jet(*n.lhs, x) * reciprocal(d);
      break;
    }
    case Op::neg: return -eval_jet(*n.lhs, x);
    case Op::pow: {
      Jet2 b = eval_jet(*n.lhs, x);
      if (n.index < 0 && b.value() == 0.0) eval_fail(*n.lhs, "division by zero");
      r = ipow(b, n.index);
      break;
    }
    case Op::sin: return sin(eval_jet(*n.lhs, x));
    case Op::cos: return cos(eval_jet(*n.lhs, x));
    case Op::exp: r = exp(eval_jet(*n.lhs, x)); break;
  }
  if (!std::isfinite(r.value())) eval_fail(n, "non-finite value");
  return r;
}

void check_point(const ScalarField& f, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(f.nvars())) {
    throw Error(Errc::range, "point has dimension " + std::to_string(x.size()) + ", field has " +
                                 std::to_string(f.nvars()) + " variables");
  }
}

}  // namespace

double ScalarField::evaluate(std::span<const double> x) const {
  check_point(*this, x);
  return eval_value(*root_, x);
}

Jet2 eval_jet2(const ScalarField& f, std::span<const double> x) {
  check_point(f, x);
  return eval_jet(f.root(), x);
}

}  // namespace nullpar::expr
