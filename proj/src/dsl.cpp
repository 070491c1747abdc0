#include "qcalc/dsl.hpp"

#include <cctype>
#include <sstream>

namespace qcalc {

namespace {

struct Token {
  enum Kind { kIdent, kInt, kSymbol, kEnd } kind;
  std::string text;
  int column;
};

std::vector<Token> lex(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      out.push_back({Token::kIdent, std::string(line.substr(start, i - start)), col(start)});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Token::kInt, std::string(line.substr(start, i - start)), col(start)});
    } else if (std::string_view("+-*/^()=,|").find(c) != std::string_view::npos) {
      out.push_back({Token::kSymbol, std::string(1, c), col(start)});
      ++i;
    } else {
      throw ParseError(lineno, col(start), std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::kEnd, "", col(line.size())});
  return out;
}

struct Context {
  int dim = 0;
  std::optional<std::string> parameter;
};

// A parsed value: a form of some degree; degree 0 holds scalars.
struct Value {
  Form form;
  int column;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int lineno, const Context& ctx)
      : tokens_(std::move(tokens)), lineno_(lineno), ctx_(ctx) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::kEnd; }
  bool is_symbol(const char* s) const { return peek().kind == Token::kSymbol && peek().text == s; }

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(lineno_, column, message);
  }
  [[noreturn]] void fail_here(const std::string& message) const { fail(peek().column, message); }

  void expect_symbol(const char* s) {
    if (!is_symbol(s)) fail_here(std::string("expected '") + s + "'" + found());
    take();
  }
  void expect_keyword(const char* word) {
    if (peek().kind != Token::kIdent || peek().text != word) fail_here(std::string("expected '") + word + "'" + found());
    take();
  }
  void expect_end() {
    if (!at_end()) fail_here("unexpected '" + peek().text + "'");
  }
  std::string found() const { return at_end() ? " at end of line" : ", found '" + peek().text + "'"; }

  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::kIdent) fail_here("expected " + what + found());
    return take();
  }

  long expect_int(const std::string& what) {
    if (peek().kind != Token::kInt) fail_here("expected " + what + found());
    const Token& t = take();
    if (t.text.size() > 9) fail(t.column, "integer too large");
    return std::stol(t.text);
  }

  int expect_index(const std::string& what) {
    const int column = peek().column;
    long v = expect_int(what);
    if (v < 1 || v > ctx_.dim) fail(column, "index " + std::to_string(v) + " out of range 1.." + std::to_string(ctx_.dim));
    return static_cast<int>(v);
  }

  Rational expect_rational() {
    const int column = peek().column;
    bool negative = false;
    if (is_symbol("-")) {
      take();
      negative = true;
    }
    mpz_class num(std::to_string(expect_int("a rational number")));
    mpz_class den(1);
    if (is_symbol("/")) {
      take();
      den = mpz_class(std::to_string(expect_int("a denominator")));
      if (den == 0) fail(column, "zero denominator");
    }
    Rational r(num, den);
    return negative ? -r : r;
  }

  /// `eK` naming a single basis covector.
  int expect_covector() {
    const Token& t = expect_ident("a basis covector eK");
    if (t.text.size() < 2 || t.text[0] != 'e' || !all_digits(t.text.substr(1))) {
      fail(t.column, "expected a basis covector eK, found '" + t.text + "'");
    }
    if (t.text.size() != 2) fail(t.column, "'" + t.text + "' is not a single basis covector");
    int k = t.text[1] - '0';
    if (k < 1 || k > ctx_.dim) fail(t.column + 1, "index " + std::to_string(k) + " out of range 1.." + std::to_string(ctx_.dim));
    return k;
  }

  Value expression() {
    Value acc = term();
    while (is_symbol("+") || is_symbol("-")) {
      const Token op = take();
      Value rhs = term();
      acc.form = combine(acc, rhs, op.column, op.text == "+");
    }
    return acc;
  }

  Value expect_form_of_degree(int degree) {
    Value v = expression();
    if (!v.form.is_zero() && v.form.degree() != degree) {
      fail(v.column, "expected a " + std::to_string(degree) + "-form, got a form of degree " +
                         std::to_string(v.form.degree()));
    }
    if (v.form.is_zero()) v.form = Form(degree);
    return v;
  }

 private:
  static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  Form combine(const Value& a, const Value& b, int column, bool plus) {
    const Form& x = a.form;
    const Form& y = b.form;
    if (!x.is_zero() && !y.is_zero() && x.degree() != y.degree()) {
      fail(column, "cannot add forms of degree " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()));
    }
    if (x.is_zero()) return plus ? y : -y;
    return plus ? x + y : x - y;
  }

  bool starts_factor() const {
    return peek().kind == Token::kIdent || peek().kind == Token::kInt || is_symbol("(");
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (is_symbol("*")) {
        take();
        Value rhs = factor();
        acc.form = multiply(acc, rhs);
      } else if (is_symbol("/")) {
        const int column = take().column;
        Value rhs = factor();
        if (rhs.form.degree() != 0 || rhs.form.indeterminate()) fail(rhs.column, "can only divide by a rational number");
        Scalar c = rhs.form.coefficient(IndexSet());
        if (c.is_zero()) fail(column, "division by zero");
        acc.form = acc.form / c.rational();
      } else if (starts_factor()) {
        Value rhs = factor();
        acc.form = multiply(acc, rhs);
      } else {
        return acc;
      }
    }
  }

  Form multiply(const Value& a, const Value& b) {
    if (a.form.degree() + b.form.degree() > ctx_.dim) fail(b.column, "degree exceeds the dimension");
    return wedge(a.form, b.form);
  }

  Value factor() {
    if (is_symbol("-")) {
      const int column = take().column;
      Value v = factor();
      return {-v.form, column};
    }
    if (is_symbol("+")) {
      take();
      return factor();
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (!is_symbol("^")) return base;
    const int column = take().column;
    if (base.form.degree() == 0) {
      const int exp_column = peek().column;
      long e = expect_int("an integer exponent");
      if (e > 64) fail(exp_column, "exponent too large");
      Scalar b = base.form.coefficient(IndexSet());
      Scalar result(1);
      for (long i = 0; i < e; ++i) result *= b;
      return {Form::constant(result), base.column};
    }
    Value rhs = power_operand();
    if (rhs.form.degree() == 0) fail(rhs.column, "'^' between forms needs two forms of positive degree");
    if (base.form.degree() + rhs.form.degree() > ctx_.dim) fail(column, "degree exceeds the dimension");
    return {wedge(base.form, rhs.form), base.column};
  }

  Value power_operand() {
    if (is_symbol("-")) {
      const int column = take().column;
      Value v = power_operand();
      return {-v.form, column};
    }
    return power();
  }

  Value primary() {
    const Token& t = peek();
    if (t.kind == Token::kInt) {
      take();
      if (t.text.size() > 18) fail(t.column, "integer too large");
      return {Form::constant(Scalar(Rational(mpz_class(t.text), mpz_class(1)))), t.column};
    }
    if (is_symbol("(")) {
      take();
      Value inner = expression();
      expect_symbol(")");
      return {inner.form, t.column};
    }
    if (t.kind == Token::kIdent) {
      take();
      return {identifier(t), t.column};
    }
    fail_here("expected a term" + found());
  }

  Form identifier(const Token& t) {
    if (ctx_.parameter && t.text == *ctx_.parameter) return Form::constant(Scalar::variable(t.text));
    if (t.text.size() >= 2 && t.text[0] == 'e' && all_digits(t.text.substr(1))) {
      std::vector<int> indices;
      IndexSet seen;
      for (std::size_t i = 1; i < t.text.size(); ++i) {
        int k = t.text[i] - '0';
        const int column = t.column + static_cast<int>(i);
        if (k < 1 || k > ctx_.dim) fail(column, "index " + std::to_string(k) + " out of range 1.." + std::to_string(ctx_.dim));
        if (seen.contains(k)) fail(column, "repeated index " + std::to_string(k) + " in '" + t.text + "'");
        seen = seen.with(k);
        indices.push_back(k);
      }
      return Form::monomial(indices);
    }
    fail(t.column, "unknown identifier '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int lineno_;
  const Context& ctx_;
};

QCBlock parse_qc(LineParser& p, const Context& ctx) {
  QCBlock qc;
  IndexSet used;
  auto index = [&]() {
    const int column = p.peek().column;
    int k = p.expect_index("an index");
    if (used.contains(k)) p.fail(column, "index " + std::to_string(k) + " used twice in the qc block");
    used = used.with(k);
    return k;
  };
  p.expect_keyword("horizontal");
  for (int& h : qc.horizontal) h = index();
  p.expect_keyword("vertical");
  for (int& v : qc.vertical) v = index();
  if (!p.at_end()) {
    p.expect_keyword("scale");
    const int column = p.peek().column;
    qc.scale = p.expect_rational();
    if (qc.scale.is_zero()) p.fail(column, "scale must be nonzero");
  }
  p.expect_end();
  (void)ctx;
  return qc;
}

std::array<Form, 3> default_omegas(const QCBlock& qc) {
  const auto& h = qc.horizontal;
  return {Form::monomial({h[0], h[1]}) + Form::monomial({h[2], h[3]}),
          Form::monomial({h[0], h[2]}) + Form::monomial({h[3], h[1]}),
          Form::monomial({h[0], h[3]}) + Form::monomial({h[1], h[2]})};
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  AlgebraDocument doc;
  Context ctx;
  bool have_header = false;
  std::vector<bool> seen_differential;
  std::array<int, 3> omega_line{0, 0, 0};
  int qc_line = 0;
  int qc_column = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser p(lex(line, lineno), lineno, ctx);
    if (p.at_end()) continue;
    const Token head = p.peek();

    if (!have_header) {
      if (head.kind != Token::kIdent || head.text != "algebra") p.fail(head.column, "expected 'algebra NAME dim N' header");
      p.take();
      doc.name = p.expect_ident("an algebra name").text;
      p.expect_keyword("dim");
      const int column = p.peek().column;
      long dim = p.expect_int("the dimension");
      if (dim < 1 || dim > kMaxDim) p.fail(column, "dimension must be between 1 and " + std::to_string(kMaxDim));
      doc.dim = static_cast<int>(dim);
      if (!p.at_end()) {
        p.expect_keyword("param");
        const Token& name = p.expect_ident("a parameter name");
        if (name.text[0] == 'e' || name.text == "d" || name.text == "omega1" || name.text == "omega2" ||
            name.text == "omega3") {
          p.fail(name.column, "parameter name '" + name.text + "' is reserved");
        }
        doc.parameter = name.text;
      }
      p.expect_end();
      ctx.dim = doc.dim;
      ctx.parameter = doc.parameter;
      doc.differentials.assign(static_cast<std::size_t>(doc.dim), Form(2));
      seen_differential.assign(static_cast<std::size_t>(doc.dim), false);
      have_header = true;
      continue;
    }

    if (head.kind != Token::kIdent) p.fail(head.column, "expected a statement, found '" + head.text + "'");
    p.take();
    if (head.text == "algebra") {
      p.fail(head.column, "duplicate 'algebra' header");
    } else if (head.text == "d") {
      const int column = p.peek().column;
      int k = p.expect_covector();
      if (seen_differential[static_cast<std::size_t>(k - 1)]) p.fail(column, "duplicate differential for e" + std::to_string(k));
      seen_differential[static_cast<std::size_t>(k - 1)] = true;
      p.expect_symbol("=");
      Value v = p.expect_form_of_degree(2);
      p.expect_end();
      doc.differentials[static_cast<std::size_t>(k - 1)] = v.form;
    } else if (head.text == "qc") {
      if (doc.qc) p.fail(head.column, "duplicate qc block");
      doc.qc = parse_qc(p, ctx);
      qc_line = lineno;
      qc_column = head.column;
    } else if (head.text == "omega1" || head.text == "omega2" || head.text == "omega3") {
      if (!doc.qc) p.fail(head.column, head.text + " before the qc line");
      const std::size_t r = static_cast<std::size_t>(head.text.back() - '1');
      if (omega_line[r] != 0) p.fail(head.column, "duplicate " + head.text);
      omega_line[r] = lineno;
      p.expect_symbol("=");
      Value v = p.expect_form_of_degree(2);
      if (v.form.indeterminate()) p.fail(v.column, head.text + " must have rational coefficients");
      p.expect_end();
      doc.qc->omega[r] = v.form;
    } else if (head.text == "flag") {
      if (doc.flag) p.fail(head.column, "duplicate flag");
      p.expect_symbol("=");
      std::vector<std::vector<Form>> levels(1);
      for (;;) {
        Value v = p.expect_form_of_degree(1);
        if (v.form.is_zero()) p.fail(v.column, "flag entries must be nonzero 1-forms");
        levels.back().push_back(v.form);
        if (p.is_symbol(",")) {
          p.take();
        } else if (p.is_symbol("|")) {
          p.take();
          levels.emplace_back();
        } else {
          break;
        }
      }
      p.expect_end();
      doc.flag = std::move(levels);
    } else {
      p.fail(head.column, "unknown statement '" + head.text + "'");
    }
  }

  if (!have_header) throw ParseError(lineno + 1, 1, "missing 'algebra NAME dim N' header");
  if (doc.qc) {
    int given = (omega_line[0] != 0) + (omega_line[1] != 0) + (omega_line[2] != 0);
    if (given == 0) {
      doc.qc->omega = default_omegas(*doc.qc);
    } else if (given != 3) {
      throw ParseError(qc_line, qc_column, "give all of omega1, omega2, omega3 or none");
    }
  }
  return doc;
}

std::string print_document(const AlgebraDocument& doc) {
  std::ostringstream out;
  out << "algebra " << doc.name << " dim " << doc.dim;
  if (doc.parameter) out << " param " << *doc.parameter;
  out << "\n";
  for (int k = 1; k <= doc.dim; ++k) {
    out << "d e" << k << " = " << doc.differentials[static_cast<std::size_t>(k - 1)].to_string() << "\n";
  }
  if (doc.qc) {
    const QCBlock& qc = *doc.qc;
    out << "qc horizontal";
    for (int h : qc.horizontal) out << " " << h;
    out << " vertical";
    for (int v : qc.vertical) out << " " << v;
    out << " scale " << qc.scale.to_string() << "\n";
    for (int r = 1; r <= 3; ++r) out << "omega" << r << " = " << qc.omega[static_cast<std::size_t>(r - 1)].to_string() << "\n";
  }
  if (doc.flag) {
    out << "flag =";
    bool first_level = true;
    for (const auto& level : *doc.flag) {
      out << (first_level ? " " : " | ");
      first_level = false;
      bool first = true;
      for (const auto& f : level) {
        out << (first ? "" : ", ") << f.to_string();
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

AlgebraDocument substitute_parameter(const AlgebraDocument& doc, const Rational& value) {
  AlgebraDocument out = doc;
  out.parameter.reset();
  for (auto& f : out.differentials) f = f.substitute(value);
  if (out.flag)
    for (auto& level : *out.flag)
      for (auto& f : level) f = f.substitute(value);
  return out;
}

LieAlgebra to_algebra(const AlgebraDocument& doc) { return LieAlgebra(doc.dim, doc.differentials); }

QCFrame to_frame(const AlgebraDocument& doc) {
  if (!doc.qc) throw InvalidFrame("document '" + doc.name + "' has no qc block");
  QCFrame frame;
  frame.horizontal = doc.qc->horizontal;
  frame.vertical = doc.qc->vertical;
  frame.omega = doc.qc->omega;
  frame.scale = doc.qc->scale;
  return frame;
}

Flag to_flag(const AlgebraDocument& doc) {
  if (!doc.flag) throw InvalidFlag("document '" + doc.name + "' has no flag");
  Flag flag;
  for (const auto& level : *doc.flag) {
    std::vector<Vector> basis;
    for (const auto& f : level) {
      Vector v(doc.dim);
      for (int i = 1; i <= doc.dim; ++i) v(i) = f.coefficient(IndexSet::of({i}));
      basis.push_back(std::move(v));
    }
    flag.levels.push_back(std::move(basis));
  }
  return flag;
}

}  // namespace qcalc
