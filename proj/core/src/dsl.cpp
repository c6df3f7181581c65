#include "z2n/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "z2n/errors.hpp"
#include "z2n/format.hpp"

namespace z2n {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const Span span{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    if (i + 1 < src.size() && ((c == '<' && src[i + 1] == '-') || (c == '-' && src[i + 1] == '>'))) {
      out.push_back({Tok::Sym, std::string(src.substr(i, 2)), span});
      advance(2);
      continue;
    }
    static constexpr std::string_view kSymbols = "+-*^/(){}[],:=;";
    if (kSymbols.find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Tok::Sym, std::string(1, c), span});
    advance(1);
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

// ---------------------------------------------------------------- expressions

struct Node {
  enum class Kind { Number, Coord, Deriv, Sum, Product, Power, Neg };
  Kind kind;
  Span span;
  Rational value;
  std::size_t coord = 0;
  std::uint32_t exponent = 0;
  std::vector<Node> kids;
};

bool has_derivative(const Node& n) {
  if (n.kind == Node::Kind::Deriv) return true;
  for (const auto& k : n.kids) {
    if (has_derivative(k)) return true;
  }
  return false;
}

[[noreturn]] void relocate(const ValidationError& e, Span s) {
  const std::string msg = std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + e.what();
  if (dynamic_cast<const DegreeArityError*>(&e)) throw DegreeArityError(msg);
  if (dynamic_cast<const SymbolError*>(&e)) throw SymbolError(msg);
  if (dynamic_cast<const ChartError*>(&e)) throw ChartError(msg);
  if (dynamic_cast<const DegreeError*>(&e)) throw DegreeError(msg);
  if (dynamic_cast<const DegreeMismatch*>(&e)) throw DegreeMismatch(msg);
  if (dynamic_cast<const DomainError*>(&e)) throw DomainError(msg);
  throw ValidationError(msg);
}

template <typename F>
auto located(Span s, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    relocate(e, s);
  }
}

GradedSeries eval_series(const Node& n, const Chart& chart) {
  switch (n.kind) {
    case Node::Kind::Number:
      return GradedSeries::constant(chart, n.value);
    case Node::Kind::Coord:
      return GradedSeries::coordinate(chart, n.coord);
    case Node::Kind::Deriv:
      throw ParseError("derivative token in a series expression", n.span.line, n.span.column);
    case Node::Kind::Sum: {
      GradedSeries out(chart);
      for (const auto& k : n.kids) out += eval_series(k, chart);
      return out;
    }
    case Node::Kind::Product: {
      GradedSeries out = eval_series(n.kids.front(), chart);
      for (std::size_t i = 1; i < n.kids.size(); ++i) out = out * eval_series(n.kids[i], chart);
      return out;
    }
    case Node::Kind::Power: {
      const GradedSeries base = eval_series(n.kids.front(), chart);
      GradedSeries out = GradedSeries::one(chart);
      for (std::uint32_t e = 0; e < n.exponent && !out.is_zero(); ++e) out = out * base;
      return out;
    }
    case Node::Kind::Neg:
      return -eval_series(n.kids.front(), chart);
  }
  return GradedSeries(chart);
}

DiffOperator eval_operator(const Node& n, const Chart& chart) {
  if (!has_derivative(n)) return DiffOperator::multiplication(eval_series(n, chart));
  switch (n.kind) {
    case Node::Kind::Deriv: {
      MultiIndex index(chart->coordinate_count(), 0);
      index[n.coord] = 1;
      return DiffOperator::derivative(chart, index);
    }
    case Node::Kind::Sum: {
      DiffOperator out(chart);
      for (const auto& k : n.kids) out += eval_operator(k, chart);
      return out;
    }
    case Node::Kind::Product: {
      DiffOperator out = eval_operator(n.kids.front(), chart);
      for (std::size_t i = 1; i < n.kids.size(); ++i) out = compose(out, eval_operator(n.kids[i], chart));
      return out;
    }
    case Node::Kind::Power: {
      const DiffOperator base = eval_operator(n.kids.front(), chart);
      DiffOperator out = DiffOperator::identity(chart);
      for (std::uint32_t e = 0; e < n.exponent; ++e) out = compose(out, base);
      return out;
    }
    case Node::Kind::Neg:
      return -eval_operator(n.kids.front(), chart);
    default:
      break;
  }
  return DiffOperator(chart);
}

GradedSeries eval_on(const Node& n, const GradedSeries& f) {
  const Chart& chart = f.chart();
  if (!has_derivative(n)) return eval_series(n, chart).with_domain(f.domain()) * f;
  switch (n.kind) {
    case Node::Kind::Deriv:
      return partial(f, n.coord);
    case Node::Kind::Sum: {
      GradedSeries out(chart, {}, f.valid_order(), f.domain());
      for (const auto& k : n.kids) out += eval_on(k, f);
      return out;
    }
    case Node::Kind::Product: {
      GradedSeries out = f;
      for (std::size_t i = n.kids.size(); i-- > 0;) out = eval_on(n.kids[i], out);
      return out;
    }
    case Node::Kind::Power: {
      GradedSeries out = f;
      for (std::uint32_t e = 0; e < n.exponent; ++e) out = eval_on(n.kids.front(), out);
      return out;
    }
    case Node::Kind::Neg:
      return -eval_on(n.kids.front(), f);
    default:
      break;
  }
  return f;
}

// ---------------------------------------------------------------- parser

struct ChartFields {
  std::optional<unsigned> n;
  unsigned p = 0;
  std::optional<unsigned> trunc;
  std::vector<std::tuple<bool, std::vector<int>, unsigned, Span>> blocks;  // odd?, bits, count
};

struct SeminormFields {
  std::string kind;
  Span span;
  std::optional<std::vector<Interval>> box;
  Span box_span;
  unsigned grid = kDefaultGrid;
  std::optional<DiffOperator> op;
  std::optional<std::vector<std::uint32_t>> alpha, beta;
  unsigned m = 0, mu = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).text == s;
  }
  bool is_ident(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == s;
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    const std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
    throw ParseError(what + ", found " + found, at.span.line, at.span.column);
  }
  void expect_sym(std::string_view s) {
    if (!is_sym(s)) fail("expected '" + std::string(s) + "'", peek());
    next();
  }
  const Token& expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected a name", peek());
    return next();
  }
  std::uint32_t expect_uint() {
    if (peek().kind != Tok::Number) fail("expected a nonnegative integer", peek());
    const Token& t = next();
    if (t.text.size() > 9) throw ParseError("integer too large", t.span.line, t.span.column);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", peek());
  }

  // rational literal with optional sign: -3/4
  Rational signed_rational() {
    bool negative = false;
    if (is_sym("-") || is_sym("+")) negative = next().text == "-";
    Rational r = unsigned_rational();
    return negative ? Rational(-r) : r;
  }

  Rational unsigned_rational() {
    if (peek().kind != Tok::Number) fail("expected a number", peek());
    const Token num = next();
    mpz_class n(num.text), d(1);
    if (is_sym("/") && peek(1).kind == Tok::Number) {
      next();
      const Token den = next();
      d = mpz_class(den.text);
      if (d == 0) throw ParseError("zero denominator", den.span.line, den.span.column);
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  std::vector<std::uint32_t> tuple() {
    expect_sym("(");
    std::vector<std::uint32_t> out;
    if (!is_sym(")")) {
      out.push_back(expect_uint());
      while (is_sym(",")) {
        next();
        out.push_back(expect_uint());
      }
    }
    expect_sym(")");
    return out;
  }

  // ---- expressions

  Node expression(const ChartSpec& chart) {
    const Span span = peek().span;
    Node sum{Node::Kind::Sum, span, 0, 0, 0, {}};
    bool negative = false;
    if (is_sym("-") || is_sym("+")) negative = next().text == "-";
    auto push = [&](Node t, bool neg) {
      if (neg) t = Node{Node::Kind::Neg, t.span, 0, 0, 0, {std::move(t)}};
      sum.kids.push_back(std::move(t));
    };
    push(term(chart), negative);
    while (is_sym("+") || is_sym("-")) {
      negative = next().text == "-";
      push(term(chart), negative);
    }
    if (sum.kids.size() == 1) return std::move(sum.kids.front());
    return sum;
  }

  Node term(const ChartSpec& chart) {
    Node prod{Node::Kind::Product, peek().span, 0, 0, 0, {}};
    prod.kids.push_back(factor(chart));
    while (is_sym("*")) {
      next();
      prod.kids.push_back(factor(chart));
    }
    if (prod.kids.size() == 1) return std::move(prod.kids.front());
    return prod;
  }

  Node factor(const ChartSpec& chart) {
    Node base = atom(chart);
    if (is_sym("^")) {
      next();
      const std::uint32_t e = expect_uint();
      return Node{Node::Kind::Power, base.span, 0, 0, e, {std::move(base)}};
    }
    return base;
  }

  Node atom(const ChartSpec& chart) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      return Node{Node::Kind::Number, t.span, unsigned_rational(), 0, 0, {}};
    }
    if (is_sym("(")) {
      next();
      Node inner = expression(chart);
      expect_sym(")");
      return inner;
    }
    if (is_sym("-")) {
      const Span span = next().span;
      return Node{Node::Kind::Neg, span, 0, 0, 0, {factor(chart)}};
    }
    if (t.kind == Tok::Ident) {
      next();
      return symbol(t, chart);
    }
    fail("expected a number, a coordinate, a derivative or '('", t);
  }

  static Node symbol(const Token& t, const ChartSpec& chart) {
    static const std::pair<std::string_view, std::string_view> kDerivatives[] = {
        {"dzeta", "zeta"}, {"deta", "eta"}, {"dx", "x"}, {"dz", "zeta"}, {"de", "eta"}};
    static const std::string_view kCoordinates[] = {"zeta", "eta", "x"};
    auto digits = [](std::string_view s) {
      return !s.empty() && s.front() != '0' &&
             s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    const std::string_view name = t.text;
    auto resolve = [&](const std::string& coord) {
      return located(t.span, [&] { return chart.index_of(coord); });
    };
    for (const auto& [prefix, kind] : kDerivatives) {
      if (name.starts_with(prefix) && digits(name.substr(prefix.size()))) {
        return Node{Node::Kind::Deriv, t.span, 0,
                    resolve(std::string(kind) + std::string(name.substr(prefix.size()))), 0, {}};
      }
    }
    for (const auto& kind : kCoordinates) {
      if (name.starts_with(kind) && digits(name.substr(kind.size()))) {
        return Node{Node::Kind::Coord, t.span, 0, resolve(std::string(name)), 0, {}};
      }
    }
    throw SymbolError(std::to_string(t.span.line) + ":" + std::to_string(t.span.column) +
                      ": unknown symbol '" + t.text + "'");
  }

  // ---- charts

  Chart chart_block() {
    const Token& kw = next();  // "chart"
    std::string name;
    if (peek().kind == Tok::Ident) name = next().text;
    expect_sym("{");
    ChartFields f;
    while (!is_sym("}")) {
      const Token& key = expect_ident();
      if (key.text == "n" || key.text == "trunc") {
        expect_sym("=");
        (key.text == "n" ? f.n : f.trunc) = expect_uint();
      } else if (key.text == "x") {
        expect_sym(":");
        f.p = expect_uint();
      } else if (key.text == "eta" || key.text == "zeta") {
        expect_sym("[");
        const Span span = peek().span;
        auto bits = tuple();
        for (auto b : bits) {
          if (b > 1) throw ParseError("degree components must be 0 or 1", span.line, span.column);
        }
        expect_sym("]");
        expect_sym(":");
        f.blocks.emplace_back(key.text == "zeta", std::vector<int>(bits.begin(), bits.end()), expect_uint(), span);
      } else {
        fail("expected n, x, eta, zeta or trunc", key);
      }
    }
    expect_sym("}");
    return located(kw.span, [&] { return build_chart(f, name); });
  }

  static Chart build_chart(const ChartFields& f, const std::string& name) {
    if (!f.n) throw ChartError("chart needs n=...");
    const DegreeTable table = standard_order(*f.n);
    std::vector<unsigned> q((1u << *f.n) - 1, 0);
    std::vector<bool> seen(q.size(), false);
    for (const auto& [odd, bits, count, span] : f.blocks) {
      try {
        if (bits.size() != *f.n) {
          throw DegreeArityError("degree " + Degree(bits).to_string() + " does not have n=" +
                                 std::to_string(*f.n) + " components");
        }
        const Degree d(bits);
        if (d.is_zero()) throw DegreeError("graded coordinates need a nonzero degree");
        if ((parity(d) == Parity::Odd) != odd) {
          throw DegreeError(std::string(odd ? "zeta" : "eta") + " block with " +
                            (odd ? "even" : "odd") + " degree " + d.to_string());
        }
        const std::size_t slot = table.position(d) - 1;
        if (seen[slot]) throw ChartError("degree " + d.to_string() + " declared twice");
        seen[slot] = true;
        q[slot] = count;
      } catch (const ValidationError& e) {
        relocate(e, span);
      }
    }
    return make_chart(*f.n, f.p, std::move(q), f.trunc.value_or(ChartSpec::kDefaultTrunc), name);
  }

  // ---- boxes and seminorm specs

  std::vector<Interval> box_intervals() {
    std::vector<Interval> out;
    while (true) {
      expect_sym("[");
      Rational lo = signed_rational();
      expect_sym(",");
      Rational hi = signed_rational();
      expect_sym("]");
      out.push_back({lo, hi});
      if (!is_ident("x") || !is_sym("[", 1)) break;
      next();
    }
    return out;
  }

  SeminormSpec seminorm_spec(const Chart& chart) {
    SeminormFields s;
    const Token& kind = expect_ident();
    s.kind = kind.text;
    s.span = kind.span;
    if (s.kind != "rho" && s.kind != "pCab" && s.kind != "pCD" && s.kind != "base") {
      fail("expected rho, pCab, pCD or base", kind);
    }
    while (peek().kind == Tok::Ident && is_sym("=", 1)) {
      const Token& key = next();
      next();
      if (key.text == "box") {
        s.box_span = peek().span;
        s.box = box_intervals();
      } else if (key.text == "grid") {
        s.grid = expect_uint();
      } else if (key.text == "m") {
        s.m = expect_uint();
      } else if (key.text == "mu") {
        s.mu = expect_uint();
      } else if (key.text == "alpha") {
        s.alpha = tuple();
      } else if (key.text == "beta") {
        s.beta = tuple();
      } else if (key.text == "op") {
        const Span span = peek().span;
        Node n = expression(*chart);
        s.op = located(span, [&] { return eval_operator(n, chart); });
      } else {
        fail("unknown seminorm parameter", key);
      }
    }
    return located(s.span, [&] { return build_seminorm(s, chart); });
  }

  static SeminormSpec build_seminorm(const SeminormFields& s, const Chart& chart) {
    if (!s.box) throw ValidationError(s.kind + " needs box=...");
    CompactBox box(*s.box, s.grid);
    if (box.dimension() != chart->p()) throw DomainError("box dimension differs from chart p");
    auto need_op = [&] {
      if (!s.op) throw ValidationError(s.kind + " needs op=...");
      return *s.op;
    };
    auto need_beta = [&] {
      if (!s.beta) throw ValidationError(s.kind + " needs beta=...");
      if (s.beta->size() != chart->xi_count()) throw ValidationError("beta has wrong length");
      return *s.beta;
    };
    if (s.kind == "rho") return SeminormSpec::rho(box, s.m, s.mu);
    if (s.kind == "pCD") return SeminormSpec::cd(box, need_op());
    if (s.kind == "base") return SeminormSpec::base(box, need_op(), need_beta());
    if (!s.alpha) throw ValidationError("pCab needs alpha=...");
    if (s.alpha->size() != chart->p()) throw ValidationError("alpha has wrong length");
    return SeminormSpec::cab(box, *s.alpha, need_beta());
  }

  // ---- morphisms

  MorphismSpec morphism_lines(const Chart& source, const Chart& target, Span span) {
    std::vector<std::optional<GradedSeries>> images(target->coordinate_count());
    while (peek().kind == Tok::Ident && is_sym("<-", 1)) {
      const Token& coord = next();
      next();
      const std::size_t b = located(coord.span, [&] { return target->index_of(coord.text); });
      if (images[b]) {
        throw ValidationError(std::to_string(coord.span.line) + ":" + std::to_string(coord.span.column) +
                              ": image of " + coord.text + " given twice");
      }
      const Span expr_span = peek().span;
      Node n = expression(*source);
      images[b] = located(expr_span, [&] { return eval_series(n, source); });
      expect_sym(";");
    }
    std::vector<GradedSeries> out;
    for (std::size_t b = 0; b < images.size(); ++b) {
      if (!images[b]) {
        relocate(ValidationError("morphism has no image for " + target->coordinate(b).name), span);
      }
      out.push_back(*images[b]);
    }
    return located(span, [&] { return MorphismSpec(source, target, std::move(out)); });
  }

  // ---- documents

  SourceDocument document(std::string_view text) {
    SourceDocument doc;
    doc.text = std::string(text);
    Chart current;
    auto chart_for = [&](Span at) -> Chart {
      if (is_ident("in")) {
        next();
        const Token& name = expect_ident();
        return located(name.span, [&] { return doc.chart(name.text); });
      }
      if (!current) relocate(ChartError("no chart declared before this item"), at);
      return current;
    };
    while (!at_end()) {
      const Token& kw = peek();
      if (kw.kind != Tok::Ident) fail("expected chart, series, operator, morphism or seminorm", kw);
      if (kw.text == "chart") {
        Chart c = chart_block();
        doc.charts.push_back({c->name(), c, kw.span, c});
        current = c;
      } else if (kw.text == "series" || kw.text == "operator") {
        next();
        const std::string name = expect_ident().text;
        const Chart chart = chart_for(kw.span);
        expect_sym("=");
        const Span span = peek().span;
        Node n = expression(*chart);
        if (kw.text == "series") {
          doc.series.push_back({name, located(span, [&] { return eval_series(n, chart); }), kw.span, chart});
        } else {
          doc.operators.push_back({name, located(span, [&] { return eval_operator(n, chart); }), kw.span, chart});
        }
        expect_sym(";");
      } else if (kw.text == "morphism") {
        next();
        std::string name;
        if (peek().kind == Tok::Ident && is_sym(":", 1)) {
          name = next().text;
          next();
        }
        const Token& src = expect_ident();
        expect_sym("->");
        const Token& tgt = expect_ident();
        const Chart source = located(src.span, [&] { return doc.chart(src.text); });
        const Chart target = located(tgt.span, [&] { return doc.chart(tgt.text); });
        doc.morphisms.push_back({name, morphism_lines(source, target, kw.span), kw.span, source});
      } else if (kw.text == "seminorm") {
        next();
        const Chart chart = chart_for(kw.span);
        doc.seminorms.push_back({"", seminorm_spec(chart), kw.span, chart});
        expect_sym(";");
      } else {
        fail("expected chart, series, operator, morphism or seminorm", kw);
      }
    }
    return doc;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

const Chart& SourceDocument::chart(std::string_view name) const {
  for (const auto& c : charts) {
    if (c.name == name) return c.value;
  }
  throw SymbolError("unknown chart '" + std::string(name) + "'");
}

SourceDocument parse(std::string_view text) {
  Parser p(text);
  return p.document(text);
}

Chart parse_chart(std::string_view text) {
  Parser p(text);
  if (!p.is_ident("chart")) p.fail("expected 'chart'", p.peek());
  Chart c = p.chart_block();
  p.expect_end();
  return c;
}

GradedSeries parse_series(std::string_view text, const Chart& chart) {
  Parser p(text);
  const Span span = p.peek().span;
  Node n = p.expression(*chart);
  p.expect_end();
  return located(span, [&] { return eval_series(n, chart); });
}

DiffOperator parse_operator(std::string_view text, const Chart& chart) {
  Parser p(text);
  const Span span = p.peek().span;
  Node n = p.expression(*chart);
  p.expect_end();
  return located(span, [&] { return eval_operator(n, chart); });
}

BlackboxOperator parse_blackbox(std::string_view text, const Chart& chart, int order_bound) {
  Parser p(text);
  Node n = p.expression(*chart);
  p.expect_end();
  return {chart, [n](const GradedSeries& f) { return eval_on(n, f); }, order_bound};
}

MorphismSpec parse_morphism(std::string_view text, const Chart& source, const Chart& target) {
  Parser p(text);
  const Span span = p.peek().span;
  if (p.is_ident("morphism")) {
    p.next();
    if (p.peek().kind == Tok::Ident && p.is_sym(":", 1)) {
      p.next();
      p.next();
    }
    p.expect_ident();
    p.expect_sym("->");
    p.expect_ident();
  }
  MorphismSpec phi = p.morphism_lines(source, target, span);
  p.expect_end();
  return phi;
}

SeminormSpec parse_seminorm(std::string_view text, const Chart& chart) {
  Parser p(text);
  SeminormSpec s = p.seminorm_spec(chart);
  if (p.is_sym(";")) p.next();
  p.expect_end();
  return s;
}

std::vector<SeminormSpec> parse_family(std::string_view text, const Chart& chart) {
  std::vector<SeminormSpec> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_seminorm(line, chart));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line_no, e.column());
    }
  }
  return out;
}

CompactBox parse_box(std::string_view text, unsigned grid) {
  Parser p(text);
  const Span span = p.peek().span;
  auto intervals = p.box_intervals();
  p.expect_end();
  return located(span, [&] { return CompactBox(std::move(intervals), grid); });
}

std::vector<std::uint32_t> parse_tuple(std::string_view text) {
  Parser p(text);
  auto t = p.tuple();
  p.expect_end();
  return t;
}

std::string print(const SourceDocument& doc) {
  auto chart_name = [&](const Chart& c) -> std::string {
    for (const auto& named : doc.charts) {
      if (named.value == c && !named.name.empty()) return named.name;
    }
    return {};
  };
  auto in_clause = [&](const Chart& c) {
    const std::string name = chart_name(c);
    return name.empty() ? std::string() : " in " + name;
  };
  std::string out;
  for (const auto& c : doc.charts) out += to_string(*c.value) + "\n";
  for (const auto& s : doc.series) {
    out += "series " + s.name + in_clause(s.chart) + " = " + to_string(s.value) + ";\n";
  }
  for (const auto& o : doc.operators) {
    out += "operator " + o.name + in_clause(o.chart) + " = " + to_string(o.value) + ";\n";
  }
  for (const auto& m : doc.morphisms) {
    std::string text = to_string(m.value);
    if (!m.name.empty()) text.insert(std::string("morphism ").size(), m.name + ": ");
    out += text;
  }
  for (const auto& s : doc.seminorms) {
    out += "seminorm" + in_clause(s.chart) + " " + to_string(s.value) + ";\n";
  }
  return out;
}

}  // namespace z2n
