#include "spa/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "spa/error.hpp"

namespace spa {

namespace {

using Kind = ParseError::Kind;

struct Token {
  enum Type { Ident, Number, Symbol, End } type = End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.type = Token::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Token::Number;
    } else if (std::string_view(";:*^+-/()[],<=").find(c) != std::string_view::npos) {
      j = i + 1;
      t.type = Token::Symbol;
    } else {
      throw ParseError(Kind::Syntax, line, col, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const std::set<std::string, std::less<>> kReserved = {
    "field", "gens", "rel", "order", "module", "rank", "shifts", "elems", "truncate",
    "early_stop", "deglex", "degrevlex", "TOP", "POT", "QQ", "GF"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Problem run();

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const {
    return peek().type == Token::Symbol && peek().text == s;
  }
  bool at_word(std::string_view s) const { return peek().type == Token::Ident && peek().text == s; }
  [[noreturn]] void fail(Kind kind, const Token& t, const std::string& reason) const {
    throw ParseError(kind, t.line, t.column, reason);
  }
  std::string describe(const Token& t) const {
    return t.type == Token::End ? "end of input" : "'" + t.text + "'";
  }
  const Token& expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail(Kind::Syntax, peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
    return take();
  }
  const Token& expect_ident(const char* what) {
    if (peek().type != Token::Ident)
      fail(Kind::Syntax, peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  const Token& expect_number(const char* what) {
    if (peek().type != Token::Number)
      fail(Kind::Syntax, peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  std::uint64_t number_value(const Token& t) const {
    if (t.text.size() > 18) fail(Kind::ValidationFailed, t, "number too large");
    return std::stoull(t.text);
  }

  void parse_field();
  void parse_gens();
  void parse_rel();
  void parse_order();
  void parse_module();
  void parse_elems();

  std::size_t generator(const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) fail(Kind::UnknownSymbol, t, "unknown generator '" + t.text + "'");
    return it->second;
  }
  Coefficient coefficient_literal();
  void build_algebra(const Token& at);
  void require_gens(const Token& at) const {
    if (names_.empty()) fail(Kind::Syntax, at, "'gens' must come before this statement");
  }
  void require_no_algebra(const Token& at) const {
    if (algebra_) fail(Kind::Syntax, at, "this statement must precede 'module' and 'elems'");
  }

  Polynomial expr();
  Polynomial product();
  Polynomial power();
  Polynomial atom();

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  Field field_;
  bool have_field_ = false;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<RelationSpec> relations_;
  std::vector<Token> relation_tokens_;
  std::optional<MonomialOrder::Family> family_;
  std::vector<std::size_t> precedence_;
  std::shared_ptr<SolvableAlgebra> algebra_;

  bool have_module_ = false;
  std::vector<Degree> shifts_{0};
  ModuleOrderPtr module_order_ = ModuleOrder::top();
  std::optional<FreeModule> module_;
  bool have_elems_ = false;
  std::vector<ModuleElement> elements_;
  std::optional<Degree> truncate_;
  bool early_stop_ = false;
};

void Parser::parse_field() {
  const Token& kw = take();
  if (have_field_) fail(Kind::Syntax, kw, "duplicate 'field' statement");
  if (!names_.empty()) fail(Kind::Syntax, kw, "'field' must come before 'gens'");
  have_field_ = true;
  const Token& name = expect_ident("QQ or GF(p)");
  if (name.text == "QQ") {
    field_ = Field::rationals();
  } else if (name.text == "GF") {
    expect_symbol("(");
    const Token& p = expect_number("a prime");
    try {
      field_ = Field::prime(number_value(p));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(Kind::ValidationFailed, p, e.what());
    }
    expect_symbol(")");
  } else {
    fail(Kind::UnknownSymbol, name, "unknown field '" + name.text + "'");
  }
  expect_symbol(";");
}

void Parser::parse_gens() {
  const Token& kw = take();
  if (!names_.empty()) fail(Kind::Syntax, kw, "duplicate 'gens' statement");
  while (!at_symbol(";")) {
    const Token& name = expect_ident("a generator name");
    if (kReserved.count(name.text)) fail(Kind::ValidationFailed, name, "'" + name.text + "' is reserved");
    if (index_.count(name.text)) fail(Kind::ValidationFailed, name, "duplicate generator '" + name.text + "'");
    std::uint32_t w = 1;
    if (at_symbol(":")) {
      take();
      const Token& wt = expect_number("a weight");
      const std::uint64_t v = number_value(wt);
      if (v == 0) fail(Kind::ValidationFailed, wt, "weight of '" + name.text + "' must be positive");
      if (v > 1'000'000) fail(Kind::ValidationFailed, wt, "weight too large");
      w = static_cast<std::uint32_t>(v);
    }
    index_.emplace(name.text, names_.size());
    names_.push_back(name.text);
    weights_.push_back(w);
  }
  if (names_.empty()) fail(Kind::Syntax, peek(), "expected at least one generator");
  take();
}

Coefficient Parser::coefficient_literal() {
  const Token& num = take();
  std::string text = num.text;
  if (at_symbol("/") && peek(1).type == Token::Number) {
    take();
    text += "/" + take().text;
  }
  try {
    return field_.parse(text);
  } catch (const Error& e) {
    fail(Kind::ValidationFailed, num, e.what());
  }
}

void Parser::parse_rel() {
  const Token& kw = take();
  require_gens(kw);
  require_no_algebra(kw);
  const Token& left = expect_ident("a generator");
  expect_symbol("*");
  const Token& right = expect_ident("a generator");
  const std::size_t j = generator(left);
  const std::size_t i = generator(right);
  if (j <= i)
    fail(Kind::ValidationFailed, left,
         "relations rewrite " + names_[std::max(i, j)] + "*" + names_[std::min(i, j)] +
             ": the later generator goes first on the left");
  for (const RelationSpec& r : relations_)
    if (r.upper == j && r.lower == i)
      fail(Kind::ValidationFailed, left, "duplicate relation for " + left.text + "*" + right.text);
  expect_symbol("=");

  // sum of coefficient * PBW monomial terms
  const std::size_t n = names_.size();
  std::vector<Term> terms;
  bool first = true;
  while (!at_symbol(";")) {
    Coefficient sign = field_.one();
    if (at_symbol("+") || at_symbol("-")) {
      if (take().text == "-") sign = -sign;
    } else if (!first) {
      fail(Kind::Syntax, peek(), "expected '+', '-' or ';', found " + describe(peek()));
    }
    first = false;
    Coefficient c = field_.one();
    Monomial m(n);
    bool have_mono = false;
    if (peek().type == Token::Number) {
      c = coefficient_literal();
      if (!at_symbol("*")) {
        terms.push_back(Term{sign * c, m});
        continue;
      }
      take();
    }
    std::optional<std::size_t> last;
    for (;;) {
      const Token& g = expect_ident("a generator");
      const std::size_t k = generator(g);
      if (last && k <= *last)
        fail(Kind::ValidationFailed, g, "relation terms must be ordered monomials (generators in declaration order)");
      last = k;
      Exponent e = 1;
      if (at_symbol("^")) {
        take();
        const Token& et = expect_number("an exponent");
        const std::uint64_t v = number_value(et);
        if (v == 0 || v > 100000) fail(Kind::ValidationFailed, et, "bad exponent");
        e = static_cast<Exponent>(v);
      }
      m = m + Monomial::generator(n, k, e);
      have_mono = true;
      if (at_symbol("*") && peek(1).type == Token::Ident) {
        take();
        continue;
      }
      break;
    }
    if (!have_mono) fail(Kind::Syntax, peek(), "expected a monomial");
    terms.push_back(Term{sign * c, m});
  }
  take();

  const Monomial ij = Monomial::generator(n, i) + Monomial::generator(n, j);
  RelationSpec spec{j, i, field_.zero(), {}};
  for (Term& t : terms) {
    if (t.mono == ij)
      spec.scalar += t.coef;
    else
      spec.tail.push_back(std::move(t));
  }
  if (spec.scalar.is_zero())
    fail(Kind::ValidationFailed, left,
         "relation " + left.text + "*" + right.text + ": the coefficient of " + right.text + "*" +
             left.text + " must be nonzero");
  relations_.push_back(std::move(spec));
  relation_tokens_.push_back(kw);
}

void Parser::parse_order() {
  const Token& kw = take();
  require_gens(kw);
  require_no_algebra(kw);
  if (family_) fail(Kind::Syntax, kw, "duplicate 'order' statement");
  const Token& fam = expect_ident("deglex or degrevlex");
  if (fam.text == "deglex")
    family_ = MonomialOrder::Family::DegLex;
  else if (fam.text == "degrevlex")
    family_ = MonomialOrder::Family::DegRevLex;
  else
    fail(Kind::UnknownSymbol, fam, "unknown ordering '" + fam.text + "'");
  if (at_symbol(";")) {
    take();
    return;
  }
  std::vector<bool> seen(names_.size(), false);
  for (;;) {
    const Token& g = expect_ident("a generator");
    const std::size_t k = generator(g);
    if (seen[k]) fail(Kind::ValidationFailed, g, "generator '" + g.text + "' listed twice");
    seen[k] = true;
    precedence_.push_back(k);
    if (at_symbol("<")) {
      take();
      continue;
    }
    break;
  }
  if (precedence_.size() != names_.size())
    fail(Kind::ValidationFailed, peek(), "ordering must list every generator");
  expect_symbol(";");
}

void Parser::build_algebra(const Token& at) {
  if (algebra_) return;
  require_gens(at);
  if (!family_) family_ = MonomialOrder::Family::DegLex;
  if (precedence_.empty())
    for (std::size_t k = 0; k < names_.size(); ++k) precedence_.push_back(k);
  try {
    algebra_ = std::make_shared<SolvableAlgebra>(field_, names_, weights_, *family_, precedence_,
                                                 relations_);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(Kind::ValidationFailed, at, e.what());
  }
  // Tail leading monomials below a_i a_j, per relation.
  const std::size_t n = names_.size();
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const RelationSpec& spec = relations_[r];
    const Relation& rel = algebra_->relation(spec.upper, spec.lower);
    const Monomial ij = Monomial::generator(n, spec.lower) + Monomial::generator(n, spec.upper);
    if (!rel.tail.is_zero() && algebra_->compare(rel.tail.lead().mono, ij) >= 0)
      fail(Kind::ValidationFailed, relation_tokens_[r],
           "relation " + names_[spec.upper] + "*" + names_[spec.lower] + ": leading tail monomial " +
               algebra_->render(rel.tail.lead().mono) + " is not below " + algebra_->render(ij));
  }
  const ValidationReport solvable = algebra_->check_solvable();
  if (!solvable.valid())
    fail(Kind::ValidationFailed, relation_tokens_.empty() ? at : relation_tokens_.back(),
         solvable.failures.front());
}

void Parser::parse_module() {
  const Token& kw = take();
  if (have_module_) fail(Kind::Syntax, kw, "duplicate 'module' statement");
  if (have_elems_) fail(Kind::Syntax, kw, "'module' must come before 'elems'");
  have_module_ = true;
  build_algebra(kw);
  std::optional<std::size_t> rank;
  std::optional<std::vector<Degree>> shifts;
  Token shifts_at;
  for (;;) {
    if (at_word("rank")) {
      take();
      if (rank) fail(Kind::Syntax, peek(), "duplicate rank");
      const Token& r = expect_number("a rank");
      const std::uint64_t v = number_value(r);
      if (v > 100000) fail(Kind::ValidationFailed, r, "rank too large");
      rank = static_cast<std::size_t>(v);
    } else if (at_word("shifts")) {
      shifts_at = take();
      if (shifts) fail(Kind::Syntax, shifts_at, "duplicate shifts");
      shifts.emplace();
      expect_symbol("[");
      while (!at_symbol("]")) {
        if (!shifts->empty()) expect_symbol(",");
        const Token& s = expect_number("a shift");
        shifts->push_back(static_cast<Degree>(number_value(s)));
      }
      take();
    } else if (at_word("order")) {
      take();
      const Token& o = expect_ident("TOP or POT");
      if (o.text == "TOP")
        module_order_ = ModuleOrder::top();
      else if (o.text == "POT")
        module_order_ = ModuleOrder::pot();
      else
        fail(Kind::UnknownSymbol, o, "unknown module ordering '" + o.text + "'");
    } else {
      break;
    }
  }
  if (shifts && rank && shifts->size() != *rank)
    fail(Kind::ValidationFailed, shifts_at,
         "expected " + std::to_string(*rank) + " shifts, found " + std::to_string(shifts->size()));
  if (shifts)
    shifts_ = *shifts;
  else
    shifts_.assign(rank.value_or(1), 0);
  expect_symbol(";");
}

Polynomial Parser::expr() {
  const SolvableAlgebra& A = *algebra_;
  Polynomial acc;
  bool negate = false;
  if (at_symbol("-") || at_symbol("+")) negate = take().text == "-";
  acc = product();
  if (negate) acc = A.neg(acc);
  while (at_symbol("+") || at_symbol("-")) {
    const bool minus = take().text == "-";
    Polynomial rhs = product();
    acc = minus ? A.sub(acc, rhs) : A.add(acc, rhs);
  }
  return acc;
}

Polynomial Parser::product() {
  Polynomial acc = power();
  while (at_symbol("*")) {
    take();
    const Token& at = peek();
    Polynomial rhs = power();
    try {
      acc = algebra_->multiply(acc, rhs);
    } catch (const NormalizationDiverged& e) {
      fail(Kind::ValidationFailed, at, e.what());
    }
  }
  return acc;
}

Polynomial Parser::power() {
  if (at_symbol("-")) {
    take();
    return algebra_->neg(power());
  }
  Polynomial base = atom();
  if (at_symbol("^")) {
    take();
    const Token& et = expect_number("an exponent");
    const std::uint64_t v = number_value(et);
    if (v > 10000) fail(Kind::ValidationFailed, et, "exponent too large");
    try {
      base = algebra_->power(base, static_cast<unsigned>(v));
    } catch (const NormalizationDiverged& e) {
      fail(Kind::ValidationFailed, et, e.what());
    }
  }
  return base;
}

Polynomial Parser::atom() {
  const Token& t = peek();
  if (t.type == Token::Number) return algebra_->constant(coefficient_literal());
  if (t.type == Token::Ident) {
    take();
    return algebra_->variable(generator(t));
  }
  if (at_symbol("(")) {
    take();
    Polynomial inner = expr();
    expect_symbol(")");
    return inner;
  }
  fail(Kind::Syntax, t, "expected a number, generator or '(', found " + describe(t));
}

void Parser::parse_elems() {
  const Token& kw = take();
  if (have_elems_) fail(Kind::Syntax, kw, "duplicate 'elems' statement");
  have_elems_ = true;
  build_algebra(kw);
  if (!module_) module_.emplace(algebra_, shifts_, module_order_);
  while (!at_symbol(";")) {
    const Token& open = expect_symbol("[");
    std::vector<Polynomial> comps;
    while (!at_symbol("]")) {
      if (!comps.empty()) expect_symbol(",");
      comps.push_back(expr());
    }
    take();
    if (comps.size() != module_->rank())
      fail(Kind::ValidationFailed, open,
           "element has " + std::to_string(comps.size()) + " components, module rank is " +
               std::to_string(module_->rank()));
    elements_.push_back(module_->from_components(comps));
  }
  take();
}

Problem Parser::run() {
  while (peek().type != Token::End) {
    const Token& kw = peek();
    if (kw.type != Token::Ident) fail(Kind::Syntax, kw, "expected a statement, found " + describe(kw));
    if (kw.text == "field") {
      parse_field();
    } else if (kw.text == "gens") {
      parse_gens();
    } else if (kw.text == "rel") {
      parse_rel();
    } else if (kw.text == "order") {
      parse_order();
    } else if (kw.text == "module") {
      parse_module();
    } else if (kw.text == "elems") {
      parse_elems();
    } else if (kw.text == "truncate") {
      take();
      if (truncate_) fail(Kind::Syntax, kw, "duplicate 'truncate' statement");
      truncate_ = static_cast<Degree>(number_value(expect_number("a degree")));
      expect_symbol(";");
    } else if (kw.text == "early_stop") {
      take();
      early_stop_ = true;
      expect_symbol(";");
    } else {
      fail(Kind::Syntax, kw, "unknown statement '" + kw.text + "'");
    }
  }
  build_algebra(peek());
  if (!module_) module_.emplace(algebra_, shifts_, module_order_);
  Problem p{algebra_, *module_, std::move(elements_), truncate_, early_stop_, algebra_->check_graded()};
  return p;
}

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).run(); }

std::string render_problem(const Problem& p) {
  const SolvableAlgebra& A = *p.algebra;
  const std::size_t n = A.num_gens();
  std::ostringstream os;
  os << "field " << A.field().name() << ";\n";
  os << "gens";
  for (std::size_t k = 0; k < n; ++k) os << ' ' << A.names()[k] << ':' << A.weights()[k];
  os << ";\n";
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = A.relation(j, i);
      if (r.scalar.is_one() && r.tail.is_zero()) continue;
      const Monomial ij = Monomial::generator(n, i) + Monomial::generator(n, j);
      os << "rel " << A.names()[j] << '*' << A.names()[i] << " = "
         << A.render(A.add(A.term(r.scalar, ij), r.tail)) << ";\n";
    }
  os << "order " << (A.order().family() == MonomialOrder::Family::DegLex ? "deglex" : "degrevlex");
  for (std::size_t k = 0; k < n; ++k)
    os << (k ? "<" : " ") << A.names()[A.order().precedence()[k]];
  os << ";\n";
  os << "module rank " << p.module.rank() << " shifts [";
  for (std::size_t k = 0; k < p.module.rank(); ++k) os << (k ? "," : "") << p.module.shift(k);
  os << "] order " << (p.module.order()->kind() == ModuleOrder::Kind::POT ? "POT" : "TOP") << ";\n";
  if (!p.elements.empty()) {
    os << "elems";
    for (const ModuleElement& x : p.elements) os << ' ' << p.module.render(x);
    os << ";\n";
  }
  if (p.truncate) os << "truncate " << *p.truncate << ";\n";
  if (p.early_stop) os << "early_stop;\n";
  return os.str();
}

bool same_problem(const Problem& a, const Problem& b) {
  const SolvableAlgebra& A = *a.algebra;
  const SolvableAlgebra& B = *b.algebra;
  if (!(A.field() == B.field()) || A.names() != B.names() || A.weights() != B.weights() ||
      A.order().family() != B.order().family() || A.order().precedence() != B.order().precedence())
    return false;
  for (std::size_t j = 0; j < A.num_gens(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = A.relation(j, i);
      const Relation& s = B.relation(j, i);
      if (!(r.scalar == s.scalar) || !(r.tail == s.tail)) return false;
    }
  return a.module.shifts() == b.module.shifts() &&
         a.module.order()->kind() == b.module.order()->kind() && a.elements == b.elements &&
         a.truncate == b.truncate && a.early_stop == b.early_stop;
}

}  // namespace spa
