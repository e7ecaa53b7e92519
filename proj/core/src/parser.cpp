#include "objeval/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "objeval/error.hpp"

namespace objeval {

namespace {

enum class Tok {
  Ident,    // identifiers and keywords
  Int,
  AtomLit,  // atom:<name>
  BuiltinLit,  // builtin:<name>
  Op,       // + - * / % @
  Lambda,   // \ or λ
  Dot,
  Comma,
  Colon,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LBrace,
  RBrace,
  LAngle,
  RAngle,
  Equals,
  Arrow,    // ->
  Question,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto punct = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (s.compare(i, 2, "\xCE\xBB") == 0) {  // UTF-8 lambda
      punct(Tok::Lambda, 2);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      if ((word == "atom" || word == "builtin") && j + 1 < s.size() && s[j] == ':' &&
          (ident_start(s[j + 1]) || word == "builtin")) {
        std::size_t k = j + 1;
        if (word == "builtin" && k < s.size() && !ident_start(s[k])) {
          while (k < s.size() && std::string_view("+-*/%").find(s[k]) != std::string_view::npos) ++k;
        } else {
          while (k < s.size() && ident_char(s[k])) ++k;
        }
        if (k == j + 1) throw SyntaxError(j + 1, "expected a name after '" + word + ":'");
        out.push_back({word == "atom" ? Tok::AtomLit : Tok::BuiltinLit,
                       std::string(s.substr(j + 1, k - j - 1)), i});
        i = k;
        continue;
      }
      out.push_back({Tok::Ident, std::move(word), i});
      i = j;
      continue;
    }
    bool negative_int = c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) != 0;
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 || negative_int) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
      punct(Tok::Int, j - i);
      continue;
    }
    switch (c) {
      case '\\': punct(Tok::Lambda, 1); continue;
      case '.': punct(Tok::Dot, 1); continue;
      case ',': punct(Tok::Comma, 1); continue;
      case ':': punct(Tok::Colon, 1); continue;
      case '(': punct(Tok::LParen, 1); continue;
      case ')': punct(Tok::RParen, 1); continue;
      case '[': punct(Tok::LBrack, 1); continue;
      case ']': punct(Tok::RBrack, 1); continue;
      case '{': punct(Tok::LBrace, 1); continue;
      case '}': punct(Tok::RBrace, 1); continue;
      case '<': punct(Tok::LAngle, 1); continue;
      case '>': punct(Tok::RAngle, 1); continue;
      case '=': punct(Tok::Equals, 1); continue;
      case '?': punct(Tok::Question, 1); continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          punct(Tok::Arrow, 2);
          continue;
        }
        punct(Tok::Op, 1);
        continue;
      case '@':
      case '+':
      case '*':
      case '/':
      case '%': punct(Tok::Op, 1); continue;
      default:
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(std::string_view w) {
  return w == "not" || w == "and" || w == "or" || w == "forall" || w == "exists" || w == "in" ||
         w == "iota" || w == "true" || w == "false";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, "expected " + what + ", found " + found);
  }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("'" + std::string(w) + "'");
    take();
  }

  std::string ident(const std::string& what = "identifier") {
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail(what);
    return take().text;
  }

  void finish() {
    if (!at(Tok::End)) fail("end of input");
  }

  // ---- literals ----

  static Value integer_value(const Token& t) {
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw SyntaxError(t.pos, "integer out of range: " + t.text);
    }
    return Value::integer(n);
  }

  static Value builtin_value(const std::string& name) {
    return Value::closure(comp(builtin_arrow(name), CombTerm::snd()), Value::unit());
  }

  Value literal() {
    switch (peek().kind) {
      case Tok::Int: return integer_value(take());
      case Tok::AtomLit: return Value::atom(take().text);
      case Tok::BuiltinLit: return builtin_value(take().text);
      case Tok::Question: take(); return Value::placeholder();
      case Tok::LParen:
        take();
        expect(Tok::RParen, "')' of the unit literal");
        return Value::unit();
      case Tok::LBrack: {
        take();
        Value a = literal();
        expect(Tok::Comma, "','");
        Value b = literal();
        expect(Tok::RBrack, "']'");
        return Value::pair(std::move(a), std::move(b));
      }
      case Tok::LBrace: {
        take();
        std::vector<Value> items;
        if (!at(Tok::RBrace)) {
          items.push_back(literal());
          while (at(Tok::Comma)) {
            take();
            items.push_back(literal());
          }
        }
        expect(Tok::RBrace, "'}'");
        return Value::set(std::move(items));
      }
      case Tok::Ident: {
        if (at_word("true")) { take(); return Value::boolean(true); }
        if (at_word("false")) { take(); return Value::boolean(false); }
        if (at_word("fun") && peek(1).kind == Tok::LBrace) {
          take();
          take();
          std::vector<std::pair<Value, Value>> graph;
          if (!at(Tok::RBrace)) {
            while (true) {
              Value arg = literal();
              expect(Tok::Arrow, "'->'");
              graph.emplace_back(std::move(arg), literal());
              if (!at(Tok::Comma)) break;
              take();
            }
          }
          expect(Tok::RBrace, "'}'");
          return Value::fun(std::move(graph));
        }
        return Value::atom(ident("literal"));
      }
      default: fail("literal");
    }
  }

  // ---- types ----

  TypeExpr type() {
    TypeExpr left = prod_type();
    if (at(Tok::Arrow)) {
      take();
      return TypeExpr::arrow(left, type());
    }
    return left;
  }

  TypeExpr prod_type() {
    TypeExpr t = atom_type();
    while (at(Tok::Op) && peek().text == "*") {
      take();
      t = TypeExpr::prod(t, atom_type());
    }
    return t;
  }

  TypeExpr atom_type() {
    if (at(Tok::Int) && peek().text == "1") {
      take();
      return TypeExpr::unit();
    }
    if (at(Tok::LBrack)) {
      take();
      TypeExpr t = type();
      expect(Tok::RBrack, "']'");
      return TypeExpr::power(t);
    }
    if (at(Tok::LParen)) {
      take();
      TypeExpr t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (at_word("Omega")) {
      take();
      return TypeExpr::truth();
    }
    return TypeExpr::base(ident("type"));
  }

  // ---- lambda terms ----

  LambdaTerm term(const BuiltinSet& builtins) {
    if (at(Tok::Lambda)) {
      take();
      std::vector<std::string> binders{ident("bound variable")};
      while (at(Tok::Comma)) {
        take();
        binders.push_back(ident("bound variable"));
      }
      expect(Tok::Dot, "'.' after binders");
      LambdaTerm body = term(builtins);
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = LambdaTerm::abs(*it, body);
      return body;
    }
    std::optional<LambdaTerm> acc;
    while (starts_atom()) {
      LambdaTerm a = atom_term(builtins);
      acc = acc ? LambdaTerm::app(*acc, a) : a;
    }
    if (!acc) fail("term");
    return *acc;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Ident: return !is_keyword(peek().text);
      case Tok::Int:
      case Tok::AtomLit:
      case Tok::Op:
      case Tok::LBrack:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  LambdaTerm atom_term(const BuiltinSet& builtins) {
    switch (peek().kind) {
      case Tok::Int: return LambdaTerm::constant(integer_value(take()));
      case Tok::AtomLit: return LambdaTerm::constant(Value::atom(take().text));
      case Tok::Op: {
        Token t = take();
        if (builtins.count(t.text) == 0) throw SyntaxError(t.pos, "undeclared operator '" + t.text + "'");
        return LambdaTerm::builtin(t.text);
      }
      case Tok::LBrack: {
        take();
        LambdaTerm a = term(builtins);
        expect(Tok::Comma, "',' in pair");
        LambdaTerm b = term(builtins);
        expect(Tok::RBrack, "']'");
        return LambdaTerm::pair(a, b);
      }
      case Tok::LParen: {
        take();
        LambdaTerm t = term(builtins);
        expect(Tok::RParen, "')'");
        return t;
      }
      default: {
        std::string name = ident("term");
        if (builtins.count(name) != 0) return LambdaTerm::builtin(name);
        return LambdaTerm::var(name);
      }
    }
  }

  // ---- formulas ----

  Formula formula() {
    Formula left = disjunction();
    if (at(Tok::Arrow)) {
      take();
      return Formula::implies(left, formula());
    }
    return left;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at_word("or")) {
      take();
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at_word("and")) {
      take();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (at_word("not")) {
      take();
      return Formula::negation(unary());
    }
    if (at_word("forall") || at_word("exists")) {
      bool universal = take().text == "forall";
      std::string v = ident("quantified variable");
      expect(Tok::Colon, "':' after quantified variable");
      TypeExpr t = type();
      expect(Tok::Dot, "'.' after quantifier type");
      Formula body = formula();
      return universal ? Formula::forall(v, t, body) : Formula::exists(v, t, body);
    }
    if (at(Tok::LParen)) {
      take();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_word("true")) {
      take();
      return Formula::truth(true);
    }
    if (at_word("false")) {
      take();
      return Formula::truth(false);
    }
    return atomic();
  }

  bool at_plain_ident() const { return at(Tok::Ident) && !is_keyword(peek().text); }

  Formula atomic() {
    std::string lhs = ident("formula");
    if (at_word("in")) {
      take();
      return Formula::mem(lhs, ident("set variable after 'in'"));
    }
    expect(Tok::Equals, "'=' or 'in'");
    if (at(Tok::LBrack)) {
      take();
      std::string x = ident();
      expect(Tok::Comma, "','");
      std::string y = ident();
      expect(Tok::RBrack, "']'");
      return Formula::eq_pair(lhs, x, y);
    }
    if (at_plain_ident() && !(peek().text == "fun" && peek(1).kind == Tok::LBrace)) {
      std::string first = take().text;
      if (at(Tok::LParen)) {
        take();
        std::string arg = ident();
        expect(Tok::RParen, "')'");
        return Formula::eq_app(lhs, first, arg);
      }
      if (at_plain_ident()) return Formula::eq_cfun(lhs, first, take().text);
      return Formula::eq_var(lhs, first);
    }
    return Formula::eq_const(lhs, literal());
  }

  // ---- combinators ----

  CombTerm comb() {
    CombTerm head = comb_unit();
    if (at(Tok::Dot)) {
      take();
      return CombTerm::compose(head, comb());
    }
    return head;
  }

  std::string raw_until_close() {
    // Prim names may contain type text; scan to the balancing ')'.
    std::size_t start = peek().pos;
    int depth = 0;
    while (!at(Tok::End)) {
      if (at(Tok::LParen)) ++depth;
      if (at(Tok::RParen)) {
        if (depth == 0) break;
        --depth;
      }
      take();
    }
    std::size_t end = peek().pos;
    expect(Tok::RParen, "')'");
    std::string_view raw = text_.substr(start, end - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())) != 0) raw.remove_suffix(1);
    if (raw.empty()) throw SyntaxError(start, "empty primitive name");
    return std::string(raw);
  }

  CombTerm comb_unit() {
    if (at(Tok::LParen)) {
      take();
      CombTerm t = comb();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (at(Tok::LAngle)) {
      take();
      CombTerm a = comb();
      expect(Tok::Comma, "','");
      CombTerm b = comb();
      expect(Tok::RAngle, "'>'");
      return CombTerm::pair(a, b);
    }
    if (!at(Tok::Ident)) fail("combinator");
    Token t = take();
    if (t.text == "Id") return CombTerm::id();
    if (t.text == "Fst") return CombTerm::fst();
    if (t.text == "Snd") return CombTerm::snd();
    if (t.text == "Eps") return CombTerm::eps();
    if (t.text == "Cur") {
      expect(Tok::LParen, "'('");
      CombTerm body = comb();
      expect(Tok::RParen, "')'");
      return CombTerm::cur(body);
    }
    if (t.text == "Const") {
      expect(Tok::LParen, "'('");
      Value v = literal();
      expect(Tok::RParen, "')'");
      return CombTerm::constant(v);
    }
    if (t.text == "Prim") {
      expect(Tok::LParen, "'('");
      return CombTerm::prim(raw_until_close());
    }
    if (t.text == "Can") {
      expect(Tok::LParen, "'('");
      TypeExpr ty = type();
      expect(Tok::RParen, "')'");
      return CombTerm::can(ty);
    }
    throw SyntaxError(t.pos, "unknown combinator '" + t.text + "'");
  }

 private:
  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <typename F>
auto per_line(std::string_view text, F&& parse_one) {
  std::vector<decltype(parse_one(text))> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) {
      try {
        out.push_back(parse_one(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.position(), e.detail());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

const BuiltinSet& default_builtins() {
  static const BuiltinSet set{"+", "succ", "id"};
  return set;
}

LambdaTerm parse_term(std::string_view text, const BuiltinSet& builtins) {
  Parser p(text);
  LambdaTerm t = p.term(builtins);
  p.finish();
  return t;
}

std::vector<LambdaTerm> parse_terms(std::string_view text, const BuiltinSet& builtins) {
  return per_line(text, [&](std::string_view line) { return parse_term(line, builtins); });
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

std::vector<Formula> parse_formulas(std::string_view text) {
  return per_line(text, [](std::string_view line) { return parse_formula(line); });
}

Description parse_description(std::string_view text) {
  Parser p(text);
  p.expect_word("iota");
  std::string x = p.ident("described variable");
  p.expect(Tok::Colon, "':'");
  TypeExpr t = p.type();
  p.expect(Tok::Dot, "'.'");
  Formula body = p.formula();
  p.finish();
  return Description{std::move(x), std::move(t), std::move(body)};
}

TypeExpr parse_type(std::string_view text) {
  Parser p(text);
  TypeExpr t = p.type();
  p.finish();
  return t;
}

CombTerm parse_comb(std::string_view text) {
  Parser p(text);
  CombTerm t = p.comb();
  p.finish();
  return t;
}

Value parse_literal(std::string_view text) {
  Parser p(text);
  Value v = p.literal();
  p.finish();
  return v;
}

std::vector<std::pair<std::string, Value>> parse_bindings(std::string_view text) {
  std::vector<std::pair<std::string, Value>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw SyntaxError(start, "binding line without '='");
      std::string_view name = line.substr(0, eq);
      name.remove_prefix(std::min(name.find_first_not_of(" \t"), name.size()));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
      if (!is_identifier(name)) throw SyntaxError(start, "invalid binding name '" + std::string(name) + "'");
      Value v;
      try {
        v = parse_literal(line.substr(eq + 1));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + eq + 1 + e.position(), e.detail());
      }
      for (const auto& [n, _] : out) {
        if (n == name) throw SyntaxError(start, "duplicate binding '" + std::string(name) + "'");
      }
      out.emplace_back(std::string(name), std::move(v));
    }
    start = end + 1;
  }
  return out;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  for (char c : name) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace objeval
