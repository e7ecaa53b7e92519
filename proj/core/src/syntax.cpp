#include "objeval/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

namespace objeval {

struct LambdaTerm::Node {
  Kind kind;
  std::string name;
  std::optional<Value> literal;
  std::vector<LambdaTerm> kids;
  std::size_t depth = 1;
};

namespace {

std::size_t max_depth(const std::vector<LambdaTerm>& kids) {
  std::size_t d = 0;
  for (const auto& k : kids) d = std::max(d, k.depth());
  return d;
}

}  // namespace

LambdaTerm LambdaTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::constant(Value literal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->literal = std::move(literal);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::builtin(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Builtin;
  n->name = std::move(name);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::app(LambdaTerm fun, LambdaTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->kids = {std::move(fun), std::move(arg)};
  n->depth = 1 + max_depth(n->kids);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::abs(std::string bound, LambdaTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(bound);
  n->kids = {std::move(body)};
  n->depth = 1 + max_depth(n->kids);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::pair(LambdaTerm left, LambdaTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->kids = {std::move(left), std::move(right)};
  n->depth = 1 + max_depth(n->kids);
  return LambdaTerm(std::move(n));
}

LambdaTerm::Kind LambdaTerm::kind() const { return node_->kind; }
const std::string& LambdaTerm::name() const { return node_->name; }
const Value& LambdaTerm::literal() const {
  assert(kind() == Kind::Const);
  return *node_->literal;
}
const LambdaTerm& LambdaTerm::fun() const {
  assert(kind() == Kind::App);
  return node_->kids[0];
}
const LambdaTerm& LambdaTerm::arg() const {
  assert(kind() == Kind::App);
  return node_->kids[1];
}
const LambdaTerm& LambdaTerm::body() const {
  assert(kind() == Kind::Abs);
  return node_->kids[0];
}
const LambdaTerm& LambdaTerm::left() const {
  assert(kind() == Kind::Pair);
  return node_->kids[0];
}
const LambdaTerm& LambdaTerm::right() const {
  assert(kind() == Kind::Pair);
  return node_->kids[1];
}
std::size_t LambdaTerm::depth() const { return node_->depth; }

bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name) return false;
  if (a.kind() == LambdaTerm::Kind::Const && a.literal() != b.literal()) return false;
  return a.node_->kids == b.node_->kids;
}

struct Formula::Node {
  Kind kind;
  std::vector<std::string> names;
  std::optional<Value> literal;
  std::optional<TypeExpr> type;
  std::vector<Formula> kids;
};

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> formula_node(Formula::Kind kind, std::vector<std::string> names) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->names = std::move(names);
  return n;
}

}  // namespace

Formula Formula::eq_var(std::string x, std::string y) {
  return Formula(formula_node<Node>(Kind::EqVar, {std::move(x), std::move(y)}));
}

Formula Formula::eq_const(std::string x, Value literal) {
  auto n = formula_node<Node>(Kind::EqConst, {std::move(x)});
  n->literal = std::move(literal);
  return Formula(std::move(n));
}

Formula Formula::eq_cfun(std::string y, std::string g, std::string x) {
  return Formula(formula_node<Node>(Kind::EqCFun, {std::move(y), std::move(g), std::move(x)}));
}

Formula Formula::eq_pair(std::string z, std::string x, std::string y) {
  return Formula(formula_node<Node>(Kind::EqPair, {std::move(z), std::move(x), std::move(y)}));
}

Formula Formula::eq_app(std::string z, std::string x, std::string y) {
  return Formula(formula_node<Node>(Kind::EqApp, {std::move(z), std::move(x), std::move(y)}));
}

Formula Formula::mem(std::string y, std::string x) {
  return Formula(formula_node<Node>(Kind::Mem, {std::move(y), std::move(x)}));
}

Formula Formula::truth(bool value) {
  return Formula(formula_node<Node>(value ? Kind::True : Kind::False, {}));
}

Formula Formula::negation(Formula f) {
  auto n = formula_node<Node>(Kind::Not, {});
  n->kids = {std::move(f)};
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = formula_node<Node>(Kind::And, {});
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = formula_node<Node>(Kind::Or, {});
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  auto n = formula_node<Node>(Kind::Implies, {});
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, TypeExpr type, Formula body) {
  auto n = formula_node<Node>(Kind::Forall, {std::move(var)});
  n->type = std::move(type);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, TypeExpr type, Formula body) {
  auto n = formula_node<Node>(Kind::Exists, {std::move(var)});
  n->type = std::move(type);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_atomic() const {
  switch (kind()) {
    case Kind::EqVar:
    case Kind::EqConst:
    case Kind::EqCFun:
    case Kind::EqPair:
    case Kind::EqApp:
    case Kind::Mem: return true;
    default: return false;
  }
}

const std::vector<std::string>& Formula::names() const { return node_->names; }
const Value& Formula::literal() const {
  assert(kind() == Kind::EqConst);
  return *node_->literal;
}
const TypeExpr& Formula::type() const {
  assert(is_quantifier());
  return *node_->type;
}
const Formula& Formula::lhs() const {
  assert(!node_->kids.empty());
  return node_->kids[0];
}
const Formula& Formula::rhs() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.names() != b.names()) return false;
  if (a.kind() == Formula::Kind::EqConst && a.literal() != b.literal()) return false;
  if (a.is_quantifier() && !(a.type() == b.type())) return false;
  return a.node_->kids == b.node_->kids;
}

namespace {

void push_unique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

void collect_free(const LambdaTerm& t, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) push_unique(out, t.name());
      return;
    case LambdaTerm::Kind::Const:
    case LambdaTerm::Kind::Builtin: return;
    case LambdaTerm::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case LambdaTerm::Kind::Pair:
      collect_free(t.left(), bound, out);
      collect_free(t.right(), bound, out);
      return;
    case LambdaTerm::Kind::Abs:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto use = [&](const std::string& n) {
    if (std::find(bound.begin(), bound.end(), n) == bound.end()) push_unique(out, n);
  };
  switch (f.kind()) {
    case Formula::Kind::EqCFun:
      use(f.names()[0]);
      use(f.names()[2]);
      return;
    case Formula::Kind::EqVar:
    case Formula::Kind::EqConst:
    case Formula::Kind::EqPair:
    case Formula::Kind::EqApp:
    case Formula::Kind::Mem:
      for (const auto& n : f.names()) use(n);
      return;
    case Formula::Kind::True:
    case Formula::Kind::False: return;
    case Formula::Kind::Not: collect_free(f.lhs(), bound, out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.names()[0]);
      collect_free(f.lhs(), bound, out);
      bound.pop_back();
      return;
  }
}

class Renamer {
 public:
  Renamer(const LambdaTerm& t, const std::vector<std::string>& avoid) : used_(avoid.begin(), avoid.end()) {
    for (auto& n : free_vars(t)) used_.insert(n);
  }

  LambdaTerm run(const LambdaTerm& t, std::map<std::string, std::string>& scope) {
    switch (t.kind()) {
      case LambdaTerm::Kind::Var: {
        auto it = scope.find(t.name());
        return it == scope.end() || it->second == t.name() ? t : LambdaTerm::var(it->second);
      }
      case LambdaTerm::Kind::Const:
      case LambdaTerm::Kind::Builtin: return t;
      case LambdaTerm::Kind::App: return LambdaTerm::app(run(t.fun(), scope), run(t.arg(), scope));
      case LambdaTerm::Kind::Pair: return LambdaTerm::pair(run(t.left(), scope), run(t.right(), scope));
      case LambdaTerm::Kind::Abs: {
        std::string fresh = t.name();
        for (int k = 1; used_.count(fresh) != 0; ++k) fresh = t.name() + std::to_string(k);
        used_.insert(fresh);
        auto saved = scope.find(t.name());
        std::optional<std::string> previous;
        if (saved != scope.end()) previous = saved->second;
        scope[t.name()] = fresh;
        LambdaTerm body = run(t.body(), scope);
        if (previous) {
          scope[t.name()] = *previous;
        } else {
          scope.erase(t.name());
        }
        return LambdaTerm::abs(fresh, std::move(body));
      }
    }
    return t;
  }

 private:
  std::set<std::string> used_;
};

void collect_bound(const LambdaTerm& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var:
    case LambdaTerm::Kind::Const:
    case LambdaTerm::Kind::Builtin: return;
    case LambdaTerm::Kind::App:
      collect_bound(t.fun(), out);
      collect_bound(t.arg(), out);
      return;
    case LambdaTerm::Kind::Pair:
      collect_bound(t.left(), out);
      collect_bound(t.right(), out);
      return;
    case LambdaTerm::Kind::Abs:
      out.push_back(t.name());
      collect_bound(t.body(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> free_vars(const LambdaTerm& term) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(term, bound, out);
  return out;
}

std::vector<std::string> free_vars(const Formula& formula) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(formula, bound, out);
  return out;
}

LambdaTerm alpha_rename(const LambdaTerm& term, const std::vector<std::string>& avoid) {
  Renamer renamer(term, avoid);
  std::map<std::string, std::string> scope;
  return renamer.run(term, scope);
}

std::vector<std::string> bound_vars(const LambdaTerm& term) {
  std::vector<std::string> out;
  collect_bound(term, out);
  return out;
}

namespace {

// Term levels: 0 top (abstraction allowed bare), 1 application head,
// 2 application argument.
std::string render_term(const LambdaTerm& t, int level) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var:
    case LambdaTerm::Kind::Builtin: return t.name();
    case LambdaTerm::Kind::Const: return literal_syntax(t.literal());
    case LambdaTerm::Kind::Pair:
      return "[" + render_term(t.left(), 0) + ", " + render_term(t.right(), 0) + "]";
    case LambdaTerm::Kind::Abs: {
      std::string s = "\\" + t.name() + ". " + render_term(t.body(), 0);
      return level > 0 ? "(" + s + ")" : s;
    }
    case LambdaTerm::Kind::App: {
      std::string s = render_term(t.fun(), 1) + " " + render_term(t.arg(), 2);
      return level > 1 ? "(" + s + ")" : s;
    }
  }
  return {};
}

// Formula levels: 0 implication, 1 disjunction, 2 conjunction, 3 negation.
std::string render_formula(const Formula& f, int level) {
  const auto& n = f.names();
  auto wrap = [&](std::string s, int own) { return level > own ? "(" + s + ")" : s; };
  switch (f.kind()) {
    case Formula::Kind::EqVar: return n[0] + " = " + n[1];
    case Formula::Kind::EqConst: return n[0] + " = " + literal_syntax(f.literal());
    case Formula::Kind::EqCFun: return n[0] + " = " + n[1] + " " + n[2];
    case Formula::Kind::EqPair: return n[0] + " = [" + n[1] + ", " + n[2] + "]";
    case Formula::Kind::EqApp: return n[0] + " = " + n[1] + "(" + n[2] + ")";
    case Formula::Kind::Mem: return n[0] + " in " + n[1];
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Not: return wrap("not " + render_formula(f.lhs(), 3), 3);
    case Formula::Kind::And:
      return wrap(render_formula(f.lhs(), 2) + " and " + render_formula(f.rhs(), 3), 2);
    case Formula::Kind::Or:
      return wrap(render_formula(f.lhs(), 1) + " or " + render_formula(f.rhs(), 2), 1);
    case Formula::Kind::Implies:
      return wrap(render_formula(f.lhs(), 1) + " -> " + render_formula(f.rhs(), 0), 0);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string q = f.kind() == Formula::Kind::Forall ? "forall " : "exists ";
      return wrap(q + n[0] + ":" + render(f.type()) + ". " + render_formula(f.lhs(), 0), 0);
    }
  }
  return {};
}

std::string dump_term(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var: return "Var(" + t.name() + ")";
    case LambdaTerm::Kind::Builtin: return "Builtin(" + t.name() + ")";
    case LambdaTerm::Kind::Const: return "Const(" + literal_syntax(t.literal()) + ")";
    case LambdaTerm::Kind::Pair: return "PairT(" + dump_term(t.left()) + ", " + dump_term(t.right()) + ")";
    case LambdaTerm::Kind::Abs: return "Abs(" + t.name() + ", " + dump_term(t.body()) + ")";
    case LambdaTerm::Kind::App: return "App(" + dump_term(t.fun()) + ", " + dump_term(t.arg()) + ")";
  }
  return {};
}

std::string dump_formula(const Formula& f) {
  const auto& n = f.names();
  switch (f.kind()) {
    case Formula::Kind::EqVar: return "EqVar(" + n[0] + ", " + n[1] + ")";
    case Formula::Kind::EqConst: return "EqConst(" + n[0] + ", " + literal_syntax(f.literal()) + ")";
    case Formula::Kind::EqCFun: return "EqCFun(" + n[0] + ", " + n[1] + ", " + n[2] + ")";
    case Formula::Kind::EqPair: return "EqPair(" + n[0] + ", " + n[1] + ", " + n[2] + ")";
    case Formula::Kind::EqApp: return "EqApp(" + n[0] + ", " + n[1] + ", " + n[2] + ")";
    case Formula::Kind::Mem: return "Mem(" + n[0] + ", " + n[1] + ")";
    case Formula::Kind::True: return "True";
    case Formula::Kind::False: return "False";
    case Formula::Kind::Not: return "Not(" + dump_formula(f.lhs()) + ")";
    case Formula::Kind::And: return "And(" + dump_formula(f.lhs()) + ", " + dump_formula(f.rhs()) + ")";
    case Formula::Kind::Or: return "Or(" + dump_formula(f.lhs()) + ", " + dump_formula(f.rhs()) + ")";
    case Formula::Kind::Implies:
      return "Implies(" + dump_formula(f.lhs()) + ", " + dump_formula(f.rhs()) + ")";
    case Formula::Kind::Forall:
      return "Forall(" + n[0] + ", " + render(f.type()) + ", " + dump_formula(f.lhs()) + ")";
    case Formula::Kind::Exists:
      return "Exists(" + n[0] + ", " + render(f.type()) + ", " + dump_formula(f.lhs()) + ")";
  }
  return {};
}

}  // namespace

std::string render(const LambdaTerm& term) { return render_term(term, 0); }
std::string render(const Formula& formula) { return render_formula(formula, 0); }
std::string render(const Description& d) {
  return "iota " + d.bound + ":" + render(d.type) + ". " + render(d.body);
}
std::string dump(const LambdaTerm& term) { return dump_term(term); }
std::string dump(const Formula& formula) { return dump_formula(formula); }

}  // namespace objeval
