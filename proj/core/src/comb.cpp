#include "objeval/comb.hpp"

#include <cassert>
#include <optional>
#include <string_view>
#include <vector>

namespace objeval {

struct CombTerm::Node {
  Kind kind;
  std::vector<CombTerm> kids;
  std::optional<Value> value;
  std::string name;
  std::optional<TypeExpr> type;
  std::size_t size = 1;
};

std::shared_ptr<const CombTerm::Node> CombTerm::leaf(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

CombTerm CombTerm::id() {
  static const CombTerm t(leaf(Kind::Id));
  return t;
}

CombTerm CombTerm::fst() {
  static const CombTerm t(leaf(Kind::Fst));
  return t;
}

CombTerm CombTerm::snd() {
  static const CombTerm t(leaf(Kind::Snd));
  return t;
}

CombTerm CombTerm::eps() {
  static const CombTerm t(leaf(Kind::Eps));
  return t;
}

CombTerm CombTerm::compose(CombTerm outer, CombTerm inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comp;
  n->size = 1 + outer.size() + inner.size();
  n->kids = {std::move(outer), std::move(inner)};
  return CombTerm(std::move(n));
}

CombTerm CombTerm::pair(CombTerm left, CombTerm right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->size = 1 + left.size() + right.size();
  n->kids = {std::move(left), std::move(right)};
  return CombTerm(std::move(n));
}

CombTerm CombTerm::cur(CombTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cur;
  n->size = 1 + body.size();
  n->kids = {std::move(body)};
  return CombTerm(std::move(n));
}

CombTerm CombTerm::constant(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = std::move(v);
  return CombTerm(std::move(n));
}

CombTerm CombTerm::prim(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prim;
  n->name = std::move(name);
  return CombTerm(std::move(n));
}

CombTerm CombTerm::can(TypeExpr type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Can;
  n->type = std::move(type);
  return CombTerm(std::move(n));
}

CombTerm::Kind CombTerm::kind() const { return node_->kind; }

const CombTerm& CombTerm::outer() const {
  assert(kind() == Kind::Comp);
  return node_->kids[0];
}

const CombTerm& CombTerm::inner() const {
  assert(kind() == Kind::Comp);
  return node_->kids[1];
}

const CombTerm& CombTerm::left() const {
  assert(kind() == Kind::Pair);
  return node_->kids[0];
}

const CombTerm& CombTerm::right() const {
  assert(kind() == Kind::Pair);
  return node_->kids[1];
}

const CombTerm& CombTerm::body() const {
  assert(kind() == Kind::Cur);
  return node_->kids[0];
}

const Value& CombTerm::value() const {
  assert(kind() == Kind::Const);
  return *node_->value;
}

const std::string& CombTerm::name() const {
  assert(kind() == Kind::Prim);
  return node_->name;
}

const TypeExpr& CombTerm::type() const {
  assert(kind() == Kind::Can);
  return *node_->type;
}

std::size_t CombTerm::size() const { return node_->size; }

std::strong_ordering operator<=>(const CombTerm& a, const CombTerm& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case CombTerm::Kind::Const: return a.value() <=> b.value();
    case CombTerm::Kind::Prim: return a.name() <=> b.name();
    case CombTerm::Kind::Can:
      if (a.type() == b.type()) return std::strong_ordering::equal;
      return a.type() < b.type() ? std::strong_ordering::less : std::strong_ordering::greater;
    default:
      return std::lexicographical_compare_three_way(a.node_->kids.begin(), a.node_->kids.end(),
                                                    b.node_->kids.begin(), b.node_->kids.end());
  }
}

bool operator==(const CombTerm& a, const CombTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.size() != b.size()) return false;
  return (a <=> b) == 0;
}

CombTerm comp(const CombTerm& a, const CombTerm& b) {
  if (a.kind() == CombTerm::Kind::Id) return b;
  if (b.kind() == CombTerm::Kind::Id) return a;
  if (a.kind() == CombTerm::Kind::Comp) return comp(a.outer(), comp(a.inner(), b));
  return CombTerm::compose(a, b);
}

CombTerm fst_power(std::size_t k) {
  CombTerm t = CombTerm::id();
  for (std::size_t i = 0; i < k; ++i) t = comp(CombTerm::fst(), t);
  return t;
}

CombTerm builtin_arrow(const std::string& name) {
  constexpr std::string_view kCan = "can_";
  if (name.size() > kCan.size() && name.compare(0, kCan.size(), kCan) == 0) {
    return CombTerm::can(TypeExpr::base(name.substr(kCan.size())));
  }
  return CombTerm::prim(name);
}

namespace {

std::string render_term(const CombTerm& t) {
  using K = CombTerm::Kind;
  switch (t.kind()) {
    case K::Id: return "Id";
    case K::Fst: return "Fst";
    case K::Snd: return "Snd";
    case K::Eps: return "Eps";
    case K::Cur: return "Cur(" + render_term(t.body()) + ")";
    case K::Pair: return "<" + render_term(t.left()) + ", " + render_term(t.right()) + ">";
    case K::Const: return "Const(" + render(t.value()) + ")";
    case K::Prim: return "Prim(" + t.name() + ")";
    case K::Can: return "Can(" + render(t.type()) + ")";
    case K::Comp: {
      std::string outer = render_term(t.outer());
      if (t.outer().kind() == K::Comp) outer = "(" + outer + ")";
      return outer + " . " + render_term(t.inner());
    }
  }
  return {};
}

}  // namespace

std::string render(const CombTerm& term) { return render_term(term); }

}  // namespace objeval
