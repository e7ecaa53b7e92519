#include "objeval/types.hpp"

#include <cassert>
#include <string_view>
#include <vector>

namespace objeval {

struct TypeExpr::Node {
  Kind kind;
  std::string name;
  std::vector<TypeExpr> kids;
};

namespace {

constexpr std::string_view kUnknownName = "?";

}  // namespace

TypeExpr TypeExpr::base(std::string name) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Base, std::move(name), {}}));
}

TypeExpr TypeExpr::unit() {
  static const TypeExpr t(std::make_shared<const Node>(Node{Kind::Unit, {}, {}}));
  return t;
}

TypeExpr TypeExpr::prod(TypeExpr left, TypeExpr right) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Prod, {}, {std::move(left), std::move(right)}}));
}

TypeExpr TypeExpr::arrow(TypeExpr from, TypeExpr to) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Arrow, {}, {std::move(from), std::move(to)}}));
}

TypeExpr TypeExpr::power(TypeExpr element) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Power, {}, {std::move(element)}}));
}

TypeExpr TypeExpr::truth() {
  static const TypeExpr t(std::make_shared<const Node>(Node{Kind::Truth, {}, {}}));
  return t;
}

TypeExpr TypeExpr::unknown() {
  static const TypeExpr t = base(std::string(kUnknownName));
  return t;
}

bool TypeExpr::is_unknown() const { return node_->kind == Kind::Base && node_->name == kUnknownName; }

TypeExpr::Kind TypeExpr::kind() const { return node_->kind; }

const std::string& TypeExpr::name() const {
  assert(node_->kind == Kind::Base);
  return node_->name;
}

const TypeExpr& TypeExpr::left() const {
  assert(!node_->kids.empty());
  return node_->kids[0];
}

const TypeExpr& TypeExpr::right() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeExpr::Kind::Base: return a.name() == b.name();
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Truth: return true;
    case TypeExpr::Kind::Power: return a.left() == b.left();
    case TypeExpr::Kind::Prod:
    case TypeExpr::Kind::Arrow: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator<(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case TypeExpr::Kind::Base: return a.name() < b.name();
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Truth: return false;
    case TypeExpr::Kind::Power: return a.left() < b.left();
    case TypeExpr::Kind::Prod:
    case TypeExpr::Kind::Arrow:
      if (a.left() == b.left()) return a.right() < b.right();
      return a.left() < b.left();
  }
  return false;
}

namespace {

// Precedence levels: 0 arrow, 1 product, 2 atomic.
std::string render_at(const TypeExpr& t, int level) {
  switch (t.kind()) {
    case TypeExpr::Kind::Base: return t.name();
    case TypeExpr::Kind::Unit: return "1";
    case TypeExpr::Kind::Truth: return "Omega";
    case TypeExpr::Kind::Power: return "[" + render_at(t.left(), 0) + "]";
    case TypeExpr::Kind::Prod: {
      // '*' associates to the left.
      std::string s = render_at(t.left(), 1) + " * " + render_at(t.right(), 2);
      return level > 1 ? "(" + s + ")" : s;
    }
    case TypeExpr::Kind::Arrow: {
      std::string s = render_at(t.left(), 1) + " -> " + render_at(t.right(), 0);
      return level > 0 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

std::string render(const TypeExpr& type) { return render_at(type, 0); }

}  // namespace objeval
