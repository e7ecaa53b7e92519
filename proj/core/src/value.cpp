#include "objeval/value.hpp"

#include <algorithm>
#include <cassert>

#include "objeval/comb.hpp"
#include "objeval/error.hpp"

namespace objeval {

struct Value::Node {
  Kind kind;
  std::int64_t number = 0;  // Int payload, Bool as 0/1
  std::string name;
  std::vector<Value> items;  // Pair: 2, Set: n, Closure: env
  std::vector<std::pair<Value, Value>> graph;  // Fun, sorted by argument
  std::optional<CombTerm> body;
};

Value::Value() : Value(unit()) {}

Value Value::integer(std::int64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Int;
  node->number = n;
  return Value(std::move(node));
}

Value Value::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Name;
  node->name = std::move(name);
  return Value(std::move(node));
}

Value Value::pair(Value left, Value right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->items = {std::move(left), std::move(right)};
  return Value(std::move(node));
}

Value Value::closure(CombTerm body, Value captured) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Closure;
  node->items = {std::move(captured)};
  node->body = std::move(body);
  return Value(std::move(node));
}

Value Value::set(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Set;
  node->items = std::move(elements);
  return Value(std::move(node));
}

Value Value::fun(std::vector<std::pair<Value, Value>> graph) {
  std::sort(graph.begin(), graph.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < graph.size(); ++i) {
    if (graph[i - 1].first == graph[i].first) {
      if (graph[i - 1].second == graph[i].second) continue;
      throw Error(ErrorKind::TypeMismatch,
                  "finite function maps " + render(graph[i].first) + " twice");
    }
  }
  graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Fun;
  node->graph = std::move(graph);
  return Value(std::move(node));
}

Value Value::boolean(bool b) {
  static const Value t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bool;
    n->number = 1;
    return Value(std::move(n));
  }();
  static const Value f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bool;
    return Value(std::move(n));
  }();
  return b ? t : f;
}

Value Value::unit() {
  static const Value u(std::make_shared<const Node>(Node{Kind::Unit, 0, {}, {}, {}, {}}));
  return u;
}

Value Value::placeholder() {
  static const Value p(std::make_shared<const Node>(Node{Kind::Placeholder, 0, {}, {}, {}, {}}));
  return p;
}

Value::Kind Value::kind() const { return node_->kind; }

std::int64_t Value::as_int() const {
  assert(kind() == Kind::Int);
  return node_->number;
}

const std::string& Value::atom_name() const {
  assert(kind() == Kind::Name);
  return node_->name;
}

bool Value::as_bool() const {
  assert(kind() == Kind::Bool);
  return node_->number != 0;
}

const Value& Value::first() const {
  assert(kind() == Kind::Pair);
  return node_->items[0];
}

const Value& Value::second() const {
  assert(kind() == Kind::Pair);
  return node_->items[1];
}

const CombTerm& Value::closure_body() const {
  assert(kind() == Kind::Closure);
  return *node_->body;
}

const Value& Value::closure_env() const {
  assert(kind() == Kind::Closure);
  return node_->items[0];
}

std::span<const Value> Value::elements() const {
  assert(kind() == Kind::Set);
  return node_->items;
}

std::span<const std::pair<Value, Value>> Value::graph() const {
  assert(kind() == Kind::Fun);
  return node_->graph;
}

bool Value::contains(const Value& element) const {
  assert(kind() == Kind::Set);
  return std::binary_search(node_->items.begin(), node_->items.end(), element);
}

std::optional<Value> Value::lookup(const Value& arg) const {
  assert(kind() == Kind::Fun);
  const auto& g = node_->graph;
  auto it = std::lower_bound(g.begin(), g.end(), arg,
                             [](const auto& entry, const Value& v) { return entry.first < v; });
  if (it == g.end() || it->first != arg) return std::nullopt;
  return it->second;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Value::Kind::Int:
    case Value::Kind::Bool: return a.node_->number <=> b.node_->number;
    case Value::Kind::Name: return a.node_->name <=> b.node_->name;
    case Value::Kind::Unit:
    case Value::Kind::Placeholder: return std::strong_ordering::equal;
    case Value::Kind::Closure:
      if (auto c = *a.node_->body <=> *b.node_->body; c != 0) return c;
      return a.node_->items[0] <=> b.node_->items[0];
    case Value::Kind::Fun:
      return std::lexicographical_compare_three_way(a.node_->graph.begin(), a.node_->graph.end(),
                                                    b.node_->graph.begin(), b.node_->graph.end());
    case Value::Kind::Pair:
    case Value::Kind::Set:
      return std::lexicographical_compare_three_way(a.node_->items.begin(), a.node_->items.end(),
                                                    b.node_->items.begin(), b.node_->items.end());
  }
  return std::strong_ordering::equal;
}

std::string render(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::Int: return std::to_string(value.as_int());
    case Value::Kind::Name: return value.atom_name();
    case Value::Kind::Bool: return value.as_bool() ? "true" : "false";
    case Value::Kind::Unit: return "()";
    case Value::Kind::Placeholder: return "?";
    case Value::Kind::Pair: return "[" + render(value.first()) + ", " + render(value.second()) + "]";
    case Value::Kind::Closure:
      return "closure(" + render(value.closure_body()) + "; " + render(value.closure_env()) + ")";
    case Value::Kind::Set: {
      std::string s = "{";
      bool first = true;
      for (const auto& e : value.elements()) {
        if (!first) s += ", ";
        first = false;
        s += render(e);
      }
      return s + "}";
    }
    case Value::Kind::Fun: {
      std::string s = "fun{";
      bool first = true;
      for (const auto& [arg, res] : value.graph()) {
        if (!first) s += ", ";
        first = false;
        s += render(arg) + " -> " + render(res);
      }
      return s + "}";
    }
  }
  return {};
}

std::string literal_syntax(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::Name: return "atom:" + value.atom_name();
    case Value::Kind::Pair:
      return "[" + literal_syntax(value.first()) + ", " + literal_syntax(value.second()) + "]";
    case Value::Kind::Set: {
      std::string s = "{";
      bool first = true;
      for (const auto& e : value.elements()) {
        if (!first) s += ", ";
        first = false;
        s += literal_syntax(e);
      }
      return s + "}";
    }
    case Value::Kind::Fun: {
      std::string s = "fun{";
      bool first = true;
      for (const auto& [arg, res] : value.graph()) {
        if (!first) s += ", ";
        first = false;
        s += literal_syntax(arg) + " -> " + literal_syntax(res);
      }
      return s + "}";
    }
    default: return render(value);
  }
}

}  // namespace objeval
