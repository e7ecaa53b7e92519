#include "objeval/generate.hpp"

#include <string>

#include "objeval/parser.hpp"

namespace objeval {

namespace {

const TypeExpr& nat() {
  static const TypeExpr t = TypeExpr::base("nat");
  return t;
}

const TypeExpr& atom() {
  static const TypeExpr t = TypeExpr::base("atom");
  return t;
}

TypeExpr endo(const TypeExpr& t) { return TypeExpr::arrow(t, t); }

// (nat -> nat) -> nat
TypeExpr higher() { return TypeExpr::arrow(endo(nat()), nat()); }

// Smallest depth at which a closed term of the type exists.
std::size_t min_depth(const TypeExpr& t) {
  if (t == nat() || t == atom() || t == endo(nat()) || t == endo(atom())) return 1;
  if (t.kind() == TypeExpr::Kind::Prod) return 1 + std::max(min_depth(t.left()), min_depth(t.right()));
  if (t == higher()) return 3;
  return 100;
}

struct Entry {
  std::string name;
  TypeExpr type;
};

class TermGen {
 public:
  explicit TermGen(Rng& rng) : rng_(rng) {}

  LambdaTerm gen(const TypeExpr& t, std::size_t depth, const std::vector<Entry>& ctx) {
    std::vector<std::function<LambdaTerm()>> leaves;
    std::vector<std::function<LambdaTerm()>> nodes;

    for (const auto& name : visible(ctx, t)) leaves.push_back([name] { return LambdaTerm::var(name); });
    if (t == nat()) {
      leaves.push_back([this] { return LambdaTerm::constant(Value::integer(static_cast<std::int64_t>(pick(rng_, 5)))); });
    }
    if (t == atom()) {
      leaves.push_back([this] { return LambdaTerm::constant(Value::atom("a" + std::to_string(pick(rng_, 5)))); });
    }
    if (t == endo(nat())) leaves.push_back([] { return LambdaTerm::builtin("succ"); });
    if (t == endo(nat()) || t == endo(atom())) leaves.push_back([] { return LambdaTerm::builtin("id"); });

    if (depth >= 2) {
      if (t == nat()) {
        nodes.push_back([=, this] { return LambdaTerm::app(LambdaTerm::builtin("succ"), gen(nat(), depth - 1, ctx)); });
      }
      if (t == nat() && depth >= 3) {
        nodes.push_back([=, this] {
          LambdaTerm l = gen(nat(), depth - 2, ctx);
          LambdaTerm r = gen(nat(), depth - 2, ctx);
          return LambdaTerm::app(LambdaTerm::builtin("+"), LambdaTerm::pair(l, r));
        });
      }
      if (min_depth(t) < depth) {
        nodes.push_back([=, this] { return LambdaTerm::app(LambdaTerm::builtin("id"), gen(t, depth - 1, ctx)); });
      }
      for (const TypeExpr& x : {nat(), atom(), endo(nat())}) {
        for (const auto& f : visible(ctx, TypeExpr::arrow(x, t))) {
          if (min_depth(x) < depth) {
            nodes.push_back([=, this] { return LambdaTerm::app(LambdaTerm::var(f), gen(x, depth - 1, ctx)); });
          }
        }
        // A beta redex (\v. body) arg.
        if (min_depth(t) + 2 <= depth && min_depth(x) < depth) {
          nodes.push_back([=, this] {
            std::string v = binder();
            std::vector<Entry> inner = ctx;
            inner.push_back({v, x});
            LambdaTerm body = gen(t, depth - 2, inner);
            LambdaTerm arg = gen(x, depth - 1, ctx);
            return LambdaTerm::app(LambdaTerm::abs(v, body), arg);
          });
        }
      }
      if (t.kind() == TypeExpr::Kind::Arrow && min_depth(t.right()) < depth) {
        nodes.push_back([=, this] {
          std::string v = binder();
          std::vector<Entry> inner = ctx;
          inner.push_back({v, t.left()});
          return LambdaTerm::abs(v, gen(t.right(), depth - 1, inner));
        });
      }
      if (t.kind() == TypeExpr::Kind::Prod && min_depth(t) <= depth) {
        nodes.push_back([=, this] {
          LambdaTerm l = gen(t.left(), depth - 1, ctx);
          LambdaTerm r = gen(t.right(), depth - 1, ctx);
          return LambdaTerm::pair(l, r);
        });
      }
    }

    bool prefer_leaf = !leaves.empty() && (nodes.empty() || pick(rng_, 3) == 0);
    if (prefer_leaf) return leaves[pick(rng_, leaves.size())]();
    return nodes[pick(rng_, nodes.size())]();
  }

 private:
  // Names whose latest entry has the type.
  static std::vector<std::string> visible(const std::vector<Entry>& ctx, const TypeExpr& t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      bool shadowed = false;
      for (std::size_t j = i + 1; j < ctx.size(); ++j) shadowed = shadowed || ctx[j].name == ctx[i].name;
      if (!shadowed && ctx[i].type == t) out.push_back(ctx[i].name);
    }
    return out;
  }

  std::string binder() {
    static const char* pool[] = {"x", "y", "z", "p"};
    return pool[pick(rng_, 4)];
  }

  Rng& rng_;
};

}  // namespace

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

TermCase random_term(Rng& rng, std::size_t max_depth) {
  static const char* names[] = {"p", "q", "r"};
  std::vector<Entry> ctx;
  Bindings bindings;
  std::size_t k = pick(rng, 4);
  for (std::size_t i = 0; i < k; ++i) {
    switch (pick(rng, 3)) {
      case 0:
        ctx.push_back({names[i], nat()});
        bindings.emplace_back(names[i], Value::integer(static_cast<std::int64_t>(pick(rng, 5))));
        break;
      case 1:
        ctx.push_back({names[i], atom()});
        bindings.emplace_back(names[i], Value::atom("a" + std::to_string(pick(rng, 5))));
        break;
      default:
        ctx.push_back({names[i], endo(nat())});
        bindings.emplace_back(names[i], parse_literal("builtin:succ"));
        break;
    }
  }
  static const TypeExpr results[] = {nat(), atom(), TypeExpr::prod(nat(), atom())};
  TypeExpr result = results[pick(rng, 3)];
  if (min_depth(result) > max_depth) result = nat();
  TermGen g(rng);
  // Now and then a higher-order function applied to a function.
  if (max_depth >= 5 && pick(rng, 6) == 0) {
    LambdaTerm f = g.gen(higher(), max_depth - 1, ctx);
    LambdaTerm a = g.gen(endo(nat()), max_depth - 1, ctx);
    return TermCase{LambdaTerm::app(f, a), std::move(bindings)};
  }
  return TermCase{g.gen(result, max_depth, ctx), std::move(bindings)};
}

std::vector<std::vector<std::size_t>> size_profiles(std::size_t max_stages, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_stages) return;
    for (std::size_t s = lo; s <= max_size; ++s) {
      cur.push_back(s);
      rec(s);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

// Every function from n elements to m elements, as index vectors.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> d(n, 0);
  while (true) {
    out.push_back(d);
    std::size_t k = n;
    while (k > 0 && ++d[k - 1] == m) d[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

Model full_model(const std::vector<std::size_t>& stage_sizes, const std::vector<std::size_t>& type_sizes,
                 bool with_transitions) {
  Model m;
  std::vector<std::string> stage_names;
  for (std::size_t s = 0; s < stage_sizes.size(); ++s) {
    std::string name = "S" + std::to_string(s);
    stage_names.push_back(name);
    auto& elems = m.cat.stages[name];
    for (std::size_t i = 0; i < stage_sizes[s]; ++i) elems.push_back("s" + std::to_string(s) + "_" + std::to_string(i));
  }
  for (std::size_t a = 0; a < stage_sizes.size(); ++a) {
    for (std::size_t b = 0; b < stage_sizes.size(); ++b) {
      const auto& dom = m.cat.stages[stage_names[a]];
      const auto& cod = m.cat.stages[stage_names[b]];
      std::size_t k = 0;
      for (const auto& f : all_maps(dom.size(), cod.size())) {
        StageArrow arr{stage_names[a] + "_" + stage_names[b] + "_" + std::to_string(k++), stage_names[a], stage_names[b], {}};
        for (std::size_t i = 0; i < f.size(); ++i) arr.map[dom[i]] = cod[f[i]];
        m.cat.arrows[arr.name] = std::move(arr);
      }
    }
  }
  std::vector<std::string> type_names;
  for (std::size_t t = 0; t < type_sizes.size(); ++t) {
    std::string name = "T" + std::to_string(t);
    type_names.push_back(name);
    auto& elems = m.car.types[name];
    for (std::size_t i = 0; i < type_sizes[t]; ++i) elems.push_back(Value::atom("t" + std::to_string(i)));
  }
  if (with_transitions) {
    for (std::size_t a = 0; a < type_sizes.size(); ++a) {
      for (std::size_t b = 0; b < type_sizes.size(); ++b) {
        const auto& dom = m.car.types[type_names[a]];
        const auto& cod = m.car.types[type_names[b]];
        std::size_t k = 0;
        for (const auto& f : all_maps(dom.size(), cod.size())) {
          Transition tr{type_names[a] + "_" + type_names[b] + "_" + std::to_string(k++), type_names[a], type_names[b], {}};
          for (std::size_t i = 0; i < f.size(); ++i) tr.map[dom[i]] = cod[f[i]];
          m.car.transitions[tr.name] = std::move(tr);
        }
      }
    }
  }
  return m;
}

}  // namespace objeval
