#include "objeval/normalize.hpp"

#include <optional>

namespace objeval {

namespace {

using K = CombTerm::Kind;

bool is(const CombTerm& t, K k) { return t.kind() == k; }

// Matches <Cur(h) . Fst, Snd> and yields h.
std::optional<CombTerm> r1_body(const CombTerm& arg) {
  if (!is(arg, K::Pair) || !is(arg.right(), K::Snd)) return std::nullopt;
  const CombTerm& l = arg.left();
  if (!is(l, K::Comp) || !is(l.outer(), K::Cur) || !is(l.inner(), K::Fst)) return std::nullopt;
  return l.outer().body();
}

// Matches Eps . <k . Fst, Snd> (or Eps alone, standing for Eps . <Fst, Snd>)
// and yields k.
std::optional<CombTerm> r2_body(const CombTerm& body) {
  if (is(body, K::Eps)) return CombTerm::id();
  if (!is(body, K::Comp) || !is(body.outer(), K::Eps)) return std::nullopt;
  const CombTerm& arg = body.inner();
  if (!is(arg, K::Pair) || !is(arg.right(), K::Snd)) return std::nullopt;
  const CombTerm& l = arg.left();
  if (is(l, K::Comp) && is(l.inner(), K::Fst)) return l.outer();
  return std::nullopt;
}

class Normalizer {
 public:
  Normalizer(const TraceSink& trace, NormalizeStats& stats) : trace_(trace), stats_(stats) {}

  CombTerm run(const CombTerm& t) {
    switch (t.kind()) {
      case K::Comp: return mk_comp(run(t.outer()), run(t.inner()));
      case K::Pair: return mk_pair(run(t.left()), run(t.right()));
      case K::Cur: return mk_cur(run(t.body()));
      default: return t;
    }
  }

 private:
  void fire(const char* rule, const CombTerm& before, const CombTerm& after) {
    ++stats_.rule_steps;
    if (trace_) trace_(std::string(rule) + ": " + render(before) + " ~> " + render(after));
  }

  CombTerm mk_comp(const CombTerm& a, const CombTerm& b) {
    if (is(a, K::Id)) {
      fire("R6", CombTerm::compose(a, b), b);
      return b;
    }
    if (is(b, K::Id)) {
      fire("R6", CombTerm::compose(a, b), a);
      return a;
    }
    if (is(a, K::Comp)) {
      ++stats_.assoc_steps;
      if (trace_) {
        trace_("Assoc: " + render(CombTerm::compose(a, b)) + " ~> " +
               render(CombTerm::compose(a.outer(), CombTerm::compose(a.inner(), b))));
      }
      return mk_comp(a.outer(), mk_comp(a.inner(), b));
    }
    if (is(a, K::Pair)) {
      fire("R5", CombTerm::compose(a, b),
           CombTerm::pair(CombTerm::compose(a.left(), b), CombTerm::compose(a.right(), b)));
      return mk_pair(mk_comp(a.left(), b), mk_comp(a.right(), b));
    }
    if (is(b, K::Pair)) {
      if (is(a, K::Fst)) {
        fire("R3", CombTerm::compose(a, b), b.left());
        return b.left();
      }
      if (is(a, K::Snd)) {
        fire("R4", CombTerm::compose(a, b), b.right());
        return b.right();
      }
      if (is(a, K::Eps)) {
        if (auto h = r1_body(b)) {
          fire("R1", CombTerm::compose(a, b), *h);
          return *h;
        }
      }
    }
    return CombTerm::compose(a, b);
  }

  CombTerm mk_pair(const CombTerm& a, const CombTerm& b) {
    if (is(a, K::Fst) && is(b, K::Snd)) {
      fire("R7", CombTerm::pair(a, b), CombTerm::id());
      return CombTerm::id();
    }
    return CombTerm::pair(a, b);
  }

  CombTerm mk_cur(const CombTerm& body) {
    if (auto k = r2_body(body)) {
      fire("R2", CombTerm::cur(body), *k);
      return *k;
    }
    return CombTerm::cur(body);
  }

  const TraceSink& trace_;
  NormalizeStats& stats_;
};

}  // namespace

CombTerm normalize(const CombTerm& term, const TraceSink& trace, NormalizeStats* stats) {
  NormalizeStats local;
  Normalizer n(trace, stats ? *stats : local);
  return n.run(term);
}

bool is_normal(const CombTerm& t) {
  switch (t.kind()) {
    case K::Comp: {
      const CombTerm& a = t.outer();
      const CombTerm& b = t.inner();
      if (is(a, K::Id) || is(b, K::Id) || is(a, K::Comp) || is(a, K::Pair)) return false;
      if (is(b, K::Pair) && (is(a, K::Fst) || is(a, K::Snd) || (is(a, K::Eps) && r1_body(b)))) {
        return false;
      }
      return is_normal(a) && is_normal(b);
    }
    case K::Pair:
      if (is(t.left(), K::Fst) && is(t.right(), K::Snd)) return false;
      return is_normal(t.left()) && is_normal(t.right());
    case K::Cur:
      if (r2_body(t.body())) return false;
      return is_normal(t.body());
    default: return true;
  }
}

bool equivalent(const CombTerm& a, const CombTerm& b) { return normalize(a) == normalize(b); }

}  // namespace objeval
