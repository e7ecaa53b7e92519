#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "objeval/compiler.hpp"
#include "objeval/domain.hpp"
#include "objeval/error.hpp"
#include "objeval/eval.hpp"
#include "objeval/generate.hpp"
#include "objeval/logic.hpp"
#include "objeval/normalize.hpp"
#include "objeval/parser.hpp"
#include "objeval/pipeline.hpp"

namespace objeval::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A flag value names a file when one exists at that path; otherwise it is
// the text itself.
std::string text_or_file(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.size() < 1024 && std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

BuiltinSet builtin_set(const std::string& list) {
  BuiltinSet out = default_builtins();
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.insert(item);
  }
  return out;
}

bool starts_with_iota(std::string_view text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && text.substr(p, 4) == "iota";
}

Model load_model(const std::string& path) { return parse_model(read_file(path)); }

// "y:T" -> (y, T)
std::pair<std::string, TypeExpr> parse_subject(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Usage, "subject must be written name:type, got '" + text + "'");
  std::string name = text.substr(0, colon);
  name.erase(name.find_last_not_of(" \t") + 1);
  name.erase(0, name.find_first_not_of(" \t"));
  if (!is_identifier(name)) throw Error(ErrorKind::Usage, "bad subject name '" + name + "'");
  return {name, parse_type(text.substr(colon + 1))};
}

struct Sinks {
  std::vector<std::string> lines;
  TraceSink sink() {
    return [this](const std::string& s) { lines.push_back(s); };
  }
};

void flush(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

// ---- parse ---------------------------------------------------------------

struct ParseFlags {
  std::string term, formula, builtins;
  bool multi = false, ast = false;
};

int cmd_parse(const ParseFlags& f, std::ostream& out) {
  if (f.term.empty() == f.formula.empty()) throw Error(ErrorKind::Usage, "parse needs exactly one of --term, --formula");
  if (!f.term.empty()) {
    std::string text = text_or_file(f.term);
    BuiltinSet b = builtin_set(f.builtins);
    std::vector<LambdaTerm> terms = f.multi ? parse_terms(text, b) : std::vector<LambdaTerm>{parse_term(text, b)};
    for (const auto& t : terms) out << (f.ast ? dump(t) : render(t)) << '\n';
    return 0;
  }
  std::string text = text_or_file(f.formula);
  if (!f.multi && starts_with_iota(text)) {
    out << render(parse_description(text)) << '\n';
    return 0;
  }
  std::vector<Formula> fs = f.multi ? parse_formulas(text) : std::vector<Formula>{parse_formula(text)};
  for (const auto& phi : fs) out << (f.ast ? dump(phi) : render(phi)) << '\n';
  return 0;
}

// ---- compile / optimize ---------------------------------------------------

struct CompileFlags {
  std::string env = "E", term, formula, subject, builtins;
  bool trace = false, raw = false;
};

int cmd_compile(const CompileFlags& f, std::ostream& out) {
  if (f.term.empty() == f.formula.empty()) throw Error(ErrorKind::Usage, "compile needs exactly one of --term, --formula");
  EnvShape shape = parse_shape(f.env);
  Sinks rewrites;
  TraceSink sink = f.trace ? rewrites.sink() : TraceSink{};
  CompiledUnit unit = [&] {
    if (!f.term.empty()) {
      LambdaTerm t = alpha_rename(parse_term(text_or_file(f.term), builtin_set(f.builtins)));
      return compile(t, shape, default_builtins(), sink);
    }
    if (f.subject.empty()) throw Error(ErrorKind::Usage, "compiling a formula needs --subject");
    return compile_formula(parse_formula(text_or_file(f.formula)), shape, f.subject, sink);
  }();
  if (f.trace) {
    out << "shape: " << render(unit.shape) << '\n';
    out << "raw: " << render(unit.raw) << '\n';
    flush(out, rewrites.lines);
  } else if (f.raw) {
    out << render(unit.raw) << '\n';
  }
  out << render(unit.code) << '\n';
  return 0;
}

struct OptimizeFlags {
  std::string code;
  bool trace = false;
};

int cmd_optimize(const OptimizeFlags& f, std::ostream& out) {
  if (f.code.empty()) throw Error(ErrorKind::Usage, "optimize needs --code");
  CombTerm c = parse_comb(text_or_file(f.code));
  Sinks rewrites;
  CombTerm n = normalize(c, f.trace ? rewrites.sink() : TraceSink{});
  flush(out, rewrites.lines);
  out << render(n) << '\n';
  return 0;
}

// ---- eval -----------------------------------------------------------------

struct EvalFlags {
  std::string term, env_file, builtins, code, input = "()";
  bool trace = false, multi = false;
};

int cmd_eval(const EvalFlags& f, std::ostream& out) {
  if (f.term.empty() == f.code.empty()) throw Error(ErrorKind::Usage, "eval needs exactly one of --term, --code");
  Sinks steps;
  if (!f.code.empty()) {
    CombTerm c = parse_comb(text_or_file(f.code));
    Value in = parse_literal(f.input);
    Evaluator ev(standard_primitives(), f.trace ? steps.sink() : TraceSink{});
    try {
      Value v = ev.eval(c, in);
      flush(out, steps.lines);
      out << render(v) << '\n';
    } catch (...) {
      flush(out, steps.lines);
      throw;
    }
    return 0;
  }
  Bindings bindings;
  if (!f.env_file.empty()) bindings = parse_bindings(read_file(f.env_file));
  std::string text = text_or_file(f.term);
  BuiltinSet b = builtin_set(f.builtins);
  std::vector<LambdaTerm> terms = f.multi ? parse_terms(text, b) : std::vector<LambdaTerm>{parse_term(text, b)};
  for (const auto& t : terms) {
    Sinks rewrites;
    steps.lines.clear();
    RunOptions opts;
    if (f.trace) {
      opts.rewrites = rewrites.sink();
      opts.steps = steps.sink();
    }
    std::optional<RunResult> r;
    try {
      r = run(t, bindings, opts);
    } catch (...) {
      flush(out, rewrites.lines);
      flush(out, steps.lines);
      throw;
    }
    if (f.trace) {
      out << "term: " << render(t) << '\n';
      out << "shape: " << render(r->unit.shape) << '\n';
      out << "env: " << render(r->env) << '\n';
      out << "raw: " << render(r->unit.raw) << '\n';
      flush(out, rewrites.lines);
      out << "code: " << render(r->unit.code) << '\n';
      flush(out, steps.lines);
    }
    out << render(r->value) << '\n';
  }
  return 0;
}

// ---- domain ---------------------------------------------------------------

// Counts checks run and checks failed; returns all violations sorted.
std::vector<std::string> domain_violations(const Model& model, std::size_t& checks, std::size_t& failed) {
  std::vector<std::string> all;
  auto record = [&](std::vector<std::string> vs) {
    ++checks;
    failed += vs.empty() ? 0 : 1;
    for (auto& v : vs) all.push_back(std::move(v));
  };
  for (const auto& [name, elems] : model.car.types) record(check_functor_laws(model, TypeExpr::base(name)));
  std::vector<StageArrow> arrows;
  for (const auto& [name, a] : model.cat.arrows) arrows.push_back(a);
  for (const auto& [s, elems] : model.cat.stages) arrows.push_back(model.cat.identity(s));
  for (const auto& [gname, g] : model.car.transitions) {
    for (const auto& a : arrows) record(check_naturality(model, g, a));
  }
  std::sort(all.begin(), all.end());
  return all;
}

int cmd_domain_check(const std::string& path, std::ostream& out) {
  Model model = load_model(path);
  std::size_t checks = 0, failed = 0;
  auto violations = domain_violations(model, checks, failed);
  for (const auto& v : violations) out << "violation: " << v << '\n';
  out << checks << " checks, " << violations.size() << " violations\n";
  return violations.empty() ? 0 : 1;
}

struct CloneFlags {
  std::string model, arrow, individual, transition;
};

int cmd_domain_clone(const CloneFlags& f, std::ostream& out) {
  Model model = load_model(f.model);
  Individual h = parse_individual(model, text_or_file(f.individual));
  StageArrow a = model.cat.arrow(f.arrow);
  Individual r = [&] {
    if (f.transition.empty()) return restrict(h, a, model);
    auto it = model.car.transitions.find(f.transition);
    if (it == model.car.transitions.end()) throw Error(ErrorKind::Model, "unknown transition '" + f.transition + "'");
    return clone_transact(it->second, h, a, model);
  }();
  out << individual_json(model, r) << '\n';
  return 0;
}

struct StateFlags {
  std::string model, stage, element, type;
  std::vector<std::string> individuals;
};

int cmd_domain_state(const StateFlags& f, std::ostream& out) {
  Model model = load_model(f.model);
  TypeExpr type = parse_type(f.type);
  std::vector<Individual> pop;
  for (const auto& text : f.individuals) pop.push_back(parse_individual(model, text_or_file(text)));
  if (f.individuals.empty()) pop = hom(model, f.stage, type);
  for (const auto& h : pop) {
    if (h.stage != f.stage || !(h.type == type)) {
      throw Error(ErrorKind::StageMismatch, "individual " + individual_json(model, h) + " is not in H_" +
                                                render(type) + "(" + f.stage + ")");
    }
  }
  auto state = stage_state(model, f.stage, f.element, pop);
  out << "{";
  for (std::size_t i = 0; i < state.size(); ++i) out << (i ? ", " : "") << render(state[i]);
  out << "}\n";
  return 0;
}

// ---- concept / describe ---------------------------------------------------

struct ConceptFlags {
  std::string model, formula, stage, subject, along;
  bool extents = false;
};

void print_extent(std::ostream& out, const Model& model, const Extent& e) {
  const auto& elems = model.cat.elements(e.relation.stage);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out << "  " << elems[i] << ": {";
    for (std::size_t k = 0; k < e.sets[i].size(); ++k) out << (k ? ", " : "") << render(e.sets[i][k]);
    out << "}\n";
  }
}

int cmd_concept(const ConceptFlags& f, std::ostream& out) {
  Model model = load_model(f.model);
  Formula phi = parse_formula(text_or_file(f.formula));
  auto [y, type] = parse_subject(f.subject);
  for (const auto& v : free_vars(phi)) {
    if (v != y) throw Error(ErrorKind::UnboundVariable, "formula variable '" + v + "' is not the subject");
  }
  if (f.along.empty()) {
    if (f.stage.empty()) throw Error(ErrorKind::Usage, "concept needs --stage or --along");
    auto c = concept_at(phi, y, type, f.stage, model);
    out << "C(" << f.stage << "): " << c.size() << " individuals\n";
    for (const auto& h : c) out << "  " << render(model, h) << '\n';
    if (!f.extents) return 0;
    Extent code = concept_extent_via_code(phi, y, f.stage, type, model);
    Extent formula = concept_extent_via_formula(phi, y, f.stage, type, model);
    out << "extent:\n";
    print_extent(out, model, code);
    if (!(code.relation == formula.relation) || code.sets != formula.sets) {
      out << "mismatch: compiled code and formula semantics disagree\n";
      return 1;
    }
    return 0;
  }
  StageArrow a = model.cat.arrow(f.along);
  if (!f.stage.empty() && f.stage != a.dom) {
    throw Error(ErrorKind::StageMismatch, "arrow " + a.name + " starts at " + a.dom + ", not " + f.stage);
  }
  auto cf = concept_along(phi, y, type, a, model);
  auto cb = concept_at(phi, y, type, a.dom, model);
  out << "C_" << a.name << ": " << cf.size() << " individuals\n";
  for (const auto& h : cf) out << "  " << render(model, h) << '\n';
  std::size_t outside = 0;
  for (const auto& h : cf) outside += std::binary_search(cb.begin(), cb.end(), h) ? 0 : 1;
  out << "C_" << a.name << " subset of C(" << a.dom << "): " << (outside == 0 ? "yes" : "no") << '\n';
  return 0;
}

struct DescribeFlags {
  std::string formula, carrier, model, var;
};

int cmd_describe(const DescribeFlags& f, std::ostream& out) {
  std::string text = text_or_file(f.formula);
  Model model;
  if (!f.model.empty()) model = load_model(f.model);
  std::optional<Description> d;
  if (starts_with_iota(text)) d = parse_description(text);
  Formula phi = d ? d->body : parse_formula(text);
  std::string x = f.var;
  if (d) x = d->bound;
  if (x.empty()) {
    auto fv = free_vars(phi);
    if (fv.size() > 1) throw Error(ErrorKind::Usage, "cannot tell which variable to describe; pass --var");
    x = fv.empty() ? "x" : fv.front();
  }
  std::vector<Value> carrier;
  std::string c = f.carrier;
  if (c.empty() && d) c = render(d->type);
  if (c.empty()) throw Error(ErrorKind::Usage, "describe needs --carrier");
  if (c.front() == '{') {
    Value s = parse_literal(c);
    carrier.assign(s.elements().begin(), s.elements().end());
  } else {
    carrier = model.carrier(parse_type(c));
  }
  out << render(describe(phi, x, carrier, model)) << '\n';
  return 0;
}

// ---- selftest -------------------------------------------------------------

struct Suite {
  explicit Suite(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t passed = 0, total = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (failures.size() < 5) {
      failures.push_back(what);
    }
  }
};

Suite functor_suite() {
  Suite s("functor-laws");
  for (const auto& profile : size_profiles(2, 2)) {
    Model m = full_model(profile, {1, 2}, false);
    for (const auto& [t, elems] : m.car.types) {
      auto v = check_functor_laws(m, TypeExpr::base(t));
      s.check(v.empty(), v.empty() ? "" : v.front());
    }
  }
  return s;
}

Suite naturality_suite() {
  Suite s("naturality");
  for (const auto& profile : size_profiles(2, 2)) {
    Model m = full_model(profile, {1, 2}, true);
    for (const auto& [gn, g] : m.car.transitions) {
      for (const auto& [an, a] : m.cat.arrows) {
        auto v = check_naturality(m, g, a);
        s.check(v.empty(), v.empty() ? "" : v.front());
      }
    }
  }
  return s;
}

Suite bijection_suite() {
  Suite s("bijection");
  Model m = full_model({2}, {2}, false);
  TypeExpr t = TypeExpr::base("T0");
  const auto& elems = m.cat.elements("S0");
  auto car = m.carrier(t);
  std::size_t cells = elems.size() * car.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    Relation r{"S0", t, {}};
    for (std::size_t k = 0; k < cells; ++k) {
      if (mask >> k & 1) r.pairs.insert({elems[k / car.size()], car[k % car.size()]});
    }
    s.check(func_to_rel(rel_to_func(r, m), m) == r, "relation " + std::to_string(mask));
  }
  for (const auto& h : hom(m, "S0", TypeExpr::power(t))) {
    s.check(rel_to_func(func_to_rel(h, m), m) == h, "individual " + render(m, h));
  }
  return s;
}

Suite oracle_suite(std::uint64_t seed, std::size_t count) {
  Suite s("oracle");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    TermCase c = random_term(rng);
    std::string what = render(c.term);
    try {
      s.check(run(c.term, c.bindings).value == oracle_eval(c.term, c.bindings), what);
    } catch (const Error& e) {
      s.check(false, what + ": " + e.what());
    }
  }
  return s;
}

Suite model_suite(const std::string& path) {
  Suite s("model " + path);
  Model model = load_model(path);
  std::size_t checks = 0, failed = 0;
  auto v = domain_violations(model, checks, failed);
  s.total = checks;
  s.passed = checks - failed;
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) s.failures.push_back(v[i]);
  return s;
}

struct SelftestFlags {
  std::uint64_t seed = 0;
  std::size_t terms = 200;
  std::string model;
};

int cmd_selftest(const SelftestFlags& f, std::ostream& out) {
  std::vector<Suite> suites;
  suites.push_back(functor_suite());
  suites.push_back(naturality_suite());
  suites.push_back(bijection_suite());
  suites.push_back(oracle_suite(f.seed, f.terms));
  if (!f.model.empty()) suites.push_back(model_suite(f.model));
  out << "selftest seed " << f.seed << '\n';
  bool ok = true;
  for (const auto& s : suites) {
    out << s.name << ": " << s.passed << "/" << s.total << " passed\n";
    for (const auto& what : s.failures) out << "  failed: " << what << '\n';
    ok = ok && s.passed == s.total;
  }
  out << (ok ? "all suites passed" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile lambda terms to categorical combinators, evaluate them, and check variable-domain models."};
  app.name("objeval");
  app.require_subcommand(1);

  ParseFlags pf;
  auto* parse = app.add_subcommand("parse", "Parse a term or formula and print it back");
  parse->add_option("--term", pf.term, "Term text or file");
  parse->add_option("--formula", pf.formula, "Formula or description text or file");
  parse->add_option("--builtins", pf.builtins, "Extra builtin names for the parser, comma separated");
  parse->add_flag("--multi", pf.multi, "One item per line");
  parse->add_flag("--ast", pf.ast, "Print the structure instead of the text");

  CompileFlags cf;
  auto* comp = app.add_subcommand("compile", "Compile a term or formula to combinator code");
  comp->add_option("--env", cf.env, "Environment shape, e.g. \"E; y:Dy; x:Dx\"");
  comp->add_option("--term", cf.term, "Term text or file");
  comp->add_option("--formula", cf.formula, "Formula text or file");
  comp->add_option("--subject", cf.subject, "Variable a formula is read as a predicate of");
  comp->add_option("--builtins", cf.builtins, "Extra builtin names for the parser, comma separated");
  comp->add_flag("--trace", cf.trace, "Print every rewrite step");
  comp->add_flag("--raw", cf.raw, "Also print the code before optimization");

  OptimizeFlags of;
  auto* opt = app.add_subcommand("optimize", "Normalize combinator code");
  opt->add_option("--code", of.code, "Code text or file")->required();
  opt->add_flag("--trace", of.trace, "Print every rewrite step");

  EvalFlags ef;
  auto* ev = app.add_subcommand("eval", "Evaluate a term, or raw code on an input value");
  ev->add_option("--term", ef.term, "Term text or file");
  ev->add_option("--env-file", ef.env_file, "Bindings file with lines name = literal");
  ev->add_option("--builtins", ef.builtins, "Extra builtin names for the parser, comma separated");
  ev->add_option("--code", ef.code, "Combinator code text or file");
  ev->add_option("--input", ef.input, "Input value for --code");
  ev->add_flag("--trace", ef.trace, "Print every rewrite and evaluation step");
  ev->add_flag("--multi", ef.multi, "One term per line");

  auto* dom = app.add_subcommand("domain", "Variable-domain model tools");
  dom->require_subcommand(1);
  std::string check_path;
  auto* check = dom->add_subcommand("check", "Check functor laws and naturality of a model");
  check->add_option("model", check_path, "Model JSON file")->required();
  CloneFlags clf;
  auto* clone = dom->add_subcommand("clone", "Restrict an individual along an arrow");
  clone->add_option("--model", clf.model, "Model JSON file")->required();
  clone->add_option("--arrow", clf.arrow, "Stage arrow")->required();
  clone->add_option("--individual", clf.individual, "Individual JSON text or file")->required();
  clone->add_option("--transition", clf.transition, "Also apply this transition");

  StateFlags stf;
  auto* state = dom->add_subcommand("state", "Values a population takes at one element of a stage");
  state->add_option("--model", stf.model, "Model JSON file")->required();
  state->add_option("--stage", stf.stage, "Stage")->required();
  state->add_option("--element", stf.element, "Element of the stage")->required();
  state->add_option("--type", stf.type, "Type of the individuals")->required();
  state->add_option("--individual", stf.individuals, "Individual JSON text or file; default all of H_T(stage)");

  ConceptFlags cof;
  auto* con = app.add_subcommand("concept", "Individuals satisfying a formula at a stage");
  con->add_option("--model", cof.model, "Model JSON file")->required();
  con->add_option("--formula", cof.formula, "Formula text or file")->required();
  con->add_option("--stage", cof.stage, "Stage");
  con->add_option("--subject", cof.subject, "Subject variable and type, e.g. y:T")->required();
  con->add_option("--along", cof.along, "Report C_f for this arrow instead");
  con->add_flag("--extents", cof.extents, "Also print per-element extents from the compiled code");

  DescribeFlags df;
  auto* des = app.add_subcommand("describe", "The unique element satisfying a formula");
  des->add_option("--formula", df.formula, "Formula or iota description, text or file")->required();
  des->add_option("--carrier", df.carrier, "A set literal {..} or a type of the model");
  des->add_option("--model", df.model, "Model JSON file");
  des->add_option("--var", df.var, "Variable to describe");

  SelftestFlags sf;
  auto* self = app.add_subcommand("selftest", "Run the built-in exhaustive and randomized suites");
  self->add_option("--seed", sf.seed, "Random seed");
  self->add_option("--terms", sf.terms, "Number of random terms for the oracle suite");
  self->add_option("--model", sf.model, "Also check this model file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) return cmd_parse(pf, out);
    if (comp->parsed()) return cmd_compile(cf, out);
    if (opt->parsed()) return cmd_optimize(of, out);
    if (ev->parsed()) return cmd_eval(ef, out);
    if (check->parsed()) return cmd_domain_check(check_path, out);
    if (clone->parsed()) return cmd_domain_clone(clf, out);
    if (state->parsed()) return cmd_domain_state(stf, out);
    if (con->parsed()) return cmd_concept(cof, out);
    if (des->parsed()) return cmd_describe(df, out);
    if (self->parsed()) return cmd_selftest(sf, out);
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n  in: " << render(e.subterm()) << '\n';
    return is_usage_error(e.kind()) ? 2 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? 2 : 1;
  }
  return 2;
}

}  // namespace objeval::cli
