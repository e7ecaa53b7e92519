#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = objeval::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const fs::path kGolden = OBJEVAL_GOLDEN_DIR;

const char* kModel = R"({
  "stages": {"A": ["a1", "a2"], "B": ["b1", "b2", "b3"]},
  "arrows": {"f": {"dom": "B", "cod": "A", "map": {"b1": "a1", "b2": "a2", "b3": "a2"}}},
  "types": {"T": ["t1", "t2"], "S": ["s1", "s2", "s3"]},
  "transitions": {
    "k": {"dom": "T", "cod": "S", "map": {"t1": "s1", "t2": "s3"}},
    "swap": {"dom": "T", "cod": "T", "map": {"t1": "t2", "t2": "t1"}}
  }
})";

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("objeval_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, CompileGolden) {
  auto r = cli({"compile", "--env", "E; y:Dy; x:Dx", "--term", "\\x. y x"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Cur(Eps . <Snd . Fst . Fst, Snd>)\n");
}

TEST(Cli, EvalSum) {
  auto r = cli({"eval", "--term", "+ [2, 3]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, DescribeOverCarrier) {
  auto r = cli({"describe", "--formula", "x = 2", "--carrier", "{1,2,3}"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, ParseRoundTrip) {
  auto r = cli({"parse", "--term", "(\\x.f x)   h"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(\\x. f x) h\n");
}

TEST(Cli, OptimizeMatchesCompile) {
  auto r = cli({"optimize", "--code", "Cur((Eps . <Snd . Fst, Snd>) . <Fst . Fst, Snd>)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Cur(Eps . <Snd . Fst . Fst, Snd>)\n");
}

TEST(Cli, GoldenTraces) {
  struct Case {
    const char* golden;
    std::vector<std::string> args;
  };
  auto env = [](const char* f) { return (kGolden / f).string(); };
  const Case cases[] = {
      {"constant.trace", {"eval", "--term", "c", "--env-file", env("constant.env"), "--trace"}},
      {"variable.trace",
       {"eval", "--code", "Snd . <Fst . Fst, Snd>", "--input", "[[(), atom:x0], atom:h1]", "--trace"}},
      {"identity.trace", {"eval", "--term", "(\\x. x) h", "--env-file", env("identity.env"), "--trace"}},
      {"compound.trace", {"eval", "--term", "(\\x. f x) h", "--env-file", env("compound.env"), "--trace"}},
      {"sum.trace", {"eval", "--term", "+ [2, 3]", "--trace"}},
  };
  for (const auto& c : cases) {
    auto r = cli(c.args);
    EXPECT_EQ(r.code, 0) << c.golden << ": " << r.err;
    EXPECT_EQ(r.out, slurp(kGolden / c.golden)) << c.golden;
  }
}

TEST(Cli, TraceStepsUseTurnstileNotation) {
  auto r = cli({"eval", "--term", "(\\x. x) h", "--env-file", (kGolden / "identity.env").string(), "--trace"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int steps = 0;
  while (std::getline(lines, line)) {
    if (line.find(" ⊢ ") == std::string::npos) continue;
    EXPECT_NE(line.find(" ⇒ "), std::string::npos) << line;
    ++steps;
  }
  EXPECT_GT(steps, 5);
}

TEST(Cli, SelftestIsDeterministic) {
  auto a = cli({"selftest", "--seed", "0", "--terms", "50"});
  auto b = cli({"selftest", "--seed", "0", "--terms", "50"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all suites passed"), std::string::npos);
}

TEST(Cli, DomainCheckPassesAndFails) {
  TempDir dir;
  auto good = dir.write("good.json", kModel);
  auto r = cli({"domain", "check", good});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find(", 0 violations"), std::string::npos) << r.out;

  std::string bad = R"({
    "stages": {"A": ["a1", "a2"]},
    "arrows": {"e": {"dom": "A", "cod": "A", "map": {"a1": "a2", "a2": "a2"}}},
    "types": {"T": ["t1", "t2"]},
    "identities": {"e": "A"}
  })";
  r = cli({"domain", "check", dir.write("bad.json", bad)});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation: "), std::string::npos) << r.out;

  r = cli({"selftest", "--terms", "5", "--model", dir.write("bad2.json", bad)});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAILED"), std::string::npos) << r.out;
}

TEST(Cli, CloneAlongArrow) {
  TempDir dir;
  auto model = dir.write("m.json", kModel);
  auto h = dir.write("h.json", R"({"stage": "A", "type": "T", "map": {"a1": "t1", "a2": "t2"}})");
  auto r = cli({"domain", "clone", "--model", model, "--arrow", "f", "--individual", h, "--transition", "k"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"stage\":\"B\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"b1\":\"s1\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"b3\":\"s3\""), std::string::npos) << r.out;
}

TEST(Cli, DomainState) {
  TempDir dir;
  auto model = dir.write("m.json", kModel);
  auto r = cli({"domain", "state", "--model", model, "--stage", "A", "--element", "a2", "--type", "S"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{s1, s2, s3}\n");
}

TEST(Cli, ConceptAtStageAndAlong) {
  TempDir dir;
  auto model = dir.write("m.json", kModel);
  auto r = cli({"concept", "--model", model, "--formula", "y = swap y", "--subject", "y:T", "--stage", "A"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("C(A): 0 individuals", 0), 0u) << r.out;

  r = cli({"concept", "--model", model, "--formula", "y = y", "--subject", "y:T", "--stage", "A", "--extents"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("C(A): 4 individuals", 0), 0u) << r.out;
  EXPECT_EQ(r.out.find("mismatch"), std::string::npos) << r.out;

  r = cli({"concept", "--model", model, "--formula", "y = y", "--subject", "y:T", "--along", "f"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("subset of C(B): yes"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodesForEveryErrorKind) {
  TempDir dir;
  auto model = dir.write("m.json", kModel);
  auto broken = dir.write("broken.json", "{\"stages\": ");
  auto hs = dir.write("hs.json", R"({"stage": "A", "type": "S", "map": {"a1": "s1", "a2": "s2"}})");
  struct Case {
    const char* kind;
    int code;
    std::vector<std::string> args;
  };
  const Case cases[] = {
      {"Syntax", 2, {"parse", "--term", "\\x."}},
      {"Usage", 2, {"eval"}},
      {"Usage", 2, {"eval", "--term", "1", "--env-file", "/nonexistent/bindings"}},
      {"", 2, {"eval", "--bogus"}},
      {"Model", 2, {"domain", "check", broken}},
      {"UnknownVariable", 1, {"compile", "--term", "q"}},
      {"UnknownBuiltin", 1, {"compile", "--builtins", "sq", "--term", "sq 2"}},
      {"ShapeMismatch", 1, {"compile", "--env", "E; y; x; w", "--term", "\\x. w"}},
      {"NotOutermost", 1, {"compile", "--env", "E; x; y", "--formula", "x = y", "--subject", "x"}},
      {"UntypableApplication", 1, {"eval", "--term", "2 3"}},
      {"ProjectionOnNonPair", 1, {"eval", "--code", "Fst", "--input", "1"}},
      {"ApplyOnNonFunction", 1, {"eval", "--code", "Eps", "--input", "[1, 2]"}},
      {"UnknownPrimitive", 1, {"eval", "--code", "Prim(nope)", "--input", "1"}},
      {"PrimitiveDomain", 1, {"eval", "--code", "Prim(succ)", "--input", "atom:a"}},
      {"PlaceholderRead", 1, {"eval", "--code", "Snd", "--input", "[(), ?]"}},
      {"UnboundVariable", 1, {"eval", "--term", "y"}},
      {"StageMismatch", 1, {"concept", "--model", model, "--formula", "y = y", "--subject", "y:T", "--stage", "Z"}},
      {"TypeMismatch", 1, {"domain", "clone", "--model", model, "--arrow", "f", "--individual", hs, "--transition", "k"}},
      {"ElementNotInStage", 1, {"domain", "state", "--model", model, "--stage", "A", "--element", "zz", "--type", "T"}},
      {"NoWitness", 1, {"describe", "--formula", "false", "--carrier", "{1,2,3}"}},
      {"NotUnique", 1, {"describe", "--formula", "true", "--carrier", "{1,2,3}"}},
  };
  for (const auto& c : cases) {
    auto r = cli(c.args);
    EXPECT_EQ(r.code, c.code) << c.kind << ": " << r.out << r.err;
    EXPECT_NE(r.err.find(c.kind), std::string::npos) << c.kind << ": " << r.err;
  }
}

TEST(Cli, EnumerationCapFromEnvironment) {
  TempDir dir;
  auto model = dir.write("m.json", kModel);
  ::setenv("OBJEVAL_ENUM_CAP", "3", 1);
  auto r = cli({"concept", "--model", model, "--formula", "y = y", "--subject", "y:T", "--stage", "A"});
  ::unsetenv("OBJEVAL_ENUM_CAP");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("EnumerationCapExceeded"), std::string::npos) << r.err;
}

TEST(Cli, EvalErrorNamesTheSubterm) {
  auto r = cli({"eval", "--code", "Snd . Fst", "--input", "[1, 2]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("in: Snd"), std::string::npos) << r.err;
}
