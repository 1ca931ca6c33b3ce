#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "brace_forge/error.hpp"
#include "brace_forge/io.hpp"
#include "cli.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"

using namespace brace_forge;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("brace-forge-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string &name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

ErrorKind parse_error(const std::string &text) {
  try {
    io::parse(text);
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("parse accepted " << text);
  return ErrorKind::IoError;
}

std::string replace(std::string s, const std::string &from, const std::string &to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("every kind round trips canonically") {
  const HopfBraceData b = linearize(fixtures::z4_skew(), Q);
  const std::vector<io::Structure> values{
      group_algebra(groups::cyclic(3), Q),
      fixtures::sweedler(Field::prime(7)),
      b,
      functor_Q(b),
      functor_F(b),
      groups::builtin("S3"),
      fixtures::z4_skew(),
  };
  for (const auto &v : values) {
    const io::StructureFile file{v, {{"label", "x"}}};
    const std::string text = io::serialize(file);
    const io::StructureFile back = io::parse(text);
    CHECK(back.kind() == file.kind());
    CHECK(io::serialize(back) == text);
  }
}

TEST_CASE("rational structure constants survive") {
  const HopfAlgebraData z2 = group_algebra(groups::cyclic(2), Q);
  const LinMap lam = z2.lambda().with_entry(0, 1, Scalar(Q, mpq_class(-7, 3)));
  const HopfAlgebraData odd = HopfAlgebraData::from_maps(z2.eta(), z2.mu(), z2.eps(), z2.delta(), lam);
  const std::string text = io::serialize({odd, {}});
  CHECK(text.find("\"-7/3\"") != std::string::npos);
  CHECK(equal(io::expect<HopfAlgebraData>(io::parse(text), "hopf").lambda(), lam));
}

TEST_CASE("rejections") {
  const std::string z3 = io::serialize({group_algebra(groups::cyclic(3), Q), {}});
  CHECK(parse_error(replace(z3, "\"dim\": 3", "\"dim\": 3,,")) == ErrorKind::ParseError);
  CHECK(parse_error(replace(z3, "\"kind\": \"hopf\"", "\"kind\": \"monoid\"")) ==
        ErrorKind::SchemaError);
  CHECK(parse_error(replace(z3, "\"field\": \"Q\"", "\"field\": \"Fp:4\"")) ==
        ErrorKind::SchemaError);
  CHECK(parse_error(replace(z3, "\"dim\": 3", "\"dim\": 2")) == ErrorKind::ShapeError);
  CHECK(parse_error(replace(z3, "[\"1\", \"1\", \"1\"]", "[\"2/4\", \"1\", \"1\"]")) ==
        ErrorKind::CanonicalFormError);
  CHECK(parse_error(replace(z3, "[\"1\", \"1\", \"1\"]", "[\"1/1\", \"1\", \"1\"]")) ==
        ErrorKind::CanonicalFormError);
  CHECK(parse_error(replace(z3, "[\"1\", \"1\", \"1\"]", "[\"x\", \"1\", \"1\"]")) ==
        ErrorKind::ParseError);

  const std::string brace = io::serialize({trivial_brace(group_algebra(groups::cyclic(2), Q)), {}});
  const std::string same_eta2 =
      replace(brace, "\"eps\":", "\"eta2\": [\n      [\"1\"],\n      [\"0\"]\n    ],\n    \"eps\":");
  CHECK_NOTHROW(io::parse(same_eta2));
  const std::string other_eta2 =
      replace(brace, "\"eps\":", "\"eta2\": [\n      [\"0\"],\n      [\"1\"]\n    ],\n    \"eps\":");
  CHECK(parse_error(other_eta2) == ErrorKind::SchemaError);

  try {
    io::load("/nonexistent/brace-forge.json");
    FAIL("expected IoError");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::IoError);
  }
}

TEST_CASE("generated hopf file loads and checks") {
  TempDir dir;
  io::save({group_algebra(groups::cyclic(3), Q), {}}, dir / "z3.json");
  const io::StructureFile f = io::load(dir / "z3.json");
  CHECK(check_hopf(io::expect<HopfAlgebraData>(f, "hopf")).all_passed());
  CHECK_THROWS_AS(io::expect<HopfBraceData>(f, "brace"), Error);
  io::save(f, dir / "again.json");
  CHECK(slurp(dir / "z3.json") == slurp(dir / "again.json"));
}

TEST_CASE("cli check, construct and roundtrip") {
  TempDir dir;
  auto r = cli_run({"construct", "group-algebra", "builtin:Z3", "-o", dir / "z3.json"});
  CHECK(r.code == cli::kOk);
  CHECK(cli_run({"check", "hopf", dir / "z3.json"}).code == cli::kOk);

  io::save({linearize(fixtures::z4_skew(), Q), {}}, dir / "z4brace.json");
  CHECK(cli_run({"roundtrip", "PQ", dir / "z4brace.json"}).code == cli::kOk);
  CHECK(cli_run({"roundtrip", "GF", dir / "z4brace.json"}).code == cli::kOk);

  OppBraceTripleData broken = trivial_triple(group_algebra(groups::cyclic(3), Q));
  broken.u = LinMap::identity(Q, 3);
  io::save({broken, {}}, dir / "broken.json");
  r = cli_run({"check", "obt", dir / "broken.json"});
  CHECK(r.code == cli::kAxiomFailure);
  CHECK(r.out.find("obt.viii") != std::string::npos);

  const auto j1 = cli_run({"check", "obt", dir / "broken.json", "--json"});
  const auto j2 = cli_run({"check", "obt", dir / "broken.json", "--json"});
  CHECK(j1.code == cli::kAxiomFailure);
  CHECK(j1.out == j2.out);
  CHECK(nlohmann::json::parse(j1.out).is_object());

  // construct-then-check closure
  const std::vector<std::pair<std::string, std::string>> chain{
      {"Q", "obt"}, {"F", "matched_pair"}, {"trivial-brace", "brace"}};
  for (const auto &[what, kind] : chain) {
    const std::string in = what == "trivial-brace" ? dir / "z3.json" : dir / "z4brace.json";
    const std::string out = dir / (what + ".json");
    CHECK(cli_run({"construct", what, in, "-o", out}).code == cli::kOk);
    CHECK(cli_run({"check", kind, out}).code == cli::kOk);
  }
  CHECK(cli_run({"construct", "P", dir / "Q.json", "-o", dir / "P.json"}).code == cli::kOk);
  CHECK(cli_run({"check", "brace", dir / "P.json"}).code == cli::kOk);
  CHECK(slurp(dir / "P.json").find("\"kind\": \"brace\"") != std::string::npos);
  CHECK(cli_run({"construct", "G", dir / "F.json", "-o", dir / "G.json"}).code == cli::kOk);
  CHECK(cli_run({"construct", "obt-from-mp", dir / "F.json", "-o", dir / "T.json"}).code ==
        cli::kOk);
  CHECK(cli_run({"check", "obt", dir / "T.json"}).code == cli::kOk);
  CHECK(cli_run({"check", "mp_over_a", dir / "F.json"}).code == cli::kOk);
  CHECK(cli_run({"roundtrip", "QP", dir / "Q.json"}).code == cli::kOk);
  CHECK(cli_run({"roundtrip", "FG", dir / "F.json"}).code == cli::kOk);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  io::save({trivial_brace(fixtures::sweedler(Q)), {}}, dir / "h4.json");
  auto r = cli_run({"construct", "Q", dir / "h4.json", "-o", dir / "out.json"});
  CHECK(r.code == cli::kPrecondition);
  CHECK(r.err.find("NotCocommutative") != std::string::npos);

  CHECK(cli_run({"check", "hopf", dir / "missing.json"}).code == cli::kIoError);
  CHECK(cli_run({"check", "brace", dir / "h4.json"}).code == cli::kOk);
  CHECK(cli_run({"check", "hopf", dir / "h4.json"}).code == cli::kIoError);
  CHECK(cli_run({}).code == cli::kIoError);
  CHECK(cli_run({"frobnicate"}).code == cli::kIoError);
  CHECK(cli_run({"--help"}).code == cli::kOk);

  spit(dir / "bad.json", "{\"format\": \"brace-forge/1\",");
  CHECK(cli_run({"check", "hopf", dir / "bad.json"}).code == cli::kIoError);

  // a broken triple refused by P with its report
  OppBraceTripleData broken = trivial_triple(group_algebra(groups::cyclic(3), Q));
  broken.u = LinMap::identity(Q, 3);
  io::save({broken, {}}, dir / "broken.json");
  r = cli_run({"construct", "P", dir / "broken.json", "-o", dir / "p.json"});
  CHECK(r.code == cli::kPrecondition);
  CHECK(r.err.find("obt.viii") != std::string::npos);
}

TEST_CASE("cli enumerate and linearize") {
  TempDir dir;
  auto r = cli_run({"enumerate", "skew-braces", "--group", "builtin:Z4", "-o", dir / "z4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("2 labelled skew braces") != std::string::npos);
  std::size_t files = 0;
  for (const auto &entry : fs::directory_iterator(dir.path / "z4")) {
    ++files;
    const std::string path = entry.path().string();
    CHECK(cli_run({"check", "skew_brace", path}).code == cli::kOk);
    const std::string out = dir / ("lin_" + entry.path().filename().string());
    CHECK(cli_run({"linearize", path, "--field", "Fp:5", "-o", out}).code == cli::kOk);
    CHECK(cli_run({"check", "brace", out}).code == cli::kOk);
    CHECK(cli_run({"roundtrip", "PQ", out}).code == cli::kOk);
  }
  CHECK(files == 2);

  io::save({groups::builtin("S3"), {}}, dir / "s3.json");
  r = cli_run({"enumerate", "skew-braces", "--group", dir / "s3.json"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("8 labelled skew braces") != std::string::npos);

  r = cli_run({"enumerate", "skew-braces", "--group", "builtin:S3", "--max-order", "4"});
  CHECK(r.code == cli::kPrecondition);
  CHECK(cli_run({"enumerate", "skew-braces", "--group", "builtin:Z4", "--max-order", "9"}).code ==
        cli::kIoError);
}

TEST_CASE("cli suite at order 3") {
  const auto r = cli_run({"suite", "--max-order", "3", "--field", "Q", "--field", "Fp:5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("C9") != std::string::npos);
}
