#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace malcev;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? v : fallback;
}

const std::string kCli = env_or("MALCEV_CLI", "./malcev_cli");
const std::string kFixtures = env_or("MALCEV_FIXTURES", "tests/fixtures");

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  auto tmp = std::filesystem::temp_directory_path() / ("malcev_cli_" + std::to_string(::getpid()) + ".out");
  int status = std::system((kCli + " " + args + " > " + tmp.string() + " 2>/dev/null").c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  std::filesystem::remove(tmp);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST(Bundle, RoundTripIsByteStable) {
  for (const char* name : {"F", "dual", "lambda2", "dual-lambda1"}) {
    Algebra t = tensor_with_coordinates(build_m7(M7Variant::division(Scalar(2, 3))), sample_coordinates(name));
    std::string text = serialize_bundle(AlgebraBundle::from_algebra(t));
    AlgebraBundle back = parse_bundle(text);
    EXPECT_EQ(serialize_bundle(back), text) << name;
    Algebra again = back.algebra();
    EXPECT_TRUE(again.same_structure(t)) << name;
    EXPECT_EQ(again.labels(), t.labels()) << name;
    EXPECT_EQ(again.parities(), t.parities()) << name;
  }
}

TEST(Bundle, EmbeddingFormInvolutionRoundTrip) {
  Algebra u = sample_coordinates("dual");
  AlgebraBundle b = AlgebraBundle::from_embedding(14, Embedding::canonical(M7Variant::division(2), u));
  b.variant = "division";
  b.gamma = Scalar(2);
  b.form = induced_form(canonical_form_m7(M7Variant::division(2)), u).gram;
  b.involution = induced_involution(7, u).matrix;
  AlgebraBundle back = parse_bundle(serialize_bundle(b));
  EXPECT_EQ(back.embedding_data().images, Embedding::canonical(M7Variant::division(2), u).images);
  EXPECT_EQ(back.embedding_data().variant.gamma, Scalar(2));
  EXPECT_EQ(back.form_data().gram, *b.form);
  EXPECT_EQ(back.involution_data().matrix, *b.involution);
}

TEST(Bundle, RepresentationRoundTrip) {
  Algebra u = sample_coordinates("truncated3");
  Representation reg = regular_representation(u);
  AlgebraBundle b = parse_bundle(serialize_bundle(AlgebraBundle::from_representation(reg)));
  Representation back = b.representation(u);
  ASSERT_EQ(back.action.size(), reg.action.size());
  for (std::size_t x = 0; x < reg.action.size(); ++x) EXPECT_EQ(back.action[x].matrix, reg.action[x].matrix);
}

TEST(Bundle, RejectsMalformedInput) {
  EXPECT_THROW(parse_bundle(R"({"dim": 1, "table": [[0, 0, 0, "0.5"]]})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 1, "table": [[0, 0, 0, "1"], [0, 0, 0, "2"]]})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 2, "table": [[0, 0, 2, "1"]]})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 2, "labels": ["a", "a"]})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 2, "parity": [0, 1], "table": [[1, 1, 1, "1"]]})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 1, "colour": "red"})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 1, "gamma": "0"})"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"dim": 1,)"), BundleError);
  EXPECT_THROW(parse_bundle(R"({"labels": ["a"]})"), BundleError);
}

TEST(Bundle, ErrorsNameTheField) {
  try {
    parse_bundle(R"({"dim": 2, "table": [[0, 1, 1, "1"], [1, 0, 1, "1.5"]]})");
    FAIL();
  } catch (const BundleError& e) {
    EXPECT_NE(std::string(e.what()).find("table[1]"), std::string::npos) << e.what();
  }
}

TEST(Bundle, ReportJsonOmitsTimingOnRequest) {
  Report r = verify_malcev(build_m7());
  EXPECT_FALSE(to_json(r, false).contains("millis"));
  EXPECT_TRUE(to_json(r, true).contains("millis"));
  EXPECT_EQ(to_json(r, false).dump(), to_json(verify_malcev(build_m7()), false).dump());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--no-timing check --malcev --h-variety --simple " + fixture("m7_split.json")).code, 0);
  CliRun bad = run("--no-timing check --malcev " + fixture("m7_perturbed.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"labels\":[\"e1\",\"e2\",\"e3\",\"e4\"]"), std::string::npos) << bad.out;
  EXPECT_EQ(run("check " + fixture("bad_decimal.json")).code, 2);
  EXPECT_EQ(run("check " + fixture("missing.json")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("build m7 --variant division --gamma 0").code, 2);
}

TEST(Cli, FactorizeFixture) {
  CliRun r = run("--no-timing factorize " + fixture("m7_dual.json") + " --embedding " + fixture("m7_dual_embedding.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"record\":\"coordinates\",\"dim\":2"), std::string::npos) << r.out;
  CliRun d = run("--no-timing decompose " + fixture("m7_dual.json") + " --embedding " + fixture("m7_dual_embedding.json"));
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("\"check\":\"decomposition\",\"status\":\"pass\""), std::string::npos) << d.out;
}

TEST(Cli, FactorizeRefusesAnnihilatorHost) {
  auto dir = std::filesystem::temp_directory_path() / ("malcev_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string text = serialize_bundle(AlgebraBundle::from_algebra(build_m7()));
  AlgebraBundle b = parse_bundle(text);
  b.dim = 8;
  b.labels.push_back("z");
  write_bundle(b, (dir / "host.json").string());
  Embedding e = Embedding::identity();
  for (auto& img : e.images) img.emplace_back(0);
  write_bundle(AlgebraBundle::from_embedding(8, e), (dir / "emb.json").string());
  CliRun r = run("--no-timing factorize " + (dir / "host.json").string() + " --embedding " + (dir / "emb.json").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"z\""), std::string::npos) << r.out;
  std::filesystem::remove_all(dir);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "--no-timing factorize " + fixture("m7_dual.json") + " --embedding " + fixture("m7_dual_embedding.json");
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, InvolutiveFactorization) {
  auto dir = std::filesystem::temp_directory_path() / ("malcev_inv_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto f = [&](const char* n) { return (dir / n).string(); };
  ASSERT_EQ(run("build m7 --variant division --gamma 2 --coords dual -o " + f("h.json") + " --embedding-out " +
                f("e.json") + " --form-out " + f("f.json") + " --involution-out " + f("s.json"))
                .code,
            0);
  CliRun r = run("--no-timing factorize " + f("h.json") + " --embedding " + f("e.json") + " --involution " +
                 f("s.json") + " --form " + f("f.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"check\":\"symmetric-coordinates\",\"status\":\"pass\""), std::string::npos) << r.out;
  // form without involution is a usage error
  EXPECT_EQ(run("factorize " + f("h.json") + " --embedding " + f("e.json") + " --form " + f("f.json")).code, 2);
  std::filesystem::remove_all(dir);
}
