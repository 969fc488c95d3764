#include <aip/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aip::cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("aip_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

aip::cli::Json json_of(const Run& r) { return aip::cli::Json::parse(r.out); }

}  // namespace

TEST(Cli, InvariantJson) {
  const auto r = run({"invariant", "O1+ O2+ U1+ U2+"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["polynomial"], "t^-1 - 2 + t");
  EXPECT_EQ(j["writhe"], 2);
  EXPECT_EQ(j["coloring"][0], aip::cli::Json({1, 0, 1, 2}));
  EXPECT_EQ(j["weights"][0]["W"], 1);
  EXPECT_EQ(j["weights"][1]["Wplus"], -1);
  EXPECT_EQ(j["canonical"], "O1+ O2+ U1+ U2+");
}

TEST(Cli, InvariantCsvAndText) {
  const auto csv = run({"invariant", "O1+ O2+ U1+ U2+", "--format", "csv"});
  EXPECT_EQ(csv.out, "code,writhe,polynomial,v2,v3,v4\nO1+ O2+ U1+ U2+,2,t^-1 - 2 + t,1,0,1/12\n");
  const auto text = run({"--format", "text", "invariant", "O1+ U1+"});
  EXPECT_NE(text.out.find("P = 0"), std::string::npos);
}

TEST(Cli, Vassiliev) {
  const auto j = json_of(run({"vassiliev", "--max-order", "4", "O1+ O2+ U1+ U2+"}));
  EXPECT_EQ(j["vassiliev"]["1"], "0");
  EXPECT_EQ(j["vassiliev"]["2"], "1");
  EXPECT_EQ(j["vassiliev"]["3"], "0");
  EXPECT_EQ(j["vassiliev"]["4"], "1/12");
}

TEST(Cli, BiquandleSearch) {
  const auto r = run({"biquandle", "search", "5", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 20);
  EXPECT_EQ(json_of(run({"biquandle", "search", "5"}))["count"], 20);
}

TEST(Cli, BiquandleFiles) {
  const auto affine = temp_file("inc.txt", "5 1 0 1 1 0 -1\n");
  const auto check = json_of(run({"biquandle", "check", affine}));
  EXPECT_EQ(check["flat_biquandle"], true);
  EXPECT_EQ(check["weight_condition"], true);
  EXPECT_EQ(json_of(run({"biquandle", "color", "R1 R2 L1 L2", affine}))["count"], 5);
  const auto doodle = json_of(run({"biquandle", "doodle", "O1+ O2+ U1+ U2+", affine}));
  EXPECT_EQ(doodle["coefficients"], aip::cli::Json({-10, 5, 0, 0, 5}));

  const auto table = temp_file("q2.txt", aip::serialize(aip::basic_preflat(5, 2, 0)));
  const auto q2 = json_of(run({"biquandle", "check", table}));
  EXPECT_EQ(q2["preflat"], true);
  EXPECT_EQ(q2["axiom3"]["ok"], false);

  EXPECT_EQ(run({"biquandle", "check", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"biquandle", "check", temp_file("bad.txt", "2\n0 1\n")}).code, 2);
}

TEST(Cli, LinkCommands) {
  const auto j = json_of(run({"link-invariant", "O1+ U2+ ; U1+ O2+", "--offsets=1,0"}));
  EXPECT_EQ(j["polynomial"], "0");
  const auto zero = json_of(run({"link-invariant", "O1+ U2+ ; U1+ O2+", "--offsets", "0,0"}));
  EXPECT_EQ(zero["polynomial"], "t^-1 - 2 + t");
  const auto sym = json_of(run({"symbolic-weights", "O1+ U2+ ; U1+ O2+"}));
  EXPECT_EQ(sym["weights"][0]["weight"], "-1 + off_0 - off_1");
  EXPECT_EQ(run({"link-invariant", "O1+ O2+ ; U1+ U2+", "--offsets", "0,0"}).code, 3);
  EXPECT_EQ(run({"symbolic-weights", "O1+ O2+ ; U1+ U2+"}).code, 3);
}

TEST(Cli, Transform) {
  EXPECT_EQ(json_of(run({"transform", "--mirror", "O1+ O2+ U1+ U2+"}))["result"], "U1- U2- O1- O2-");
  EXPECT_EQ(json_of(run({"transform", "--reverse", "O1+ O2+ U1+ U2+"}))["result"], "U2+ U1+ O2+ O1+");
  EXPECT_EQ(json_of(run({"transform", "--switch", "1", "O1+ O2+ U1+ U2+"}))["result"], "U1- O2+ O1- U2+");
  EXPECT_EQ(json_of(run({"transform", "--virtualize", "1", "O1+ O2+ U1+ U2+"}))["result"], "O1- O2+ U1- U2+");
  EXPECT_EQ(json_of(run({"transform", "--smooth-zero", "O3+ U3+ O1+ O2+ U1+ U2+"}))["result"],
            "() ; O1+ O2+ U1+ U2+");
  EXPECT_EQ(run({"transform", "O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"transform", "--mirror", "--reverse", "O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"transform", "--switch", "7", "O1+ U1+"}).code, 2);
}

TEST(Cli, MovesAreDeterministic) {
  const auto a = run({"moves", "O1+ O2+ U1+ U2+", "--walk", "12", "--seed", "42"});
  const auto b = run({"moves", "O1+ O2+ U1+ U2+", "--walk", "12", "--seed", "42"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json_of(a);
  EXPECT_EQ(j["trace"].size(), 12u);
  EXPECT_EQ(j["polynomial_after"], "t^-1 - 2 + t");
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--trials", "4", "--steps", "6", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["passed"], 20);
  EXPECT_EQ(run({"verify", "--trials", "4", "--steps", "6", "--seed", "1"}).out, r.out);
}

TEST(Cli, FlatAndGraph) {
  const auto cert = json_of(run({"flat", "R1 R2 L1 L2", "--certificate"}));
  EXPECT_EQ(cert["certified"], false);
  EXPECT_EQ(cert["witness"], "U1- O2+ O1- U2+");
  EXPECT_EQ(run({"flat", "R1 R2 L1 L2"}).code, 1);
  const auto g = json_of(run({"graph", "O1+ O2+ U1+ U2+", "--singular", "1"}));
  EXPECT_EQ(g["polynomial"], "t^-1 - 2 + t");
  EXPECT_EQ(run({"graph", "O1+ O2+ U1+ U2+", "--singular", "9"}).code, 2);
}

TEST(Cli, Parse) {
  const auto j = json_of(run({"parse", "U2+ U1+ O2+ O1+"}));
  EXPECT_EQ(j["canonical"], "O1+ O2+ U1+ U2+");
  EXPECT_EQ(j["flat"], "L2 L1 R2 R1");
  EXPECT_EQ(json_of(run({"parse", "L1 R1"}))["kind"], "flat");
  EXPECT_EQ(run({"parse", "O1+ O1+ U1+"}).code, 2);
  EXPECT_EQ(run({"parse", "Q1+"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"invariant"}).code, 1);
  EXPECT_EQ(run({"invariant", "O1+", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"invariant", "O1+ U1-"}).code, 2);
  EXPECT_EQ(run({"invariant", "O1+ O2+ ; U1+ U2+"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BatchEqualsSingleInvocations) {
  const std::vector<std::string> codes{"O1+ O2+ U1+ U2+", "O1+ U2+ O3+ U1+ O2+ U3+", "U1- O2+ O1- U2+",
                                       "O1+ U2+ ; U1+ O2+"};
  std::string content = "# corpus\n\n";
  for (const auto& c : codes) content += c + "\n";
  content += "O1+ O1+\n";
  const auto path = temp_file("batch.txt", content);

  const auto batch = run({"batch", "--input", path});
  EXPECT_EQ(batch.code, 2);
  std::istringstream lines(batch.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    const auto record = aip::cli::Json::parse(line);
    if (i < codes.size()) {
      EXPECT_EQ(record["line"], i + 3);
      EXPECT_EQ(record["result"], json_of(run({"invariant", codes[i]})));
    } else {
      EXPECT_TRUE(record.contains("error"));
    }
    ++i;
  }
  EXPECT_EQ(i, codes.size() + 1);

  const auto csv = run({"batch", "--input", path, "--format", "csv"});
  std::string expected = "code,writhe,polynomial,v2,v3,v4\n";
  for (const auto& c : codes) {
    const auto single = run({"invariant", c, "--format", "csv"}).out;
    expected += single.substr(single.find('\n') + 1);
  }
  EXPECT_EQ(csv.out, expected);
}
