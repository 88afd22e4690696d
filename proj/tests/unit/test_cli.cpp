#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ctxdl/textio.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = ctxdl::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(CTXDL_TEST_DIR) + "/../data/" + f; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ctxdl_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ContextualizeWritesOutput) {
  auto r = run({"contextualize", "--strategy", "ndterms", "-O", data("babylon.dl"), "-A", data("ctx.dl"), "-o",
                tmp("out.dl")});
  ASSERT_EQ(r.status, ctxdl::cli::kOk) << r.err;
  auto doc = ctxdl::parse_document(ctxdl::testing::read_text(tmp("out.dl")));
  auto golden = ctxdl::parse_document(ctxdl::testing::read_text(ctxdl::testing::golden_path("ndterms.dl")));
  EXPECT_TRUE(ctxdl::same_axioms(doc.ontologies()[0]->ontology, golden.ontologies()[0]->ontology));
}

TEST_F(Cli, ContextualizeToStdout) {
  auto r = run({"contextualize", "--strategy", "rdf", "-O", data("babylon.dl"), "-A", data("ctx.dl")});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("subject(st@CA@"), std::string::npos);
}

TEST_F(Cli, Models) {
  auto sat = run({"models", "-O", data("babylon.dl"), "--witness", tmp("w.model")});
  EXPECT_EQ(sat.status, 0);
  EXPECT_EQ(sat.out, "satisfiable at 1\n");
  EXPECT_EQ(ctxdl::parse_document(ctxdl::testing::read_text(tmp("w.model"))).models().size(), 1U);
  auto unsat = run({"models", "-O", data("irreflexive.dl"), "--bound", "2"});
  EXPECT_EQ(unsat.status, ctxdl::cli::kNegative);
  EXPECT_EQ(unsat.out, "no model up to 2\n");
}

TEST_F(Cli, Entails) {
  auto yes = run({"entails", "-P", data("premise.dl"), "-C", data("conclusion.dl")});
  EXPECT_EQ(yes.status, 0);
  EXPECT_EQ(yes.out, "no counterexample up to 3\n");
  auto no = run({"entails", "-P", data("conclusion.dl"), "-C", data("premise.dl"), "--witness", tmp("c.model")});
  EXPECT_EQ(no.status, ctxdl::cli::kNegative);
  EXPECT_TRUE(fs::exists(tmp("c.model")));
}

TEST_F(Cli, CheckWritesReportAndWitness) {
  auto r = run({"check", "--property", "inconsistency", "--strategy", "rdf", "-O", data("irreflexive.dl"), "-A",
                data("ctx.dl"), "--bound", "3", "--report", tmp("r.jsonl")});
  EXPECT_EQ(r.status, ctxdl::cli::kNegative);
  EXPECT_NE(r.out.find("violated"), std::string::npos);
  auto rec = nlohmann::json::parse(ctxdl::testing::read_text(tmp("r.jsonl")));
  EXPECT_EQ(rec["outcome"], "violated");
  EXPECT_EQ(rec["strategy"], "rdf");
  EXPECT_EQ(rec["bound"], 3);
  ASSERT_TRUE(rec["witness"].is_string());
  EXPECT_TRUE(fs::exists(rec["witness"].get<std::string>()));

  auto holds = run({"check", "--property", "inconsistency", "--strategy", "ndterms", "-O", data("irreflexive.dl"),
                    "-A", data("ctx.dl"), "--bound", "2", "--report", tmp("r.jsonl")});
  EXPECT_EQ(holds.status, 0);
  std::istringstream lines(ctxdl::testing::read_text(tmp("r.jsonl")));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 2);
}

TEST_F(Cli, CheckEntailmentNeedsConclusion) {
  auto r = run({"check", "--property", "entailment", "--strategy", "ndterms", "-O", data("premise.dl"), "-A",
                data("ctx.dl")});
  EXPECT_EQ(r.status, ctxdl::cli::kUsage);
  auto ok = run({"check", "--property", "entailment", "--strategy", "ndterms", "-O", data("premise.dl"), "-A",
                 data("ctx.dl"), "-C", data("conclusion.dl"), "--bound", "2"});
  EXPECT_EQ(ok.status, 0) << ok.err;
}

TEST_F(Cli, Combine) {
  std::ofstream(tmp("other.dl")) << "annotation CB anchor b {\n  Src(b) .\n}\n";
  auto r = run({"combine", "--strategy", "ndterms", "--pair", data("babylon.dl") + "," + data("ctx.dl"), "--pair",
                data("conclusion.dl") + "," + tmp("other.dl")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("cityOf@CB"), std::string::npos);
  EXPECT_NE(r.out.find("capital@CA"), std::string::npos);
  auto dup = run({"combine", "--strategy", "ndterms", "--pair", data("babylon.dl") + "," + data("ctx.dl"), "--pair",
                  data("conclusion.dl") + "," + data("ctx.dl")});
  EXPECT_EQ(dup.status, ctxdl::cli::kUsage);
}

TEST_F(Cli, Validate) {
  EXPECT_EQ(run({"validate", "-A", data("ctx.dl")}).status, 0);
  std::ofstream(tmp("bad.dl")) << "annotation X anchor a {\n  P(a, b) .\n  S(d, e) .\n}\n";
  auto r = run({"validate", "-A", tmp("bad.dl")});
  EXPECT_EQ(r.status, ctxdl::cli::kNegative);
  EXPECT_NE(r.err.find("d"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, ctxdl::cli::kUsage);
  EXPECT_EQ(run({"models", "-O", data("babylon.dl"), "--bound", "7"}).status, ctxdl::cli::kUsage);
  EXPECT_EQ(run({"models", "-O", data("babylon.dl"), "--bound", "0"}).status, ctxdl::cli::kUsage);
  EXPECT_EQ(run({"models", "-O", tmp("missing.dl")}).status, ctxdl::cli::kUsage);
  EXPECT_EQ(run({"contextualize", "--strategy", "bogus", "-O", data("babylon.dl"), "-A", data("ctx.dl")}).status,
            ctxdl::cli::kUsage);
  std::ofstream(tmp("broken.dl")) << "ontology x { C(a) }\n";
  auto r = run({"models", "-O", tmp("broken.dl")});
  EXPECT_EQ(r.status, ctxdl::cli::kUsage);
  EXPECT_NE(r.err.find("1:"), std::string::npos);
  // An annotation file is not an ontology.
  EXPECT_EQ(run({"models", "-O", data("ctx.dl")}).status, ctxdl::cli::kUsage);
}

TEST_F(Cli, BudgetExhaustionIsUsageStatus) {
  ::setenv("CTXDL_BUDGET", "1", 1);
  auto r = run({"models", "-O", data("irreflexive.dl"), "--bound", "3"});
  ::unsetenv("CTXDL_BUDGET");
  EXPECT_EQ(r.status, ctxdl::cli::kUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST_F(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("contextualize"), std::string::npos);
}
