#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "ontoforge/pom.hpp"
#include "ontoforge/text.hpp"
#include "test_support.hpp"

using namespace ontoforge;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ONTOFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string globals(const fixtures::TempDir& work) {
  return "--corpus " + (fixtures::data_dir() / "corpus-insurance").string() + " --wordnet " +
         (fixtures::data_dir() / "wordnet-mini").string() + " --repo " +
         (fixtures::data_dir() / "repository-insurance").string() + " --work-dir " + work.path().string();
}

double first_score(const std::string& tsv_out, const std::string& doc) {
  for (const auto& line : text::split(tsv_out, '\n')) {
    const auto cols = text::split(line, '\t');
    if (cols.size() >= 2 && cols[1] == doc) return std::stod(cols[0]);
  }
  return -1.0;
}

}  // namespace

TEST(Cli, UsageErrorsExitNonZero) {
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("frobnicate").status, 0);
  EXPECT_EQ(run("--help").status, 0);
  fixtures::TempDir work;
  EXPECT_EQ(run("--corpus /no/such/dir --work-dir " + work.path().string() + " learn").status, 1);
  EXPECT_EQ(run("--work-dir " + work.path().string() + " --decay 3 search idv").status, 1);
}

TEST(Cli, LearnIsByteIdenticalAcrossRuns) {
  fixtures::TempDir a, b;
  ASSERT_EQ(run(globals(a) + " learn").status, 0);
  ASSERT_EQ(run(globals(b) + " learn").status, 0);
  for (const char* f : {"pom.json", "relations.tsv", "ontology.ttl"})
    EXPECT_EQ(text::read_file(a / f), text::read_file(b / f)) << f;
}

TEST(Cli, ReviewRoundTripAndBadOverride) {
  fixtures::TempDir work;
  const auto g = globals(work);
  ASSERT_EQ(run(g + " learn").status, 0);
  const auto review = (work / "review.tsv").string();
  ASSERT_EQ(run(g + " review export " + review).status, 0);
  const std::string exported = text::read_file(review);
  EXPECT_TRUE(exported.starts_with(pom::kReviewHeader));
  ASSERT_EQ(run(g + " review import " + review).status, 0);
  ASSERT_EQ(run(g + " review export " + (work / "again.tsv").string()).status, 0);
  EXPECT_EQ(text::read_file(work / "again.tsv"), exported);

  auto with_override = [&](const std::string& value) {
    std::string out;
    for (const auto& line : text::split(exported, '\n')) {
      auto cols = text::split(line, '\t');
      if (!cols.empty() && cols[0] == "premium") cols.back() = value;
      if (!line.empty()) out += text::join(cols, "\t") + "\n";
    }
    return out;
  };
  text::write_file(work / "bad.tsv", with_override("0.5"));
  const std::string pom_before = text::read_file(work / "pom.json");
  EXPECT_EQ(run(g + " review import " + (work / "bad.tsv").string()).status, 1);
  EXPECT_EQ(text::read_file(work / "pom.json"), pom_before);

  text::write_file(work / "drop.tsv", with_override("0"));
  ASSERT_EQ(run(g + " learn --review " + (work / "drop.tsv").string()).status, 0);
  EXPECT_EQ(text::read_file(work / "ontology.ttl").find("rdfs:label \"premium\""), std::string::npos);
}

TEST(Cli, SearchSelectSearchRaisesScore) {
  fixtures::TempDir work;
  const auto g = globals(work);
  ASSERT_EQ(run(g + " learn").status, 0);
  ASSERT_EQ(run(g + " index").status, 0);
  const auto before = run(g + " search idv --user u1");
  ASSERT_EQ(before.status, 0);
  const double s0 = first_score(before.out, "motor-premium-guide.txt");
  ASSERT_GT(s0, 0.0);
  ASSERT_EQ(run(g + " select u1 motor-premium-guide.txt").status, 0);
  const double s1 = first_score(run(g + " search idv --user u1").out, "motor-premium-guide.txt");
  EXPECT_GT(s1, s0);
  EXPECT_EQ(run(g + " select u1 nope.txt").status, 1);
  const auto none = run(g + " search unicorn");
  EXPECT_EQ(none.status, 0);
  EXPECT_EQ(none.out, "no results\n");
  const auto js = run(g + " search idv --json");
  EXPECT_TRUE(js.out.starts_with("[{\"doc_id\":"));
  EXPECT_EQ(run(g + " search idv --mode bogus").status, 1);
}

TEST(Cli, CompareAgainstClassList) {
  fixtures::TempDir work;
  const auto g = globals(work);
  ASSERT_EQ(run(g + " learn").status, 0);
  const auto r = run(g + " compare " + (fixtures::data_dir() / "reference" / "insurance-classes.txt").string());
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("case\t"));
  EXPECT_NE(r.out.find("insurance-classes\t"), std::string::npos);
}

TEST(Cli, FetchLocalSources) {
  fixtures::TempDir work;
  text::write_file(work / "a.html", "<html><body><p>The premium rises.</p></body></html>");
  text::write_file(work / "list.txt", (work / "a.html").string() + "\n");
  const auto r = run("--corpus " + (work / "corpus").string() + " fetch " + (work / "list.txt").string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(std::filesystem::exists(work / "corpus" / "manifest.tsv"));
  text::write_file(work / "empty.txt", "\n");
  EXPECT_EQ(run("--corpus " + (work / "corpus").string() + " fetch " + (work / "empty.txt").string()).status, 1);
}
