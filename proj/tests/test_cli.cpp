#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permchar/cli.hpp"

namespace
{

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = permchar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name)
{
  return std::string(PERMCHAR_TEST_DATA) + "/" + name;
}

} // namespace

TEST(Cli, TableText)
{
  auto r = run({"table", "sym:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("group sym:3"), std::string::npos);
  EXPECT_NE(r.out.find("order 6"), std::string::npos);
  EXPECT_NE(r.out.find("X.3: 2 | 0 | -1"), std::string::npos) << r.out;
}

TEST(Cli, CdpA5)
{
  auto r = run({"cdp", "alt:5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{1,4,5}"), std::string::npos) << r.out;
  auto j = nlohmann::json::parse(run({"cdp", "alt:5", "--json"}).out);
  EXPECT_EQ(j["cd_p"], (std::vector<int>{1, 4, 5}));
}

TEST(Cli, JsonOutputsParse)
{
  for (const auto &args : std::vector<std::vector<std::string>>{
         {"table", "q8", "--json"},
         {"maximal", "sym:4", "--json"},
         {"pchars", "alt:5", "--json"},
         {"pchars", "sym:4", "--pi", "2", "--json"},
         {"monomial", "sl23", "--json"},
         {"verify", "a", "sym:4", "--json"},
         {"verify", "b", "sym:4", "--pi", "2", "--json"},
         {"verify", "lemma", "sym:3", "--json"},
         {"scan", "--conjecture", "sym:4", "alt:5", "--json"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << r.err;
    EXPECT_NO_THROW(nlohmann::json::parse(r.out)) << args[0];
  }
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"table"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"table", "foo:3"}).code, 1);
  EXPECT_EQ(run({"table", "file:" + data("malformed.txt")}).code, 1);
  EXPECT_EQ(run({"table", "sym:8"}).code, 2);
  EXPECT_EQ(run({"table", "sym:6", "--max-order", "100"}).code, 2);
  EXPECT_EQ(run({"maximal", "sym:7"}).code, 2);
  EXPECT_EQ(run({"pchars", "file:" + data("a5.txt")}).code, 2);
  EXPECT_EQ(run({"verify", "b", "sym:4"}).code, 1);
  EXPECT_EQ(run({"verify", "x", "sym:4"}).code, 1);
  EXPECT_EQ(run({"verify", "b", "sym:4", "--pi", "4"}).code, 1);
  EXPECT_EQ(run({"verify", "nilp", "q8"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorMentionsLine)
{
  auto r = run({"table", "file:" + data("malformed.txt")});
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, WorkersDoNotChangeOutput)
{
  for (const auto &base : std::vector<std::vector<std::string>>{
         {"table", "psl2:8"}, {"pchars", "alt:6"}, {"scan", "--conjecture", "sym:4", "alt:5", "psl2:7", "dih:12"}}) {
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--workers", "4"});
    EXPECT_EQ(run(one).out, run(four).out) << base[0];
  }
}

TEST(Cli, TimingOnlyWhenAsked)
{
  EXPECT_EQ(run({"verify", "a", "sym:4", "--json"}).out.find("seconds"), std::string::npos);
  EXPECT_NE(run({"verify", "a", "sym:4", "--json", "--timing"}).out.find("seconds"), std::string::npos);
}

TEST(Cli, OutFile)
{
  auto path = std::filesystem::temp_directory_path() / "permchar_cli_out.txt";
  auto r = run({"cdp", "sym:4", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"cdp", "sym:4"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, VerdictLogAppendsJsonLines)
{
  auto path = std::filesystem::temp_directory_path() / "permchar_cli_log.jsonl";
  std::filesystem::remove(path);
  ASSERT_EQ(run({"verify", "nilp", "q8", "--log", path.string()}).code, 0);
  ASSERT_EQ(run({"scan", "--conjecture", "sym:4", "alt:5", "--log", path.string()}).code, 0);
  std::ifstream in(path);
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(in, line);)
    lines.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["claim"], "nilpotency");
  EXPECT_EQ(lines[1]["group"], "sym:4");
  EXPECT_EQ(lines[2]["group"], "alt:5");
  std::filesystem::remove(path);
}
