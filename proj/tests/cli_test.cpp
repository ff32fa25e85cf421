#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "specht/cli/app.hpp"
#include "specht/cli/cache.hpp"
#include "specht/cli/fixtures.hpp"
#include "specht/cli/record.hpp"
#include "specht/cli/verify.hpp"
#include "specht/errors.hpp"
#include "specht/oracle.hpp"

using namespace specht;
using namespace specht::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("specht-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST(Cli, EdivPrintsDivisors) {
  auto r = invoke({"ediv", "2,2", "--no-cache"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("divisors:     2 6\n"), std::string::npos) << r.out;
  auto big = invoke({"ediv", "2^2,1^2", "--no-cache"});
  EXPECT_NE(big.out.find("4 20^3 40 80^4"), std::string::npos) << big.out;
  auto val = invoke({"ediv", "3,2,1", "--prime", "3", "--no-cache"});
  EXPECT_NE(val.out.find("3-valuations: 0 0 0 0 1 1 1 1 1 1 1 1 2 2 2 2"), std::string::npos) << val.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"ediv", "3,4", "--no-cache"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ediv", "2,2", "--prime", "4", "--no-cache"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "no-such-suite"}).code, kExitUsage);
  EXPECT_EQ(invoke({"formula", "schaper-family", "--family", "n-4,2^2", "--n", "7", "--prime", "3"}).code, kExitUsage);
  auto err = invoke({"ediv", "x"});
  EXPECT_FALSE(err.err.empty());
}

TEST(Cli, OtherSubcommands) {
  auto tc = invoke({"formula", "two-column", "--n", "6"});
  EXPECT_EQ(tc.code, kExitOk) << tc.err;
  EXPECT_NE(tc.out.find("4 20^3 40 80^4"), std::string::npos) << tc.out;
  auto pell = invoke({"pell", "--bound", "1000"});
  EXPECT_EQ(pell.code, kExitOk);
  EXPECT_NE(pell.out.find("1 1 1"), std::string::npos);
  auto c = invoke({"conm5", "--n", "6", "--h", "2"});
  EXPECT_EQ(c.out.substr(0, 6), "holds\n");
  EXPECT_EQ(invoke({"symmetric", "3,2,1"}).code, kExitOk);
  EXPECT_EQ(invoke({"symmetric", "3,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"jantzen", "3,2,1", "--prime", "3", "--direct"}).code, kExitOk);
  EXPECT_EQ(invoke({"formula", "hook", "--n", "5", "--l", "2", "--prime", "2"}).code, kExitOk);
  EXPECT_EQ(invoke({"formula", "two-row", "--n", "8", "--m", "3", "--prime", "2"}).code, kExitOk);
  EXPECT_EQ(invoke({"formula", "large-prime", "--partition", "3,2", "--prime", "3"}).code, kExitOk);
  EXPECT_EQ(invoke({"unimodular", "--n", "6", "--m", "3"}).code, kExitOk);
}

TEST(Record, JsonRoundTrip) {
  auto rec = make_record(Partition({3, 2, 1}), gram_chain(Partition({3, 2, 1})));
  EXPECT_EQ(rec.rank, 16u);
  EXPECT_EQ(rec.det, "16815125390625");  // 2025^4
  EXPECT_EQ(rec.p_parts.at(5), (std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(record_from_json(nlohmann::json::parse(serialize(rec))), rec);
  EXPECT_EQ(record_chain(rec), gram_chain(Partition({3, 2, 1})));
  auto bad = rec;
  bad.det = "7";
  EXPECT_THROW(validate_record(bad), InconsistencyError);
  bad = rec;
  std::swap(bad.elementary_divisors.front(), bad.elementary_divisors.back());
  EXPECT_THROW(validate_record(bad), InconsistencyError);
}

TEST(Cache, RoundTripIsByteIdentical) {
  TempDir dir;
  const std::vector<std::string> cmd{"ediv", "3,2,1", "--json", "--cache-dir", dir.path().string()};
  auto first = invoke(cmd);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  ResultCache cache(dir.path());
  const fs::path file = cache.path_for(Partition({3, 2, 1}));
  EXPECT_EQ(file.filename(), "ediv-3_2_1-v0.1.0.json");
  ASSERT_TRUE(fs::exists(file));
  auto second = invoke(cmd);
  EXPECT_EQ(second.code, kExitOk);
  EXPECT_TRUE(second.err.empty()) << second.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(slurp(file), first.out);
  auto loaded = cache.load(Partition({3, 2, 1}));
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(serialize(*loaded), first.out);
}

TEST(Cache, CorruptEntryFallsBack) {
  TempDir dir;
  ResultCache cache(dir.path());
  const Partition l({2, 2});
  ASSERT_TRUE(cache.store(l, make_record(l, gram_chain(l))));
  const std::string good = slurp(cache.path_for(l));
  for (const std::string junk : {"{not json", "{\"partition\": \"2,2\"}", ""}) {
    std::ofstream(cache.path_for(l), std::ios::binary | std::ios::trunc) << junk;
    auto r = invoke({"ediv", "2,2", "--json", "--cache-dir", dir.path().string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos) << junk;
    EXPECT_EQ(r.out, good);
    EXPECT_EQ(slurp(cache.path_for(l)), good);
  }
  // a valid record for another shape under this key is rejected too
  const Partition other({3, 1});
  std::ofstream(cache.path_for(l), std::ios::binary | std::ios::trunc) << serialize(make_record(other, gram_chain(other)));
  EXPECT_FALSE(cache.load(l).has_value());
  EXPECT_FALSE(cache.last_error().empty());
}

TEST(Cache, DirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/x")), fs::path("/tmp/x"));
  ::setenv("SPECHT_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
  ::unsetenv("SPECHT_CACHE");
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path(".specht-cache"));
}

TEST(Verify, FixturesAgree) {
  std::size_t checked = 0;
  for (const auto& f : fixture_corpus()) {
    if (f.reference_only) continue;
    ++checked;
    auto bad = f.check();
    EXPECT_FALSE(bad.has_value()) << f.id << ": " << *bad;
  }
  EXPECT_GE(checked, 15u);
  auto r = invoke({"verify", "fixtures"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Verify, TwoRowSuite) {
  SuiteOptions o;
  o.max_n = 10;
  auto r = run_suite("two-row", o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(invoke({"verify", "two-row", "--max-n", "8"}).code, kExitOk);
}

TEST(Verify, CaseRunnerReportsFailuresInOrder) {
  std::vector<Case> cases;
  for (int i = 0; i < 20; ++i)
    cases.push_back({"c" + std::to_string(i), [i]() -> std::optional<std::string> {
                       if (i == 7) throw std::runtime_error("boom");
                       if (i % 5 == 3) return "odd one";
                       return std::nullopt;
                     }});
  auto bad = run_cases(cases, 4);
  ASSERT_EQ(bad.size(), 5u);
  EXPECT_NE(bad[0].find("c3"), std::string::npos);
  EXPECT_NE(bad[1].find("c7"), std::string::npos);
  EXPECT_NE(bad[1].find("boom"), std::string::npos);
  EXPECT_NE(bad[4].find("c18"), std::string::npos);
}
