#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pixshuffle/cli.hpp"
#include "pixshuffle/ppm.hpp"
#include "support.hpp"

namespace pixshuffle {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pixshuffle_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string fixture(const std::string& name) {
    return (fs::path(PIXSHUFFLE_TEST_DATA) / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, KeyOnConstantFixture) {
  const Result r = run({"key", fixture("constant_2x3.ppm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "c=2 p=3 He=0.0000 mean=100.0000 Sk=1\n");
}

TEST_F(CliTest, KeyOnBalancedFixture) {
  const Result r = run({"key", fixture("balanced_2x2.ppm")});
  EXPECT_EQ(r.out, "c=2 p=2 He=1.0000 mean=127.5000 Sk=1\n");
}

TEST_F(CliTest, EncryptDecryptPreservesBytes) {
  for (const std::string mode : {"rotate", "none"}) {
    for (const std::string name : {"gradient_4x5.ppm", "pixel_1x1.ppm", "row_1x7.ppm",
                                   "balanced_2x2.ppm", "gradient_4x5_commented.ppm"}) {
      const std::string enc = path("enc.ppm");
      const std::string dec = path("dec.ppm");
      const Result e = run({"encrypt", fixture(name), enc, "--mode", mode});
      ASSERT_EQ(e.code, 0) << e.err;
      const Result d = run({"decrypt", enc, dec, "--mode", mode});
      ASSERT_EQ(d.code, 0) << d.err;
      EXPECT_EQ(e.out, d.out);
      EXPECT_EQ(read_file(dec), write_ppm(load_ppm(fixture(name)))) << name << " " << mode;
      if (name.find("commented") == std::string::npos) {
        EXPECT_EQ(read_file(dec), read_file(fixture(name))) << name << " " << mode;
      }
    }
  }
}

TEST_F(CliTest, DefaultModeIsRotate) {
  run({"encrypt", fixture("pixel_1x1.ppm"), path("a.ppm")});
  run({"encrypt", fixture("pixel_1x1.ppm"), path("b.ppm"), "--mode", "rotate"});
  EXPECT_EQ(read_file(path("a.ppm")), read_file(path("b.ppm")));
  const ImageMatrix img = load_ppm(path("a.ppm"));
  EXPECT_EQ(img.at(0, 0, ChannelLabel::R), 20);
}

TEST_F(CliTest, KeyOverrideRoundTrip) {
  const Result e = run({"encrypt", fixture("gradient_4x5.ppm"), path("e.ppm"), "--key", "9"});
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("Sk=9"), std::string::npos);
  ASSERT_EQ(run({"decrypt", path("e.ppm"), path("d.ppm"), "--key", "9"}).code, 0);
  EXPECT_EQ(load_ppm(path("d.ppm")), load_ppm(fixture("gradient_4x5.ppm")));
}

TEST_F(CliTest, KeyLineIdenticalForPlainAndCiphered) {
  run({"encrypt", fixture("gradient_4x5.ppm"), path("e.ppm")});
  EXPECT_EQ(run({"key", fixture("gradient_4x5.ppm")}).out, run({"key", path("e.ppm")}).out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  const Result unknown = run({"shred", "x.ppm"});
  EXPECT_EQ(unknown.code, cli::kUsage);
  EXPECT_NE(unknown.err.find("encrypt"), std::string::npos);
  EXPECT_EQ(run({"encrypt", fixture("pixel_1x1.ppm")}).code, cli::kUsage);
  EXPECT_EQ(run({"encrypt", fixture("pixel_1x1.ppm"), path("o.ppm"), "--mode", "swap"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"encrypt", fixture("pixel_1x1.ppm"), path("o.ppm"), "--key", "0"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"analyze", fixture("pixel_1x1.ppm"), "--format", "xml"}).code, cli::kUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST_F(CliTest, IoAndFormatErrors) {
  EXPECT_EQ(run({"key", path("missing.ppm")}).code, cli::kIoError);
  write_file(path("bad.ppm"), std::vector<std::uint8_t>{'P', '6', ' ', '2', ' ', '2', ' ', '9', '\n'});
  const Result r = run({"key", path("bad.ppm")});
  EXPECT_EQ(r.code, cli::kIoError);
  EXPECT_NE(r.err.find("maxval"), std::string::npos);
  EXPECT_EQ(run({"encrypt", fixture("pixel_1x1.ppm"), path("no/such/dir/o.ppm")}).code,
            cli::kIoError);
}

TEST_F(CliTest, AnalyzeStructuredToFile) {
  run({"encrypt", fixture("gradient_4x5.ppm"), path("e.ppm")});
  const Result r = run({"analyze", fixture("gradient_4x5.ppm"), "--against", path("e.ppm"), "--n",
                        "7", "--out", path("report.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(read_file(path("report.json")));
  EXPECT_EQ(doc["series_length"], 7);
  EXPECT_EQ(doc["plain"]["series"]["R"].size(), 7u);
  EXPECT_EQ(doc["verdicts"]["all_passed"], true);
}

TEST_F(CliTest, AnalyzeCsvToStdout) {
  const Result r = run({"analyze", fixture("pixel_1x1.ppm"), "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "index,R,G,B\n0,10,20,30\n");
}

TEST_F(CliTest, AnalyzeDefaultsToTenThousandPixels) {
  std::mt19937_64 rng(137);
  save_ppm(path("big.ppm"), testing::random_image(rng, 120, 100));
  const Result r = run({"analyze", path("big.ppm")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["plain"]["series"]["G"].size(), 10000u);
}

TEST_F(CliTest, AnalyzeFlagsInvariantViolations) {
  const Result other = run({"analyze", fixture("gradient_4x5.ppm"), "--against",
                            fixture("gradient_4x5.ppm")});
  EXPECT_EQ(other.code, 0);

  std::mt19937_64 rng(139);
  save_ppm(path("noise.ppm"), testing::random_image(rng, 4, 5));
  const Result mismatch =
      run({"analyze", fixture("gradient_4x5.ppm"), "--against", path("noise.ppm")});
  EXPECT_EQ(mismatch.code, cli::kInvariantViolation);
  EXPECT_NE(mismatch.err.find("invariant violation"), std::string::npos);
  EXPECT_FALSE(mismatch.out.empty());

  const Result shape =
      run({"analyze", fixture("gradient_4x5.ppm"), "--against", fixture("pixel_1x1.ppm")});
  EXPECT_EQ(shape.code, cli::kInvariantViolation);
}

}  // namespace
}  // namespace pixshuffle
