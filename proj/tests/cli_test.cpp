#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "downstream/cli/commands.hpp"
#include "downstream/cli/csv.hpp"

namespace ds = downstream;
namespace cli = downstream::cli;

namespace {

struct ExplodeRun {
  int status;
  std::string out;
  std::string rejects;
  std::string err;
};

ExplodeRun explode(const std::string& input, unsigned bits = 8) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream rejects;
  std::ostringstream err;
  const int status = cli::cmd_explode(in, out, rejects, err, {bits});
  return {status, out.str(), rejects.str(), err.str()};
}

std::string generate(const cli::ValidateOptions& options) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_validate_generate(options, out, err), cli::kExitOk) << err.str();
  return out.str();
}

int check(const std::string& vectors, std::string* report = nullptr) {
  std::istringstream in(vectors);
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::cmd_validate_check(in, out, err);
  if (report) *report = out.str() + err.str();
  return status;
}

}  // namespace

TEST(Csv, QuotedFieldsRoundTrip) {
  const auto rows = ds::csv::parse("a,\"b,c\",\"d\"\"e\"\r\n1,,3\n");
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0], (ds::csv::Row{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (ds::csv::Row{"1", "", "3"}));
  std::ostringstream out;
  ds::csv::write_row(out, rows[0]);
  EXPECT_EQ(out.str(), "a,\"b,c\",\"d\"\"e\"\n");
  EXPECT_THROW(ds::csv::parse("a,\"b\n"), ds::parse_error);
}

TEST(ParseCount, Expressions) {
  EXPECT_EQ(cli::parse_count("65536"), 65536U);
  EXPECT_EQ(cli::parse_count("2^16"), 65536U);
  EXPECT_EQ(cli::parse_count("2^31+2^16"), (1ULL << 31) + (1ULL << 16));
  EXPECT_THROW(cli::parse_count("2^64"), ds::parse_error);
  EXPECT_THROW(cli::parse_count("2^63+2^63"), ds::parse_error);
  EXPECT_THROW(cli::parse_count("12x"), ds::parse_error);
  EXPECT_THROW(cli::parse_count(""), ds::parse_error);
}

TEST(Explode, SteadyRow) {
  const auto run = explode(
      "dstream_algo,dstream_S,dstream_T,dstream_storage_hex\nsteady,4,8,05010703\n");
  EXPECT_EQ(run.status, cli::kExitOk);
  EXPECT_EQ(run.out,
            "dstream_row,dstream_algo,dstream_S,dstream_T,dstream_site,dstream_Tbar,dstream_value\n"
            "0,steady,4,8,0,5,5\n"
            "0,steady,4,8,1,1,1\n"
            "0,steady,4,8,2,7,7\n"
            "0,steady,4,8,3,3,3\n");
  EXPECT_EQ(run.rejects, "dstream_row,error\n");
}

TEST(Explode, PassthroughColumnsAndUnwrittenSites) {
  const auto run = explode(
      "trial,dstream_storage_hex,dstream_T,note,dstream_S,dstream_algo\n"
      "7,0a0b0000,2,\"x,y\",4,steady\n");
  EXPECT_EQ(run.status, cli::kExitOk);
  EXPECT_EQ(run.out,
            "dstream_row,trial,dstream_T,note,dstream_S,dstream_algo,dstream_site,dstream_Tbar,"
            "dstream_value\n"
            "0,7,2,\"x,y\",4,steady,0,0,10\n"
            "0,7,2,\"x,y\",4,steady,1,1,11\n"
            "0,7,2,\"x,y\",4,steady,2,,\n"
            "0,7,2,\"x,y\",4,steady,3,,\n");
}

TEST(Explode, MalformedRowIsRejectedOthersProcessed) {
  const auto run = explode(
      "dstream_algo,dstream_S,dstream_T,dstream_storage_hex\n"
      "steady,4,8,0501\n"
      "steady,4,8,05010703\n"
      "tilted,4,99,00000000\n"
      "bogus,4,8,05010703\n"
      "steady,4\n");
  EXPECT_EQ(run.status, cli::kExitData);
  // Only row 1 expands: header + 4 lines.
  EXPECT_EQ(std::count(run.out.begin(), run.out.end(), '\n'), 5);
  EXPECT_NE(run.out.find("\n1,steady,4,8,0,5,5\n"), std::string::npos);
  const auto rejects = ds::csv::parse(run.rejects);
  ASSERT_EQ(rejects.size(), 5U);
  EXPECT_EQ(rejects[1][0], "0");
  EXPECT_EQ(rejects[2][0], "2");
  EXPECT_EQ(rejects[3][0], "3");
  EXPECT_EQ(rejects[4][0], "4");
}

TEST(Explode, UsageErrors) {
  EXPECT_EQ(explode("dstream_algo,dstream_S,dstream_T\nsteady,4,8\n").status, cli::kExitUsage);
  EXPECT_EQ(explode("").status, cli::kExitUsage);
  EXPECT_EQ(explode("dstream_algo,dstream_S,dstream_T,dstream_storage_hex\n", 7).status,
            cli::kExitUsage);
}

TEST(Explode, EmptyTable) {
  const auto run = explode("dstream_algo,dstream_S,dstream_T,dstream_storage_hex\n");
  EXPECT_EQ(run.status, cli::kExitOk);
  EXPECT_EQ(std::count(run.out.begin(), run.out.end(), '\n'), 1);
}

TEST(Explode, OneBitValues) {
  const auto run = explode(
      "dstream_algo,dstream_S,dstream_T,dstream_storage_hex\nsteady,8,8,b0\n", 1);
  ASSERT_EQ(run.status, cli::kExitOk);
  const auto rows = ds::csv::parse(run.out);
  ASSERT_EQ(rows.size(), 9U);
  const std::string expected_bits[] = {"1", "0", "1", "1", "0", "0", "0", "0"};
  for (int k = 0; k < 8; ++k) EXPECT_EQ(rows[static_cast<std::size_t>(k) + 1][6], expected_bits[k]);
}

TEST(Explode, ByteDeterministic) {
  const std::string input =
      "dstream_algo,dstream_S,dstream_T,dstream_storage_hex\n"
      "tilted,8,100,0102030405060708\n"
      "hybrid:steady/4+stretched/4,8,12,0102030405060708\n";
  EXPECT_EQ(explode(input).out, explode(input).out);
}

TEST(Validate, GridSize) {
  cli::ValidateOptions options;
  options.max_S = 8;
  options.max_T = 16;
  const auto rows = ds::csv::parse(generate(options));
  EXPECT_EQ(rows.size(), 33U);
  EXPECT_EQ(rows[0], (ds::csv::Row{"algo", "S", "T", "expected"}));
  EXPECT_EQ(rows[5], (ds::csv::Row{"steady", "4", "4", ""}));
  EXPECT_EQ(rows[6], (ds::csv::Row{"steady", "4", "5", "0"}));
}

TEST(Validate, CapsGridAtCapacity) {
  cli::ValidateOptions options;
  options.algos = {ds::AlgorithmId::tilted()};
  options.max_S = 8;
  options.max_T = 100;
  // S=4 stops at 14 items; S=8 covers all 100.
  EXPECT_EQ(ds::csv::parse(generate(options)).size(), 1U + 14U + 100U);
}

TEST(Validate, CheckSelfGenerated) {
  cli::ValidateOptions options;
  options.algos = {ds::AlgorithmId::steady(), ds::AlgorithmId::stretched(),
                   ds::AlgorithmId::tilted(), ds::parse_algorithm("hybrid:steady/4+tilted/4")};
  options.max_S = 16;
  options.max_T = 200;
  options.large_samples = 20;
  std::string report;
  EXPECT_EQ(check(generate(options), &report), cli::kExitOk) << report;
}

TEST(Validate, DetectsCorruptedVector) {
  cli::ValidateOptions options;
  options.max_S = 8;
  options.max_T = 16;
  std::string vectors = generate(options);
  const auto pos = vectors.find("steady,4,7,2\n");
  ASSERT_NE(pos, std::string::npos);
  vectors.replace(pos, 13, "steady,4,7,1\n");
  std::string report;
  EXPECT_EQ(check(vectors, &report), cli::kExitData);
  EXPECT_NE(report.find("1 mismatches"), std::string::npos) << report;
  EXPECT_NE(report.find("expected 1 got 2"), std::string::npos) << report;
}

TEST(Validate, MalformedFileIsUsageError) {
  EXPECT_EQ(check("algo,S,T\nsteady,4,1\n"), cli::kExitUsage);
  EXPECT_EQ(check("algo,S,T,expected\nsteady,4,x,1\n"), cli::kExitUsage);
  EXPECT_EQ(check("algo,S,T,expected\nsteady,5,1,1\n"), cli::kExitUsage);
  EXPECT_EQ(check(""), cli::kExitUsage);
}

TEST(Bench, RowCounts) {
  cli::BenchOptions options;
  options.depths = {{0, 1U << 12}};
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cli::cmd_bench(options, out, err), cli::kExitOk);
  const auto rows = ds::csv::parse(out.str());
  EXPECT_EQ(rows.size(), 91U);
  EXPECT_EQ(rows[0], (ds::csv::Row{"algo", "S", "T_lo", "T_hi", "items", "total_ns",
                                   "ns_per_item", "replicate"}));

  options.depths = {{0, 1U << 12}, cli::parse_window("2^31:2^31+2^12")};
  std::ostringstream out2;
  ASSERT_EQ(cli::cmd_bench(options, out2, err), cli::kExitOk);
  EXPECT_EQ(ds::csv::parse(out2.str()).size(), 181U);
}

TEST(Bench, UsageErrors) {
  cli::BenchOptions options;
  options.replicates = 0;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_bench(options, out, err), cli::kExitUsage);
  options.replicates = 1;
  options.algo = ds::Curation::tilted;
  options.sizes = {8};
  options.depths = {{0, 300}};
  EXPECT_EQ(cli::cmd_bench(options, out, err), cli::kExitUsage);
  options.depths = {{0, 200}};
  EXPECT_EQ(cli::cmd_bench(options, out, err), cli::kExitOk);
}

TEST(Lookup, Output) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_lookup(ds::AlgorithmId::steady(), 4, 8, out, err), cli::kExitOk);
  EXPECT_EQ(out.str(), "0\t5\n1\t1\n2\t7\n3\t3\n");
  std::ostringstream out2;
  EXPECT_EQ(cli::cmd_lookup(ds::AlgorithmId::steady(), 4, 4, out2, err), cli::kExitOk);
  EXPECT_EQ(out2.str(), "0\t0\n1\t1\n2\t2\n3\t3\n");
  std::ostringstream out3;
  EXPECT_EQ(cli::cmd_lookup(ds::AlgorithmId::steady(), 4, 2, out3, err), cli::kExitOk);
  EXPECT_EQ(out3.str(), "0\t0\n1\t1\n2\t\n3\t\n");
}

TEST(Lookup, ReplayCapIsDataError) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::cmd_lookup(ds::AlgorithmId::tilted(), 8, std::uint64_t{1} << 40, out, err),
            cli::kExitData);
  EXPECT_NE(err.str().find("replay cap"), std::string::npos);
  EXPECT_EQ(cli::cmd_lookup(ds::AlgorithmId::tilted(), 8, 255, out, err), cli::kExitData);
}
