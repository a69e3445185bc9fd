// dstream: explode buffer dumps, generate/check conformance vectors,
// benchmark site selection, and print site lookups.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "downstream/cli/commands.hpp"

namespace cli = downstream::cli;

namespace {

std::vector<downstream::AlgorithmId> parse_algos(const std::vector<std::string>& names) {
  std::vector<downstream::AlgorithmId> out;
  for (const auto& name : names) out.push_back(downstream::parse_algorithm(name));
  return out;
}

int run_explode(const std::string& input, const std::string& output, unsigned value_bits) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << input << '\n';
    return cli::kExitUsage;
  }
  const cli::ExplodeOptions options{value_bits};
  if (output == "-") return cli::cmd_explode(in, std::cout, std::cerr, std::cerr, options);
  std::ofstream out(output, std::ios::binary);
  std::ofstream rejects(output + ".rejects", std::ios::binary);
  if (!out || !rejects) {
    std::cerr << "error: cannot write " << output << '\n';
    return cli::kExitUsage;
  }
  return cli::cmd_explode(in, out, rejects, std::cerr, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-capacity stream downsampling tools"};
  app.require_subcommand(1);

  auto* explode = app.add_subcommand("explode", "Expand (T, hex) buffer dumps to one row per site");
  std::string explode_in;
  std::string explode_out;
  unsigned value_bits = 8;
  explode->add_option("input", explode_in, "CSV with dstream_algo, dstream_S, dstream_T, dstream_storage_hex")
      ->required();
  explode->add_option("output", explode_out, "Output CSV ('-' for stdout); rejects go to <output>.rejects")
      ->required();
  explode->add_option("--value-bits", value_bits, "Item width in bits")
      ->check(CLI::IsMember({1, 8, 16, 32, 64}));

  auto* validate = app.add_subcommand("validate", "Generate or check conformance vectors");
  bool generate = false;
  std::string check_path;
  std::string vectors_out = "-";
  std::vector<std::string> algo_names{"steady"};
  std::string max_S = "64";
  std::string max_T = "1024";
  std::size_t large_samples = 0;
  auto* gen_flag = validate->add_flag("--generate", generate, "Write a vector table");
  auto* check_opt = validate->add_option("--check", check_path, "Check a vector table");
  gen_flag->excludes(check_opt);
  validate->add_option("--output", vectors_out, "Where --generate writes ('-' for stdout)");
  validate->add_option("--algos", algo_names, "Algorithms, e.g. steady tilted hybrid:steady/4+tilted/4")
      ->delimiter(',');
  validate->add_option("--max-S", max_S, "Largest site count in the grid");
  validate->add_option("--max-T", max_T, "Grid covers T < max-T");
  validate->add_option("--large-samples", large_samples, "Extra random 64-bit T vectors per steady S");

  auto* bench = app.add_subcommand("bench", "Time site selection across sizes and depth windows");
  std::string bench_algo = "steady";
  std::vector<std::string> sizes{"64", "256", "1024"};
  std::vector<std::string> depths{"0:2^16"};
  unsigned replicates = 30;
  bench->add_option("--algo", bench_algo, "steady, stretched, or tilted");
  bench->add_option("--sizes", sizes, "Site counts")->delimiter(',');
  bench->add_option("--depths", depths, "Depth windows lo:hi, e.g. 2^31:2^31+2^16")->delimiter(',');
  bench->add_option("--replicates", replicates, "Replicates per (S, window)");

  auto* lookup = app.add_subcommand("lookup", "Print the arrival index held at each site");
  std::string lookup_algo = "steady";
  std::string lookup_S;
  std::string lookup_T;
  lookup->add_option("--algo", lookup_algo, "Algorithm");
  lookup->add_option("--S", lookup_S, "Site count")->required();
  lookup->add_option("--T", lookup_T, "Items ingested so far")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explode) return run_explode(explode_in, explode_out, value_bits);

    if (*validate) {
      if (!generate && check_path.empty()) {
        std::cerr << "error: validate needs --generate or --check\n";
        return cli::kExitUsage;
      }
      if (generate) {
        cli::ValidateOptions options;
        options.algos = parse_algos(algo_names);
        options.max_S = static_cast<downstream::site_t>(cli::parse_count(max_S));
        options.max_T = cli::parse_count(max_T);
        options.large_samples = large_samples;
        if (vectors_out == "-") return cli::cmd_validate_generate(options, std::cout, std::cerr);
        std::ofstream out(vectors_out, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << vectors_out << '\n';
          return cli::kExitUsage;
        }
        return cli::cmd_validate_generate(options, out, std::cerr);
      }
      std::ifstream in(check_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open " << check_path << '\n';
        return cli::kExitUsage;
      }
      return cli::cmd_validate_check(in, std::cout, std::cerr);
    }

    if (*bench) {
      cli::BenchOptions options;
      options.algo = downstream::parse_curation(bench_algo);
      options.sizes.clear();
      for (const auto& s : sizes) options.sizes.push_back(cli::parse_site_count(s));
      options.depths.clear();
      for (const auto& d : depths) options.depths.push_back(cli::parse_window(d));
      options.replicates = replicates;
      return cli::cmd_bench(options, std::cout, std::cerr);
    }

    if (*lookup) {
      return cli::cmd_lookup(downstream::parse_algorithm(lookup_algo),
                             cli::parse_site_count(lookup_S), cli::parse_count(lookup_T), std::cout,
                             std::cerr);
    }
  } catch (const downstream::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
