#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cprig/error.hpp"
#include "cprig/fixtures.hpp"
#include "cprig/run.hpp"

namespace {

using namespace cprig;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int generate(const std::string& family, const GenerateParams& params, const std::string& outDir) {
  Json summary{{"command", "generate"}, {"family", family}, {"m", params.m}, {"seed", params.seed}};
  try {
    const auto fixtures = generate_fixtures(parse_family(family), params);
    if (!outDir.empty()) std::filesystem::create_directories(outDir);
    Json files = Json::array();
    for (const auto& f : fixtures) {
      const std::string text = fixture_json(f).dump(2) + "\n";
      if (outDir.empty()) {
        std::cout << text;
      } else {
        const std::string path = (std::filesystem::path(outDir) / (f.name + ".json")).string();
        if (!write_file(path, text)) {
          std::cerr << "cannot write " << path << "\n";
          return 1;
        }
        files.push_back(path);
      }
    }
    summary["status"] = "pass";
    summary["count"] = fixtures.size();
    if (!outDir.empty()) {
      summary["files"] = files;
      std::cout << summary.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    summary["status"] = "fail";
    summary["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cout << summary.dump(2) << "\n";
    return e.code() == ErrorCode::InvalidArgument ? 2 : 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for circle actions on cohomology CP^m"};
  std::string command, fixture, out, csv, bRange, family = "linear";
  int qOrder = 4, points = 64;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::optional<int> m;
  std::optional<long> n;
  long maxWeight = 3;

  app.add_option("command", command, "lefschetz, star, mod24, rigidity, petrie-bound, jacobi, reconstruct, all, generate")
      ->required()
      ->check(CLI::IsMember({"lefschetz", "star", "mod24", "rigidity", "petrie-bound", "jacobi", "reconstruct", "all",
                             "generate"}));
  app.add_option("--fixture", fixture, "fixture JSON");
  app.add_option("--q-order", qOrder, "highest q power")->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", tolerance, "numeric pass threshold")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "report file (generate: output directory)");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--m", m, "dimension");
  app.add_option("--n", n, "p_1 = -n x^2 for synthetic data");
  app.add_option("--b-range", bRange, "mod24: lo..hi");
  app.add_option("--csv", csv, "jacobi: pole-scan samples");
  app.add_option("--points", points, "jacobi: coarse scan points")->check(CLI::Range(2, 100000));
  app.add_option("--family", family, "generate: linear, synthetic-star, petrie-edge");
  app.add_option("--max-weight", maxWeight, "generate linear: bound on |a|")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (command == "generate") {
    GenerateParams params;
    params.m = m.value_or(2);
    params.maxWeight = maxWeight;
    params.n = n;
    params.seed = seed;
    params.qOrder = qOrder;
    return generate(family, params, out);
  }

  RunConfig config;
  config.command = parse_command(command);
  config.fixturePath = fixture;
  config.qOrder = qOrder;
  config.tolerance = tolerance;
  config.outputPath = out;
  config.seed = seed;
  config.m = m;
  config.n = n;
  config.scanPoints = points;
  config.csvPath = csv;
  try {
    if (!bRange.empty()) config.bRange = parse_range(bRange);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const RunResult result = run(config);
  const std::string text = result.report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else if (!write_file(out, text)) {
    std::cerr << "cannot write " << out << "\n";
    return 1;
  }
  if (!csv.empty() && !result.csv.empty() && !write_file(csv, result.csv)) {
    std::cerr << "cannot write " << csv << "\n";
    return 1;
  }
  if (!out.empty()) std::cerr << "verify " << command << ": " << result.report["status"].get<std::string>() << "\n";
  return result.exitCode;
}
