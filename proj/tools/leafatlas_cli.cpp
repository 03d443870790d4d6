#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leafatlas/errors.hpp"
#include "leafatlas/report.hpp"

using namespace leafatlas;

int main(int argc, char** argv) {
  CLI::App app{"Symplectic leaf tables for Belavin-Drinfeld Poisson-Lie structures"};
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);

  // Flags are stored raw and applied over the file afterwards.
  std::vector<std::pair<std::string, std::string>> overrides;
  auto flag = [&](const char* name, const char* key, const char* help) {
    app.add_option_function<std::string>(
        name, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
  };
  flag("--root-system", "root_system", "label such as A3, B2xA1, A2+T1");
  flag("--gamma1", "gamma1", "simple root indices, 1-based: 1,2");
  flag("--gamma2", "gamma2", "simple root indices, 1-based: 2,3");
  flag("--tau", "tau", "pairs i:j with tau(alpha_i) = alpha_j");
  flag("--r0", "r0", "canonical | file:PATH | match_theta:PATH");
  flag("--mode", "mode", "gminus | full | both");
  flag("--typea-checks", "typea_checks", "true | false");
  flag("--format", "format", "table | machine");
  flag("--out", "out", "output file, stdout when absent");
  flag("--torus-gram", "torus_gram", "matrix file for the central torus block of the form");
  flag("--kernel", "kernel", "matrix file whose columns generate the exponential kernel");
  std::vector<std::string> samples;
  app.add_option("--orbit-sample", samples, "matrix file sampled for orbit dimensions (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  JobConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::stringstream s;
      s << in.rdbuf();
      cfg = parse_config(s.str());
    }
    for (const auto& [k, v] : overrides) apply_config_value(cfg, k, v);
    if (!samples.empty()) cfg.orbit_samples = samples;
    if (cfg.root_system.empty()) throw Error(ErrorCode::InvalidInput, "root_system is required");
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  Report r = run_job(cfg);
  std::string text = emit(r, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text;
  }
  for (const auto& s : r.doc["stages"])
    if (s["status"] == "error")
      std::cerr << s["stage"].get<std::string>() << ": "
                << s["message"].get<std::string>() << "\n";
  return r.exit_code();
}
