#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace leafatlas {

struct JobConfig {
  std::string root_system;
  std::vector<int> gamma1, gamma2;  // 1-based as written
  std::vector<std::pair<int, int>> tau;
  std::string r0 = "canonical";  // canonical | file:PATH | match_theta:PATH
  std::string mode = "both";     // gminus | full | both
  bool typea_checks = false;
  std::vector<std::string> orbit_samples;
  std::string format = "table";  // table | machine
  std::string out;
  std::string torus_gram;  // optional matrix file
  std::string kernel;      // optional matrix file, columns generate the kernel lattice
};

std::vector<int> parse_index_list(const std::string& s);
std::vector<std::pair<int, int>> parse_tau(const std::string& s);
std::string index_list_text(const std::vector<int>& v);
std::string tau_text(const std::vector<std::pair<int, int>>& t);

// key = value lines, '#' comments; later keys override earlier ones.
JobConfig parse_config(const std::string& text, JobConfig base = {});
void apply_config_value(JobConfig& c, const std::string& key, const std::string& value);
std::string config_text(const JobConfig& c);

extern const char* const kR0Convention;

struct Report {
  nlohmann::ordered_json doc;
  // 0 ok, 2 invalid input, 3 internal invariant violation
  int exit_code() const;
  bool operator==(const Report& o) const { return doc == o.doc; }
};

Report run_job(const JobConfig& config);
std::string emit(const Report& r, const std::string& format);
Report parse_machine(const std::string& text);

}  // namespace leafatlas
