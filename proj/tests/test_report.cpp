#include <fstream>
#include <sstream>

#include "doctest.h"
#include "leafatlas/errors.hpp"
#include "leafatlas/report.hpp"

using namespace leafatlas;

namespace {

JobConfig cg_a2(const std::string& mode) {
  return parse_config("root_system = A2\ngamma1 = 1\ngamma2 = 2\ntau = 1:2\nmode = " + mode + "\n");
}

std::string stage_status(const Report& r, const std::string& name) {
  for (const auto& s : r.doc["stages"])
    if (s["stage"] == name) return s["status"].get<std::string>();
  return "";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config parsing") {
  JobConfig c = parse_config(
      "# CG on A3\n"
      "root_system = A3\n"
      "gamma1 = 1, 2\n"
      "gamma2 = 2,3\n"
      "tau = 1:2, 2:3\n"
      "mode = full\n"
      "typea_checks = true\n"
      "orbit_sample = a.txt, b.txt\n"
      "format = machine\n");
  CHECK(c.root_system == "A3");
  CHECK(c.gamma1 == std::vector<int>{1, 2});
  CHECK(c.tau == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(c.mode == "full");
  CHECK(c.typea_checks);
  CHECK(c.orbit_samples.size() == 2);
  JobConfig back = parse_config(config_text(c));
  CHECK(config_text(back) == config_text(c));
  CHECK(back.gamma2 == c.gamma2);

  // later values win, which is how flags override the file
  apply_config_value(c, "mode", "gminus");
  CHECK(c.mode == "gminus");
  CHECK(parse_config("mode = both\n", c).mode == "both");

  CHECK_THROWS_AS(parse_config("mode = sideways\n"), Error);
  CHECK_THROWS_AS(parse_config("format = xml\n"), Error);
  CHECK_THROWS_AS(parse_config("colour = blue\n"), Error);
  CHECK_THROWS_AS(parse_config("tau = 1-2\n"), Error);
  CHECK_THROWS_AS(parse_config("gamma1 = x\n"), Error);
  CHECK(parse_index_list("").empty());
  CHECK(tau_text(parse_tau("1:2,2:3")) == "1:2,2:3");
}

TEST_CASE("A2 standard structure report") {
  JobConfig c = parse_config("root_system = A2\nmode = gminus\n");
  Report r = run_job(c);
  CHECK(r.exit_code() == 0);
  CHECK(r.doc["gminus_records"].size() == 6);
  CHECK_FALSE(r.doc.contains("g_records"));
  CHECK(r.doc["sigma"]["group"] == "Z2 x Z2");
  for (const auto& ch : r.doc["checks"]) {
    CAPTURE(ch["name"].get<std::string>());
    CHECK(ch["ok"].get<bool>());
  }
}

TEST_CASE("A2 Cremmer-Gervais report") {
  Report r = run_job(cg_a2("gminus"));
  CHECK(r.exit_code() == 0);
  CHECK(r.doc["gminus_records"].size() == 3);
  CHECK(r.doc["sigma"]["group"] == "Z3");
  Report both = run_job(cg_a2("both"));
  CHECK(both.doc["g_records"].size() == 9);
  // the d_orb term appears in the machine document as a coefficient, never evaluated
  bool symbolic = false;
  for (const auto& rec : r.doc["gminus_records"])
    if (rec["coset_dim"]["d_orb"] == 1) symbolic = true;
  CHECK(symbolic);
}

TEST_CASE("golden table for CG on A2") {
  std::string table = emit(run_job(cg_a2("gminus")), "table");
  std::string golden = slurp(std::string(LEAFATLAS_SOURCE_DIR) + "/tests/golden/cg_a2_gminus.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(table.find(golden) != std::string::npos);
}

TEST_CASE("stage errors") {
  Report r = run_job(parse_config("root_system = B2\ngamma1 = 1\ngamma2 = 2\ntau = 1:2\n"));
  CHECK(r.exit_code() == 2);
  CHECK(stage_status(r, "root_system") == "ok");
  CHECK(stage_status(r, "triple") == "error");
  bool named = false;
  for (const auto& s : r.doc["stages"])
    if (s["stage"] == "triple") {
      named = s["error"] == "NotIsometry";
      CHECK(s["message"].get<std::string>().find("alpha1") != std::string::npos);
    }
  CHECK(named);
  CHECK(emit(r, "table").find("NotIsometry") != std::string::npos);

  Report bad_label = run_job(parse_config("root_system = Q7\n"));
  CHECK(bad_label.exit_code() == 2);
  CHECK(stage_status(bad_label, "root_system") == "error");

  Report not_a = run_job(parse_config("root_system = B2\ntypea_checks = true\n"));
  CHECK(not_a.exit_code() == 2);
  CHECK(stage_status(not_a, "typea") == "error");
  // the independent stages still ran
  CHECK(stage_status(not_a, "classify_gminus") == "ok");
  CHECK(stage_status(not_a, "sigma") == "ok");

  Report torus = run_job(parse_config("root_system = A1+T1\nmode = gminus\n"));
  CHECK(torus.exit_code() == 0);
  CHECK(stage_status(torus, "sigma") == "unavailable");
}

TEST_CASE("type A verification in the report") {
  JobConfig c = cg_a2("both");
  c.typea_checks = true;
  Report r = run_job(c);
  CHECK(r.exit_code() == 0);
  CHECK(r.doc["typea"]["cybe_zero"].get<bool>());
  CHECK(r.doc["typea"]["symmetric_part"].get<bool>());
}

TEST_CASE("machine format round trip and determinism") {
  JobConfig c = cg_a2("both");
  Report r = run_job(c);
  std::string text = emit(r, "machine");
  Report back = parse_machine(text);
  CHECK(back == r);
  CHECK(emit(back, "machine") == text);
  CHECK(emit(back, "table") == emit(r, "table"));
  CHECK(emit(run_job(c), "machine") == text);
  // exact rationals as p/q strings
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK_THROWS(parse_machine("{ not json"));
}

TEST_CASE("every report carries the r0 convention") {
  for (const char* cfg : {"root_system = A1\n", "root_system = G2\nmode = full\n", "root_system = Q7\n"}) {
    Report r = run_job(parse_config(cfg));
    CHECK(r.doc["conventions"]["r0"] == kR0Convention);
    CHECK(emit(r, "table").find(kR0Convention) != std::string::npos);
  }
}

TEST_CASE("empty record list gives a header-only table") {
  Report r = run_job(cg_a2("gminus"));
  r.doc["gminus_records"] = nlohmann::ordered_json::array();
  std::string t = emit(r, "table");
  auto at = t.find("symplectic leaves of G- (0 records)");
  REQUIRE(at != std::string::npos);
  std::istringstream rest(t.substr(at));
  std::string title, header, next;
  std::getline(rest, title);
  std::getline(rest, header);
  std::getline(rest, next);
  CHECK(header.rfind("v ", 0) == 0);
  CHECK(next.empty());
}
