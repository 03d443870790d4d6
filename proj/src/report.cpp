#include "leafatlas/report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "leafatlas/errors.hpp"
#include "leafatlas/leafclass.hpp"
#include "leafatlas/typea.hpp"

namespace leafatlas {

using json = nlohmann::ordered_json;

const char* const kR0Convention =
    "r0 + r0^21 = Omega_0, the Cartan block of the Casimir of the invariant form; "
    "the standard structure therefore carries r0 = Omega_0/2, not the full Omega_0";

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s) {
  std::string t = trim(s);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) throw Error(ErrorCode::InvalidInput, "expected an integer, got '" + t + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

bool parse_bool(const std::string& s) {
  std::string t = trim(s);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw Error(ErrorCode::InvalidInput, "expected true or false, got '" + t + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json matrix_json(const QMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(q_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json roots_json(const std::vector<IVec>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(r);
  return a;
}

std::string word_text(const WeylGroup& w, const WeylElement& x) {
  auto word = w.reduced_word(x);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string perm_text(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s + "]";
}

json dim_json(const DimExpr& e, const char* symbol) {
  return json{{"constant", e.constant}, {"d_orb", e.d_orb_coeff}, {"text", e.str(symbol)}};
}

std::vector<int> to_zero_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x - 1);
  return out;
}

std::vector<int> simple_in(const RootSystem& rs, const std::vector<IVec>& roots) {
  std::vector<int> out;
  for (int i = 0; i < rs.ss_rank; ++i)
    if (std::find(roots.begin(), roots.end(), rs.simple_roots[i]) != roots.end()) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

std::vector<std::pair<int, int>> parse_tau(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& tok : split(s, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "tau entries look like i:j, got '" + tok + "'");
    out.emplace_back(parse_int(tok.substr(0, colon)), parse_int(tok.substr(colon + 1)));
  }
  return out;
}

std::string index_list_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string tau_text(const std::vector<std::pair<int, int>>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i].first) + ":" + std::to_string(t[i].second);
  return s;
}

void apply_config_value(JobConfig& c, const std::string& key, const std::string& value) {
  std::string v = trim(value);
  if (key == "root_system") c.root_system = v;
  else if (key == "gamma1") c.gamma1 = parse_index_list(v);
  else if (key == "gamma2") c.gamma2 = parse_index_list(v);
  else if (key == "tau") c.tau = parse_tau(v);
  else if (key == "r0") c.r0 = v;
  else if (key == "mode") c.mode = v;
  else if (key == "typea_checks") c.typea_checks = parse_bool(v);
  else if (key == "orbit_sample") c.orbit_samples = split(v, ',');
  else if (key == "format") c.format = v;
  else if (key == "out") c.out = v;
  else if (key == "torus_gram") c.torus_gram = v;
  else if (key == "kernel") c.kernel = v;
  else throw Error(ErrorCode::InvalidInput, "unknown config key '" + key + "'");
  if (c.mode != "gminus" && c.mode != "full" && c.mode != "both")
    throw Error(ErrorCode::InvalidInput, "mode must be gminus, full or both");
  if (c.format != "table" && c.format != "machine") throw Error(ErrorCode::InvalidInput, "format must be table or machine");
}

JobConfig parse_config(const std::string& text, JobConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "line " + std::to_string(lineno) + ": expected key = value");
    apply_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

std::string config_text(const JobConfig& c) {
  std::ostringstream out;
  out << "root_system = " << c.root_system << "\n";
  out << "gamma1 = " << index_list_text(c.gamma1) << "\n";
  out << "gamma2 = " << index_list_text(c.gamma2) << "\n";
  out << "tau = " << tau_text(c.tau) << "\n";
  out << "r0 = " << c.r0 << "\n";
  out << "mode = " << c.mode << "\n";
  out << "typea_checks = " << (c.typea_checks ? "true" : "false") << "\n";
  if (!c.orbit_samples.empty()) {
    out << "orbit_sample = ";
    for (std::size_t i = 0; i < c.orbit_samples.size(); ++i) out << (i ? "," : "") << c.orbit_samples[i];
    out << "\n";
  }
  out << "format = " << c.format << "\n";
  if (!c.out.empty()) out << "out = " << c.out << "\n";
  if (!c.torus_gram.empty()) out << "torus_gram = " << c.torus_gram << "\n";
  if (!c.kernel.empty()) out << "kernel = " << c.kernel << "\n";
  return out.str();
}

int Report::exit_code() const { return doc.contains("exit_code") ? doc["exit_code"].get<int>() : 0; }

namespace {

class Job {
 public:
  explicit Job(const JobConfig& c) : cfg(c) {}

  Report run();

 private:
  const JobConfig& cfg;
  json doc;
  json stages = json::array();
  json checks = json::array();
  int code = 0;

  bool stage(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
      stages.push_back({{"stage", name}, {"status", "ok"}});
      return true;
    } catch (const Error& e) {
      bool soft = e.code() == ErrorCode::ThetaMinusOneSingular || e.code() == ErrorCode::MissingKernel;
      stages.push_back({{"stage", name}, {"status", soft ? "unavailable" : "error"}, {"error", error_name(e.code())},
                        {"message", e.what()}});
      if (!soft) code = std::max(code, is_internal(e.code()) ? 3 : 2);
    } catch (const std::exception& e) {
      stages.push_back({{"stage", name}, {"status", "error"}, {"error", "InvariantViolation"}, {"message", e.what()}});
      code = 3;
    }
    return false;
  }

  Report finish() {
    doc["stages"] = stages;
    doc["checks"] = checks;
    doc["exit_code"] = code;
    return Report{doc};
  }

  void check(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"ok", ok}});
    if (!ok) code = 3;
  }

  json record_json(const RootSystem& rs, const WeylGroup& w, const LeafRecord& r) {
    json j;
    json vs = json::array();
    for (const auto& v : r.v) {
      json e{{"word", word_text(w, v)}, {"length", v.length}};
      if (is_type_a(rs)) e["perm"] = perm_text(typea::weyl_to_perm(rs, v));
      vs.push_back(e);
    }
    j["v"] = vs;
    j["length"] = r.length;
    j["dim_stable"] = r.stable.dim;
    j["derived_dim"] = r.stable.derived_dim;
    j["center_dim"] = r.stable.center_dim;
    j["cong_dim"] = r.stable.cong_dim;
    j["moduli_dim"] = r.stable.moduli_dim;
    if (r.v.size() == 2) {
      j["z_dim"] = r.stable.z_dim;
      j["abelian_dim"] = r.stable.abelian_dim;
    } else {
      j["dim_lv"] = r.dim_lv;
      j["cong_product_dim"] = r.cong_product_dim;
    }
    j["orbit_dim_max"] = r.orbit_dim_max;
    j["leaf_dim"] = dim_json(r.leaf_dim, "d_orb");
    j["coset_dim"] = dim_json(r.coset_dim, "d_orb");
    if (r.simplified_leaf_dim) j["simplified_leaf_dim"] = dim_json(*r.simplified_leaf_dim, "d~");
    j["stable_roots"] = roots_json(r.stable.root_set);
    return j;
  }
};

Report Job::run() {
  json input;
  input["root_system"] = cfg.root_system;
  input["gamma1"] = cfg.gamma1;
  input["gamma2"] = cfg.gamma2;
  input["tau"] = tau_text(cfg.tau);
  input["r0"] = cfg.r0;
  input["mode"] = cfg.mode;
  input["typea_checks"] = cfg.typea_checks;
  input["orbit_samples"] = cfg.orbit_samples;
  doc["input"] = input;
  doc["conventions"] = {{"r0", kR0Convention},
                        {"indices", "simple roots numbered from 1; roots written in simple-root coordinates"},
                        {"d_orb", "dimension of the twisted conjugation orbit, left symbolic; d~ = d_orb + cong_dim"}};

  RootSystem rs;
  bool have_rs = stage("root_system", [&] {
    RootSystemOptions opts;
    if (!cfg.torus_gram.empty()) opts.torus_gram = parse_matrix(read_file(cfg.torus_gram));
    if (!cfg.kernel.empty()) opts.kernel = parse_matrix(read_file(cfg.kernel));
    rs = build_root_system(cfg.root_system, opts);
    doc["root_system"] = {{"label", rs.label},
                          {"cartan_rank", rs.cartan_rank},
                          {"positive_roots", rs.num_positive()},
                          {"dim", rs.dim()},
                          {"gram", matrix_json(rs.gram)}};
  });
  if (!have_rs) return finish();
  WeylGroup w(rs);

  BDTriple t;
  bool have_t = stage("triple", [&] {
    std::vector<std::pair<int, int>> tau;
    for (auto [a, b] : cfg.tau) tau.emplace_back(a - 1, b - 1);
    t = validate_triple(rs, to_zero_based(cfg.gamma1), to_zero_based(cfg.gamma2), tau);
    doc["triple"] = {{"gamma1", cfg.gamma1}, {"gamma2", cfg.gamma2}, {"tau", tau_text(cfg.tau)}, {"ord", t.ord_tau}};
    auto pairs = partial_order_pairs(rs, t);
    json po = json::array();
    for (const auto& [a, b] : pairs) po.push_back({a, b});
    doc["triple"]["order_pairs"] = po;
  });
  if (!have_t) return finish();

  stage("induction_chain", [&] {
    InductionChain chain = induction_chain(rs, t);
    json steps = json::array();
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
      const auto& s = chain.steps[k];
      std::vector<int> amb, g1, g2;
      for (int i : s.ambient) amb.push_back(i + 1);
      for (int i : s.triple.gamma1) g1.push_back(i + 1);
      for (int i : s.triple.gamma2) g2.push_back(i + 1);
      steps.push_back({{"k", k}, {"ambient", amb}, {"gamma1", g1}, {"gamma2", g2}, {"ord", s.triple.ord_tau}});
      check("induction_ord_step_" + std::to_string(k), s.triple.ord_tau == t.ord_tau - int(k));
    }
    check("induction_ends_empty", chain.steps.back().triple.gamma1.empty());
    doc["induction_chain"] = steps;
  });

  CartanTerm r0;
  bool have_r0 = stage("r0", [&] {
    R0Request req;
    if (cfg.r0.rfind("file:", 0) == 0) {
      req.mode = R0Mode::FromMatrix;
      req.matrix = parse_matrix(read_file(cfg.r0.substr(5)));
    } else if (cfg.r0.rfind("match_theta:", 0) == 0) {
      req.mode = R0Mode::MatchTheta;
      req.matrix = parse_matrix(read_file(cfg.r0.substr(12)));
    } else if (cfg.r0 != "canonical") {
      throw Error(ErrorCode::InvalidInput, "r0 must be canonical, file:PATH or match_theta:PATH");
    }
    r0 = solve_r0(rs, t, req);
    doc["r0"] = {{"mode", cfg.r0}, {"matrix", matrix_json(r0.r0)}};
    check("r0_symmetric_part", r0_symmetric_residual(rs, r0).is_zero());
    check("r0_tau_constraint", r0_admissible(rs, t, r0));
  });
  if (!have_r0) return finish();

  Decomposition d;
  bool have_d = stage("decomposition", [&] {
    d = compute_decomposition(rs, t, r0);
    json dj;
    dj["dim_g"] = d.dim_g;
    dj["dim_gplus"] = d.dim_gplus;
    dj["dim_mplus"] = d.dim_mplus;
    dj["dim_gminus"] = d.dim_gminus;
    dj["dim_mminus"] = d.dim_mminus;
    dj["dim_l1_a1"] = d.dim_l1a1;
    dj["dim_h1"] = d.h1.cols();
    dj["dim_h2"] = d.h2.cols();
    dj["dim_h_ort1"] = d.h_ort1.cols();
    dj["dim_h_ort2"] = d.h_ort2.cols();
    dj["dim_a1"] = d.a1.cols();
    dj["dim_a2"] = d.a2.cols();
    dj["levi1_roots"] = roots_json(d.levi1_roots);
    dj["levi2_roots"] = roots_json(d.levi2_roots);
    dj["n_plus_roots"] = roots_json(d.n_plus_roots);
    dj["n_minus_roots"] = roots_json(d.n_minus_roots);
    dj["f_cartan"] = matrix_json(d.f_cartan);
    dj["full_h"] = full_h_predicate(d);
    if (d.theta_domain.cols() == std::size_t(rs.cartan_rank)) dj["theta"] = matrix_json(d.theta_matrix());
    doc["decomposition"] = dj;
    for (const auto& c : decomposition_checks(rs, d)) check(c.name, c.ok);
  });
  if (!have_d) return finish();

  std::vector<LeafRecord> gm, gf;
  if (cfg.mode != "full")
    stage("classify_gminus", [&] {
      gm = classify_gminus(rs, w, d);
      json recs = json::array();
      bool offset = true, simple = true, minimal = true;
      for (const auto& r : gm) {
        recs.push_back(record_json(rs, w, r));
        if (r.coset_dim.constant - r.leaf_dim.constant != d.dim_gplus) offset = false;
        if (r.simplified_leaf_dim && r.simplified_leaf_dim->constant + r.stable.cong_dim != r.leaf_dim.constant)
          simple = false;
        if (!is_min_double_rep(w, r.v[0], simple_in(rs, r.stable.root_set), t.gamma1)) minimal = false;
      }
      doc["gminus_records"] = recs;
      check("gminus_coset_minus_leaf_is_dim_gplus", offset);
      check("gminus_simplified_matches", simple);
      check("gminus_v_minimal_in_double_coset", minimal);
    });
  if (cfg.mode != "gminus")
    stage("classify_g", [&] {
      gf = classify_g(rs, w, d);
      json recs = json::array();
      std::set<long> offsets;
      bool restricts = true;
      for (const auto& r : gf) {
        recs.push_back(record_json(rs, w, r));
        offsets.insert(r.coset_dim.constant - r.leaf_dim.constant);
        if (r.v[1].length == 0 && stable_subalgebra_v(rs, w, d, r.v[0]).root_set != r.stable.root_set) restricts = false;
      }
      doc["g_records"] = recs;
      check("g_constant_coset_leaf_offset", offsets.size() <= 1);
      check("g_restricts_to_gminus_at_v2_identity", restricts);
    });

  stage("sigma", [&] {
    Lattice ker = exp_kernel_lattice(rs);
    FiniteAbelianGroup s = sigma_group(rs, d, ker);
    json f = json::array();
    for (const auto& x : s.invariant_factors) f.push_back(x.get_str());
    doc["sigma"] = {{"invariant_factors", f}, {"group", s.str()}, {"order", s.order().get_str()}};
  });

  if (cfg.typea_checks)
    stage("typea", [&] {
      typea::require_type_a(rs);
      typea::TensorElement r = typea::realize_r(rs, t, r0);
      bool cybe = typea::check_cybe(r).is_zero();
      bool sym = typea::check_symmetric_part(rs, r);
      check("cybe_exact_zero", cybe);
      check("symmetric_part_is_casimir", sym);
      json tj{{"cybe_zero", cybe}, {"symmetric_part", sym}};
      json samples = json::array();
      for (const auto& path : cfg.orbit_samples) {
        QMat f = parse_matrix(read_file(path));
        if (int(f.rows()) != typea::matrix_size(rs) || int(f.cols()) != typea::matrix_size(rs))
          throw Error(ErrorCode::InvalidInput, path + ": wrong matrix size");
        for (const auto& rec : gm) {
          if (!typea::supported_on_roots(f, rec.stable.root_set) || det(f) != 1) continue;
          QMat vdot = typea::weyl_rep(rs, rec.v[0]);
          int od = typea::tc_orbit_dim(rs, f, typea::conjugation_twist(vdot), rec.stable.root_set);
          samples.push_back({{"sample", path},
                             {"kind", "gminus"},
                             {"v", word_text(w, rec.v[0])},
                             {"orbit_dim", od},
                             {"leaf_dim", rec.leaf_dim.constant + od * rec.leaf_dim.d_orb_coeff},
                             {"coset_dim", rec.coset_dim.constant + od * rec.coset_dim.d_orb_coeff}});
        }
        for (const auto& rec : gf) {
          if (!typea::supported_on_roots(f, rec.stable.root_set) || det(f) != 1) continue;
          int od = typea::tc_orbit_dim(rs, f, typea::chain_twist(rs, d, rec.v[0], rec.v[1]), rec.stable.root_set);
          samples.push_back({{"sample", path},
                             {"kind", "g"},
                             {"v1", word_text(w, rec.v[0])},
                             {"v2", word_text(w, rec.v[1])},
                             {"orbit_dim", od},
                             {"leaf_dim", rec.leaf_dim.constant + od * rec.leaf_dim.d_orb_coeff}});
        }
      }
      tj["orbit_samples"] = samples;
      doc["typea"] = tj;
    });
  return finish();
}

}  // namespace

Report run_job(const JobConfig& config) {
  Job job(config);
  return job.run();
}

namespace {

std::string roots_text(const json& roots) {
  std::string s;
  for (const auto& r : roots) {
    std::string term;
    for (std::size_t i = 0; i < r.size(); ++i) {
      int c = r[i].get<int>();
      if (c == 0) continue;
      if (!term.empty()) term += c > 0 ? "+" : "";
      if (c == -1) term += "-";
      else if (c != 1) term += std::to_string(c);
      term += "a" + std::to_string(i + 1);
    }
    s += (s.empty() ? "" : " ") + term;
  }
  return s.empty() ? "-" : s;
}

std::string v_text(const json& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += ", ";
    s += v["word"].get<std::string>();
    if (v.contains("perm")) s += " " + v["perm"].get<std::string>();
  }
  return s;
}

void records_table(std::ostream& out, const json& recs, bool pair) {
  out << std::left << std::setw(pair ? 34 : 22) << (pair ? "v1, v2" : "v") << std::setw(5) << "l" << std::setw(6)
      << "dim" << std::setw(6) << "cong" << std::setw(7) << "moduli" << std::setw(16) << "leaf" << std::setw(16)
      << "coset" << std::setw(14) << "simplified" << "stable roots\n";
  for (const auto& r : recs) {
    out << std::left << std::setw(pair ? 34 : 22) << v_text(r["v"]) << std::setw(5) << r["length"].get<int>()
        << std::setw(6) << r["dim_stable"].get<int>() << std::setw(6) << r["cong_dim"].get<int>() << std::setw(7)
        << r["moduli_dim"].get<int>() << std::setw(16) << r["leaf_dim"]["text"].get<std::string>() << std::setw(16)
        << r["coset_dim"]["text"].get<std::string>() << std::setw(14)
        << (r.contains("simplified_leaf_dim") ? r["simplified_leaf_dim"]["text"].get<std::string>() : "n/a")
        << roots_text(r["stable_roots"]) << "\n";
  }
}

std::string table(const json& doc) {
  std::ostringstream out;
  const json& in = doc["input"];
  out << "root system   " << in["root_system"].get<std::string>() << "\n";
  out << "triple        gamma1={" << index_list_text(in["gamma1"].get<std::vector<int>>()) << "} gamma2={"
      << index_list_text(in["gamma2"].get<std::vector<int>>()) << "} tau={" << in["tau"].get<std::string>() << "}";
  if (doc.contains("triple")) out << " ord=" << doc["triple"]["ord"].get<int>();
  out << "\n";
  out << "convention    " << doc["conventions"]["r0"].get<std::string>() << "\n";
  out << "              " << doc["conventions"]["d_orb"].get<std::string>() << "\n";
  if (doc.contains("root_system"))
    out << "dim g         " << doc["root_system"]["dim"].get<int>() << " (rank " << doc["root_system"]["cartan_rank"].get<int>()
        << ", " << doc["root_system"]["positive_roots"].get<int>() << " positive roots)\n";
  if (doc.contains("r0")) {
    out << "r0            ";
    for (const auto& row : doc["r0"]["matrix"]) {
      out << "[";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].get<std::string>();
      out << "]";
    }
    out << "\n";
  }
  if (doc.contains("decomposition")) {
    const json& d = doc["decomposition"];
    out << "g+            dim " << d["dim_gplus"].get<int>() << ", m+ dim " << d["dim_mplus"].get<int>() << "\n";
    out << "g-            dim " << d["dim_gminus"].get<int>() << ", m- dim " << d["dim_mminus"].get<int>() << "\n";
    out << "h1 h2         " << d["dim_h1"].get<int>() << " " << d["dim_h2"].get<int>() << ", h_ort "
        << d["dim_h_ort1"].get<int>() << " " << d["dim_h_ort2"].get<int>() << ", a " << d["dim_a1"].get<int>() << " "
        << d["dim_a2"].get<int>() << ", full_h " << (d["full_h"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (doc.contains("induction_chain")) {
    out << "induction     ";
    for (const auto& s : doc["induction_chain"])
      out << "[" << index_list_text(s["gamma1"].get<std::vector<int>>()) << "|ord " << s["ord"].get<int>() << "] ";
    out << "\n";
  }
  if (doc.contains("gminus_records")) {
    out << "\nsymplectic leaves of G- (" << doc["gminus_records"].size() << " records)\n";
    records_table(out, doc["gminus_records"], false);
  }
  if (doc.contains("g_records")) {
    out << "\nsymplectic leaves of G (" << doc["g_records"].size() << " records)\n";
    records_table(out, doc["g_records"], true);
  }
  if (doc.contains("sigma")) out << "\nSigma         " << doc["sigma"]["group"].get<std::string>() << "\n";
  if (doc.contains("typea")) {
    const json& t = doc["typea"];
    out << "\nCYBE residual " << (t["cybe_zero"].get<bool>() ? "0" : "nonzero") << ", r + r21 "
        << (t["symmetric_part"].get<bool>() ? "= Casimir" : "!= Casimir") << "\n";
    for (const auto& s : t["orbit_samples"]) {
      out << "sample " << s["sample"].get<std::string>() << " " << s["kind"].get<std::string>();
      if (s.contains("v")) out << " v=" << s["v"].get<std::string>();
      else out << " v1=" << s["v1"].get<std::string>() << " v2=" << s["v2"].get<std::string>();
      out << " d_orb=" << s["orbit_dim"].get<int>() << " leaf=" << s["leaf_dim"].get<long>() << "\n";
    }
  }
  out << "\nchecks\n";
  for (const auto& c : doc["checks"])
    out << "  " << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "\n";
  for (const auto& s : doc["stages"])
    if (s["status"] != "ok")
      out << s["stage"].get<std::string>() << ": " << s["status"].get<std::string>() << ", "
          << s["message"].get<std::string>() << "\n";
  out << "exit " << doc["exit_code"].get<int>() << "\n";
  return out.str();
}

}  // namespace

std::string emit(const Report& r, const std::string& format) {
  if (format == "machine") return r.doc.dump(2) + "\n";
  if (format == "table") return table(r.doc);
  throw Error(ErrorCode::InvalidInput, "unknown format " + format);
}

Report parse_machine(const std::string& text) {
  try {
    return Report{json::parse(text)};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("machine output does not parse: ") + e.what());
  }
}

}  // namespace leafatlas
