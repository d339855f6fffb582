#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eqcount/charsum.hpp"
#include "eqcount/counter.hpp"
#include "eqcount/selftest.hpp"
#include "eqcount/tables.hpp"

namespace {

using eqcount::BigInt;
using eqcount::EquationSpec;
using eqcount::FieldTable;
using Json = nlohmann::ordered_json;

constexpr int kExitParse = 1;
constexpr int kExitDisagreement = 2;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dec(const BigInt& v) { return v.str(); }

struct LoadedSpec {
  std::unique_ptr<FieldTable> field;
  EquationSpec spec;
  bool run_oracle = true;
  bool list_characters = false;
};

std::vector<long long> require_int_array(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError("field '" + key + "' must be an integer array");
  std::vector<long long> out;
  for (const auto& e : j[key]) {
    if (!e.is_number_integer()) throw ParseError("field '" + key + "' must be integers");
    out.push_back(e.get<long long>());
  }
  return out;
}

long long require_int(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError("field '" + key + "' must be an integer");
  return j[key].get<long long>();
}

LoadedSpec spec_from_json(const Json& j) {
  LoadedSpec out;
  long long p = require_int(j, "p");
  long long s = j.contains("s") ? require_int(j, "s") : 1;
  std::vector<int> modulus;
  try {
    if (j.contains("modulus")) {
      for (long long c : require_int_array(j, "modulus")) modulus.push_back(static_cast<int>(c));
      out.field = std::make_unique<FieldTable>(
          FieldTable::build(p, static_cast<int>(s), &modulus));
    } else {
      out.field = std::make_unique<FieldTable>(FieldTable::build(p, static_cast<int>(s)));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const FieldTable& F = *out.field;

  EquationSpec& spec = out.spec;
  spec.field = &F;
  auto a = require_int_array(j, "a");
  spec.n = static_cast<int>(a.size());
  for (long long x : a) {
    if (x < 0 || x >= F.q) throw ParseError("field 'a': encoding out of range");
    spec.a.push_back(static_cast<int>(x));
  }
  spec.m = require_int_array(j, "m");
  if (static_cast<int>(spec.m.size()) != spec.n)
    throw ParseError("field 'm': length differs from n");
  spec.kj = require_int_array(j, "kj");
  if (static_cast<int>(spec.kj.size()) != spec.n)
    throw ParseError("field 'kj': length differs from n");
  spec.k = require_int(j, "k");

  if (!j.contains("b")) throw ParseError("field 'b' is required");
  if (j["b"].is_string()) {
    std::string cls = j["b"].get<std::string>();
    long long k0 = spec.k;
    for (long long kjj : spec.kj) k0 = std::gcd(k0, kjj);
    k0 = std::gcd(k0, F.q - 1);
    if (cls == "power")
      spec.b = eqcount::smallest_of_power_class(F, k0, true);
    else if (cls == "nonpower") {
      if (k0 == 1) throw ParseError("field 'b': every element is a 1st power");
      spec.b = eqcount::smallest_of_power_class(F, k0, false);
    } else
      throw ParseError("field 'b': expected integer, \"power\" or \"nonpower\"");
  } else {
    long long b = require_int(j, "b");
    if (b <= 0 || b >= F.q) throw ParseError("field 'b': encoding out of range");
    spec.b = static_cast<int>(b);
  }

  if (j.contains("run_oracle")) out.run_oracle = j["run_oracle"].get<bool>();
  if (j.contains("list_characters")) out.list_characters = j["list_characters"].get<bool>();
  try {
    eqcount::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::vector<long long> parse_csv(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

Json spec_json(const EquationSpec& spec) {
  const FieldTable& F = *spec.field;
  Json j;
  j["p"] = F.p;
  j["s"] = F.s;
  j["q"] = F.q;
  j["modulus"] = F.modulus;
  j["generator"] = F.generator;
  j["n"] = spec.n;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["m"] = spec.m;
  j["kj"] = spec.kj;
  j["k"] = spec.k;
  return j;
}

Json derived_json(const eqcount::DerivedParams& dp) {
  Json j;
  j["k0"] = dp.k0;
  j["M"] = dp.M.str();
  j["dj"] = dp.dj;
  j["D"] = dp.D;
  j["d"] = dp.d;
  j["t_odd"] = dp.t_odd;
  j["sorted_perm"] = dp.sorted_perm;
  if (dp.ell)
    j["ell"] = *dp.ell;
  else
    j["ell"] = nullptr;
  j["b_is_k0_power"] = dp.b_is_k0_power;
  return j;
}

Json applicability_json(const eqcount::ApplicabilityReport& ap) {
  Json j;
  j["theorem1"] = ap.thm1;
  j["theorem2"] = ap.thm2;
  j["theorem3"] = ap.thm3;
  j["theorem4"] = ap.thm4;
  j["pzc"] = ap.pzc;
  j["carlitz3"] = ap.carlitz3;
  j["carlitz4"] = ap.carlitz4;
  j["eq4_holds"] = ap.eq4_holds;
  j["reasons"] = ap.reasons;
  return j;
}

Json report_json(const eqcount::CountReport& report) {
  Json j;
  j["spec"] = spec_json(report.spec);
  j["derived"] = derived_json(report.dp);
  j["applicable"] = applicability_json(report.ap);
  j["closed_form_value"] =
      report.closed_form_value ? Json(dec(*report.closed_form_value)) : Json(nullptr);
  j["closed_form_method"] = report.closed_form_method;
  j["oracle_value"] = report.oracle_value ? Json(dec(*report.oracle_value)) : Json(nullptr);
  j["agreement"] = report.agreement ? Json(*report.agreement) : Json(nullptr);
  return j;
}

void human_summary(const eqcount::CountReport& report) {
  std::cerr << eqcount::describe(report.spec) << "\n";
  std::cerr << "  k0=" << report.dp.k0 << " d=" << report.dp.d
            << " D=" << report.dp.D << " b_is_k0_power="
            << (report.dp.b_is_k0_power ? "yes" : "no") << "\n";
  if (report.closed_form_value)
    std::cerr << "  closed form (" << report.closed_form_method
              << "): " << dec(*report.closed_form_value) << "\n";
  else
    std::cerr << "  no closed form applies\n";
  if (report.oracle_value)
    std::cerr << "  oracle: " << dec(*report.oracle_value) << "\n";
  if (report.agreement)
    std::cerr << "  agreement: " << (*report.agreement ? "yes" : "NO") << "\n";
}

int cmd_count(const LoadedSpec& loaded, bool all_b) {
  const FieldTable& F = *loaded.spec.field;
  if (all_b) {
    // Sweep every b and report the count profile per k0-power class.
    EquationSpec spec = loaded.spec;
    eqcount::DerivedParams dp = eqcount::derive_params(spec);
    eqcount::WTable W = eqcount::WTable::build(spec);
    eqcount::DiagonalCounts diag = eqcount::diag_oracle(spec);
    std::map<long long, Json> classes;
    for (int b = 1; b < F.q; ++b) {
      spec.b = b;
      eqcount::DerivedParams bdp = eqcount::derive_params(spec);
      eqcount::StarCounts stars = eqcount::count_from_w(spec, W);
      BigInt n = stars.nstar + diag.n0 - diag.nstar0;
      long long cls = F.dlog(b) % dp.k0;
      auto it = classes.find(cls);
      if (it == classes.end()) {
        Json entry;
        entry["class"] = cls;
        entry["is_k0_power_class"] = bdp.b_is_k0_power;
        entry["counts"] = Json::array();
        it = classes.emplace(cls, std::move(entry)).first;
      }
      Json item;
      item["b"] = b;
      item["count"] = dec(n);
      it->second["counts"].push_back(std::move(item));
    }
    Json out;
    out["spec"] = spec_json(loaded.spec);
    out["k0"] = dp.k0;
    out["profile"] = Json::array();
    for (auto& [cls, entry] : classes) out["profile"].push_back(std::move(entry));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  eqcount::CountReport report = eqcount::dispatch(loaded.spec, loaded.run_oracle);
  Json j = report_json(report);
  if (loaded.list_characters) {
    eqcount::WTable W = eqcount::WTable::build(loaded.spec);
    Json chars = Json::array();
    for (long long i = 1; i < report.dp.d; ++i) {
      long long r = (F.q - 1) / report.dp.d * i;
      eqcount::Character psi = eqcount::make_character(F, r);
      Json c;
      c["r"] = r;
      c["order"] = psi.order;
      Json coeffs = Json::array();
      for (const BigInt& x : eqcount::t_sum(loaded.spec, W, psi).reduced())
        coeffs.push_back(dec(x));
      c["t_coeffs"] = std::move(coeffs);
      chars.push_back(std::move(c));
    }
    j["characters"] = std::move(chars);
  }
  std::cout << j.dump(2) << "\n";
  human_summary(report);
  if (report.agreement && !*report.agreement) return kExitDisagreement;
  return 0;
}

int cmd_derive(const LoadedSpec& loaded) {
  eqcount::DerivedParams dp = eqcount::derive_params(loaded.spec);
  eqcount::ApplicabilityReport ap = eqcount::classify(loaded.spec, dp);
  Json j;
  j["spec"] = spec_json(loaded.spec);
  j["derived"] = derived_json(dp);
  j["applicable"] = applicability_json(ap);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_tsum(const LoadedSpec& loaded) {
  const FieldTable& F = *loaded.spec.field;
  eqcount::DerivedParams dp = eqcount::derive_params(loaded.spec);
  eqcount::WTable W = eqcount::WTable::build(loaded.spec);
  Json j;
  j["spec"] = spec_json(loaded.spec);
  j["d"] = dp.d;
  j["zeta_order"] = F.q - 1;
  Json chars = Json::array();
  for (long long i = 0; i < dp.d; ++i) {
    long long r = dp.d == 0 ? 0 : (F.q - 1) / dp.d * i;
    eqcount::Character psi = eqcount::make_character(F, r);
    Json c;
    c["r"] = r;
    c["order"] = psi.order;
    c["divides_k0"] = (dp.k0 % psi.order == 0);
    Json coeffs = Json::array();
    for (const BigInt& x : eqcount::t_sum(loaded.spec, W, psi).reduced())
      coeffs.push_back(dec(x));
    c["t_coeffs"] = std::move(coeffs);
    chars.push_back(std::move(c));
  }
  j["characters"] = std::move(chars);
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct RowOutcome {
  std::string line;
  bool ok = false;
};

RowOutcome verify_row(const eqcount::TableRow& row) {
  RowOutcome out;
  const FieldTable& F = eqcount::field_cache(row.p, row.s);
  EquationSpec spec;
  spec.field = &F;
  spec.n = row.n;
  spec.a = row.a;
  spec.m = row.m;
  spec.kj = row.kj;
  spec.k = row.k;
  spec.b = eqcount::smallest_of_power_class(F, row.k0, row.table == 2);

  std::ostringstream line;
  line << "table " << row.table << "  q=" << row.q << " n=" << row.n << "  ";
  try {
    eqcount::CountReport report = eqcount::dispatch(spec, /*run_oracle=*/true);
    bool k0_ok = report.dp.k0 == row.k0;
    bool closed_ok =
        report.closed_form_value && *report.closed_form_value == row.expected;
    bool oracle_ok = report.oracle_value && *report.oracle_value == row.expected;
    out.ok = k0_ok && closed_ok && oracle_ok;
    line << "closed="
         << (report.closed_form_value ? dec(*report.closed_form_value) : "n/a")
         << " (" << (report.closed_form_method.empty() ? "none" : report.closed_form_method)
         << ")  oracle=" << (report.oracle_value ? dec(*report.oracle_value) : "n/a")
         << "  expected=" << row.expected << "  " << (out.ok ? "OK" : "MISMATCH");
  } catch (const std::exception& e) {
    out.ok = false;
    line << "ERROR: " << e.what();
  }
  out.line = line.str();
  return out;
}

int cmd_verify_tables(int threads) {
  const auto& rows = eqcount::reference_tables();
  std::vector<RowOutcome> outcomes(rows.size());
  if (threads <= 1) {
    for (size_t i = 0; i < rows.size(); ++i) outcomes[i] = verify_row(rows[i]);
  } else {
    std::vector<std::future<RowOutcome>> futs;
    for (const auto& row : rows)
      futs.push_back(std::async(std::launch::async, verify_row, row));
    for (size_t i = 0; i < rows.size(); ++i) outcomes[i] = futs[i].get();
  }
  int failures = 0;
  for (const auto& o : outcomes) {
    std::cout << o.line << "\n";
    if (!o.ok) ++failures;
  }
  std::cout << (rows.size() - failures) << "/" << rows.size() << " rows pass\n";
  return failures == 0 ? 0 : kExitDisagreement;
}

int cmd_selftest(std::uint64_t seed, double budget_seconds) {
  double scale = budget_seconds / 30.0;
  int failures = 0;
  for (const auto& suite : eqcount::run_selftest(seed, scale)) {
    std::cout << (suite.passed ? "PASS" : "FAIL") << "  " << suite.name << "  ("
              << suite.cases << " cases)";
    if (!suite.passed) {
      std::cout << "  first counterexample: " << suite.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : kExitDisagreement;
}

void add_spec_options(CLI::App* cmd, std::string& spec_path, std::string& p_str,
                      std::string& s_str, std::string& a_str, std::string& b_str,
                      std::string& m_str, std::string& kj_str, std::string& k_str,
                      bool& no_oracle) {
  cmd->add_option("--spec", spec_path, "Path to a JSON spec file");
  cmd->add_option("--p", p_str, "Field characteristic");
  cmd->add_option("--s", s_str, "Extension degree (default 1)");
  cmd->add_option("--a", a_str, "Coefficients, comma separated encodings");
  cmd->add_option("--b", b_str, "b encoding, or 'power'/'nonpower'");
  cmd->add_option("--m", m_str, "Exponents m_j, comma separated");
  cmd->add_option("--kj", kj_str, "Exponents k_j, comma separated");
  cmd->add_option("--k", k_str, "Outer exponent k");
  cmd->add_flag("--no-oracle", no_oracle, "Skip the DP oracle");
}

LoadedSpec load_spec(const std::string& spec_path, const std::string& p_str,
                     const std::string& s_str, const std::string& a_str,
                     const std::string& b_str, const std::string& m_str,
                     const std::string& kj_str, const std::string& k_str,
                     bool no_oracle) {
  Json j;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw ParseError("cannot open spec file: " + spec_path);
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("JSON parse error: ") + e.what());
    }
  } else {
    if (p_str.empty() || a_str.empty() || b_str.empty() || m_str.empty() ||
        kj_str.empty() || k_str.empty())
      throw ParseError("either --spec or all of --p/--a/--b/--m/--kj/--k are required");
    try {
      j["p"] = std::stoll(p_str);
      j["s"] = s_str.empty() ? 1 : std::stoll(s_str);
      j["a"] = parse_csv(a_str);
      if (b_str == "power" || b_str == "nonpower")
        j["b"] = b_str;
      else
        j["b"] = std::stoll(b_str);
      j["m"] = parse_csv(m_str);
      j["kj"] = parse_csv(kj_str);
      j["k"] = std::stoll(k_str);
    } catch (const std::exception&) {
      throw ParseError("malformed numeric option");
    }
  }
  LoadedSpec loaded = spec_from_json(j);
  if (no_oracle) loaded.run_oracle = false;
  return loaded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solution counting for (a1 x1^m1 + ... + an xn^mn)^k = b x1^k1 ... xn^kn over F_q"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Parallelism degree for independent work items");

  std::string spec_path, p_str, s_str, a_str, b_str, m_str, kj_str, k_str;
  bool no_oracle = false, all_b = false;

  CLI::App* count = app.add_subcommand("count", "Count solutions for one instance");
  add_spec_options(count, spec_path, p_str, s_str, a_str, b_str, m_str, kj_str, k_str,
                   no_oracle);
  count->add_flag("--all-b", all_b, "Sweep every b in F_q^* and report the class profile");

  CLI::App* derive = app.add_subcommand("derive", "Print derived parameters and applicability");
  add_spec_options(derive, spec_path, p_str, s_str, a_str, b_str, m_str, kj_str, k_str,
                   no_oracle);

  CLI::App* tsum = app.add_subcommand("tsum", "Print exact T(psi) for all psi^d = eps");
  add_spec_options(tsum, spec_path, p_str, s_str, a_str, b_str, m_str, kj_str, k_str,
                   no_oracle);

  CLI::App* verify = app.add_subcommand("verify-tables", "Re-run the published experiment rows");

  std::uint64_t seed = 1;
  double budget = 30.0;
  CLI::App* selftest = app.add_subcommand("selftest", "Randomized invariant suites");
  selftest->add_option("--seed", seed, "RNG seed");
  selftest->add_option("--budget", budget, "Approximate time budget in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      return cmd_count(load_spec(spec_path, p_str, s_str, a_str, b_str, m_str, kj_str,
                                 k_str, no_oracle),
                       all_b);
    }
    if (derive->parsed()) {
      return cmd_derive(load_spec(spec_path, p_str, s_str, a_str, b_str, m_str, kj_str,
                                  k_str, no_oracle));
    }
    if (tsum->parsed()) {
      return cmd_tsum(load_spec(spec_path, p_str, s_str, a_str, b_str, m_str, kj_str,
                                k_str, no_oracle));
    }
    if (verify->parsed()) return cmd_verify_tables(threads);
    if (selftest->parsed()) return cmd_selftest(seed, budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
