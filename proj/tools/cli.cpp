#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "persym/census.hpp"
#include "persym/formulas.hpp"
#include "persym/laurent.hpp"
#include "persym/polycount.hpp"
#include "suites.hpp"

namespace persym::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Global {
  int budget = 34;
  int threads = 0;
  std::string out_path;

  CensusOptions opts() const { return {threads, budget}; }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? sep : "") + std::to_string(v[j]);
  return out;
}

// ---- census ----------------------------------------------------------------

struct CensusArgs {
  std::string shape;
  bool joint = false;
  bool csv = false;
};

std::string cmd_census(const CensusArgs& a, const Global& g) {
  const auto shape = parse_shape(a.shape);
  std::ostringstream os;
  if (a.joint) {
    const auto t = joint_rank_census(shape, g.opts());
    if (a.csv) {
      for (std::size_t j = 0; j < t.chain.size(); ++j) os << "r" << j + 1 << ",";
      os << "count\n";
      for (const auto& [tup, c] : t.counts) os << join(tup, ",") << "," << c << "\n";
      return os.str();
    }
    Json j;
    j["shape"] = to_string(shape);
    j["param_bits"] = shape.param_bits();
    j["chain"] = Json::array();
    for (const auto& c : t.chain) j["chain"].push_back(to_string(c));
    j["counts"] = Json::object();
    for (const auto& [tup, c] : t.counts) j["counts"][join(tup, ",")] = c.str();
    return j.dump(2) + "\n";
  }
  const auto d = rank_census(shape, g.opts());
  if (a.csv) {
    os << "rank,count\n";
    for (std::size_t i = 0; i < d.counts.size(); ++i) os << i << "," << d.counts[i] << "\n";
    return os.str();
  }
  Json j;
  j["shape"] = to_string(shape);
  j["param_bits"] = shape.param_bits();
  j["counts"] = Json::object();
  for (std::size_t i = 0; i < d.counts.size(); ++i) j["counts"][std::to_string(i)] = d.counts[i].str();
  return j.dump(2) + "\n";
}

// ---- gamma -----------------------------------------------------------------

struct GammaArgs {
  std::string shape;
  int i = 0;
  std::string path = "closed";
};

FormulaResult gamma_closed(const FamilyShape& f, int i) {
  switch (f.kind) {
    case FamilyKind::Single: return gamma_persym(f.s, f.k, i);
    case FamilyKind::PersymPlusRows: return gamma_persym_rows(f.n, f.m, f.k, i);
    case FamilyKind::Double: return gamma_double(f.s, f.m, f.k, i);
    case FamilyKind::Triple:
      if (f.l != 0) {
        throw NotCoveredError("triple closed forms need l = 0; the recurrence in s (--path recur, s >= 2) or the census "
                              "cover l > 0");
      }
      return gamma_triple(f.s, f.m, f.k, i);
  }
  throw DomainError("unknown family");
}

FormulaResult gamma_recur(const FamilyShape& f, int i, CensusCache& cache) {
  switch (f.kind) {
    case FamilyKind::Double: return gamma_double_recur(f.s, f.m, f.k, i);
    case FamilyKind::Triple: return gamma_triple_recur(f.s, f.m, f.l, f.k, i, cache);
    default:
      throw NotCoveredError("no recurrence for " + to_string(f) + "; use --path closed or --path census");
  }
}

std::string cmd_gamma(const GammaArgs& a, const Global& g, int& code) {
  const auto shape = parse_shape(a.shape);
  validate(shape);
  if (a.i < 0) throw DomainError("rank must be >= 0");
  CensusCache cache(g.opts());
  const std::map<std::string, std::function<FormulaResult()>> paths = {
      {"closed", [&] { return gamma_closed(shape, a.i); }},
      {"recur", [&] { return gamma_recur(shape, a.i, cache); }},
      {"census", [&] { return FormulaResult{cache.distribution(shape).at(a.i), "census"}; }},
  };
  static const std::vector<std::string> order = {"closed", "recur", "census"};

  Json j;
  j["shape"] = to_string(shape);
  j["i"] = a.i;
  if (a.path != "all") {
    const auto r = paths.at(a.path)();
    j["path"] = a.path;
    j["value"] = r.value.str();
    j["provenance"] = r.provenance;
    return j.dump(2) + "\n";
  }
  j["values"] = Json::object();
  Json missing = Json::object();
  std::optional<BigInt> first;
  bool agree = true;
  for (const auto& p : order) {
    try {
      const auto r = paths.at(p)();
      j["values"][p] = {{"value", r.value.str()}, {"provenance", r.provenance}};
      if (!first) first = r.value;
      agree = agree && *first == r.value;
    } catch (const DomainError& e) {
      missing[p] = e.what();
    } catch (const BudgetError& e) {
      missing[p] = e.what();
    }
  }
  if (!missing.empty()) j["unavailable"] = missing;
  j["paths"] = j["values"].size();
  j["agree"] = first.has_value() && agree;
  if (!first) code = kDomain;
  else if (!agree) code = kVerifyFailed;
  return j.dump(2) + "\n";
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  SuiteBounds bounds;
  bool csv = false;
};

std::string cmd_verify(VerifyArgs a, const Global& g, std::ostream& err, int& code) {
  a.bounds.opts = g.opts();
  const auto rep = run_suite(a.suite, a.bounds);
  code = rep.passed() ? kOk : kVerifyFailed;
  err << "suite " << rep.suite << ": " << rep.checks.size() << " checks, " << rep.failures() << " failed, "
      << rep.skipped.size() << " skipped\n";
  std::ostringstream os;
  if (a.csv) {
    os << "identity,instance,lhs,rhs,lhs_path,rhs_path,holds\n";
    for (const auto& c : rep.checks) {
      os << csv_field(c.identity) << "," << csv_field(c.instance) << "," << c.lhs << "," << c.rhs << ","
         << csv_field(c.lhs_path) << "," << csv_field(c.rhs_path) << "," << (c.holds ? "true" : "false") << "\n";
    }
    return os.str();
  }
  Json j;
  j["suite"] = rep.suite;
  j["passed"] = rep.passed();
  j["checks_run"] = rep.checks.size();
  j["failures"] = rep.failures();
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    j["checks"].push_back({{"identity", c.identity},
                           {"instance", c.instance},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"lhs_path", c.lhs_path},
                           {"rhs_path", c.rhs_path},
                           {"holds", c.holds}});
  }
  j["skipped"] = rep.skipped;
  return j.dump(2) + "\n";
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  std::string system;
  std::vector<std::string> params;
  int q = 1;
  std::string path = "all";
};

struct System {
  std::string kind;
  std::map<std::string, int> p;
  std::vector<int> bounds;  // companion degree bounds
  std::optional<FamilyShape> shape;
  std::optional<SumShape> sum;
};

System parse_system(const CountArgs& a) {
  System sys{a.system, {}, {}, {}, {}};
  for (const auto& tok : a.params) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw DomainError("expected key=value, got \"" + tok + "\"");
    const auto key = tok.substr(0, eq);
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok.substr(eq + 1), &used);
      if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
      sys.p[key] = v;
    } catch (const std::logic_error&) {
      throw DomainError("bad integer in \"" + tok + "\"");
    }
  }
  const auto need = [&](const char* key) {
    const auto it = sys.p.find(key);
    if (it == sys.p.end()) throw DomainError(sys.kind + " needs " + key + "=");
    return it->second;
  };
  const auto opt = [&](const char* key, int def) {
    const auto it = sys.p.find(key);
    return it == sys.p.end() ? def : it->second;
  };
  const auto allow = [&](std::initializer_list<std::string> keys) {
    for (const auto& [k, v] : sys.p) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw DomainError(sys.kind + " does not take " + k + "=");
    }
  };
  const int k = need("k");
  if (k < 1) throw DomainError("k must be >= 1");
  if (sys.kind == "single") {
    allow({"k", "m", "s"});
    if (sys.p.count("m") && sys.p.count("s")) throw DomainError("single takes m= (deg Z <= m) or s= (s = m+1), not both");
    const int m = sys.p.count("m") ? sys.p.at("m") : need("s") - 1;
    if (m < 0) throw DomainError("single needs m >= 0");
    sys.p = {{"k", k}, {"m", m}};
    sys.bounds = {m};
    sys.shape = single_shape(m + 1, k);
    sys.sum = SumShape::single(m + 1, k);
  } else if (sys.kind == "rows") {
    allow({"k", "m", "n"});
    const int n = need("n"), m = need("m");
    if (n < 0 || m < 0) throw DomainError("rows needs n >= 0 and m >= 0");
    sys.bounds = {m};
    sys.bounds.insert(sys.bounds.end(), static_cast<std::size_t>(n), 0);
    sys.shape = rows_shape(n, m, k);
    sys.sum = SumShape::rows(n, m, k);
  } else if (sys.kind == "double") {
    allow({"k", "s", "m"});
    const int s = need("s"), m = opt("m", 0);
    if (s < 1 || m < 0) throw DomainError("double needs s >= 1 and m >= 0");
    sys.p["m"] = m;
    sys.bounds = {s - 1, s + m - 1};
    sys.shape = double_shape(s, m, k);
    sys.sum = SumShape::double_block(k, s, m);
  } else if (sys.kind == "triple") {
    allow({"k", "s", "m", "l"});
    const int s = need("s"), m = opt("m", 0), l = opt("l", 0);
    if (s < 1 || m < 0 || l < 0) throw DomainError("triple needs s >= 1, m >= 0, l >= 0");
    sys.p["m"] = m;
    sys.p["l"] = l;
    sys.bounds = {s - 1, s + m - 1, s + m + l - 1};
    sys.shape = triple_shape(s, m, l, k);
    sys.sum = SumShape::triple_block(k, s, m, l);
  } else {
    throw DomainError("unknown system \"" + sys.kind + "\" (single, rows, double, triple)");
  }
  return sys;
}

BigInt closed_moment(const System& sys, int q) {
  const auto& f = *sys.shape;
  if (sys.kind == "single") return r_q_single_closed(q, f.k, f.s - 1).value;
  std::vector<BigInt> counts;
  for (int i = 0; i <= f.max_rank(); ++i) counts.push_back(gamma_closed(f, i).value);
  return moment(counts, q, f.k + f.total_rows(), f.param_bits()).value;
}

std::string cmd_count(const CountArgs& a, const Global& g, int& code) {
  if (a.q < 1) throw DomainError("--q must be >= 1");
  const auto sys = parse_system(a);
  const auto o = g.opts();
  const std::map<std::string, std::function<BigInt()>> paths = {
      {"brute", [&] { return count_solutions(sys.shape->k, sys.bounds, a.q, o); }},
      {"integral", [&] { return integral_moment(*sys.sum, a.q, o); }},
      {"moment", [&] { return moment(rank_census(*sys.shape, o), a.q).value; }},
      {"closed", [&] { return closed_moment(sys, a.q); }},
  };
  static const std::vector<std::string> order = {"brute", "integral", "moment", "closed"};

  Json j;
  j["system"] = sys.kind;
  for (const auto& [key, v] : sys.p) j[key] = v;
  j["q"] = a.q;
  j["bounds"] = sys.bounds;
  if (a.path != "all") {
    j["path"] = a.path;
    j["value"] = paths.at(a.path)().str();
    return j.dump(2) + "\n";
  }
  j["values"] = Json::object();
  Json skipped = Json::object();
  std::optional<BigInt> first;
  bool agree = true;
  for (const auto& p : order) {
    try {
      const BigInt v = paths.at(p)();
      j["values"][p] = v.str();
      if (!first) first = v;
      agree = agree && *first == v;
    } catch (const BudgetError& e) {
      skipped[p] = e.what();
    } catch (const DomainError& e) {
      skipped[p] = e.what();
    }
  }
  if (!skipped.empty()) j["skipped"] = skipped;
  j["agree"] = first.has_value() && agree;
  if (!first) code = kBudget;
  else if (!agree) code = kVerifyFailed;
  return j.dump(2) + "\n";
}

void emit(const std::string& text, const Global& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + g.out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank censuses, closed forms and moment checks for persymmetric matrix families over GF(2)", "persym"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--budget", g.budget, "Refuse exhaustive work above 2^BUDGET steps")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out_path, "Write the result to this file instead of stdout");

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "Exhaustive rank distribution of a family, e.g. double:s=3,m=2,k=4");
  census->add_option("shape", ca.shape, "Family text")->required();
  census->add_flag("--joint", ca.joint, "Joint ranks over the nested sub-shape chain");
  census->add_flag("--csv", ca.csv, "CSV instead of JSON");

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Number of family members of rank I");
  gamma->add_option("shape", ga.shape, "Family text")->required();
  gamma->add_option("i", ga.i, "Rank")->required();
  gamma->add_option("--path", ga.path, "closed, recur, census or all")
      ->check(CLI::IsMember({"closed", "recur", "census", "all"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-s", va.bounds.max_s, "Largest s");
  verify->add_option("--max-k", va.bounds.max_k, "Largest k");
  verify->add_option("--max-m", va.bounds.max_m, "Largest m");
  verify->add_option("--max", va.bounds.max, "Suite-specific size bound");
  verify->add_flag("--csv", va.csv, "CSV instead of JSON");

  CountArgs ka;
  auto* count = app.add_subcommand("count", "Solutions of the bilinear system, e.g. count double k=4 s=3 m=2 --q 3");
  count->add_option("system", ka.system, "single, rows, double or triple")->required();
  count->add_option("params", ka.params, "key=value sizes (k, s, m, n, l)");
  count->add_option("--q", ka.q, "Number of summands")->capture_default_str();
  count->add_option("--path", ka.path, "brute, integral, moment, closed or all")
      ->check(CLI::IsMember({"brute", "integral", "moment", "closed", "all"}))
      ->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kDomain;
  }

  int code = kOk;
  try {
    std::string text;
    if (*census) text = cmd_census(ca, g);
    else if (*gamma) text = cmd_gamma(ga, g, code);
    else if (*verify) text = cmd_verify(va, g, err, code);
    else text = cmd_count(ka, g, code);
    emit(text, g, out);
    return code;
  } catch (const BudgetError& e) {
    err << "budget refused: " << e.what() << " (raise --budget to allow it)\n";
    return kBudget;
  } catch (const NotCoveredError& e) {
    err << "not covered: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ConsistencyError& e) {
    err << "inconsistent result: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace persym::cli
