// facheck: command-line front end for the finann library.
//
// Exit codes: 0 success (whatever the verdict), 1 theorem mismatch in
// verify-all, 2 parse or usage error, 3 cap or budget exceeded, 4 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "finann/catalog.hpp"
#include "finann/classify.hpp"
#include "finann/covering.hpp"
#include "finann/error.hpp"
#include "finann/group_structure.hpp"
#include "finann/report_json.hpp"
#include "finann/witness.hpp"

namespace {

using namespace finann;

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kLimit = 3, kIo = 4 };

struct RunConfig {
  std::string format = "text";
  std::vector<std::string> caps_text;
  Caps caps;
  unsigned jobs = 1;
};

Caps parse_caps(const std::vector<std::string>& items) {
  Caps caps;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "cap '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || value == 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "cap '" + item + "' needs a positive integer");
    }
    if (key == "order") caps.construction = value;
    else if (key == "normal") caps.normal = value;
    else if (key == "weight") caps.weight = value;
    else if (key == "budget") caps.search_budget = value;
    else throw Error(ErrorCode::InvalidArgument, "unknown cap '" + key + "' (order, normal, weight, budget)");
  }
  return caps;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load_presentation(const std::string& path) {
  std::string text;
  std::istringstream lines(read_file(path));
  for (std::string line; std::getline(lines, line);) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    text += line + "\n";
  }
  return parse_presentation(text);
}

std::string ids(const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- analyze

int cmd_analyze(const RunConfig& cfg, const std::string& path, const std::string& hint_text,
                std::optional<std::size_t> n) {
  const Presentation p = load_presentation(path);
  const Hint hint = parse_hint(hint_text);
  const auto inv = abelian_invariants(p);
  const Verdict v = classify_fa(p, hint);
  const RhoChecks rho = rho_annihilated_checks(p);
  std::optional<Verdict> nv;
  if (n) nv = classify_nfa(p, *n, hint);

  if (cfg.format == "json") {
    Json out = verdict_json(p, hint, v, inv);
    out["abelian_a"] = {{"verdict", std::string(to_string(rho.abelian_a.status))}, {"reason", rho.abelian_a.reason}};
    out["free_a"] = {{"verdict", std::string(to_string(rho.free_a.status))}, {"reason", rho.free_a.reason}};
    if (nv) out["nfa"] = verdict_json(p, hint, *nv, inv);
    print_json(out);
    return kOk;
  }
  std::cout << "presentation: " << render(p) << "\n"
            << "invariants:   " << inv.to_string() << "\n"
            << "F-A:          " << to_string(v.status) << " [" << v.rule << "] " << v.reason << "\n"
            << "easily F-A:   " << (v.easily_fa ? "yes" : "no") << "\n"
            << "perfect:      " << (v.perfect ? "yes" : "no") << "\n"
            << "abelian-A:    " << to_string(rho.abelian_a.status) << " (" << rho.abelian_a.reason << ")\n"
            << "free-A:       " << to_string(rho.free_a.status) << " (" << rho.free_a.reason << ")\n";
  if (nv) std::cout << nv->property() << ":" << std::string(nv->property().size() < 12 ? 12 - nv->property().size() : 1, ' ')
                    << to_string(nv->status) << " [" << nv->rule << "] " << nv->reason << "\n";
  return kOk;
}

// ----------------------------------------------------------------- finite

void print_cover_text(const CoverReport& r) {
  std::cout << r.property() << ": " << (r.verdict ? "yes" : "no") << "\n";
  std::cout << "  maximal normal subgroups:";
  for (const auto& s : r.cover) std::cout << " " << s.to_hex();
  std::cout << "\n";
  if (r.verdict) {
    std::cout << "  subcover:";
    for (const auto& s : r.subcover) std::cout << " " << s.to_hex();
    std::cout << "\n";
  } else {
    std::cout << "  uncovered: " << ids(r.uncovered) << "\n";
  }
}

void print_checks_text(const TheoremChecks& t) {
  std::cout << "theorem checks: " << (t.all_pass() ? "all pass" : "FAILED") << "\n";
  for (const auto& f : t.failures()) std::cout << "  failed: " << f << "\n";
}

int cmd_finite(const RunConfig& cfg, const std::string& spec, const std::string& load_format,
               std::optional<std::size_t> n, bool weight, bool verify, std::optional<Elem> element) {
  const FiniteGroup g = load_format.empty() ? group_from_spec(spec, cfg.caps.construction)
                                            : load_group(spec, parse_group_file_format(load_format),
                                                         cfg.caps.construction);
  const auto inv = abelianisation_invariants(g);
  const CoverReport fa = is_fa_finite(g, cfg.caps.normal);
  std::optional<CoverReport> nfa;
  if (n && *n > 1) nfa = is_nfa_finite(g, *n, cfg.caps.normal);
  std::optional<WeightResult> w;
  if (weight) w = weight_bruteforce(g, cfg.caps.weight);
  std::optional<TheoremChecks> checks;
  if (verify) {
    VerifyOptions o;
    o.caps = cfg.caps;
    o.check_weight = g.order() <= cfg.caps.weight;
    checks = verify_finite_theorems(g, o);
  }
  std::optional<std::optional<ElementSet>> wit;
  if (element) {
    if (*element >= g.order()) throw Error(ErrorCode::InvalidArgument, "element id out of range");
    wit = fa_witness_finite(g, *element, cfg.caps.normal);
  }

  if (cfg.format == "json") {
    Json out{{"group", g.name()}, {"order", g.order()}, {"abelianisation", invariants_json(inv)}, {"fa", cover_json(fa)}};
    if (nfa) out["nfa"] = cover_json(*nfa);
    if (w) out["weight"] = weight_json(g, *w);
    if (checks) out["verify"] = theorem_checks_json(*checks);
    if (wit) {
      out["element_witness"] = {{"element", *element},
                                {"subgroup", *wit ? Json((*wit)->to_hex()) : Json(nullptr)}};
    }
    print_json(out);
    return kOk;
  }
  std::cout << "group: " << g.name() << " (order " << g.order() << ")\n"
            << "abelianisation: " << inv.to_string() << "\n";
  print_cover_text(fa);
  if (nfa) print_cover_text(*nfa);
  if (w) std::cout << "weight: " << w->weight << " (normal generators: " << ids(w->generators) << ")\n";
  if (checks) print_checks_text(*checks);
  if (wit) {
    std::cout << "element " << *element << ": ";
    if (*wit) std::cout << "in maximal normal subgroup " << (*wit)->to_hex() << "\n";
    else std::cout << "in no maximal normal subgroup\n";
  }
  return kOk;
}

// --------------------------------------------------------- witness / scan

int cmd_witness(const RunConfig& cfg, const std::string& path, const std::string& word_text, std::size_t bound) {
  const Presentation p = load_presentation(path);
  const Word w = parse_word(p, word_text);
  const auto found = find_annihilator(p, w, bound, cfg.caps.search_budget);
  const std::string none = "none ≤ " + std::to_string(bound);
  if (cfg.format == "json") {
    if (found) {
      print_json(witness_json(*found));
    } else {
      print_json(Json{{"word", render_word(p, w)},
                      {"result", none},
                      {"bound", bound},
                      {"catalog", std::string(witness_catalog_description())}});
    }
    return kOk;
  }
  if (!found) {
    std::cout << none << " (searched " << witness_catalog_description() << ")\n";
    return kOk;
  }
  std::cout << "word " << render_word(p, w) << " dies in " << found->target.name() << " (order "
            << found->target.order() << ")\n";
  for (const auto& line : found->check) std::cout << "  " << line << "\n";
  return kOk;
}

int cmd_quotient(const RunConfig& cfg, const std::string& path, std::size_t bound) {
  const Presentation p = load_presentation(path);
  const auto found = nontrivial_quotient_exists(p, bound, cfg.caps.search_budget);
  const std::string none = "none ≤ " + std::to_string(bound);
  if (cfg.format == "json") {
    print_json(found ? witness_json(*found)
                     : Json{{"result", none}, {"bound", bound}, {"catalog", std::string(witness_catalog_description())}});
    return kOk;
  }
  if (found) std::cout << "maps onto " << found->target.name() << " (order " << found->target.order() << ")\n";
  else std::cout << none << " (searched " << witness_catalog_description() << ")\n";
  return kOk;
}

int cmd_scan(const RunConfig& cfg, const std::string& path, std::size_t length, std::size_t bound) {
  const Presentation p = load_presentation(path);
  const ScanReport r = fa_scan(p, length, bound, cfg.caps.search_budget);
  if (cfg.format == "json") {
    print_json(scan_json(r));
    return kOk;
  }
  std::cout << "presentation: " << render(p) << "\n"
            << "words up to length " << length << ", targets of order <= " << bound << "\n";
  for (const auto& e : r.entries) {
    std::cout << "  " << std::left << std::setw(24) << render_word(p, e.word) << " " << to_string(e.status);
    if (e.witness) std::cout << " (" << e.witness->target.name() << ")";
    std::cout << "\n";
  }
  std::cout << "witnessed " << r.witnessed() << ", unwitnessed " << r.unwitnessed() << "\n";
  return kOk;
}

// ------------------------------------------------------------- verify-all

struct Row {
  std::string group;
  std::size_t order = 0;
  std::string status;  // pass, FAIL, skipped-convention
  std::optional<TheoremChecks> checks;
  std::vector<std::string> failures;
  std::string message;
};

Row verify_one(const FiniteGroup& g, const RunConfig& cfg, std::size_t nfa_max, std::size_t weight_max) {
  Row row{g.name(), g.order(), "pass", std::nullopt, {}, {}};
  if (g.is_trivial()) {
    row.status = "skipped-convention";
    row.message = "trivial group: not F-A by convention, weight 0";
    return row;
  }
  VerifyOptions o;
  o.nfa_max = nfa_max;
  o.caps = cfg.caps;
  o.check_weight = g.order() <= weight_max || is_perfect(g);
  row.checks = verify_finite_theorems(g, o);
  row.failures = row.checks->failures();
  if (!row.failures.empty()) row.status = "FAIL";
  return row;
}

int cmd_verify_all(const RunConfig& cfg, std::optional<std::size_t> max_order, std::size_t nfa_max,
                   std::size_t weight_max, const std::string& catalog_path, const std::vector<std::string>& files) {
  const CatalogSpec spec =
      catalog_path.empty() ? CatalogSpec::default_spec() : CatalogSpec::parse(read_file(catalog_path));
  std::vector<FiniteGroup> groups;
  for (auto& g : build_catalog(spec, cfg.caps.construction))
    if (!max_order || g.order() <= *max_order) groups.push_back(std::move(g));

  std::vector<Row> load_failures;
  for (const auto& item : files) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--group-file expects FORMAT:PATH");
    const auto format = parse_group_file_format(item.substr(0, colon));
    const std::string path = item.substr(colon + 1);
    try {
      FiniteGroup g = load_group(path, format, cfg.caps.construction);
      if (auto bad = g.validate()) throw Error(ErrorCode::NotAGroup, *bad);
      groups.push_back(std::move(g));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IoError) throw;
      Row row;
      row.group = std::filesystem::path(path).stem().string();
      row.status = "FAIL";
      row.failures = {"validate"};
      row.message = e.what();
      load_failures.push_back(std::move(row));
    }
  }

  std::vector<Row> rows(groups.size());
  const unsigned jobs = std::max(1U, cfg.jobs);
  for (std::size_t start = 0; start < groups.size(); start += jobs) {
    std::vector<std::future<Row>> batch;
    for (std::size_t i = start; i < std::min(groups.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, verify_one,
                                 std::cref(groups[i]), std::cref(cfg), nfa_max, weight_max));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }
  rows.insert(rows.end(), load_failures.begin(), load_failures.end());
  const auto mismatches =
      static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.status == "FAIL"; }));

  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json item = r.checks ? theorem_checks_json(*r.checks) : Json{{"group", r.group}, {"order", r.order}};
      item["status"] = r.status;
      if (!r.checks) item["failures"] = r.failures;
      if (!r.message.empty()) item["message"] = r.message;
      list.push_back(std::move(item));
    }
    print_json(Json{{"groups", std::move(list)}, {"checked", rows.size()}, {"mismatches", mismatches}});
  } else {
    std::cout << std::left << std::setw(12) << "group" << std::setw(7) << "order" << std::setw(22) << "G^ab"
              << std::setw(6) << "F-A" << std::setw(8) << "weight" << "status\n";
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(12) << r.group << std::setw(7) << r.order;
      if (r.checks) {
        std::cout << std::setw(22) << r.checks->abelianisation << std::setw(6) << (r.checks->fa ? "yes" : "no")
                  << std::setw(8) << (r.checks->weight ? std::to_string(*r.checks->weight) : "-");
      } else {
        std::cout << std::setw(22) << "-" << std::setw(6) << "-" << std::setw(8) << "-";
      }
      std::cout << r.status;
      for (const auto& f : r.failures) std::cout << " " << f;
      if (!r.message.empty()) std::cout << " (" << r.message << ")";
      std::cout << "\n";
    }
    std::cout << rows.size() << " groups, " << mismatches << " mismatches\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide, witness and verify finite annihilation of groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with the same keys as the global flags");
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--caps", cfg.caps_text, "Caps as key=value: order, normal, weight, budget");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify-all")->check(CLI::PositiveNumber);

  std::string path, hint = "none", word, spec, load_format, catalog_path;
  std::optional<std::size_t> n, max_order;
  std::optional<Elem> element;
  std::size_t bound = 0, length = 0, nfa_max = 3, weight_max = 24;
  bool weight = false, verify = false;
  std::vector<std::string> group_files;

  auto* analyze = app.add_subcommand("analyze", "Classify a finitely presented group");
  analyze->add_option("file", path, "Presentation file")->required();
  analyze->add_option("--hint", hint, "Asserted class membership");
  analyze->add_option("--nfa", n, "Also classify n-F-A")->check(CLI::PositiveNumber);

  auto* finite = app.add_subcommand("finite", "Exact checks on a finite group");
  finite->add_option("spec", spec, "Group spec such as \"C 15\" or prod(Q8, C 2), or a path with --load")->required();
  finite->add_option("--load", load_format, "Treat spec as a file: permutations, cayley or matrix");
  finite->add_option("--nfa", n, "Check n-F-A")->check(CLI::PositiveNumber);
  finite->add_flag("--weight", weight, "Brute-force weight");
  finite->add_flag("--verify", verify, "Run every theorem cross-check");
  finite->add_option("--element", element, "Report a maximal normal subgroup containing this element");

  auto* witness = app.add_subcommand("witness", "Find a finite quotient killing a word");
  witness->add_option("file", path, "Presentation file")->required();
  witness->add_option("word", word, "Word in the generators")->required();
  witness->add_option("--bound", bound, "Largest target order")->required()->check(CLI::PositiveNumber);

  auto* quotient_cmd = app.add_subcommand("quotient", "Look for any nontrivial finite quotient");
  quotient_cmd->add_option("file", path, "Presentation file")->required();
  quotient_cmd->add_option("--bound", bound, "Largest target order")->required()->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Bounded witness scan over short words");
  scan->add_option("file", path, "Presentation file")->required();
  scan->add_option("--length", length, "Longest word")->required();
  scan->add_option("--bound", bound, "Largest target order")->required()->check(CLI::PositiveNumber);

  auto* verify_all = app.add_subcommand("verify-all", "Theorem harness over the catalog");
  verify_all->add_option("--max-order", max_order, "Skip catalog groups above this order")->check(CLI::PositiveNumber);
  verify_all->add_option("--nfa-max", nfa_max, "Largest n for n-F-A checks")->check(CLI::PositiveNumber);
  verify_all->add_option("--weight-max-order", weight_max, "Brute-force weight up to this order (perfect groups always)");
  verify_all->add_option("--catalog", catalog_path, "Catalog spec file");
  verify_all->add_option("--group-file", group_files, "Extra group as FORMAT:PATH (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kParse;
  }

  try {
    cfg.caps = parse_caps(cfg.caps_text);
    if (analyze->parsed()) return cmd_analyze(cfg, path, hint, n);
    if (finite->parsed()) return cmd_finite(cfg, spec, load_format, n, weight, verify, element);
    if (witness->parsed()) return cmd_witness(cfg, path, word, bound);
    if (quotient_cmd->parsed()) return cmd_quotient(cfg, path, bound);
    if (scan->parsed()) return cmd_scan(cfg, path, length, bound);
    if (verify_all->parsed()) return cmd_verify_all(cfg, max_order, nfa_max, weight_max, catalog_path, group_files);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.is_limit()) return kLimit;
    if (e.code() == ErrorCode::IoError) return kIo;
    return kParse;
  }
  return kOk;
}
