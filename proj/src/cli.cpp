#include "zagreb/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zagreb/canonical.hpp"
#include "zagreb/domination.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/report.hpp"
#include "zagreb/transforms.hpp"
#include "zagreb/tree_io.hpp"
#include "zagreb/verify.hpp"

namespace zagreb::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string out;
  std::string csv;
  std::string format;
  std::string name;
  std::string claims = "all";
  int n = 0;
  int k = 1;
  int k_min = 1;
  int s = 1;
  int a = 1;
  int u = -1;
  int v = -1;
  std::optional<int> gamma;
  int jobs = 1;
  int cap = kEnumerationCap;
  int oracle_cap = kBruteForceCap;
};

std::vector<Tree> load_trees(const std::string& path) {
  if (path == "-") return read_trees(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  try {
    return read_trees(in);
  } catch (const TreeError& e) {
    throw TreeError(path + ": " + e.what());
  }
}

Tree first_tree(const std::string& path) {
  auto trees = load_trees(path);
  if (trees.empty()) throw UsageError("input '" + path + "' contains no tree");
  return trees.front();
}

// Writes to --out when given, otherwise to the provided stream.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string maybe(const std::function<ExactNat()>& f) {
  try {
    return f().to_decimal();
  } catch (const DomainError&) {
    return "";
  }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  auto trees = load_trees(cfg.input);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text;
  const bool csv = cfg.format.empty() || cfg.format == "csv";
  if (csv) text << "index,n,m1,m2,pi1,pi2,f,h,gamma,diameter,code\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i];
    nlohmann::ordered_json row;
    row["index"] = i;
    row["n"] = t.order();
    row["m1"] = first_zagreb(t).to_decimal();
    row["m2"] = second_zagreb(t).to_decimal();
    row["pi1"] = maybe([&] { return pi1(t); });
    row["pi2"] = maybe([&] { return pi2(t); });
    row["f"] = f_aux(t).to_decimal();
    row["h"] = h_aux(t).to_decimal();
    row["gamma"] = gamma_k(t, cfg.k).gamma;
    row["diameter"] = diameter(t);
    row["code"] = canonical_code(t).to_hex();
    if (csv) {
      bool first = true;
      for (const auto& [key, value] : row.items()) {
        if (!first) text << ',';
        first = false;
        text << (value.is_string() ? value.get<std::string>() : value.dump());
      }
      text << '\n';
    } else if (cfg.format == "text") {
      text << "#" << i << " n=" << t.order() << " pi1=" << row["pi1"].get<std::string>()
           << " pi2=" << row["pi2"].get<std::string>() << " gamma_" << cfg.k << "=" << row["gamma"]
           << '\n';
    }
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") text << rows.dump(2) << '\n';
  emit(cfg.out, text.str(), out);
  return kExitOk;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  auto trees = load_trees(cfg.input);
  std::ostringstream text;
  text << "index,n,k,gamma,witness\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto result = gamma_k(trees[i], cfg.k);
    text << i << ',' << trees[i].order() << ',' << cfg.k << ',' << result.gamma << ',';
    for (std::size_t j = 0; j < result.witness.size(); ++j) text << (j ? " " : "") << result.witness[j];
    text << '\n';
  }
  emit(cfg.out, text.str(), out);
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  auto stream = free_trees(cfg.n, cfg.cap);
  std::ostringstream text;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    Tree t = stream.at(i);
    if (cfg.gamma && gamma_k(t, cfg.k).gamma != *cfg.gamma) continue;
    text << to_line(t) << '\n';
  }
  emit(cfg.out, text.str(), out);
  return kExitOk;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  const auto& name = cfg.name;
  std::string line;
  if (name == "star") {
    line = to_line(star(cfg.n));
  } else if (name == "path") {
    line = to_line(path(cfg.n));
  } else if (name == "t_nks") {
    line = to_line(t_nks(cfg.n, cfg.k, cfg.s));
  } else if (name == "t_a_nk2") {
    line = to_line(t_a_nk2(cfg.n, cfg.k, cfg.a));
  } else if (name == "corona") {
    if (cfg.input.empty()) throw UsageError("family corona needs --input with the base tree");
    line = to_line(corona(first_tree(cfg.input), cfg.k));
  } else if (name == "corona_decompose") {
    if (cfg.input.empty()) throw UsageError("family corona_decompose needs --input");
    auto base = corona_decompose(first_tree(cfg.input), cfg.k);
    line = base ? to_line(*base) : "# not a corona";
  } else {
    throw UsageError("unknown family '" + name + "'");
  }
  emit(cfg.out, line + "\n", out);
  return kExitOk;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  Tree t = first_tree(cfg.input);
  std::string text;
  if (cfg.name == "contract") {
    text = to_line(contract_pend(t, cfg.u, cfg.v)) + "\n";
  } else if (cfg.name == "move") {
    auto moved = move_pendants(t, cfg.u, cfg.v);
    text = to_line(moved.to_u) + "\n" + to_line(moved.to_v) + "\n";
  } else {
    throw UsageError("unknown transform '" + cfg.name + "' (expected contract or move)");
  }
  emit(cfg.out, text, out);
  return kExitOk;
}

std::vector<std::string> parse_claims(const std::string& list) {
  if (list == "all") return claim_ids();
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("--claims is empty");
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  ScanParams params;
  params.n_max = cfg.n;
  params.k_min = cfg.k_min;
  params.k_max = cfg.k;
  params.jobs = cfg.jobs;
  params.enumeration_cap = cfg.cap;
  params.oracle_cap = cfg.oracle_cap;
  auto report = run_verification(parse_claims(cfg.claims), params);
  out << render_text(report);
  if (!cfg.out.empty()) {
    const std::string& fmt = cfg.format.empty() ? "json" : cfg.format;
    if (fmt == "json") {
      emit(cfg.out, render_json(report), out);
    } else if (fmt == "csv") {
      emit(cfg.out, render_csv(report), out);
    } else {
      emit(cfg.out, render_text(report), out);
    }
  }
  if (!cfg.csv.empty()) emit(cfg.csv, render_csv(report), out);
  return report.any_failure() ? kExitClaimFailure : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative Zagreb indices and distance-k domination of trees", "zagreb"};
  app.require_subcommand(1);
  RunConfig cfg;
  const auto formats = CLI::IsMember({"json", "csv", "text"});

  auto* compute = app.add_subcommand("compute", "Indices and gamma_k for every tree in a file");
  compute->add_option("--input", cfg.input, "Tree file ('-' for stdin)")->required();
  compute->add_option("--k", cfg.k, "Domination radius")->check(CLI::PositiveNumber);
  compute->add_option("--format", cfg.format, "csv (default), json or text")->check(formats);
  compute->add_option("--out", cfg.out, "Output file");

  auto* gamma = app.add_subcommand("gamma", "Minimum distance-k dominating sets");
  gamma->add_option("--input", cfg.input, "Tree file ('-' for stdin)")->required();
  gamma->add_option("--k", cfg.k, "Domination radius")->check(CLI::PositiveNumber);
  gamma->add_option("--out", cfg.out, "Output file");

  auto* enumerate = app.add_subcommand("enumerate", "All non-isomorphic trees of one order");
  enumerate->add_option("--n", cfg.n, "Order")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", cfg.out, "Output file");
  enumerate->add_option("--filter-gamma,--gamma", cfg.gamma, "Keep trees with gamma_k equal to this");
  enumerate->add_option("--k", cfg.k, "Radius for --filter-gamma")->check(CLI::PositiveNumber);
  enumerate->add_option("--cap", cfg.cap, "Enumeration cap");

  auto* family = app.add_subcommand("family", "Emit a named tree family member");
  family->add_option("name", cfg.name, "star, path, t_nks, t_a_nk2, corona, corona_decompose")->required();
  family->add_option("--n", cfg.n, "Order");
  family->add_option("--k", cfg.k, "Radius parameter");
  family->add_option("--s", cfg.s, "Branch parameter for t_nks");
  family->add_option("--a", cfg.a, "Attachment index for t_a_nk2");
  family->add_option("--input", cfg.input, "Base tree file for corona / tree for corona_decompose");
  family->add_option("--out", cfg.out, "Output file");

  auto* transform = app.add_subcommand("transform", "Apply contract (T_uv) or move (G', G'')");
  transform->add_option("kind", cfg.name, "contract or move")->required();
  transform->add_option("--input", cfg.input, "Tree file; the first tree is used")->required();
  transform->add_option("--u", cfg.u, "First vertex")->required();
  transform->add_option("--v", cfg.v, "Second vertex")->required();
  transform->add_option("--out", cfg.out, "Output file");

  auto* verify = app.add_subcommand("verify", "Check the extremal claims over all small trees");
  cfg.n = 10;
  verify->add_option("--claims", cfg.claims, "Comma-separated claim ids or 'all'");
  verify->add_option("--nmax,--n", cfg.n, "Largest order scanned")->check(CLI::PositiveNumber);
  verify->add_option("--kmin", cfg.k_min, "Smallest radius")->check(CLI::PositiveNumber);
  verify->add_option("--kmax,--k", cfg.k, "Largest radius")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report,--out", cfg.out, "Report file");
  verify->add_option("--csv", cfg.csv, "CSV summary file");
  verify->add_option("--format", cfg.format, "Report format: json (default), csv or text")->check(formats);
  verify->add_option("--cap", cfg.cap, "Enumeration cap");
  verify->add_option("--oracle-cap", cfg.oracle_cap, "Brute-force oracle cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  // `verify` defaults to k_max = 3 unless given.
  if (verify->parsed() && verify->count("--kmax") == 0) cfg.k = 3;
  if (verify->parsed() && cfg.k < cfg.k_min) {
    err << "error: --kmax must be >= --kmin\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out);
    if (gamma->parsed()) return cmd_gamma(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (family->parsed()) return cmd_family(cfg, out);
    if (transform->parsed()) return cmd_transform(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zagreb::cli
