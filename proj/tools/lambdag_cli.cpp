// lambdag: root systems, Chevalley bases and exterior-power checks.
#include "lambdag/sc_cache.hpp"
#include "lambdag/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lambdag;

namespace {

struct Common {
  std::string type;
  int rank = 0;
  std::string remove, keep, k = "all";
  std::uint64_t max_ambient = kDefaultAmbient;
  int jobs = 1;
  std::string output;
};

std::vector<int> parse_list(const std::string& s, int rank) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ConfigError("not an index: '" + item + "'");
    if (v < 1 || v > rank) throw ConfigError("index " + item + " outside 1.." + std::to_string(rank));
    out.push_back(v - 1);
  }
  return out;
}

char type_letter(const std::string& t, int rank) {
  if (t.size() != 1) throw ConfigError("type must be a single letter A-G");
  try {
    validate_type(t[0], rank);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return t[0];
}

// X sets selected by --remove / --keep; all nonempty subsets when neither is given.
std::vector<SimpleSet> selected_sets(const Common& c) {
  if (!c.remove.empty() && !c.keep.empty()) throw ConfigError("--remove and --keep are exclusive");
  if (!c.keep.empty()) return {parse_list(c.keep, c.rank)};
  if (!c.remove.empty()) {
    const auto gone = parse_list(c.remove, c.rank);
    SimpleSet X;
    for (int i = 0; i < c.rank; ++i)
      if (std::find(gone.begin(), gone.end(), i) == gone.end()) X.push_back(i);
    return {X};
  }
  return nonempty_subsets(c.rank);
}

std::vector<int> selected_k(const std::string& k, int lo, int hi) {
  if (k == "all") {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(k, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != k.size()) throw ConfigError("--k expects an integer or 'all'");
  return {v};
}

void emit(const Json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw std::runtime_error("cannot write " + output);
  f << text;
}

Json base_config(const std::string& command, const Common& c) {
  Json cfg;
  cfg["command"] = command;
  cfg["type"] = c.type;
  cfg["rank"] = c.rank;
  if (!c.remove.empty()) cfg["remove"] = c.remove;
  if (!c.keep.empty()) cfg["keep"] = c.keep;
  cfg["k"] = c.k;
  cfg["max_ambient"] = c.max_ambient;
  return cfg;
}

int finish(const Json& cfg, const std::vector<CaseReport>& cases, const std::string& output) {
  emit(report_json(cfg, cases), output);
  return exit_code(cases);
}

void add_common(CLI::App* cmd, Common& c, bool subsets) {
  cmd->add_option("--type", c.type, "Cartan type letter A-G")->required();
  cmd->add_option("--rank", c.rank, "Rank")->required();
  if (subsets) {
    cmd->add_option("--remove", c.remove, "Simple roots removed from Pi to form X (1-based, comma separated)");
    cmd->add_option("--keep", c.keep, "Simple roots forming X (1-based, comma separated)");
  }
  cmd->add_option("--k", c.k, "Exterior degree or 'all'");
  cmd->add_option("--max-ambient", c.max_ambient, "Skip cases with C(dim g, k) above this");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", c.output, "Write the JSON report here instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks on exterior powers of simple Lie algebras"};
  app.require_subcommand(1);

  Common info;
  auto* rootsys = app.add_subcommand("rootsys", "Root-system queries");
  rootsys->require_subcommand(1);
  auto* info_cmd = rootsys->add_subcommand("info", "Positive roots, Cartan matrix and form");
  info_cmd->add_option("--type", info.type, "Cartan type letter A-G")->required();
  info_cmd->add_option("--rank", info.rank, "Rank")->required();

  auto* verify = app.add_subcommand("verify", "Run verification cases and print a JSON report");
  verify->require_subcommand(1);

  Common th;
  auto* theorem = verify->add_subcommand("theorem", "closure(V_{k,p}, g) == Lambda^k g");
  add_common(theorem, th, true);

  Common orth;
  std::string grading = "all";
  auto* ortho = verify->add_subcommand("ortho", "Orthogonality of graded pieces");
  add_common(ortho, orth, true);
  ortho->add_option("--grading", grading, "n3, n5, n10 or all");

  Common inv;
  std::string beta;
  auto* invariants = verify->add_subcommand("invariants", "Submodule checks for X = Pi minus beta");
  add_common(invariants, inv, false);
  invariants->add_option("--beta", beta, "Removed simple roots, 1-based, comma separated (default: all)");

  std::string types = "ABCDEFG";
  int max_rank = 12;
  std::string app_output;
  auto* appendix = verify->add_subcommand("appendix", "Closed forms and dimension tables");
  appendix->add_option("--types", types, "Type letters");
  appendix->add_option("--max-rank", max_rank, "Largest classical rank");
  appendix->add_option("-o,--output", app_output, "Write the JSON report here instead of stdout");

  SuiteOptions suite_opt;
  std::string suite_output;
  auto* suite = verify->add_subcommand("suite", "Default verification grid");
  suite->add_flag("--deep", suite_opt.deep, "Add rank-3 B and C cases with a larger ambient cap");
  suite->add_option("--jobs", suite_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  suite->add_option("-o,--output", suite_output, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*info_cmd) {
      std::cout << root_system_json(build_root_system(type_letter(info.type, info.rank), info.rank)).dump(2) << "\n";
      return 0;
    }
    if (*theorem) {
      const char t = type_letter(th.type, th.rank);
      const LieAlgebra& L = algebra_for(t, th.rank);
      VerifyLimits lim;
      lim.max_ambient = th.max_ambient;
      std::vector<Task> tasks;
      for (const auto& X : selected_sets(th))
        for (int k : selected_k(th.k, 1, L.num_positive()))
          tasks.push_back(one([&L, X, k, lim] { return verify_theorem(L, X, k, lim); }));
      return finish(base_config("theorem", th), run_jobs(tasks, th.jobs), th.output);
    }
    if (*ortho) {
      const char t = type_letter(orth.type, orth.rank);
      const LieAlgebra& L = algebra_for(t, orth.rank);
      VerifyLimits lim;
      lim.max_ambient = orth.max_ambient;
      std::vector<std::string> gradings;
      if (grading == "all") {
        gradings = {"n3", "n5", "n10"};
      } else {
        gradings = {grading};
      }
      std::vector<Task> tasks;
      for (const auto& X : selected_sets(orth)) {
        for (const auto& gr : gradings) {
          const bool maximal = int(X.size()) == orth.rank - 1 && orth.rank >= 2;
          if (gr == "n10" && grading == "all" && !maximal) continue;
          for (int k : selected_k(orth.k, 1, L.dim()))
            tasks.push_back(one([&L, X, k, gr, lim] { return verify_orthogonality(L, X, k, gr, lim); }));
        }
      }
      Json cfg = base_config("ortho", orth);
      cfg["grading"] = grading;
      return finish(cfg, run_jobs(tasks, orth.jobs), orth.output);
    }
    if (*invariants) {
      const char t = type_letter(inv.type, inv.rank);
      const LieAlgebra& L = algebra_for(t, inv.rank);
      if (inv.rank < 2) throw ConfigError("invariant-subspace checks need rank >= 2");
      VerifyLimits lim;
      lim.max_ambient = inv.max_ambient;
      std::vector<int> betas = beta.empty() ? std::vector<int>{} : parse_list(beta, inv.rank);
      if (beta.empty())
        for (int b = 0; b < inv.rank; ++b) betas.push_back(b);
      std::vector<Task> tasks;
      for (int b : betas) {
        const SimpleSet X = complement_of(L.root_system(), b);
        const int d = build_parabolic(L, X).d;
        for (int k : selected_k(inv.k, 1, d)) {
          tasks.push_back([&L, b, k, lim] { return verify_invariant_subspaces(L, b, k, lim); });
          tasks.push_back(one([&L, b, k, lim] { return verify_pau2(L, b, k, lim); }));
          tasks.push_back(one([&L, X, k, lim] { return verify_c2oc2(L, X, k, lim); }));
        }
      }
      Json cfg = base_config("invariants", inv);
      cfg["beta"] = beta.empty() ? std::string("all") : beta;
      return finish(cfg, run_jobs(tasks, inv.jobs), inv.output);
    }
    if (*appendix) {
      Json cfg{{"command", "appendix"}, {"types", types}, {"max_rank", max_rank}};
      return finish(cfg, verify_appendix(types, max_rank), app_output);
    }
    if (*suite) {
      return finish(suite_config(suite_opt), run_suite(suite_opt), suite_output);
    }
  } catch (const ConfigError& e) {
    std::cerr << "lambdag: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lambdag: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lambdag: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
