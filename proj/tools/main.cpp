// liargame: exact solver, bound tables, and property checks for the
// Renyi-Ulam liar game with size-capped questions.
//
// Exit codes: 0 success, 2 domain or parse error, 3 budget exceeded,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "liargame/bounds.hpp"
#include "liargame/report.hpp"
#include "liargame/solver.hpp"
#include "liargame/strategies.hpp"
#include "liargame/verify.hpp"
#include "liargame/weights.hpp"

namespace {

using namespace liargame;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

std::filesystem::path resolve_cache_path(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_absolute() || p.has_parent_path()) return p;
  if (const char* dir = std::getenv("LIARGAME_CACHE_DIR"))
    return std::filesystem::path(dir) / p;
  return p;
}

std::shared_ptr<MemoCache> load_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open cache file " + path.string());
  return MemoCache::read(in);
}

void store_cache_file(const std::filesystem::path& path, const MemoCache& cache) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write cache file " + path.string());
  cache.write(out);
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  int lies = 0;
  std::int64_t cap = 0;  // 0: unrestricted (cap = candidate count)
  std::int64_t n = -1;
  std::string state_literal;
  std::string format = "text";
  bool all_queries = false;
  bool with_tree = false;
  std::string cache_file;
  std::int64_t max_total = SolverLimits{}.max_total;
};

int run_solve(const SolveArgs& args) {
  std::vector<std::int64_t> counts;
  if (!args.state_literal.empty()) {
    counts = parse_counts(args.state_literal);
    if (counts.size() != std::size_t(args.lies) + 1)
      throw std::domain_error("state has " + std::to_string(counts.size()) +
                              " components but --lies " + std::to_string(args.lies) +
                              " needs " + std::to_string(args.lies + 1));
  } else if (args.n >= 0) {
    counts = start_state(args.lies, args.n).counts;
  } else {
    throw std::domain_error("solve needs either --n or --state");
  }
  const GameState state = make_state(counts);
  const std::int64_t cap =
      args.cap > 0 ? args.cap : std::max<std::int64_t>(state.total(), 1);
  const Params params{args.lies, cap};

  SolverLimits limits;
  limits.max_total = args.max_total;
  Solver solver(SolverOptions{}, limits);

  std::optional<std::filesystem::path> cache_path;
  if (!args.cache_file.empty()) {
    cache_path = resolve_cache_path(args.cache_file);
    if (std::filesystem::exists(*cache_path)) {
      auto loaded = load_cache_file(*cache_path);
      if (loaded->lies() != params.lies || loaded->cap() != params.cap)
        throw parse_error("cache file " + cache_path->string() + " is for l=" +
                          std::to_string(loaded->lies()) + " k=" +
                          std::to_string(loaded->cap()) + ", not l=" +
                          std::to_string(params.lies) + " k=" +
                          std::to_string(params.cap));
      solver.adopt_cache(loaded);
    }
  }

  const SolveResult result = solver.solve(state, params);
  std::optional<int> tree_depth;
  if (args.with_tree && !state.terminal())
    tree_depth = strategy_depth(extract_strategy(solver, state, params));

  if (cache_path) store_cache_file(*cache_path, *solver.cache(params));

  if (args.format == "json") {
    nlohmann::ordered_json j;
    j["state"] = to_string(state);
    j["lies"] = params.lies;
    j["cap"] = params.cap;
    j["value"] = result.value;
    j["principal"] = state.terminal() ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(to_string(result.principal()));
    if (args.all_queries) {
      auto list = nlohmann::ordered_json::array();
      for (const auto& q : result.optimal_queries) list.push_back(to_string(q));
      j["optimal_queries"] = std::move(list);
    }
    if (tree_depth) j["strategy_depth"] = *tree_depth;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "state " << to_string(state) << " (lies " << params.lies
              << ", cap " << params.cap << ")\n";
    std::cout << "value: " << result.value << '\n';
    if (!state.terminal())
      std::cout << "principal query: " << to_string(result.principal()) << '\n';
    if (args.all_queries) {
      std::cout << "optimal queries:";
      for (const auto& q : result.optimal_queries) std::cout << ' ' << to_string(q);
      std::cout << '\n';
    }
    if (tree_depth) std::cout << "strategy depth: " << *tree_depth << '\n';
  }
  return kExitOk;
}

// --- bounds / sweep --------------------------------------------------------

struct BoundsArgs {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int lies = 0;
  std::string format = "text";
  bool no_exact = false;
  bool no_l_tilde = false;
  std::int64_t exact_max_total = 64;
};

int run_bounds(const BoundsArgs& args) {
  Solver solver;
  ReportOptions options;
  options.with_exact = !args.no_exact;
  options.with_l_tilde = !args.no_l_tilde;
  options.exact_max_total = args.exact_max_total;
  const BoundReport report = make_bound_report(args.n, args.k, args.lies, solver, options);
  if (args.format == "json") {
    std::cout << report.to_json() << '\n';
  } else if (args.format == "csv") {
    std::cout << BoundReport::csv_header() << '\n' << report.to_csv_row() << '\n';
  } else {
    std::cout << "n=" << report.n << " k=" << report.k << " lies=" << report.lies
              << '\n';
    std::cout << "  l=" << report.l << " l_plus=" << report.l_plus
              << " l_hat=" << report.l_hat;
    if (report.l_tilde) std::cout << " l_tilde=" << *report.l_tilde;
    std::cout << '\n';
    if (report.theorem2_applicable)
      std::cout << "  large-n formula applies: " << *report.theorem2_value << '\n';
    else
      std::cout << "  large-n formula not applicable\n";
    if (report.exact)
      std::cout << "  exact=" << *report.exact << '\n';
    else
      std::cout << "  exact not computed\n";
  }
  return kExitOk;
}

struct SweepArgs {
  std::vector<std::int64_t> k_range;     // {lo, hi}
  std::vector<std::int64_t> n_range;     // {lo, hi}
  std::vector<std::int64_t> lies_range;  // {lo, hi}
  std::string format = "csv";
  bool no_exact = false;
  bool no_l_tilde = false;
  std::int64_t exact_max_total = 64;
  unsigned jobs = 0;
};

struct SweepRow {
  std::int64_t n, k, lies;
  std::optional<BoundReport> report;
  std::string error;
};

int run_sweep(const SweepArgs& args) {
  auto span = [](const std::vector<std::int64_t>& range, const char* what) {
    if (range.size() != 2 || range[0] > range[1])
      throw std::domain_error(std::string("bad range for ") + what);
    return std::pair{range[0], range[1]};
  };
  const auto [k_lo, k_hi] = span(args.k_range, "--k");
  const auto [n_lo, n_hi] = span(args.n_range, "--n");
  const auto [l_lo, l_hi] = span(args.lies_range, "--lies");

  Solver solver;
  ReportOptions options;
  options.with_exact = !args.no_exact;
  options.with_l_tilde = !args.no_l_tilde;
  options.exact_max_total = args.exact_max_total;
  options.shared_basic_cap = n_hi;

  std::vector<SweepRow> rows;
  for (std::int64_t lies = l_lo; lies <= l_hi; ++lies)
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
      for (std::int64_t n = n_lo; n <= n_hi; ++n)
        rows.push_back(SweepRow{n, k, lies, std::nullopt, ""});

  const unsigned workers = args.jobs > 0
                               ? args.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      SweepRow& row = rows[i];
      try {
        row.report = make_bound_report(row.n, row.k, int(row.lies), solver, options);
      } catch (const std::domain_error& e) {
        row.error = e.what();
      } catch (const budget_error& e) {
        row.error = e.what();
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w + 1 < workers; ++w)
    pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();

  if (args.format == "json") {
    std::string out = "[";
    bool first = true;
    for (const auto& row : rows) {
      if (!first) out += ',';
      first = false;
      if (row.report) {
        out += row.report->to_json();
      } else {
        nlohmann::ordered_json j;
        j["n"] = row.n;
        j["k"] = row.k;
        j["lies"] = row.lies;
        j["error"] = row.error;
        out += j.dump();
      }
    }
    out += "]";
    std::cout << out << '\n';
  } else {
    std::cout << BoundReport::csv_header() << ",error\n";
    for (const auto& row : rows) {
      if (row.report) {
        std::cout << row.report->to_csv_row() << ",\n";
      } else {
        std::string quoted = row.error;
        for (std::size_t at = quoted.find('"'); at != std::string::npos;
             at = quoted.find('"', at + 2))
          quoted.insert(at, 1, '"');
        std::cout << row.n << ',' << row.k << ',' << row.lies
                  << ",,,,,,,,\"" << quoted << "\"\n";
      }
    }
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  std::vector<std::string> budget_overrides;
  std::string format = "text";
  bool sequential = false;
};

int run_verify(const VerifyArgs& args) {
  VerifyBudget budget;
  for (const auto& spec : args.budget_overrides) apply_budget_override(budget, spec);

  Solver solver;
  const auto reports = run_checkers(solver, budget, args.only, !args.sequential);
  if (reports.empty()) throw std::domain_error("no checker matches the given names");

  bool all_passed = true;
  if (args.format == "json") {
    std::cout << reports_to_json(reports) << '\n';
    for (const auto& r : reports) all_passed = all_passed && r.passed();
  } else {
    for (const auto& r : reports) {
      all_passed = all_passed && r.passed();
      std::cout << (r.passed() ? "PASS" : "FAIL") << ' ' << r.name << " ("
                << r.instances << " instances";
      if (r.skipped) std::cout << ", " << r.skipped << " skipped";
      std::cout << ")\n";
      for (const auto& note : r.notes) std::cout << "     note: " << note << '\n';
      for (const auto& w : r.failures)
        std::cout << "     witness: " << w.instance << ": " << w.lhs << ' '
                  << w.relation << ' ' << w.rhs << '\n';
    }
  }
  return all_passed ? kExitOk : kExitVerify;
}

// --- cache -----------------------------------------------------------------

int run_cache_inspect(const std::string& file) {
  const auto cache = load_cache_file(resolve_cache_path(file));
  std::cout << "lies: " << cache->lies() << "\ncap: " << cache->cap()
            << "\nentries: " << cache->size() << '\n';
  return kExitOk;
}

int run_cache_import(const std::string& file) {
  const auto cache = load_cache_file(resolve_cache_path(file));
  std::cout << "ok: " << cache->size() << " entries for l=" << cache->lies()
            << " k=" << cache->cap() << '\n';
  return kExitOk;
}

int run_cache_export(const std::string& file, const std::string& out_file) {
  const auto cache = load_cache_file(resolve_cache_path(file));
  store_cache_file(resolve_cache_path(out_file), *cache);
  return kExitOk;
}

// --- play ------------------------------------------------------------------

struct PlayArgs {
  std::int64_t n = 8;
  int lies = 0;
  std::int64_t cap = 0;
  std::string role = "responder";  // the human's role
};

std::int64_t sole_survivor(const ElementAssignment& assignment) {
  for (std::int64_t id = 1; id <= assignment.n(); ++id)
    if (assignment.live(id)) return id;
  return 0;
}

void print_assignment(const ElementAssignment& assignment) {
  const GameState state = assignment.state();
  std::cout << "state " << to_string(state) << " (excluded " << state.excluded
            << ")\n";
  for (int c = 0; c <= assignment.lies(); ++c) {
    const auto ids = assignment.ids_in_component(c);
    if (ids.empty()) continue;
    std::cout << "  " << c << " NO" << (c == 1 ? "" : "s") << ":";
    for (auto id : ids) std::cout << ' ' << id;
    std::cout << '\n';
  }
}

// Component index = lies implied if that element were the secret, so the
// lowest populated component bounds the human's lie count from below.
int implied_lies(const GameState& state) {
  for (int c = 0; c <= state.lies(); ++c)
    if (state.counts[std::size_t(c)] > 0) return c;
  return state.lies() + 1;
}

int play_human_responder(const Params& params, ElementAssignment& assignment,
                         Solver& solver) {
  std::cout << "Think of an element between 1 and " << assignment.n()
            << "; you may lie up to " << params.lies << " time(s).\n"
            << "Answer y/n; 'state' shows the bookkeeping, 'quit' exits.\n";
  int asked = 0;
  int warned_lies = 0;
  while (true) {
    GameState state = assignment.state();
    if (state.total() == 0) {
      std::cout << "Your answers are inconsistent with every element: more than "
                << params.lies << " of them were false. No candidate remains.\n";
      return kExitOk;
    }
    const int certain_lies = implied_lies(state);
    if (certain_lies > warned_lies && state.total() > 1) {
      warned_lies = certain_lies;
      std::cout << "note: whatever you picked, at least " << certain_lies
                << " of your answers " << (certain_lies == 1 ? "was" : "were")
                << " false (budget " << params.lies << ")\n";
    }
    if (state.total() == 1) {
      std::cout << "Found it: element " << sole_survivor(assignment) << " after "
                << asked << " question(s).\n";
      return kExitOk;
    }
    const Query query = solver.solve(state, params).principal();
    const auto ids = assignment.concrete_query(query);
    std::cout << "Q" << (asked + 1) << ": is it one of {";
    for (std::size_t i = 0; i < ids.size(); ++i)
      std::cout << (i ? "," : "") << ids[i];
    std::cout << "}? [y/n] " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return kExitOk;
    if (line == "quit") return kExitOk;
    if (line == "state") {
      print_assignment(assignment);
      continue;
    }
    if (line != "y" && line != "n") {
      std::cout << "please answer y or n\n";
      continue;
    }
    assignment.apply_ids(ids, line == "y" ? Answer::yes : Answer::no);
    asked += 1;
  }
}

int play_human_questioner(const Params& params, ElementAssignment& assignment,
                          Solver& solver) {
  std::cout << "I picked an element between 1 and " << assignment.n()
            << " and may lie up to " << params.lies
            << " time(s). Ask with element ids, e.g. '1 2 5'.\n"
            << "'state' shows the bookkeeping, 'quit' gives up.\n";
  int asked = 0;
  while (true) {
    GameState state = assignment.state();
    if (state.total() <= 1) {
      if (state.total() == 1)
        std::cout << "You found it: element " << sole_survivor(assignment)
                  << " after " << asked << " question(s).\n";
      return kExitOk;
    }
    std::cout << "your question> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return kExitOk;
    if (line == "quit") {
      std::cout << "gave up after " << asked << " question(s)\n";
      return kExitOk;
    }
    if (line == "state") {
      print_assignment(assignment);
      continue;
    }
    std::vector<std::int64_t> ids;
    std::istringstream iss(line);
    std::int64_t id;
    bool ok = true;
    while (iss >> id) ids.push_back(id);
    if (!iss.eof() || ids.empty()) {
      std::cout << "could not parse that; give element ids separated by spaces\n";
      continue;
    }
    if (std::int64_t(ids.size()) > params.cap) {
      std::cout << "a question may address at most " << params.cap
                << " elements (cap k)\n";
      continue;
    }
    Query query;
    try {
      query = assignment.count_query(ids);
    } catch (const std::invalid_argument& e) {
      std::cout << e.what() << '\n';
      ok = false;
    }
    if (!ok) continue;
    if (query.size() == 0) {
      std::cout << "every element you asked is already excluded\n";
      continue;
    }
    if (query.asks == state.counts) {
      std::cout << "asking every remaining candidate reveals nothing; ask fewer\n";
      continue;
    }
    // Answer adversarially: keep the harder child.
    const Answer answer =
        adversary_policy(solver)(state, query, params);
    assignment.apply(query, answer);
    asked += 1;
    std::cout << "A" << asked << ": " << to_cstring(answer) << '\n';
  }
}

int run_play(const PlayArgs& args) {
  if (args.n < 2) throw std::domain_error("play needs --n >= 2");
  const std::int64_t cap = args.cap > 0 ? args.cap : args.n;
  const Params params{args.lies, cap};
  validate(params);
  Solver solver;
  ElementAssignment assignment(args.n, args.lies);
  if (args.role == "responder")
    return play_human_responder(params, assignment, solver);
  if (args.role == "questioner")
    return play_human_questioner(params, assignment, solver);
  throw std::domain_error("--as must be 'responder' or 'questioner'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and bound laboratory for the liar game with "
               "size-capped questions"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a state exactly");
  solve_cmd->add_option("--lies", solve_args.lies, "Lie budget")->required();
  solve_cmd->add_option("--cap", solve_args.cap,
                        "Question size cap k (0 = unrestricted)");
  solve_cmd->add_option("--n", solve_args.n, "Fresh game with n candidates");
  solve_cmd->add_option("--state", solve_args.state_literal,
                        "State literal x0,x1,...,xl");
  solve_cmd->add_option("--format", solve_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--all-queries", solve_args.all_queries,
                      "List every optimal query");
  solve_cmd->add_flag("--tree", solve_args.with_tree,
                      "Also report the strategy tree depth");
  solve_cmd->add_option("--cache", solve_args.cache_file,
                        "Cache file to load/update (see LIARGAME_CACHE_DIR)");
  solve_cmd->add_option("--max-total", solve_args.max_total,
                        "Solver budget: largest admissible candidate total");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound report for one instance");
  bounds_cmd->add_option("--n", bounds_args.n, "Candidates")->required();
  bounds_cmd->add_option("--k", bounds_args.k, "Question size cap")->required();
  bounds_cmd->add_option("--lies", bounds_args.lies, "Lie budget")->required();
  bounds_cmd->add_option("--format", bounds_args.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bounds_cmd->add_flag("--no-exact", bounds_args.no_exact, "Skip the exact solve");
  bounds_cmd->add_flag("--no-l-tilde", bounds_args.no_l_tilde,
                       "Skip the solver-heavy two-block bound");
  bounds_cmd->add_option("--exact-max-total", bounds_args.exact_max_total,
                         "Solve exactly only up to this many candidates");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bound table over a grid");
  sweep_cmd->add_option("--k", sweep_args.k_range, "k range: lo hi")
      ->expected(2)
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n_range, "n range: lo hi")
      ->expected(2)
      ->required();
  sweep_cmd->add_option("--lies", sweep_args.lies_range, "lies range: lo hi")
      ->expected(2)
      ->required();
  sweep_cmd->add_option("--format", sweep_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--no-exact", sweep_args.no_exact, "Skip exact solves");
  sweep_cmd->add_flag("--no-l-tilde", sweep_args.no_l_tilde, "Skip l_tilde");
  sweep_cmd->add_option("--exact-max-total", sweep_args.exact_max_total,
                        "Solve exactly only up to this many candidates");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads (0 = all cores)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property checkers");
  verify_cmd->add_option("--only", verify_args.only,
                         "Checker name prefixes to run (default: all)");
  verify_cmd->add_option("--budget", verify_args.budget_overrides,
                         "Budget overrides, e.g. total=6 lies=2 extras=0");
  verify_cmd->add_option("--format", verify_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--sequential", verify_args.sequential,
                       "Run checkers one at a time");

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Interactive terminal game");
  play_cmd->add_option("--n", play_args.n, "Number of candidates")->required();
  play_cmd->add_option("--lies", play_args.lies, "Lie budget");
  play_cmd->add_option("--cap", play_args.cap, "Question size cap (0 = unrestricted)");
  play_cmd->add_option("--as", play_args.role, "Your role: responder|questioner")
      ->check(CLI::IsMember({"responder", "questioner"}));

  auto* cache_cmd = app.add_subcommand("cache", "Inspect or copy cache files");
  std::string cache_file, cache_out;
  auto* cache_inspect = cache_cmd->add_subcommand("inspect", "Show header and size");
  cache_inspect->add_option("file", cache_file, "Cache file")->required();
  auto* cache_import = cache_cmd->add_subcommand("import", "Validate a cache file");
  cache_import->add_option("file", cache_file, "Cache file")->required();
  auto* cache_export = cache_cmd->add_subcommand("export", "Rewrite canonically");
  cache_export->add_option("file", cache_file, "Cache file")->required();
  cache_export->add_option("--out", cache_out, "Destination")->required();
  cache_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*bounds_cmd) return run_bounds(bounds_args);
    if (*sweep_cmd) return run_sweep(sweep_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*play_cmd) return run_play(play_args);
    if (*cache_inspect) return run_cache_inspect(cache_file);
    if (*cache_import) return run_cache_import(cache_file);
    if (*cache_export) return run_cache_export(cache_file, cache_out);
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
