#include "oclique/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oclique/construct.hpp"
#include "oclique/digraph.hpp"
#include "oclique/io.hpp"
#include "oclique/search.hpp"
#include "oclique/sequence.hpp"

namespace oclique::cli {

namespace {

// --verify runs the quadratic clique check only up to this order; above it
// the arc count is still verified and the skip is reported explicitly.
constexpr std::size_t kVerifyCliqueCap = 4096;

struct BoundsRow {
  std::uint64_t n = 0;
  ArcCount ks = 0;
  std::optional<ArcCount> fhpz;  // empty below 9
  ArcCount klss = 0;
  ArcCount xn = 0;
};

BoundsRow bounds_row(SequenceTable& table, std::uint64_t n) {
  BoundsRow r;
  r.n = n;
  r.ks = bound_ks(n);
  if (n >= 9) r.fhpz = bound_fhpz(n);
  r.klss = bound_klss(n, 2);
  r.xn = table.value(n);
  if (n >= 9 && (r.xn > *r.fhpz || r.xn > r.klss))
    throw std::logic_error("bounds row: sequence value above a proven bound");
  return r;
}

void emit_csv_header(std::ostream& out) { out << "n,ks,fhpz,klss,xn\n"; }

void emit_csv_row(std::ostream& out, const BoundsRow& r) {
  out << r.n << ',' << r.ks << ',';
  if (r.fhpz)
    out << *r.fhpz;
  else
    out << "n/a";
  out << ',' << r.klss << ',' << r.xn << '\n';
}

int cmd_seq(std::uint64_t n, bool alt, bool bounds, std::ostream& out) {
  SequenceTable table;
  const ArcCount v = table.value(n);
  if (alt) {
    const ArcCount va = table.value_alt(n);
    out << "xn=" << v << '\n';
    out << "xn_alt=" << va << '\n';
    out << "equal=" << (v == va ? "yes" : "no") << '\n';
    if (v != va) return kVerifyFail;
  } else if (!bounds) {
    out << v << '\n';
  }
  if (bounds) {
    emit_csv_header(out);
    emit_csv_row(out, bounds_row(table, n));
  }
  return kOk;
}

int cmd_table(const std::vector<std::uint64_t>& rows, std::ostream& out) {
  SequenceTable table;
  emit_csv_header(out);
  for (std::uint64_t n : rows) emit_csv_row(out, bounds_row(table, n));
  return kOk;
}

int cmd_build(std::uint64_t n, const std::string& format, bool verify,
              const std::string& outpath, std::ostream& out,
              std::ostream& err) {
  if (n > kMaxGraphOrder) {
    err << "error: order " << n << " exceeds supported maximum "
        << kMaxGraphOrder << '\n';
    return kUsage;
  }
  const OrientedGraph g = hub_clique(static_cast<std::size_t>(n));

  const auto emit = [&](std::ostream& os) {
    if (format == "dot")
      write_dot(os, g);
    else
      write_edge_list(os, g);
  };
  if (outpath.empty()) {
    emit(out);
  } else {
    std::ofstream f(outpath);
    if (!f) {
      err << "error: cannot write " << outpath << '\n';
      return kUsage;
    }
    emit(f);
  }

  if (!verify) return kOk;
  // Verification report goes to stderr when the graph went to stdout.
  std::ostream& rep = outpath.empty() ? err : out;
  SequenceTable table;
  const ArcCount expected = table.value(n);
  const bool arcs_ok = g.arc_count() == expected;
  rep << "arcs=" << g.arc_count() << '\n';
  rep << "expected=" << expected << '\n';
  rep << "arc_count=" << (arcs_ok ? "pass" : "fail") << '\n';
  bool clique_ok = true;
  if (g.order() <= kVerifyCliqueCap) {
    clique_ok = is_absolute_clique(g);
    rep << "clique=" << (clique_ok ? "pass" : "fail") << '\n';
  } else {
    rep << "clique=skipped(order-above-" << kVerifyCliqueCap << ")\n";
  }
  const bool ok = arcs_ok && clique_ok;
  rep << "verify=" << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kVerifyFail;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const OrientedGraph g = read_edge_list_file(path);
  out << "n=" << g.order() << '\n';
  out << "m=" << g.arc_count() << '\n';
  out << "weak_diameter=" << weak_diameter(g).str() << '\n';
  out << "clique=" << (is_absolute_clique(g) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_shrink(const std::string& path, std::optional<std::uint64_t> vertex,
               bool chain, const std::string& out_prefix, std::ostream& out,
               std::ostream& err) {
  OrientedGraph g = read_edge_list_file(path);
  if (!is_absolute_clique(g)) {
    err << "error: input is not an absolute clique\n";
    return kVerifyFail;
  }
  if (vertex && *vertex >= g.order()) {
    err << "error: vertex " << *vertex << " out of range\n";
    return kUsage;
  }
  if (!chain && g.order() < 2) {
    err << "error: nothing to shrink (order 1)\n";
    return kUsage;
  }

  std::vector<ArcCount> counts{g.arc_count()};
  std::size_t step = 0;
  while (g.order() > 1) {
    const ShrinkStep s = (step == 0 && vertex)
                             ? shrink_clique(g, *vertex)
                             : shrink_clique(g);
    ++step;
    g = s.graph;
    counts.push_back(g.arc_count());
    out << "step=" << step << " branch=" << to_string(s.branch)
        << " pushes=" << s.pushes_applied << " n=" << g.order()
        << " arcs=" << g.arc_count() << '\n';
    if (!out_prefix.empty()) {
      const std::string p = out_prefix + std::to_string(step) + ".el";
      std::ofstream f(p);
      if (!f) {
        err << "error: cannot write " << p << '\n';
        return kUsage;
      }
      write_edge_list(f, g);
    }
    if (!chain) break;
  }
  out << "chain=";
  for (std::size_t i = 0; i < counts.size(); ++i)
    out << (i ? "," : "") << counts[i];
  out << '\n';
  return kOk;
}

int cmd_search(std::uint64_t n, std::optional<std::uint64_t> max_nodes,
               unsigned threads, bool symmetry, std::ostream& out,
               std::ostream& err) {
  SearchConfig cfg;
  cfg.n = static_cast<std::size_t>(n);
  cfg.node_budget = max_nodes;
  cfg.threads = threads;
  cfg.parallel = threads > 1;
  cfg.symmetry_cut = symmetry;

  const SearchOutcome outcome = f2_exact(cfg);
  SequenceTable table;
  const ArcCount expected = table.value(n);

  out << "n=" << n << '\n';
  for (const RoundStat& r : outcome.rounds)
    out << "round m=" << r.m << " found=" << (r.found ? "yes" : "no")
        << " nodes=" << r.nodes
        << " completed=" << (r.completed ? "yes" : "no") << '\n';
  out << "nodes=" << outcome.nodes_explored << '\n';
  out << "exhaustive=" << (outcome.exhaustive ? "yes" : "no") << '\n';

  if (!outcome.found()) {
    err << "error: no witness found"
        << (outcome.exhaustive ? "" : " (node budget exhausted)") << '\n';
    return outcome.exhaustive ? kVerifyFail : kBudget;
  }

  out << "f2=" << outcome.f2 << '\n';
  out << "xn=" << expected << '\n';
  const bool match = outcome.f2 == expected;
  out << "match=" << (match ? "yes" : "no") << '\n';
  out << "witness:\n";
  write_edge_list(out, *outcome.witness);
  if (!match) {
    err << "error: f2 disagrees with the sequence value\n";
    return kVerifyFail;
  }
  return kOk;
}

unsigned threads_from_env(std::ostream& err) {
  const char* env = std::getenv("WEAKDIAM2_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > 1024) {
    err << "warning: ignoring invalid WEAKDIAM2_THREADS value\n";
    return 1;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"oriented graphs of weak diameter 2: sequence, construction, "
               "checking, shrinking, exact search"};
  app.require_subcommand(1);

  std::uint64_t seq_n = 0;
  bool seq_alt = false, seq_bounds = false;
  CLI::App* seq = app.add_subcommand("seq", "evaluate the arc-count sequence");
  seq->add_option("n", seq_n, "sequence index (>= 1)")->required();
  seq->add_flag("--alt", seq_alt, "also evaluate the three-term route");
  seq->add_flag("--bounds", seq_bounds, "emit the CSV bounds row");

  std::vector<std::uint64_t> table_rows = {10,     100,     1'000,
                                           10'000, 100'000, 1'000'000};
  CLI::App* table = app.add_subcommand("table", "emit the bounds table as CSV");
  table->add_option("--rows", table_rows, "comma-separated n values")
      ->delimiter(',');

  std::uint64_t build_n = 0;
  std::string build_format = "edgelist";
  bool build_verify = false;
  std::string build_out;
  CLI::App* build =
      app.add_subcommand("build", "construct the recursive witness family");
  build->add_option("n", build_n, "order (>= 1)")->required();
  build->add_option("--format", build_format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));
  build->add_flag("--verify", build_verify,
                  "check arc count, and cliqueness up to order 4096");
  build->add_option("-o,--output", build_out, "write to a file instead of stdout");

  std::string check_file;
  CLI::App* check =
      app.add_subcommand("check", "report order, size, weak diameter, clique verdict");
  check->add_option("file", check_file, "edge-list file")->required();

  std::string shrink_file;
  std::uint64_t shrink_vertex = 0;
  bool shrink_chain = false;
  std::string shrink_prefix;
  CLI::App* shrink =
      app.add_subcommand("shrink", "remove one vertex (or all, with --chain) "
                                   "preserving cliqueness");
  shrink->add_option("file", shrink_file, "edge-list file")->required();
  CLI::Option* shrink_vopt =
      shrink->add_option("--vertex", shrink_vertex, "vertex for the first step");
  shrink->add_flag("--chain", shrink_chain, "shrink repeatedly down to 1 vertex");
  shrink->add_option("--out-prefix", shrink_prefix,
                     "write each step's graph to <prefix><step>.el");

  std::uint64_t search_n = 0;
  std::uint64_t search_max_nodes = 0;
  unsigned search_threads = 0;
  bool search_symmetry = false;
  CLI::App* search =
      app.add_subcommand("search", "exact minimum arc count by brute force");
  search->add_option("n", search_n, "order (>= 1)")->required();
  CLI::Option* max_nodes_opt =
      search->add_option("--max-nodes", search_max_nodes,
                         "approximate cap on explored search nodes");
  CLI::Option* threads_opt = search->add_option(
      "--threads", search_threads,
      "worker threads (default: WEAKDIAM2_THREADS or 1)");
  search->add_flag("--symmetry", search_symmetry,
                   "enable the first-row symmetry cut");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oclique");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(seq)) return cmd_seq(seq_n, seq_alt, seq_bounds, out);
    if (app.got_subcommand(table)) return cmd_table(table_rows, out);
    if (app.got_subcommand(build))
      return cmd_build(build_n, build_format, build_verify, build_out, out, err);
    if (app.got_subcommand(check)) return cmd_check(check_file, out);
    if (app.got_subcommand(shrink)) {
      std::optional<std::uint64_t> v;
      if (shrink_vopt->count() > 0) v = shrink_vertex;
      return cmd_shrink(shrink_file, v, shrink_chain, shrink_prefix, out, err);
    }
    if (app.got_subcommand(search)) {
      std::optional<std::uint64_t> budget;
      if (max_nodes_opt->count() > 0) budget = search_max_nodes;
      const unsigned threads = threads_opt->count() > 0
                                   ? search_threads
                                   : threads_from_env(err);
      if (threads == 0) {
        err << "error: --threads must be >= 1\n";
        return kUsage;
      }
      return cmd_search(search_n, budget, threads, search_symmetry, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;  // unreachable: a subcommand is required
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace oclique::cli
