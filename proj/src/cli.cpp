#include "tbt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tbt/bracket_builder.hpp"
#include "tbt/cost_eval.hpp"
#include "tbt/exact_oracle.hpp"
#include "tbt/generators.hpp"
#include "tbt/host_io.hpp"
#include "tbt/invariants.hpp"
#include "tbt/lower_bounds.hpp"
#include "tbt/solver.hpp"

namespace tbt::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_target(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

DemandTree load_demand(const std::string& path, const std::string& root,
                       std::istream& in) {
  const std::string text = read_source(path, in);
  const UnrootedTree tree = parse_edge_list(text);
  if (root.empty()) return root_at(tree);
  const NodeId r = tree.find(root);
  if (r == kNoNode) throw InputError("unknown root '" + root + "'");
  return root_at(tree, r);
}

std::string fixed(double value, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t value = 0;
    // Accept "2^16" as well as plain integers.
    if (auto caret = item.find('^'); caret != std::string::npos) {
      const std::size_t base = std::stoul(item.substr(0, caret));
      const std::size_t exp = std::stoul(item.substr(caret + 1));
      value = 1;
      for (std::size_t i = 0; i < exp; ++i) value *= base;
    } else {
      value = std::stoul(item);
    }
    sizes.push_back(value);
  }
  if (sizes.empty()) throw InputError("no sizes given");
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw InputError("sizes must be ascending");
  }
  return sizes;
}

std::string format_report(const SolveReport& r, const DemandTree& demand) {
  std::ostringstream os;
  os << "n\t" << r.n << '\n'
     << "root\t" << (r.root == kNoNode ? "" : demand.label(r.root)) << '\n'
     << "phase1_cost\t" << r.phase1_cost << '\n'
     << "final_cost\t" << r.final_cost << '\n'
     << "steiner_count\t" << r.steiner_count << '\n'
     << "charge_total\t" << r.charge_total << '\n'
     << "cost_delta\t" << r.final_cost - r.phase1_cost << '\n'
     << "lb\t" << r.lb << '\n'
     << "trivial_lb\t" << r.trivial_lb << '\n'
     << "ratio_vs_lb\t" << fixed(r.ratio_vs_lb) << '\n';
  if (r.oracle_opt) {
    os << "oracle_opt\t" << *r.oracle_opt << '\n'
       << "ratio_vs_opt\t" << fixed(*r.ratio_vs_opt) << '\n';
  }
  os << "seconds\tphase1=" << fixed(r.phase1_seconds, 6)
     << " phase2=" << fixed(r.phase2_seconds, 6)
     << " eval=" << fixed(r.eval_seconds, 6) << '\n';
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary host trees for tree-shaped demand graphs", "tbt"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind = "random", gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a generated tree as an edge list");
  gen->add_option("--kind", gen_kind,
                  "path|star|caterpillar|complete_binary|random");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--seed", gen_seed, "Seed for random trees");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  std::string input, root, tiebreak = "lex", solve_out;
  bool phase1_only = false, as_json = false, with_labels = false,
       with_oracle = false;
  auto* solve_cmd = app.add_subcommand("solve", "Build a binary host tree");
  solve_cmd->add_option("input", input, "Edge-list file (default stdin)");
  solve_cmd->add_option("--root", root, "Root vertex label");
  solve_cmd->add_option("--tiebreak", tiebreak, "lex|id");
  solve_cmd->add_flag("--phase1-only", phase1_only,
                      "Stop after bracket building (keeps Steiner nodes)");
  solve_cmd->add_flag("--json", as_json, "Emit a JSON document");
  solve_cmd->add_flag("--labels", with_labels,
                      "Print vertices by label in the parent array");
  solve_cmd->add_flag("--oracle", with_oracle,
                      "Also compute the exact optimum (n <= 10)");
  solve_cmd->add_option("--out", solve_out, "Host tree output file");

  // eval
  std::string host_path;
  auto* eval_cmd = app.add_subcommand("eval", "Cost of a host tree");
  eval_cmd->add_option("input", input, "Demand edge-list file")->required();
  eval_cmd->add_option("--host", host_path, "Parent-array host file")->required();
  eval_cmd->add_option("--root", root, "Root vertex label");
  eval_cmd->add_flag("--labels", with_labels, "Host file names vertices by label");
  eval_cmd->add_flag("--json", as_json, "Emit JSON");

  // lb
  std::int64_t delta = 3;
  auto* lb_cmd = app.add_subcommand("lb", "Lower bound for an instance");
  lb_cmd->add_option("input", input, "Edge-list file (default stdin)");
  lb_cmd->add_option("--root", root, "Root vertex label");
  lb_cmd->add_option("--delta", delta, "Maximum host degree (>= 3)");

  // table
  bool tsv = false;
  auto* table_cmd = app.add_subcommand("table", "Per-child-count bound table");
  table_cmd->add_flag("--tsv", tsv, "Tab-separated output");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum (n <= 10)");
  oracle_cmd->add_option("input", input, "Edge-list file (default stdin)");
  oracle_cmd->add_option("--root", root, "Root vertex label");
  oracle_cmd->add_option("--tiebreak", tiebreak, "lex|id");

  // check
  std::size_t count = 0, min_n = 3, max_n = 9;
  std::uint64_t seed = 1;
  auto* check_cmd = app.add_subcommand("check", "Run the property checks");
  check_cmd->add_option("input", input, "Edge-list file");
  check_cmd->add_option("--root", root, "Root vertex label");
  check_cmd->add_option("--host", host_path,
                        "Check invariants (i)-(iii) of this parent-array host");
  check_cmd->add_option("--random", count, "Number of random instances");
  check_cmd->add_option("--min-n", min_n, "Smallest random instance");
  check_cmd->add_option("--max-n", max_n, "Largest random instance");
  check_cmd->add_option("--seed", seed, "Seed for random instances");
  check_cmd->add_option("--tiebreak", tiebreak, "lex|id");

  // bench
  std::string sizes_spec = "2^16,2^17,2^18,2^19,2^20";
  std::size_t reps = 3;
  std::string bench_kind = "random";
  std::uint64_t bench_seed = 7;
  auto* bench_cmd = app.add_subcommand("bench", "Time solve across sizes");
  bench_cmd->add_option("--sizes", sizes_spec, "Comma list, e.g. 2^16,2^17");
  bench_cmd->add_option("--kind", bench_kind, "Tree kind");
  bench_cmd->add_option("--seed", bench_seed, "Seed");
  bench_cmd->add_option("--reps", reps, "Repetitions per size");

  // bst-demo
  std::vector<std::size_t> demo_sizes;
  auto* demo_cmd = app.add_subcommand(
      "bst-demo", "Balanced-BST cost of the adversarial path");
  demo_cmd->add_option("--n", demo_sizes, "Powers of two >= 4")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) {
      const auto tree = generate(parse_tree_kind(gen_kind), gen_n, gen_seed);
      write_target(gen_out, format_edge_list(tree), out);
      return kOk;
    }

    if (*solve_cmd) {
      const DemandTree demand = load_demand(input, root, in);
      SolveOptions opts;
      opts.tiebreak = parse_tiebreak(tiebreak);
      opts.phase1_only = phase1_only;
      opts.with_oracle = with_oracle;
      if (with_oracle && demand.size() > kOracleMaxVertices) {
        err << "oracle: instance has " << demand.size() << " vertices, limit "
            << kOracleMaxVertices << '\n';
        return kResourceCap;
      }
      const SolveResult result = solve(demand, opts);
      const auto labels =
          with_labels ? demand.labels() : std::span<const std::string>{};
      if (as_json) {
        nlohmann::json doc = {
            {"report", report_to_json(result.report, demand)},
            {"host", host_to_json(result.host, demand.labels())},
            {"ledger", ledger_to_json(result.tournament, demand)}};
        write_target(solve_out, doc.dump(2) + "\n", out);
      } else {
        out << format_report(result.report, demand);
        if (!solve_out.empty()) {
          write_target(solve_out, to_parent_array(result.host, labels), out);
        } else {
          out << "# host\n" << to_parent_array(result.host, labels);
        }
      }
      return kOk;
    }

    if (*eval_cmd) {
      const DemandTree demand = load_demand(input, root, in);
      const HostTree host = parse_parent_array(
          read_source(host_path, in),
          with_labels ? demand.labels() : std::span<const std::string>{});
      const CostBreakdown cost = evaluate(demand, host);
      if (as_json) {
        nlohmann::json per = nlohmann::json::object();
        for (std::size_t v = 0; v < demand.size(); ++v) {
          per[demand.label(static_cast<NodeId>(v))] = cost.per_vertex[v];
        }
        out << nlohmann::json{{"total", cost.total}, {"per_vertex", per}}.dump(2)
            << '\n';
      } else {
        out << "total\t" << cost.total << '\n';
        for (std::size_t v = 0; v < demand.size(); ++v) {
          out << demand.label(static_cast<NodeId>(v)) << '\t'
              << cost.per_vertex[v] << '\n';
        }
      }
      return kOk;
    }

    if (*lb_cmd) {
      const DemandTree demand = load_demand(input, root, in);
      const Degree d(delta);
      out << "lb\t" << lb_instance(demand, d) << '\n'
          << "trivial_lb\t" << (demand.size() ? demand.size() - 1 : 0) << '\n'
          << "delta\t" << d.value() << '\n';
      return kOk;
    }

    if (*table_cmd) {
      const auto rows = bound_table();
      out << (tsv ? format_bound_table_tsv(rows) : format_bound_table_text(rows));
      return kOk;
    }

    if (*oracle_cmd) {
      const DemandTree demand = load_demand(input, root, in);
      if (demand.size() > kOracleMaxVertices) {
        err << "oracle: instance has " << demand.size() << " vertices, limit "
            << kOracleMaxVertices << '\n';
        return kResourceCap;
      }
      const OracleResult best = opt_cost(demand);
      SolveOptions opts;
      opts.tiebreak = parse_tiebreak(tiebreak);
      const SolveResult alg = solve(demand, opts);
      out << "opt\t" << best.optimum << '\n'
          << "alg\t" << alg.report.final_cost << '\n'
          << "ratio\t"
          << fixed(best.optimum ? static_cast<double>(alg.report.final_cost) /
                                      static_cast<double>(best.optimum)
                                : 1.0)
          << '\n'
          << "# optimal host\n"
          << to_parent_array(best.host, demand.labels());
      return kOk;
    }

    if (*check_cmd) {
      SolveOptions opts;
      opts.tiebreak = parse_tiebreak(tiebreak);
      opts.with_oracle = true;
      if (!host_path.empty()) {
        const DemandTree demand = load_demand(input, root, in);
        const HostTree host = parse_parent_array(read_source(host_path, in));
        if (host.vertex_count() != demand.size()) {
          throw InputError("host and demand tree differ in vertex count");
        }
        const auto violations = check_structure(demand, host);
        for (const auto& v : violations) {
          out << "FAIL\t" << describe(v.invariant) << "\t" << v.detail << '\n';
        }
        if (!violations.empty()) return kInvariantViolation;
        out << "PASS\tinvariants (i)-(iii)\n";
        return kOk;
      }
      std::vector<DemandTree> instances;
      if (count > 0) {
        if (min_n < 1 || min_n > max_n) throw InputError("bad --min-n/--max-n");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick_n(min_n, max_n);
        for (std::size_t i = 0; i < count; ++i) {
          const std::size_t n = pick_n(rng);
          instances.push_back(root_at(generate(TreeKind::kRandom, n, rng())));
        }
      } else {
        instances.push_back(load_demand(input, root, in));
      }
      double worst = 0;
      std::size_t failed = 0;
      for (std::size_t i = 0; i < instances.size(); ++i) {
        // The exact optimum is only computed up to nine vertices.
        opts.with_oracle = instances[i].size() <= 9;
        const InstanceCheck result = check_instance(instances[i], opts);
        if (result.report.ratio_vs_opt) {
          worst = std::max(worst, *result.report.ratio_vs_opt);
        }
        for (const auto& f : result.failures) {
          ++failed;
          out << "FAIL\tinstance " << i << "\t" << f.check << "\t" << f.detail
              << '\n';
        }
      }
      out << "instances\t" << instances.size() << '\n'
          << "max_ratio_vs_opt\t" << fixed(worst) << '\n'
          << (failed ? "verdict\tFAIL\n" : "verdict\tPASS\n");
      return failed ? kInvariantViolation : kOk;
    }

    if (*bench_cmd) {
      const auto rows = run_bench(parse_sizes(sizes_spec),
                                  parse_tree_kind(bench_kind), bench_seed, reps);
      out << "n\tmean_seconds\tmin_seconds\tgrowth\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i].n << '\t' << fixed(rows[i].mean_seconds, 6) << '\t'
            << fixed(rows[i].min_seconds, 6) << '\t'
            << (i ? fixed(rows[i].mean_seconds / rows[i - 1].mean_seconds, 3)
                  : std::string("-"))
            << '\n';
      }
      if (rows.size() > 1) out << "# mean growth " << fixed(mean_growth(rows), 3) << '\n';
      return kOk;
    }

    if (*demo_cmd) {
      out << "n\tbalanced_cost\tpath_cost\tratio\texhaustive_min\texhaustive_max\n";
      for (std::size_t n : demo_sizes) {
        const BstDemo demo = bst_demo(n);
        out << demo.n << '\t' << demo.balanced_cost << '\t' << demo.path_cost
            << '\t' << fixed(demo.ratio) << '\t'
            << (demo.exhaustive ? std::to_string(demo.exhaustive->min) : "-")
            << '\t'
            << (demo.exhaustive ? std::to_string(demo.exhaustive->max) : "-")
            << '\n';
      }
      return kOk;
    }
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const MatchError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace tbt::cli
