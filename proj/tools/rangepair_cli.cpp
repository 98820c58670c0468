// Command-line front end: generate instances, answer their queries with the
// indexed engines or the brute-force oracle, cross-check the two, and run
// size sweeps for the bench report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rangepair/check.hpp"
#include "rangepair/instance.hpp"
#include "rangepair/oracle.hpp"

namespace {

using namespace rangepair;

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed,
            std::size_t queries, double alpha, const std::string& out) {
  GenParams params;
  params.queries = queries;
  params.alpha = alpha;
  const Instance inst = generate(parse_kind(kind), n, seed, params);
  write_instance_file(inst, out);
  std::cerr << "wrote " << inst.object_count() << " objects, "
            << inst.query_count() << " queries to " << out << "\n";
  return 0;
}

int cmd_query(const std::string& in, const std::string& out, bool use_oracle) {
  const Instance inst = read_instance_file(in);
  std::vector<PairReport> results(inst.query_count());
  if (use_oracle) {
    const Oracle oracle(inst);
    for (std::size_t qi = 0; qi < results.size(); ++qi) {
      results[qi] = oracle.pairs_for_query(qi);
    }
  } else {
    const Engine engine(inst);
    for (std::size_t qi = 0; qi < results.size(); ++qi) {
      results[qi] = engine.query(inst, qi);
    }
  }
  const std::string text = format_results(results);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot open " << out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int cmd_check(const std::string& kind, std::size_t n, std::size_t queries,
              std::uint64_t seed, double alpha) {
  GenParams params;
  params.alpha = alpha;
  const CheckResult res =
      run_check(parse_kind(kind), n, queries, seed, params);
  std::cout << res.pair_output;
  std::cerr << bench_csv_header() << bench_csv_row(res.row);
  if (!res.ok) {
    std::cerr << "MISMATCH at query " << res.first_mismatch
              << "; minimized counterexample written to "
              << res.counterexample_path << "\n";
    return 1;
  }
  std::cerr << "check passed\n";
  return 0;
}

int cmd_bench(const std::string& kind, const std::string& sizes,
              std::size_t queries, std::uint64_t seed, double alpha,
              const std::string& out) {
  std::vector<std::size_t> ns;
  std::stringstream ss(sizes);
  for (std::string tok; std::getline(ss, tok, ',');) {
    ns.push_back(static_cast<std::size_t>(std::stoull(tok)));
  }
  std::ostringstream csv;
  csv << bench_csv_header();
  bool all_ok = true;
  for (std::size_t n : ns) {
    GenParams params;
    params.alpha = alpha;
    const CheckResult res =
        run_check(parse_kind(kind), n, queries, seed, params);
    csv << bench_csv_row(res.row);
    all_ok = all_ok && res.ok;
    std::cerr << kind << " n=" << n << (res.ok ? " ok" : " MISMATCH") << "\n";
  }
  if (out.empty() || out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot open " << out << "\n";
      return 2;
    }
    f << csv.str();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwise intersection reporting inside query ranges"};
  app.require_subcommand(1);

  std::string kind = "segments", in, out, sizes = "250,500,1000,2000";
  std::size_t n = 100, queries = 100;
  std::uint64_t seed = 1;
  double alpha = 2.0;
  bool use_oracle = false, use_engine = false;

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--queries", queries);
  gen->add_option("--alpha", alpha);
  gen->add_option("--out", out)->required();

  auto* query = app.add_subcommand("query", "answer the queries of a file");
  query->add_option("--in", in)->required();
  query->add_option("--out", out);
  auto* oracle_flag = query->add_flag("--oracle", use_oracle);
  query->add_flag("--engine", use_engine)->excludes(oracle_flag);

  auto* check = app.add_subcommand("check", "engine vs oracle comparison");
  check->add_option("--kind", kind)->required();
  check->add_option("--n", n)->required();
  check->add_option("--queries", queries);
  check->add_option("--seed", seed);
  check->add_option("--alpha", alpha);

  auto* bench = app.add_subcommand("bench", "size sweep, CSV report");
  bench->add_option("--kind", kind)->required();
  bench->add_option("--sizes", sizes);
  bench->add_option("--queries", queries);
  bench->add_option("--seed", seed);
  bench->add_option("--alpha", alpha);
  bench->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(kind, n, seed, queries, alpha, out);
    if (query->parsed()) return cmd_query(in, out, use_oracle);
    if (check->parsed()) return cmd_check(kind, n, queries, seed, alpha);
    if (bench->parsed()) return cmd_bench(kind, sizes, queries, seed, alpha, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
