// grundy: command-line front end.
//
//   grundy analyze FILE [--format auto|edgelist|dimacs] [--json]
//   grundy gamma FILE [--method auto|block|girth|approx|oracle] [--witness OUT] [--json] [--threads N]
//   grundy decide FILE K [--witness OUT] [--json]
//   grundy gen tree|blockgraph|cliquefamily|cycle|petersen|figure2 ... [--seed S] [--dimacs]

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "grundy/generators.hpp"
#include "grundy/io.hpp"
#include "grundy/report.hpp"

namespace {

using namespace grundy;

struct Input {
  io::ParsedGraph parsed;
  double parse_ms = 0;
};

Input load(const std::string& path, io::Format format) {
  std::ifstream in(path);
  if (!in) throw io::ParseError(0, "cannot open " + path);
  cli::detail::Stopwatch clock;
  Input out{io::read_graph(in, format), 0};
  out.parse_ms = clock.lap_ms();
  return out;
}

void write_witness_file(const std::string& path, const GrundyColoring& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  io::write_witness(out, c);
}

void emit(const cli::Report& r, bool json) {
  if (json)
    std::cout << cli::to_json(r).dump(2) << '\n';
  else
    std::cout << cli::to_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy (First-Fit) chromatic number"};
  app.require_subcommand(1);

  const std::map<std::string, io::Format> formats{
      {"auto", io::Format::Auto}, {"edgelist", io::Format::EdgeList}, {"dimacs", io::Format::Dimacs}};
  std::string file;
  io::Format format = io::Format::Auto;
  bool json = false;
  std::string witness;
  int threads = 1;

  auto* analyze = app.add_subcommand("analyze", "structural statistics");
  auto* gamma = app.add_subcommand("gamma", "Grundy number or certified bounds");
  auto* decide = app.add_subcommand("decide", "decide whether Gamma >= k");
  for (auto* sub : {analyze, gamma, decide}) {
    sub->add_option("file", file, "graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "input format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--json", json, "emit one JSON object");
  }

  std::string method_name = "auto";
  gamma->add_option("--method", method_name, "engine")
      ->check(CLI::IsMember({"auto", "block", "girth", "approx", "oracle"}));
  gamma->add_option("--witness", witness, "write the witness coloring here");
  gamma->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int k = 0;
  decide->add_option("k", k, "threshold")->required()->check(CLI::PositiveNumber);
  decide->add_option("--witness", witness, "write the witness coloring here");
  decide->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph to stdout");
  gen_cmd->require_subcommand(1);
  std::uint64_t seed = 1;
  bool dimacs = false;
  gen_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  gen_cmd->add_flag("--dimacs", dimacs, "DIMACS output instead of an edge list");
  int n = 0, max_block = 4, t = 0, p = 0;
  auto* gen_tree = gen_cmd->add_subcommand("tree", "uniform random labelled tree");
  gen_tree->add_option("n", n)->required()->check(CLI::PositiveNumber);
  auto* gen_block = gen_cmd->add_subcommand("blockgraph", "random connected block graph");
  gen_block->add_option("n", n)->required()->check(CLI::PositiveNumber);
  gen_block->add_option("--max-block", max_block)->check(CLI::Range(2, 1 << 20));
  auto* gen_family = gen_cmd->add_subcommand("cliquefamily", "extremal clique family G_{t,p}");
  gen_family->add_option("t", t)->required()->check(CLI::PositiveNumber);
  gen_family->add_option("p", p)->required()->check(CLI::Range(2, 1 << 20));
  auto* gen_cycle = gen_cmd->add_subcommand("cycle", "cycle C_n");
  gen_cycle->add_option("n", n)->required()->check(CLI::Range(3, 1 << 30));
  auto* gen_petersen = gen_cmd->add_subcommand("petersen", "Petersen graph");
  auto* gen_figure2 = gen_cmd->add_subcommand("figure2", "14-vertex block-graph fixture");
  // --seed and --dimacs may follow the shape.
  for (auto* s : {gen_tree, gen_block, gen_family, gen_cycle, gen_petersen, gen_figure2}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      Graph g;
      if (*gen_tree) g = gen::random_tree(n, seed);
      else if (*gen_block) g = gen::random_block_graph(n, max_block, seed);
      else if (*gen_family) g = generate_clique_family(t, p);
      else if (*gen_cycle) g = gen::cycle(n);
      else if (*gen_petersen) g = gen::petersen();
      else if (*gen_figure2) g = gen::figure2_fixture();
      if (dimacs)
        io::write_dimacs(std::cout, g);
      else
        io::write_edge_list(std::cout, g);
      return cli::kExitOk;
    }

    Input input = load(file, format);
    const Graph& g = input.parsed.graph;

    if (*analyze) {
      auto r = cli::analyze(g, input.parsed.duplicate_edges);
      r.timing.parse_ms = input.parse_ms;
      emit(r, json);
      return cli::kExitOk;
    }

    if (*gamma) {
      cli::GammaOptions opts{*cli::parse_method(method_name), threads, cli::oracle_cap_from_env()};
      auto run = cli::run_gamma(g, opts, input.parsed.duplicate_edges);
      run.report.timing.parse_ms = input.parse_ms;
      if (!witness.empty()) {
        write_witness_file(witness, run.witness);
        run.report.witness_path = witness;
      }
      emit(run.report, json);
      return cli::kExitOk;
    }

    auto run = cli::run_decide(g, k, threads);
    run.report.timing.parse_ms = input.parse_ms;
    if (!witness.empty() && run.witness) {
      write_witness_file(witness, *run.witness);
      run.report.witness_path = witness;
    }
    emit(run.report, json);
    return cli::kExitOk;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kExitParse;
  } catch (const KTooLargeForGirth& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitMismatch;
  }
}
