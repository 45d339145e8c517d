#pragma once

// Engine dispatch and reporting behind the command-line tool.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grundy/block.hpp"
#include "grundy/block_oracle.hpp"
#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"
#include "grundy/large_girth.hpp"
#include "grundy/oracle.hpp"
#include "grundy/structure.hpp"

namespace grundy::cli {

inline constexpr int kSchemaVersion = 1;

enum class Method { Auto, Block, Girth, Approx, Oracle };
enum class Outcome { BlockExact, LargeGirthExact, Approx, OracleExact };

// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitGuard = 3;

class MethodMismatch : public Error {
 public:
  using Error::Error;
};

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::BlockExact: return "BlockExact";
    case Outcome::LargeGirthExact: return "LargeGirthExact";
    case Outcome::Approx: return "Approx";
    case Outcome::OracleExact: return "OracleExact";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "block") return Method::Block;
  if (s == "girth") return Method::Girth;
  if (s == "approx") return Method::Approx;
  if (s == "oracle") return Method::Oracle;
  return std::nullopt;
}

struct Summary {
  int n = 0;
  int m = 0;
  int components = 0;
  std::optional<int> girth;
  int max_degree = 0;
  int delta2 = 0;
  bool is_block_graph = false;
  std::optional<int> omega;  // block graphs only
  int beta = 0;
  int tilde_delta = 0;
  int cut_vertices = 0;
  std::size_t duplicate_edges = 0;
};

struct Timing {
  double parse_ms = 0;
  double decompose_ms = 0;
  double solve_ms = 0;
  double witness_ms = 0;  // extraction where separable, plus validation
};

struct Report {
  std::string command;  // analyze, gamma or decide
  Summary summary;
  std::optional<Outcome> method;
  std::optional<int> gamma;  // exact outcomes
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<Ratio> ratio;
  // Block method only: "witness" when the extracted coloring reaches the
  // list value, "block_dp" when the exact block DP had to settle it.
  std::optional<std::string> certificate;
  std::optional<int> k;      // decide
  std::optional<bool> holds;
  std::optional<std::string> witness_path;
  std::optional<int> witness_colors;
  Timing timing;
};

namespace detail {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline void check_witness(const Graph& g, const GrundyColoring& c) {
  if (!is_grundy_coloring(g, c)) throw WitnessError("witness failed the Grundy check");
}

}  // namespace detail

// Oracle vertex cap: GRUNDY_ORACLE_CAP when set, else the default.
inline int oracle_cap_from_env() {
  const char* raw = std::getenv("GRUNDY_ORACLE_CAP");
  if (!raw || !*raw) return kDefaultOracleCap;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end || v < 0 || v > kMaxOracleCap)
    throw InvalidArgument("GRUNDY_ORACLE_CAP must be an integer in [0, " +
                          std::to_string(kMaxOracleCap) + "]");
  return static_cast<int>(v);
}

inline Summary summarize(const Graph& g, std::size_t duplicate_edges = 0) {
  Summary s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.components = connected_components(g).count;
  s.girth = girth(g);
  auto p = degree_profile(g);
  s.max_degree = p.max_degree;
  s.delta2 = p.delta2;
  auto t = block_decomposition(g);
  s.is_block_graph = grundy::detail::all_blocks_complete(g, t);
  s.beta = t.max_block_size();
  if (s.is_block_graph) s.omega = s.beta;
  s.tilde_delta = t.max_cut_degree();
  s.cut_vertices = static_cast<int>(t.cut_vertices.size());
  s.duplicate_edges = duplicate_edges;
  return s;
}

inline Report analyze(const Graph& g, std::size_t duplicate_edges = 0) {
  detail::Stopwatch clock;
  Report r;
  r.command = "analyze";
  r.summary = summarize(g, duplicate_edges);
  r.timing.decompose_ms = clock.lap_ms();
  return r;
}

struct GammaOptions {
  Method method = Method::Auto;
  int threads = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct GammaRun {
  Report report;
  GrundyColoring witness;  // checker-validated; empty for n = 0
};

// Runs the requested engine. Throws MethodMismatch when the graph does not
// meet the engine's precondition; nothing is silently downgraded.
inline GammaRun run_gamma(const Graph& g, const GammaOptions& opts = {},
                          std::size_t duplicate_edges = 0) {
  detail::Stopwatch clock;
  GammaRun run;
  Report& r = run.report;
  r.command = "gamma";
  r.summary = summarize(g, duplicate_edges);
  r.timing.decompose_ms = clock.lap_ms();
  const Summary& s = r.summary;
  const bool large_girth = girth_at_least(s.girth, 2LL * s.delta2 + 1);

  Method m = opts.method;
  if (m == Method::Auto) m = s.is_block_graph ? Method::Block : large_girth ? Method::Girth : Method::Approx;
  LargeGirthOptions lg{true, opts.threads};

  bool solved = false;
  auto exact = [&](Outcome o, int gamma) {
    r.method = o;
    r.gamma = r.lower = r.upper = gamma;
    r.ratio = Ratio{1, 1};
  };

  switch (m) {
    case Method::Block: {
      if (!s.is_block_graph) throw MethodMismatch("--method block needs a block graph");
      auto table = gamma_block_graph(g, opts.threads);
      r.timing.solve_ms = clock.lap_ms();
      solved = true;
      run.witness = block_graph_witness(g, table);
      if (run.witness.num_colors == table.gamma) {
        exact(Outcome::BlockExact, table.gamma);
        r.certificate = "witness";
        break;
      }
      // List value and extraction disagree; settle it exactly if the DP fits.
      try {
        auto best = block_oracle_gamma(g, run.witness.num_colors);
        if (best.vertex >= 0) run.witness = block_oracle_coloring(g, best.vertex, best.gamma);
        exact(Outcome::BlockExact, best.gamma);
        r.certificate = "block_dp";
      } catch (const BlockOracleTooLarge&) {
        // The list value has no proof as an upper bound, so use the color
        // caps (see block_oracle.hpp), which do.
        auto caps = grundy::detail::color_caps(g);
        r.method = Outcome::Approx;
        r.lower = run.witness.num_colors;
        r.upper = *std::max_element(caps.begin(), caps.end());
        r.ratio = Ratio{*r.lower, *r.upper};
      }
      break;
    }
    case Method::Girth: {
      if (!large_girth) throw MethodMismatch("--method girth needs girth >= 2*Delta_2 + 1");
      auto ex = exact_gamma_large_girth(g, lg);
      run.witness = std::move(ex.witness);
      exact(Outcome::LargeGirthExact, ex.gamma);
      break;
    }
    case Method::Oracle: {
      if (g.num_vertices() > opts.oracle_cap)
        throw MethodMismatch("--method oracle: " + std::string(TooLarge(g.num_vertices(), opts.oracle_cap).what()));
      auto table = enumerate_grundy_colorings(g, opts.oracle_cap);
      run.witness = {table.best_colors, table.gamma};
      exact(Outcome::OracleExact, table.gamma);
      break;
    }
    case Method::Approx:
    case Method::Auto: {
      auto ap = approx_gamma(g, lg);
      r.method = Outcome::Approx;
      if (ap.witness) run.witness = std::move(*ap.witness);
      r.lower = ap.value;
      if (ap.mode == ApproxMode::Exact) {
        r.gamma = r.upper = ap.value;
        r.ratio = Ratio{1, 1};
      } else {
        // value / ratio = Delta_2 + 1; the blow-up bound may be tighter.
        r.ratio = ap.ratio;
        r.upper = std::min(ap.delta2 + 1, upper_bound_via_blowup(g, opts.threads));
      }
      break;
    }
  }
  if (!solved) r.timing.solve_ms = clock.lap_ms();
  if (g.num_vertices() > 0) detail::check_witness(g, run.witness);
  r.witness_colors = run.witness.num_colors;
  r.timing.witness_ms = clock.lap_ms();
  return run;
}

struct DecideRun {
  Report report;
  std::optional<GrundyColoring> witness;
};

inline DecideRun run_decide(const Graph& g, int k, int threads = 1) {
  detail::Stopwatch clock;
  DecideRun run;
  Report& r = run.report;
  r.command = "decide";
  r.summary = summarize(g);
  r.timing.decompose_ms = clock.lap_ms();
  auto d = decide_gamma_at_least(g, k, {true, threads});
  r.k = k;
  r.holds = d.holds;
  r.timing.solve_ms = clock.lap_ms();
  if (d.witness) {
    detail::check_witness(g, *d.witness);
    r.witness_colors = d.witness->num_colors;
    run.witness = std::move(d.witness);
  }
  r.timing.witness_ms = clock.lap_ms();
  return run;
}

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
  const Summary& s = r.summary;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["graph"] = {{"n", s.n},
                {"m", s.m},
                {"components", s.components},
                {"girth", opt(s.girth)},
                {"max_degree", s.max_degree},
                {"delta2", s.delta2},
                {"is_block_graph", s.is_block_graph},
                {"omega", opt(s.omega)},
                {"beta", s.beta},
                {"tilde_delta", s.tilde_delta},
                {"cut_vertices", s.cut_vertices},
                {"duplicate_edges", s.duplicate_edges}};
  if (r.command == "gamma") {
    j["method"] = r.method ? json(to_string(*r.method)) : json(nullptr);
    j["gamma"] = opt(r.gamma);
    j["lower"] = opt(r.lower);
    j["certificate"] = opt(r.certificate);
    j["upper"] = opt(r.upper);
    if (r.ratio)
      j["ratio"] = {{"num", r.ratio->num}, {"den", r.ratio->den}, {"value", r.ratio->value()}};
    else
      j["ratio"] = nullptr;
  }
  if (r.command == "decide") {
    j["k"] = opt(r.k);
    j["holds"] = opt(r.holds);
  }
  if (r.command != "analyze") {
    j["witness"] = opt(r.witness_path);
    j["witness_colors"] = opt(r.witness_colors);
  }
  j["timing_ms"] = {{"parse", r.timing.parse_ms},
                    {"decompose", r.timing.decompose_ms},
                    {"solve", r.timing.solve_ms},
                    {"witness", r.timing.witness_ms}};
  return j;
}

inline std::string to_text(const Report& r) {
  const Summary& s = r.summary;
  std::ostringstream out;
  out << "vertices        " << s.n << '\n'
      << "edges           " << s.m;
  if (s.duplicate_edges) out << " (" << s.duplicate_edges << " duplicates dropped)";
  out << '\n'
      << "components      " << s.components << '\n'
      << "girth           " << (s.girth ? std::to_string(*s.girth) : "inf") << '\n'
      << "max degree      " << s.max_degree << '\n'
      << "delta2          " << s.delta2 << '\n'
      << "block graph     " << (s.is_block_graph ? "yes" : "no") << '\n';
  if (s.omega) out << "omega           " << *s.omega << '\n';
  out << "beta            " << s.beta << '\n'
      << "tilde delta     " << s.tilde_delta << '\n'
      << "cut vertices    " << s.cut_vertices << '\n';
  if (r.command == "gamma") {
    out << "method          " << (r.method ? to_string(*r.method) : "-") << '\n';
    if (r.gamma)
      out << "gamma           " << *r.gamma << '\n';
    else
      out << "bounds          " << *r.lower << " <= gamma <= " << *r.upper << '\n'
          << "ratio           " << r.ratio->num << '/' << r.ratio->den << '\n';
  }
  if (r.certificate) out << "certificate     " << *r.certificate << '\n';
  if (r.command == "decide")
    out << "gamma >= " << *r.k << "    " << (*r.holds ? "yes" : "no") << '\n';
  if (r.witness_path) out << "witness         " << *r.witness_path << '\n';
  out << "timing ms       parse " << r.timing.parse_ms << ", decompose " << r.timing.decompose_ms
      << ", solve " << r.timing.solve_ms << ", witness " << r.timing.witness_ms << '\n';
  return out.str();
}

}  // namespace grundy::cli
