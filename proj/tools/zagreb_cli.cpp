#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/connectivity.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/formats.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/verifier.hpp"

namespace {

using namespace zagreb;

int enum_guard_from_env() {
  const char* env = std::getenv("ZAGREB_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultEnumGuard;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    throw std::invalid_argument(
        "ZAGREB_MAX_N must be a positive integer, got '" + std::string(env) +
        "'");
  }
  return static_cast<int>(std::min<long>(v, kEnumCap));
}

std::optional<FileFormat> format_from_name(const std::string& name) {
  if (name.size() >= 3 && name.rfind(".g6") == name.size() - 3)
    return FileFormat::graph6;
  if (name.size() >= 6 && name.rfind(".edges") == name.size() - 6)
    return FileFormat::edge_list;
  return std::nullopt;
}

// Accepts a file path (.g6 / .edges, or any path with --input-format), "-"
// for standard input, or an inline graph6 token as a fallback.
std::vector<Graph> load_graphs(const std::string& input,
                               const std::string& format_override) {
  std::optional<FileFormat> fmt;
  if (format_override == "g6") fmt = FileFormat::graph6;
  if (format_override == "edges") fmt = FileFormat::edge_list;

  if (input == "-") {
    return read_graphs(std::cin, fmt.value_or(FileFormat::graph6));
  }
  std::ifstream in(input);
  if (!in && (input.find('/') != std::string::npos ||
              format_from_name(input).has_value())) {
    throw std::invalid_argument("cannot open '" + input + "'");
  }
  if (in) {
    if (!fmt) fmt = format_from_name(input);
    if (!fmt) {
      throw std::invalid_argument(
          "cannot infer format of '" + input +
          "' (expected .g6 or .edges); pass --input-format");
    }
    return read_graphs(in, *fmt);
  }
  // Not an openable file: treat the argument as an inline graph6 token.
  return {from_graph6(input)};
}

std::string log12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_index(const std::string& input, const std::string& format_override,
              const std::string& which, bool log_domain) {
  for (const Graph& g : load_graphs(input, format_override)) {
    if (which == "m1" || which == "m2") {
      auto [m1, m2] = m1_m2(g);
      long long v = which == "m1" ? m1 : m2;
      if (log_domain) {
        std::cout << log12(std::log(static_cast<double>(v))) << "\n";
      } else {
        std::cout << v << "\n";
      }
    } else {
      ExactProduct p = which == "pi1" ? pi1(g) : pi2(g);
      if (log_domain) {
        std::cout << log12(p.log_value()) << "\n";
      } else {
        std::cout << p.decimal() << "\n";
      }
    }
  }
  return 0;
}

int cmd_connectivity(const std::string& input,
                     const std::string& format_override) {
  for (const Graph& g : load_graphs(input, format_override)) {
    ConnectivityProfile prof = connectivity_profile(g);
    std::cout << prof.kappa << " " << prof.kappa_prime << "\n";
  }
  return 0;
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "edges") {
    std::cout << to_edge_list(g);
  } else {
    std::cout << to_graph6(g) << "\n";
  }
}

int cmd_construct(const std::string& kind, int n, int k, int j,
                  const std::string& h_input, int m,
                  const std::string& format) {
  if (kind == "complete" || kind == "path" || kind == "star") {
    if (n < 0) throw std::invalid_argument("construct requires --n");
    BasicKind bk = kind == "complete" ? BasicKind::complete
                   : kind == "path"  ? BasicKind::path
                                     : BasicKind::star;
    emit_graph(basic(bk, n), format);
    return 0;
  }
  if (kind == "knk") {
    if (n < 0 || k < 0)
      throw std::invalid_argument("construct knk requires --n and --k");
    emit_graph(knk(n, k), format);
    return 0;
  }
  // sandwich
  if (j < 0 || m < 0 || h_input.empty()) {
    throw std::invalid_argument(
        "construct sandwich requires --j, --h and --m");
  }
  std::vector<Graph> hs = load_graphs(h_input, "");
  if (hs.size() != 1) {
    throw std::invalid_argument("--h must provide exactly one graph, got " +
                                std::to_string(hs.size()));
  }
  Graph g = sandwich(j, hs.front(), m);
  if (n >= 0 && n != g.vertex_count()) {
    throw std::invalid_argument(
        "--n " + std::to_string(n) + " contradicts j + |V(H)| + m = " +
        std::to_string(g.vertex_count()));
  }
  emit_graph(g, format);
  return 0;
}

int cmd_enumerate(int n, bool trees_only, int kappa_max, int kappa_prime_max,
                  int jobs, int guard) {
  EnumOptions opts{guard, jobs};
  GraphStream stream =
      trees_only          ? trees(n)
      : kappa_max >= 0    ? class_members(n, kappa_max,
                                          GraphClass::vertex_class, opts)
      : kappa_prime_max >= 0
          ? class_members(n, kappa_prime_max, GraphClass::edge_class, opts)
          : connected_graphs(n, opts);
  while (auto g = stream.next()) {
    std::cout << to_graph6(*g) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& claims_arg, int n_max, int jobs,
               const std::string& report_path, bool timings, int guard) {
  std::vector<std::string> claims;
  if (claims_arg != "all") {
    std::stringstream ss(claims_arg);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) claims.push_back(id);
    }
    if (claims.empty()) {
      throw std::invalid_argument("--claims needs 'all' or a comma list");
    }
  }
  RunOptions opts;
  opts.jobs = jobs;
  opts.enum_guard = guard;
  opts.timings = timings;
  VerificationReport report = verify_suite(n_max, claims, opts);
  std::string text = report.to_json();
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) {
      throw std::invalid_argument("cannot open report path '" + report_path +
                                  "'");
    }
    out << text;
  }
  return report.any_refuted() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multiplicative Zagreb indices, connectivity and extremal-bound "
      "verification on small graphs"};
  app.require_subcommand(1);

  std::string input, input_format;
  std::string index_kind = "pi1";
  bool log_domain = false;
  auto* idx = app.add_subcommand(
      "index", "Evaluate a Zagreb index on every input graph");
  idx->add_option("--input", input, "graph file, '-' for stdin, or a graph6 token")
      ->required();
  idx->add_option("--index", index_kind, "pi1|pi2|m1|m2 (default pi1)")
      ->check(CLI::IsMember({"pi1", "pi2", "m1", "m2"}));
  idx->add_flag("--log", log_domain,
                "print the natural log to 12 significant digits");
  idx->add_option("--input-format", input_format, "g6|edges override")
      ->check(CLI::IsMember({"g6", "edges"}));

  auto* conn = app.add_subcommand(
      "connectivity", "Print 'kappa kappa_prime' for every input graph");
  conn->add_option("--input", input, "graph file, '-' for stdin, or a graph6 token")
      ->required();
  conn->add_option("--input-format", input_format, "g6|edges override")
      ->check(CLI::IsMember({"g6", "edges"}));

  std::string kind, h_input, out_format = "g6";
  int n = -1, k = -1, j = -1, m = -1;
  auto* cons = app.add_subcommand("construct", "Emit a named graph");
  // Frees the short -h so the sandwich's --h middle-graph option can exist.
  cons->set_help_flag("--help", "Print this help message and exit");
  cons->add_option("kind", kind, "complete|path|star|knk|sandwich")
      ->required()
      ->check(CLI::IsMember({"complete", "path", "star", "knk", "sandwich"}));
  cons->add_option("--n", n, "vertex count");
  cons->add_option("--k", k, "attachment count for knk");
  cons->add_option("--j", j, "first clique size for sandwich");
  cons->add_option("--h", h_input, "middle graph for sandwich (file or graph6)");
  cons->add_option("--m", m, "second clique size for sandwich");
  cons->add_option("--format", out_format, "g6|edges (default g6)")
      ->check(CLI::IsMember({"g6", "edges"}));

  bool trees_only = false;
  int kappa_max = -1, kappa_prime_max = -1, jobs = 1;
  auto* enu = app.add_subcommand(
      "enumerate", "Stream non-isomorphic connected graphs as graph6 lines");
  enu->add_option("--n", n, "vertex count")->required();
  auto* tflag = enu->add_flag("--trees", trees_only, "trees only");
  auto* kmax = enu->add_option("--kappa-max", kappa_max,
                               "restrict to vertex connectivity <= K");
  auto* kpmax = enu->add_option("--kappa-prime-max", kappa_prime_max,
                                "restrict to edge connectivity <= K");
  kmax->excludes(kpmax);
  tflag->excludes(kmax)->excludes(kpmax);
  enu->add_option("--jobs", jobs, "worker threads (default 1)");

  std::string claims = "all", report_path;
  int n_max = 8;
  bool timings = false;
  auto* ver = app.add_subcommand(
      "verify", "Check the sharp bounds and lemmas by exhaustive search");
  ver->add_option("--claims", claims, "'all' or comma list (see README)")
      ->required();
  ver->add_option("--n-max", n_max, "largest full-enumeration order (default 8)");
  ver->add_option("--jobs", jobs, "worker threads (default 1)");
  ver->add_option("--report", report_path, "write the JSON report here");
  ver->add_flag("--timings", timings,
                "measure elapsed_ms per entry (breaks byte-for-byte "
                "report reproducibility)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    int guard = enum_guard_from_env();
    if (idx->parsed())
      return cmd_index(input, input_format, index_kind, log_domain);
    if (conn->parsed()) return cmd_connectivity(input, input_format);
    if (cons->parsed())
      return cmd_construct(kind, n, k, j, h_input, m, out_format);
    if (enu->parsed())
      return cmd_enumerate(n, trees_only, kappa_max, kappa_prime_max, jobs,
                           guard);
    if (ver->parsed())
      return cmd_verify(claims, n_max, jobs, report_path, timings, guard);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
