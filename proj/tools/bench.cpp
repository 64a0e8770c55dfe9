// Compares the serial reference loops against the OpenMP paths on the two
// hot kernels: the per-graph facts sweep (connectivity + indices) and the
// one-vertex extension step of the enumerator. Checksums must match across
// job counts; a mismatch aborts the run.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/connectivity.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/formats.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace {

using namespace zagreb;
using Clock = std::chrono::steady_clock;

struct Stat {
  double best_ms = 0;
  double mean_ms = 0;
  std::uint64_t checksum = 0;
};

template <typename F>
Stat time_reps(int reps, F&& f) {
  Stat st;
  double total = 0;
  for (int r = 0; r < reps; ++r) {
    Clock::time_point t0 = Clock::now();
    std::uint64_t sum = f();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    if (r == 0 || ms < st.best_ms) st.best_ms = ms;
    total += ms;
    if (r == 0) st.checksum = sum;
    if (sum != st.checksum) {
      std::fprintf(stderr, "checksum drift between repetitions\n");
      std::exit(1);
    }
  }
  st.mean_ms = total / reps;
  return st;
}

std::uint64_t facts_sweep(const std::vector<std::string>& forms, int jobs) {
  std::vector<std::uint64_t> acc(forms.size());
  auto work = [&](std::size_t i) {
    Graph g = from_graph6(forms[i]);
    ConnectivityProfile prof = connectivity_profile(g);
    std::uint64_t h = std::hash<std::string>{}(pi1(g).decimal());
    h = h * 31 + std::hash<std::string>{}(pi2(g).decimal());
    h = h * 31 + static_cast<std::uint64_t>(prof.kappa * 64 + prof.kappa_prime);
    acc[i] = h;
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < forms.size(); ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(forms.size()); ++i) {
      work(static_cast<std::size_t>(i));
    }
  }
  std::uint64_t sum = 0;
  for (std::uint64_t h : acc) sum += h;
  return sum;
}

std::uint64_t extend_sweep(int n, const std::vector<std::string>& parents,
                           int jobs) {
  auto work = [&](std::size_t i) {
    Graph base = from_graph6(parents[i]);
    std::vector<std::pair<int, int>> base_edges = base.edges();
    std::uint64_t h = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1));
         ++mask) {
      std::vector<std::pair<int, int>> edges = base_edges;
      for (int v = 0; v < n - 1; ++v) {
        if (mask >> v & 1) edges.emplace_back(v, n - 1);
      }
      h = h * 1000003 + std::hash<std::string>{}(
                            canonical_form(Graph::from_edges(n, edges)).bytes);
    }
    return h;
  };
  std::vector<std::uint64_t> acc(parents.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < parents.size(); ++i) acc[i] = work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(parents.size()); ++i) {
      acc[static_cast<std::size_t>(i)] = work(static_cast<std::size_t>(i));
    }
  }
  std::uint64_t sum = 0;
  for (std::uint64_t h : acc) sum += h;
  return sum;
}

void report(const char* kernel, int n, int jobs, int reps, const Stat& st,
            double baseline_ms) {
  std::printf("%-13s n=%d jobs=%-2d reps=%d best %8.2f ms  mean %8.2f ms  "
              "speedup %.2fx\n",
              kernel, n, jobs, reps, st.best_ms, st.mean_ms,
              baseline_ms / st.best_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int n = 7;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  int reps = 3;
  CLI::App app{"Serial vs OpenMP timing for the sweep and extension kernels"};
  app.add_option("--n", n, "vertex count (default 7)")
      ->check(CLI::Range(3, kEnumCap));
  app.add_option("--jobs", jobs, "parallel worker count");
  app.add_option("--reps", reps, "repetitions per measurement (default 3)");
  CLI11_PARSE(app, argc, argv);
  if (jobs < 1) jobs = 1;

  EnumOptions opts{kEnumCap, jobs};
  FormList forms = connected_graph_forms(n, opts);
  FormList parents = all_graph_forms(n - 1, opts);
  std::printf("corpus: %zu connected graphs on %d vertices, %zu parents on "
              "%d\n",
              forms->size(), n, parents->size(), n - 1);

  Stat facts_serial = time_reps(reps, [&] { return facts_sweep(*forms, 1); });
  report("facts-sweep", n, 1, reps, facts_serial, facts_serial.best_ms);
  Stat facts_par = time_reps(reps, [&] { return facts_sweep(*forms, jobs); });
  report("facts-sweep", n, jobs, reps, facts_par, facts_serial.best_ms);
  if (facts_par.checksum != facts_serial.checksum) {
    std::fprintf(stderr, "facts-sweep checksum mismatch\n");
    return 1;
  }

  Stat ext_serial =
      time_reps(reps, [&] { return extend_sweep(n, *parents, 1); });
  report("extend-sweep", n, 1, reps, ext_serial, ext_serial.best_ms);
  Stat ext_par =
      time_reps(reps, [&] { return extend_sweep(n, *parents, jobs); });
  report("extend-sweep", n, jobs, reps, ext_par, ext_serial.best_ms);
  if (ext_par.checksum != ext_serial.checksum) {
    std::fprintf(stderr, "extend-sweep checksum mismatch\n");
    return 1;
  }
  std::puts("checksums agree across job counts");
  return 0;
}
