#include "zagreb/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zagreb/canonical.hpp"
#include "zagreb/formats.hpp"

namespace zagreb {

namespace {

std::mutex cache_mutex;
std::map<int, FormList> all_cache;
std::map<int, FormList> connected_cache;
std::map<int, FormList> tree_cache;

FormList cache_lookup(std::map<int, FormList>& cache, int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  return it == cache.end() ? nullptr : it->second;
}

FormList cache_store(std::map<int, FormList>& cache, int n,
                     std::vector<std::string> forms) {
  auto ptr = std::make_shared<const std::vector<std::string>>(std::move(forms));
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, ptr).first->second;
}

Graph extend(const Graph& parent, const EdgeList& parent_edges,
             std::uint64_t spoke_mask) {
  const int n = parent.vertex_count() + 1;
  EdgeList edges = parent_edges;
  std::uint64_t m = spoke_mask;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    edges.emplace_back(v, n - 1);
  }
  return Graph::from_edges(n, edges);
}

// Every graph on n vertices arises by attaching a new vertex to some subset
// of an (n-1)-vertex graph, so extending one representative per smaller class
// and deduplicating canonically is complete.
std::vector<std::string> build_all_level(int n, int jobs) {
  if (n == 1) return {to_graph6(Graph::edgeless(1))};
  FormList parents = all_graph_forms(n - 1, {.guard = kEnumCap, .jobs = jobs});
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);

  std::unordered_set<std::string> seen;
  if (jobs <= 1) {
    for (const auto& form : *parents) {
      Graph parent = from_graph6(form);
      EdgeList parent_edges = parent.edges();
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        seen.insert(canonical_form(extend(parent, parent_edges, mask)).bytes);
    }
  } else {
    std::vector<std::unordered_set<std::string>> local(
        static_cast<size_t>(jobs));
    const long long count = static_cast<long long>(parents->size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
    for (long long i = 0; i < count; ++i) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      Graph parent = from_graph6((*parents)[static_cast<size_t>(i)]);
      EdgeList parent_edges = parent.edges();
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        local[static_cast<size_t>(tid)].insert(
            canonical_form(extend(parent, parent_edges, mask)).bytes);
    }
    for (auto& part : local) seen.merge(part);
  }

  std::vector<std::string> forms(seen.begin(), seen.end());
  std::sort(forms.begin(), forms.end());
  return forms;
}

// Trees: every tree with n >= 2 vertices loses a leaf to a tree on n-1, so
// leaf attachment covers everything.
std::vector<std::string> build_tree_level(int n) {
  if (n == 1) return {to_graph6(Graph::edgeless(1))};
  FormList parents = tree_forms(n - 1);
  std::unordered_set<std::string> seen;
  for (const auto& form : *parents) {
    Graph parent = from_graph6(form);
    EdgeList parent_edges = parent.edges();
    for (int v = 0; v < n - 1; ++v)
      seen.insert(
          canonical_form(extend(parent, parent_edges, std::uint64_t{1} << v))
              .bytes);
  }
  std::vector<std::string> forms(seen.begin(), seen.end());
  std::sort(forms.begin(), forms.end());
  return forms;
}

void check_enum_range(int n, const EnumOptions& opts) {
  if (n < 1 || n > kEnumCap)
    throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                std::to_string(kEnumCap) + ", got n=" +
                                std::to_string(n));
  int guard = std::min(opts.guard, kEnumCap);
  if (n > guard)
    throw std::invalid_argument(
        "enumeration cost guard allows n <= " + std::to_string(guard) +
        "; raise the guard (ZAGREB_MAX_N in the CLI) for n=" +
        std::to_string(n));
}

}  // namespace

FormList all_graph_forms(int n, const EnumOptions& opts) {
  check_enum_range(n, opts);
  if (auto hit = cache_lookup(all_cache, n)) return hit;
  return cache_store(all_cache, n, build_all_level(n, opts.jobs));
}

FormList connected_graph_forms(int n, const EnumOptions& opts) {
  check_enum_range(n, opts);
  if (auto hit = cache_lookup(connected_cache, n)) return hit;
  FormList all = all_graph_forms(n, opts);
  std::vector<std::string> forms;
  for (const auto& form : *all)
    if (from_graph6(form).connected()) forms.push_back(form);
  return cache_store(connected_cache, n, std::move(forms));
}

FormList tree_forms(int n) {
  if (n < 1 || n > kTreeCap)
    throw std::invalid_argument("tree enumeration supports 1 <= n <= " +
                                std::to_string(kTreeCap) + ", got n=" +
                                std::to_string(n));
  if (auto hit = cache_lookup(tree_cache, n)) return hit;
  return cache_store(tree_cache, n, build_tree_level(n));
}

GraphStream::GraphStream(FormList forms,
                         std::function<bool(const Graph&)> filter)
    : forms_(std::move(forms)), filter_(std::move(filter)) {}

std::optional<Graph> GraphStream::next() {
  while (pos_ < forms_->size()) {
    Graph g = from_graph6((*forms_)[pos_++]);
    if (!filter_ || filter_(g)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> GraphStream::collect() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

GraphStream all_graphs(int n, const EnumOptions& opts) {
  return GraphStream(all_graph_forms(n, opts), nullptr);
}

GraphStream connected_graphs(int n, const EnumOptions& opts) {
  return GraphStream(connected_graph_forms(n, opts), nullptr);
}

GraphStream trees(int n) { return GraphStream(tree_forms(n), nullptr); }

GraphStream class_members(int n, int k, GraphClass cls,
                          const EnumOptions& opts) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("class parameter k must satisfy 1 <= k <= n-1");
  return GraphStream(connected_graph_forms(n, opts),
                     [k, cls](const Graph& g) { return in_class(g, k, cls); });
}

}  // namespace zagreb
