#include "zagreb/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "zagreb/formats.hpp"

namespace zagreb {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Refinement + individualization search for a canonical labeling. The
// certificate is the upper-triangle bit string of the relabeled adjacency
// matrix in graph6 column order; the maximal certificate over all search
// leaves defines the canonical order. Individualization branches are pruned
// when two cell members are twins (swapping them is an automorphism), which
// keeps cliques and other twin-heavy graphs linear.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.vertex_count()) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v);
    cert_words_ = (static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64;
  }

  std::vector<int> run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.order[i] = i;
    p.cell_start.fill(false);
    p.cell_start[0] = true;
    refine(p);
    search(p);
    return {best_order_.begin(), best_order_.begin() + n_};
  }

 private:
  struct Partition {
    std::array<int, kMaxVertices> order;
    std::array<bool, kMaxVertices> cell_start;
  };

  bool discrete(const Partition& p) const {
    for (int i = 0; i < n_; ++i)
      if (!p.cell_start[i]) return false;
    return true;
  }

  // Splits every cell by the count of neighbors in each current cell,
  // iterating to a fixpoint. Key order within a split is descending, which is
  // arbitrary but fixed and isomorphism-invariant.
  void refine(Partition& p) const {
    std::array<std::uint8_t, kMaxVertices> cell_of{};
    std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> key;
    for (bool changed = true; changed;) {
      changed = false;
      int ncells = 0;
      for (int i = 0; i < n_; ++i) {
        if (p.cell_start[i]) ++ncells;
        cell_of[p.order[i]] = static_cast<std::uint8_t>(ncells - 1);
      }
      for (int v = 0; v < n_; ++v) {
        auto& k = key[v];
        std::fill(k.begin(), k.begin() + ncells, 0);
        std::uint64_t nb = rows_[v];
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          ++k[cell_of[u]];
        }
      }
      for (int a = 0; a < n_;) {
        int b = a + 1;
        while (b < n_ && !p.cell_start[b]) ++b;
        if (b - a > 1) {
          auto cmp = [&](int x, int y) {
            return std::lexicographical_compare(
                key[y].begin(), key[y].begin() + ncells, key[x].begin(),
                key[x].begin() + ncells);
          };
          std::sort(p.order.begin() + a, p.order.begin() + b, cmp);
          for (int i = a + 1; i < b; ++i)
            if (cmp(p.order[i - 1], p.order[i])) {
              p.cell_start[i] = true;
              changed = true;
            }
        }
        a = b;
      }
    }
  }

  void search(const Partition& p) {
    if (discrete(p)) {
      consider_leaf(p);
      return;
    }
    int a = 0;
    while (p.cell_start[a + 1]) ++a;  // first non-singleton cell starts here
    int b = a + 1;
    while (b < n_ && !p.cell_start[b]) ++b;

    std::uint64_t branched = 0;
    for (int i = a; i < b; ++i) {
      int v = p.order[i];
      bool twin_seen = false;
      std::uint64_t m = branched;
      while (m && !twin_seen) {
        int u = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t mask = ~(bit(u) | bit(v));
        twin_seen = (rows_[u] & mask) == (rows_[v] & mask);
      }
      if (twin_seen) continue;
      branched |= bit(v);

      Partition child = p;
      std::rotate(child.order.begin() + a, child.order.begin() + i,
                  child.order.begin() + i + 1);
      child.cell_start[a + 1] = true;
      refine(child);
      search(child);
    }
  }

  void consider_leaf(const Partition& p) {
    std::array<std::uint64_t, kMaxVertices * (kMaxVertices - 1) / 2 / 64 + 1>
        cert{};
    size_t idx = 0;
    for (int v = 1; v < n_; ++v) {
      std::uint64_t row = rows_[p.order[v]];
      for (int u = 0; u < v; ++u, ++idx)
        if (row & bit(p.order[u])) cert[idx / 64] |= bit(63 - idx % 64);
    }
    bool better = best_order_[0] < 0;
    if (!better)
      for (size_t w = 0; w < cert_words_; ++w) {
        if (cert[w] == best_cert_[w]) continue;
        better = cert[w] > best_cert_[w];
        break;
      }
    if (better) {
      best_cert_ = cert;
      best_order_ = p.order;
    }
  }

  int n_;
  size_t cert_words_;
  std::array<std::uint64_t, kMaxVertices> rows_{};
  std::array<std::uint64_t, kMaxVertices * (kMaxVertices - 1) / 2 / 64 + 1>
      best_cert_{};
  std::array<int, kMaxVertices> best_order_{-1};
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order = canonical_order(g);
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(order[i], order[j])) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{to_graph6(canonical_graph(g))};
}

}  // namespace zagreb
