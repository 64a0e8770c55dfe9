#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/connectivity.hpp"
#include "zagreb/graph.hpp"

namespace zagreb {

/// Default cost guard for full-graph enumeration. n = 9 (261080 connected
/// classes) works but is slow enough to hide behind an explicit override.
inline constexpr int kDefaultEnumGuard = 8;
inline constexpr int kEnumCap = 9;
inline constexpr int kTreeCap = 10;

struct EnumOptions {
  int guard = kDefaultEnumGuard;  // raisable up to kEnumCap
  int jobs = 1;                   // workers for level construction
};

using FormList = std::shared_ptr<const std::vector<std::string>>;

/// Isomorphism-free graph stream: exactly one representative per class,
/// ordered by canonical graph6 bytes, independent of worker count.
class GraphStream {
 public:
  GraphStream(FormList forms, std::function<bool(const Graph&)> filter);

  std::optional<Graph> next();

  /// Convenience: drains the stream.
  std::vector<Graph> collect();

 private:
  FormList forms_;
  std::function<bool(const Graph&)> filter_;
  size_t pos_ = 0;
};

GraphStream all_graphs(int n, const EnumOptions& opts = {});
GraphStream connected_graphs(int n, const EnumOptions& opts = {});
GraphStream trees(int n);
GraphStream class_members(int n, int k, GraphClass cls,
                          const EnumOptions& opts = {});

/// Sorted canonical forms backing the streams (process-wide cache; builds
/// lower levels on demand). Bulk consumers index these directly.
FormList all_graph_forms(int n, const EnumOptions& opts = {});
FormList connected_graph_forms(int n, const EnumOptions& opts = {});
FormList tree_forms(int n);

}  // namespace zagreb
