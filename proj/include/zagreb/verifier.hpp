#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zagreb/connectivity.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/exact_product.hpp"

namespace zagreb {

enum class IndexKind { pi1, pi2 };
enum class Direction { maximum, minimum };

/// The published sharp-maximum formula comes in two variants: the bound as
/// stated in the theorem text, and the one its proof derives. They differ
/// only in the pi1 base, (n-k) versus (n-1); the verifier adjudicates which
/// matches brute force instead of silently patching either.
enum class FormulaVariant { statement, proof };

struct RunOptions {
  int jobs = 1;
  int enum_guard = kDefaultEnumGuard;
  /// Measured elapsed_ms in report entries. Off by default so that repeated
  /// runs (and runs at different job counts) serialize byte-identically.
  bool timings = false;
};

/// Result of a brute-force search over one connectivity class.
struct ExtremalRecord {
  GraphClass cls{};
  int n = 0;
  int k = 0;
  IndexKind index{};
  Direction direction{};
  ExactProduct optimum;
  std::vector<std::string> extremal_g6;  // canonical forms, sorted
  long class_size = 0;
};

/// Exact optimum of the chosen index over the class stream, with every
/// optimizer up to isomorphism. Comparisons use exact arithmetic only.
ExtremalRecord find_extrema(int n, int k, GraphClass cls, IndexKind index,
                            Direction direction, const RunOptions& opts = {});

/// Closed-form candidate for the class maximum attained by K_n^k.
ExactProduct closed_form(int n, int k, IndexKind index, FormulaVariant variant);

struct ClaimEntry {
  std::string claim_id;
  int n = 0;                // 0 when the claim has no n parameter
  int k = -1;               // -1 when absent
  std::string cls;          // "vertex" | "edge" | ""
  std::string index;        // "pi1" | "pi2" | ""
  std::string status;       // confirmed | refuted | confirmed-with-correction
  std::string closed_form;  // decimal; empty when not applicable
  std::string brute_force;
  std::vector<std::string> extremal_graphs;  // graph6
  std::string witness;      // refuting counterexample, graph6
  std::string observation;  // empirical side notes
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<ClaimEntry> entries;

  bool any_refuted() const;
  /// Deterministic pretty-printed JSON array, one object per entry.
  std::string to_json() const;
};

/// Known claim identifiers in execution order.
const std::vector<std::string>& claim_catalog();

/// Runs the requested claims (deduplicated, catalog order) over parameter
/// ranges derived from n_max. Refutations are report content, not errors.
VerificationReport verify_suite(int n_max, const std::vector<std::string>& claims,
                                const RunOptions& opts = {});

}  // namespace zagreb
