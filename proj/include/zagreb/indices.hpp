#pragma once

#include <cstdint>
#include <utility>

#include "zagreb/exact_product.hpp"
#include "zagreb/graph.hpp"

namespace zagreb {

/// First multiplicative Zagreb index: product over vertices of d(v)^2.
/// Zero whenever the graph has an isolated vertex.
ExactProduct pi1(const Graph& g);

enum class Pi2Strategy { edge_form, vertex_form };

/// Second multiplicative Zagreb index. edge_form multiplies d(u)d(v) over
/// edges; vertex_form multiplies d(v)^d(v) over vertices with 0^0 = 1. Both
/// return the same exact value.
ExactProduct pi2(const Graph& g, Pi2Strategy strategy = Pi2Strategy::vertex_form);

/// Additive Zagreb indices (M1, M2) as exact integers.
std::pair<std::int64_t, std::int64_t> m1_m2(const Graph& g);

/// ln F1(x) for F1(x) = (x+m)^x / (x-1+m)^(x-1), with the x = 1 boundary
/// using (x-1+m)^0 = 1. Requires x >= 1 and m >= 0.
double f1_log(double x, double m);

/// ln F2(x) for F2(x) = x^x / (x+m)^(x+m). Requires x > 0 and m >= 0.
double f2_log(double x, double m);

}  // namespace zagreb
