#include "zagreb/indices.hpp"

#include <cmath>
#include <stdexcept>

namespace zagreb {

ExactProduct pi1(const Graph& g) {
  ExactProduct p;
  for (int v = 0; v < g.vertex_count(); ++v)
    p.multiply_pow(static_cast<unsigned long>(g.degree(v)), 2);
  return p;
}

ExactProduct pi2(const Graph& g, Pi2Strategy strategy) {
  ExactProduct p;
  if (strategy == Pi2Strategy::vertex_form) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto d = static_cast<unsigned long>(g.degree(v));
      p.multiply_pow(d, d);
    }
  } else {
    for (auto [u, v] : g.edges()) {
      p.multiply_pow(static_cast<unsigned long>(g.degree(u)), 1);
      p.multiply_pow(static_cast<unsigned long>(g.degree(v)), 1);
    }
  }
  return p;
}

std::pair<std::int64_t, std::int64_t> m1_m2(const Graph& g) {
  std::int64_t m1 = 0, m2 = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::int64_t d = g.degree(v);
    m1 += d * d;
  }
  for (auto [u, v] : g.edges())
    m2 += static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
  return {m1, m2};
}

double f1_log(double x, double m) {
  if (!(x >= 1.0)) throw std::domain_error("f1_log requires x >= 1");
  if (!(m >= 0.0)) throw std::domain_error("f1_log requires m >= 0");
  double tail = (x == 1.0) ? 0.0 : (x - 1.0) * std::log(x - 1.0 + m);
  return x * std::log(x + m) - tail;
}

double f2_log(double x, double m) {
  if (!(x > 0.0)) throw std::domain_error("f2_log requires x > 0");
  if (!(m >= 0.0)) throw std::domain_error("f2_log requires m >= 0");
  return x * std::log(x) - (x + m) * std::log(x + m);
}

}  // namespace zagreb
