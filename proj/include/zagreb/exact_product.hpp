#pragma once

#include <gmpxx.h>

#include <string>

namespace zagreb {

/// Arbitrary-precision nonnegative integer product paired with a log-domain
/// approximation. The exact value decides every comparison; log_value exists
/// for pruning and display only.
class ExactProduct {
 public:
  ExactProduct() : value_(1), log_value_(0.0) {}

  static ExactProduct one() { return ExactProduct(); }
  static ExactProduct zero();
  static ExactProduct from_integer(unsigned long v);

  /// Multiplies in base^exp. Uses the convention x^0 = 1 for every x,
  /// including 0^0 = 1.
  ExactProduct& multiply_pow(unsigned long base, unsigned long exp);

  const mpz_class& value() const { return value_; }
  /// ln(value); negative infinity when value == 0.
  double log_value() const { return log_value_; }

  std::string decimal() const { return value_.get_str(); }

  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const ExactProduct& a, const ExactProduct& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactProduct& a, const ExactProduct& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExactProduct& a, const ExactProduct& b) {
    return b < a;
  }
  friend bool operator!=(const ExactProduct& a, const ExactProduct& b) {
    return !(a == b);
  }
  friend bool operator<=(const ExactProduct& a, const ExactProduct& b) {
    return !(b < a);
  }
  friend bool operator>=(const ExactProduct& a, const ExactProduct& b) {
    return !(a < b);
  }

 private:
  mpz_class value_;
  double log_value_;
};

}  // namespace zagreb
