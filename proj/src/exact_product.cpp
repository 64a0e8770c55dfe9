#include "zagreb/exact_product.hpp"

#include <cmath>
#include <limits>

namespace zagreb {

ExactProduct ExactProduct::zero() {
  ExactProduct p;
  p.value_ = 0;
  p.log_value_ = -std::numeric_limits<double>::infinity();
  return p;
}

ExactProduct ExactProduct::from_integer(unsigned long v) {
  ExactProduct p;
  p.value_ = static_cast<unsigned long>(v);
  p.log_value_ = v == 0 ? -std::numeric_limits<double>::infinity()
                        : std::log(static_cast<double>(v));
  return p;
}

ExactProduct& ExactProduct::multiply_pow(unsigned long base,
                                         unsigned long exp) {
  if (exp == 0) return *this;  // x^0 = 1, including 0^0
  if (base == 0) {
    value_ = 0;
    log_value_ = -std::numeric_limits<double>::infinity();
    return *this;
  }
  mpz_class term;
  mpz_ui_pow_ui(term.get_mpz_t(), base, exp);
  value_ *= term;
  log_value_ += static_cast<double>(exp) * std::log(static_cast<double>(base));
  return *this;
}

}  // namespace zagreb
