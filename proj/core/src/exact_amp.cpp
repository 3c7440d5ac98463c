#include "onecall/exact_amp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace onecall {
namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ExactAmp: integer overflow in add");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ExactAmp: integer overflow in multiply");
  return r;
}

std::int64_t checked_neg(std::int64_t x) { return checked_mul(x, -1); }

std::int64_t scale_pow2(std::int64_t x, int shift) {
  if (shift >= 63) {
    if (x == 0) return 0;
    throw std::overflow_error("ExactAmp: denominator alignment overflow");
  }
  return checked_mul(x, std::int64_t{1} << shift);
}

}  // namespace

ExactAmp::ExactAmp(std::int64_t a, std::int64_t b, int k) : a_(a), b_(b), k_(k) {
  if (k < 0) throw std::invalid_argument("ExactAmp: exponent k must be >= 0");
  canonicalize();
}

void ExactAmp::canonicalize() {
  if (a_ == 0 && b_ == 0) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && a_ % 2 == 0 && b_ % 2 == 0) {
    a_ /= 2;
    b_ /= 2;
    --k_;
  }
}

ExactAmp ExactAmp::operator-() const { return ExactAmp(checked_neg(a_), checked_neg(b_), k_); }

ExactAmp operator+(const ExactAmp& x, const ExactAmp& y) {
  int k = std::max(x.k_, y.k_);
  std::int64_t a = checked_add(scale_pow2(x.a_, k - x.k_), scale_pow2(y.a_, k - y.k_));
  std::int64_t b = checked_add(scale_pow2(x.b_, k - x.k_), scale_pow2(y.b_, k - y.k_));
  return ExactAmp(a, b, k);
}

ExactAmp operator-(const ExactAmp& x, const ExactAmp& y) { return x + (-y); }

ExactAmp operator*(const ExactAmp& x, const ExactAmp& y) {
  // (a1 + b1√2)(a2 + b2√2) = a1a2 + 2b1b2 + (a1b2 + a2b1)√2
  std::int64_t a = checked_add(checked_mul(x.a_, y.a_), checked_mul(2, checked_mul(x.b_, y.b_)));
  std::int64_t b = checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_));
  int k = x.k_ + y.k_;
  if (k < x.k_) throw std::overflow_error("ExactAmp: exponent overflow");
  return ExactAmp(a, b, k);
}

ExactAmp ExactAmp::div_sqrt2() const {
  // (a + b√2)/√2 = (2b + a√2)/2
  return ExactAmp(checked_mul(2, b_), a_, k_ + 1);
}

double ExactAmp::to_double() const {
  return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0)) / std::ldexp(1.0, k_);
}

std::string ExactAmp::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(k_) + ")";
}

}  // namespace onecall
