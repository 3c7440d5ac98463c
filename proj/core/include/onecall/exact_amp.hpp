#pragma once

#include <cstdint>
#include <string>

namespace onecall {

/// Exact real number (a + b·√2) / 2^k with integer a, b and k ≥ 0.
///
/// Values are kept canonical (k as small as possible, zero is (0,0,0)), so
/// two ExactAmps are equal iff their fields are equal. Arithmetic is checked
/// and throws std::overflow_error instead of wrapping.
class ExactAmp {
 public:
  constexpr ExactAmp() = default;
  ExactAmp(std::int64_t a, std::int64_t b, int k);

  static ExactAmp integer(std::int64_t n) { return ExactAmp(n, 0, 0); }
  static ExactAmp half() { return ExactAmp(1, 0, 1); }
  /// 1/√2 = √2/2.
  static ExactAmp inv_sqrt2() { return ExactAmp(0, 1, 1); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  int k() const noexcept { return k_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  ExactAmp operator-() const;
  friend ExactAmp operator+(const ExactAmp& x, const ExactAmp& y);
  friend ExactAmp operator-(const ExactAmp& x, const ExactAmp& y);
  friend ExactAmp operator*(const ExactAmp& x, const ExactAmp& y);
  /// Multiplication by 1/√2.
  ExactAmp div_sqrt2() const;

  friend bool operator==(const ExactAmp&, const ExactAmp&) = default;

  double to_double() const;
  /// "(a,b,k)".
  std::string to_string() const;

 private:
  void canonicalize();

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  int k_ = 0;
};

}  // namespace onecall
