#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cograph {

/// Power series known exactly up to z^N, coefficients in Q.
///
/// Binary operations keep the smaller of the two orders, derivative() loses
/// one order and times_z() gains one, so order() is always the index of the
/// last coefficient that is actually correct.
class TruncatedSeries {
 public:
  /// Zero series of order N.
  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<mpq_class> coefficients);

  static TruncatedSeries constant(const mpq_class& value, std::size_t order);
  /// The series z.
  static TruncatedSeries z(std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const mpq_class& operator[](std::size_t n) const { return c_.at(n); }
  void set(std::size_t n, mpq_class value);
  std::span<const mpq_class> coefficients() const noexcept { return c_; }

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const mpq_class& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const mpq_class& s) { return a *= s; }
  friend TruncatedSeries operator*(const mpq_class& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  /// Same order, compares every coefficient.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  TruncatedSeries derivative() const;
  TruncatedSeries times_z() const;
  /// F(z^r).
  TruncatedSeries substitute_power(std::size_t r) const;
  /// e^F; requires F(0) = 0. Uses n E_n = sum k F_k E_{n-k}.
  TruncatedSeries exp() const;
  /// 1/F; requires F(0) != 0.
  TruncatedSeries inverse() const;
  /// F^e for e >= 0.
  TruncatedSeries pow(unsigned e) const;

  /// n! [z^n] F; throws InvalidArgument when that is not an integer.
  mpz_class egf_count(std::size_t n) const;

  /// Truncated sum of c_n x^n in long double (coefficients converted with
  /// their binary exponents, so huge numerators do not overflow).
  long double evaluate(long double x) const;

 private:
  std::vector<mpq_class> c_;
};

/// Exponent-safe conversions used wherever exact counts meet floating point.
long double to_long_double(const mpz_class& v);
long double to_long_double(const mpq_class& v);

}  // namespace cograph
