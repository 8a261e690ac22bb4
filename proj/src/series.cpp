#include "cograph/series.hpp"

#include <algorithm>
#include <cmath>

#include "cograph/errors.hpp"

namespace cograph {

namespace {

mpz_class common_denominator(std::span<const mpq_class> c) {
  mpz_class d = 1;
  for (const auto& q : c)
    if (q.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

}  // namespace

long double to_long_double(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long double>(v.get_si());
  // Keep the top 64 bits; mpz_get_d would drop to 53.
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  mpz_class top = abs(v);
  top >>= static_cast<mp_bitcnt_t>(bits - 64);
  const long double r = std::ldexp(static_cast<long double>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(bits - 64));
  return v < 0 ? -r : r;
}

long double to_long_double(const mpq_class& v) {
  if (v == 0) return 0.0L;
  const auto nb = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2));
  const auto db = static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
  // Scale numerator so the integer quotient carries 64+ significant bits.
  const long shift = db - nb + 70;
  mpz_class num = v.get_num();
  if (shift > 0)
    num <<= static_cast<mp_bitcnt_t>(shift);
  else
    num >>= static_cast<mp_bitcnt_t>(-shift);
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
  return std::ldexp(to_long_double(q), static_cast<int>(-shift));
}

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) c_.resize(1);
}

TruncatedSeries TruncatedSeries::constant(const mpq_class& value, std::size_t order) {
  TruncatedSeries s(order);
  s.c_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::z(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

void TruncatedSeries::set(std::size_t n, mpq_class value) {
  value.canonicalize();
  c_.at(n) = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw InvalidArgument("truncated: order exceeds the known coefficients");
  return TruncatedSeries(std::vector<mpq_class>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& scalar) {
  for (auto& q : c_) q *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

// Clearing denominators turns the Cauchy product into an integer convolution,
// which avoids a gcd per term.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const mpz_class da = common_denominator(a.c_);
  const mpz_class db = common_denominator(b.c_);
  std::vector<mpz_class> ia(order + 1), ib(order + 1);
  std::size_t last_a = 0, last_b = 0;
  bool any_a = false, any_b = false;
  std::size_t first_a = order + 1, first_b = order + 1;
  for (std::size_t i = 0; i <= order; ++i) {
    ia[i] = a.c_[i].get_num() * (da / a.c_[i].get_den());
    ib[i] = b.c_[i].get_num() * (db / b.c_[i].get_den());
    if (ia[i] != 0) {
      last_a = i;
      if (!any_a) first_a = i;
      any_a = true;
    }
    if (ib[i] != 0) {
      last_b = i;
      if (!any_b) first_b = i;
      any_b = true;
    }
  }
  TruncatedSeries r(order);
  if (!any_a || !any_b) return r;
  const mpz_class den = da * db;
  mpz_class acc;
  for (std::size_t n = first_a + first_b; n <= order; ++n) {
    acc = 0;
    const std::size_t lo = n > last_b ? n - last_b : 0;
    const std::size_t hi = std::min(n, last_a);
    for (std::size_t k = std::max(lo, first_a); k <= hi; ++k) {
      if (n - k < first_b) break;
      mpz_addmul(acc.get_mpz_t(), ia[k].get_mpz_t(), ib[n - k].get_mpz_t());
    }
    r.c_[n] = mpq_class(acc, den);
    r.c_[n].canonicalize();
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw InvalidArgument("derivative of an order-0 series is unknown");
  TruncatedSeries r(order() - 1);
  for (std::size_t n = 1; n <= order(); ++n) r.c_[n - 1] = c_[n] * static_cast<unsigned long>(n);
  return r;
}

TruncatedSeries TruncatedSeries::times_z() const {
  TruncatedSeries r(order() + 1);
  for (std::size_t n = 0; n <= order(); ++n) r.c_[n + 1] = c_[n];
  return r;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t r) const {
  if (r == 0) throw InvalidArgument("substitute_power: r must be positive");
  TruncatedSeries s(order());
  for (std::size_t m = 0; m * r <= order(); ++m) s.c_[m * r] = c_[m];
  return s;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (c_[0] != 0) throw InvalidArgument("exp: series must have zero constant term");
  const std::size_t order = this->order();
  TruncatedSeries e(order);
  e.c_[0] = 1;
  std::vector<mpq_class> kf(order + 1);
  for (std::size_t k = 1; k <= order; ++k) kf[k] = c_[k] * static_cast<unsigned long>(k);
  mpq_class acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (kf[k] != 0) acc += kf[k] * e.c_[n - k];
    acc /= static_cast<unsigned long>(n);
    e.c_[n] = acc;
  }
  return e;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0] == 0) throw InvalidArgument("inverse: series must have a nonzero constant term");
  const std::size_t order = this->order();
  TruncatedSeries g(order);
  const mpq_class inv0 = 1 / c_[0];
  g.c_[0] = inv0;
  mpq_class acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (c_[k] != 0) acc += c_[k] * g.c_[n - k];
    g.c_[n] = -inv0 * acc;
  }
  return g;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = constant(1, order());
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

mpz_class TruncatedSeries::egf_count(std::size_t n) const {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  const mpq_class v = c_.at(n) * mpq_class(f);
  if (v.get_den() != 1) throw InvalidArgument("egf_count: n! [z^n] is not an integer");
  return v.get_num();
}

long double TruncatedSeries::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t n = c_.size(); n-- > 0;) acc = acc * x + to_long_double(c_[n]);
  return acc;
}

}  // namespace cograph
