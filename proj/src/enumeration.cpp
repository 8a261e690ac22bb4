#include "cograph/enumeration.hpp"

#include <cmath>
#include <stdexcept>

#include "cograph/errors.hpp"

namespace cograph {

namespace {

// Row n of Pascal's triangle, updated in place to row n + 1.
void next_binomial_row(std::vector<mpz_class>& row) {
  row.push_back(1);
  for (std::size_t k = row.size() - 2; k > 0; --k) row[k] += row[k - 1];
}

mpz_class factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

TruncatedSeries egf_from_counts(const std::vector<mpz_class>& counts) {
  std::vector<mpq_class> c(counts.size());
  mpz_class f = 1;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (n > 0) f *= static_cast<unsigned long>(n);
    c[n] = mpq_class(counts[n], f);
    c[n].canonicalize();
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ogf_from_counts(const std::vector<mpz_class>& counts) {
  std::vector<mpq_class> c(counts.begin(), counts.end());
  return TruncatedSeries(std::move(c));
}

void require_cotree_fits(const Cotree& t0, std::size_t N) {
  if (N < t0.size()) throw InvalidArgument("series order must be at least the size of t0");
  if (!t0.is_labeled()) throw InvalidArgument("t0 must be a labeled cotree");
}

}  // namespace

std::vector<mpz_class> labeled_tree_counts(std::size_t N) {
  std::vector<mpz_class> l(N + 1), e(N + 1);
  e[0] = 1;
  if (N >= 1) l[1] = e[1] = 1;
  std::vector<mpz_class> row{1};  // C(n-1, .)
  for (std::size_t n = 2; n <= N; ++n) {
    next_binomial_row(row);
    mpz_class acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += row[k - 1] * l[k] * e[n - k];
    l[n] = acc;
    e[n] = 2 * acc;
  }
  return l;
}

std::vector<mpz_class> labeled_cograph_counts(std::size_t N) {
  auto m = labeled_tree_counts(N);
  for (std::size_t n = 2; n <= N; ++n) m[n] *= 2;
  return m;
}

TruncatedSeries series_L(std::size_t N) { return egf_from_counts(labeled_tree_counts(N)); }

TruncatedSeries series_M(std::size_t N) {
  const TruncatedSeries L = series_L(N);
  const TruncatedSeries via_exp = L.exp() - TruncatedSeries::constant(1, N);
  const TruncatedSeries via_linear = L * mpq_class(2) - TruncatedSeries::z(N);
  if (!(via_exp == via_linear)) throw std::logic_error("series_M: e^L - 1 and 2L - z disagree");
  return via_linear;
}

MarkedLabeledSeries series_marked_labeled(std::size_t N) {
  const TruncatedSeries L1 = series_L(N + 1);
  const TruncatedSeries L = L1.truncated(N);
  const TruncatedSeries one = TruncatedSeries::constant(1, N);
  const TruncatedSeries E = L.exp();
  MarkedLabeledSeries s;
  s.Lprime = L1.derivative();
  s.Lbullet = s.Lprime.times_z().truncated(N);
  s.Leven = (E * (one * mpq_class(2) - E)).inverse();
  s.Lodd = (E - one) * s.Leven;
  return s;
}

TruncatedSeries star_fixed_point(const TruncatedSeries& B) {
  if (B[0] != 0) throw InvalidArgument("star_fixed_point: B(0) must be 0");
  const std::size_t N = B.order();
  std::vector<mpq_class> s(N + 1);
  s[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (B[k] != 0) s[n] += B[k] * s[n - k];
  return TruncatedSeries(std::move(s));
}

std::pair<TruncatedSeries, TruncatedSeries> even_odd_fixed_point(const TruncatedSeries& B) {
  if (B[0] != 0) throw InvalidArgument("even_odd_fixed_point: B(0) must be 0");
  const std::size_t N = B.order();
  std::vector<mpq_class> even(N + 1), odd(N + 1);
  even[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      if (B[k] == 0) continue;
      even[n] += B[k] * odd[n - k];
      odd[n] += B[k] * even[n - k];
    }
  return {TruncatedSeries(std::move(even)), TruncatedSeries(std::move(odd))};
}

TruncatedSeries series_Mt0(const Cotree& t0, std::size_t N) {
  require_cotree_fits(t0, N);
  if (t0.size() == 1) return series_M(N + 1).derivative().times_z().truncated(N);
  const EdgeProfile p = edge_profile(t0);
  const MarkedLabeledSeries m = series_marked_labeled(N);
  const TruncatedSeries E = series_L(N).exp();
  return m.Lprime * E.pow(static_cast<unsigned>(p.internal_nodes)) * m.Lbullet.pow(static_cast<unsigned>(p.leaves)) *
         m.Lodd.pow(static_cast<unsigned>(p.equal_edges)) * m.Leven.pow(static_cast<unsigned>(p.unequal_edges));
}

std::vector<mpz_class> unlabeled_tree_counts(std::size_t N) {
  std::vector<mpz_class> u(N + 1), a(N + 1), c(N + 1);
  a[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    if (n == 1) {
      u[1] = 1;
    } else {
      // c[n] holds the proper-divisor part of sum_{d | n} d u_d so far.
      mpz_class rest = c[n];
      for (std::size_t k = 1; k < n; ++k) rest += c[k] * a[n - k];
      mpz_divexact_ui(u[n].get_mpz_t(), rest.get_mpz_t(), n);
    }
    a[n] = n == 1 ? mpz_class(1) : mpz_class(2 * u[n]);
    const mpz_class du = u[n] * static_cast<unsigned long>(n);
    for (std::size_t m = n; m <= N; m += n) c[m] += du;
  }
  return u;
}

std::vector<mpz_class> unlabeled_cograph_counts(std::size_t N) {
  auto v = unlabeled_tree_counts(N);
  for (std::size_t n = 2; n <= N; ++n) v[n] *= 2;
  return v;
}

// Everything is carried as n! [z^n], which is an integer for U, D and e^U.
UnlabeledSeries series_unlabeled(std::size_t N) {
  std::vector<mpz_class> u(N + 1);     // [z^n] U, an integer
  std::vector<mpz_class> us(N + 1);    // n! u_n
  std::vector<mpz_class> ps(N + 1);    // n! [z^n] sum_{r>=2} U(z^r)/r
  std::vector<mpz_class> eps(N + 1);   // n! [z^n] e^P, so D = eps - 1
  std::vector<mpz_class> eus(N + 1);   // n! [z^n] e^U
  std::vector<mpz_class> fact(N + 1);
  eps[0] = eus[0] = fact[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) fact[n] = fact[n - 1] * static_cast<unsigned long>(n);

  std::vector<mpz_class> prev{1};  // C(n-1, .)
  std::vector<mpz_class> row{1, 1};  // C(n, .)
  for (std::size_t n = 1; n <= N; ++n) {
    if (n >= 2) {
      next_binomial_row(prev);
      next_binomial_row(row);
    }
    for (std::size_t r = 2; r <= n; ++r) {
      if (n % r != 0) continue;
      mpz_class t = fact[n] * u[n / r];
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), r);
      ps[n] += t;
    }
    for (std::size_t k = 1; k <= n; ++k)
      if (ps[k] != 0) eps[n] += prev[k - 1] * ps[k] * eps[n - k];

    mpz_class R = 0;  // n! [z^n] exp_{>=2}(U)
    for (std::size_t k = 1; k < n; ++k) R += prev[k - 1] * us[k] * eus[n - k];
    if (n == 1) {
      us[1] = 1;
    } else {
      us[n] = R;
      for (std::size_t k = 2; k <= n; ++k) us[n] += row[k] * eps[k] * eus[n - k];
    }
    eus[n] = us[n] + R;
    mpz_divexact(u[n].get_mpz_t(), us[n].get_mpz_t(), fact[n].get_mpz_t());
  }

  if (u != unlabeled_tree_counts(N)) throw std::logic_error("series_unlabeled: disagrees with the Euler transform");
  eps[0] = 0;
  UnlabeledSeries s{ogf_from_counts(u), egf_from_counts(eps), egf_from_counts(eus)};
  return s;
}

TruncatedSeries series_U(std::size_t N) { return series_unlabeled(N).U; }

TruncatedSeries series_V(std::size_t N) { return series_U(N) * mpq_class(2) - TruncatedSeries::z(N); }

TruncatedSeries series_D(std::size_t N) { return series_unlabeled(N).D; }

MarkedUnlabeledSeries series_marked_unlabeled(std::size_t N) {
  const UnlabeledSeries S = series_unlabeled(N + 1);
  const TruncatedSeries one = TruncatedSeries::constant(1, N);
  const TruncatedSeries EU = S.expU.truncated(N);
  const TruncatedSeries B = (EU - one) + S.D.truncated(N) * EU;
  MarkedUnlabeledSeries m;
  m.Uprime = S.U.derivative();
  m.Ubullet = m.Uprime.times_z().truncated(N);
  m.Ustar = star_fixed_point(B);
  std::tie(m.Ueven, m.Uodd) = even_odd_fixed_point(B);
  return m;
}

TruncatedSeries series_Vt0(const Cotree& t0, std::size_t N) {
  require_cotree_fits(t0, N);
  if (t0.size() == 1) return series_V(N + 1).derivative().times_z().truncated(N);
  const EdgeProfile p = edge_profile(t0);
  const MarkedUnlabeledSeries m = series_marked_unlabeled(N);
  const TruncatedSeries green =
      series_U(N) * mpq_class(2) + TruncatedSeries::constant(1, N) - TruncatedSeries::z(N);
  return m.Ustar * green.pow(static_cast<unsigned>(p.internal_nodes)) * m.Ubullet.pow(static_cast<unsigned>(p.leaves)) *
         m.Uodd.pow(static_cast<unsigned>(p.equal_edges)) * m.Ueven.pow(static_cast<unsigned>(p.unequal_edges));
}

long double rho_labeled() { return 2.0L * std::log(2.0L) - 1.0L; }

long double rho_unlabeled(std::size_t N, long double tol) {
  if (!(tol > 0)) throw InvalidArgument("rho_unlabeled: tol must be positive");
  const auto u = unlabeled_tree_counts(N);
  std::vector<long double> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = to_long_double(u[n]);
  auto f = [&](long double z) {
    long double acc = 0;
    for (std::size_t n = N + 1; n-- > 0;) acc = acc * z + c[n];
    return 2 * acc - z - 1;
  };
  long double lo = 0, hi = 0.35L;
  if (!(f(hi) > 0)) throw InsufficientOrder("rho_unlabeled: 2U(z) - z - 1 has no sign change on (0, 0.35) at this order");
  while (hi - lo > tol) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

long double rho_unlabeled_precise() {
  static const long double value = [] {
    const TruncatedSeries D = series_D(160);
    auto g = [&](long double z) { return std::exp((1 + z) / 2) * (1 + D.evaluate(z)) - 2; };
    long double lo = 0.2L, hi = 0.35L;
    for (int i = 0; i < 200 && hi - lo > 0; ++i) {
      const long double mid = (lo + hi) / 2;
      if (mid <= lo || mid >= hi) break;
      (g(mid) > 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
  }();
  return value;
}

namespace {

LimitLaw make_law(long double rho, const std::vector<mpz_class>& counts, bool exponential) {
  LimitLaw law;
  law.rho = rho;
  const std::size_t jmax = counts.size() - 1;
  law.probabilities.resize(jmax);
  long double sum = 0;
  for (std::size_t j = 1; j <= jmax; ++j) {
    mpq_class q(counts[j]);
    if (exponential) q /= factorial(j);
    law.probabilities[j - 1] = to_long_double(q) * std::pow(rho, static_cast<long double>(j));
    sum += law.probabilities[j - 1];
  }
  law.tail = 1 - sum;
  return law;
}

}  // namespace

LimitLaw pi_distribution(std::size_t jmax) {
  if (jmax == 0) throw InvalidArgument("pi_distribution: jmax must be positive");
  return make_law(rho_labeled(), labeled_cograph_counts(jmax), true);
}

LimitLaw pi_u_distribution(std::size_t jmax) {
  if (jmax == 0) throw InvalidArgument("pi_u_distribution: jmax must be positive");
  return make_law(rho_unlabeled_precise(), unlabeled_cograph_counts(jmax), false);
}

// P(kappa = j) = P(largest root child has n - j leaves). Trees whose root
// children all have at most s leaves are counted with the child class
// restricted to sizes <= s; successive differences give the law.
std::vector<long double> kappa_law_labeled(std::size_t n) {
  if (n == 0) throw InvalidArgument("kappa_law_labeled: n must be positive");
  if (n == 1) return {1.0L};
  const auto l = labeled_tree_counts(n);
  std::vector<mpz_class> at_most(n);  // index s = 1..n-1
  for (std::size_t s = 1; s < n; ++s) {
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    std::vector<mpz_class> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
      if (m >= 2) next_binomial_row(row);
      for (std::size_t k = 1; k <= std::min(m, s); ++k) e[m] += row[k - 1] * l[k] * e[m - k];
    }
    at_most[s] = e[n];
  }
  std::vector<long double> law(n, 0.0L);
  for (std::size_t s = 1; s < n; ++s) {
    const mpq_class p(at_most[s] - (s > 1 ? at_most[s - 1] : mpz_class(0)), l[n]);
    law[n - s] = to_long_double(p);
  }
  return law;
}

std::vector<long double> kappa_law_unlabeled(std::size_t n) {
  if (n == 0) throw InvalidArgument("kappa_law_unlabeled: n must be positive");
  if (n == 1) return {1.0L};
  const auto u = unlabeled_tree_counts(n);
  std::vector<mpz_class> at_most(n);
  for (std::size_t s = 1; s < n; ++s) {
    std::vector<mpz_class> a(n + 1), c(n + 1);
    a[0] = 1;
    for (std::size_t d = 1; d <= s; ++d)
      for (std::size_t m = d; m <= n; m += d) c[m] += u[d] * static_cast<unsigned long>(d);
    for (std::size_t m = 1; m <= n; ++m) {
      mpz_class acc = 0;
      for (std::size_t k = 1; k <= m; ++k) acc += c[k] * a[m - k];
      mpz_divexact_ui(a[m].get_mpz_t(), acc.get_mpz_t(), m);
    }
    at_most[s] = a[n];
  }
  std::vector<long double> law(n, 0.0L);
  for (std::size_t s = 1; s < n; ++s) {
    const mpq_class p(at_most[s] - (s > 1 ? at_most[s - 1] : mpz_class(0)), u[n]);
    law[n - s] = to_long_double(p);
  }
  return law;
}

}  // namespace cograph
