#include "scq/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "scq/pieces.hpp"

namespace scq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494002;
const double kLogUint64Max = 64.0 * std::numbers::ln2;

// log(sinh(x)) without overflow: for large x, sinh(x) ~ e^x / 2.
double log_sinh(double x) {
  if (x <= 0) throw std::invalid_argument("log_sinh: x must be positive");
  if (x > 33) return x - std::numbers::ln2 + std::log1p(-std::exp(-2 * x));
  return std::log(std::sinh(x));
}

// log(sinh(e^t)): the argument itself may only be known by its log.
double log_sinh_of_exp(double t) {
  if (t > 700) return std::exp(700);  // saturate; far beyond any slack scale
  return log_sinh(std::exp(t));
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// per-inequality log X_i - log B_i for lambda_N X_i <= B_i
std::vector<double> log_x_over_b(const Budget& b) {
  double nu0 = static_cast<double>(b.nu0);
  std::vector<double> t(4);
  t[0] = b.log_delta1 - b.log_delta0;
  double x2 = log_add(std::log(2 * nu0 + 8) + b.log_C0, std::log(95 * nu0 + 494) + b.log_delta1);
  t[1] = x2 - b.log_Delta0;
  t[2] = std::log(nu0 + 5) + b.log_C0 - b.log_C0;
  t[3] = b.log_kappa + b.log_C0 - (std::log(2.0) + b.log_delta1);
  return t;
}

Budget budget_from_logs(long long nu0, long long mu, double log_delta1, double log_L0,
                        double log_rho, double log_delta0, double log_Delta0) {
  if (nu0 < 1 || mu < 1) throw std::invalid_argument("budget: nu0 and mu must be positive");
  Budget b;
  b.nu0 = nu0;
  b.mu = mu;
  b.log_delta1 = log_delta1;
  b.log_delta0 = log_delta0;
  b.log_Delta0 = log_Delta0;
  b.delta1 = std::exp(log_delta1);
  b.delta0 = std::exp(log_delta0);
  b.Delta0 = std::exp(log_Delta0);
  b.L0 = std::exp(log_L0);
  b.rho = std::exp(log_rho);

  b.log_C0 = kLogPi + log_sinh_of_exp(std::log(4.0) + log_L0 + log_delta1);
  b.log_C1 = std::log(10.0) + b.log_C0 + kLogPi + log_sinh_of_exp(log_rho);
  b.log_kappa = log_delta1 - kLogPi - log_sinh_of_exp(std::log(25.0) + log_delta1);

  // proof-side constraint on rho: (5 kappa pi sinh rho)^(-1/3) < delta1
  double log_lhs = -(std::log(5.0) + b.log_kappa + kLogPi + log_sinh_of_exp(log_rho)) / 3.0;
  if (!(log_lhs < log_delta1)) throw std::invalid_argument("budget: rho constraint violated");

  // least N with lambda_N * X_i <= B_i for all i, i.e. log N >= 2 (log C1 +
  // log X_i - log B_i).  At astronomical scale log_C1 dwarfs the t_i, so the
  // slacks are computed from the t_i directly, never by cancellation.
  std::vector<double> t = log_x_over_b(b);
  double tmax = *std::max_element(t.begin(), t.end());
  b.log_N0 = std::max(0.0, 2.0 * (b.log_C1 + tmax));

  if (b.log_N0 < kLogUint64Max - 1.0) {
    auto slack_at = [&](double logN) {
      std::vector<double> s(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) s[i] = 0.5 * logN - b.log_C1 - t[i];
      return s;
    };
    auto holds = [&](std::uint64_t n) {
      for (double s : slack_at(std::log(static_cast<double>(n))))
        if (s < 0) return false;
      return true;
    };
    std::uint64_t guess = static_cast<std::uint64_t>(std::ceil(std::exp(b.log_N0)));
    std::uint64_t lo = guess > 4 ? guess - 4 : 1, hi = guess + 4;
    while (!holds(hi)) hi *= 2;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (holds(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    b.N0 = lo;
    b.log_N0 = std::log(static_cast<double>(lo));
    b.slack = slack_at(b.log_N0);
  } else {
    // slack at log_N0 = 2 (log_C1 + tmax): the log_C1 terms cancel exactly
    b.slack.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) b.slack[i] = tmax - t[i];
  }

  if (nu0 < 63) {
    unsigned __int128 d = (static_cast<unsigned __int128>(1) << nu0) * mu;
    if (d <= std::numeric_limits<std::uint64_t>::max()) b.divisor = static_cast<std::uint64_t>(d);
  }
  return b;
}

}  // namespace

std::vector<double> budget_slack(const Budget& b, double logN) {
  double ll = b.log_lambda(logN);
  // lambda_N X <= B, slack = log B - log lambda - log X
  double nu0 = static_cast<double>(b.nu0);
  std::vector<double> s(4);
  s[0] = b.log_delta0 - ll - b.log_delta1;
  double x2 = log_add(std::log(2 * nu0 + 8) + b.log_C0, std::log(95 * nu0 + 494) + b.log_delta1);
  s[1] = b.log_Delta0 - ll - x2;
  s[2] = b.log_C0 - ll - (std::log(nu0 + 5) + b.log_C0);
  s[3] = std::log(2.0) + b.log_delta1 - ll - (b.log_kappa + b.log_C0);
  return s;
}

Budget budget_compute(long long nu0, long long mu, double delta1, double L0, double rho,
                      std::optional<double> delta0, std::optional<double> Delta0) {
  if (delta1 <= 0 || L0 <= 0 || rho <= 0)
    throw std::invalid_argument("budget: inputs must be positive");
  double d0 = delta0 ? *delta0 : 1e-10 * delta1;
  double D0 = Delta0 ? *Delta0 : 1e-10 * delta1;
  if (d0 <= 0 || D0 <= 0) throw std::invalid_argument("budget: inputs must be positive");
  return budget_from_logs(nu0, mu, std::log(delta1), std::log(L0), std::log(rho), std::log(d0),
                          std::log(D0));
}

Budget budget_compute_log(long long nu0, long long mu, double log_delta1, double log_L0,
                          double log_rho, std::optional<double> log_delta0,
                          std::optional<double> log_Delta0) {
  double ld0 = log_delta0 ? *log_delta0 : log_delta1 + std::log(1e-10);
  double lD0 = log_Delta0 ? *log_Delta0 : log_delta1 + std::log(1e-10);
  return budget_from_logs(nu0, mu, log_delta1, log_L0, log_rho, ld0, lD0);
}

SCCertificate level1_certificate(int rank, long long n, int Lmax, Rat threshold) {
  if (rank < 2 || n < 2 || Lmax < 1)
    throw std::invalid_argument("level1_certificate: need rank >= 2, n >= 2, Lmax >= 1");
  SCCertificate c;
  c.rank = rank;
  c.n = n;
  c.Lmax = Lmax;
  c.threshold = threshold;
  std::vector<ConjClass> roots = enumerate_primitive_classes(rank, Lmax);
  c.classes = roots.size();
  c.delta = cylinder_delta(roots);
  int minlen = Lmax;
  for (const auto& r : roots) minlen = std::min(minlen, r.representative.length());
  c.inj = n * minlen;
  c.ratio = Rat(c.delta, c.inj);
  c.pass = c.ratio < c.threshold;
  return c;
}

QuotientUpdate quotient_update(double inj, double A, double nu_stg, long long mu,
                               double delta_bar, double L0, double ell) {
  if (delta_bar <= 0 || L0 <= 0) throw std::invalid_argument("quotient_update: bad parameters");
  (void)inj;
  QuotientUpdate u;
  double kappa = delta_bar / (kPi * std::sinh(25 * delta_bar));
  if (std::isinf(ell))
    u.inj = std::numeric_limits<double>::infinity();
  else
    u.inj = std::min(kappa * ell, delta_bar);
  u.A = A + (nu_stg + 4) * kPi * std::sinh(4 * L0 * delta_bar);
  u.nu = std::max(nu_stg, static_cast<double>(mu + 4));
  return u;
}

AcylBounds acyl_bounds(double delta, double L, double N, double L0, double d) {
  if (delta <= 0 || L <= 0 || N <= 0 || L0 <= 0)
    throw std::invalid_argument("acyl_bounds: inputs must be positive");
  AcylBounds b;
  b.inj_lower = delta / N;
  b.nu_upper = N * (2 + L / delta);
  b.A_upper = 10 * L0 * L0 * N * N * N * (L + 5 * delta);
  b.L_of_d = L + 4 * d + 100 * delta;
  b.N_of_d = (d / (5 * delta) + 3) * N;
  return b;
}

long long two_part(long long n) {
  if (n <= 0) throw std::invalid_argument("two_part: n must be positive");
  return n & -n;
}

EmbeddingVerdict burnside_subgroup_check(const FiniteGroupTable& f, long long n,
                                         const std::vector<int>& gens, int k,
                                         const std::vector<ProductElt>& images) {
  if (n < 2) throw std::invalid_argument("burnside_subgroup_check: n must be >= 2");
  long long n2 = two_part(n);
  ProductGroup target;
  target.dihedral_orders.push_back(static_cast<int>(n));
  for (int i = 0; i < k; ++i) target.dihedral_orders.push_back(static_cast<int>(n2));
  for (const auto& img : images)
    if (static_cast<int>(img.comps.size()) != k + 1)
      throw std::invalid_argument("burnside_subgroup_check: image arity mismatch");
  return verify_embedding(f, gens, target, images);
}

}  // namespace scq
