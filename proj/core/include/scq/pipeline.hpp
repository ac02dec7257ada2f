#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scq/dihedral.hpp"
#include "scq/rat.hpp"
#include "scq/word.hpp"

namespace scq {

/// Small-cancellation certificate for the level-1 Burnside quotient: relators
/// are the n-th powers of all primitive conjugacy classes of length <= Lmax.
struct SCCertificate {
  int rank = 2;
  long long n = 2;
  int Lmax = 1;
  std::size_t classes = 0;
  long long delta = 0;  // max overlap between distinct relator cylinders
  long long inj = 1;    // n * (shortest root length)
  Rat ratio;            // delta / inj
  Rat threshold{1, 6};
  bool pass = false;
};

SCCertificate level1_certificate(int rank, long long n, int Lmax, Rat threshold = Rat{1, 6});

/// Constant budget of the induction, kept in natural logs: with the default
/// parameter regime (rho > 10^20 * L0 * delta1, L0 >= 1000) the constants
/// overflow any fixed-width float, so every derived quantity is a log.
struct Budget {
  long long nu0 = 1;
  long long mu = 1;
  double delta0 = 0, delta1 = 0, Delta0 = 0, rho = 0, L0 = 0;

  double log_delta0 = 0, log_delta1 = 0, log_Delta0 = 0;
  double log_kappa = 0;  // log(delta1 / (pi sinh(25 delta1)))
  double log_C0 = 0;     // log(pi sinh(4 L0 delta1))
  double log_C1 = 0;     // log(10 C0 pi sinh(rho))

  // least admissible N: log_N0 always, exact value when it fits in 64 bits
  double log_N0 = 0;
  std::optional<std::uint64_t> N0;

  // log-space slack of the four (recale) inequalities at N0 (nonnegative)
  std::vector<double> slack;

  // exponent divisibility requirement 2^nu0 * mu of the even-exponent theorem
  std::optional<std::uint64_t> divisor;

  double log_lambda(double logN) const { return log_C1 - 0.5 * logN; }
};

/// Computes the budget.  delta0 and Delta0 default to 1e-10 * delta1; inputs
/// may be given as logs instead via budget_compute_log.
Budget budget_compute(long long nu0, long long mu, double delta1, double L0, double rho,
                      std::optional<double> delta0 = std::nullopt,
                      std::optional<double> Delta0 = std::nullopt);

/// Same computation from log-space inputs (log_rho is log(rho) itself, the
/// sinh argument).  Use when rho is too large for a double.
Budget budget_compute_log(long long nu0, long long mu, double log_delta1, double log_L0,
                          double log_rho, std::optional<double> log_delta0 = std::nullopt,
                          std::optional<double> log_Delta0 = std::nullopt);

/// Log-space slack of the four (recale) inequalities at a given log N; the
/// inequalities hold iff all entries are >= 0.
std::vector<double> budget_slack(const Budget& b, double logN);

struct QuotientUpdate {
  double inj = 0;  // min(kappa * ell, delta_bar); infinite when ell is
  double A = 0;    // A + (nu + 4) pi sinh(4 L0 delta_bar)
  double nu = 0;   // max(nu_stg, mu + 4)
};

QuotientUpdate quotient_update(double inj, double A, double nu_stg, long long mu,
                               double delta_bar, double L0, double ell);

struct AcylBounds {
  double inj_lower = 0;  // delta / N
  double nu_upper = 0;   // N (2 + L/delta)
  double A_upper = 0;    // 10 L0^2 N^3 (L + 5 delta)
  double L_of_d = 0;     // L + 4d + 100 delta
  double N_of_d = 0;     // (d/(5 delta) + 3) N
};

AcylBounds acyl_bounds(double delta, double L, double N, double L0, double d = 0);

/// Injective-homomorphism check of a finite group into D_n x D_{n2}^k where
/// n2 is the largest power of two dividing n.
EmbeddingVerdict burnside_subgroup_check(const FiniteGroupTable& f, long long n,
                                         const std::vector<int>& gens, int k,
                                         const std::vector<ProductElt>& images);

/// Largest power of two dividing n.
long long two_part(long long n);

}  // namespace scq
