#pragma once

#include <string>
#include <utility>

#include "fjsim/dists.hpp"

namespace fjsim {

// One (n,k) coded system: n disks, any k reads complete a request, Poisson
// arrivals at rate lambda, base content service rate mu. Each disk stores
// 1/k of the content, so the per-disk task rate is mu' = k*mu.
struct SystemParams {
  int n = 1;
  int k = 1;
  double lambda = 1.0;
  double mu = 1.0;

  double mu_prime() const { return static_cast<double>(k) * mu; }
};

void validate(const SystemParams& p);

// Analytic bracket on the mean response time together with the service
// moments it was built from. es/es2 are the first two moments of the k-th
// order statistic of n task services, rho = lambda*es, stable iff rho < 1.
// lower/upper are NaN when unstable.
struct BoundsReport {
  double lower = 0;
  double upper = 0;
  double es = 0;
  double es2 = 0;
  double rho = 0;
  bool stable = false;
};

std::string to_json(const BoundsReport& r);

// Generalized harmonic numbers: harmonic(n) = sum 1/j, harmonic2(n) = sum
// 1/j^2, both 0 at n = 0.
double harmonic(int n);
double harmonic2(int n);

// Moments of the k-th order statistic of n i.i.d. Exp(rate) draws:
//   mean = (H_n - H_{n-k}) / rate
//   var  = (H2_n - H2_{n-k}) / rate^2
double exp_orderstat_mean(int n, int k, double rate);
double exp_orderstat_var(int n, int k, double rate);

// M/G/1 mean response time, es + lambda*es2 / (2*(1 - lambda*es)).
// Throws UnstableError when lambda*es >= 1 and ConfigError when es2 < es^2.
double pk_mg1_mean(double lambda, double es, double es2);

// Split-merge upper bound: Pollaczek-Khinchin with the exact exponential
// order-statistic moments at rate mu' = k*mu.
double upper_bound_exp(const SystemParams& p);

// Staged lower bound sum_{i=n-k+1}^{n} 1/(i*mu' - lambda). Reduces to the
// classical (n,n) fork-join lower bound at k = n and to the exact M/M/1 value
// at n = k = 1. Throws UnstableError when any stage denominator <= 0.
double lower_bound_exp(const SystemParams& p);

// Both bounds plus the moments/utilization they derive from; never throws on
// instability (stable = false, bounds NaN).
BoundsReport bounds_report(const SystemParams& p);

// Distribution-free upper bound from per-task moments: with
// m = es + sigma*sqrt((k-1)/(n-k+1)),
//   bound = m + lambda*(m^2 + cnk*sigma^2) / (2*(1 - lambda*m)).
// es and sigma are the mean and standard deviation of a single task's
// service time; cnk bounds V[S]/sigma^2 for the k-th order statistic.
double upper_bound_general(int n, int k, double lambda, double es,
                           double sigma, double cnk);

// Numeric stand-in for the C(n,k) variance-ratio table: maximizes
// V[X_{k,n}]/V[X] over two-point distributions, the family attaining the
// extremal ratio. Valid (and tight in practice) for use as cnk above.
double cnk_surrogate(int n, int k);

// (E[S], E[S^2]) of the k-th order statistic of n i.i.d. draws from dist,
// by tanh-sinh quadrature on the quantile transform: S = Q(U_{k,n}) with
// U_{k,n} ~ Beta(k, n-k+1). Relative accuracy ~1e-10. Throws
// MomentUndefinedError when the order-statistic moment is infinite
// (Pareto with (n-k+1)*alpha <= 2).
std::pair<double, double> numeric_orderstat_moments(const ServiceDist& dist,
                                                    int n, int k);

// Mean response with job-correlated services: delta/(k*mu) + (1-delta)*t_base
// where t_base is the mean response of the independent-service system.
double correlated_mean(const SystemParams& p, double delta, double t_base);

}  // namespace fjsim
