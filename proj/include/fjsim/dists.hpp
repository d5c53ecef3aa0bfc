#pragma once

#include <string>
#include <variant>

#include "fjsim/rng.hpp"

namespace fjsim {

// Service-time laws. Rates are 1/time, scale and value parameters are times.

struct Exponential {
  double rate;
};

// Heavy-tailed law with CDF 1 - (xm/x)^alpha for x >= xm. The mean exists
// only for alpha > 1 and the variance only for alpha > 2; the distribution is
// still constructible below those thresholds for CDF/sampling work.
struct Pareto {
  double xm;
  double alpha;
};

struct Deterministic {
  double value;
};

// Per-task service delta*Xd + (1-delta)*Xr with Xd shared across the tasks of
// one job and Xr fresh per task, both Exp(rate). Only the parameters live
// here; the shared draw is a per-job quantity owned by the simulator, so
// sample() rejects this variant.
struct CorrelatedExpMix {
  double rate;
  double delta;
};

using ServiceDist =
    std::variant<Exponential, Pareto, Deterministic, CorrelatedExpMix>;

void validate(const ServiceDist& dist);

// One nonnegative draw. CorrelatedExpMix cannot be sampled without job
// context and throws ConfigError.
double sample(const ServiceDist& dist, RngStream& rng);

// F(x), in [0, 1] and nondecreasing in x.
double cdf(const ServiceDist& dist, double x);

// Inverse CDF for u in [0, 1). Closed form except for CorrelatedExpMix,
// which is inverted numerically.
double quantile(const ServiceDist& dist, double u);

// Exact first and second central moments. Throws MomentUndefinedError when
// the moment does not exist (Pareto alpha <= 1 for the mean, alpha <= 2 for
// the variance).
double mean(const ServiceDist& dist);
double variance(const ServiceDist& dist);

// Pareto with the given shape whose mean equals target_mean, i.e.
// xm = target_mean * (alpha - 1) / alpha. Requires alpha > 1.
ServiceDist pareto_for_mean(double target_mean, double alpha);

// Compact colon-separated label for CSV cells, e.g. "pareto:0.1666667:2".
std::string dist_label(const ServiceDist& dist);

// JSON round trip using the config schema
//   {"type":"exponential","rate":r} {"type":"pareto","xm":x,"alpha":a}
//   {"type":"deterministic","value":v} {"type":"correlated_exp","rate":r,"delta":d}
std::string dist_to_json(const ServiceDist& dist);
ServiceDist dist_from_json(const std::string& text);

}  // namespace fjsim
