#include "fjsim/dists.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fjsim/errors.hpp"
#include "json.hpp"

namespace fjsim {

namespace {

// The mixture delta*Xd + (1-delta)*Xr is a sum of independent exponentials
// with rates a = rate/delta and b = rate/(1-delta) (hypoexponential), which
// degenerates to Erlang-2 when the rates coincide and to a single
// exponential at delta in {0, 1}.
struct MixRates {
  double a = 0, b = 0;
  bool single = false;  // delta 0 or 1: plain Exp(rate)
  bool erlang = false;  // a == b (numerically)
};

MixRates mix_rates(const CorrelatedExpMix& m) {
  MixRates r;
  if (m.delta <= 0.0 || m.delta >= 1.0) {
    r.single = true;
    r.a = m.rate;
    return r;
  }
  r.a = m.rate / m.delta;
  r.b = m.rate / (1.0 - m.delta);
  if (std::abs(r.a - r.b) <= 1e-9 * r.a) {
    r.erlang = true;
    r.a = r.b = 2.0 * m.rate;
  }
  return r;
}

double mix_cdf(const CorrelatedExpMix& m, double x) {
  if (x <= 0.0) return 0.0;
  const MixRates r = mix_rates(m);
  if (r.single) return -std::expm1(-r.a * x);
  if (r.erlang) return 1.0 - std::exp(-r.a * x) * (1.0 + r.a * x);
  return 1.0 -
         (r.b * std::exp(-r.a * x) - r.a * std::exp(-r.b * x)) / (r.b - r.a);
}

double mix_quantile(const CorrelatedExpMix& m, double u) {
  const MixRates r = mix_rates(m);
  if (r.single) return -std::log1p(-u) / r.a;
  // Bracketed bisection on the CDF; monotone, so this is robust. 200
  // halvings push the bracket width below the double spacing of the root.
  double lo = 0.0;
  double hi = 2.0 / m.rate;
  while (mix_cdf(m, hi) < u) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mix_cdf(m, mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void validate(const ServiceDist& dist) {
  std::visit(
      [](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          if (!(d.rate > 0.0)) throw ConfigError("exponential rate must be > 0");
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (!(d.xm > 0.0)) throw ConfigError("pareto xm must be > 0");
          if (!(d.alpha > 0.0)) throw ConfigError("pareto alpha must be > 0");
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          if (!(d.value >= 0.0))
            throw ConfigError("deterministic value must be >= 0");
        } else {
          if (!(d.rate > 0.0))
            throw ConfigError("correlated_exp rate must be > 0");
          if (!(d.delta >= 0.0 && d.delta <= 1.0))
            throw ConfigError("correlated_exp delta must be in [0, 1]");
        }
      },
      dist);
}

double sample(const ServiceDist& dist, RngStream& rng) {
  return std::visit(
      [&rng](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return rng.exponential(d.rate);
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return rng.pareto(d.xm, d.alpha);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return d.value;
        } else {
          throw ConfigError(
              "correlated_exp cannot be sampled standalone; the shared "
              "component is drawn per job by the simulator");
        }
      },
      dist);
}

double cdf(const ServiceDist& dist, double x) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return x <= 0.0 ? 0.0 : -std::expm1(-d.rate * x);
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return x < d.xm ? 0.0 : 1.0 - std::pow(d.xm / x, d.alpha);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return x >= d.value ? 1.0 : 0.0;
        } else {
          return mix_cdf(d, x);
        }
      },
      dist);
}

double quantile(const ServiceDist& dist, double u) {
  if (!(u >= 0.0 && u < 1.0)) throw ConfigError("quantile needs u in [0, 1)");
  return std::visit(
      [u](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-u) / d.rate;
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return d.xm * std::pow(1.0 - u, -1.0 / d.alpha);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return d.value;
        } else {
          return mix_quantile(d, u);
        }
      },
      dist);
}

double mean(const ServiceDist& dist) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return 1.0 / d.rate;
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (d.alpha <= 1.0)
            throw MomentUndefinedError("pareto mean undefined for alpha <= 1");
          return d.alpha * d.xm / (d.alpha - 1.0);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return d.value;
        } else {
          // Weights delta and 1-delta sum to 1, each component has mean
          // 1/rate.
          return 1.0 / d.rate;
        }
      },
      dist);
}

double variance(const ServiceDist& dist) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return 1.0 / (d.rate * d.rate);
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (d.alpha <= 2.0)
            throw MomentUndefinedError(
                "pareto variance undefined for alpha <= 2");
          const double am1 = d.alpha - 1.0;
          return d.xm * d.xm * d.alpha / (am1 * am1 * (d.alpha - 2.0));
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return 0.0;
        } else {
          const double w = d.delta * d.delta + (1.0 - d.delta) * (1.0 - d.delta);
          return w / (d.rate * d.rate);
        }
      },
      dist);
}

ServiceDist pareto_for_mean(double target_mean, double alpha) {
  if (!(alpha > 1.0))
    throw ConfigError("pareto_for_mean needs alpha > 1 for a finite mean");
  if (!(target_mean > 0.0)) throw ConfigError("target mean must be > 0");
  return Pareto{target_mean * (alpha - 1.0) / alpha, alpha};
}

std::string dist_label(const ServiceDist& dist) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return "exponential:" + fmt_num(d.rate);
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return "pareto:" + fmt_num(d.xm) + ":" + fmt_num(d.alpha);
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          return "deterministic:" + fmt_num(d.value);
        } else {
          return "correlated_exp:" + fmt_num(d.rate) + ":" + fmt_num(d.delta);
        }
      },
      dist);
}

std::string dist_to_json(const ServiceDist& dist) {
  nlohmann::json j;
  std::visit(
      [&j](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          j = {{"type", "exponential"}, {"rate", d.rate}};
        } else if constexpr (std::is_same_v<T, Pareto>) {
          j = {{"type", "pareto"}, {"xm", d.xm}, {"alpha", d.alpha}};
        } else if constexpr (std::is_same_v<T, Deterministic>) {
          j = {{"type", "deterministic"}, {"value", d.value}};
        } else {
          j = {{"type", "correlated_exp"}, {"rate", d.rate}, {"delta", d.delta}};
        }
      },
      dist);
  return j.dump();
}

ServiceDist dist_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad distribution json: ") + e.what());
  }
  ServiceDist out;
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "exponential") {
      out = Exponential{j.at("rate").get<double>()};
    } else if (type == "pareto") {
      out = Pareto{j.at("xm").get<double>(), j.at("alpha").get<double>()};
    } else if (type == "deterministic") {
      out = Deterministic{j.at("value").get<double>()};
    } else if (type == "correlated_exp") {
      out = CorrelatedExpMix{j.at("rate").get<double>(),
                             j.at("delta").get<double>()};
    } else {
      throw ConfigError("unknown distribution type: " + type);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad distribution json: ") + e.what());
  }
  validate(out);
  return out;
}

}  // namespace fjsim
