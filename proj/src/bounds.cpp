#include "qemlab/games/bounds.hpp"

#include <cmath>
#include <string>

namespace qemlab::games {

namespace {

double checked(double v, const char* name) {
  require(v >= 0 && std::isfinite(v), std::string("compute_bound: ") + name + " must be >= 0");
  return v;
}

}  // namespace

BoundValue compute_bound(std::string_view formula, const BoundParams& p) {
  const double dim_n = std::ldexp(1.0, p.n);
  const double dim_m = std::ldexp(1.0, p.m);
  const double q_e = checked(p.q_e, "q_e");
  const double q_p = checked(p.q_p, "q_p");
  const double q = checked(p.q, "q");
  const double eps = checked(p.epsilon, "epsilon");
  require(p.j >= 0, "compute_bound: j must be >= 0");

  double raw = 0;
  if (formula == "em") {
    raw = 10.0 / std::sqrt(dim_n) * (q_e * std::sqrt(q_p) + q_p * std::sqrt(q_e));
  } else if (formula == "em-forward-only") {
    raw = 2.0 / std::sqrt(dim_n) * (q_e * std::sqrt(q_p) + q_p * std::sqrt(q_e));
  } else if (formula == "resample-fn") {
    raw = 1.5 * std::sqrt(q / dim_m);
  } else if (formula == "resample-perm") {
    raw = 4.0 * std::sqrt(q / dim_n);
  } else if (formula == "reprogram") {
    raw = 2.0 * q * std::sqrt(eps);
  } else if (formula == "hybrid-stage") {
    raw = 2.0 * q * std::sqrt(2.0 * static_cast<double>(p.j + 1) / dim_n);
  } else if (formula == "hybrid-cut") {
    raw = 8.0 * std::sqrt(q_p / dim_n) + 2.0 * q_e / dim_n;
  } else if (formula == "bad1-cap" || formula == "bad2-cap") {
    raw = static_cast<double>(p.j) / dim_n;
  } else if (formula == "bad3-cap") {
    require(q_e >= static_cast<double>(p.j), "compute_bound: bad3-cap needs q_e >= j");
    raw = (q_e - static_cast<double>(p.j)) / dim_n + 4.0 * std::sqrt(q_p / dim_n);
  } else if (formula == "exact") {
    raw = 0.0;
  } else {
    throw ConfigError("compute_bound: unknown formula id '" + std::string(formula) + "'");
  }

  BoundValue out;
  out.raw = raw;
  out.vacuous = raw >= 1.0;
  out.value = out.vacuous ? 1.0 : raw;
  return out;
}

}  // namespace qemlab::games
