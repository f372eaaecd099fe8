#include "prolate/spectral_analysis.hpp"

#include "prolate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace prolate {

namespace {

// Inequalities are checked with this slack for rounding.
constexpr double kBoundSlack = 1e-9;

double weyl_count(double a) { return 2.0 / std::numbers::pi * a * a; }

std::complex<double> i_pow(int r) {
  switch (r % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

struct Gap {
  double size = 0.0;
  double where = 0.0;
};

// Largest distance from a point of [0,1] to the nearest value; the endpoints
// must be covered as well.
Gap largest_gap(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  Gap g{v.front(), 0.0};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double half = 0.5 * (v[i + 1] - v[i]);
    if (half > g.size)
      g = {half, 0.5 * (v[i] + v[i + 1])};
  }
  if (1.0 - v.back() > g.size)
    g = {1.0 - v.back(), 1.0};
  return g;
}

NetReport class_nets(const SpectrumTable& table, double kappa, NetDomain domain) {
  if (table.entries.empty())
    throw DomainError("net check on an empty spectrum table");
  if (!(kappa > 0.0))
    throw DomainError(fmt::format("kappa = {} must be positive", kappa));
  NetReport rep;
  rep.kappa = kappa;
  rep.domain = domain;
  rep.is_net = true;
  rep.largest_gap = 0.0;
  for (int r = 0; r < 4; ++r) {
    std::vector<double> vals;
    for (std::size_t k = r; k < table.entries.size(); k += 4) {
      const double s = table.entries[k].sigma;
      vals.push_back(domain == NetDomain::cross ? std::sqrt(s) : s);
    }
    ClassNet cls;
    cls.residue = r;
    cls.count = vals.size();
    if (vals.empty()) {
      cls.largest_gap = std::numeric_limits<double>::infinity();
      cls.is_net = false;
    } else {
      const auto g = largest_gap(vals);
      cls.largest_gap = g.size;
      cls.witness = g.where;
      cls.is_net = g.size <= kappa;
    }
    rep.is_net = rep.is_net && cls.is_net;
    if (cls.largest_gap > rep.largest_gap || r == 0) {
      rep.largest_gap = cls.largest_gap;
      rep.witness = domain == NetDomain::cross ? i_pow(r) * cls.witness
                                               : std::complex<double>(cls.witness, 0.0);
    }
    rep.residue_class_results.push_back(cls);
  }
  return rep;
}

} // namespace

double ln_plus(double a) { return a > 1.0 ? std::log(a) : 0.0; }

double itz_bound(double a) { return 2.0 / (std::numbers::pi * std::numbers::pi) * ln_plus(a) + 1.0; }

int trace_k_max(double a) { return static_cast<int>(std::ceil(weyl_count(a))) + 40; }

TraceReport trace_check(const SpectrumTable& table) {
  const double a = table.a;
  const int required = trace_k_max(a);
  if (table.k_max < required || static_cast<int>(table.entries.size()) < required + 1)
    throw PreconditionError(fmt::format(
        "trace check at a = {} needs k_max >= {} (table has {})", a, required, table.k_max));

  TraceReport rep;
  rep.a = a;
  rep.target = weyl_count(a);
  rep.itz_bound = itz_bound(a);
  rep.lower_bound = rep.target - 2.0 / (std::numbers::pi * std::numbers::pi) * ln_plus(a) - 1.0;
  for (const auto& e : table.entries) {
    rep.sum_sigma += e.sigma;
    rep.sum_sigma_sq += e.sigma * e.sigma;
    rep.itz_sum += e.sigma * (1.0 - e.sigma);
  }

  // Geometric extrapolation from the last five sigmas.
  const std::size_t n = table.entries.size();
  const double last = table.entries[n - 1].sigma;
  const double earlier = table.entries[n - 5].sigma;
  rep.tail_ratio = std::pow(last / earlier, 0.25);
  rep.tail_trusted = rep.tail_ratio <= 0.5;
  rep.tail_estimate = rep.tail_ratio < 1.0 ? last * rep.tail_ratio / (1.0 - rep.tail_ratio)
                                           : std::numeric_limits<double>::infinity();

  rep.tolerance = kTraceTolerance * rep.target;
  rep.trace_ok = std::abs(rep.sum_sigma + rep.tail_estimate - rep.target) <= rep.tolerance;
  rep.square_bound_ok = rep.sum_sigma_sq >= rep.lower_bound - kBoundSlack;
  rep.itz_ok = rep.itz_sum <= rep.itz_bound + kBoundSlack;
  return rep;
}

PlungeReport plunge_counts(const SpectrumTable& table, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw DomainError(fmt::format("epsilon = {} must lie in (0, 1/2)", epsilon));
  if (table.entries.empty())
    throw DomainError("plunge counts on an empty spectrum table");
  if (table.entries.back().sigma > epsilon / 10.0)
    throw PreconditionError(fmt::format(
        "table at a = {} stops at sigma_{} = {} > epsilon/10; increase k_max", table.a,
        table.k_max, table.entries.back().sigma));

  const double a = table.a;
  PlungeReport rep;
  rep.a = a;
  rep.epsilon = epsilon;
  for (const auto& e : table.entries) {
    if (e.sigma > epsilon)
      ++rep.n_above_eps;
    if (e.sigma > 1.0 - epsilon)
      ++rep.n_above_1m_eps;
    if (e.sigma >= epsilon && e.sigma <= 1.0 - epsilon)
      ++rep.n_middle;
  }
  const double spread = itz_bound(a) / epsilon;
  rep.bound_above_eps = weyl_count(a) + spread;
  rep.bound_above_1m_eps = weyl_count(a) - spread;
  rep.bound_middle = itz_bound(a) / (epsilon * (1.0 - epsilon));
  rep.transition_lo = weyl_count(a) - spread;
  rep.transition_hi = weyl_count(a) + spread;
  rep.transition_in_table = rep.transition_hi <= table.k_max;

  rep.half_crossing = static_cast<int>(table.entries.size());
  for (const auto& e : table.entries) {
    if (e.sigma < 0.5) {
      rep.half_crossing = e.k;
      break;
    }
  }
  rep.crossing_in_transition =
      rep.half_crossing >= rep.transition_lo && rep.half_crossing <= rep.transition_hi;
  return rep;
}

const char* to_string(NetDomain d) {
  switch (d) {
  case NetDomain::unit_interval:
    return "unit_interval";
  case NetDomain::residue_classes:
    return "residue_classes";
  case NetDomain::cross:
    return "cross";
  }
  return "unit_interval";
}

NetDomain net_domain_from_string(const std::string& s) {
  if (s == "unit_interval" || s == "unit")
    return NetDomain::unit_interval;
  if (s == "residue_classes" || s == "residue")
    return NetDomain::residue_classes;
  if (s == "cross")
    return NetDomain::cross;
  throw DomainError(fmt::format("unknown net domain '{}'", s));
}

NetReport interval_net_check(std::span<const double> values, double kappa) {
  if (values.empty())
    throw DomainError("interval net check needs at least one value");
  if (!(kappa > 0.0))
    throw DomainError(fmt::format("kappa = {} must be positive", kappa));
  for (double v : values)
    if (!(v >= 0.0 && v <= 1.0))
      throw DomainError(fmt::format("value {} lies outside [0,1]", v));
  const auto g = largest_gap({values.begin(), values.end()});
  NetReport rep;
  rep.kappa = kappa;
  rep.domain = NetDomain::unit_interval;
  rep.largest_gap = g.size;
  rep.witness = g.where;
  rep.is_net = g.size <= kappa;
  return rep;
}

NetReport sigma_net_check(const SpectrumTable& table, double kappa) {
  std::vector<double> s;
  s.reserve(table.entries.size());
  for (const auto& e : table.entries)
    s.push_back(e.sigma);
  return interval_net_check(s, kappa);
}

NetReport residue_net_check(const SpectrumTable& table, double kappa) {
  return class_nets(table, kappa, NetDomain::residue_classes);
}

NetReport cross_net_check(const SpectrumTable& table, double kappa) {
  return class_nets(table, kappa, NetDomain::cross);
}

} // namespace prolate
