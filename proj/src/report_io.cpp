#include "prolate/report_io.hpp"

#include "prolate/errors.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace prolate {

using nlohmann::json;

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

namespace {

// JSON has no infinity; an unbounded gap is written as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace

json to_json(const SpectrumTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json row{{"k", e.k},
             {"gamma", e.gamma},
             {"mu", e.mu},
             {"sigma", e.sigma},
             {"lambda_re", e.lambda.real()},
             {"lambda_im", e.lambda.imag()},
             {"phase_error", e.phase_error},
             {"flags", e.flags}};
    if (e.sigma_oracle)
      row["sigma_oracle"] = *e.sigma_oracle;
    entries.push_back(std::move(row));
  }
  json j{{"a", t.a}, {"k_max", t.k_max}, {"moment_agreement", t.moment_agreement},
         {"entries", std::move(entries)}};
  if (t.oracle_agreement)
    j["oracle_agreement"] = *t.oracle_agreement;
  return j;
}

json to_json(const TraceReport& r) {
  return {{"a", r.a},
          {"sum_sigma", r.sum_sigma},
          {"target", r.target},
          {"sum_sigma_sq", r.sum_sigma_sq},
          {"lower_bound", r.lower_bound},
          {"itz_sum", r.itz_sum},
          {"itz_bound", r.itz_bound},
          {"tail_estimate", number(r.tail_estimate)},
          {"tail_ratio", r.tail_ratio},
          {"tail_trusted", r.tail_trusted},
          {"tolerance", r.tolerance},
          {"trace_ok", r.trace_ok},
          {"square_bound_ok", r.square_bound_ok},
          {"itz_ok", r.itz_ok}};
}

TraceReport trace_report_from_json(const json& j) {
  TraceReport r;
  r.a = j.at("a").get<double>();
  r.sum_sigma = j.at("sum_sigma").get<double>();
  r.target = j.at("target").get<double>();
  r.sum_sigma_sq = j.at("sum_sigma_sq").get<double>();
  r.lower_bound = j.at("lower_bound").get<double>();
  r.itz_sum = j.at("itz_sum").get<double>();
  r.itz_bound = j.at("itz_bound").get<double>();
  r.tail_estimate = read_number(j.at("tail_estimate"));
  r.tail_ratio = j.at("tail_ratio").get<double>();
  r.tail_trusted = j.at("tail_trusted").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  r.trace_ok = j.at("trace_ok").get<bool>();
  r.square_bound_ok = j.at("square_bound_ok").get<bool>();
  r.itz_ok = j.at("itz_ok").get<bool>();
  return r;
}

json to_json(const PlungeReport& r) {
  return {{"a", r.a},
          {"epsilon", r.epsilon},
          {"n_above_eps", r.n_above_eps},
          {"n_above_1m_eps", r.n_above_1m_eps},
          {"n_middle", r.n_middle},
          {"bounds",
           {{"above_eps", r.bound_above_eps},
            {"above_1m_eps", r.bound_above_1m_eps},
            {"middle", r.bound_middle}}},
          {"transition_interval", {r.transition_lo, r.transition_hi}},
          {"transition_in_table", r.transition_in_table},
          {"half_crossing", r.half_crossing},
          {"crossing_in_transition", r.crossing_in_transition}};
}

PlungeReport plunge_report_from_json(const json& j) {
  PlungeReport r;
  r.a = j.at("a").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.n_above_eps = j.at("n_above_eps").get<int>();
  r.n_above_1m_eps = j.at("n_above_1m_eps").get<int>();
  r.n_middle = j.at("n_middle").get<int>();
  const auto& b = j.at("bounds");
  r.bound_above_eps = b.at("above_eps").get<double>();
  r.bound_above_1m_eps = b.at("above_1m_eps").get<double>();
  r.bound_middle = b.at("middle").get<double>();
  r.transition_lo = j.at("transition_interval").at(0).get<double>();
  r.transition_hi = j.at("transition_interval").at(1).get<double>();
  r.transition_in_table = j.at("transition_in_table").get<bool>();
  r.half_crossing = j.at("half_crossing").get<int>();
  r.crossing_in_transition = j.at("crossing_in_transition").get<bool>();
  return r;
}

json to_json(const NetReport& r) {
  json classes = json::array();
  for (const auto& c : r.residue_class_results)
    classes.push_back({{"residue", c.residue},
                       {"count", c.count},
                       {"is_net", c.is_net},
                       {"largest_gap", number(c.largest_gap)},
                       {"witness", c.witness}});
  return {{"kappa", r.kappa},
          {"domain", to_string(r.domain)},
          {"is_net", r.is_net},
          {"largest_gap", number(r.largest_gap)},
          {"witness", {{"re", r.witness.real()}, {"im", r.witness.imag()}}},
          {"residue_class_results", std::move(classes)}};
}

NetReport net_report_from_json(const json& j) {
  NetReport r;
  r.kappa = j.at("kappa").get<double>();
  r.domain = net_domain_from_string(j.at("domain").get<std::string>());
  r.is_net = j.at("is_net").get<bool>();
  r.largest_gap = read_number(j.at("largest_gap"));
  r.witness = {j.at("witness").at("re").get<double>(), j.at("witness").at("im").get<double>()};
  for (const auto& c : j.at("residue_class_results")) {
    ClassNet cls;
    cls.residue = c.at("residue").get<int>();
    cls.count = c.at("count").get<std::size_t>();
    cls.is_net = c.at("is_net").get<bool>();
    cls.largest_gap = read_number(c.at("largest_gap"));
    cls.witness = c.at("witness").get<double>();
    r.residue_class_results.push_back(cls);
  }
  return r;
}

json to_json(const AsymptoticReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"index", row.index},
                    {"a", row.a},
                    {"computed", row.computed},
                    {"formula", row.formula},
                    {"ratio", row.ratio}});
  return {{"regime", to_string(r.regime)}, {"rows", std::move(rows)}};
}

json to_json(const TransitionPoint& p) {
  json j{{"a", p.a}, {"b", p.b}, {"k", p.k}, {"sigma_limit", p.sigma_limit}};
  if (p.delta) {
    j["delta"] = *p.delta;
    j["predicted_sigma"] = transition_sigma(*p.delta);
    j["residual"] = slepian_residual(p.a, p.k, *p.delta);
  }
  return j;
}

void write_spectrum_csv(std::ostream& os, const SpectrumTable& t, bool header, bool with_a) {
  const bool oracle = t.oracle_agreement.has_value();
  if (header) {
    os << (with_a ? "a," : "") << "k,gamma,mu,sigma,lambda_re,lambda_im"
       << (oracle ? ",sigma_oracle" : "") << '\n';
  }
  for (const auto& e : t.entries) {
    if (with_a)
      os << format_double(t.a) << ',';
    os << e.k << ',' << format_double(e.gamma) << ',' << format_double(e.mu) << ','
       << format_double(e.sigma) << ',' << format_double(e.lambda.real()) << ','
       << format_double(e.lambda.imag());
    if (oracle)
      os << ',' << format_double(e.sigma_oracle.value_or(std::nan("")));
    os << '\n';
  }
}

void write_eigenfunction_csv(std::ostream& os, const ProlateFunction& pf, int grid_size) {
  if (grid_size < 2)
    throw DomainError(fmt::format("grid size {} must be at least 2", grid_size));
  os << "t,g,e\n";
  const int last = grid_size - 1;
  for (int j = 0; j < grid_size; ++j) {
    const double t = static_cast<double>(2 * j - last) / last;
    const double g = prolate_eval(pf, t);
    const double e = pf.a > 0.0 ? eigenfunction_on_big_interval(pf, pf.a * t) : g;
    os << format_double(t) << ',' << format_double(g) << ',' << format_double(e) << '\n';
  }
}

void write_asymptotic_csv(std::ostream& os, const AsymptoticReport& r, bool header) {
  if (header)
    os << "regime,index,a,computed,formula,ratio\n";
  for (const auto& row : r.rows)
    os << to_string(r.regime) << ',' << format_double(row.index) << ',' << format_double(row.a)
       << ',' << format_double(row.computed) << ',' << format_double(row.formula) << ','
       << format_double(row.ratio) << '\n';
}

void write_trace_csv(std::ostream& os, const TraceReport& r, bool header) {
  if (header)
    os << "a,sum_sigma,target,sum_sigma_sq,lower_bound,itz_sum,itz_bound,tail_estimate,"
          "trace_ok,square_bound_ok,itz_ok\n";
  os << format_double(r.a) << ',' << format_double(r.sum_sigma) << ','
     << format_double(r.target) << ',' << format_double(r.sum_sigma_sq) << ','
     << format_double(r.lower_bound) << ',' << format_double(r.itz_sum) << ','
     << format_double(r.itz_bound) << ',' << format_double(r.tail_estimate) << ','
     << r.trace_ok << ',' << r.square_bound_ok << ',' << r.itz_ok << '\n';
}

void write_plunge_csv(std::ostream& os, const PlungeReport& r, bool header) {
  if (header)
    os << "a,epsilon,n_above_eps,bound_above_eps,n_above_1m_eps,bound_above_1m_eps,n_middle,"
          "bound_middle,half_crossing,transition_lo,transition_hi\n";
  os << format_double(r.a) << ',' << format_double(r.epsilon) << ',' << r.n_above_eps << ','
     << format_double(r.bound_above_eps) << ',' << r.n_above_1m_eps << ','
     << format_double(r.bound_above_1m_eps) << ',' << r.n_middle << ','
     << format_double(r.bound_middle) << ',' << r.half_crossing << ','
     << format_double(r.transition_lo) << ',' << format_double(r.transition_hi) << '\n';
}

void write_net_csv(std::ostream& os, const NetReport& r, double a, bool header) {
  if (header)
    os << "a,domain,kappa,is_net,largest_gap,witness_re,witness_im\n";
  os << format_double(a) << ',' << to_string(r.domain) << ',' << format_double(r.kappa) << ','
     << r.is_net << ',' << format_double(r.largest_gap) << ','
     << format_double(r.witness.real()) << ',' << format_double(r.witness.imag()) << '\n';
}

void write_transition_csv(std::ostream& os, const TransitionPoint& p, bool header) {
  if (header)
    os << "a,b,k,sigma_limit,delta,predicted_sigma\n";
  os << format_double(p.a) << ',' << format_double(p.b) << ',' << p.k << ','
     << format_double(p.sigma_limit) << ',' << format_double(p.delta.value_or(std::nan(""))) << ','
     << format_double(p.delta ? transition_sigma(*p.delta) : std::nan("")) << '\n';
}

} // namespace prolate
