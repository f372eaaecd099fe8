#ifndef PROLATE_REPORT_IO_HPP
#define PROLATE_REPORT_IO_HPP

#include "prolate/asymptotics.hpp"
#include "prolate/spectral_analysis.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace prolate {

// CSV: '.' decimal point, ',' separator, header row, LF line endings,
// 17 significant digits. JSON numbers use the shortest representation that
// round-trips to the same binary64 value.

std::string format_double(double x);

nlohmann::json to_json(const SpectrumTable& t);
nlohmann::json to_json(const TraceReport& r);
nlohmann::json to_json(const PlungeReport& r);
nlohmann::json to_json(const NetReport& r);
nlohmann::json to_json(const AsymptoticReport& r);
nlohmann::json to_json(const TransitionPoint& p);

TraceReport trace_report_from_json(const nlohmann::json& j);
PlungeReport plunge_report_from_json(const nlohmann::json& j);
NetReport net_report_from_json(const nlohmann::json& j);

/// Columns k,gamma,mu,sigma,lambda_re,lambda_im[,sigma_oracle], prefixed by
/// a when `with_a` is set.
void write_spectrum_csv(std::ostream& os, const SpectrumTable& t, bool header, bool with_a);

/// Columns t,g,e on a uniform grid over [-1,1]: g_k(t,a) and e_k(a t, a).
void write_eigenfunction_csv(std::ostream& os, const ProlateFunction& pf, int grid_size);

void write_asymptotic_csv(std::ostream& os, const AsymptoticReport& r, bool header);
void write_trace_csv(std::ostream& os, const TraceReport& r, bool header);
void write_plunge_csv(std::ostream& os, const PlungeReport& r, bool header);
void write_net_csv(std::ostream& os, const NetReport& r, double a, bool header);
void write_transition_csv(std::ostream& os, const TransitionPoint& p, bool header);

} // namespace prolate

#endif
