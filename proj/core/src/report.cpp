#include "liargame/report.hpp"

#include <json.hpp>

namespace liargame {

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["lies"] = lies;
  j["l"] = l;
  j["l_plus"] = l_plus;
  j["l_hat"] = l_hat;
  j["l_tilde"] = l_tilde ? nlohmann::ordered_json(*l_tilde)
                         : nlohmann::ordered_json(nullptr);
  j["theorem2_applicable"] = theorem2_applicable;
  j["theorem2_value"] = theorem2_value ? nlohmann::ordered_json(*theorem2_value)
                                       : nlohmann::ordered_json(nullptr);
  j["exact"] = exact ? nlohmann::ordered_json(*exact) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

std::string BoundReport::csv_header() {
  return "n,k,lies,l,l_plus,l_hat,l_tilde,theorem2_applicable,theorem2_value,exact";
}

std::string BoundReport::to_csv_row() const {
  std::string row = std::to_string(n) + ',' + std::to_string(k) + ',' +
                    std::to_string(lies) + ',' + std::to_string(l) + ',' +
                    std::to_string(l_plus) + ',' + std::to_string(l_hat) + ',';
  if (l_tilde) row += std::to_string(*l_tilde);
  row += ',';
  row += theorem2_applicable ? "true" : "false";
  row += ',';
  if (theorem2_value) row += std::to_string(*theorem2_value);
  row += ',';
  if (exact) row += std::to_string(*exact);
  return row;
}

BoundReport make_bound_report(std::int64_t n, std::int64_t k, int lies,
                              Solver& solver, const ReportOptions& options) {
  require_restricted_domain(n, k);

  BoundReport report;
  report.n = n;
  report.k = k;
  report.lies = lies;

  const auto basic_cap = [&](std::int64_t total) {
    return options.shared_basic_cap > 0
               ? std::max(options.shared_basic_cap, total)
               : std::max<std::int64_t>(total, 1);
  };
  BasicValueFn basic = [&](int sub_lies, std::int64_t m) {
    return solver.value(start_state(sub_lies, m), Params{sub_lies, basic_cap(m)});
  };
  BasicStateValueFn basic_state = [&](int sub_lies, const GameState& s) {
    return solver.value(s, Params{sub_lies, basic_cap(s.total())});
  };

  report.l = bound_l(n, k, lies, basic);
  report.l_plus = bound_l_plus(n, k, lies, basic);
  report.l_hat = bound_l_hat(n, k, lies);
  if (options.with_l_tilde)
    report.l_tilde = bound_l_tilde(n, k, lies, basic_state);

  if (lies >= 1) {
    const LargeNExact t2 = large_n_exact(n, k, lies);
    report.theorem2_applicable = t2.applicable;
    if (t2.applicable) report.theorem2_value = t2.value;
  }

  if (options.with_exact && n <= options.exact_max_total)
    report.exact = solver.value(start_state(lies, n), Params{lies, k});

  return report;
}

}  // namespace liargame
