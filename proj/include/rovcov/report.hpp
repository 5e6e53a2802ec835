#pragma once

// JSON and CSV emission for the command-line tool. Exact values travel as
// decimal strings {"num", "den"} next to a rounded "approx" rendering; the
// CSV form carries the same strings.

#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rovcov/plan.hpp"
#include "rovcov/rational_io.hpp"
#include "rovcov/simulate.hpp"

namespace rovcov::report {

inline constexpr const char* kToolName = "rovcov";
inline constexpr const char* kToolVersion = "1.0.0";

using nlohmann::ordered_json;

inline ordered_json exact_json(const Rational& v, int digits) {
  return ordered_json{{"num", boost::multiprecision::numerator(v).str()},
                      {"den", boost::multiprecision::denominator(v).str()},
                      {"approx", to_decimal(v, digits)}};
}

/// Inverse of exact_json; the approx field is ignored.
inline Rational exact_from_json(const ordered_json& j) {
  return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

inline ordered_json params_json(const Params& p) { return ordered_json{{"n", p.n}, {"m", p.m}, {"k", p.k}}; }

inline ordered_json metadata(const char* command) {
  return ordered_json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

inline ordered_json distribution_json(const CoverageDistribution& d, int digits) {
  ordered_json out = metadata("dist");
  out["scheme"] = to_string(d.scheme());
  out["params"] = params_json(d.params());
  ordered_json rows = ordered_json::array();
  for (const auto& [t, mass] : d.masses()) {
    ordered_json row{{"t", t}};
    row.update(exact_json(mass.value(), digits));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  out["mean"] = exact_json(d.mean(), digits);
  out["mode"] = d.mode();
  return out;
}

/// "num,den,approx"
inline std::string exact_fields(const Rational& v, int digits) {
  return boost::multiprecision::numerator(v).str() + "," + boost::multiprecision::denominator(v).str() + "," +
         to_decimal(v, digits);
}

inline std::string csv_line(const std::string& kind, const std::string& t, const Rational& v, int digits) {
  return kind + "," + t + "," + exact_fields(v, digits) + "\n";
}

inline std::string distribution_csv(const CoverageDistribution& d, int digits) {
  std::ostringstream os;
  os << "kind,t,num,den,approx\n";
  for (const auto& [t, mass] : d.masses()) os << csv_line("mass", std::to_string(t), mass.value(), digits);
  os << csv_line("mean", "", d.mean(), digits);
  return os.str();
}

struct SimulationReport {
  simulate::SimulationResult result;
  std::optional<Rational> total_variation;  // set when compared against the exact law
};

inline ordered_json simulation_json(const SimulationReport& r, int digits) {
  ordered_json out = metadata("simulate");
  out["scheme"] = to_string(r.result.scheme);
  out["params"] = params_json(r.result.params);
  out["trials"] = r.result.trials;
  out["seed"] = std::to_string(r.result.seed);
  ordered_json rows = ordered_json::array();
  for (const auto& [t, freq] : r.result.empirical()) {
    ordered_json row{{"t", t}, {"count", r.result.counts.at(t)}};
    row.update(exact_json(freq, digits));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  if (r.total_variation) out["total_variation"] = exact_json(*r.total_variation, digits);
  return out;
}

inline std::string simulation_csv(const SimulationReport& r, int digits) {
  std::ostringstream os;
  os << "kind,t,count,num,den,approx\n";
  for (const auto& [t, freq] : r.result.empirical()) {
    os << "freq," << t << "," << r.result.counts.at(t) << "," << exact_fields(freq, digits) << "\n";
  }
  if (r.total_variation) os << "total_variation,,," << exact_fields(*r.total_variation, digits) << "\n";
  return os.str();
}

struct PlanReport {
  plan::PlanQuery query;
  plan::PlanResult result;
};

inline ordered_json plan_json(const PlanReport& r, int digits) {
  ordered_json out = metadata("plan");
  out["scheme"] = to_string(r.query.scheme);
  out["query"] = ordered_json{{"n", r.query.n},
                              {"m", r.query.m},
                              {"t", r.query.t_min},
                              {"confidence", exact_json(r.query.confidence, digits)},
                              {"k_max", r.query.k_max}};
  out["feasible"] = r.result.feasible;
  if (r.result.feasible) {
    out["k"] = r.result.k;
    out["tail"] = exact_json(r.result.tail->value(), digits);
    if (r.result.tail_previous) out["tail_previous"] = exact_json(r.result.tail_previous->value(), digits);
  } else {
    out["infeasible"] = true;
    out["reason"] = r.result.reason;
    if (r.result.tail) out["tail_at_k_max"] = exact_json(r.result.tail->value(), digits);
  }
  out["evaluations"] = r.result.evaluations;
  return out;
}

inline std::string plan_csv(const PlanReport& r, int digits) {
  std::ostringstream os;
  os << "field,value,num,den,approx\n";
  os << "feasible," << (r.result.feasible ? "true" : "false") << ",,,\n";
  if (r.result.feasible) {
    os << "k," << r.result.k << ",,,\n";
    os << csv_line("tail", "", r.result.tail->value(), digits);
    if (r.result.tail_previous) os << csv_line("tail_previous", "", r.result.tail_previous->value(), digits);
  } else {
    os << "reason,\"" << r.result.reason << "\",,,\n";
    if (r.result.tail) os << csv_line("tail_at_k_max", "", r.result.tail->value(), digits);
  }
  return os.str();
}

}  // namespace rovcov::report
