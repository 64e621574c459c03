#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "depot_roster/errors.hpp"
#include "depot_roster/model.hpp"
#include "depot_roster/trace.hpp"

namespace depot_roster {

/// Relative hourly load: overnight trough, morning peak at 10:00 and evening
/// peak at 18:00.
inline constexpr std::array<double, kHoursPerDay> kDailyProfile = {
    0.15, 0.10, 0.10, 0.10, 0.15, 0.25, 0.40, 0.60, 0.80, 0.95, 1.00, 0.90,
    0.70, 0.60, 0.60, 0.65, 0.75, 0.90, 1.00, 0.95, 0.80, 0.60, 0.40, 0.25,
};

/// demand[d][h] = round(peak * profile(h) * (1 + u)), u ~ U[-noise, +noise],
/// clamped at zero. Draws are taken day by day, hour by hour.
inline ProblemInstance generate_instance(std::uint64_t seed, int days, int regular_pool,
                                         double peak_demand, double noise_fraction) {
  if (days < 1) throw contract_error("days must be at least 1");
  if (regular_pool < 0) throw contract_error("regular_pool must be non-negative");
  if (!(peak_demand >= 0.0) || !std::isfinite(peak_demand)) {
    throw contract_error("peak_demand must be a non-negative number");
  }
  if (!(noise_fraction >= 0.0 && noise_fraction <= 1.0)) {
    throw contract_error("noise_fraction must lie in [0, 1]");
  }
  auto inst = make_instance(days, regular_pool);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-noise_fraction, noise_fraction);
  for (int d = 0; d < days; ++d) {
    for (int h = 0; h < kHoursPerDay; ++h) {
      const double u = noise_fraction > 0.0 ? noise(rng) : 0.0;
      const double v = std::round(peak_demand * kDailyProfile[h] * (1.0 + u));
      inst.demand[d][h] = static_cast<int>(std::max(0.0, v));
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// File formats. Instances and solutions are JSON documents with named
// fields; traces are CSV.

namespace detail {

using nlohmann::json;

inline json read_json(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + std::string(what) + " file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw io_error("write failed for " + path.string());
}

template <class T>
T get_field(const json& doc, const char* field) {
  if (!doc.contains(field)) throw parse_error(std::string("missing field '") + field + "'");
  try {
    return doc.at(field).get<T>();
  } catch (const json::exception&) {
    throw parse_error(std::string("field '") + field + "' has the wrong type");
  }
}

inline int get_int(const json& doc, const char* field) {
  if (!doc.contains(field)) throw parse_error(std::string("missing field '") + field + "'");
  if (!doc.at(field).is_number_integer()) {
    throw parse_error(std::string("field '") + field + "' must be an integer");
  }
  return doc.at(field).get<int>();
}

}  // namespace detail

inline std::string instance_to_json(const ProblemInstance& inst) {
  using nlohmann::json;
  json doc;
  doc["days"] = inst.days;
  doc["regular_pool"] = inst.regular_pool;
  json shifts = json::array();
  for (const auto& iv : inst.catalog.shifts()) shifts.push_back({iv.start, iv.end});
  doc["shifts"] = shifts;
  doc["regular_rate"] = inst.params.regular_rate;
  doc["temp_rate"] = inst.params.temp_rate;
  doc["attendance_cap"] = inst.params.attendance_cap;
  doc["demand"] = inst.demand;
  return doc.dump(1) + "\n";
}

/// Parses an instance document. Missing shift or efficiency fields fall back
/// to the standard values and add a message to `warnings`.
inline ProblemInstance instance_from_json(const nlohmann::json& doc, std::vector<std::string>& warnings) {
  using detail::get_int;
  if (!doc.is_object()) throw parse_error("instance must be a JSON object");
  ProblemInstance inst;
  inst.days = get_int(doc, "days");
  inst.regular_pool = get_int(doc, "regular_pool");

  if (doc.contains("shifts")) {
    const auto& arr = doc.at("shifts");
    if (!arr.is_array()) throw parse_error("field 'shifts' must be an array");
    std::vector<ShiftInterval> shifts;
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const auto& iv = arr[t];
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() || !iv[1].is_number_integer()) {
        throw parse_error("shifts[" + std::to_string(t) + "]: expected [start, end] hours");
      }
      shifts.push_back({iv[0].get<int>(), iv[1].get<int>()});
    }
    try {
      inst.catalog = ShiftCatalog(std::move(shifts));
    } catch (const contract_error& e) {
      throw parse_error(std::string("field 'shifts': ") + e.what());
    }
  } else {
    warnings.push_back("field 'shifts' missing; using the standard six-shift catalog");
  }

  const EfficiencyParams defaults;
  auto rate = [&](const char* field, int fallback) {
    if (doc.contains(field)) return get_int(doc, field);
    warnings.push_back(std::string("field '") + field + "' missing; using default " +
                       std::to_string(fallback));
    return fallback;
  };
  inst.params.regular_rate = rate("regular_rate", defaults.regular_rate);
  inst.params.temp_rate = rate("temp_rate", defaults.temp_rate);
  if (doc.contains("attendance_cap")) {
    if (!doc.at("attendance_cap").is_number()) throw parse_error("field 'attendance_cap' must be a number");
    inst.params.attendance_cap = doc.at("attendance_cap").get<double>();
  } else {
    warnings.push_back("field 'attendance_cap' missing; using default 0.85");
  }

  if (!doc.contains("demand")) throw parse_error("missing field 'demand'");
  const auto& rows = doc.at("demand");
  if (!rows.is_array()) throw parse_error("field 'demand' must be an array of rows");
  for (std::size_t d = 0; d < rows.size(); ++d) {
    const auto& row = rows[d];
    if (!row.is_array()) throw parse_error("demand[" + std::to_string(d) + "] must be an array");
    if (row.size() != kHoursPerDay) {
      throw parse_error("demand[" + std::to_string(d) + "]: expected 24 hourly values, got " +
                        std::to_string(row.size()));
    }
    std::vector<int> values;
    for (std::size_t h = 0; h < row.size(); ++h) {
      if (!row[h].is_number_integer()) {
        throw parse_error("demand[" + std::to_string(d) + "][" + std::to_string(h) + "] must be an integer");
      }
      values.push_back(row[h].get<int>());
    }
    inst.demand.push_back(std::move(values));
  }

  if (auto problems = validate_instance(inst, /*allow_custom_catalog=*/true); !problems.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw validation_error(msg);
  }
  return inst;
}

inline ProblemInstance read_instance(const std::filesystem::path& path, std::vector<std::string>& warnings) {
  const auto doc = detail::read_json(path, "instance");
  try {
    return instance_from_json(doc, warnings);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

inline ProblemInstance read_instance(const std::filesystem::path& path) {
  std::vector<std::string> ignored;
  return read_instance(path, ignored);
}

inline void write_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
  detail::write_text(path, instance_to_json(inst));
}

/// Objective and dimensions, then for every (day, shift) the ascending regular
/// worker ids and the temp count.
inline std::string solution_to_json(const Solution& sol) {
  using nlohmann::json;
  json doc;
  doc["objective"] = sol.objective;
  doc["days"] = sol.roster.days();
  doc["shifts"] = sol.roster.shifts();
  doc["regular_pool"] = sol.roster.workers();
  json schedule = json::array();
  for (int d = 0; d < sol.roster.days(); ++d) {
    for (int t = 0; t < sol.roster.shifts(); ++t) {
      std::vector<int> ids;
      for (int s = 0; s < sol.roster.workers(); ++s) {
        if (sol.roster.at(d, t, s)) ids.push_back(s);
      }
      const int temps = sol.temps.at(d, t);
      if (ids.empty() && temps == 0) continue;
      schedule.push_back({{"day", d}, {"shift", t}, {"workers", ids}, {"temps", temps}});
    }
  }
  doc["assignments"] = schedule;
  return doc.dump(1) + "\n";
}

inline Solution solution_from_json(const nlohmann::json& doc) {
  using detail::get_int;
  if (!doc.is_object()) throw parse_error("solution must be a JSON object");
  Solution sol;
  if (!doc.contains("objective") || !doc.at("objective").is_number_integer()) {
    throw parse_error("field 'objective' must be an integer");
  }
  sol.objective = doc.at("objective").get<long>();
  const int days = get_int(doc, "days");
  const int shifts = get_int(doc, "shifts");
  const int workers = get_int(doc, "regular_pool");
  if (days < 0 || shifts < 1 || workers < 0) throw parse_error("solution dimensions out of range");
  sol.roster = RegularRoster(days, shifts, workers);
  sol.temps = TempPlan(days, shifts);

  if (!doc.contains("assignments") || !doc.at("assignments").is_array()) {
    throw parse_error("field 'assignments' must be an array");
  }
  const auto& entries = doc.at("assignments");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where = "assignments[" + std::to_string(i) + "]";
    try {
      const int d = get_int(e, "day");
      const int t = get_int(e, "shift");
      if (d < 0 || d >= days || t < 0 || t >= shifts) throw parse_error("day or shift out of range");
      const int temps = get_int(e, "temps");
      if (temps < 0) throw parse_error("negative temp count");
      sol.temps.add(d, t, temps);
      for (int s : detail::get_field<std::vector<int>>(e, "workers")) {
        if (s < 0 || s >= workers) throw parse_error("worker id " + std::to_string(s) + " out of range");
        sol.roster.set(d, t, s);
      }
    } catch (const parse_error& err) {
      throw parse_error(where + ": " + err.what());
    }
  }
  return sol;
}

inline void write_solution(const Solution& sol, const std::filesystem::path& path) {
  detail::write_text(path, solution_to_json(sol));
}

inline Solution read_solution(const std::filesystem::path& path) {
  const auto doc = detail::read_json(path, "solution");
  try {
    return solution_from_json(doc);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

inline constexpr const char* kTraceHeader = "iteration,evaluations,best_objective,elapsed_ms";

inline std::string trace_to_csv(const ConvergenceTrace& trace) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (const auto& r : trace) {
    out << r.iteration << ',' << r.evaluations << ',' << r.best_objective << ',' << r.elapsed_ms << '\n';
  }
  return out.str();
}

inline void write_trace(const ConvergenceTrace& trace, const std::filesystem::path& path) {
  detail::write_text(path, trace_to_csv(trace));
}

inline ConvergenceTrace read_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open trace file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw parse_error(path.string() + ": line 1: expected header '" + kTraceHeader + "'");
  }
  ConvergenceTrace trace;
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    TraceRecord r;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream row(line);
    if (!(row >> r.iteration >> c1 >> r.evaluations >> c2 >> r.best_objective >> c3 >> r.elapsed_ms) ||
        c1 != ',' || c2 != ',' || c3 != ',') {
      throw parse_error(path.string() + ": line " + std::to_string(lineno) + ": expected 4 integers");
    }
    trace.push_back(r);
  }
  return trace;
}

}  // namespace depot_roster
