#pragma once

// Text and structured (JSON) rendering of ratio and congruence reports.
// Structured output schema: "lcrit.report/1", see README.

#include <lcrit/cases.hpp>
#include <lcrit/congruence.hpp>

#include <nlohmann/json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace lcrit {

inline constexpr const char* report_schema = "lcrit.report/1";

inline std::string real_str(const Real& x, unsigned digits) { return x.str(static_cast<std::streamsize>(digits)); }

inline std::string ratio_factorization(const RationalIdentification& r) {
  if (!r.candidate) return "";
  std::string s = r.numerator.str();
  if (mp::denominator(*r.candidate) != 1) s += " / " + r.denominator.str();
  return s;
}

inline nlohmann::json parameters_json(const EvaluationConfig& cfg) {
  nlohmann::json betas = nlohmann::json::array();
  for (const auto& b : cfg.betas) betas.push_back(rational_str(b));
  return {{"nu", rational_str(cfg.qp.nu)},
          {"h", rational_str(cfg.qp.step)},
          {"T", rational_str(cfg.qp.truncation)},
          {"digits", cfg.qp.digits},
          {"guard_digits", cfg.qp.guard_digits},
          {"alpha", rational_str(cfg.alpha)},
          {"betas", betas},
          {"n_tail", cfg.n_tail},
          {"window_limit", cfg.window_limit},
          {"den_bound", cfg.den_bound.str()}};
}

inline nlohmann::json identification_json(const RationalIdentification& r, unsigned digits) {
  nlohmann::json j{{"value", real_str(r.value, digits)},
                   {"radius", real_str(r.radius, 3)},
                   {"den_bound", r.den_bound.str()},
                   {"verdict", verdict_name(r.verdict)}};
  if (r.candidate) {
    j["candidate"] = rational_str(*r.candidate);
    j["numerator_factors"] = r.numerator.str();
    j["denominator_factors"] = r.denominator.str();
    j["certified"] = r.numerator.certified && r.denominator.certified;
  }
  if (r.rival) j["rival"] = rational_str(*r.rival);
  return j;
}

inline nlohmann::json to_json(const RatioReport& rep) {
  const unsigned d = rep.config.qp.digits;
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& s : rep.fe.shifts) shifts.push_back(s.str());
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : critical_points(rep.fe)) crit.push_back(c.str());
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : rep.points) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : p.weights.weights) w.push_back(real_str(x, d));
    points.push_back({{"t", rational_str(p.point)},
                      {"value", real_str(p.result.value, d)},
                      {"radius", real_str(p.result.radius, 3)},
                      {"radius_parts",
                       {{"unknown_and_tail", real_str(p.result.radius - p.result.rounding - p.result.discretisation, 3)},
                        {"rounding", real_str(p.result.rounding, 3)},
                        {"discretisation", real_str(p.result.discretisation, 3)}}},
                      {"weights", w},
                      {"objective", real_str(p.weights.objective, 6)},
                      {"window_size", p.weights.window.size()},
                      {"singular_fallback", p.weights.singular},
                      {"known_coefficients", p.result.known_count},
                      {"unknown_coefficients", p.result.unknown_count},
                      {"working_digits", p.working_digits},
                      {"truncation", rational_str(p.truncation)}});
  }
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : rep.hits)
    hits.push_back({{"prime", h.prime.str()},
                    {"expected", side_name(h.expected)},
                    {"found", side_name(h.found)},
                    {"hit", h.hit()}});
  return {{"schema", report_schema},
          {"kind", "ratio"},
          {"case", rep.case_id},
          {"title", rep.title},
          {"degree", rep.fe.degree},
          {"motivic_weight", rep.fe.weight},
          {"gamma_shifts", shifts},
          {"sign", rep.fe.sign},
          {"critical_points", crit},
          {"parameters", parameters_json(rep.config)},
          {"pi_power", rep.pi_power},
          {"t1", rational_str(rep.t1)},
          {"t2", rational_str(rep.t2)},
          {"known_primes_up_to", rep.known_primes_up_to},
          {"points", points},
          {"ratio", real_str(rep.ratio, d)},
          {"ratio_radius", real_str(rep.ratio_radius, 3)},
          {"identification", identification_json(rep.identification, d)},
          {"predictions", hits}};
}

inline void print_text(std::ostream& os, const RatioReport& rep) {
  const unsigned d = rep.config.qp.digits;
  os << rep.title << " [" << rep.case_id << "]\n";
  os << "degree " << rep.fe.degree << ", weight " << rep.fe.weight << ", sign " << (rep.fe.sign > 0 ? "+1" : "-1")
     << ", gamma shifts";
  for (const auto& s : rep.fe.shifts) os << ' ' << s.str();
  os << "\ncritical points:";
  for (const auto& c : critical_points(rep.fe)) os << ' ' << c.str();
  const auto& cfg = rep.config;
  os << "\nnu = " << rational_str(cfg.qp.nu) << ", h = " << rational_str(cfg.qp.step)
     << ", T = " << rational_str(cfg.qp.truncation) << ", D = " << cfg.qp.digits << " (+" << cfg.qp.guard_digits
     << "), alpha = " << rational_str(cfg.alpha) << ", N = " << cfg.n_tail << ", betas =";
  for (const auto& b : cfg.betas) os << ' ' << rational_str(b);
  os << "\nknown local factors: p <= " << rep.known_primes_up_to << "\n\n";
  for (const auto& p : rep.points) {
    os << "L(" << rational_str(p.point) << ") = " << real_str(p.result.value, d) << " +- "
       << real_str(p.result.radius, 2) << "\n";
    os << "  weights:";
    for (const auto& w : p.weights.weights) os << ' ' << real_str(w, 10);
    if (p.weights.singular) os << "  (minimum-norm fallback)";
    os << "\n  T used " << rational_str(p.truncation) << ", working digits " << p.working_digits << "\n";
  }
  os << "\npi^" << rep.pi_power << " L(" << rational_str(rep.t1) << ") / L(" << rational_str(rep.t2)
     << ") = " << real_str(rep.ratio, d) << " +- " << real_str(rep.ratio_radius, 2) << "\n";
  const auto& id = rep.identification;
  os << "identification: " << verdict_name(id.verdict);
  if (id.candidate) os << ", " << rational_str(*id.candidate) << " = " << ratio_factorization(id);
  if (id.rival) os << " (also in interval: " << rational_str(*id.rival) << ")";
  os << "\n";
  for (const auto& h : rep.hits)
    os << "  predicted " << h.prime << " in " << side_name(h.expected) << ": "
       << (h.hit() ? "hit" : std::string("miss (") + side_name(h.found) + ")") << "\n";
  if (id.verdict != Verdict::identified && !rep.predictions.empty())
    os << "  predictions not checked (ratio not identified)\n";
}

inline nlohmann::json to_json(const CongruenceReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"example", rep.dataset.id},
                    {"p", r.p},
                    {"value", r.value.str()},
                    {"factorization", r.factorization.str()},
                    {"q", rep.dataset.recipe.q.str()},
                    {"pass", r.divisible && r.matches_printed && r.extra_divisible}});
  nlohmann::json mism = nlohmann::json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"example", m.example}, {"p", m.p}, {"what", m.what}, {"expected", m.expected}, {"got", m.got}});
  return {{"schema", report_schema},
          {"kind", "congruence"},
          {"example", rep.dataset.id},
          {"title", rep.dataset.title},
          {"combination", rep.dataset.recipe.expression},
          {"q", rep.dataset.recipe.q.str()},
          {"rows", rows},
          {"mismatches", mism},
          {"pass", rep.pass()}};
}

inline void print_text(std::ostream& os, const CongruenceReport& rep) {
  const auto& d = rep.dataset;
  os << "Example " << d.id << ": " << d.title << "\n";
  os << "combination: " << d.recipe.expression << ", q = " << d.recipe.q << "\n\n";
  std::vector<std::string> names;
  for (const auto& [name, col] : rep.columns) names.push_back(name);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"p"};
  for (const auto& n : names) header.push_back(n);
  header.push_back("combination");
  header.push_back("factorization");
  header.push_back("q | value");
  cells.push_back(header);
  for (const auto& r : rep.rows) {
    std::vector<std::string> row{std::to_string(r.p)};
    for (const auto& n : names) row.push_back(rep.columns.at(n).at(r.p).str());
    row.push_back(r.value.str());
    row.push_back(r.factorization.str());
    row.push_back(r.divisible ? "yes" : "NO");
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    os << "\n";
  }
  for (const auto& m : rep.mismatches) os << "MISMATCH " << m.str() << "\n";
  os << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace lcrit
