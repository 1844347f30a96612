// lcrit: critical L-values, ratio identification and congruence tables.

#include <lcrit/lcrit.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { ok = 0, not_identified = 2, congruence_failed = 3, input_error = 4, numeric_failure = 5 };

struct Options {
  std::string case_id = "case3";
  std::vector<std::string> points;
  int pi_power = 8;
  unsigned precision = 40;
  unsigned guard = 10;
  std::vector<std::string> betas;
  std::string alpha = "1/1000";
  std::string nu = "3";
  std::string step = "1/5";
  std::string truncation = "29";
  std::uint32_t n_tail = 20000;
  std::uint64_t window = 500;
  std::vector<std::string> coeff_files;
  int example = 3;
  std::string den_bound = "1000000";
  std::string output = "text";
  unsigned threads = 0;
  // dumps
  std::string point = "1";
  std::string beta = "0";
  std::uint64_t n = 1;
  std::uint32_t count = 20;
  std::uint32_t prime = 2;
  std::string value, radius = "0";
  std::string integer;
};

lcrit::EvaluationConfig evaluation_config(const Options& o, const lcrit::CaseSpec& c) {
  lcrit::EvaluationConfig cfg;
  cfg.qp.nu = lcrit::parse_rational(o.nu);
  cfg.qp.step = lcrit::parse_rational(o.step);
  cfg.qp.truncation = lcrit::parse_rational(o.truncation);
  cfg.qp.digits = o.precision;
  cfg.qp.guard_digits = o.guard;
  cfg.qp.threads = o.threads;
  cfg.alpha = lcrit::parse_rational(o.alpha);
  if (!o.betas.empty()) {
    cfg.betas.clear();
    for (const auto& b : o.betas) cfg.betas.push_back(lcrit::parse_rational(b));
  } else if (!c.betas.empty()) {
    cfg.betas = c.betas;
  }
  cfg.n_tail = o.n_tail;
  cfg.window_limit = o.window;
  if (!lcrit::parse_integer(o.den_bound, cfg.den_bound)) throw lcrit::DomainError("bad --den-bound");
  return cfg;
}

std::vector<lcrit::SiegelEigenvalueTable> load_tables(const Options& o) {
  std::vector<lcrit::SiegelEigenvalueTable> out;
  for (const auto& f : o.coeff_files) out.push_back(lcrit::load_siegel_eigenvalues(f));
  return out;
}

int run_ratio(const Options& o) {
  const auto& c = lcrit::find_case(o.case_id);
  std::pair<lcrit::Rational, lcrit::Rational> pts;
  if (o.points.empty()) {
    pts = c.ratios.front();
  } else if (o.points.size() == 2) {
    pts = {lcrit::parse_rational(o.points[0]), lcrit::parse_rational(o.points[1])};
  } else {
    throw lcrit::DomainError("--points needs exactly two values");
  }
  auto fe = lcrit::case_functional_equation(c);
  lcrit::require_critical(fe, pts.first);
  lcrit::require_critical(fe, pts.second);
  auto cfg = evaluation_config(o, c);
  auto rep = lcrit::run_ratio(c, pts.first, pts.second, o.pi_power, load_tables(o), cfg);
  if (o.output == "structured") std::cout << lcrit::to_json(rep).dump(2) << "\n";
  else lcrit::print_text(std::cout, rep);
  return rep.identification.verdict == lcrit::Verdict::identified ? ok : not_identified;
}

int run_congruence(const Options& o) {
  auto rep = lcrit::verify_example(o.example);
  if (o.output == "structured") std::cout << lcrit::to_json(rep).dump(2) << "\n";
  else lcrit::print_text(std::cout, rep);
  return rep.pass() ? ok : congruence_failed;
}

int run_critical(const Options& o) {
  const auto& c = lcrit::find_case(o.case_id);
  auto fe = lcrit::case_functional_equation(c);
  nlohmann::json j{{"schema", lcrit::report_schema}, {"kind", "critical"}, {"case", c.id}};
  j["degree"] = fe.degree;
  j["motivic_weight"] = fe.weight;
  j["sign"] = fe.sign;
  j["hodge_points"] = fe.hodge.points;
  for (const auto& s : fe.shifts) j["gamma_shifts"].push_back(s.str());
  for (const auto& t : lcrit::critical_points(fe)) j["critical_points"].push_back(t.str());
  j["critical_points_motivic"] = lcrit::critical_points_motivic(fe);
  if (o.output == "structured") {
    std::cout << j.dump(2) << "\n";
    return ok;
  }
  std::cout << c.title << "\ndegree " << fe.degree << ", motivic weight " << fe.weight << ", sign "
            << (fe.sign > 0 ? "+1" : "-1") << "\nGamma factor:";
  for (const auto& s : fe.shifts) std::cout << " Gamma_C(s+" << s.str() << ")";
  std::cout << "\ncritical points (analytic):";
  for (const auto& t : lcrit::critical_points(fe)) std::cout << ' ' << t.str();
  std::cout << "\ncritical points (motivic):";
  for (long t : lcrit::critical_points_motivic(fe)) std::cout << ' ' << t;
  std::cout << "\n";
  return ok;
}

int run_coefficients(const Options& o) {
  const auto& c = lcrit::find_case(o.case_id);
  auto series = lcrit::case_series(c, load_tables(o), std::max<std::uint32_t>(o.count, 1));
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint32_t n = 1; n <= series.n_max(); ++n) {
    if (o.output == "structured")
      arr.push_back({{"n", n}, {"b", series.is_known(n) ? series.b[n].str() : "unknown"}});
    else
      std::cout << n << ' ' << (series.is_known(n) ? series.b[n].str() : "?") << "\n";
  }
  if (o.output == "structured")
    std::cout << nlohmann::json{{"schema", lcrit::report_schema}, {"kind", "coefficients"}, {"case", c.id},
                                {"coefficients", arr}}.dump(2)
              << "\n";
  return ok;
}

int run_factor(const Options& o) {
  const auto& c = lcrit::find_case(o.case_id);
  auto tables = load_tables(o);
  auto series = lcrit::case_series(c, tables, o.prime);  // validates the input
  (void)series;
  std::optional<lcrit::LocalFactor> f;
  if (c.l > 0) f = lcrit::hecke_local_factor(lcrit::elliptic_coefficients(c.l, o.prime).a[o.prime], o.prime, c.l);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& e = tables[i].at(o.prime);
    if (!e.lambda_p2) throw lcrit::DomainError("lambda(p^2) missing for p = " + std::to_string(o.prime));
    auto s = lcrit::spinor_local_factor(e.lambda_p, *e.lambda_p2, o.prime, c.siegel[i].j, c.siegel[i].k);
    f = f ? lcrit::tensor_local_factor(*f, s) : s;
  }
  std::cout << "p = " << o.prime << ", weight " << f->weight << ", coefficients of X^i:";
  for (const auto& x : f->c) std::cout << ' ' << x;
  std::cout << "\n";
  return ok;
}

int run_afe(const Options& o) {
  const auto& c = lcrit::find_case(o.case_id);
  auto fe = lcrit::case_functional_equation(c);
  auto cfg = evaluation_config(o, c);
  auto s0 = lcrit::parse_rational(o.point);
  auto value = lcrit::afe_coefficient(fe, {cfg.alpha, lcrit::parse_rational(o.beta)}, s0, o.n, cfg.qp);
  std::cout << value.str(static_cast<std::streamsize>(o.precision)) << "\n";
  return ok;
}

int run_identify(const Options& o) {
  lcrit::ScopedPrecision prec(std::max<unsigned>(o.precision, static_cast<unsigned>(o.value.size()) + 10));
  lcrit::Integer bound;
  if (!lcrit::parse_integer(o.den_bound, bound)) throw lcrit::DomainError("bad --den-bound");
  lcrit::Real v, r;
  try {
    v = lcrit::Real(o.value);
    r = lcrit::Real(o.radius);
  } catch (const std::exception&) {
    throw lcrit::DomainError("cannot parse value or radius");
  }
  auto id = lcrit::identify_rational(v, r, bound);
  if (o.output == "structured") {
    std::cout << nlohmann::json{{"schema", lcrit::report_schema},
                                {"kind", "identification"},
                                {"identification", lcrit::identification_json(id, o.precision)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << lcrit::verdict_name(id.verdict);
    if (id.candidate) std::cout << ' ' << lcrit::rational_str(*id.candidate) << " = " << lcrit::ratio_factorization(id);
    if (id.rival) std::cout << " (also in interval: " << lcrit::rational_str(*id.rival) << ")";
    std::cout << "\n";
  }
  return id.verdict == lcrit::Verdict::identified ? ok : not_identified;
}

int run_factorize(const Options& o) {
  lcrit::Integer n;
  if (!lcrit::parse_integer(o.integer, n) || n < 1) throw lcrit::DomainError("factorize needs a positive integer");
  auto f = lcrit::factorize(n);
  std::cout << n << " = " << f.str() << (f.certified ? "" : "  (probable primes)") << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical values of tensor-product L-functions and Hecke eigenvalue congruences"};
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--case", o.case_id, "case1, case2, case3, deg16 or delta")->capture_default_str();
  app.add_option("--points", o.points, "two analytic evaluation points, e.g. 1,3")->delimiter(',');
  app.add_option("--pi-power", o.pi_power, "m in pi^m L(t1)/L(t2)")->capture_default_str();
  app.add_option("--precision", o.precision, "target decimal digits D")->check(CLI::Range(5u, 2000u))->capture_default_str();
  app.add_option("--guard", o.guard, "guard digits")->capture_default_str();
  app.add_option("--betas", o.betas, "test-function parameters beta_j, e.g. 0,1/2,1,3/2")->delimiter(',');
  app.add_option("--alpha", o.alpha, "test-function alpha")->capture_default_str();
  app.add_option("--nu", o.nu, "contour abscissa")->capture_default_str();
  app.add_option("--step", o.step, "quadrature step h")->capture_default_str();
  app.add_option("--truncation", o.truncation, "contour cut-off T")->capture_default_str();
  app.add_option("--n-tail", o.n_tail, "number of AFE coefficients")->capture_default_str();
  app.add_option("--window", o.window, "largest unknown prime in the weight objective")->capture_default_str();
  app.add_option("--coeff-file", o.coeff_files, "Siegel eigenvalue file (repeat for two factors)");
  app.add_option("--example", o.example, "congruence example 3, 4, 5 or 6")->capture_default_str();
  app.add_option("--den-bound", o.den_bound, "largest denominator for identification")->capture_default_str();
  app.add_option("--output", o.output, "text or structured")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();

  auto* ratio = app.add_subcommand("ratio", "pi^m L(t1)/L(t2) with rational identification");
  auto* congruence = app.add_subcommand("congruence", "verify a congruence table");
  auto* critical = app.add_subcommand("critical", "gamma factor, sign and critical points of a case");
  auto* coefficients = app.add_subcommand("coefficients", "Dirichlet coefficients of a case");
  coefficients->add_option("--count", o.count, "number of coefficients")->capture_default_str();
  auto* factor = app.add_subcommand("factor", "local Euler factor of a case at a prime");
  factor->add_option("--prime", o.prime, "prime p")->required();
  auto* afe = app.add_subcommand("afe", "one AFE coefficient c_beta(n)");
  afe->add_option("--point", o.point, "evaluation point s0")->capture_default_str();
  afe->add_option("--beta", o.beta, "beta")->capture_default_str();
  afe->add_option("--n", o.n, "index n")->capture_default_str();
  auto* identify = app.add_subcommand("identify", "identify value +- radius as a rational");
  identify->add_option("value", o.value, "decimal value")->required();
  identify->add_option("radius", o.radius, "error radius")->capture_default_str();
  auto* factorize = app.add_subcommand("factorize", "factor a positive integer");
  factorize->add_option("n", o.integer, "integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*ratio) return run_ratio(o);
    if (*congruence) return run_congruence(o);
    if (*critical) return run_critical(o);
    if (*coefficients) return run_coefficients(o);
    if (*factor) return run_factor(o);
    if (*afe) return run_afe(o);
    if (*identify) return run_identify(o);
    if (*factorize) return run_factorize(o);
  } catch (const lcrit::PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return numeric_failure;
  } catch (const lcrit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const lcrit::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return ok;
}
