#pragma once

// Hecke eigenvalue and trace tables for the endoscopic and Eisenstein
// congruence examples, embedded as decimal strings. Columns not printed
// in the tables (elliptic eigenvalues) come from the q-expansion generator.

#include <lcrit/arith.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcrit {

/// coeff * p^exponent
struct Monomial {
  long coeff = 1;
  unsigned exponent = 0;
};

/// (sum of monomials in p) * column(p)
struct Term {
  std::string column;
  std::vector<Monomial> weight;
};

/// target(p) = trace(p) - sum of endoscopic terms
struct DerivationStep {
  std::string target;
  std::string trace;
  std::vector<Term> endoscopic;
};

struct CombinationRecipe {
  std::vector<Term> terms;
  Integer q;
  std::string expression;
};

struct Column {
  std::string label;
  std::map<std::uint32_t, Integer> values;
};

struct CongruenceDataset {
  int id = 0;
  std::string title;
  std::vector<std::uint32_t> primes;
  std::map<std::string, Column> printed;
  std::map<std::string, int> generated;  // column -> elliptic weight
  std::vector<DerivationStep> steps;
  CombinationRecipe recipe;
  std::map<std::uint32_t, std::string> printed_factorization;
  Integer extra_divisor = 1;  // every row is also divisible by this
};

namespace detail {

inline Column column(std::string label, const std::vector<std::uint32_t>& primes,
                     const std::vector<const char*>& values) {
  Column c;
  c.label = std::move(label);
  for (std::size_t i = 0; i < primes.size(); ++i) c.values[primes[i]] = Integer(values.at(i));
  return c;
}

inline Term term(std::string col, std::vector<Monomial> w) { return {std::move(col), std::move(w)}; }

inline CongruenceDataset example3() {
  CongruenceDataset d;
  d.id = 3;
  d.title = "SO(7) endoscopic congruence mod 71, l = 16, (j, k) = (4, 12)";
  d.primes = {2, 3, 5, 7, 11, 53};
  d.printed["a_p"] = column("a_p(f)", d.primes, {"216", "-3348", "52110", "2822456", "20586852", "6797151655902"});
  d.printed["lambda_F"] = column("lambda_F(p)", d.primes,
                                 {"-96", "-527688", "596139180", "-3608884496", "3047542095144",
                                  "-3921035060705523617268"});
  d.printed["trace"] = column("Tr T(p) on SO(7), mu = 10e1+6e2+2e3", d.primes,
                              {"6816", "-474120", "145932324", "49205357040", "3229012641000",
                               "-89346100795036491708"});
  d.printed["T"] = column("T(p)(Delta_25,15,5)", d.primes,
                          {"0", "867132", "-613050606", "5377223544", "-3134062555596",
                           "989150772174783875874"});
  d.generated["a_p"] = 16;
  d.steps = {{"T", "trace", {term("a_p", {{1, 5}}), term("lambda_F", {{1, 0}})}}};
  d.recipe = {{term("T", {{-1, 0}}), term("a_p", {{1, 5}}), term("lambda_F", {{1, 0}})},
              Integer(71),
              "-T(p)(Delta_25,15,5) + p^5 a_p(f) + lambda_F(p)"};
  d.printed_factorization = {{2, "2^5.3.71"},
                             {3, "-2^7.3^5.71"},
                             {5, "2^9.3.23.71.547"},
                             {7, "2^8.3^4.7^2.13.41.71"},
                             {11, "2^7.3.23.71.15145211"},
                             {53, "-2^9.3^3.71.73.1031.27990002153"}};
  return d;
}

inline CongruenceDataset example4() {
  CongruenceDataset d;
  d.id = 4;
  d.title = "SO(7) endoscopic congruence mod 61, l = 16, (j, k) = (6, 10)";
  d.primes = {2, 3, 5, 7, 11, 53};
  d.printed["lambda_F"] = column("lambda_F(p)", d.primes,
                                 {"1680", "-6120", "2718300", "6916898800", "-1417797110136",
                                  "-15111411349636553220"});
  d.printed["trace"] = column("Tr T(p) on SO(7), mu = 9e1+6e2+3e3", d.primes,
                              {"4416", "148104", "-89271276", "10652657232", "-764339838888",
                               "86535126376033794804"});
  d.printed["T"] = column("T(p)(Delta_23,15,7)", d.primes,
                          {"-720", "425412", "-124558326", "-3040958424", "352045171116",
                           "48013741730657079162"});
  d.generated["a_p"] = 16;
  d.steps = {{"T", "trace", {term("a_p", {{1, 4}}), term("lambda_F", {{1, 0}})}}};
  d.recipe = {{term("T", {{-1, 0}}), term("a_p", {{1, 4}}), term("lambda_F", {{1, 0}})},
              Integer(61),
              "-T(p)(Delta_23,15,7) + p^4 a_p(f) + lambda_F(p)"};
  d.printed_factorization = {{2, "2^5.3.61"},
                             {3, "-2^8.3^2.5.61"},
                             {5, "2^10.3.61.853"},
                             {7, "2^9.3^7.5.7^2.61"},
                             {11, "-2^8.3.5.7^2.31.61.4127"},
                             {53, "-2^10.3^3.5.17.61.66215793179"}};
  d.extra_divisor = 96;
  return d;
}

inline CongruenceDataset example5() {
  CongruenceDataset d;
  d.id = 5;
  d.title = "SO(9) Eisenstein congruence mod 17, l = 16, (j, k) = (4, 12)";
  d.primes = {2, 3, 5, 7};
  d.printed["trace_so7"] = column("Tr T(p) on SO(7)", d.primes, {"10176", "929988", "-36016170", "-40517568504"});
  d.printed["lambda_F"] = column("lambda_F(p) = T(p)(Delta_25,5)", d.primes,
                                 {"-96", "-527688", "596139180", "-3608884496"});
  d.printed["T19"] = column("T(p)(Delta_19)", d.primes, {"456", "50652", "-2377410", "-16917544"});
  d.printed["trace_pair"] = column("Tr T(p)(Delta^2_25,19,5)", d.primes,
                                   {"6624", "90072", "-334979100", "-31105966416"});
  d.printed["trace_so9"] = column("Tr T(p) on SO(9)", d.primes, {"5280", "889920", "-345413400", "-29042227200"});
  d.printed["T"] = column("T(p)(Delta_25,19,11,5)", d.primes, {"4800", "-302400", "-765121800", "29642547200"});
  d.generated["a_p"] = 16;
  d.generated["tau"] = 12;
  d.generated["T19"] = 20;
  d.steps = {{"trace_pair", "trace_so7", {term("T19", {{1, 3}}), term("lambda_F", {{1, 0}})}},
             {"T", "trace_so9", {term("trace_pair", {{1, 0}}), term("tau", {{2, 7}})}}};
  d.recipe = {{term("T", {{-1, 0}}), term("a_p", {{1, 3}, {1, 7}}), term("lambda_F", {{1, 0}})},
              Integer(17),
              "-T(p)(Delta_25,19,11,5) + (p^3 + p^7) a_p(f) + lambda_F(p)"};
  d.printed_factorization = {{2, "2^5.3^2.5.17"},
                             {3, "-2^8.3^3.5.13.17"},
                             {5, "2^10.3^2.5.17.53.131"},
                             {7, "2^9.3^3.5.7.17.191.1459"}};
  return d;
}

inline CongruenceDataset example6() {
  CongruenceDataset d;
  d.id = 6;
  d.title = "SO(9) endoscopic congruence mod 37, (j, k) = (8, 8) and (14, 7)";
  d.primes = {2, 3, 5, 7};
  d.printed["T"] = column("T(p)(Delta_25,21,15,9)", d.primes, {"-7200", "631200", "6175800", "25981995200"});
  d.printed["lambda_F"] = column("lambda_F(p) = T(p)(Delta_21,9)", d.primes,
                                 {"1344", "-6408", "-30774900", "451366384"});
  d.printed["lambda_G"] = column("lambda_G(p) = T(p)(Delta_25,15)", d.primes,
                                 {"-3696", "511272", "118996620", "-82574511536"});
  d.recipe = {{term("lambda_F", {{1, 2}}), term("lambda_G", {{1, 0}}), term("T", {{-1, 0}})},
              Integer(37),
              "p^2 lambda_F(p) + lambda_G(p) - T(p)(Delta_25,21,15,9)"};
  d.printed_factorization = {{2, "2^4.3.5.37"},
                             {3, "-2^6.3.5^2.37"},
                             {5, "-2^8.3.5.37.4621"},
                             {7, "-2^7.3^3.5.37.135197"}};
  return d;
}

}  // namespace detail

inline const std::vector<int>& builtin_example_ids() {
  static const std::vector<int> ids{3, 4, 5, 6};
  return ids;
}

inline CongruenceDataset builtin_table(int id) {
  switch (id) {
    case 3: return detail::example3();
    case 4: return detail::example4();
    case 5: return detail::example5();
    case 6: return detail::example6();
    default: throw DomainError("no built-in congruence table for example " + std::to_string(id) +
                               " (available: 3, 4, 5, 6)");
  }
}

}  // namespace lcrit
