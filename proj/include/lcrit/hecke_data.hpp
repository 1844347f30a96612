#pragma once

// Hecke eigenvalue inputs: level-one elliptic eigenforms generated from
// q-expansions, Siegel eigenvalue files, and the embedded congruence tables.

#include <lcrit/arith.hpp>
#include <lcrit/primes.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lcrit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Normalised level-one cusp eigenform of the given weight. `a[n]` is the
/// n-th Fourier coefficient for 1 <= n <= n_max; a[0] is unused and zero.
struct EllipticEigenform {
  int weight = 0;
  std::vector<Integer> a;

  std::uint32_t n_max() const { return static_cast<std::uint32_t>(a.size() - 1); }
  const Integer& coefficient(std::uint32_t n) const { return a.at(n); }
};

namespace detail {

/// Coefficients 0..n-1 of prod_{m>=1} (1 - q^m)^24, via Jacobi's identity for
/// the cube of the Euler product (a sparse series) raised to the 8th power.
inline std::vector<Integer> eta24(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, long>> cube;  // (exponent, coefficient)
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t e = k * (k + 1) / 2;
    if (e >= n) break;
    cube.emplace_back(static_cast<std::uint32_t>(e), (k % 2 ? -1L : 1L) * long(2 * k + 1));
  }
  std::vector<Integer> series(n, 0);
  series[0] = 1;
  std::vector<Integer> next(n);
  for (int round = 0; round < 8; ++round) {
    for (auto& x : next) x = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (series[i] == 0) continue;
      for (const auto& [e, c] : cube) {
        if (i + e >= n) break;
        next[i + e] += series[i] * c;
      }
    }
    series.swap(next);
  }
  return series;
}

/// sigma_k(n) for 0 <= n <= n_max (index 0 unused).
inline std::vector<Integer> divisor_sigma(unsigned k, std::uint32_t n_max) {
  std::vector<Integer> s(n_max + 1, 0);
  for (std::uint32_t d = 1; d <= n_max; ++d) {
    Integer dk = ipow(long(d), k);
    for (std::uint32_t m = d; m <= n_max; m += d) s[m] += dk;
  }
  return s;
}

/// Eisenstein series E_k = 1 + c * sum sigma_{k-1}(n) q^n for the weights
/// where M_k is one-dimensional.
inline std::vector<Integer> eisenstein(int k, std::uint32_t n_max) {
  long c = 0;
  switch (k) {
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    case 10: c = -264; break;
    case 14: c = -24; break;
    default: throw DomainError("no one-dimensional Eisenstein space of weight " + std::to_string(k));
  }
  auto sigma = divisor_sigma(static_cast<unsigned>(k - 1), n_max);
  std::vector<Integer> e(n_max + 1);
  e[0] = 1;
  for (std::uint32_t n = 1; n <= n_max; ++n) e[n] = sigma[n] * c;
  return e;
}

}  // namespace detail

inline bool is_supported_elliptic_weight(int weight) {
  switch (weight) {
    case 12: case 16: case 18: case 20: case 22: case 26: return true;
    default: return false;
  }
}

/// a_1..a_{n_max} of the unique normalised cusp eigenform of weight
/// `weight` in {12, 16, 18, 20, 22, 26}, as Delta * E_{weight-12}.
///
/// Only prime-index coefficients are obtained by convolution; prime powers
/// follow from the Hecke recursion and the rest from multiplicativity.
inline EllipticEigenform elliptic_coefficients(int weight, std::uint32_t n_max) {
  if (!is_supported_elliptic_weight(weight))
    throw DomainError("unsupported weight " + std::to_string(weight) +
                      ": the level-one cusp space is not one-dimensional");
  if (n_max < 1) throw DomainError("n_max must be at least 1");

  // tau(m) for 1 <= m <= n_max.
  std::vector<Integer> tau(n_max + 1, 0);
  {
    auto e = detail::eta24(n_max);
    for (std::uint32_t m = 1; m <= n_max; ++m) tau[m] = e[m - 1];
  }
  std::vector<Integer> eis;
  if (weight > 12) eis = detail::eisenstein(weight - 12, n_max);

  Sieve sieve(std::max<std::uint32_t>(n_max, 2));
  EllipticEigenform f;
  f.weight = weight;
  f.a.assign(n_max + 1, 0);
  f.a[1] = 1;
  for (std::uint32_t p : sieve.primes()) {
    if (p > n_max) break;
    if (weight == 12) {
      f.a[p] = tau[p];
    } else {
      Integer s = 0;
      for (std::uint32_t m = 1; m <= p; ++m) s += tau[m] * eis[p - m];
      f.a[p] = s;
    }
    Integer pk = ipow(long(p), static_cast<unsigned long>(weight - 1));
    std::uint64_t prev = 1, cur = p;
    while (cur * p <= n_max) {
      std::uint64_t nxt = cur * p;
      f.a[nxt] = f.a[p] * f.a[cur] - pk * f.a[prev];
      prev = cur;
      cur = nxt;
    }
  }
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    std::uint32_t p = sieve.smallest_factor(n);
    std::uint32_t q = 1, m = n;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (m > 1) f.a[n] = f.a[q] * f.a[m];
  }
  return f;
}

// --- Siegel eigenvalue files ---------------------------------------------

struct SiegelEntry {
  Integer lambda_p;
  std::optional<Integer> lambda_p2;  // absent when only T(p) is known
};

/// Hecke eigenvalues lambda(p), lambda(p^2) of a genus-2 eigenform of weight
/// Sym^j (x) det^k, for every prime up to max_prime.
struct SiegelEigenvalueTable {
  int j = 0;
  int k = 0;
  std::map<std::uint32_t, SiegelEntry> entries;
  std::string source;
  /// Input files are read as-is: eigenvalues must already use the T(p),
  /// T(p^2) scaling for which the spinor quartic has integer coefficients
  /// of the expected weight. Nothing in the file can confirm this.
  std::string normalization = "T(p), T(p^2) eigenvalues, spinor-quartic scaling (assumed)";

  std::uint32_t max_prime() const { return entries.empty() ? 0 : entries.rbegin()->first; }
  bool has(std::uint32_t p) const { return entries.count(p) != 0; }
  const SiegelEntry& at(std::uint32_t p) const {
    auto it = entries.find(p);
    if (it == entries.end()) throw DomainError("no Siegel eigenvalue for p = " + std::to_string(p));
    return it->second;
  }
};

/// Parses the plain-text eigenvalue format:
///
///   # comment
///   j 6 k 10
///   2 1680 <lambda(4)>
///   3 -6120 <lambda(9)>
///
/// Primes must be ascending with none skipped. The third column may be "?"
/// or omitted when lambda(p^2) is unknown.
inline SiegelEigenvalueTable parse_siegel_eigenvalues(std::istream& in,
                                                      const std::string& source = "<input>") {
  SiegelEigenvalueTable table;
  table.source = source;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  std::uint32_t expected = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_header) {
      Integer j, k;
      if (tok.size() != 4 || tok[0] != "j" || tok[2] != "k" || !parse_integer(tok[1], j) ||
          !parse_integer(tok[3], k))
        throw ParseError(source, lineno, "expected header 'j <int> k <int>'");
      if (j < 0 || j % 2 != 0) throw ParseError(source, lineno, "j must be even and non-negative");
      if (k < 3) throw ParseError(source, lineno, "k must be at least 3");
      if (j > 1000 || k > 1000) throw ParseError(source, lineno, "weight out of range");
      table.j = j.convert_to<int>();
      table.k = k.convert_to<int>();
      have_header = true;
      continue;
    }

    if (tok.size() != 2 && tok.size() != 3)
      throw ParseError(source, lineno, "expected 'p lambda(p) [lambda(p^2)]'");
    Integer p;
    if (!parse_integer(tok[0], p) || p < 2 || p > 100000000)
      throw ParseError(source, lineno, "bad prime '" + tok[0] + "'");
    auto pv = p.convert_to<std::uint32_t>();
    if (!is_small_prime(pv)) throw ParseError(source, lineno, tok[0] + " is not prime");
    if (pv != expected) {
      if (pv < expected)
        throw ParseError(source, lineno, "primes must be ascending without repeats");
      throw ParseError(source, lineno, "missing prime " + std::to_string(expected));
    }
    SiegelEntry e;
    if (!parse_integer(tok[1], e.lambda_p))
      throw ParseError(source, lineno, "non-integer eigenvalue '" + tok[1] + "'");
    if (tok.size() == 3 && tok[2] != "?") {
      Integer v;
      if (!parse_integer(tok[2], v))
        throw ParseError(source, lineno, "non-integer eigenvalue '" + tok[2] + "'");
      e.lambda_p2 = v;
    }
    table.entries.emplace(pv, std::move(e));
    do {
      ++expected;
    } while (!is_small_prime(expected));
  }
  if (!have_header) throw ParseError(source, lineno, "missing 'j <int> k <int>' header");
  if (table.entries.empty()) throw ParseError(source, lineno, "no data");
  return table;
}

inline SiegelEigenvalueTable load_siegel_eigenvalues(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_siegel_eigenvalues(in, path);
}

}  // namespace lcrit
