#pragma once

// Hodge numbers, archimedean gamma factors, root number and critical points.
//
// Analytic normalisation: L_an(s) = L_mot(s + w/2), completed by
// G(s) = prod Gamma_C(s + shift_i) with shift_i = w/2 - p_i, and
// Lambda(s) = G(s) L_an(s) = eps Lambda(1 - s).

#include <lcrit/arith.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace lcrit {

/// Exact half-integer, stored as twice its value.
struct HalfInteger {
  long twice = 0;

  static HalfInteger from_int(long v) { return {2 * v}; }
  bool is_integer() const { return twice % 2 == 0; }
  long to_long() const {
    if (!is_integer()) throw DomainError("not an integer: " + str());
    return twice / 2;
  }
  Real to_real() const { return Real(twice) / 2; }
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
  friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
};

/// Hodge numbers of a pure motive of weight w, one representative
/// p = min(p, w - p) per conjugate pair {(p, q), (q, p)}. A representative
/// with 2p == w stands for a single self-conjugate (p, p) component.
struct HodgeData {
  int weight = 0;
  std::vector<int> points;  // sorted ascending

  int degree() const {
    int d = 0;
    for (int p : points) d += (2 * p == weight) ? 1 : 2;
    return d;
  }
  /// All Hodge p-values, conjugates included.
  std::vector<int> full() const {
    std::vector<int> out;
    for (int p : points) {
      out.push_back(p);
      if (2 * p != weight) out.push_back(weight - p);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  friend bool operator==(const HodgeData&, const HodgeData&) = default;
};

namespace detail {
inline HodgeData reduce_hodge(int weight, std::vector<int> full_points) {
  HodgeData h{weight, {}};
  std::sort(full_points.begin(), full_points.end());
  for (int p : full_points)
    if (2 * p <= weight) h.points.push_back(p);
  return h;
}
}  // namespace detail

/// Weight-l elliptic eigenform: {(0, l-1), (l-1, 0)}.
inline HodgeData elliptic_hodge(int l) { return {l - 1, {0}}; }

/// Genus-2 form of weight Sym^j (x) det^k:
/// {(0, j+2k-3), (k-2, j+k-1)} and conjugates.
inline HodgeData spinor_hodge(int j, int k) {
  if (j < 0 || j % 2 != 0) throw DomainError("j must be even and non-negative");
  if (k < 3) throw DomainError("k must be at least 3");
  return detail::reduce_hodge(j + 2 * k - 3, {0, k - 2, j + k - 1, j + 2 * k - 3});
}

/// Degree-8 tensor product of weight-l f with the spinor motive of F.
inline HodgeData hodge_points(int l, int j, int k) {
  if (l < 12 || l % 2 != 0) throw DomainError("l must be even and at least 12");
  if (j < 0 || j % 2 != 0) throw DomainError("j must be even and non-negative");
  if (k < 3) throw DomainError("k must be at least 3");
  const int w = j + 2 * k + l - 4;
  std::vector<int> pts{0, k - 2, std::min(l - 1, j + 2 * k - 3), std::min(j + k - 1, k + l - 3)};
  for (int& p : pts) p = std::min(p, w - p);
  std::sort(pts.begin(), pts.end());
  return {w, pts};
}

/// Hodge numbers of a tensor product: all pairwise sums, one representative
/// per conjugate pair.
inline HodgeData tensor_hodge_points(const HodgeData& a, const HodgeData& b) {
  std::vector<int> sums;
  for (int pa : a.full())
    for (int pb : b.full()) sums.push_back(pa + pb);
  const int w = a.weight + b.weight;
  // Each off-centre pair appears once below and once above w/2; centre
  // entries are self-conjugate components and are all kept.
  return detail::reduce_hodge(w, sums);
}

struct FunctionalEquationData {
  int degree = 0;
  int weight = 0;
  std::vector<HalfInteger> shifts;  // Gamma_C(s + shift), descending
  int sign = 1;
  int conductor = 1;
  HodgeData hodge;

  HalfInteger half_weight() const { return {weight}; }
  HalfInteger to_motivic(HalfInteger analytic) const { return analytic + half_weight(); }
  HalfInteger to_analytic(HalfInteger motivic) const { return motivic - half_weight(); }
};

inline FunctionalEquationData functional_equation(const HodgeData& h) {
  FunctionalEquationData fe;
  fe.weight = h.weight;
  fe.hodge = h;
  long exponent = 0;  // sign = i^exponent
  for (int p : h.points) {
    if (2 * p == h.weight)
      throw DomainError("self-conjugate Hodge component needs a Gamma_R factor (unsupported)");
    if (p < 0 || 2 * p > h.weight) throw DomainError("Hodge point outside [0, w/2]");
    fe.shifts.push_back(HalfInteger{h.weight - 2L * p});
    // each pair (p, q), p < q contributes i^{q - p + 1}
    exponent += (h.weight - 2L * p) + 1;
  }
  exponent %= 4;
  if (exponent % 2 != 0) throw DomainError("root number is not real for these Hodge numbers");
  fe.sign = exponent == 0 ? 1 : -1;
  fe.degree = h.degree();
  std::sort(fe.shifts.begin(), fe.shifts.end(), std::greater<>());
  return fe;
}

/// Motivic integers t with p_max < t <= w - p_max.
inline std::vector<long> critical_points_motivic(const FunctionalEquationData& fe) {
  std::vector<long> out;
  if (fe.hodge.points.empty()) return out;
  const long pmax = fe.hodge.points.back();
  for (long t = pmax + 1; t <= fe.weight - pmax; ++t) out.push_back(t);
  return out;
}

/// Critical points in analytic normalisation (half-integers when w is odd).
inline std::vector<HalfInteger> critical_points(const FunctionalEquationData& fe) {
  std::vector<HalfInteger> out;
  for (long t : critical_points_motivic(fe)) out.push_back(fe.to_analytic(HalfInteger::from_int(t)));
  return out;
}

inline bool is_critical(const FunctionalEquationData& fe, HalfInteger analytic) {
  auto pts = critical_points(fe);
  return std::find(pts.begin(), pts.end(), analytic) != pts.end();
}

}  // namespace lcrit
