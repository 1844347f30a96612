#include <lcrit/hecke_data.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace lcrit;

namespace {

// q prod (1 - q^n)^24 by repeated dense multiplication, coefficients 1..n.
std::vector<Integer> naive_delta(std::uint32_t n) {
  std::vector<Integer> s(n, 0);
  s[0] = 1;
  for (std::uint32_t m = 1; m < n; ++m)
    for (int r = 0; r < 24; ++r)
      for (std::uint32_t i = n - 1; i >= m; --i) s[i] -= s[i - m];
  std::vector<Integer> out(n + 1, 0);
  for (std::uint32_t i = 1; i <= n; ++i) out[i] = s[i - 1];
  return out;
}

std::vector<Integer> naive_eisenstein(int k, long c, std::uint32_t n) {
  std::vector<Integer> e(n + 1, 0);
  e[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    Integer s = 0;
    for (std::uint32_t d = 1; d <= m; ++d)
      if (m % d == 0) s += ipow(long(d), k - 1);
    e[m] = c * s;
  }
  return e;
}

SiegelEigenvalueTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_siegel_eigenvalues(in, "test");
}

}  // namespace

TEST(Elliptic, DeltaMatchesNaiveProduct) {
  const std::uint32_t n = 150;
  auto naive = naive_delta(n);
  auto f = elliptic_coefficients(12, n);
  for (std::uint32_t i = 1; i <= n; ++i) EXPECT_EQ(f.a[i], naive[i]) << i;
  EXPECT_EQ(f.a[2], -24);
  EXPECT_EQ(f.a[3], 252);
  EXPECT_EQ(f.a[5], 4830);
  EXPECT_EQ(f.a[7], -16744);
}

TEST(Elliptic, Weight16MatchesNaiveConvolution) {
  const std::uint32_t n = 80;
  auto d = naive_delta(n);
  auto e = naive_eisenstein(4, 240, n);
  auto f = elliptic_coefficients(16, n);
  for (std::uint32_t m = 1; m <= n; ++m) {
    Integer s = 0;
    for (std::uint32_t i = 1; i <= m; ++i) s += d[i] * e[m - i];
    EXPECT_EQ(f.a[m], s) << m;
  }
}

TEST(Elliptic, TabulatedEigenvalues) {
  auto f16 = elliptic_coefficients(16, 53);
  EXPECT_EQ(f16.a[2], 216);
  EXPECT_EQ(f16.a[3], -3348);
  EXPECT_EQ(f16.a[5], 52110);
  EXPECT_EQ(f16.a[7], 2822456);
  EXPECT_EQ(f16.a[11], 20586852);
  EXPECT_EQ(f16.a[53], Integer("6797151655902"));
  auto f20 = elliptic_coefficients(20, 7);
  EXPECT_EQ(f20.a[2], 456);
  EXPECT_EQ(f20.a[3], 50652);
  EXPECT_EQ(f20.a[5], -2377410);
  EXPECT_EQ(f20.a[7], -16917544);
}

TEST(Elliptic, HeckeRelationsAndRamanujanBound) {
  for (int w : {12, 16, 18, 20, 22, 26}) {
    auto f = elliptic_coefficients(w, 400);
    EXPECT_EQ(f.a[1], 1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
      EXPECT_LE(f.a[p] * f.a[p], 4 * ipow(long(p), w - 1)) << w << " " << p;
      EXPECT_EQ(f.a[p * p], f.a[p] * f.a[p] - ipow(long(p), w - 1)) << w << " " << p;
    }
    EXPECT_EQ(f.a[6], f.a[2] * f.a[3]);
    EXPECT_EQ(f.a[391], f.a[17] * f.a[23]);
  }
}

TEST(Elliptic, UnsupportedWeight) {
  EXPECT_THROW(elliptic_coefficients(24, 10), DomainError);
  EXPECT_THROW(elliptic_coefficients(13, 10), DomainError);
}

TEST(SiegelFile, ParsesWithCommentsAndMissingSquares) {
  auto t = parse("# sample\nj 6 k 10\n2 1680 12\n3 -6120 ?\n5 2718300\n");
  EXPECT_EQ(t.j, 6);
  EXPECT_EQ(t.k, 10);
  EXPECT_EQ(t.max_prime(), 5u);
  EXPECT_EQ(t.at(2).lambda_p, 1680);
  ASSERT_TRUE(t.at(2).lambda_p2.has_value());
  EXPECT_EQ(*t.at(2).lambda_p2, 12);
  EXPECT_FALSE(t.at(3).lambda_p2.has_value());
  EXPECT_FALSE(t.at(5).lambda_p2.has_value());
  EXPECT_THROW(t.at(7), DomainError);
}

TEST(SiegelFile, Errors) {
  EXPECT_THROW(parse("2 1 1\n"), ParseError);
  EXPECT_THROW(parse("j 5 k 10\n2 1\n"), ParseError);
  EXPECT_THROW(parse("j 6 k 2\n2 1\n"), ParseError);
  EXPECT_THROW(parse("j 6 k 10\n"), ParseError);
  EXPECT_THROW(parse("j 6 k 10\n2 x\n"), ParseError);
  EXPECT_THROW(parse("j 6 k 10\n2 1\n4 1\n"), ParseError);
  try {
    parse("j 6 k 10\n2 1\n5 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing prime 3"), std::string::npos);
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse("j 6 k 10\n2 1\n3 1\n3 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("ascending"), std::string::npos);
  }
  EXPECT_THROW(load_siegel_eigenvalues("/nonexistent/file.txt"), ParseError);
}
