#include <gtest/gtest.h>

#include "hookvan/errors.hpp"
#include "hookvan/integer.hpp"

using namespace hookvan;

namespace {

int naive_valuation(long long v, int p) {
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

bool trial_division_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Integer, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Integer, LegendreMatchesFactorialValuation) {
  for (int p : {2, 3, 5, 7}) {
    for (int n = 0; n <= 40; ++n) EXPECT_EQ(legendre(n, p), valuation(factorial(n), p)) << n << " " << p;
  }
}

TEST(Integer, Valuation) {
  for (long long v = 1; v <= 500; ++v) {
    EXPECT_EQ(valuation(v, 2), naive_valuation(v, 2));
    EXPECT_EQ(valuation(-v, 3), naive_valuation(v, 3));
  }
  EXPECT_THROW(valuation(0LL, 2), DomainError);
  EXPECT_THROW(valuation(BigInt(0), 2), DomainError);
}

TEST(Integer, DigitsPrimesPowers) {
  EXPECT_EQ(digit_sum(17, 2), 2);
  EXPECT_EQ(digit_sum(25, 3), 5);
  for (int n = 0; n <= 200; ++n) EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  EXPECT_EQ(primes_up_to(17), (std::vector<int>{2, 3, 5, 7, 11, 13, 17}));
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_EQ(max_exponent(16, 2), 4);
  EXPECT_EQ(max_exponent(15, 2), 3);
  EXPECT_EQ(max_exponent(2, 3), 0);
  EXPECT_THROW(max_exponent(5, 1), DomainError);
  EXPECT_EQ(ipow(3, 4), 81);
}

TEST(Integer, Triangular) {
  std::vector<bool> expected(200, false);
  for (int k = 0; k * (k + 1) / 2 < 200; ++k) expected[static_cast<std::size_t>(k * (k + 1) / 2)] = true;
  for (int t = 0; t < 200; ++t) EXPECT_EQ(is_triangular(t), expected[static_cast<std::size_t>(t)]) << t;
  EXPECT_FALSE(is_triangular(-1));
}
