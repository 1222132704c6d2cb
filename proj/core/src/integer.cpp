#include "hookvan/integer.hpp"

#include "hookvan/errors.hpp"

namespace hookvan {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

int valuation(const BigInt& value, int p) {
  if (value == 0) throw DomainError("valuation of zero");
  if (p < 2) throw DomainError("valuation base must be at least 2");
  BigInt v = abs(value);
  int count = 0;
  while (v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

int valuation(long long value, int p) { return valuation(BigInt(value), p); }

int digit_sum(int n, int base) {
  if (base < 2) throw DomainError("digit sum base must be at least 2");
  int sum = 0;
  for (int m = n; m > 0; m /= base) sum += m % base;
  return sum;
}

int legendre(int n, int p) {
  if (n < 0) throw DomainError("legendre of a negative integer");
  return (n - digit_sum(n, p)) / (p - 1);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> primes_up_to(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

int max_exponent(int n, int base) {
  if (base < 2) throw DomainError("exponent base must be at least 2");
  int k = 0;
  long long power = base;
  while (power <= n) {
    ++k;
    power *= base;
  }
  return k;
}

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

bool is_triangular(long long t) {
  if (t < 0) return false;
  long long disc = 8 * t + 1;
  long long root = 0;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return root * root == disc;
}

}  // namespace hookvan
