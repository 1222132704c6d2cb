#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hookvan {

/// Exact signed integer used for every degree and character value.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// p-adic valuation of a non-zero integer. Throws DomainError on zero.
int valuation(const BigInt& value, int p);
int valuation(long long value, int p);

/// nu_p(n!) by Legendre's formula, (n - digit sum) / (p - 1).
int legendre(int n, int p);

int digit_sum(int n, int base);

bool is_prime(int n);
std::vector<int> primes_up_to(int n);

/// Largest exponent k with base^k <= n (0 when base > n).
int max_exponent(int n, int base);

long long ipow(long long base, int exp);

/// True iff t = k(k+1)/2 for some k >= 0, tested as 8t+1 being a square.
bool is_triangular(long long t);

}  // namespace hookvan
