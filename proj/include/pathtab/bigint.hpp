#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pathtab {

// Exact arbitrary-precision integers/rationals for all counting and series
// arithmetic. No floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Exact quotient; throws DomainError if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace pathtab
