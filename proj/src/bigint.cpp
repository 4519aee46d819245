#include "pathtab/bigint.hpp"

#include "pathtab/errors.hpp"

namespace pathtab {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // always exact at this point
  }
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw DomainError("inexact integer division");
  return q;
}

}  // namespace pathtab
