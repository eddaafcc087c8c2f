#include "heckelab/combinat.hpp"

#include <stdexcept>

namespace heckelab {

mpz_class binom(int64_t n, int64_t k) {
  if (n < 0) throw std::invalid_argument("binom: n < 0");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class binom_int(const mpz_class& n, int64_t k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

int carry_valuation(int64_t p, int64_t n, int64_t k) {
  if (k < 0 || k > n) throw std::invalid_argument("carry_valuation: need 0 <= k <= n");
  int64_t a = k, b = n - k;
  int carries = 0, carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    int64_t s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
    if (a == 0 && b == 0 && carry == 0) break;
  }
  return carries;
}

int64_t lucas_residue(int64_t p, int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t acc = 1;
  while (n > 0 || k > 0) {
    int64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    acc = (acc * mpz_class(binom(nd, kd) % p).get_si()) % p;
    n /= p;
    k /= p;
  }
  return acc;
}

int64_t prime_of_prime_power(int64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power");
  int64_t p = 0;
  for (int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return q;  // q itself prime
  int64_t m = q;
  while (m % p == 0) m /= p;
  if (m != 1) throw std::invalid_argument("not a prime power");
  return p;
}

std::optional<BinomCounterexample> check_binom_divisibility_lemma(int64_t q, int64_t d,
                                                                  int64_t r) {
  int64_t p = prime_of_prime_power(q);
  if (d < 0 || d >= q) throw std::invalid_argument("lemma hypothesis: need 0 <= d < q");
  if (r < 0 || r >= q - d) throw std::invalid_argument("lemma hypothesis: need 0 <= r < q - d");
  int64_t k = d * q + r;
  for (int64_t i = 0; i <= r; ++i)
    for (int64_t j = 0; j <= d; ++j)
      for (int64_t l = j + 1; l <= d; ++l) {
        mpz_class b = binom(k - i, k - j - l * (q - 1));
        if (b % p != 0) return BinomCounterexample{i, j, l, b};
      }
  return std::nullopt;
}

mpz_class gamma_coeff(int64_t r, int64_t l, int64_t d) {
  if (r < 1 || r > d + 1 || l < d + 1)
    throw std::domain_error("gamma_coeff: indices out of range");
  mpz_class v = binom(l, r + l - d - 1) * binom(r + l - d - 2, l - d - 1);
  return (r + 1) % 2 == 0 ? v : mpz_class(-v);
}

mpz_class delta_coeff(int64_t m, int64_t l, int64_t d) {
  if (m < d + 1 || l < 0 || l > d) throw std::domain_error("delta_coeff: indices out of range");
  mpz_class v = binom(m, l) * binom(m - l - 1, d - l);
  return (d - l) % 2 == 0 ? v : mpz_class(-v);
}

}  // namespace heckelab
