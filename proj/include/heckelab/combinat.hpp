#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace heckelab {

// Base-q split k = d*q + r with 0 <= r < q; d and r are always derived from
// (k, q), never stored independently.
struct WeightDecomposition {
  int64_t k = 0, q = 0, d = 0, r = 0;
  WeightDecomposition(int64_t k_, int64_t q_) : k(k_), q(q_), d(k_ / q_), r(k_ % q_) {}
};

// Exact binomial coefficient; 0 when k > n or k < 0. Requires n >= 0.
mpz_class binom(int64_t n, int64_t k);

// Generalized binomial with integer (possibly negative) upper index:
// n(n-1)...(n-k+1)/k! for k >= 0, 0 for k < 0.
mpz_class binom_int(const mpz_class& n, int64_t k);

// v_p(binom(n, k)) as the number of carries when adding k and n-k in base p.
int carry_valuation(int64_t p, int64_t n, int64_t k);

// binom(n, k) mod p computed digit-wise in base p.
int64_t lucas_residue(int64_t p, int64_t n, int64_t k);

// Exhaustive verifier for: q a power of p, k = dq + r with d < q and
// 0 <= r < q - d implies p | binom(k-i, k-j-l(q-1)) for all 0 <= i <= r,
// 0 <= j <= d, j+1 <= l <= d. Returns std::nullopt on pass, otherwise a
// description of the first counterexample. Throws on violated hypotheses.
struct BinomCounterexample {
  int64_t i, j, l;
  mpz_class value;
};
std::optional<BinomCounterexample> check_binom_divisibility_lemma(int64_t q, int64_t d, int64_t r);

// Smallest prime factor if q is a prime power p^f (f >= 1), else throws.
int64_t prime_of_prime_power(int64_t q);

// Reduction coefficients of the x^t rewriting identity:
//   gamma_{r,l,d} = (-1)^(r+1) binom(l, r+l-d-1) binom(r+l-d-2, l-d-1),
//     valid for 1 <= r <= d+1 and l >= d+1;
//   delta_{m,l,d} = (-1)^(d-l) binom(m, l) binom(m-l-1, d-l),
//     valid for m >= d+1 and 0 <= l <= d.
mpz_class gamma_coeff(int64_t r, int64_t l, int64_t d);
mpz_class delta_coeff(int64_t m, int64_t l, int64_t d);

}  // namespace heckelab
