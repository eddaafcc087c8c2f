#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "heckelab/local_ring.hpp"

namespace heckelab {

// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[i * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[i * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Requires square.
mpz_class det_exact(const IntMatrix& M);

// The three binomial matrices of the nonsingularity lemmas.
//
// kind 1 (m x m, 1-based l, i):       A_{li} = binom(a+l, i-1)
// kind 2 (needs 2 <= t <= m):         A_{li} = binom(a+l+1, i-1) for i < t,
//                                              binom(a+l,   i-1) for i >= t
// kind 3 (k = dq+r, 1 <= d < p, d-1 <= r, 1 <= m <= d; 1-based i, l):
//                                     A_{il} = binom(k-i+1, m + l(q-1))
IntMatrix binomial_matrix_kind1(int64_t a, int m);
IntMatrix binomial_matrix_kind2(int64_t a, int m, int t);
IntMatrix binomial_matrix_kind3(int64_t k, int64_t q, int m);

// Dense matrix over one O_F/pi^P ring.
class LocalMatrix {
 public:
  LocalMatrix(Ring ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, ring_->zero()) {}

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LocalElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const LocalElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  LocalMatrix operator*(const LocalMatrix& o) const;
  std::vector<LocalElem> apply(const std::vector<LocalElem>& x) const;
  static LocalMatrix identity(const Ring& ring, int n);

 private:
  Ring ring_;
  int rows_, cols_;
  std::vector<LocalElem> a_;
};

// Elementary-divisor data of a matrix over O_F/pi^P: the pivot valuations
// a_1 <= a_2 <= ... (< P), plus the count of diagonal positions that are
// indistinguishable from zero at precision P (reported, never guessed to be
// a true kernel).
struct DivisorProfile {
  std::vector<int> divisors;   // non-decreasing, each in [0, P)
  int zero_count = 0;          // diagonal entries with valuation >= P
  int rows = 0, cols = 0;

  int max_divisor() const { return divisors.empty() ? 0 : divisors.back(); }
  bool full_column_rank() const {
    return zero_count == 0 && static_cast<int>(divisors.size()) == cols;
  }
};

// Smith normal form over the local quotient: returns the profile, and when
// factors != nullptr also L, D, R with M = L * D * R exactly at precision P
// (L, R unimodular, D diagonal with the profile's pi-power valuations).
struct SnfFactors {
  LocalMatrix L, D, R;
};
DivisorProfile snf_local(const LocalMatrix& M, SnfFactors* factors = nullptr);

// Largest elementary divisor valuation; the least eps such that
// M x = 0 mod pi^n implies x = 0 mod pi^(n-eps) for every n <= P.
// Throws PrecisionInsufficient when the matrix has a kernel at precision P.
struct PrecisionInsufficient : std::runtime_error {
  explicit PrecisionInsufficient(const std::string& what) : std::runtime_error(what) {}
};
int preimage_bound(const LocalMatrix& M);

}  // namespace heckelab
