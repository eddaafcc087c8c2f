#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heckelab {

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

// Hard cap on f*e. Every configuration this project runs has f*e <= 4;
// the cap keeps LocalElem storage inline (no per-element allocation).
inline constexpr int kMaxCoords = 8;

// An element of the residue field F_q = F_p[u]/(m(u)), q = p^f.
// Coordinates c_0..c_{f-1} are the coefficients of 1, u, ..., u^{f-1}.
class ResidueElem {
 public:
  ResidueElem(const RingSpec* ring, std::array<uint32_t, kMaxCoords> c)
      : ring_(ring), c_(c) {}

  const RingSpec* ring() const { return ring_; }
  uint32_t coord(int i) const { return c_[i]; }
  bool is_zero() const;
  uint64_t index() const;  // sum c_i p^i, in [0, q)

  ResidueElem operator+(const ResidueElem& o) const;
  ResidueElem operator-() const;
  ResidueElem operator-(const ResidueElem& o) const;
  ResidueElem operator*(const ResidueElem& o) const;
  ResidueElem inverse() const;  // nonzero only
  ResidueElem pow(uint64_t n) const;  // 0^0 = 1
  bool operator==(const ResidueElem& o) const { return ring_ == o.ring_ && c_ == o.c_; }
  bool operator!=(const ResidueElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const RingSpec* ring_;
  std::array<uint32_t, kMaxCoords> c_;
};

// An element of O_F/pi^P, stored in canonical coordinates
//
//   x = sum_{j<e} sum_{i<f} c[j*f+i] * pi^j * u^i,   c[.] in Z/p^W, W = P/e,
//
// where u generates the unramified part (root of the degree-f minpoly) and
// pi is the uniformizer (root of the degree-e Eisenstein polynomial).
// Since (pi^P) = (p^W) as ideals, this coordinate form is unique per residue
// class; equality is coordinate equality.
//
// Elements keep a raw pointer to their RingSpec; the Ring handle returned by
// make_ring must outlive every element created from it.
class LocalElem {
 public:
  LocalElem(const RingSpec* ring, std::array<uint64_t, kMaxCoords> c)
      : ring_(ring), c_(c) {}

  const RingSpec* ring() const { return ring_; }
  uint64_t coord(int idx) const { return c_[idx]; }
  bool is_zero() const;

  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-() const;
  LocalElem operator-(const LocalElem& o) const;
  LocalElem operator*(const LocalElem& o) const;
  LocalElem& operator+=(const LocalElem& o) { return *this = *this + o; }
  LocalElem& operator-=(const LocalElem& o) { return *this = *this - o; }
  LocalElem& operator*=(const LocalElem& o) { return *this = *this * o; }
  bool operator==(const LocalElem& o) const { return ring_ == o.ring_ && c_ == o.c_; }
  bool operator!=(const LocalElem& o) const { return !(*this == o); }

  LocalElem inverse() const;           // requires valuation 0
  LocalElem pow(uint64_t n) const;     // 0^0 = 1
  LocalElem scaled(const mpz_class& z) const;  // multiply by an integer

  std::string str() const;

 private:
  friend class RingSpec;
  std::array<uint64_t, kMaxCoords> c_;
  const RingSpec* ring_;
};

// Digit tuple (mu_0, ..., mu_{n-1}) indexing mu = sum pi^i [mu_i] in I_n.
// Each entry is a residue-field index in [0, q).
using Digits = std::vector<uint32_t>;

// Fixed-precision arithmetic context for O_F/pi^P.
//
// F has residue degree f (q = p^f) and ramification index e; P is the working
// precision in pi-digits and must be a positive multiple of e. All membership
// tests "x in pi^n O" are valuation(x) >= n with n <= P.
class RingSpec {
 public:
  int64_t p;
  int f, e, P;
  int W;                 // P / e, precision in p-digits of the unramified part
  uint64_t q;            // p^f
  uint64_t pW;           // p^W, the coordinate modulus
  std::vector<uint32_t> unramified_minpoly;  // degree f, monic, over F_p
  std::vector<int64_t> eisenstein_poly;      // degree e, monic, over Z

  int coords() const { return f * e; }

  // --- element construction
  LocalElem zero() const;
  LocalElem one() const;
  LocalElem from_int(int64_t v) const;
  LocalElem from_mpz(const mpz_class& v) const;
  LocalElem pi() const;                  // the uniformizer
  LocalElem pi_pow(int n) const;         // pi^n, 0 <= n (zero for n >= P)

  // --- residue field
  ResidueElem fq_zero() const;
  ResidueElem fq_one() const;
  ResidueElem fq_from_index(uint64_t idx) const;  // idx in [0, q)
  ResidueElem residue(const LocalElem& x) const;  // image mod pi
  LocalElem embed(const ResidueElem& a) const;    // naive lift (not Teichmuller)

  // --- spec operations
  // v_F(x) in [0, P-1] for x != 0; returns P as the ">= P" sentinel.
  int valuation(const LocalElem& x) const;
  // Teichmuller representative: [a]^q = [a] exactly mod pi^P, residue([a]) = a.
  LocalElem teichmuller(const ResidueElem& a) const;
  // sum over all lambda in F_q of [lambda]^i, with 0^0 = 1.
  LocalElem power_sum(uint64_t i) const;

  // Exact division by pi^n for x with valuation(x) >= n (throws otherwise).
  // The quotient is determined mod pi^(P-n); the canonical coordinate
  // representative is returned, so pi^n * exact_div_pi(x, n) == x exactly.
  LocalElem exact_div_pi(const LocalElem& x, int n) const;

  std::string describe() const;

 private:
  friend Ring make_ring(int64_t, int, int, int, const std::vector<uint32_t>*,
                        const std::vector<int64_t>*);
  friend class LocalElem;
  friend class ResidueElem;

  uint64_t mul_mod(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % pW);
  }
  uint64_t add_mod(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= pW ? s - pW : s;
  }
  uint64_t neg_mod(uint64_t a) const { return a == 0 ? 0 : pW - a; }
  int vp(uint64_t c) const;  // p-adic valuation of a coordinate, c != 0

  // reduction tables: u^f = sum_i ured[i] u^i (mod p^W),
  // pi^e = sum_j pired[j] pi^j with integer scalars (mod p^W).
  std::array<uint64_t, kMaxCoords> ured_{};
  std::array<uint64_t, kMaxCoords> pired_{};
};

// Builds a deterministic RingSpec. When no unramified minpoly is supplied the
// lexicographically minimal monic irreducible of degree f over F_p is chosen
// (ordered by sum c_i p^i of the non-leading coefficients); the Eisenstein
// polynomial defaults to x^e - p. Throws std::invalid_argument on bad input.
Ring make_ring(int64_t p, int f, int e, int P,
               const std::vector<uint32_t>* unramified_minpoly = nullptr,
               const std::vector<int64_t>* eisenstein_poly = nullptr);

// x with valuation(x) = 0.
inline bool is_unit(const RingSpec& R, const LocalElem& x) { return R.valuation(x) == 0; }

// --- digit sets I_n -------------------------------------------------------

// All q^n digit tuples of I_n, lexicographic with digit 0 least significant;
// I_0 = { () }. Requires 0 <= n <= P.
std::vector<Digits> enum_digits(const Ring& ring, int n);

// mu = sum_{i<n} pi^i [mu_i] as a ring element.
LocalElem digits_to_elem(const Ring& ring, const Digits& mu);

// Truncation [mu]_m (requires m <= |mu|).
Digits digit_truncate(const Digits& mu, int m);

// Last digit lambda_mu = (mu - [mu]_{n-1}) / pi^{n-1} for nonempty mu.
uint32_t digit_last(const Digits& mu);

}  // namespace heckelab
