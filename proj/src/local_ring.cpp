#include "heckelab/local_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckelab {

namespace {

bool is_prime_small(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- tiny F_p[x] helpers, used only for minpoly selection/validation -------

using FpPoly = std::vector<uint32_t>;  // coefficients, c[i] of x^i, no trailing zeros

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, int64_t p) {
  a = fp_trim(std::move(a));
  while (a.size() >= m.size()) {
    // m is monic
    uint64_t lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = (lead * m[i]) % p;
      uint64_t cur = a[i + shift];
      a[i + shift] = static_cast<uint32_t>((cur + p - sub) % p);
    }
    a = fp_trim(std::move(a));
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  return fp_mod(std::move(r), m, p);
}

// Irreducibility over F_p by trial division with every monic divisor of
// degree at most deg/2; fine for the tiny degrees this project uses.
bool fp_irreducible(const FpPoly& m, int64_t p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  for (int dd = 1; 2 * dd <= deg; ++dd) {
    uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
      FpPoly div(dd + 1, 0);
      div[dd] = 1;
      uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      if (fp_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

FpPoly minimal_irreducible(int64_t p, int f) {
  uint64_t count = 1;
  for (int i = 0; i < f; ++i) count *= static_cast<uint64_t>(p);
  for (uint64_t code = 0; code < count; ++code) {
    FpPoly m(f + 1, 0);
    m[f] = 1;
    uint64_t c = code;
    for (int i = 0; i < f; ++i) {
      m[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    if (fp_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

// --- RingSpec construction --------------------------------------------------

Ring make_ring(int64_t p, int f, int e, int P,
               const std::vector<uint32_t>* unramified_minpoly,
               const std::vector<int64_t>* eisenstein_poly) {
  if (!is_prime_small(p)) throw std::invalid_argument("make_ring: p is not prime");
  if (f < 1 || e < 1) throw std::invalid_argument("make_ring: f and e must be >= 1");
  if (P <= 0 || P % e != 0)
    throw std::invalid_argument("make_ring: P must be a positive multiple of e");
  if (f * e > kMaxCoords)
    throw std::invalid_argument("make_ring: f*e exceeds the supported coordinate cap");

  auto R = std::make_shared<RingSpec>();
  R->p = p;
  R->f = f;
  R->e = e;
  R->P = P;
  R->W = P / e;

  // coordinate modulus p^W, overflow-guarded
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(R->W));
  if (!pw.fits_ulong_p() || mpz_sizeinbase(pw.get_mpz_t(), 2) > 62)
    throw std::invalid_argument("make_ring: p^(P/e) too large for this build");
  R->pW = pw.get_ui();

  mpz_class qz;
  mpz_ui_pow_ui(qz.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
  R->q = qz.get_ui();

  // unramified minpoly
  FpPoly m;
  if (unramified_minpoly) {
    m = *unramified_minpoly;
    if (static_cast<int>(m.size()) != f + 1 || m[f] != 1)
      throw std::invalid_argument("make_ring: unramified minpoly must be monic of degree f");
    for (auto& c : m) c = static_cast<uint32_t>(c % p);
    if (!fp_irreducible(m, p))
      throw std::invalid_argument("make_ring: unramified minpoly is reducible over F_p");
  } else {
    m = minimal_irreducible(p, f);
  }
  R->unramified_minpoly = m;
  // u^f = -(m_0 + m_1 u + ...) mod p^W
  for (int i = 0; i < f; ++i) R->ured_[i] = R->neg_mod(m[i] % R->pW);

  // Eisenstein polynomial
  std::vector<int64_t> E;
  if (eisenstein_poly) {
    E = *eisenstein_poly;
    if (static_cast<int>(E.size()) != e + 1 || E[e] != 1)
      throw std::invalid_argument("make_ring: eisenstein poly must be monic of degree e");
    if (E[0] % p != 0 || (E[0] / p) % p == 0)
      throw std::invalid_argument("make_ring: eisenstein constant term must have v_p = 1");
    for (int j = 1; j < e; ++j)
      if (E[j] % p != 0)
        throw std::invalid_argument("make_ring: eisenstein coefficients must be divisible by p");
  } else {
    E.assign(e + 1, 0);
    E[e] = 1;
    E[0] = -p;
  }
  R->eisenstein_poly = E;
  // pi^e = -(E_0 + E_1 pi + ...) mod p^W
  for (int j = 0; j < e; ++j) {
    int64_t c = ((-E[j]) % static_cast<int64_t>(R->pW) + static_cast<int64_t>(R->pW)) %
                static_cast<int64_t>(R->pW);
    R->pired_[j] = static_cast<uint64_t>(c);
  }
  return R;
}

// --- LocalElem arithmetic ---------------------------------------------------

LocalElem RingSpec::zero() const { return LocalElem(this, {}); }

LocalElem RingSpec::one() const {
  std::array<uint64_t, kMaxCoords> c{};
  c[0] = 1 % pW;
  return LocalElem(this, c);
}

LocalElem RingSpec::from_int(int64_t v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

LocalElem RingSpec::from_mpz(const mpz_class& v) const {
  mpz_class r, mod(static_cast<unsigned long>(pW));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  std::array<uint64_t, kMaxCoords> c{};
  c[0] = r.get_ui();
  return LocalElem(this, c);
}

LocalElem RingSpec::pi() const {
  if (e == 1) return from_int(p);
  std::array<uint64_t, kMaxCoords> c{};
  c[f] = 1;  // coordinate (j=1, i=0)
  return LocalElem(this, c);
}

LocalElem RingSpec::pi_pow(int n) const {
  if (n < 0) throw std::invalid_argument("pi_pow: negative exponent");
  if (n >= P) return zero();
  return pi().pow(static_cast<uint64_t>(n));
}

bool LocalElem::is_zero() const {
  for (int i = 0; i < ring_->coords(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("mixed rings");
  std::array<uint64_t, kMaxCoords> c{};
  for (int i = 0; i < ring_->coords(); ++i) c[i] = ring_->add_mod(c_[i], o.c_[i]);
  return LocalElem(ring_, c);
}

LocalElem LocalElem::operator-() const {
  std::array<uint64_t, kMaxCoords> c{};
  for (int i = 0; i < ring_->coords(); ++i) c[i] = ring_->neg_mod(c_[i]);
  return LocalElem(ring_, c);
}

LocalElem LocalElem::operator-(const LocalElem& o) const { return *this + (-o); }

LocalElem LocalElem::operator*(const LocalElem& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("mixed rings");
  const RingSpec& R = *ring_;
  const int f = R.f, e = R.e;

  // school product; x-degree < 2e-1, u-degree < 2f-1
  uint64_t prod[2 * kMaxCoords - 1][2 * kMaxCoords - 1] = {};
  for (int j1 = 0; j1 < e; ++j1)
    for (int j2 = 0; j2 < e; ++j2)
      for (int i1 = 0; i1 < f; ++i1) {
        if (c_[j1 * f + i1] == 0) continue;
        for (int i2 = 0; i2 < f; ++i2) {
          uint64_t t = R.mul_mod(c_[j1 * f + i1], o.c_[j2 * f + i2]);
          prod[j1 + j2][i1 + i2] = R.add_mod(prod[j1 + j2][i1 + i2], t);
        }
      }

  // reduce u-powers via u^f = sum ured[i] u^i
  for (int j = 0; j < 2 * e - 1; ++j)
    for (int i = 2 * f - 2; i >= f; --i) {
      uint64_t hi = prod[j][i];
      if (hi == 0) continue;
      prod[j][i] = 0;
      for (int t = 0; t < f; ++t)
        prod[j][i - f + t] = R.add_mod(prod[j][i - f + t], R.mul_mod(hi, R.ured_[t]));
    }

  // reduce pi-powers via pi^e = sum pired[j] pi^j (integer scalars)
  for (int j = 2 * e - 2; j >= e; --j)
    for (int i = 0; i < f; ++i) {
      uint64_t hi = prod[j][i];
      if (hi == 0) continue;
      prod[j][i] = 0;
      for (int t = 0; t < e; ++t)
        prod[j - e + t][i] = R.add_mod(prod[j - e + t][i], R.mul_mod(hi, R.pired_[t]));
    }

  std::array<uint64_t, kMaxCoords> c{};
  for (int j = 0; j < e; ++j)
    for (int i = 0; i < f; ++i) c[j * f + i] = prod[j][i];
  return LocalElem(ring_, c);
}

LocalElem LocalElem::pow(uint64_t n) const {
  LocalElem base = *this, acc = ring_->one();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

LocalElem LocalElem::scaled(const mpz_class& z) const { return *this * ring_->from_mpz(z); }

int RingSpec::vp(uint64_t c) const {
  int v = 0;
  while (c % static_cast<uint64_t>(p) == 0) {
    c /= static_cast<uint64_t>(p);
    ++v;
    if (v >= W) break;
  }
  return v;
}

int RingSpec::valuation(const LocalElem& x) const {
  int best = P;
  for (int j = 0; j < e; ++j)
    for (int i = 0; i < f; ++i) {
      uint64_t c = x.coord(j * f + i);
      if (c == 0) continue;
      best = std::min(best, e * vp(c) + j);
    }
  return best;
}

LocalElem LocalElem::inverse() const {
  const RingSpec& R = *ring_;
  if (R.valuation(*this) != 0) throw std::domain_error("inverse: not a unit");
  // Newton iteration y <- y(2 - x y) from the residue-field inverse.
  ResidueElem r0 = R.residue(*this);
  LocalElem y = R.embed(r0.inverse());
  LocalElem two = R.from_int(2);
  int prec = 1;
  while (prec < R.P) {
    y = y * (two - *this * y);
    prec *= 2;
  }
  return y;
}

// --- residue field ----------------------------------------------------------

ResidueElem RingSpec::fq_zero() const { return ResidueElem(this, {}); }

ResidueElem RingSpec::fq_one() const {
  std::array<uint32_t, kMaxCoords> c{};
  c[0] = 1 % static_cast<uint32_t>(p);
  return ResidueElem(this, c);
}

ResidueElem RingSpec::fq_from_index(uint64_t idx) const {
  if (idx >= q) throw std::invalid_argument("fq_from_index: index out of range");
  std::array<uint32_t, kMaxCoords> c{};
  for (int i = 0; i < f; ++i) {
    c[i] = static_cast<uint32_t>(idx % p);
    idx /= static_cast<uint64_t>(p);
  }
  return ResidueElem(this, c);
}

ResidueElem RingSpec::residue(const LocalElem& x) const {
  std::array<uint32_t, kMaxCoords> c{};
  for (int i = 0; i < f; ++i) c[i] = static_cast<uint32_t>(x.coord(i) % p);
  return ResidueElem(this, c);
}

LocalElem RingSpec::embed(const ResidueElem& a) const {
  std::array<uint64_t, kMaxCoords> c{};
  for (int i = 0; i < f; ++i) c[i] = a.coord(i) % pW;
  return LocalElem(this, c);
}

bool ResidueElem::is_zero() const {
  for (int i = 0; i < ring_->f; ++i)
    if (c_[i] != 0) return false;
  return true;
}

uint64_t ResidueElem::index() const {
  uint64_t idx = 0, mult = 1;
  for (int i = 0; i < ring_->f; ++i) {
    idx += c_[i] * mult;
    mult *= static_cast<uint64_t>(ring_->p);
  }
  return idx;
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("mixed rings");
  std::array<uint32_t, kMaxCoords> c{};
  for (int i = 0; i < ring_->f; ++i)
    c[i] = static_cast<uint32_t>((c_[i] + o.c_[i]) % ring_->p);
  return ResidueElem(ring_, c);
}

ResidueElem ResidueElem::operator-() const {
  std::array<uint32_t, kMaxCoords> c{};
  for (int i = 0; i < ring_->f; ++i)
    c[i] = c_[i] == 0 ? 0 : static_cast<uint32_t>(ring_->p - c_[i]);
  return ResidueElem(ring_, c);
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const { return *this + (-o); }

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("mixed rings");
  const int f = ring_->f;
  const int64_t p = ring_->p;
  std::array<uint64_t, 2 * kMaxCoords> prod{};
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(c_[i]) * o.c_[j]) % p;
  const auto& m = ring_->unramified_minpoly;
  for (int i = 2 * f - 2; i >= f; --i) {
    uint64_t hi = prod[i];
    if (hi == 0) continue;
    prod[i] = 0;
    for (int t = 0; t < f; ++t) {
      uint64_t sub = (hi * m[t]) % p;
      prod[i - f + t] = (prod[i - f + t] + p - sub) % p;
    }
  }
  std::array<uint32_t, kMaxCoords> c{};
  for (int i = 0; i < f; ++i) c[i] = static_cast<uint32_t>(prod[i]);
  return ResidueElem(ring_, c);
}

ResidueElem ResidueElem::pow(uint64_t n) const {
  ResidueElem base = *this, acc = ring_->fq_one();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

ResidueElem ResidueElem::inverse() const {
  if (is_zero()) throw std::domain_error("residue inverse of zero");
  return pow(ring_->q - 2);  // a^(q-1) = 1 for a != 0
}

// --- Teichmuller and power sums ---------------------------------------------

LocalElem RingSpec::teichmuller(const ResidueElem& a) const {
  LocalElem z = embed(a);
  // z -> z^q gains one p-digit of accuracy per step; W steps reach p^W.
  for (int it = 0; it < W; ++it) z = z.pow(q);
  return z;
}

LocalElem RingSpec::power_sum(uint64_t i) const {
  LocalElem acc = zero();
  for (uint64_t idx = 0; idx < q; ++idx)
    acc += teichmuller(fq_from_index(idx)).pow(i);
  return acc;
}

LocalElem RingSpec::exact_div_pi(const LocalElem& x, int n) const {
  if (n < 0) throw std::invalid_argument("exact_div_pi: negative n");
  if (valuation(x) < n) throw std::domain_error("exact_div_pi: valuation too small");
  LocalElem z = x;
  for (int step = 0; step < n; ++step) {
    // z = p*b_0 + pi*(a_1 + ... + a_{e-1} pi^{e-2}), so with pi^e = p*u:
    // z/pi = a_1 + ... + a_{e-1} pi^{e-2} + pi^{e-1} * u^{-1} * b_0,
    // and pi * (z/pi) == z exactly.
    std::array<uint64_t, kMaxCoords> b0{};
    for (int i = 0; i < f; ++i) {
      uint64_t c = z.coord(i);
      if (c % static_cast<uint64_t>(p) != 0)
        throw std::logic_error("exact_div_pi: coordinate not divisible");
      b0[i] = c / static_cast<uint64_t>(p);
    }
    std::array<uint64_t, kMaxCoords> shifted{};
    for (int j = 1; j < e; ++j)
      for (int i = 0; i < f; ++i) shifted[(j - 1) * f + i] = z.coord(j * f + i);
    LocalElem low(this, shifted);
    if (e == 1) {
      // pi = p up to the unit -E_0/p; u^{-1} * b_0 is the whole quotient.
      LocalElem u = eisenstein_unit();
      z = u.inverse() * LocalElem(this, b0);
    } else {
      LocalElem u = eisenstein_unit();
      z = low + pi().pow(static_cast<uint64_t>(e - 1)) * (u.inverse() * LocalElem(this, b0));
    }
  }
  return z;
}

LocalElem RingSpec::eisenstein_unit() const {
  // the unit u with pi^e = p * u; coefficients are the exact integers -E_j/p.
  std::array<uint64_t, kMaxCoords> uc{};
  for (int j = 0; j < e; ++j) {
    int64_t cj = -(eisenstein_poly[j] / p);
    int64_t m = (cj % static_cast<int64_t>(pW) + static_cast<int64_t>(pW)) %
                static_cast<int64_t>(pW);
    uc[j * f] = static_cast<uint64_t>(m);
  }
  return LocalElem(this, uc);
}

// --- digits ------------------------------------------------------------------

std::vector<Digits> enum_digits(const Ring& ring, int n) {
  if (n < 0 || n > ring->P) throw std::invalid_argument("enum_digits: n out of range");
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= ring->q;
  std::vector<Digits> out;
  out.reserve(total);
  for (uint64_t code = 0; code < total; ++code) {
    Digits d(n);
    uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      d[i] = static_cast<uint32_t>(c % ring->q);
      c /= ring->q;
    }
    out.push_back(std::move(d));
  }
  return out;
}

LocalElem digits_to_elem(const Ring& ring, const Digits& mu) {
  LocalElem acc = ring->zero();
  for (size_t i = 0; i < mu.size(); ++i) {
    LocalElem t = ring->teichmuller(ring->fq_from_index(mu[i]));
    acc += t * ring->pi_pow(static_cast<int>(i));
  }
  return acc;
}

Digits digit_truncate(const Digits& mu, int m) {
  if (m < 0 || m > static_cast<int>(mu.size()))
    throw std::invalid_argument("digit_truncate: m out of range");
  return Digits(mu.begin(), mu.begin() + m);
}

uint32_t digit_last(const Digits& mu) {
  if (mu.empty()) throw std::invalid_argument("digit_last: empty digits");
  return mu.back();
}

// --- printing ----------------------------------------------------------------

std::string LocalElem::str() const {
  const RingSpec& R = *ring_;
  if (R.coords() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < R.coords(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

std::string ResidueElem::str() const {
  if (ring_->f == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < ring_->f; ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  os << "O_F/pi^" << P << " (p=" << p << ", f=" << f << ", e=" << e << ", q=" << q << ")";
  return os.str();
}

}  // namespace heckelab
