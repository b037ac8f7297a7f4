#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ellb/exactalg/bigint.hpp"
#include "ellb/exactalg/graded_ring.hpp"

namespace ellb::hopfext {

// Monomial in the base ring A = Z[a1,a2,a3,a4,a6], |a_i| = i, packed into a
// 32-bit key (descending-lex order on exponents matches key order per field
// layout, but ordering of bases is always derived from exactalg enumeration).
struct AMon {
  std::uint8_t e1 = 0, e2 = 0, e3 = 0, e4 = 0, e6 = 0;

  long degree() const {
    return e1 + 2L * e2 + 3L * e3 + 4L * e4 + 6L * e6;
  }
  std::uint32_t key() const {
    return (std::uint32_t(e1) << 24) | (std::uint32_t(e2) << 18) |
           (std::uint32_t(e3) << 13) | (std::uint32_t(e4) << 8) |
           std::uint32_t(e6);
  }
  static AMon from_key(std::uint32_t k) {
    AMon m;
    m.e1 = std::uint8_t(k >> 24);
    m.e2 = std::uint8_t((k >> 18) & 0x3f);
    m.e3 = std::uint8_t((k >> 13) & 0x1f);
    m.e4 = std::uint8_t((k >> 8) & 0x1f);
    m.e6 = std::uint8_t(k & 0xff);
    return m;
  }
  AMon operator*(const AMon& o) const {
    return AMon{std::uint8_t(e1 + o.e1), std::uint8_t(e2 + o.e2),
                std::uint8_t(e3 + o.e3), std::uint8_t(e4 + o.e4),
                std::uint8_t(e6 + o.e6)};
  }
  bool is_one() const { return key() == 0; }
  bool operator==(const AMon&) const = default;
  std::string to_string() const;
};

// Monomial r^i s^j t^k in the cover ring generators, |r|=2, |s|=1, |t|=3.
struct RstMon {
  std::uint8_t i = 0, j = 0, k = 0;

  long degree() const { return 2L * i + j + 3L * k; }
  std::uint16_t key() const {
    return std::uint16_t((i << 10) | (j << 4) | k);
  }
  static RstMon from_key(std::uint16_t key) {
    return RstMon{std::uint8_t(key >> 10), std::uint8_t((key >> 4) & 0x3f),
                  std::uint8_t(key & 0x0f)};
  }
  RstMon operator*(const RstMon& o) const {
    return RstMon{std::uint8_t(i + o.i), std::uint8_t(j + o.j),
                  std::uint8_t(k + o.k)};
  }
  bool is_one() const { return i == 0 && j == 0 && k == 0; }
  bool operator==(const RstMon&) const = default;
  std::string to_string() const;
};

// Polynomial in A alone.
struct APoly {
  std::map<std::uint32_t, BigInt> terms; // AMon key -> coefficient

  void add(const AMon& m, const BigInt& c);
  APoly operator*(const APoly& o) const;
  APoly operator+(const APoly& o) const;
  APoly operator-(const APoly& o) const;
  bool operator==(const APoly&) const = default;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

// Element of Gamma = A[r,s,t]: sparse sum of coefficient * a-monomial *
// rst-monomial.  The A-coefficients always sit on the left (eta_L structure).
struct GammaElt {
  std::map<std::pair<std::uint32_t, std::uint16_t>, BigInt> terms;

  void add(const AMon& a, const RstMon& m, const BigInt& c);
  GammaElt operator*(const GammaElt& o) const;
  GammaElt operator+(const GammaElt& o) const;
  GammaElt operator-(const GammaElt& o) const;
  bool operator==(const GammaElt&) const = default;
  bool is_zero() const { return terms.empty(); }

  static GammaElt from_apoly(const APoly& p); // eta_L
  APoly counit() const;                       // r,s,t -> 0
  std::string to_string() const;
};

// Two-slot tensor over A with all coefficients pushed to the far left; used
// for Psi values.  Products of Psi(r), Psi(s), Psi(t) never acquire
// a-coefficients, so terms carry only the pair of rst-monomials.
struct TwoTensor {
  std::map<std::pair<std::uint16_t, std::uint16_t>, BigInt> terms;

  void add(const RstMon& x, const RstMon& y, const BigInt& c);
  TwoTensor operator*(const TwoTensor& o) const;
  bool operator==(const TwoTensor&) const = default;
  std::string to_string() const;
};

// The structure maps of the Weierstrass Hopf algebroid (A, A[r,s,t]):
// eta_R derived from the coordinate substitution x -> x+r, y -> y+s*x+t,
// Psi from the composition law of two substitutions.  All axioms are checked
// on construction; failure throws.
class Algebroid {
public:
  static std::shared_ptr<const Algebroid> build();

  const GradedRing& ring_a() const { return *ring_a_; }
  const GradedRing& ring_rst() const { return *ring_rst_; }

  // eta_R on the generators a1,a2,a3,a4,a6 (index 0..4).
  const GammaElt& eta_r_generator(std::size_t idx) const {
    return eta_r_[idx];
  }
  // eta_R extended multiplicatively to a monomial (memoized).
  const GammaElt& eta_r(const AMon& m) const;

  // Psi on a single rst-monomial (memoized), and its reduced form with both
  // pure-slot terms m@1 and 1@m dropped.
  const TwoTensor& psi(const RstMon& m) const;
  TwoTensor psi_bar(const RstMon& m) const;

  const APoly& delta() const { return delta_; }

  std::string check_report() const { return check_report_; }

private:
  Algebroid();
  void derive_structure_maps();
  void run_checks();

  std::unique_ptr<GradedRing> ring_a_;
  std::unique_ptr<GradedRing> ring_rst_;
  GammaElt eta_r_[5];
  APoly delta_;
  std::string check_report_;

  mutable std::map<std::uint32_t, GammaElt> eta_r_memo_;
  mutable std::map<std::uint16_t, TwoTensor> psi_memo_;
};

// a-monomial <-> exactalg exponent vector (order a1,a2,a3,a4,a6)
AMon amon_from_exponents(const Monomial& m);
Monomial amon_to_exponents(const AMon& m);
RstMon rstmon_from_exponents(const Monomial& m); // order r,s,t
Monomial rstmon_to_exponents(const RstMon& m);

} // namespace ellb::hopfext
