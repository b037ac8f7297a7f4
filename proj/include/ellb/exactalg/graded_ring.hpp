#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellb/exactalg/bigint.hpp"

namespace ellb {

// Coefficient domain: the integers, the integers localized at a prime p, or a
// prime field F_p.  Elements are stored with integer coefficients throughout;
// the domain decides which coefficients are units and how coefficients
// normalize (reduction mod p for finite fields, identity otherwise).
struct Domain {
  enum class Kind { Integers, LocalizedAt, FiniteField };
  Kind kind = Kind::Integers;
  long prime = 0;

  static Domain integers() { return Domain{Kind::Integers, 0}; }
  static Domain localized_at(long p);
  static Domain finite_field(long p);

  bool is_unit(const BigInt& x) const;
  BigInt normalize(BigInt x) const;
  bool operator==(const Domain& o) const = default;
};

// Exponent vector over the ring's generator list; entry i is the power of
// generator i.  Always sized to the full generator count so vectors compare
// componentwise.
using Monomial = std::vector<unsigned>;

class GradedElement;

// Graded polynomial ring with named generators of positive degree.  Rings are
// pinned in memory (no copies) because elements refer to them by pointer.
class GradedRing {
public:
  GradedRing(Domain domain, std::vector<std::string> generator_names,
             std::vector<long> generator_degrees);
  GradedRing(const GradedRing&) = delete;
  GradedRing& operator=(const GradedRing&) = delete;

  const Domain& domain() const { return domain_; }
  std::size_t generator_count() const { return names_.size(); }
  const std::string& generator_name(std::size_t i) const { return names_[i]; }
  long generator_degree(std::size_t i) const { return degrees_[i]; }
  std::size_t generator_index(const std::string& name) const;

  long monomial_degree(const Monomial& m) const;
  std::string monomial_to_string(const Monomial& m) const;

  // Localization bookkeeping: elements formally inverted in this ring (the
  // discriminant, for instance).  Recorded for reporting; arithmetic stays in
  // the polynomial part.
  void add_inverted_element(const GradedElement& e);
  const std::vector<GradedElement>& inverted_elements() const {
    return inverted_;
  }

private:
  Domain domain_;
  std::vector<std::string> names_;
  std::vector<long> degrees_;
  std::vector<GradedElement> inverted_;
};

// Homogeneous element of a graded ring: a degree plus a sparse
// monomial-to-coefficient map.  Zero coefficients are never stored, and every
// stored monomial must have exactly the element's degree.
class GradedElement {
public:
  GradedElement(const GradedRing& ring, long degree);

  static GradedElement zero(const GradedRing& ring, long degree);
  static GradedElement constant(const GradedRing& ring, BigInt value);
  static GradedElement generator(const GradedRing& ring, std::size_t index);
  static GradedElement generator(const GradedRing& ring,
                                 const std::string& name);

  const GradedRing& ring() const { return *ring_; }
  long degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt, std::greater<Monomial>>& terms() const {
    return terms_;
  }

  BigInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const BigInt& coeff);

  GradedElement operator+(const GradedElement& other) const;
  GradedElement operator-(const GradedElement& other) const;
  GradedElement operator*(const GradedElement& other) const;
  GradedElement operator*(const BigInt& scalar) const;
  GradedElement operator-() const;
  bool operator==(const GradedElement& other) const;

  std::string to_string() const;

private:
  const GradedRing* ring_;
  long degree_;
  std::map<Monomial, BigInt, std::greater<Monomial>> terms_;
};

// All monomials of the given total degree, in descending lexicographic order
// on the exponent vector (so pure powers of the first generator come first).
std::vector<Monomial> monomials_of_degree(const GradedRing& ring, long degree);

} // namespace ellb
