#include "ellb/exactalg/graded_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace ellb {

Domain Domain::localized_at(long p) {
  if (p < 2) throw std::invalid_argument("localization prime must be >= 2");
  return Domain{Kind::LocalizedAt, p};
}

Domain Domain::finite_field(long p) {
  if (p < 2) throw std::invalid_argument("finite field characteristic must be >= 2");
  return Domain{Kind::FiniteField, p};
}

bool Domain::is_unit(const BigInt& x) const {
  if (x == 0) return false;
  if (kind == Kind::Integers) return x == 1 || x == -1;
  // Localized at p: units are the integers prime to p.  Prime fields: every
  // nonzero residue.
  return big_abs(x) % prime != 0;
}

BigInt Domain::normalize(BigInt x) const {
  if (kind != Kind::FiniteField) return x;
  x %= prime;
  if (x < 0) x += prime;
  return x;
}

GradedRing::GradedRing(Domain domain, std::vector<std::string> generator_names,
                       std::vector<long> generator_degrees)
    : domain_(domain),
      names_(std::move(generator_names)),
      degrees_(std::move(generator_degrees)) {
  if (names_.size() != degrees_.size())
    throw std::invalid_argument("generator name/degree count mismatch");
  for (long d : degrees_)
    if (d <= 0) throw std::invalid_argument("generator degrees must be positive");
}

std::size_t GradedRing::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown generator: " + name);
}

long GradedRing::monomial_degree(const Monomial& m) const {
  if (m.size() != names_.size())
    throw std::invalid_argument("monomial length does not match generator count");
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    d += degrees_[i] * static_cast<long>(m[i]);
  return d;
}

std::string GradedRing::monomial_to_string(const Monomial& m) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    out << names_[i];
    if (m[i] > 1) out << "^" << m[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

void GradedRing::add_inverted_element(const GradedElement& e) {
  if (&e.ring() != this)
    throw std::invalid_argument("inverted element belongs to a different ring");
  if (e.is_zero()) throw std::invalid_argument("cannot invert zero");
  inverted_.push_back(e);
}

GradedElement::GradedElement(const GradedRing& ring, long degree)
    : ring_(&ring), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("element degree must be >= 0");
}

GradedElement GradedElement::zero(const GradedRing& ring, long degree) {
  return GradedElement(ring, degree);
}

GradedElement GradedElement::constant(const GradedRing& ring, BigInt value) {
  GradedElement e(ring, 0);
  value = ring.domain().normalize(std::move(value));
  if (value != 0) e.terms_[Monomial(ring.generator_count(), 0)] = std::move(value);
  return e;
}

GradedElement GradedElement::generator(const GradedRing& ring,
                                       std::size_t index) {
  if (index >= ring.generator_count())
    throw std::invalid_argument("generator index out of range");
  GradedElement e(ring, ring.generator_degree(index));
  Monomial m(ring.generator_count(), 0);
  m[index] = 1;
  e.terms_[m] = 1;
  return e;
}

GradedElement GradedElement::generator(const GradedRing& ring,
                                       const std::string& name) {
  return generator(ring, ring.generator_index(name));
}

BigInt GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GradedElement::add_term(const Monomial& m, const BigInt& coeff) {
  BigInt c = ring_->domain().normalize(coeff);
  if (c == 0) return;
  if (ring_->monomial_degree(m) != degree_)
    throw std::invalid_argument("monomial degree does not match element degree");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = ring_->domain().normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

GradedElement GradedElement::operator+(const GradedElement& other) const {
  if (ring_ != other.ring_)
    throw std::invalid_argument("elements belong to different rings");
  // A zero element acts as the identity in any degree.
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_)
    throw std::invalid_argument("cannot add elements of different degrees");
  GradedElement out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

GradedElement GradedElement::operator-(const GradedElement& other) const {
  return *this + (-other);
}

GradedElement GradedElement::operator-() const {
  GradedElement out(*ring_, degree_);
  for (const auto& [m, c] : terms_)
    out.terms_[m] = ring_->domain().normalize(-c);
  return out;
}

GradedElement GradedElement::operator*(const GradedElement& other) const {
  if (ring_ != other.ring_)
    throw std::invalid_argument("elements belong to different rings");
  GradedElement out(*ring_, degree_ + other.degree_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

GradedElement GradedElement::operator*(const BigInt& scalar) const {
  GradedElement out(*ring_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
  return out;
}

bool GradedElement::operator==(const GradedElement& other) const {
  return ring_ == other.ring_ && degree_ == other.degree_ &&
         terms_ == other.terms_;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    BigInt a = big_abs(c);
    std::string mono = ring_->monomial_to_string(m);
    if (a != 1 || mono == "1") {
      out << a;
      if (mono != "1") out << "*";
    }
    if (mono != "1") out << mono;
    first = false;
  }
  return out.str();
}

namespace {

void enumerate_monomials(const GradedRing& ring, std::size_t index,
                         long remaining, Monomial& current,
                         std::vector<Monomial>& out) {
  if (index == ring.generator_count()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  long d = ring.generator_degree(index);
  // Descending exponent at each position yields descending lex order overall.
  for (long e = remaining / d; e >= 0; --e) {
    current[index] = static_cast<unsigned>(e);
    enumerate_monomials(ring, index + 1, remaining - e * d, current, out);
  }
  current[index] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, long degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Monomial> out;
  Monomial current(ring.generator_count(), 0);
  enumerate_monomials(ring, 0, degree, current, out);
  return out;
}

} // namespace ellb
