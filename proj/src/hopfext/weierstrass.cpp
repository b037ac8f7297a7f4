#include "ellb/hopfext/weierstrass.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace ellb::hopfext {

namespace {

std::string power_string(const char* name, unsigned e) {
  std::ostringstream out;
  out << name;
  if (e > 1) out << "^" << e;
  return out.str();
}

void append_factor(std::string& acc, const std::string& f) {
  if (!acc.empty()) acc += "*";
  acc += f;
}

std::string joined_terms(std::vector<std::pair<std::string, BigInt>> parts) {
  if (parts.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [mono, coeff] : parts) {
    if (!first) out << " + ";
    first = false;
    if (mono.empty()) {
      out << coeff.str();
    } else if (coeff == 1) {
      out << mono;
    } else if (coeff == -1) {
      out << "-" << mono;
    } else {
      out << coeff.str() << "*" << mono;
    }
  }
  return out.str();
}

} // namespace

std::string AMon::to_string() const {
  std::string acc;
  const std::array<std::pair<const char*, unsigned>, 5> gens{
      {{"a1", e1}, {"a2", e2}, {"a3", e3}, {"a4", e4}, {"a6", e6}}};
  for (auto [name, e] : gens)
    if (e > 0) append_factor(acc, power_string(name, e));
  return acc;
}

std::string RstMon::to_string() const {
  std::string acc;
  const std::array<std::pair<const char*, unsigned>, 3> gens{
      {{"r", i}, {"s", j}, {"t", k}}};
  for (auto [name, e] : gens)
    if (e > 0) append_factor(acc, power_string(name, e));
  return acc;
}

void APoly::add(const AMon& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms.find(m.key());
  if (it == terms.end()) {
    terms.emplace(m.key(), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

APoly APoly::operator*(const APoly& o) const {
  APoly out;
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : o.terms)
      out.add(AMon::from_key(ka) * AMon::from_key(kb), ca * cb);
  return out;
}

APoly APoly::operator+(const APoly& o) const {
  APoly out = *this;
  for (const auto& [k, c] : o.terms) out.add(AMon::from_key(k), c);
  return out;
}

APoly APoly::operator-(const APoly& o) const {
  APoly out = *this;
  for (const auto& [k, c] : o.terms) out.add(AMon::from_key(k), -c);
  return out;
}

std::string APoly::to_string() const {
  std::vector<std::pair<std::string, BigInt>> parts;
  for (const auto& [k, c] : terms)
    parts.emplace_back(AMon::from_key(k).to_string(), c);
  return joined_terms(std::move(parts));
}

void GammaElt::add(const AMon& a, const RstMon& m, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(a.key(), m.key());
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

GammaElt GammaElt::operator*(const GammaElt& o) const {
  GammaElt out;
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : o.terms)
      out.add(AMon::from_key(ka.first) * AMon::from_key(kb.first),
              RstMon::from_key(ka.second) * RstMon::from_key(kb.second),
              ca * cb);
  return out;
}

GammaElt GammaElt::operator+(const GammaElt& o) const {
  GammaElt out = *this;
  for (const auto& [k, c] : o.terms)
    out.add(AMon::from_key(k.first), RstMon::from_key(k.second), c);
  return out;
}

GammaElt GammaElt::operator-(const GammaElt& o) const {
  GammaElt out = *this;
  for (const auto& [k, c] : o.terms)
    out.add(AMon::from_key(k.first), RstMon::from_key(k.second), -c);
  return out;
}

GammaElt GammaElt::from_apoly(const APoly& p) {
  GammaElt out;
  for (const auto& [k, c] : p.terms) out.add(AMon::from_key(k), RstMon{}, c);
  return out;
}

APoly GammaElt::counit() const {
  APoly out;
  for (const auto& [k, c] : terms)
    if (RstMon::from_key(k.second).is_one()) out.add(AMon::from_key(k.first), c);
  return out;
}

std::string GammaElt::to_string() const {
  std::vector<std::pair<std::string, BigInt>> parts;
  for (const auto& [k, c] : terms) {
    std::string mono = AMon::from_key(k.first).to_string();
    std::string rst = RstMon::from_key(k.second).to_string();
    if (!rst.empty()) append_factor(mono, rst);
    parts.emplace_back(std::move(mono), c);
  }
  return joined_terms(std::move(parts));
}

void TwoTensor::add(const RstMon& x, const RstMon& y, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(x.key(), y.key());
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

TwoTensor TwoTensor::operator*(const TwoTensor& o) const {
  TwoTensor out;
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : o.terms)
      out.add(RstMon::from_key(ka.first) * RstMon::from_key(kb.first),
              RstMon::from_key(ka.second) * RstMon::from_key(kb.second),
              ca * cb);
  return out;
}

std::string TwoTensor::to_string() const {
  std::vector<std::pair<std::string, BigInt>> parts;
  for (const auto& [k, c] : terms) {
    RstMon x = RstMon::from_key(k.first);
    RstMon y = RstMon::from_key(k.second);
    std::string mono =
        (x.is_one() ? "1" : x.to_string()) + "@" +
        (y.is_one() ? "1" : y.to_string());
    parts.emplace_back(std::move(mono), c);
  }
  return joined_terms(std::move(parts));
}

AMon amon_from_exponents(const Monomial& m) {
  if (m.size() != 5)
    throw std::invalid_argument("a-monomial exponent vector must have 5 slots");
  return AMon{std::uint8_t(m[0]), std::uint8_t(m[1]), std::uint8_t(m[2]),
              std::uint8_t(m[3]), std::uint8_t(m[4])};
}

Monomial amon_to_exponents(const AMon& m) {
  return Monomial{m.e1, m.e2, m.e3, m.e4, m.e6};
}

RstMon rstmon_from_exponents(const Monomial& m) {
  if (m.size() != 3)
    throw std::invalid_argument(
        "rst-monomial exponent vector must have 3 slots");
  return RstMon{std::uint8_t(m[0]), std::uint8_t(m[1]), std::uint8_t(m[2])};
}

Monomial rstmon_to_exponents(const RstMon& m) {
  return Monomial{m.i, m.j, m.k};
}

namespace {

// Scratch polynomial ring in x, y, r, s, t, a1, a2, a3, a4, a6 used only to
// expand the coordinate substitution.  Exponents stay tiny.
using SubstExp = std::array<std::uint8_t, 10>;
enum { VX = 0, VY, VR, VS, VT, VA1, VA2, VA3, VA4, VA6 };

struct SubstPoly {
  std::map<SubstExp, BigInt> terms;

  static SubstPoly var(int v) {
    SubstPoly p;
    SubstExp e{};
    e[v] = 1;
    p.terms.emplace(e, 1);
    return p;
  }
  static SubstPoly constant(long c) {
    SubstPoly p;
    if (c != 0) p.terms.emplace(SubstExp{}, c);
    return p;
  }
  void add(const SubstExp& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  SubstPoly operator+(const SubstPoly& o) const {
    SubstPoly out = *this;
    for (const auto& [e, c] : o.terms) out.add(e, c);
    return out;
  }
  SubstPoly operator-(const SubstPoly& o) const {
    SubstPoly out = *this;
    for (const auto& [e, c] : o.terms) out.add(e, -c);
    return out;
  }
  SubstPoly operator*(const SubstPoly& o) const {
    SubstPoly out;
    for (const auto& [ea, ca] : terms)
      for (const auto& [eb, cb] : o.terms) {
        SubstExp e;
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = std::uint8_t(ea[i] + eb[i]);
        out.add(e, ca * cb);
      }
    return out;
  }
  SubstPoly pow(unsigned n) const {
    SubstPoly out = constant(1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }
};

// Coefficients of x^dx * y^dy in p, as an element of Gamma.
GammaElt xy_coefficient(const SubstPoly& p, unsigned dx, unsigned dy) {
  GammaElt out;
  for (const auto& [e, c] : p.terms) {
    if (e[VX] != dx || e[VY] != dy) continue;
    AMon a{e[VA1], e[VA2], e[VA3], e[VA4], e[VA6]};
    RstMon m{e[VR], e[VS], e[VT]};
    out.add(a, m, c);
  }
  return out;
}

GammaElt gamma_constant(long c) {
  GammaElt out;
  out.add(AMon{}, RstMon{}, c);
  return out;
}

long gamma_degree(const GammaElt& g, const char* what) {
  long deg = -1;
  for (const auto& [k, c] : g.terms) {
    long d = AMon::from_key(k.first).degree() +
             RstMon::from_key(k.second).degree();
    if (deg == -1) deg = d;
    if (d != deg)
      throw std::logic_error(std::string(what) + " is not homogeneous");
  }
  return deg;
}

// Three-slot integer tensors, just enough to state coassociativity.
struct ThreeTensor {
  std::map<std::array<std::uint16_t, 3>, BigInt> terms;

  void add(std::uint16_t a, std::uint16_t b, std::uint16_t c,
           const BigInt& v) {
    if (v == 0) return;
    std::array<std::uint16_t, 3> key{a, b, c};
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, v);
      return;
    }
    it->second += v;
    if (it->second == 0) terms.erase(it);
  }
  bool operator==(const ThreeTensor&) const = default;
};

} // namespace

Algebroid::Algebroid() {
  ring_a_ = std::make_unique<GradedRing>(
      Domain::integers(),
      std::vector<std::string>{"a1", "a2", "a3", "a4", "a6"},
      std::vector<long>{1, 2, 3, 4, 6});
  ring_rst_ = std::make_unique<GradedRing>(
      Domain::integers(), std::vector<std::string>{"r", "s", "t"},
      std::vector<long>{2, 1, 3});
}

std::shared_ptr<const Algebroid> Algebroid::build() {
  auto alg = std::shared_ptr<Algebroid>(new Algebroid());
  alg->derive_structure_maps();
  alg->run_checks();
  return alg;
}

void Algebroid::derive_structure_maps() {
  // The long Weierstrass polynomial and the generic coordinate change
  // x -> x + r, y -> y + s*x + t.
  SubstPoly x = SubstPoly::var(VX), y = SubstPoly::var(VY);
  SubstPoly r = SubstPoly::var(VR), s = SubstPoly::var(VS),
            t = SubstPoly::var(VT);
  SubstPoly a1 = SubstPoly::var(VA1), a2 = SubstPoly::var(VA2),
            a3 = SubstPoly::var(VA3), a4 = SubstPoly::var(VA4),
            a6 = SubstPoly::var(VA6);

  SubstPoly xn = x + r;
  SubstPoly yn = y + s * x + t;
  SubstPoly g = yn * yn + a1 * xn * yn + a3 * yn - xn.pow(3) - a2 * xn * xn -
                a4 * xn - a6;

  // The substituted polynomial must again be a long Weierstrass polynomial:
  // monic in y^2, cubic coefficient -1, no x^2*y term, support limited to the
  // seven Weierstrass monomials.  Anything else means the expansion is wrong.
  for (const auto& [e, c] : g.terms) {
    unsigned dx = e[VX], dy = e[VY];
    bool ok = (dx == 0 && dy == 2) || (dx == 3 && dy == 0) ||
              (dx == 1 && dy == 1) || (dx == 2 && dy == 0) ||
              (dx == 0 && dy == 1) || (dx == 1 && dy == 0) ||
              (dx == 0 && dy == 0);
    if (!ok)
      throw std::logic_error("substitution produced a non-Weierstrass term");
  }
  if (!(xy_coefficient(g, 0, 2) == gamma_constant(1)))
    throw std::logic_error("substitution is not monic in y^2");
  if (!(xy_coefficient(g, 3, 0) == gamma_constant(-1)))
    throw std::logic_error("substitution broke the cubic term");
  if (!xy_coefficient(g, 2, 1).is_zero())
    throw std::logic_error("substitution produced an x^2*y term");

  eta_r_[0] = xy_coefficient(g, 1, 1);                    // a1'
  eta_r_[1] = gamma_constant(0) - xy_coefficient(g, 2, 0); // a2'
  eta_r_[2] = xy_coefficient(g, 0, 1);                     // a3'
  eta_r_[3] = gamma_constant(0) - xy_coefficient(g, 1, 0); // a4'
  eta_r_[4] = gamma_constant(0) - xy_coefficient(g, 0, 0); // a6'

  // Discriminant of the long Weierstrass form.
  APoly pa1, pa2, pa3, pa4, pa6;
  pa1.add(AMon{1, 0, 0, 0, 0}, 1);
  pa2.add(AMon{0, 1, 0, 0, 0}, 1);
  pa3.add(AMon{0, 0, 1, 0, 0}, 1);
  pa4.add(AMon{0, 0, 0, 1, 0}, 1);
  pa6.add(AMon{0, 0, 0, 0, 1}, 1);
  auto scale = [](const APoly& p, long c) {
    APoly k;
    k.add(AMon{}, c);
    return k * p;
  };
  APoly b2 = pa1 * pa1 + scale(pa2, 4);
  APoly b4 = scale(pa4, 2) + pa1 * pa3;
  APoly b6 = pa3 * pa3 + scale(pa6, 4);
  APoly b8 = pa1 * pa1 * pa6 + scale(pa2 * pa6, 4) - pa1 * pa3 * pa4 +
             pa2 * pa3 * pa3 - pa4 * pa4;
  delta_ = scale(b2 * b2 * b8, -1) - scale(b4 * b4 * b4, 8) -
           scale(b6 * b6, 27) + scale(b2 * b4 * b6, 9);

  // Two classical identities pin the b-coefficients and the discriminant:
  // 4*b8 = b2*b6 - b4^2 and c4^3 - c6^2 = 1728*Delta.
  if (!(scale(b8, 4) == b2 * b6 - b4 * b4))
    throw std::logic_error("b8 fails 4*b8 = b2*b6 - b4^2");
  APoly c4 = b2 * b2 - scale(b4, 24);
  APoly c6 = scale(b2 * b2 * b2, -1) + scale(b2 * b4, 36) - scale(b6, 216);
  if (!(c4 * c4 * c4 - c6 * c6 == scale(delta_, 1728)))
    throw std::logic_error("discriminant fails c4^3 - c6^2 = 1728*Delta");
}

const GammaElt& Algebroid::eta_r(const AMon& m) const {
  auto it = eta_r_memo_.find(m.key());
  if (it != eta_r_memo_.end()) return it->second;
  GammaElt acc = gamma_constant(1);
  const std::array<unsigned, 5> exps{m.e1, m.e2, m.e3, m.e4, m.e6};
  for (std::size_t g = 0; g < 5; ++g)
    for (unsigned i = 0; i < exps[g]; ++i) acc = acc * eta_r_[g];
  return eta_r_memo_.emplace(m.key(), std::move(acc)).first->second;
}

const TwoTensor& Algebroid::psi(const RstMon& m) const {
  auto it = psi_memo_.find(m.key());
  if (it != psi_memo_.end()) return it->second;

  // Psi on generators comes from composing two coordinate changes:
  // (r1,s1,t1) followed by (r2,s2,t2) is (r1+r2, s1+s2, t1+t2+s1*r2).
  TwoTensor pr, ps, pt, one;
  one.add(RstMon{}, RstMon{}, 1);
  pr.add(RstMon{1, 0, 0}, RstMon{}, 1);
  pr.add(RstMon{}, RstMon{1, 0, 0}, 1);
  ps.add(RstMon{0, 1, 0}, RstMon{}, 1);
  ps.add(RstMon{}, RstMon{0, 1, 0}, 1);
  pt.add(RstMon{0, 0, 1}, RstMon{}, 1);
  pt.add(RstMon{}, RstMon{0, 0, 1}, 1);
  pt.add(RstMon{0, 1, 0}, RstMon{1, 0, 0}, 1);

  TwoTensor acc = one;
  for (unsigned i = 0; i < m.i; ++i) acc = acc * pr;
  for (unsigned j = 0; j < m.j; ++j) acc = acc * ps;
  for (unsigned k = 0; k < m.k; ++k) acc = acc * pt;
  return psi_memo_.emplace(m.key(), std::move(acc)).first->second;
}

TwoTensor Algebroid::psi_bar(const RstMon& m) const {
  if (m.is_one())
    throw std::invalid_argument("psi_bar is only defined on nonconstant "
                                "monomials");
  const TwoTensor& full = psi(m);
  TwoTensor out, left_unit, right_unit;
  for (const auto& [k, c] : full.terms) {
    RstMon x = RstMon::from_key(k.first);
    RstMon y = RstMon::from_key(k.second);
    if (x.is_one())
      left_unit.add(x, y, c);
    else if (y.is_one())
      right_unit.add(x, y, c);
    else
      out.add(x, y, c);
  }
  // Counit axiom forces the dropped parts to be exactly 1@m and m@1.
  TwoTensor expect_left, expect_right;
  expect_left.add(RstMon{}, m, 1);
  expect_right.add(m, RstMon{}, 1);
  if (!(left_unit == expect_left) || !(right_unit == expect_right))
    throw std::logic_error("psi(" + m.to_string() +
                           ") has unexpected unit-slot terms");
  return out;
}

void Algebroid::run_checks() {
  std::ostringstream report;

  // Degree preservation and the counit on eta_R.
  const std::array<long, 5> gen_deg{1, 2, 3, 4, 6};
  const std::array<const char*, 5> gen_name{"a1", "a2", "a3", "a4", "a6"};
  for (std::size_t g = 0; g < 5; ++g) {
    if (gamma_degree(eta_r_[g], gen_name[g]) != gen_deg[g])
      throw std::logic_error("eta_R changed the degree of a generator");
    APoly expect;
    AMon gen;
    switch (g) {
      case 0: gen.e1 = 1; break;
      case 1: gen.e2 = 1; break;
      case 2: gen.e3 = 1; break;
      case 3: gen.e4 = 1; break;
      case 4: gen.e6 = 1; break;
    }
    expect.add(gen, 1);
    if (!(eta_r_[g].counit() == expect))
      throw std::logic_error("counit fails on eta_R of a generator");
  }
  report << "eta_R: degree-preserving, eps(eta_R(a)) = a on generators\n";

  // Counit on Psi: dropping either slot of Psi(g) recovers g, for each
  // generator g of the cover ring.
  const std::array<RstMon, 3> rst_gens{RstMon{1, 0, 0}, RstMon{0, 1, 0},
                                       RstMon{0, 0, 1}};
  for (const RstMon& g : rst_gens) {
    const TwoTensor& p = psi(g);
    std::map<std::uint16_t, BigInt> left_dropped, right_dropped;
    for (const auto& [k, c] : p.terms) {
      if (RstMon::from_key(k.first).is_one()) left_dropped[k.second] += c;
      if (RstMon::from_key(k.second).is_one()) right_dropped[k.first] += c;
    }
    std::map<std::uint16_t, BigInt> expect{{g.key(), 1}};
    if (left_dropped != expect || right_dropped != expect)
      throw std::logic_error("counit fails on psi of a generator");
  }
  report << "psi: (eps@id)psi = id = (id@eps)psi on r, s, t\n";

  // Coassociativity on generators, as integer three-tensors.
  for (const RstMon& g : rst_gens) {
    ThreeTensor lhs, rhs;
    for (const auto& [k, c] : psi(g).terms) {
      for (const auto& [k2, c2] : psi(RstMon::from_key(k.first)).terms)
        lhs.add(k2.first, k2.second, k.second, c * c2);
      for (const auto& [k2, c2] : psi(RstMon::from_key(k.second)).terms)
        rhs.add(k.first, k2.first, k2.second, c * c2);
    }
    if (!(lhs == rhs))
      throw std::logic_error("psi fails coassociativity on a generator");
  }
  report << "psi: (psi@id)psi = (id@psi)psi on r, s, t\n";

  // The discriminant is invariant: eta_R(Delta) = eta_L(Delta).
  GammaElt d_right;
  for (const auto& [k, c] : delta_.terms) {
    GammaElt scaled;
    for (const auto& [k2, c2] : eta_r(AMon::from_key(k)).terms)
      scaled.add(AMon::from_key(k2.first), RstMon::from_key(k2.second),
                 c * c2);
    d_right = d_right + scaled;
  }
  if (!(d_right == GammaElt::from_apoly(delta_)))
    throw std::logic_error("discriminant is not eta_R-invariant");
  if (gamma_degree(d_right, "Delta") != 12)
    throw std::logic_error("discriminant does not have degree 12");
  report << "Delta: degree 12, eta_R(Delta) = eta_L(Delta)\n";

  check_report_ = report.str();
}

} // namespace ellb::hopfext
