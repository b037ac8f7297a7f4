#include "ellb/wpl/wpl.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ellb::wpl {

WeightedLine::WeightedLine(long k_, long l_) : k(k_), l(l_) {
  if (k < 1 || l < 1) throw std::invalid_argument("weights must be >= 1");
}

LatticePointSet h0_basis(const WeightedLine& w, long m) {
  LatticePointSet out{0, m, {}};
  if (m < 0) return out;
  for (long a = 0; a * w.k <= m; ++a) {
    long rem = m - a * w.k;
    if (rem % w.l == 0) out.points.emplace_back(a, rem / w.l);
  }
  return out;
}

LatticePointSet h1_basis(const WeightedLine& w, long m) {
  LatticePointSet out{1, m, {}};
  // c,d <= -1 forces c*k >= m + l, so c runs over a finite window below -1.
  for (long c = -1; c * w.k >= m + w.l; --c) {
    long rem = m - c * w.k; // = d*l, must be <= -l
    if (rem % w.l == 0 && rem / w.l <= -1) out.points.emplace_back(c, rem / w.l);
  }
  return out;
}

std::vector<PointPair> serre_pairing(const WeightedLine& w, long m) {
  LatticePointSet h0 = h0_basis(w, m);
  LatticePointSet h1 = h1_basis(w, -m - w.k - w.l);
  if (h0.rank() != h1.rank())
    throw std::logic_error("duality partners have different ranks");

  std::vector<PointPair> out;
  for (const auto& [a, b] : h0.points) {
    std::pair<long, long> image{-a - 1, -b - 1};
    bool found = false;
    for (const auto& q : h1.points)
      if (q == image) {
        found = true;
        break;
      }
    if (!found)
      throw std::logic_error("pairing image missing from target basis");
    out.emplace_back(std::make_pair(a, b), image);
  }
  // Injectivty of (a,b) -> (-a-1,-b-1) plus equal ranks makes this onto;
  // check the backward direction anyway.
  for (const auto& [c, d] : h1.points) {
    std::pair<long, long> pre{-c - 1, -d - 1};
    bool found = false;
    for (const auto& p : h0.points)
      if (p == pre) {
        found = true;
        break;
      }
    if (!found)
      throw std::logic_error("pairing preimage missing from source basis");
  }
  return out;
}

CohChart chart(const WeightedLine& w, long m_lo, long m_hi) {
  if (m_lo > m_hi) throw std::invalid_argument("twist range is empty");
  CohChart c{w.k, w.l, m_lo, m_hi, {}, {}};
  for (long m = m_lo; m <= m_hi; ++m) {
    c.h0.push_back(h0_basis(w, m));
    c.h1.push_back(h1_basis(w, m));
  }
  return c;
}

std::vector<std::size_t> CohChart::h0_ranks() const {
  std::vector<std::size_t> out;
  for (const auto& s : h0) out.push_back(s.rank());
  return out;
}

std::vector<std::size_t> CohChart::h1_ranks() const {
  std::vector<std::size_t> out;
  for (const auto& s : h1) out.push_back(s.rank());
  return out;
}

std::string chart_ascii(const CohChart& c) {
  std::ostringstream out;
  out << "P(" << c.k << "," << c.l << ")  twists " << c.m_lo << ".." << c.m_hi
      << "\n";
  out << std::setw(6) << "m"
      << "  H0          H1\n";
  for (long m = c.m_lo; m <= c.m_hi; ++m) {
    std::size_t i = static_cast<std::size_t>(m - c.m_lo);
    std::string h0(c.h0[i].rank(), '#');
    std::string h1(c.h1[i].rank(), '#');
    if (h0.empty()) h0 = ".";
    if (h1.empty()) h1 = ".";
    out << std::setw(6) << m << "  " << h0;
    if (h0.size() < 12)
      out << std::string(12 - h0.size(), ' ');
    else
      out << ' ';
    out << h1 << "\n";
  }
  return out.str();
}

std::string chart_json(const CohChart& c) {
  nlohmann::ordered_json j;
  j["weights"] = {c.k, c.l};
  auto row = [&](const std::vector<LatticePointSet>& sets) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : sets) {
      nlohmann::ordered_json e;
      e["m"] = s.twist;
      e["rank"] = s.rank();
      auto pts = nlohmann::ordered_json::array();
      for (const auto& [a, b] : s.points) pts.push_back({a, b});
      e["points"] = std::move(pts);
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["rows"]["h0"] = row(c.h0);
  j["rows"]["h1"] = row(c.h1);
  return j.dump(2);
}

} // namespace ellb::wpl
