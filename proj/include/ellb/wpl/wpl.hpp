#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ellb::wpl {

// Weighted projective line P(k, l).
struct WeightedLine {
  long k, l;
  WeightedLine(long k_, long l_);
};

// Basis of a cohomology group of O(m) as a set of lattice points: solutions
// of a*k + b*l = m with both coordinates >= 0 (degree 0) or both < 0
// (degree 1).
struct LatticePointSet {
  int degree = 0; // 0 or 1
  long twist = 0;
  std::vector<std::pair<long, long>> points;

  std::size_t rank() const { return points.size(); }
};

LatticePointSet h0_basis(const WeightedLine& w, long m);
LatticePointSet h1_basis(const WeightedLine& w, long m);

// The bijection h0_basis(m) -> h1_basis(-m-k-l), (a,b) -> (-a-1,-b-1).
// Both directions are checked before returning.
using PointPair = std::pair<std::pair<long, long>, std::pair<long, long>>;
std::vector<PointPair> serre_pairing(const WeightedLine& w, long m);

// Both cohomology rows over a twist range, with the full point sets kept so
// emitters can show them.
struct CohChart {
  long k, l;
  long m_lo, m_hi;
  std::vector<LatticePointSet> h0; // indexed by m - m_lo
  std::vector<LatticePointSet> h1;

  std::vector<std::size_t> h0_ranks() const;
  std::vector<std::size_t> h1_ranks() const;
};

CohChart chart(const WeightedLine& w, long m_lo, long m_hi);

// One '#' per basis element, one line per twist.
std::string chart_ascii(const CohChart& c);
// {"weights":[k,l],"rows":{"h0":[{"m":..,"rank":..,"points":[[a,b],..]}],"h1":[..]}}
std::string chart_json(const CohChart& c);

} // namespace ellb::wpl
