#include "ellb/moduli3/bundle.hpp"

#include <algorithm>
#include <tuple>

namespace ellb::moduli3 {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Line: return "Line";
    case Kind::Ealpha: return "Ealpha";
    case Kind::FPush: return "FPush";
  }
  throw std::logic_error("to_string: bad Kind");
}

Kind kind_from_string(const std::string& text) {
  if (text == "Line") return Kind::Line;
  if (text == "Ealpha") return Kind::Ealpha;
  if (text == "FPush") return Kind::FPush;
  throw std::invalid_argument("unknown summand kind '" + text +
                              "' (expected Line, Ealpha or FPush)");
}

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Line: return 1;
    case Kind::Ealpha: return 2;
    case Kind::FPush: return 3;
  }
  throw std::logic_error("kind_rank: bad Kind");
}

int mod12(int t) { return ((t % 12) + 12) % 12; }

std::string StandardSummand::to_string() const {
  std::string t = std::to_string(twist);
  switch (kind) {
    case Kind::Line: return "w^" + t;
    case Kind::Ealpha: return "Ea(" + t + ")";
    case Kind::FPush: return "FP(" + t + ")";
  }
  throw std::logic_error("StandardSummand::to_string: bad Kind");
}

bool canonical_less(const StandardSummand& a, const StandardSummand& b) {
  return std::tuple(static_cast<int>(a.kind), mod12(a.twist), a.twist) <
         std::tuple(static_cast<int>(b.kind), mod12(b.twist), b.twist);
}

StandardBundle::StandardBundle(std::vector<StandardSummand> summands)
    : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end(), canonical_less);
}

int StandardBundle::rank() const {
  int r = 0;
  for (const auto& s : summands_) r += s.rank();
  return r;
}

StandardBundle StandardBundle::add(const StandardSummand& s) const {
  auto v = summands_;
  v.push_back(s);
  return StandardBundle(std::move(v));
}

StandardBundle StandardBundle::remove(std::size_t index) const {
  auto v = summands_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(index));
  return StandardBundle(std::move(v));
}

std::vector<std::pair<int, int>> StandardBundle::key() const {
  std::vector<std::pair<int, int>> k;
  k.reserve(summands_.size());
  for (const auto& s : summands_)
    k.emplace_back(static_cast<int>(s.kind), mod12(s.twist));
  return k;
}

std::string StandardBundle::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += " + ";
    out += summands_[i].to_string();
  }
  return out;
}

bool bundle_less(const StandardBundle& a, const StandardBundle& b) {
  return a.key() < b.key();
}

StandardBundle direct_sum(const StandardBundle& a, const StandardBundle& b) {
  auto v = a.summands();
  const auto& w = b.summands();
  v.insert(v.end(), w.begin(), w.end());
  return StandardBundle(std::move(v));
}

namespace {

void check_degree(int i, const char* who) {
  if (i != 1 && i != 2)
    throw std::invalid_argument(std::string(who) + ": degree " +
                                std::to_string(i) + " outside {1, 2}");
}

int summand_cohomology(const StandardSummand& s, int i, int j) {
  const int r = mod12(s.twist + j);
  switch (s.kind) {
    case Kind::Line: return r == (i == 1 ? 2 : 6) ? 1 : 0;
    case Kind::Ealpha: return r == (i == 1 ? 4 : 6) ? 1 : 0;
    case Kind::FPush: return 0;
  }
  throw std::logic_error("summand_cohomology: bad Kind");
}

} // namespace

int cohomology_dim(const StandardBundle& b, int i, int j) {
  check_degree(i, "cohomology_dim");
  int total = 0;
  for (const auto& s : b.summands()) total += summand_cohomology(s, i, j);
  return total;
}

int ext_dim_pair(const StandardSummand& x, const StandardSummand& y, int i) {
  check_degree(i, "ext_dim_pair");
  if (x.kind == Kind::FPush || y.kind == Kind::FPush) return 0;
  const int d = mod12(x.twist - y.twist);
  if (x.kind == Kind::Line && y.kind == Kind::Line)
    return d == (i == 1 ? 10 : 6) ? 1 : 0;
  if (x.kind == Kind::Line && y.kind == Kind::Ealpha)
    return d == (i == 1 ? 8 : 6) ? 1 : 0;
  if (x.kind == Kind::Ealpha && y.kind == Kind::Line)
    return d == (i == 1 ? 10 : 8) ? 1 : 0;
  // Ea -> Ea
  return d == (i == 1 ? 10 : 0) ? 1 : 0;
}

ExtResult ext_dim_info(const StandardBundle& x, const StandardBundle& y,
                       int i) {
  check_degree(i, "ext_dim_info");
  ExtResult out;
  for (const auto& sx : x.summands())
    for (const auto& sy : y.summands()) {
      const int d = ext_dim_pair(sx, sy, i);
      out.dim += d;
      if (d > 0 && i == 2 && sx.kind == Kind::Ealpha &&
          sy.kind == Kind::Ealpha)
        out.derived_entry = true;
    }
  return out;
}

int ext_dim(const StandardBundle& x, const StandardBundle& y, int i) {
  return ext_dim_info(x, y, i).dim;
}

StandardSummand dual(const StandardSummand& s) {
  switch (s.kind) {
    case Kind::Line: return {Kind::Line, -s.twist};
    case Kind::Ealpha: return {Kind::Ealpha, 2 - s.twist};
    case Kind::FPush: return {Kind::FPush, -s.twist};
  }
  throw std::logic_error("dual: bad Kind");
}

StandardBundle dual(const StandardBundle& b) {
  std::vector<StandardSummand> v;
  v.reserve(b.size());
  for (const auto& s : b.summands()) v.push_back(dual(s));
  return StandardBundle(std::move(v));
}

namespace {

// Product of two single summands as a list of summands with raw twists.
std::vector<StandardSummand> tensor_pair(const StandardSummand& x,
                                         const StandardSummand& y) {
  const int t = x.twist + y.twist;
  if (x.kind == Kind::Line) return {{y.kind, t}};
  if (y.kind == Kind::Line) return {{x.kind, t}};
  if (x.kind == Kind::Ealpha && y.kind == Kind::Ealpha)
    return {{Kind::FPush, t}, {Kind::Line, t - 2}};
  if (x.kind == Kind::FPush && y.kind == Kind::FPush)
    throw Unsupported("tensor: FP (x) FP has no standard expansion in the "
                      "rule set");
  // One factor is Ea, the other FP.
  return {{Kind::FPush, t}, {Kind::FPush, t - 2}};
}

} // namespace

StandardBundle tensor(const StandardBundle& x, const StandardBundle& y) {
  std::vector<StandardSummand> v;
  for (const auto& sx : x.summands())
    for (const auto& sy : y.summands())
      for (const auto& s : tensor_pair(sx, sy)) v.push_back(s);
  return StandardBundle(std::move(v));
}

bool rank_h1_corollary_check(const StandardBundle& b) {
  for (int j = 0; j < 12; ++j)
    if (cohomology_dim(b, 1, j) != 0) return true; // antecedent fails
  return b.rank() % 3 == 0;
}

} // namespace ellb::moduli3
