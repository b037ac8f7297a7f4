#include "ellb/hopfext/cobar.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ellb::hopfext {

long Word::degree() const {
  long d = AMon::from_key(amon).degree();
  for (std::size_t i = 0; i < s; ++i)
    d += RstMon::from_key(slots[i]).degree();
  return d;
}

bool Word::operator<(const Word& o) const {
  if (s != o.s) return s < o.s;
  if (amon != o.amon) return amon < o.amon;
  return slots < o.slots;
}

std::string Word::to_string() const {
  std::ostringstream out;
  std::string a = AMon::from_key(amon).to_string();
  out << (a.empty() ? "1" : a);
  for (std::size_t i = 0; i < s; ++i)
    out << " | " << RstMon::from_key(slots[i]).to_string();
  return out.str();
}

std::size_t WordHash::operator()(const Word& w) const {
  std::uint64_t h = w.amon * 0x9e3779b97f4a7c15ull + w.s;
  for (std::size_t i = 0; i < w.s; ++i) {
    h ^= w.slots[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return std::size_t(h);
}

void cobar_add(CobarElt& acc, const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

std::string cobar_to_string(const CobarElt& e) {
  if (e.empty()) return "0";
  std::vector<std::pair<Word, BigInt>> terms(e.begin(), e.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) out << "  +  ";
    first = false;
    out << c.str() << " * (" << w.to_string() << ")";
  }
  return out.str();
}

CobarEngine::CobarEngine(std::shared_ptr<const Algebroid> alg,
                         std::size_t basis_cap)
    : alg_(std::move(alg)), cap_(basis_cap) {}

const std::vector<Monomial>& CobarEngine::amons_of(long degree) const {
  auto it = amon_memo_.find(degree);
  if (it != amon_memo_.end()) return it->second;
  return amon_memo_.emplace(degree, monomials_of_degree(alg_->ring_a(), degree))
      .first->second;
}

const std::vector<Monomial>& CobarEngine::rst_of(long degree) const {
  auto it = rst_memo_.find(degree);
  if (it != rst_memo_.end()) return it->second;
  return rst_memo_
      .emplace(degree, monomials_of_degree(alg_->ring_rst(), degree))
      .first->second;
}

// Number of s-tuples of nonconstant rst-monomials with total degree m.
long long CobarEngine::words_count(long s, long m) const {
  if (s == 0) return m == 0 ? 1 : 0;
  if (m < s) return 0; // every slot has degree at least 1
  auto key = std::make_pair(s, m);
  auto it = words_count_memo_.find(key);
  if (it != words_count_memo_.end()) return it->second;
  long long total = 0;
  for (long d = 1; d <= m - (s - 1); ++d)
    total += static_cast<long long>(rst_of(d).size()) * words_count(s - 1, m - d);
  words_count_memo_.emplace(key, total);
  return total;
}

long long CobarEngine::count_basis(long s, long n) const {
  if (s < 0 || n < 0) return 0;
  long long total = 0;
  for (long na = 0; na <= n; ++na)
    total +=
        static_cast<long long>(amons_of(na).size()) * words_count(s, n - na);
  return total;
}

void CobarEngine::enumerate_words(long s, long m,
                                  std::array<std::uint16_t, 6>& slots,
                                  long pos, std::uint32_t amon,
                                  std::vector<Word>& out) const {
  if (pos == s) {
    if (m != 0) return;
    Word w;
    w.amon = amon;
    w.slots = slots;
    w.s = std::uint8_t(s);
    out.push_back(w);
    return;
  }
  long remaining_slots = s - pos - 1;
  for (long d = 1; d <= m - remaining_slots; ++d) {
    for (const Monomial& mono : rst_of(d)) {
      slots[pos] = rstmon_from_exponents(mono).key();
      enumerate_words(s, m - d, slots, pos + 1, amon, out);
    }
  }
  slots[pos] = 0;
}

const std::vector<Word>& CobarEngine::basis(long s, long n) const {
  PairKey key{s, n};
  auto it = basis_memo_.find(key);
  if (it != basis_memo_.end()) return it->second;
  if (s < 0 || s > 6)
    throw std::invalid_argument("cobar degree out of the supported range");

  long long count = count_basis(s, n);
  if (count > static_cast<long long>(cap_)) {
    std::ostringstream msg;
    msg << "cobar basis at bidegree (" << s << "," << n << ") has " << count
        << " words, above the configured bound " << cap_;
    throw ResourceCapExceeded(msg.str());
  }

  std::vector<Word> words;
  words.reserve(std::size_t(count));
  std::array<std::uint16_t, 6> slots{};
  for (long na = 0; na <= n; ++na) {
    if (words_count(s, n - na) == 0) continue;
    for (const Monomial& am : amons_of(na)) {
      enumerate_words(s, n - na, slots, 0, amon_from_exponents(am).key(),
                      words);
    }
  }
  return basis_memo_.emplace(key, std::move(words)).first->second;
}

const std::unordered_map<Word, std::uint32_t, WordHash>&
CobarEngine::index(long s, long n) const {
  PairKey key{s, n};
  auto it = index_memo_.find(key);
  if (it != index_memo_.end()) return it->second;
  const std::vector<Word>& b = basis(s, n);
  std::unordered_map<Word, std::uint32_t, WordHash> idx;
  idx.reserve(b.size() * 2);
  for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], std::uint32_t(i));
  return index_memo_.emplace(key, std::move(idx)).first->second;
}

CobarElt CobarEngine::d_word(const Word& w) const {
  CobarElt out;
  d_word_into(w, BigInt(1), out);
  return out;
}

void CobarEngine::d_word_into(const Word& w, const BigInt& scale,
                              CobarElt& out) const {
  if (w.s >= 6)
    throw std::invalid_argument("differential would exceed the supported "
                                "number of slots");

  // Front term: the reduced expansion of eta_R on the a-coefficient opens a
  // new leftmost slot.  The constant-slot part of eta_R(a) is exactly a
  // itself and cancels against the eta_L term.
  AMon a = AMon::from_key(w.amon);
  for (const auto& [k, c] : alg_->eta_r(a).terms) {
    RstMon mu = RstMon::from_key(k.second);
    if (mu.is_one()) {
      if (k.first != a.key() || c != 1)
        throw std::logic_error("eta_R has an unexpected constant part");
      continue;
    }
    Word nw;
    nw.amon = k.first;
    nw.s = std::uint8_t(w.s + 1);
    nw.slots[0] = mu.key();
    for (std::size_t i = 0; i < w.s; ++i) nw.slots[i + 1] = w.slots[i];
    cobar_add(out, nw, scale * c);
  }

  // Interior terms: reduced comultiplication of slot i, with the alternating
  // sign of the normalized complex.  These expansions carry no
  // a-coefficients, so slots splice in place.
  for (std::size_t i = 0; i < w.s; ++i) {
    long sign = (i % 2 == 0) ? -1 : 1; // (-1)^(i+1) for 1-based slot i+1
    TwoTensor split = alg_->psi_bar(RstMon::from_key(w.slots[i]));
    for (const auto& [k, c] : split.terms) {
      Word nw;
      nw.amon = w.amon;
      nw.s = std::uint8_t(w.s + 1);
      for (std::size_t q = 0; q < i; ++q) nw.slots[q] = w.slots[q];
      nw.slots[i] = k.first;
      nw.slots[i + 1] = k.second;
      for (std::size_t q = i + 1; q < w.s; ++q) nw.slots[q + 1] = w.slots[q];
      cobar_add(out, nw, sign * scale * c);
    }
  }
}

CobarElt CobarEngine::apply_d(const CobarElt& x) const {
  CobarElt out;
  for (const auto& [w, c] : x) d_word_into(w, c, out);
  return out;
}

SparseIntMatrix CobarEngine::d_matrix(long s, long n) const {
  const std::vector<Word>& src = basis(s, n);
  const auto& dst_index = index(s + 1, n);
  SparseIntMatrix m(basis(s + 1, n).size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (const auto& [w, c] : d_word(src[j])) {
      auto it = dst_index.find(w);
      if (it == dst_index.end())
        throw std::logic_error("differential left the enumerated basis");
      m.set(it->second, j, c);
    }
  }
  return m;
}

LazyMatrix CobarEngine::d_matrix_lazy(long s, long n) const {
  const std::vector<Word>& src = basis(s, n);
  LazyMatrix lm;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, BigInt>> entries;
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (const auto& [w, c] : d_word(src[j])) {
      auto [it, inserted] =
          lm.row_index.emplace(w, std::uint32_t(lm.row_words.size()));
      if (inserted) lm.row_words.push_back(w);
      entries.emplace_back(it->second, std::uint32_t(j), c);
    }
  }
  lm.mat = SparseIntMatrix(lm.row_words.size(), src.size());
  for (auto& [r, cidx, v] : entries) lm.mat.set(r, cidx, std::move(v));
  return lm;
}

void CobarEngine::check_dd(long s_mid, long n) const {
  if (s_mid < 1)
    throw std::invalid_argument("composite check needs a middle degree >= 1");
  CobarElt mid, dd;
  mid.reserve(256);
  dd.reserve(2048);
  for (const Word& w : basis(s_mid - 1, n)) {
    mid.clear();
    dd.clear();
    d_word_into(w, BigInt(1), mid);
    for (const auto& [w2, c2] : mid) d_word_into(w2, c2, dd);
    if (!dd.empty())
      throw std::logic_error("d(d(w)) != 0 for w = " + w.to_string() +
                             ": " + cobar_to_string(dd));
  }
}

std::size_t CobarEngine::rank_mod_p(long s, long n, long p) const {
  auto key = std::make_pair(PairKey{s, n}, p);
  auto it = rank_memo_.find(key);
  if (it != rank_memo_.end()) return it->second;

  const std::vector<Word>& src = basis(s, n);
  std::unordered_map<Word, std::uint32_t, WordHash> rows;
  // Row count is unknown up front; the reducer only needs row ids, so size it
  // by a first pass.
  std::vector<PVec> cols(src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    PVec col;
    for (const auto& [w, c] : d_word(src[j])) {
      std::int64_t v = static_cast<std::int64_t>(c % p);
      if (v < 0) v += p;
      if (v == 0) continue;
      auto [rit, inserted] = rows.emplace(w, std::uint32_t(rows.size()));
      col.emplace_back(rit->second, v);
    }
    std::sort(col.begin(), col.end());
    cols[j] = std::move(col);
  }
  PColumnReducer red(rows.size(), p);
  for (auto& col : cols) red.add_column(std::move(col));
  return rank_memo_.emplace(key, red.rank()).first->second;
}

const std::vector<BigInt>& CobarEngine::divisors(long s, long n) const {
  PairKey key{s, n};
  auto it = divisor_memo_.find(key);
  if (it != divisor_memo_.end()) return it->second;
  LazyMatrix lm = d_matrix_lazy(s, n);
  DivisorSummary summary = exact_divisors(lm.mat);
  std::vector<BigInt> nontrivial;
  for (const BigInt& d : summary.divisors)
    if (d != 1) nontrivial.push_back(d);
  // Re-attach the rank as leading ones so callers can read both.
  std::vector<BigInt> full(summary.rank - nontrivial.size(), BigInt(1));
  full.insert(full.end(), nontrivial.begin(), nontrivial.end());
  return divisor_memo_.emplace(key, std::move(full)).first->second;
}

long long CobarEngine::nnz_estimate(long s, long n) const {
  PairKey key{s, n};
  auto it = nnz_memo_.find(key);
  if (it != nnz_memo_.end()) return it->second;
  long long dim = count_basis(s, n);
  long long est = 0;
  if (dim > 0) {
    const std::vector<Word>& b = basis(s, n);
    std::size_t samples = std::min<std::size_t>(b.size(), 64);
    std::size_t stride = b.size() / samples;
    long long terms = 0;
    for (std::size_t i = 0; i < samples; ++i)
      terms += static_cast<long long>(d_word(b[i * stride]).size());
    est = dim * terms / static_cast<long long>(samples);
  }
  return nnz_memo_.emplace(key, est).first->second;
}

const LocalSmithResult& CobarEngine::local_divisors(
    long s, long n, long p, std::size_t max_live_entries) const {
  std::pair<PairKey, long> key{PairKey{s, n}, p};
  auto it = local_memo_.find(key);
  if (it != local_memo_.end()) return it->second;
  // A run that already blew a budget at least this large will blow it
  // again; rethrow instead of repeating the whole elimination.
  auto failed = local_failed_.find(key);
  if (failed != local_failed_.end() && failed->second >= max_live_entries)
    throw LocalSmithBudgetExceeded(
        "local elimination previously exceeded the live-entry budget");
  LazyMatrix lm = d_matrix_lazy(s, n);
  try {
    LocalSmithResult ls =
        local_smith(lm.mat, p, 0, SIZE_MAX, max_live_entries);
    return local_memo_.emplace(key, std::move(ls)).first->second;
  } catch (const LocalSmithBudgetExceeded&) {
    auto& worst = local_failed_[key];
    worst = std::max(worst, max_live_entries);
    throw;
  }
}

bool CobarEngine::has_local_divisors(long s, long n, long p) const {
  return local_memo_.count({PairKey{s, n}, p}) > 0;
}

std::size_t CobarEngine::rank_lower_bound(long s, long n, long p,
                                          std::size_t target,
                                          std::size_t max_live_entries) const {
  std::pair<PairKey, long> key{PairKey{s, n}, p};
  auto it = rank_lb_memo_.find(key);
  if (it != rank_lb_memo_.end() && it->second >= target) return it->second;
  LazyMatrix lm = d_matrix_lazy(s, n);
  LocalSmithResult ls = local_smith(lm.mat, p, 1, target, max_live_entries);
  std::size_t got = ls.diag_count;
  if (it != rank_lb_memo_.end())
    it->second = std::max(it->second, got);
  else
    rank_lb_memo_.emplace(key, got);
  return got;
}

bool CobarEngine::in_image_mod_p(long s, long n, long p,
                                 const CobarElt& x) const {
  const std::vector<Word>& src = basis(s, n);
  std::unordered_map<Word, std::uint32_t, WordHash> rows;
  std::vector<PVec> cols(src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    PVec col;
    for (const auto& [w, c] : d_word(src[j])) {
      std::int64_t v = static_cast<std::int64_t>(c % p);
      if (v < 0) v += p;
      if (v == 0) continue;
      auto [rit, inserted] = rows.emplace(w, std::uint32_t(rows.size()));
      col.emplace_back(rit->second, v);
    }
    std::sort(col.begin(), col.end());
    cols[j] = std::move(col);
  }
  PVec target;
  for (const auto& [w, c] : x) {
    std::int64_t v = static_cast<std::int64_t>(c % p);
    if (v < 0) v += p;
    if (v == 0) continue;
    auto [rit, inserted] = rows.emplace(w, std::uint32_t(rows.size()));
    target.emplace_back(rit->second, v);
  }
  std::sort(target.begin(), target.end());

  PColumnReducer red(rows.size(), p);
  for (auto& col : cols) red.add_column(std::move(col));
  return red.in_span(std::move(target));
}

CobarElt CobarEngine::delta_times(const CobarElt& x) const {
  CobarElt out;
  for (const auto& [w, c] : x) {
    AMon a = AMon::from_key(w.amon);
    for (const auto& [k, dc] : alg_->delta().terms) {
      Word nw = w;
      nw.amon = (a * AMon::from_key(k)).key();
      cobar_add(out, nw, c * dc);
    }
  }
  return out;
}

CobarElt CobarEngine::concat(const CobarElt& x, const CobarElt& y) const {
  CobarElt out;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
      if (wx.s + wy.s > 6)
        throw std::invalid_argument("product would exceed the supported "
                                    "number of slots");
      // Push the right factor's a-coefficient through the left factor's
      // slots, rightmost first: crossing one slot trades the coefficient b
      // for eta_R(b), whose rst parts multiply into that slot.
      // States: (coefficient monomial still traveling, modified left slots).
      struct State {
        AMon carry;
        std::array<std::uint16_t, 6> slots;
        BigInt coeff;
      };
      std::vector<State> states;
      states.push_back(State{AMon::from_key(wy.amon), wx.slots, cx * cy});
      for (long i = long(wx.s) - 1; i >= 0; --i) {
        std::vector<State> next;
        for (const State& st : states) {
          if (st.carry.is_one()) {
            next.push_back(st);
            continue;
          }
          for (const auto& [k, c] : alg_->eta_r(st.carry).terms) {
            State ns = st;
            ns.carry = AMon::from_key(k.first);
            ns.slots[i] =
                (RstMon::from_key(st.slots[i]) * RstMon::from_key(k.second))
                    .key();
            ns.coeff = st.coeff * c;
            next.push_back(std::move(ns));
          }
        }
        states = std::move(next);
      }
      for (const State& st : states) {
        Word nw;
        nw.s = std::uint8_t(wx.s + wy.s);
        nw.amon = (AMon::from_key(wx.amon) * st.carry).key();
        for (std::size_t q = 0; q < wx.s; ++q) nw.slots[q] = st.slots[q];
        for (std::size_t q = 0; q < wy.s; ++q)
          nw.slots[wx.s + q] = wy.slots[q];
        cobar_add(out, nw, st.coeff);
      }
    }
  }
  return out;
}

std::pair<long, long> CobarEngine::bidegree(const CobarElt& x) const {
  if (x.empty())
    throw std::invalid_argument("bidegree of the zero element is undefined");
  long s = x.begin()->first.s;
  long n = x.begin()->first.degree();
  for (const auto& [w, c] : x)
    if (w.s != s || w.degree() != n)
      throw std::invalid_argument("element is not homogeneous");
  return {s, n};
}

} // namespace ellb::hopfext
