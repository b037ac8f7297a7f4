#include "ellb/reps/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

namespace ellb::reps {

namespace {

// 2x2 matrix over F_3, encoded as four base-3 digits (row major) so each
// matrix has a unique key in [0, 81).
struct M2F3 {
  std::array<long, 4> e; // a b / c d

  static M2F3 identity() { return {{1, 0, 0, 1}}; }

  M2F3 mul(const M2F3& o) const {
    auto m = [](long x) { return ((x % 3) + 3) % 3; };
    return {{m(e[0] * o.e[0] + e[1] * o.e[2]), m(e[0] * o.e[1] + e[1] * o.e[3]),
             m(e[2] * o.e[0] + e[3] * o.e[2]),
             m(e[2] * o.e[1] + e[3] * o.e[3])}};
  }

  long det() const { return (((e[0] * e[3] - e[1] * e[2]) % 3) + 3) % 3; }

  std::uint64_t key() const {
    return static_cast<std::uint64_t>(e[0] * 27 + e[1] * 9 + e[2] * 3 + e[3]);
  }
};

// Closes the generator set under multiplication and returns the table in
// breadth-first discovery order with the identity first.  Works for any
// model with an associative mul and a collision-free key.
template <typename Elt, typename Mul, typename Key>
FiniteGroup close_group(GroupName name, const Elt& id,
                        const std::vector<Elt>& gens, Mul mul, Key key) {
  std::vector<Elt> elems{id};
  std::map<std::uint64_t, std::size_t> index{{key(id), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const Elt& g : gens) {
      Elt next = mul(elems[cur], g);
      std::uint64_t k = key(next);
      if (!index.count(k)) {
        index[k] = elems.size();
        elems.push_back(next);
        queue.push_back(elems.size() - 1);
      }
    }
  }

  std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = index.at(key(mul(elems[a], elems[b])));

  std::vector<std::size_t> gen_idx;
  for (const Elt& g : gens) gen_idx.push_back(index.at(key(g)));

  std::vector<std::uint64_t> keys;
  for (const Elt& e : elems) keys.push_back(key(e));

  return FiniteGroup(name, std::move(table), std::move(gen_idx),
                     std::move(keys));
}

FiniteGroup build_matrix_group(GroupName name, const std::vector<M2F3>& gens) {
  return close_group(
      name, M2F3::identity(), gens,
      [](const M2F3& a, const M2F3& b) { return a.mul(b); },
      [](const M2F3& m) { return m.key(); });
}

FiniteGroup build_s3() {
  using Perm = std::array<std::size_t, 3>;
  Perm id{0, 1, 2};
  Perm rot{1, 2, 0};   // three-cycle
  Perm swap{0, 2, 1};  // transposition fixing the first point
  auto mul = [](const Perm& a, const Perm& b) {
    // (a * b)(x) = a(b(x)), matching matrix composition of the permutation
    // representation used by the S3 lattices.
    return Perm{a[b[0]], a[b[1]], a[b[2]]};
  };
  auto key = [](const Perm& p) {
    return static_cast<std::uint64_t>(p[0] * 9 + p[1] * 3 + p[2]);
  };
  return close_group(GroupName::S3, id, {rot, swap}, mul, key);
}

FiniteGroup build_klein() {
  using Bits = std::array<std::size_t, 2>;
  auto mul = [](const Bits& a, const Bits& b) {
    return Bits{a[0] ^ b[0], a[1] ^ b[1]};
  };
  auto key = [](const Bits& b) {
    return static_cast<std::uint64_t>(b[0] * 2 + b[1]);
  };
  return close_group(GroupName::C2xC2, Bits{0, 0}, {Bits{1, 0}, Bits{0, 1}},
                     mul, key);
}

FiniteGroup build_q8() {
  // The quaternion group realized inside SL_2(F_3).
  M2F3 i{{0, 2, 1, 0}};  // [[0, -1], [1, 0]]
  M2F3 j{{1, 1, 1, 2}};  // [[1, 1], [1, -1]]
  if (i.det() != 1 || j.det() != 1)
    throw std::logic_error("quaternion generators must land in SL2");
  M2F3 i2 = i.mul(i), j2 = j.mul(j);
  if (i2.key() != j2.key())
    throw std::logic_error("quaternion relation i^2 = j^2 failed");
  if (i2.mul(i2).key() != M2F3::identity().key())
    throw std::logic_error("quaternion relation i^4 = 1 failed");
  // i j i^-1 = j^-1, using i^-1 = i^3 and j^-1 = j^3.
  M2F3 i3 = i2.mul(i), j3 = j2.mul(j);
  if (i.mul(j).mul(i3).key() != j3.key())
    throw std::logic_error("quaternion relation i j i^-1 = j^-1 failed");
  FiniteGroup g = build_matrix_group(GroupName::Q8, {i, j});
  if (g.order() != 8) throw std::logic_error("quaternion closure has wrong order");
  return g;
}

FiniteGroup build_gl2f3() {
  // Enumerate every invertible matrix rather than trusting a generator
  // pair, then pick generators afterwards: a transvection and the swap
  // (determinant -1) generate the whole group, which close_group verifies
  // by reaching all 48 elements.
  std::vector<M2F3> all;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c)
        for (long d = 0; d < 3; ++d) {
          M2F3 m{{a, b, c, d}};
          if (m.det() != 0) all.push_back(m);
        }
  if (all.size() != 48)
    throw std::logic_error("GL2(F3) enumeration has wrong size");
  M2F3 transvect{{1, 1, 0, 1}};
  M2F3 swap{{0, 1, 1, 0}};
  FiniteGroup g = build_matrix_group(GroupName::GL2F3, {transvect, swap});
  if (g.order() != all.size())
    throw std::logic_error("GL2(F3) generators do not reach every matrix");
  return g;
}

} // namespace

std::string to_string(GroupName name) {
  switch (name) {
    case GroupName::S3: return "S3";
    case GroupName::C2xC2: return "C2xC2";
    case GroupName::Q8: return "Q8";
    case GroupName::SL2F3: return "SL2F3";
    case GroupName::GL2F3: return "GL2F3";
  }
  throw std::logic_error("unknown group name");
}

GroupName group_from_string(const std::string& text) {
  if (text == "S3") return GroupName::S3;
  if (text == "C2xC2") return GroupName::C2xC2;
  if (text == "Q8") return GroupName::Q8;
  if (text == "SL2F3") return GroupName::SL2F3;
  if (text == "GL2F3") return GroupName::GL2F3;
  throw std::invalid_argument("unknown group: " + text);
}

FiniteGroup::FiniteGroup(GroupName name,
                         std::vector<std::vector<std::size_t>> table,
                         std::vector<std::size_t> generators,
                         std::vector<std::uint64_t> keys)
    : name_(name), table_(std::move(table)), generators_(std::move(generators)),
      keys_(std::move(keys)) {
  verify_axioms();
  build_inverses();
  build_words();
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  return table_.at(a).at(b);
}

std::size_t FiniteGroup::inv(std::size_t a) const { return inverse_.at(a); }

std::size_t FiniteGroup::index_of_key(std::uint64_t key) const {
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == key) return i;
  throw std::invalid_argument("element key not present in group");
}

const std::vector<std::size_t>& FiniteGroup::gen_word(std::size_t g) const {
  return words_.at(g);
}

void FiniteGroup::verify_axioms() const {
  std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  if (keys_.size() != n) throw std::invalid_argument("key count mismatch");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("ragged group table");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("multiplication table not associative");
  for (std::size_t g : generators_)
    if (g >= n) throw std::invalid_argument("generator index out of range");
}

void FiniteGroup::build_inverses() {
  std::size_t n = table_.size();
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n)
      throw std::invalid_argument("element without a two-sided inverse");
  }
}

void FiniteGroup::build_words() {
  std::size_t n = table_.size();
  words_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      std::size_t next = table_[cur][generators_[gi]];
      if (!seen[next]) {
        seen[next] = true;
        words_[next] = words_[cur];
        words_[next].push_back(gi);
        queue.push_back(next);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("generators do not generate the group");
}

FiniteGroup build_group(GroupName name) {
  switch (name) {
    case GroupName::S3: return build_s3();
    case GroupName::C2xC2: return build_klein();
    case GroupName::Q8: return build_q8();
    case GroupName::SL2F3:
      return build_matrix_group(GroupName::SL2F3,
                                {M2F3{{1, 1, 0, 1}}, M2F3{{0, 2, 1, 0}}});
    case GroupName::GL2F3: return build_gl2f3();
  }
  throw std::logic_error("unknown group name");
}

std::vector<std::size_t> group_hom(const FiniteGroup& sub,
                                   const FiniteGroup& amb,
                                   const std::vector<std::size_t>& gen_images) {
  if (gen_images.size() != sub.generators().size())
    throw std::invalid_argument("one image per generator required");
  std::size_t n = sub.order();
  std::vector<std::size_t> image(n, amb.order());
  image[sub.identity()] = amb.identity();
  // Every element carries a generator word; multiplying out the images
  // defines the only candidate extension.
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t acc = amb.identity();
    for (std::size_t gi : sub.gen_word(g)) acc = amb.mul(acc, gen_images[gi]);
    image[g] = acc;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (amb.mul(image[a], image[b]) != image[sub.mul(a, b)])
        throw std::invalid_argument("generator images do not extend to a homomorphism");
  return image;
}

std::vector<std::size_t> embed_subgroup(const FiniteGroup& sub,
                                        const FiniteGroup& amb) {
  std::vector<std::size_t> gen_images;
  for (std::size_t g : sub.generators())
    gen_images.push_back(amb.index_of_key(sub.element_keys()[g]));
  std::vector<std::size_t> emb = group_hom(sub, amb, gen_images);
  std::vector<std::size_t> sorted = emb;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("key matching produced a non-injective map");
  return emb;
}

std::vector<std::size_t> q8_to_klein(const FiniteGroup& q8,
                                     const FiniteGroup& klein) {
  if (q8.name() != GroupName::Q8 || klein.name() != GroupName::C2xC2)
    throw std::invalid_argument("quotient map expects Q8 and C2xC2");
  // i and j map to the two Klein generators; the central square dies.
  return group_hom(q8, klein,
                   {klein.generators()[0], klein.generators()[1]});
}

} // namespace ellb::reps
