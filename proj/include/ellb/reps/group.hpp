#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ellb::reps {

// The five groups the representation layer knows how to build.  Each is
// constructed from a concrete model (matrices over F_3, permutations, bit
// pairs) and then handled purely through its multiplication table.
enum class GroupName { S3, C2xC2, Q8, SL2F3, GL2F3 };

std::string to_string(GroupName name);
GroupName group_from_string(const std::string& text);

// Finite group as a verified multiplication table.  Element 0 is the
// identity.  Construction checks the table is a group outright (closure,
// associativity, identity, two-sided inverses) rather than trusting the
// model that produced it.
//
// Each element keeps the encoding key of the model it was built from, so
// subgroup inclusions between groups sharing a model (the three matrix
// groups over F_3) can be recovered by key lookup.
class FiniteGroup {
public:
  FiniteGroup(GroupName name, std::vector<std::vector<std::size_t>> table,
              std::vector<std::size_t> generators,
              std::vector<std::uint64_t> keys);

  GroupName name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;

  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& element_keys() const { return keys_; }
  std::size_t index_of_key(std::uint64_t key) const;

  // gen_word(g) multiplies out, left to right, to the element g.  Entries
  // index into generators().  Words come from breadth-first search, so they
  // are shortest; the identity gets the empty word.
  const std::vector<std::size_t>& gen_word(std::size_t g) const;

private:
  GroupName name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> words_;

  void verify_axioms() const;
  void build_inverses();
  void build_words();
};

// Builds the named group from its model: S3 as permutations of three
// points, C2xC2 as bit pairs, and Q8, SL2F3, GL2F3 as 2x2 matrices over
// F_3 (GL2F3 by enumerating all invertible matrices, the others by closing
// over fixed generators).  Q8 construction additionally checks the
// quaternion relations i^2 = j^2, i^4 = 1, i j i^-1 = j^-1 and that both
// generators land in SL2.
FiniteGroup build_group(GroupName name);

// Extends generator images to a homomorphism h: sub -> amb and verifies
// multiplicativity on the whole table.  Throws std::invalid_argument if the
// images do not define a homomorphism.
std::vector<std::size_t> group_hom(const FiniteGroup& sub,
                                   const FiniteGroup& amb,
                                   const std::vector<std::size_t>& gen_images);

// Inclusion of a subgroup recovered by matching element keys, so both
// groups must share a model (Q8, SL2F3 and GL2F3 all encode 2x2 matrices
// over F_3).  The result is a verified injective homomorphism.
std::vector<std::size_t> embed_subgroup(const FiniteGroup& sub,
                                        const FiniteGroup& amb);

// The quotient map Q8 -> C2xC2 killing the central element i^2 = -1.  The
// generators i, j map to the two generators of the Klein group.
std::vector<std::size_t> q8_to_klein(const FiniteGroup& q8,
                                     const FiniteGroup& klein);

} // namespace ellb::reps
