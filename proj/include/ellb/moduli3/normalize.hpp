#pragma once

#include <vector>

#include "ellb/moduli3/bundle.hpp"

namespace ellb::moduli3 {

// One entry of an extension class, addressed by summand class.  Values are
// coefficients in F_3; only zero versus nonzero steers the rewriting.
struct ClassComponent {
  Kind kind = Kind::Line;
  int twist = 0;
  int value = 0;
};

// Extension class in Ext^1(top, w^q), stored as one value per summand of
// the top bundle.  Construction binds each component to a distinct summand
// of its class and rejects nonzero values sitting on a summand the Ext
// table declares zero, so a well-formed instance can always be rewritten.
class ExtClassVector {
public:
  ExtClassVector(int base_twist, StandardBundle top,
                 const std::vector<ClassComponent>& components);

  int base_twist() const { return base_twist_; }
  const StandardBundle& top() const { return top_; }
  // Aligned with top().summands().
  const std::vector<int>& values() const { return values_; }
  bool zero() const;

private:
  int base_twist_ = 0;
  StandardBundle top_;
  std::vector<int> values_;
};

// Chain of extensions built bottom-up: the branch state starts at
// initial_top, and each stage extends the running result by one line
// bundle w^q with the recorded class.  A stage's declared top pins which
// outcomes of the earlier, underdetermined rewriting steps it was written
// against; outcomes that disagree are discarded when the chain is replayed.
struct IteratedExtension {
  StandardBundle initial_top;
  std::vector<ExtClassVector> stages;
};

IteratedExtension trivial_extension(StandardBundle b);

// Answer to a residual-class query: the class is zero, or it is nonzero on
// a line summand, or nonzero on an Ea summand (of the one twist the Ext
// table permits in context).
enum class ChoiceKind { Zero, OnLine, OnEalpha };

std::string to_string(ChoiceKind c);

// The rewriting consults a resolver whenever it needs extension data the
// input chain does not determine: EnumerateAll branches over every legal
// answer, Fixed replays a scripted list and throws on exhaustion or on an
// answer the current state cannot realize, Zero always answers zero.
struct Resolver {
  enum class Policy { EnumerateAll, Fixed, Zero };

  Policy policy = Policy::EnumerateAll;
  std::vector<ChoiceKind> choices;

  static Resolver enumerate_all() { return {Policy::EnumerateAll, {}}; }
  static Resolver fixed(std::vector<ChoiceKind> c) {
    return {Policy::Fixed, std::move(c)};
  }
  static Resolver zero() { return {Policy::Zero, {}}; }
};

// Rewrites the chain to its normal forms, one per surviving combination of
// resolver answers, deduplicated and canonically ordered.  Every output is
// standard by construction and has rank = rank(initial_top) + #stages.
std::vector<StandardBundle> normalize(const IteratedExtension& e,
                                      const Resolver& resolver);

// A stage given by class shape alone: components name carrier summands by
// kind and twist but bind to a concrete top only at replay time, once per
// branch.  This is the form chain files arrive in, where no declared tops
// exist to arbitrate between branches; a pattern that fails to bind on
// some branch is therefore a malformed input, not a prunable branch.
struct PatternStage {
  int base_twist = 0;
  std::vector<ClassComponent> components;
};

// Replays the pattern stages from initial_top under the resolver policy.
// Same output contract as normalize: deduplicated canonical normal forms,
// each of rank = rank(initial_top) + #stages.
std::vector<StandardBundle> normalize_patterns(
    const StandardBundle& initial_top, const std::vector<PatternStage>& stages,
    const Resolver& resolver);

} // namespace ellb::moduli3
