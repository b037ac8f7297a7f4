#include "ellb/moduli3/chain_gen.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace ellb::moduli3 {

IteratedExtension random_chain(std::uint64_t seed, int stages,
                               bool reverse_components) {
  std::mt19937_64 eng(seed);
  auto below = [&](int n) {
    return static_cast<int>(eng() % static_cast<std::uint64_t>(n));
  };

  IteratedExtension e;
  StandardBundle state;
  e.initial_top = state;
  for (int k = 0; k < stages; ++k) {
    // Summands a nonzero class component could sit on.
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < state.size(); ++i)
      if (state.summands()[i].kind != Kind::FPush) eligible.push_back(i);

    int q = below(17) - 8;
    std::vector<ClassComponent> comps;
    if (!eligible.empty() && below(4) != 0) {
      const std::size_t pick = eligible[static_cast<std::size_t>(
          below(static_cast<int>(eligible.size())))];
      q = state.summands()[pick].twist + 2;
      // Every non-FP summand in the carrier class gets a component, the
      // first one forced nonzero so the stage genuinely rewrites.
      for (std::size_t i = 0; i < state.size(); ++i) {
        const StandardSummand& s = state.summands()[i];
        if (s.kind == Kind::FPush || !s.same_class({s.kind, q - 2})) continue;
        const int v = comps.empty() ? 1 + below(2) : below(3);
        comps.push_back({s.kind, s.twist, v});
      }
    }
    if (reverse_components) std::reverse(comps.begin(), comps.end());
    ExtClassVector cls(q, state, comps);
    e.stages.push_back(cls);

    IteratedExtension step{state, {cls}};
    state = normalize(step, Resolver::zero()).front();
  }
  return e;
}

} // namespace ellb::moduli3
