#pragma once

#include <cstdint>

#include "ellb/moduli3/normalize.hpp"

namespace ellb::moduli3 {

// Seeded iterated-extension generator shared between the unit tests and
// the verify runner.  Each stage extends by one line, so the final rank
// equals the stage count.  Declared tops are produced by replaying the
// stage against the all-zero residual policy, which keeps the chain
// well-formed by construction; the enumerating replay then branches from
// those tops wherever residual data allows.
IteratedExtension random_chain(std::uint64_t seed, int stages,
                               bool reverse_components = false);

} // namespace ellb::moduli3
