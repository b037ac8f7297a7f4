#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ellb/moduli3/bundle.hpp"
#include "ellb/moduli3/ifunctor.hpp"
#include "ellb/moduli3/normalize.hpp"
#include "ellb/reps/lattices.hpp"
#include "ellb/reps/matrix_rep.hpp"
#include "ellb/moduli3/chain_gen.hpp"

using namespace ellb::moduli3;
namespace reps = ellb::reps;

namespace {

StandardSummand line(int t) { return {Kind::Line, t}; }
StandardSummand ea(int t) { return {Kind::Ealpha, t}; }
StandardSummand fp(int t) { return {Kind::FPush, t}; }

StandardBundle bun(std::vector<StandardSummand> v) {
  return StandardBundle(std::move(v));
}

// Deterministic bounded sampling; std::uniform_int_distribution is
// implementation-defined, so tests roll their own.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) {
    return static_cast<int>(eng() % static_cast<std::uint64_t>(n));
  }
};

StandardBundle random_bundle(Rng& rng, int max_summands, bool allow_fp) {
  std::vector<StandardSummand> v;
  const int n = 1 + rng.below(max_summands);
  for (int i = 0; i < n; ++i) {
    const int k = rng.below(allow_fp ? 3 : 2);
    const int t = rng.below(31) - 15;
    v.push_back({static_cast<Kind>(k), t});
  }
  return bun(std::move(v));
}

} // namespace

TEST_CASE("summands and canonical bundle comparison") {
  CHECK(line(0).rank() == 1);
  CHECK(ea(5).rank() == 2);
  CHECK(fp(-2).rank() == 3);
  CHECK(bun({line(1), ea(2), fp(3)}).rank() == 6);

  // Twists compare mod 12 but keep their raw value as provenance.
  CHECK(line(-2).same_class(line(10)));
  CHECK(bun({line(-2)}) == bun({line(10)}));
  CHECK(bun({line(-2)}).summands()[0].twist == -2);
  CHECK(bun({line(0)}) != bun({line(1)}));
  CHECK(bun({ea(0)}) != bun({line(0), line(0)}));

  // Multiset semantics: order of listing is irrelevant, multiplicity not.
  CHECK(bun({ea(4), line(0), line(7)}) == bun({line(7), ea(4), line(0)}));
  CHECK(bun({line(0), line(0)}) != bun({line(0)}));

  CHECK(kind_from_string("Ealpha") == Kind::Ealpha);
  CHECK_THROWS_AS((void)kind_from_string("Sheaf"), std::invalid_argument);
  CHECK(bun({line(0), ea(-2)}).to_string() == "w^0 + Ea(-2)");
}

TEST_CASE("cohomology dimensions follow the mod 12 pattern") {
  // A line w^k has one-dimensional H^1 exactly at twists j = 2 - k and
  // one-dimensional H^2 at j = 6 - k.
  CHECK(cohomology_dim(bun({line(2)}), 1, 0) == 1);
  CHECK(cohomology_dim(bun({line(0)}), 1, 2) == 1);
  for (int k = -12; k <= 12; ++k)
    for (int j = 0; j < 12; ++j) {
      CHECK(cohomology_dim(bun({line(k)}), 1, j) ==
            (mod12(k + j) == 2 ? 1 : 0));
      CHECK(cohomology_dim(bun({line(k)}), 2, j) ==
            (mod12(k + j) == 6 ? 1 : 0));
      CHECK(cohomology_dim(bun({ea(k)}), 1, j) ==
            (mod12(k + j) == 4 ? 1 : 0));
      CHECK(cohomology_dim(bun({ea(k)}), 2, j) ==
            (mod12(k + j) == 6 ? 1 : 0));
      CHECK(cohomology_dim(bun({fp(k)}), 1, j) == 0);
      CHECK(cohomology_dim(bun({fp(k)}), 2, j) == 0);
    }
  CHECK(cohomology_dim(bun({ea(4)}), 1, 0) == 1);

  // Additive over summands.
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const StandardBundle b = random_bundle(rng, 5, true);
    for (int i = 1; i <= 2; ++i)
      for (int j = 0; j < 12; ++j) {
        int parts = 0;
        for (const auto& s : b.summands())
          parts += cohomology_dim(bun({s}), i, j);
        CHECK(cohomology_dim(b, i, j) == parts);
      }
  }

  CHECK_THROWS_AS((void)cohomology_dim(bun({line(0)}), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)cohomology_dim(bun({line(0)}), 3, 0),
                  std::invalid_argument);
}

TEST_CASE("ext table cells and the derived degree two entry") {
  // The class extending w^0 by itself after a twist by w^-2 exists and is
  // one-dimensional; it generates the whole Line -> Line column.
  CHECK(ext_dim(bun({line(-2)}), bun({line(0)}), 1) == 1);
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) {
      CHECK(ext_dim(bun({line(a)}), bun({line(b)}), 1) ==
            (mod12(b - a) == 2 ? 1 : 0));
      CHECK(ext_dim(bun({line(a)}), bun({line(b)}), 2) ==
            (mod12(b - a) == 6 ? 1 : 0));
      CHECK(ext_dim(bun({line(a)}), bun({ea(b)}), 1) ==
            (mod12(a - b) == 8 ? 1 : 0));
      CHECK(ext_dim(bun({ea(a)}), bun({line(b)}), 1) ==
            (mod12(a - b) == 10 ? 1 : 0));
      CHECK(ext_dim(bun({ea(a)}), bun({ea(b)}), 1) ==
            (mod12(a - b) == 10 ? 1 : 0));
      // FP is projective-like on both sides in positive degrees.
      for (int i = 1; i <= 2; ++i) {
        CHECK(ext_dim(bun({fp(a)}), bun({line(b)}), i) == 0);
        CHECK(ext_dim(bun({fp(a)}), bun({ea(b)}), i) == 0);
        CHECK(ext_dim(bun({fp(a)}), bun({fp(b)}), i) == 0);
        CHECK(ext_dim(bun({line(a)}), bun({fp(b)}), i) == 0);
        CHECK(ext_dim(bun({ea(a)}), bun({fp(b)}), i) == 0);
      }
    }
  CHECK(ext_dim(bun({ea(-2)}), bun({ea(0)}), 1) == 1);

  // The Ea -> Ea degree two cell is flagged as derived, and only it.
  const ExtResult r = ext_dim_info(bun({ea(0)}), bun({ea(0)}), 2);
  CHECK(r.dim == 1);
  CHECK(r.derived_entry);
  CHECK_FALSE(ext_dim_info(bun({ea(-2)}), bun({ea(0)}), 1).derived_entry);
  CHECK_FALSE(ext_dim_info(bun({line(-6)}), bun({line(0)}), 2).derived_entry);
  CHECK_FALSE(ext_dim_info(bun({ea(1)}), bun({ea(0)}), 2).derived_entry);

  CHECK_THROWS_AS((void)ext_dim(bun({line(0)}), bun({line(0)}), 0),
                  std::invalid_argument);
}

TEST_CASE("ext duality and twist symmetry across all 144 pairs") {
  const std::vector<StandardSummand> kinds0 = {line(0), ea(0), fp(0)};
  for (const auto& kx : kinds0)
    for (const auto& ky : kinds0)
      for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
          const StandardBundle x = bun({{kx.kind, a}});
          const StandardBundle y = bun({{ky.kind, b}});
          for (int i = 1; i <= 2; ++i)
            CHECK(ext_dim(x, y, i) == ext_dim(dual(y), dual(x), i));
        }
  // Moving an Ea across the pairing costs a twist shift by two.
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      CHECK(ext_dim(bun({ea(a)}), bun({line(b)}), 1) ==
            ext_dim(bun({line(a - b - 2)}), bun({ea(0)}), 1));
}

TEST_CASE("duality rules") {
  CHECK(dual(bun({line(0)})) == bun({line(0)}));
  CHECK(dual(bun({ea(0)})) == bun({ea(2)}));
  CHECK(dual(bun({fp(0)})) == bun({fp(0)}));
  CHECK(dual(bun({line(5)})) == bun({line(-5)}));
  CHECK(dual(bun({fp(3)})) == bun({fp(-3)}));

  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const StandardBundle b = random_bundle(rng, 6, true);
    CHECK(dual(dual(b)) == b);
  }
}

TEST_CASE("tensor rules") {
  CHECK(tensor(bun({ea(0)}), bun({ea(0)})) == bun({fp(0), line(-2)}));
  CHECK(tensor(bun({ea(0)}), bun({fp(0)})) == bun({fp(0), fp(-2)}));
  CHECK(tensor(bun({line(0)}), bun({ea(7), fp(-1)})) ==
        bun({ea(7), fp(-1)}));
  CHECK(tensor(bun({line(3)}), bun({ea(5)})) == bun({ea(8)}));
  CHECK(tensor(bun({ea(1)}), bun({ea(2)})) == bun({fp(3), line(1)}));
  CHECK_THROWS_AS((void)tensor(bun({fp(0)}), bun({fp(4)})), Unsupported);
  CHECK_THROWS_AS((void)tensor(bun({line(0), fp(2)}), bun({ea(0), fp(0)})),
                  Unsupported);

  Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    // Keep FP out of the right factor so no product is undefined.
    const StandardBundle x = random_bundle(rng, 4, true);
    const StandardBundle y = random_bundle(rng, 4, false);
    const StandardBundle z = random_bundle(rng, 3, false);
    CHECK(tensor(x, y).rank() == x.rank() * y.rank());
    CHECK(tensor(direct_sum(x, x), y) ==
          direct_sum(tensor(x, y), tensor(x, y)));
    CHECK(tensor(x, direct_sum(y, z)) ==
          direct_sum(tensor(x, y), tensor(x, z)));
  }
}

TEST_CASE("rank corollary predicate") {
  // FP sums are the bundles with no H^1 at any twist; their ranks are
  // multiples of three, so the implication holds with a true antecedent.
  const StandardBundle fps = bun({fp(0), fp(5), fp(-2)});
  for (int j = 0; j < 12; ++j) CHECK(cohomology_dim(fps, 1, j) == 0);
  CHECK(rank_h1_corollary_check(fps));

  // Lines and Ea summands always light up some twist, making it vacuous.
  CHECK(cohomology_dim(bun({ea(0)}), 1, 4) == 1);
  CHECK(rank_h1_corollary_check(bun({ea(0)})));
  CHECK(rank_h1_corollary_check(bun({line(0)})));

  Rng rng(41);
  for (int t = 0; t < 200; ++t)
    CHECK(rank_h1_corollary_check(random_bundle(rng, 6, true)));
}

TEST_CASE("i-functor dictionary and its failure modes") {
  const reps::S3Lattices lats = reps::s3_lattices();
  const reps::MatrixRep triv =
      reps::trivial_rep(lats.s3, reps::Domain::localized_at(3));

  CHECK(i_functor(triv) == bun({line(0)}));
  CHECK(i_functor(lats.P) == bun({fp(0)}));
  CHECK(i_functor(lats.Zzeta) == bun({ea(-2)}));
  CHECK(i_functor(lats.IdealZeta) == bun({ea(4)}));

  // Additive over direct sums.
  CHECK(i_functor(reps::direct_sum(lats.P, lats.Zzeta)) ==
        bun({fp(0), ea(-2)}));
  CHECK(i_functor(reps::direct_sum(triv, reps::direct_sum(
                                             lats.IdealZeta, lats.IdealZeta))) ==
        bun({line(0), ea(4), ea(4)}));

  // Matching sees through a unimodular change of basis.
  {
    const reps::Mat u = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    const reps::Mat uinv = {{1, -1, 1}, {0, 1, -1}, {0, 0, 1}};
    CHECK(reps::mat_mul(u, uinv, 0) == reps::mat_identity(3));
    std::vector<reps::Mat> gens;
    for (std::size_t i = 0; i < lats.P.gen_count(); ++i)
      gens.push_back(
          reps::mat_mul(u, reps::mat_mul(lats.P.gen_mat(i), uinv, 0), 0));
    const reps::MatrixRep conj(lats.s3, lats.P.domain(), gens);
    CHECK(i_functor(conj) == bun({fp(0)}));
  }

  // The lambda presentation of the ideal is a change of basis too.
  CHECK(i_functor(reps::lambda2_identification(lats).source()) ==
        bun({ea(4)}));

  // The sign representation has no image in the dictionary.
  const reps::MatrixRep sign(lats.s3, reps::Domain::localized_at(3),
                             {{{1}}, {{-1}}});
  CHECK_THROWS_AS((void)i_functor(sign), NotInDictionary);
  CHECK_THROWS_AS((void)i_functor(reps::direct_sum(sign, lats.Zzeta)),
                  NotInDictionary);
  CHECK_THROWS_AS((void)i_functor(reps::direct_sum(triv, sign)),
                  NotInDictionary);

  // Wrong group or coefficients are argument errors, not lookup misses.
  CHECK_THROWS_AS(
      (void)i_functor(reps::m_n(1, reps::Domain::localized_at(2))),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)i_functor(reps::change_domain(lats.P,
                                          reps::Domain::finite_field(3))),
      std::invalid_argument);
}

TEST_CASE("i-functor maps the two lattice sequences termwise") {
  const BundleSequence s1 = i_functor_sequence(1);
  CHECK(s1.sub == bun({line(0)}));
  CHECK(s1.mid == bun({fp(0)}));
  CHECK(s1.quot == bun({ea(-2)}));

  const BundleSequence s2 = i_functor_sequence(2);
  CHECK(s2.sub == bun({ea(4)}));
  CHECK(s2.mid == bun({fp(0)}));
  CHECK(s2.quot == bun({line(0)}));

  CHECK_THROWS_AS((void)i_functor_sequence(3), std::invalid_argument);
}

TEST_CASE("extension class validation") {
  // A class lives in Ext^1(top, w^q); components must sit where that group
  // is nonzero, and may address summands through any twist representative.
  CHECK_NOTHROW(ExtClassVector(0, bun({line(-2)}), {{Kind::Line, -2, 1}}));
  CHECK_NOTHROW(ExtClassVector(0, bun({line(10)}), {{Kind::Line, -2, 2}}));
  CHECK_NOTHROW(ExtClassVector(0, bun({ea(-2)}), {{Kind::Ealpha, 10, 1}}));

  CHECK_THROWS_AS(ExtClassVector(0, bun({line(0)}), {{Kind::Line, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtClassVector(0, bun({fp(-2)}), {{Kind::FPush, -2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtClassVector(0, bun({line(-2)}), {{Kind::Ealpha, -2, 1}}),
                  std::invalid_argument);

  // Components bind distinct copies; a third copy does not exist.
  const StandardBundle two = bun({line(-2), line(-2)});
  CHECK_NOTHROW(
      ExtClassVector(0, two, {{Kind::Line, -2, 1}, {Kind::Line, -2, 2}}));
  CHECK_THROWS_AS(ExtClassVector(0, two, {{Kind::Line, -2, 1},
                                          {Kind::Line, -2, 1},
                                          {Kind::Line, -2, 1}}),
                  std::invalid_argument);

  // Values reduce mod 3, so 3 is an allowed way of writing zero, and a
  // zero value may sit anywhere a summand exists.
  const ExtClassVector z(0, bun({line(0), fp(4)}),
                         {{Kind::Line, 0, 3}, {Kind::FPush, 4, 0}});
  CHECK(z.zero());
  CHECK_FALSE(
      ExtClassVector(0, bun({line(-2)}), {{Kind::Line, -2, 1}}).zero());
}

TEST_CASE("single stage rewrites") {
  const Resolver all = Resolver::enumerate_all();

  // A nonzero class on one line of the right twist builds Ea.
  {
    IteratedExtension e{bun({line(-2)}),
                        {ExtClassVector(0, bun({line(-2)}),
                                        {{Kind::Line, -2, 1}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({ea(0)}));
  }
  // A nonzero class on an Ea of the right twist closes up into FP.
  {
    IteratedExtension e{bun({ea(-2)}),
                        {ExtClassVector(0, bun({ea(-2)}),
                                        {{Kind::Ealpha, -2, 1}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({fp(0)}));
  }
  // An all-zero class splits.
  {
    const StandardBundle top = bun({ea(0), fp(5)});
    IteratedExtension e{top, {ExtClassVector(3, top, {})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({line(3), ea(0), fp(5)}));
  }
  // Two lines: the residual class against the fresh Ea is free data, so
  // enumeration returns both the split form and the fused FP.
  {
    const StandardBundle top = bun({line(-2), line(-4)});
    IteratedExtension e{top,
                        {ExtClassVector(0, top, {{Kind::Line, -2, 1}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 2);
    CHECK(nf[0] == bun({line(-4), ea(0)}));
    CHECK(nf[1] == bun({fp(0)}));
    for (const auto& b : nf) CHECK(b.rank() == 3);

    CHECK(normalize(e, Resolver::zero()) ==
          std::vector<StandardBundle>{bun({line(-4), ea(0)})});
    CHECK(normalize(e, Resolver::fixed({ChoiceKind::OnLine})) ==
          std::vector<StandardBundle>{bun({fp(0)})});
    CHECK_THROWS_AS((void)normalize(e, Resolver::fixed({})),
                    std::runtime_error);
    CHECK_THROWS_AS(
        (void)normalize(e, Resolver::fixed({ChoiceKind::OnEalpha})),
        std::invalid_argument);
  }
  // A class hitting an Ea wins over line components and needs no residual
  // data at all: the remaining components are killed by FP projectivity.
  {
    const StandardBundle top = bun({line(-2), ea(-2)});
    IteratedExtension e{top, {ExtClassVector(0, top,
                                             {{Kind::Line, -2, 1},
                                              {Kind::Ealpha, -2, 2}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({fp(0), line(-2)}));
  }
  // Line component only, with an Ea nearby: the residual choice against
  // the fresh Ea(0) either splits or displaces the line back out.
  {
    const StandardBundle top = bun({line(-2), ea(-2)});
    IteratedExtension e{top,
                        {ExtClassVector(0, top, {{Kind::Line, -2, 1}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 2);
    CHECK(nf[0] == bun({fp(0), line(-2)}));
    CHECK(nf[1] == bun({ea(-2), ea(0)}));
    for (const auto& b : nf) CHECK(b.rank() == 4);
  }
}

TEST_CASE("multi stage chains, declared tops and pruning") {
  const Resolver all = Resolver::enumerate_all();

  // Stage one builds Ea(0); stage two extends it to FP(2).
  {
    IteratedExtension e{bun({line(-2)}),
                        {ExtClassVector(0, bun({line(-2)}),
                                        {{Kind::Line, -2, 1}}),
                         ExtClassVector(2, bun({ea(0)}),
                                        {{Kind::Ealpha, 0, 1}})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({fp(2)}));
    CHECK(nf[0].rank() == 3);
  }
  // A later declared top singles out one branch of an earlier stage.
  {
    const StandardBundle top1 = bun({line(-2), line(-4)});
    IteratedExtension e{top1,
                        {ExtClassVector(0, top1, {{Kind::Line, -2, 1}}),
                         ExtClassVector(5, bun({fp(0)}), {})}};
    const auto nf = normalize(e, all);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == bun({fp(0), line(5)}));
    // The all-zero policy walks the discarded branch and must say so.
    CHECK_THROWS_AS((void)normalize(e, Resolver::zero()),
                    std::invalid_argument);
  }
  // A declared top no branch reaches is a malformed chain.
  {
    IteratedExtension e{bun({line(0)}),
                        {ExtClassVector(4, bun({line(7)}), {})}};
    CHECK_THROWS_AS((void)normalize(e, all), std::invalid_argument);
  }
}

TEST_CASE("normalization properties on random chains") {
  const Resolver all = Resolver::enumerate_all();
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int stages = 1 + static_cast<int>(seed % 6);
    const IteratedExtension e = random_chain(seed, stages);
    const auto nf = normalize(e, all);
    REQUIRE_FALSE(nf.empty());

    // Exactly one line enters per stage, so rank is conserved.
    for (const auto& b : nf) CHECK(b.rank() == stages);

    // Deterministic output and closure under re-normalization.
    CHECK(normalize(e, all) == nf);
    for (const auto& b : nf) {
      const auto again = normalize(trivial_extension(b), all);
      REQUIRE(again.size() == 1);
      CHECK(again[0] == b);
      CHECK(rank_h1_corollary_check(b));
    }

    // The zero policy's outcome is among the enumerated ones.
    const auto zero_nf = normalize(e, Resolver::zero());
    REQUIRE(zero_nf.size() == 1);
    CHECK(std::find(nf.begin(), nf.end(), zero_nf[0]) != nf.end());

    // Component order never matters.
    const IteratedExtension rev =
        random_chain(seed, stages, true);
    CHECK(normalize(rev, all) == nf);
  }
}
