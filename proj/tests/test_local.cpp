#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "quiverset/local.hpp"
#include "quiverset/oracle.hpp"

using namespace quiverset;
using oracle::SplitMix64;

TEST_CASE("self-extensions of the curve simple") {
  const Quiver loop = Quiver::single_vertex(1);
  CHECK(ext_between_simples(loop, {1}, {1}, true) == 1);
}

TEST_CASE("ext between distinct one-dimensional simples of the two-loop quiver") {
  const Quiver two_loops = Quiver::single_vertex(2);
  CHECK(ext_between_simples(two_loops, {1}, {1}, false) == 1);

  // Derivation by the representation oracle: two random non-isomorphic
  // one-dimensional representations have hom 0 and ext 1.
  const oracle::PrimeField F(oracle::kDefaultPrime);
  const auto M = oracle::random_rep(two_loops, {1}, 101, F);
  const auto N = oracle::random_rep(two_loops, {1}, 202, F);
  REQUIRE(oracle::hom_dim(M, N) == 0);
  CHECK(oracle::ext_dim(M, N) == 1);
}

TEST_CASE("ext in the PSL2(Z) hexagon") {
  std::vector<Int> hex(36, 0);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = 0; l < 3; ++l)
      if (j != l) {
        hex[j * 6 + 3 + l] = 1;
        hex[(3 + l) * 6 + j] = 1;
      }
  const Quiver q(6, hex);
  DimVector v11(6, 0), v21(6, 0), v23(6, 0);
  v11[0] = 1;
  v21[3] = 1;
  v23[5] = 1;
  CHECK(ext_between_simples(q, v11, v23, false) == 1);
  CHECK(ext_between_simples(q, v11, v21, false) == 0);
}

TEST_CASE("ext argument validation and the inconsistency guard") {
  const Quiver loop = Quiver::single_vertex(1);
  CHECK_THROWS_AS(ext_between_simples(loop, {1}, {2}, true), std::invalid_argument);
  CHECK_THROWS_AS(ext_between_simples(loop, {0}, {1}, false), std::invalid_argument);

  // (1,1) over two loose vertices is not simple; chi = 2 forces ext = -2.
  const Quiver loose(2, {0, 0, 0, 0});
  CHECK_THROWS_AS(ext_between_simples(loose, {1, 1}, {1, 1}, false), InconsistencyError);
}

TEST_CASE("local quiver of the curve type") {
  const Quiver loop = Quiver::single_vertex(1);
  const LocalQuiverSetting l = local_quiver(loop, SemisimpleType{{{{1}, 2}}});
  CHECK(l.quiver.vertex_count() == 1);
  CHECK(l.quiver.loops(0) == 1);
  CHECK(l.dimvec == DimVector{2});
}

TEST_CASE("local quiver of two distinct simples of the two-loop quiver") {
  const Quiver two_loops = Quiver::single_vertex(2);
  const LocalQuiverSetting l =
      local_quiver(two_loops, SemisimpleType{{{{1}, 1}, {{1}, 1}}});
  REQUIRE(l.quiver.vertex_count() == 2);
  CHECK(l.quiver.loops(0) == 2);
  CHECK(l.quiver.loops(1) == 2);
  CHECK(l.quiver.arrows(0, 1) == 1);
  CHECK(l.quiver.arrows(1, 0) == 1);
  CHECK(l.dimvec == DimVector{1, 1});

  // The oracle sees the same picture on random representations.
  const oracle::PrimeField F(oracle::kDefaultPrime);
  const auto M = oracle::random_rep(two_loops, {1}, 7, F);
  const auto N = oracle::random_rep(two_loops, {1}, 8, F);
  REQUIRE(oracle::hom_dim(M, N) == 0);
  CHECK(oracle::ext_dim(M, N) == 1);
  CHECK(oracle::ext_dim(M, M) == 2);
}

TEST_CASE("local quiver collapses an oriented cycle to a loop") {
  const Quiver cycle = Quiver::oriented_cycle(3);
  const LocalQuiverSetting l = local_quiver(cycle, SemisimpleType{{{{1, 1, 1}, 1}}});
  CHECK(l.quiver.vertex_count() == 1);
  CHECK(l.quiver.loops(0) == 1);  // 1 - chi(eps, eps) with chi = 0
  CHECK(l.dimvec == DimVector{1});
}

TEST_CASE("local quiver validates its type") {
  const Quiver cycle = Quiver::oriented_cycle(3);
  CHECK_THROWS_AS(local_quiver(cycle, SemisimpleType{}), std::invalid_argument);
  CHECK_THROWS_AS(local_quiver(cycle, SemisimpleType{{{{1, 1, 1}, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_quiver(cycle, SemisimpleType{{{{2, 2, 2}, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("total dimension of semisimple modules") {
  // Path algebra of the 2-cycle: all generator dimensions are 1.
  const AlgebraSetting path2 = builtin_path_algebra(Quiver::oriented_cycle(2));
  CHECK(total_dimension(path2, SemisimpleType{{{{1, 1}, 1}}}) == 2);

  const AlgebraSetting hered = builtin_hereditary_order({{2, 1}});
  CHECK(total_dimension(hered, SemisimpleType{{{{1, 1}, 1}}}) == 3);

  const AlgebraSetting curve = builtin_curve();
  CHECK(total_dimension(curve, SemisimpleType{{{{1}, 5}}}) == 5);
}

TEST_CASE("total dimension is invariant under splitting multiplicities") {
  const AlgebraSetting hered = builtin_hereditary_order({{2, 1}, {1, 1, 1}});
  DimVector eps(5, 0);
  eps[0] = 1;
  eps[1] = 1;  // all-ones on the first cycle
  const SemisimpleType merged{{{eps, 5}}};
  const SemisimpleType split{{{eps, 2}, {eps, 3}}};
  CHECK(total_dimension(hered, merged) == total_dimension(hered, split));
}

TEST_CASE("local quiver construction is permutation equivariant and satisfies the loop formula") {
  SplitMix64 rng(71);
  const Quiver q = builtin_psl2z().quiver;
  const std::vector<DimVector> simples = enumerate_simple_dimvecs(q, 3);
  REQUIRE(simples.size() >= 3);
  for (int iter = 0; iter < 25; ++iter) {
    SemisimpleType t;
    const std::size_t l = 1 + rng.next() % 4;
    for (std::size_t i = 0; i < l; ++i) {
      // A dimension vector may repeat only if distinct simples carrying it
      // exist, i.e. the simple has self-extensions.
      DimVector eps;
      for (int tries = 0; tries < 64; ++tries) {
        eps = simples[rng.next() % simples.size()];
        const bool used = std::any_of(t.components.begin(), t.components.end(),
                                      [&](const auto& c) { return c.epsilon == eps; });
        if (!used || 1 - euler_form(q, eps, eps) >= 1) break;
        eps.clear();
      }
      if (eps.empty()) continue;
      t.components.push_back({eps, static_cast<Int>(1 + rng.next() % 4)});
    }
    if (t.components.empty()) continue;
    const std::size_t lt = t.components.size();
    const LocalQuiverSetting lq = local_quiver(q, t);

    for (std::size_t i = 0; i < lt; ++i)
      CHECK(lq.quiver.loops(i) ==
            1 - euler_form(q, t.components[i].epsilon, t.components[i].epsilon));

    SemisimpleType rev = t;
    std::reverse(rev.components.begin(), rev.components.end());
    const LocalQuiverSetting lr = local_quiver(q, rev);
    for (std::size_t i = 0; i < lt; ++i) {
      CHECK(lr.dimvec[i] == lq.dimvec[lt - 1 - i]);
      for (std::size_t j = 0; j < lt; ++j)
        CHECK(lr.quiver.arrows(i, j) == lq.quiver.arrows(lt - 1 - i, lt - 1 - j));
    }
  }
}

TEST_CASE("repeating a rigid simple is rejected as inconsistent") {
  // The loopless vertex simple delta_1 of the hexagon admits no
  // self-extensions, so two distinct copies of it cannot exist.
  const Quiver q = builtin_psl2z().quiver;
  DimVector d1(6, 0);
  d1[0] = 1;
  CHECK_THROWS_AS(local_quiver(q, SemisimpleType{{{d1, 1}, {d1, 1}}}), InconsistencyError);
}
