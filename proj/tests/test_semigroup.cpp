#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "quiverset/oracle.hpp"
#include "quiverset/semigroup.hpp"

using namespace quiverset;
using oracle::SplitMix64;

namespace {

// The numerical semigroup <2, 3> inside N, with a placeholder quiver.
AlgebraSetting numerical_23() {
  AlgebraSetting s{"num-2-3", Quiver(2, {1, 0, 0, 1}), {2, 3},
                   {AmbientVector{{2}, 2}, AmbientVector{{3}, 3}}};
  validate_setting(s);
  return s;
}

// Naive decomposition search with per-coefficient bounds; independent of the
// DFS in decompose().
std::vector<DimVector> brute_force_decompose(const AlgebraSetting& s,
                                             const std::vector<Int>& target) {
  const std::size_t k = s.generators.size(), m = target.size();
  std::vector<Int> bounds(k, 0);
  for (std::size_t g = 0; g < k; ++g) {
    Int bound = -1;
    for (std::size_t c = 0; c < m; ++c)
      if (s.generators[g].coords[c] > 0) {
        const Int b = target[c] / s.generators[g].coords[c];
        if (bound < 0 || b < bound) bound = b;
      }
    bounds[g] = bound;
  }
  std::vector<DimVector> out;
  DimVector coeff(k, 0);
  while (true) {
    std::vector<Int> sum(m, 0);
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t c = 0; c < m; ++c) sum[c] += coeff[g] * s.generators[g].coords[c];
    if (sum == target) out.push_back(coeff);
    std::size_t pos = k;
    while (pos > 0) {
      if (++coeff[pos - 1] <= bounds[pos - 1]) break;
      coeff[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("decomposition in the numerical semigroup <2, 3>") {
  const AlgebraSetting s = numerical_23();

  // Brute-force derivation for target 7: only (2, 1) works.
  const std::vector<DimVector> expected = brute_force_decompose(s, {7});
  REQUIRE(expected == std::vector<DimVector>{{2, 1}});
  CHECK(decompose(s, {7}) == expected);

  CHECK(decompose(s, {1}).empty());

  for (Int t = 1; t <= 30; ++t) CHECK(decompose(s, {t}) == brute_force_decompose(s, {t}));

  CHECK_THROWS_AS(decompose(s, {0}), std::invalid_argument);
  CHECK_THROWS_AS(decompose(s, {1, 1}), std::invalid_argument);
}

TEST_CASE("decomposition of PSL2(Z) types") {
  const AlgebraSetting s = builtin_psl2z();
  const std::vector<Int> target{1, 1, 1, 1, 0};
  const std::vector<DimVector> decs = decompose(s, target);
  CHECK(decs == brute_force_decompose(s, target));
  CHECK(decs == std::vector<DimVector>{{0, 1, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 0}});

  // Every decomposition reproduces the target and has the right augmentation.
  for (const DimVector& a : decs) {
    std::vector<Int> sum(5, 0);
    Int total = 0;
    for (std::size_t g = 0; g < 6; ++g) {
      for (std::size_t c = 0; c < 5; ++c) sum[c] += a[g] * s.generators[g].coords[c];
      total += a[g] * s.alpha[g];
    }
    CHECK(sum == target);
    CHECK(total == 2);
  }
}

TEST_CASE("is_simp on PSL2(Z)") {
  const AlgebraSetting s = builtin_psl2z();

  const IsSimpResult yes = is_simp(s, {1, 1, 1, 1, 0});
  CHECK(yes.simp);
  REQUIRE(yes.witness.has_value());
  CHECK(*yes.witness == DimVector{0, 1, 0, 1, 0, 0});

  const IsSimpResult no = is_simp(s, {1, 1, 2, 0, 0});
  CHECK_FALSE(no.simp);
  CHECK_FALSE(no.witness.has_value());
}

TEST_CASE("is_simp on the curve setting") {
  const AlgebraSetting s = builtin_curve();
  CHECK(is_simp(s, {1}).simp);
  CHECK_FALSE(is_simp(s, {2}).simp);
  CHECK_FALSE(is_simp(s, {5}).simp);
}

TEST_CASE("westbury check") {
  CHECK(westbury_check(1, 1, 1, 1, 0));
  CHECK_FALSE(westbury_check(1, 1, 2, 0, 0));
  CHECK(westbury_check(2, 1, 1, 1, 1));
  CHECK_THROWS_AS(westbury_check(1, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(westbury_check(-1, 2, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("westbury agrees with is_simp on full-support balanced types") {
  const AlgebraSetting s = builtin_psl2z();
  int cases = 0;
  for (Int n = 3; n <= 6; ++n)
    for (Int a1 = 1; a1 < n; ++a1)
      for (Int b1 = 1; b1 <= n - 2; ++b1)
        for (Int b2 = 1; b2 <= n - b1 - 1; ++b2) {
          const Int a2 = n - a1, b3 = n - b1 - b2;
          CHECK(is_simp(s, {a1, a2, b1, b2, b3}).simp ==
                westbury_check(a1, a2, b1, b2, b3));
          ++cases;
        }
  CHECK(cases == 85);
}

TEST_CASE("curve and path algebra of the loop quiver coincide") {
  const AlgebraSetting curve = builtin_curve();
  const AlgebraSetting path = builtin_path_algebra(Quiver::single_vertex(1));
  CHECK(curve.quiver == path.quiver);
  CHECK(curve.alpha == path.alpha);
  CHECK(curve.generators == path.generators);
}

TEST_CASE("hereditary order settings") {
  const AlgebraSetting s = builtin_hereditary_order({{2, 1}});
  CHECK(s.quiver == Quiver::oriented_cycle(2));
  CHECK(s.alpha == DimVector{2, 1});

  const AlgebraSetting two_points = builtin_hereditary_order({{2, 1}, {1, 1, 1}});
  REQUIRE(two_points.quiver.vertex_count() == 5);
  CHECK(two_points.alpha == DimVector{2, 1, 1, 1, 1});
  // Two disjoint cycles: 0 -> 1 -> 0 and 2 -> 3 -> 4 -> 2.
  CHECK(two_points.quiver.arrows(0, 1) == 1);
  CHECK(two_points.quiver.arrows(1, 0) == 1);
  CHECK(two_points.quiver.arrows(2, 3) == 1);
  CHECK(two_points.quiver.arrows(4, 2) == 1);
  CHECK(two_points.quiver.arrows(1, 2) == 0);
  CHECK(two_points.quiver.total_arrows() == 5);

  CHECK_THROWS_AS(builtin_hereditary_order({}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_hereditary_order({{3}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_hereditary_order({{2, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_hereditary_order({{2, 0}}), std::invalid_argument);
}

TEST_CASE("the PSL2(Z) hexagon") {
  const AlgebraSetting s = builtin_psl2z();
  REQUIRE(s.quiver.vertex_count() == 6);
  CHECK(s.alpha == DimVector(6, 1));
  // v12 -> v21 exists (indices 1 and 3), v12 -> v22 does not (indices 1 and 4).
  CHECK(s.quiver.arrows(1, 3) == 1);
  CHECK(s.quiver.arrows(1, 4) == 0);
  CHECK(s.quiver.total_arrows() == 12);
  for (std::size_t v = 0; v < 6; ++v) CHECK(s.quiver.loops(v) == 0);
  CHECK(s.generators[0].coords == std::vector<Int>{1, 0, 1, 0, 0});
  CHECK(s.generators[5].coords == std::vector<Int>{0, 1, 0, 0, 1});
}

TEST_CASE("path-algebra settings mirror the classifier") {
  SplitMix64 rng(43);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t k = 1 + rng.next() % 4;
    std::vector<Int> a(k * k);
    for (Int& c : a) c = static_cast<Int>(rng.next() % 3);
    const Quiver q(k, std::move(a));
    const AlgebraSetting s = builtin_path_algebra(q);
    CHECK(s.quiver == q);

    DimVector e(k);
    for (Int& v : e) v = static_cast<Int>(rng.next() % 3);
    if (detail::is_zero(e)) e[0] = 1;
    const IsSimpResult r = is_simp(s, e);
    CHECK(r.simp == is_simple_dimvec(q, e));
    if (r.simp) CHECK(*r.witness == e);  // decomposition over vertex generators is unique
  }
}

TEST_CASE("decompose matches brute force on random settings") {
  SplitMix64 rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t k = 1 + rng.next() % 3, m = 1 + rng.next() % 3;
    std::vector<AmbientVector> gens;
    DimVector alpha;
    for (std::size_t g = 0; g < k; ++g) {
      AmbientVector v{std::vector<Int>(m, 0), 0};
      bool nonzero = false;
      for (Int& c : v.coords) {
        c = static_cast<Int>(rng.next() % 3);
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) v.coords[rng.next() % m] = 1;
      for (Int c : v.coords) v.total_dim += c;
      gens.push_back(v);
      alpha.push_back(v.total_dim);
    }
    AlgebraSetting s{"random", Quiver(k, std::vector<Int>(k * k, 0)), alpha, gens};
    validate_setting(s);

    std::vector<Int> target(m);
    bool nonzero = false;
    for (Int& c : target) {
      c = static_cast<Int>(rng.next() % 7);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) target[0] = 1;

    const std::vector<DimVector> mine = decompose(s, target);
    CHECK(mine == brute_force_decompose(s, target));
    for (std::size_t i = 1; i < mine.size(); ++i) CHECK(mine[i - 1] < mine[i]);
  }
}

TEST_CASE("setting validation") {
  AlgebraSetting bad{"bad", Quiver::single_vertex(1), {1, 1}, {AmbientVector{{1}, 1}}};
  CHECK_THROWS_AS(validate_setting(bad), std::invalid_argument);

  AlgebraSetting mismatch{"bad", Quiver::single_vertex(1), {2}, {AmbientVector{{1}, 1}}};
  CHECK_THROWS_AS(validate_setting(mismatch), std::invalid_argument);

  AlgebraSetting zero_gen{"bad", Quiver::single_vertex(1), {1}, {AmbientVector{{0}, 1}}};
  CHECK_THROWS_AS(validate_setting(zero_gen), std::invalid_argument);
}

TEST_CASE("block descriptor of the curve setting") {
  const BlockDescriptor d = describe_b(builtin_curve(), 2);
  REQUIRE(d.k == 1);
  CHECK(d.at(0, 0).rows == 1);
  CHECK(d.at(0, 0).cols == 1);
  CHECK(d.at(0, 0).reachable);
  CHECK(d.at(0, 0).path_counts == std::vector<Int>{1, 1, 1});
}

TEST_CASE("block descriptor of the hereditary two-cycle") {
  const BlockDescriptor d = describe_b(builtin_hereditary_order({{2, 1}}), 2);
  REQUIRE(d.k == 2);
  CHECK(d.at(0, 1).rows == 2);
  CHECK(d.at(0, 1).cols == 1);
  CHECK(d.at(0, 1).path_counts == std::vector<Int>{0, 1, 0});
  CHECK(d.at(0, 0).path_counts == std::vector<Int>{1, 0, 1});
  CHECK(d.at(0, 1).reachable);
}

TEST_CASE("path counts match powers of the arrow matrix") {
  SplitMix64 rng(61);
  for (int iter = 0; iter < 10; ++iter) {
    const std::size_t k = 1 + rng.next() % 3;
    std::vector<Int> a(k * k);
    for (Int& c : a) c = static_cast<Int>(rng.next() % 3);
    const AlgebraSetting s = builtin_path_algebra(Quiver(k, std::move(a)));
    const Int maxlen = 4;
    const BlockDescriptor d = describe_b(s, maxlen);

    // Independent matrix power computation.
    std::vector<Int> power(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) power[i * k + i] = 1;
    for (Int l = 0; l <= maxlen; ++l) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          CHECK(d.at(i, j).path_counts[static_cast<std::size_t>(l)] == power[i * k + j]);
      std::vector<Int> next(k * k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < k; ++v)
          for (std::size_t j = 0; j < k; ++j)
            next[i * k + j] += power[i * k + v] * s.quiver.arrows(v, j);
      power = next;
    }
  }
}
