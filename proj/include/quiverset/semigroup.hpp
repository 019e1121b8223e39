#pragma once

// Component semigroups presented by finitely many generators inside an
// ambient N^m, together with the quiver setting (Q_A, alpha_A) attached to
// them: decomposition of ambient vectors over the generators, detection of
// simple ambient dimensions, the Westbury inequality check, the built-in
// settings (smooth curve, path algebra, hereditary order, PSL2(Z) group
// algebra), and the block-matrix descriptor of the associated algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverset/quiver.hpp"
#include "quiverset/simple.hpp"

namespace quiverset {

/// Element of the ambient semigroup N^m with its declared total dimension.
struct AmbientVector {
  std::vector<Int> coords;
  Int total_dim = 0;

  bool operator==(const AmbientVector&) const = default;
};

/// A quiver setting (Q_A, alpha_A) together with the semigroup generators
/// beta_1..beta_k it was built from. Vertex i of the quiver corresponds to
/// generator i; alpha[i] is that generator's total dimension.
struct AlgebraSetting {
  std::string name;
  Quiver quiver;
  DimVector alpha;
  std::vector<AmbientVector> generators;
};

/// Checks the structural invariants; throws std::invalid_argument.
inline void validate_setting(const AlgebraSetting& s) {
  const std::size_t k = s.quiver.vertex_count();
  if (s.alpha.size() != k)
    throw std::invalid_argument("setting '" + s.name + "': alpha has " +
                                std::to_string(s.alpha.size()) + " entries, quiver has " +
                                std::to_string(k) + " vertices");
  if (s.generators.size() != k)
    throw std::invalid_argument("setting '" + s.name + "': " +
                                std::to_string(s.generators.size()) + " generators for " +
                                std::to_string(k) + " vertices");
  for (Int a : s.alpha)
    if (a < 1 || a > kMaxEntry)
      throw std::invalid_argument("setting '" + s.name + "': alpha entries must be >= 1");
  const std::size_t m = s.generators.front().coords.size();
  if (m == 0) throw std::invalid_argument("setting '" + s.name + "': empty ambient space");
  for (std::size_t i = 0; i < k; ++i) {
    const AmbientVector& g = s.generators[i];
    if (g.coords.size() != m)
      throw std::invalid_argument("setting '" + s.name + "': generators live in different ambients");
    bool nonzero = false;
    for (Int c : g.coords) {
      detail::check_entry_range(c, "generator coordinate");
      nonzero = nonzero || c != 0;
    }
    if (!nonzero)
      throw std::invalid_argument("setting '" + s.name + "': generator " + std::to_string(i + 1) +
                                  " is the zero vector");
    if (g.total_dim != s.alpha[i])
      throw std::invalid_argument("setting '" + s.name + "': generator " + std::to_string(i + 1) +
                                  " declares total dimension " + std::to_string(g.total_dim) +
                                  " but alpha[" + std::to_string(i + 1) + "] = " +
                                  std::to_string(s.alpha[i]));
  }
}

namespace detail {

inline void check_target(const AlgebraSetting& s, const std::vector<Int>& target) {
  const std::size_t m = s.generators.front().coords.size();
  if (target.size() != m)
    throw std::invalid_argument("target has " + std::to_string(target.size()) +
                                " coordinates, the ambient space of '" + s.name + "' has " +
                                std::to_string(m));
  bool nonzero = false;
  for (Int c : target) {
    check_entry_range(c, "target coordinate");
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) throw std::invalid_argument("target must be nonzero");
}

}  // namespace detail

/// All coefficient vectors (a_1..a_k) in N^k with sum a_i * beta_i = target,
/// in ascending lexicographic order. An empty result means the target is not
/// in the semigroup generated by the beta_i.
inline std::vector<DimVector> decompose(const AlgebraSetting& s, const std::vector<Int>& target) {
  validate_setting(s);
  detail::check_target(s, target);
  const std::size_t k = s.generators.size();
  const std::size_t m = target.size();

  std::vector<DimVector> out;
  DimVector coeff(k, 0);
  std::vector<Int> remaining = target;

  // Depth-first over a_1, a_2, ... ascending; each generator's coefficient is
  // capped by the tightest remaining/coordinate ratio, so the recursion is
  // finite and emits solutions in lexicographic order.
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == k) {
      for (Int r : remaining)
        if (r != 0) return;
      out.push_back(coeff);
      return;
    }
    const std::vector<Int>& beta = s.generators[g].coords;
    Int bound = -1;
    for (std::size_t c = 0; c < m; ++c)
      if (beta[c] > 0) {
        const Int b = remaining[c] / beta[c];
        if (bound < 0 || b < bound) bound = b;
      }
    for (Int a = 0;; ++a) {
      coeff[g] = a;
      self(self, g + 1);
      if (a == bound) break;
      for (std::size_t c = 0; c < m; ++c) remaining[c] -= beta[c];
    }
    for (std::size_t c = 0; c < m; ++c) remaining[c] += beta[c] * bound;
    coeff[g] = 0;
  };
  rec(rec, 0);
  return out;
}

struct IsSimpResult {
  bool simp = false;
  std::optional<DimVector> witness;  // lexicographically first simple decomposition
};

/// True iff some decomposition of the target over the generators is a simple
/// dimension vector of the setting's quiver.
inline IsSimpResult is_simp(const AlgebraSetting& s, const std::vector<Int>& target) {
  for (const DimVector& eps : decompose(s, target))
    if (is_simple_dimvec(s.quiver, eps)) return {true, eps};
  return {false, std::nullopt};
}

/// The inequality criterion for bipartite (a_1, a_2; b_1, b_2, b_3) types:
/// true iff b_j <= a_i for all i, j. Requires a_1 + a_2 = b_1 + b_2 + b_3.
inline bool westbury_check(Int a1, Int a2, Int b1, Int b2, Int b3) {
  for (Int v : {a1, a2, b1, b2, b3}) detail::check_entry_range(v, "entry");
  if (detail::checked_add(a1, a2) != detail::checked_add(detail::checked_add(b1, b2), b3))
    throw std::invalid_argument("unbalanced type: a1+a2 must equal b1+b2+b3");
  const Int amin = a1 < a2 ? a1 : a2;
  return b1 <= amin && b2 <= amin && b3 <= amin;
}

// ---------------------------------------------------------------------------
// Built-in settings
// ---------------------------------------------------------------------------

/// Coordinate ring of a smooth affine curve: one vertex with one loop,
/// alpha = (1), semigroup N generated by 1.
inline AlgebraSetting builtin_curve() {
  AlgebraSetting s{"curve", Quiver::single_vertex(1), {1}, {AmbientVector{{1}, 1}}};
  validate_setting(s);
  return s;
}

/// Path algebra of q: the setting's quiver is q itself, alpha is all ones and
/// the generators are the vertex simples delta_i in N^k.
inline AlgebraSetting builtin_path_algebra(const Quiver& q) {
  const std::size_t k = q.vertex_count();
  AlgebraSetting s{"path-algebra", q, DimVector(k, 1), {}};
  s.generators.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    AmbientVector g{std::vector<Int>(k, 0), 1};
    g.coords[i] = 1;
    s.generators.push_back(std::move(g));
  }
  validate_setting(s);
  return s;
}

/// Hereditary order over a curve with the given ramification data: one
/// partition of the common total n per ramified point. The quiver is the
/// disjoint union of oriented cycles, one vertex per partition part, and
/// alpha concatenates the partitions. Every partition needs at least two
/// parts and all partitions must sum to the same n.
inline AlgebraSetting builtin_hereditary_order(const std::vector<std::vector<Int>>& partitions) {
  if (partitions.empty()) throw std::invalid_argument("need at least one partition");
  Int n = -1;
  std::size_t total_vertices = 0;
  for (const std::vector<Int>& part : partitions) {
    if (part.size() < 2)
      throw std::invalid_argument("each partition needs at least two parts");
    Int sum = 0;
    for (Int p : part) {
      if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
      sum = detail::checked_add(sum, p);
    }
    if (n < 0) n = sum;
    if (sum != n)
      throw std::invalid_argument("all partitions must sum to the same total, got " +
                                  std::to_string(sum) + " and " + std::to_string(n));
    total_vertices += part.size();
  }

  std::vector<Int> arrows(total_vertices * total_vertices, 0);
  DimVector alpha;
  alpha.reserve(total_vertices);
  std::size_t base = 0;
  for (const std::vector<Int>& part : partitions) {
    const std::size_t kc = part.size();
    for (std::size_t j = 0; j < kc; ++j) {
      arrows[(base + j) * total_vertices + (base + (j + 1) % kc)] = 1;
      alpha.push_back(part[j]);
    }
    base += kc;
  }

  AlgebraSetting s{"hereditary-order", Quiver(total_vertices, std::move(arrows)), alpha, {}};
  s.generators.reserve(total_vertices);
  for (std::size_t i = 0; i < total_vertices; ++i) {
    AmbientVector g{std::vector<Int>(total_vertices, 0), alpha[i]};
    g.coords[i] = 1;
    s.generators.push_back(std::move(g));
  }
  validate_setting(s);
  return s;
}

/// Group algebra of PSL2(Z) = Z/2 * Z/3: six one-dimensional simples v_ij
/// (i = 1..2 eigenspace of the order-2 generator, j = 1..3 of the order-3
/// generator), with one arrow each way between v_1j and v_2l exactly when
/// j != l. Generators live in N^5 as (a_1, a_2; b_1, b_2, b_3).
inline AlgebraSetting builtin_psl2z() {
  const std::size_t k = 6;  // order: v11 v12 v13 v21 v22 v23
  std::vector<Int> arrows(k * k, 0);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = 0; l < 3; ++l)
      if (j != l) {
        arrows[j * k + (3 + l)] = 1;
        arrows[(3 + l) * k + j] = 1;
      }
  AlgebraSetting s{"psl2z", Quiver(k, std::move(arrows)), DimVector(k, 1), {}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      AmbientVector g{std::vector<Int>(5, 0), 1};
      g.coords[i] = 1;
      g.coords[2 + j] = 1;
      s.generators.push_back(std::move(g));
    }
  validate_setting(s);
  return s;
}

// ---------------------------------------------------------------------------
// Block descriptor of the associated algebra B
// ---------------------------------------------------------------------------

/// One block of the associated block-matrix algebra: an n_i x n_j matrix
/// space over the span of the oriented paths v_i -> v_j.
struct BlockInfo {
  Int rows = 0;
  Int cols = 0;
  bool reachable = false;          // some oriented path i -> j (length 0 counts when i = j)
  std::vector<Int> path_counts;    // paths of length 0..max_path_len
};

struct BlockDescriptor {
  std::size_t k = 0;
  std::vector<BlockInfo> blocks;  // row-major k x k

  const BlockInfo& at(std::size_t i, std::size_t j) const { return blocks[i * k + j]; }
};

/// Block sizes, reachability, and per-length oriented path counts (entries of
/// the powers of the arrow-count matrix) for the setting's quiver.
inline BlockDescriptor describe_b(const AlgebraSetting& s, Int max_path_len) {
  validate_setting(s);
  if (max_path_len < 0) throw std::invalid_argument("max_path_len must be >= 0");
  const std::size_t k = s.quiver.vertex_count();

  // Transitive closure for the reachability flags.
  std::vector<char> reach(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) reach[i * k + j] = i == j || s.quiver.arrows(i, j) > 0;
  for (std::size_t via = 0; via < k; ++via)
    for (std::size_t i = 0; i < k; ++i)
      if (reach[i * k + via])
        for (std::size_t j = 0; j < k; ++j)
          if (reach[via * k + j]) reach[i * k + j] = 1;

  BlockDescriptor d;
  d.k = k;
  d.blocks.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      BlockInfo& b = d.blocks[i * k + j];
      b.rows = s.alpha[i];
      b.cols = s.alpha[j];
      b.reachable = reach[i * k + j] != 0;
      b.path_counts.assign(static_cast<std::size_t>(max_path_len) + 1, 0);
      b.path_counts[0] = i == j ? 1 : 0;
    }

  // power[l] = (arrow matrix)^l, entry (i, j) = number of length-l paths.
  std::vector<Int> power(k * k, 0), next(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) power[i * k + i] = 1;
  for (Int l = 1; l <= max_path_len; ++l) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t via = 0; via < k; ++via) {
        const Int p = power[i * k + via];
        if (p == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
          next[i * k + j] = detail::checked_add(
              next[i * k + j], detail::checked_mul(p, s.quiver.arrows(via, j)));
      }
    power.swap(next);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        d.blocks[i * k + j].path_counts[static_cast<std::size_t>(l)] = power[i * k + j];
  }
  return d;
}

}  // namespace quiverset
